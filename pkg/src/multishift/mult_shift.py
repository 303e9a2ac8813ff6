"""Patterns of a multiplicative subshift and their fiber decomposition.

A point of the multiplicative subshift with base ``l`` over a base space
is a sequence whose restriction to every geometric chain
``i, i*l, i*l**2, ...`` is a point of the base space.  Chains with
base-free representatives partition the positive integers, so a finite
pattern is admissible exactly when each per-chain constraint set is
extendable in the base space.  That fiber independence is what makes all
admissibility questions here exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from . import shift_core
from .errors import InadmissiblePattern, OutputGuardExceeded
from .lambda_arith import decompose
from .shift_core import ShiftSpec, alphabet_of

__all__ = [
    "ENUMERATION_GUARD",
    "FiberConstraint",
    "MultiplierConstraintSet",
    "Pattern",
    "assemble",
    "chain_length",
    "chain_positions",
    "count_blocks",
    "enumerate_blocks",
    "fiber",
    "fiber_constraints",
    "format_pattern",
    "inadmissible_classes",
    "is_admissible",
    "multiplier_constraints",
    "parse_pattern",
    "pi_positions",
]

ENUMERATION_GUARD = 10_000_000


def chain_length(rep: int, length: int, l: int) -> int:
    """Number of chain positions rep * l**j (j >= 0) that are <= length."""
    t = 0
    pos = rep
    while pos <= length:
        t += 1
        pos *= l
    return t


def chain_positions(rep: int, length: int, l: int) -> list[int]:
    out = []
    pos = rep
    while pos <= length:
        out.append(pos)
        pos *= l
    return out


def class_reps(length: int, l: int) -> list[int]:
    """Base-free chain representatives up to length."""
    return [i for i in range(1, length + 1) if i % l]


@dataclass(frozen=True)
class Pattern:
    """A finite partial configuration of the multiplicative subshift.

    ``entries`` maps positions (>= 1) to symbols; a block is the special
    case with support [1, n].  The pattern carries its chain base and
    base-space spec so admissibility is a total function of the pattern.
    The pattern length is its largest constrained position.
    """

    entries: tuple[tuple[int, int], ...]
    base: int
    omega: ShiftSpec

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"chain base must be >= 2, got {self.base}")
        if not self.entries:
            raise ValueError("pattern must constrain at least one position")
        seen = set()
        m = alphabet_of(self.omega)
        for pos, sym in self.entries:
            if pos < 1:
                raise ValueError(f"positions start at 1, got {pos}")
            if pos in seen:
                raise ValueError(f"duplicate position {pos}")
            if not 0 <= sym < m:
                raise ValueError(f"symbol {sym} out of range for alphabet {m}")
            seen.add(pos)
        if self.entries != tuple(sorted(self.entries)):
            raise ValueError("entries must be position-sorted; use Pattern.make")

    @classmethod
    def make(cls, entries: Mapping[int, int] | Iterable[tuple[int, int]], base: int, omega: ShiftSpec) -> "Pattern":
        items = entries.items() if isinstance(entries, Mapping) else entries
        return cls(tuple(sorted(items)), base, omega)

    @classmethod
    def block(cls, word: str, base: int, omega: ShiftSpec) -> "Pattern":
        return cls(tuple((i + 1, int(c)) for i, c in enumerate(word)), base, omega)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def length(self) -> int:
        return self.entries[-1][0]

    @property
    def is_block(self) -> bool:
        return self.support == tuple(range(1, self.length + 1))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def block_word(self) -> str:
        if not self.is_block:
            raise ValueError("pattern support is not an initial segment")
        return "".join(str(sym) for _, sym in self.entries)

    def fibers(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Per-chain constraints: representative -> ((depth, symbol), ...)."""
        groups: dict[int, list[tuple[int, int]]] = {}
        for pos, sym in self.entries:
            d = decompose(pos, self.base)
            groups.setdefault(d.alpha, []).append((d.k + 1, sym))
        return {rep: tuple(sorted(cons)) for rep, cons in sorted(groups.items())}


@dataclass(frozen=True)
class FiberConstraint:
    """Constraints of one pattern along a single chain, in base-space coordinates."""

    representative: int
    base: int
    chain_constraints: tuple[tuple[int, int], ...]  # (depth, symbol), depths distinct


def fiber_constraints(u: Pattern) -> list[FiberConstraint]:
    """The pattern's constraints routed to base-space coordinates, chain by chain."""
    return [FiberConstraint(rep, u.base, cons) for rep, cons in u.fibers().items()]


def fiber(u: Pattern, rep: int) -> tuple[tuple[int, int], ...]:
    """Partial base-space word read along the chain of ``rep``.

    Depth j corresponds to position rep * base**(j-1); every chain
    position up to the pattern length counts, whether or not it is
    constrained, so the result may have gaps.
    """
    if rep % u.base == 0:
        raise ValueError(f"{rep} is not a chain representative for base {u.base}")
    entries = u.as_dict()
    out = []
    for j, pos in enumerate(chain_positions(rep, u.length, u.base), start=1):
        if pos in entries:
            out.append((j, entries[pos]))
    return tuple(out)


def pi_positions(q: int, support: Iterable[int]) -> frozenset[int]:
    """Support of a pattern after the index-scaling map x -> x_{q i}."""
    if q < 1:
        raise ValueError("scaling factor must be >= 1")
    return frozenset(q * s for s in support)


def is_admissible(u: Pattern) -> bool:
    """Whether some point of the multiplicative subshift extends the pattern."""
    return not inadmissible_classes(u)


def inadmissible_classes(u: Pattern) -> list[int]:
    """Chain representatives whose fiber constraints are unsatisfiable."""
    bad = []
    for rep, cons in u.fibers().items():
        if not shift_core.partial_extendable(u.omega, cons):
            bad.append(rep)
    return bad


def count_blocks(omega: ShiftSpec, l: int, n: int) -> int:
    """Number of admissible blocks on [1, n]: a product over chain fibers."""
    if n < 1:
        raise ValueError("block length must be >= 1")
    total = 1
    for rep in class_reps(n, l):
        total *= len(shift_core.blocks(omega, chain_length(rep, n, l)))
        if total == 0:
            return 0
    return total


def enumerate_blocks(omega: ShiftSpec, l: int, n: int) -> set[str]:
    """All admissible blocks on [1, n] (guarded against huge outputs)."""
    count = count_blocks(omega, l, n)
    if count > ENUMERATION_GUARD:
        raise OutputGuardExceeded(f"{count} blocks exceed the enumeration cap {ENUMERATION_GUARD}")
    reps = class_reps(n, l)
    per_rep = []
    for rep in reps:
        words = sorted(shift_core.blocks(omega, chain_length(rep, n, l)))
        positions = chain_positions(rep, n, l)
        per_rep.append((positions, words))
    blocks_out = [["?"] * n]
    for positions, words in per_rep:
        nxt = []
        for partial in blocks_out:
            for w in words:
                chars = partial[:]
                for pos, ch in zip(positions, w):
                    chars[pos - 1] = ch
                nxt.append(chars)
        blocks_out = nxt
    return {"".join(chars) for chars in blocks_out}


def assemble(fibers: Mapping[int, str], l: int, length: int, omega: Optional[ShiftSpec] = None) -> str:
    """Build the block whose chain fibers are the given base-space words.

    Every base-free representative up to ``length`` needs a word covering
    its chain; the block's fiber decomposition returns the inputs back.
    """
    if length < 1:
        raise ValueError("block length must be >= 1")
    chars = ["?"] * length
    for rep in class_reps(length, l):
        if rep not in fibers:
            raise KeyError(f"missing fiber for chain representative {rep}")
        word = fibers[rep]
        positions = chain_positions(rep, length, l)
        if len(word) < len(positions):
            raise ValueError(f"fiber for {rep} has length {len(word)}, chain needs {len(positions)}")
        for pos, ch in zip(positions, word):
            chars[pos - 1] = ch
    return "".join(chars)


@dataclass(frozen=True)
class MultiplierConstraintSet:
    """Constraints of "u at its support, v at multiplier-scaled support".

    Groups are per chain representative, in base-space (depth, symbol)
    coordinates; every constrained position lands in exactly one group.
    ``conflicts`` lists positions pinned to two different symbols, which
    makes the set unsatisfiable.
    """

    multiplier: int
    groups: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    conflicts: tuple[tuple[int, int, int], ...]

    @property
    def satisfiable_form(self) -> bool:
        return not self.conflicts

    def group_map(self) -> dict[int, tuple[tuple[int, int], ...]]:
        return dict(self.groups)


def multiplier_constraints(u: Pattern, v: Pattern, multiplier: int) -> MultiplierConstraintSet:
    """Merge u's constraints with v's scaled by ``multiplier`` and group per chain."""
    if multiplier < 1:
        raise ValueError("multiplier must be >= 1")
    if u.base != v.base or u.omega != v.omega:
        raise ValueError("patterns must share base and base space")
    merged: dict[int, int] = dict(u.entries)
    conflicts = []
    for pos, sym in v.entries:
        p = multiplier * pos
        old = merged.get(p)
        if old is not None and old != sym:
            conflicts.append((p, old, sym))
        merged[p] = sym
    groups: dict[int, list[tuple[int, int]]] = {}
    for pos, sym in merged.items():
        d = decompose(pos, u.base)
        groups.setdefault(d.alpha, []).append((d.k + 1, sym))
    grouped = tuple((rep, tuple(sorted(cons))) for rep, cons in sorted(groups.items()))
    return MultiplierConstraintSet(multiplier, grouped, tuple(conflicts))


def require_admissible(u: Pattern, name: str = "pattern") -> None:
    bad = inadmissible_classes(u)
    if bad:
        raise InadmissiblePattern(
            f"{name} is inadmissible: chain {bad[0]} carries constraints no base-space point satisfies",
            detail=bad[0],
        )


# ---------------------------------------------------------------------------
# literal format: "l=2;support=1,2,4;values=1,1,0" or "block:1100"


def parse_pattern(text: str, omega: ShiftSpec, base: Optional[int] = None) -> Pattern:
    """Parse the CLI/test literal format for patterns."""
    text = text.strip()
    if text.startswith("block:"):
        word = text[len("block:") :]
        if base is None:
            raise ValueError("block literals need an explicit chain base")
        return Pattern.block(word, base, omega)
    fields = {}
    for part in text.split(";"):
        if "=" not in part:
            raise ValueError(f"malformed pattern field {part!r}")
        key, val = part.split("=", 1)
        fields[key.strip()] = val.strip()
    missing = {"l", "support", "values"} - set(fields)
    if missing:
        raise ValueError(f"pattern literal missing fields: {sorted(missing)}")
    lit_base = int(fields["l"])
    if base is not None and base != lit_base:
        raise ValueError(f"literal base {lit_base} disagrees with requested base {base}")
    support = [int(x) for x in fields["support"].split(",") if x]
    values = [int(x) for x in fields["values"].split(",") if x]
    if len(support) != len(values):
        raise ValueError("support and values have different lengths")
    return Pattern.make(zip(support, values), lit_base, omega)


def format_pattern(u: Pattern) -> str:
    if u.is_block:
        return "block:" + u.block_word()
    support = ",".join(str(p) for p, _ in u.entries)
    values = ",".join(str(s) for _, s in u.entries)
    return f"l={u.base};support={support};values={values}"
