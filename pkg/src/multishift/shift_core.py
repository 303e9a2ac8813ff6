"""Base shift spaces and their mixing-hierarchy deciders.

Two kinds of one-sided shift space are supported:

* finite-type shifts given by a finite set of forbidden words, presented
  on a forward-pruned De Bruijn graph, and
* gap-set (spacing) shifts of 0/1 sequences in which the distance
  between any two ones must belong to a declared gap set.

Points are indexed by positive integers starting at 1.  Words are digit
strings (one character per symbol), so alphabets are capped at ten
symbols.  All functions are pure; derived structures are cached per spec
value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    HorizonExceeded,
    InadmissiblePattern,
    PreconditionFailed,
    SpecError,
    UndecidableProperty,
)

__all__ = [
    "DEFAULT_HORIZON",
    "DeBruijnGraph",
    "PropertyVerdict",
    "PROPERTIES",
    "SftSpec",
    "ShiftSpec",
    "SpacingSpec",
    "alphabet_of",
    "blocks",
    "build_graph",
    "connector_gaps",
    "decide",
    "graph_dot",
    "least_word",
    "mixing_gap_index",
    "partial_extendable",
    "sft",
    "simultaneous_connector",
    "spacing",
    "spec_from_dict",
    "spec_to_dict",
    "word_admissible",
]

DEFAULT_HORIZON = 100_000

PROPERTIES = ("extensible", "transitive", "totally_transitive", "weakly_mixing", "mixing")

_DIGITS = "0123456789"


def _normalize_forbidden(words: Iterable[str]) -> tuple[str, ...]:
    """Drop forbidden words that contain another forbidden word."""
    uniq = sorted(set(words), key=lambda w: (len(w), w))
    kept: list[str] = []
    for w in uniq:
        if not any(f in w for f in kept):
            kept.append(w)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SftSpec:
    """Finite-type shift over {0, ..., alphabet-1} given by forbidden words."""

    alphabet: int
    forbidden: tuple[str, ...]

    def __post_init__(self):
        if not 1 <= self.alphabet <= 10:
            raise SpecError(f"alphabet size must be in [1, 10], got {self.alphabet}")
        for w in self.forbidden:
            if not w:
                raise SpecError("forbidden words must be nonempty")
            for ch in w:
                if ch not in _DIGITS[: self.alphabet]:
                    raise SpecError(f"symbol {ch!r} out of range in forbidden word {w!r}")
        if self.forbidden != _normalize_forbidden(self.forbidden):
            raise SpecError("forbidden set is not normalized; use sft() to build specs")

    @property
    def memory(self) -> int:
        return max((len(w) for w in self.forbidden), default=0)


def sft(alphabet: int, forbidden: Iterable[str] = ()) -> SftSpec:
    """Build a finite-type spec, normalizing the forbidden set."""
    return SftSpec(alphabet, _normalize_forbidden(forbidden))


@dataclass(frozen=True)
class SpacingSpec:
    """Gap-set shift: 0/1 sequences whose pairwise one-distances avoid ``complement``.

    ``complement`` lists the banned gaps (the gap set is its complement in
    the nonnegative integers), tabulated up to ``horizon``.  For the
    ``cofinite`` class the list is the entire complement.  The declared
    class is trusted metadata: weak mixing of a gap-set shift is not
    decidable from a tabulated prefix.
    """

    declared_class: str
    complement: tuple[int, ...]
    horizon: int = DEFAULT_HORIZON

    def __post_init__(self):
        if self.declared_class not in ("cofinite", "thick", "general"):
            raise SpecError(f"unknown gap-set class {self.declared_class!r}")
        if self.complement != tuple(sorted(set(self.complement))):
            raise SpecError("complement must be sorted and duplicate-free; use spacing()")
        if any(c < 1 for c in self.complement):
            raise SpecError("gap 0 is always allowed; complement entries must be >= 1")
        if self.horizon < 1:
            raise SpecError("horizon must be positive")

    @property
    def alphabet(self) -> int:
        return 2

    def allows_gap(self, gap: int) -> bool:
        if gap < 0 or gap > self.horizon:
            raise HorizonExceeded(f"gap {gap} outside tabulated range [0, {self.horizon}]")
        return gap not in _complement_set(self)


def spacing(declared_class: str, complement: Iterable[int] = (), horizon: int = DEFAULT_HORIZON) -> SpacingSpec:
    """Build a gap-set spec, sorting the banned-gap list."""
    return SpacingSpec(declared_class, tuple(sorted(set(complement))), horizon)


ShiftSpec = Union[SftSpec, SpacingSpec]


def alphabet_of(spec: ShiftSpec) -> int:
    return spec.alphabet


def spec_to_dict(spec: ShiftSpec) -> dict:
    """Normalized JSON form of a spec (round-trips through spec_from_dict)."""
    if isinstance(spec, SftSpec):
        return {"kind": "sft", "alphabet": spec.alphabet, "forbidden": list(spec.forbidden)}
    return {
        "kind": "spacing",
        "class": spec.declared_class,
        "complement": list(spec.complement),
        "horizon": spec.horizon,
    }


def spec_from_dict(data: dict) -> ShiftSpec:
    """Parse the JSON shift-spec format; forbidden sets are normalized."""
    if not isinstance(data, dict) or "kind" not in data:
        raise SpecError("shift spec must be an object with a 'kind' field")
    kind = data["kind"]
    if kind == "sft":
        try:
            alphabet = int(data["alphabet"])
            forbidden = [str(w) for w in data.get("forbidden", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed finite-type spec: {exc}") from exc
        return sft(alphabet, forbidden)
    if kind == "spacing":
        try:
            cls = str(data["class"])
            complement = [int(c) for c in data.get("complement", [])]
            horizon = int(data.get("horizon", DEFAULT_HORIZON))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed gap-set spec: {exc}") from exc
        return spacing(cls, complement, horizon)
    raise SpecError(f"unknown spec kind {kind!r}")


@dataclass(frozen=True)
class PropertyVerdict:
    """A decided property together with the evidence used to decide it."""

    name: str
    value: bool
    evidence: str


class DeBruijnGraph:
    """Forward-pruned window graph of a finite-type shift.

    Vertices are admissible windows of length max(memory - 1, 1); an edge
    appends one symbol and shifts the window.  After pruning, every
    vertex has an out-edge, so finite paths always extend to points and
    path labels of length >= window are exactly the admissible words.
    """

    def __init__(self, window: int, vertices: Sequence[str], out, pruned: Sequence[str]):
        self.window = window
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.out = tuple(tuple(sorted(edges)) for edges in out)  # per vertex: (symbol, dst)
        self.pruned = tuple(pruned)

    def __len__(self) -> int:
        return len(self.vertices)


class _Ctx:
    """Memoized derived structures for one spec value."""

    __slots__ = (
        "spec",
        "graph",
        "_blocks",
        "_extendable",
        "_least",
        "_least_free",
        "_verdicts",
        "_gamma",
        "_gap_index",
    )

    def __init__(self, spec: ShiftSpec):
        self.spec = spec
        self.graph = _build_graph(spec) if isinstance(spec, SftSpec) else None
        self._blocks: dict[int, frozenset[str]] = {}
        self._extendable: dict[tuple, bool] = {}
        self._least: dict[tuple, Optional[str]] = {}
        self._least_free = ""  # least point prefix, grown on demand
        self._verdicts: dict[str, PropertyVerdict] = {}
        self._gamma: Optional[int] = None
        self._gap_index: dict[int, int] = {}


_CONTEXTS: dict[ShiftSpec, _Ctx] = {}


def _ctx(spec: ShiftSpec) -> _Ctx:
    ctx = _CONTEXTS.get(spec)
    if ctx is None:
        ctx = _CONTEXTS[spec] = _Ctx(spec)
    return ctx


_COMPLEMENTS: dict[SpacingSpec, frozenset[int]] = {}


def _complement_set(spec: SpacingSpec) -> frozenset[int]:
    s = _COMPLEMENTS.get(spec)
    if s is None:
        s = _COMPLEMENTS[spec] = frozenset(spec.complement)
    return s


# ---------------------------------------------------------------------------
# graph construction


def _build_graph(spec: SftSpec) -> DeBruijnGraph:
    symbols = [_DIGITS[s] for s in range(spec.alphabet)]
    singles = {w for w in spec.forbidden if len(w) == 1}
    allowed = [c for c in symbols if c not in singles]
    long_forbidden = [w for w in spec.forbidden if len(w) >= 2]
    window = max(spec.memory - 1, 1)

    candidates = [""]
    for _ in range(window):
        candidates = [w + c for w in candidates for c in allowed]
    candidates = [w for w in candidates if not any(f in w for f in long_forbidden)]

    alive = set(candidates)

    def out_edges(u: str) -> list[tuple[int, str]]:
        edges = []
        for c in allowed:
            w = u + c
            if any(f in w for f in long_forbidden):
                continue
            dst = w[1:]
            if dst in alive:
                edges.append((int(c), dst))
        return edges

    while True:
        dead = [u for u in alive if not out_edges(u)]
        if not dead:
            break
        alive.difference_update(dead)

    vertices = sorted(alive)
    index = {v: i for i, v in enumerate(vertices)}
    out = [[(s, index[d]) for s, d in out_edges(v)] for v in vertices]
    pruned = sorted(set(candidates) - alive)
    return DeBruijnGraph(window, vertices, out, pruned)


def build_graph(spec: SftSpec) -> DeBruijnGraph:
    """Forward-pruned De Bruijn presentation of a finite-type spec."""
    if not isinstance(spec, SftSpec):
        raise TypeError("build_graph expects a finite-type spec")
    g = _ctx(spec).graph
    assert g is not None
    return g


def graph_dot(spec: SftSpec) -> str:
    """Render the window graph in DOT format (edge labels = appended symbol)."""
    g = build_graph(spec)
    lines = ["digraph shift {", "  rankdir=LR;"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for i, v in enumerate(g.vertices):
        for s, j in g.out[i]:
            lines.append(f'  "{v}" -> "{g.vertices[j]}" [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# language queries


def blocks(spec: ShiftSpec, n: int) -> frozenset[str]:
    """All admissible words of length n (words occurring in points)."""
    if n < 1:
        raise ValueError("word length must be >= 1")
    ctx = _ctx(spec)
    cached = ctx._blocks.get(n)
    if cached is not None:
        return cached
    if isinstance(spec, SftSpec):
        out = _sft_blocks(ctx, n)
    else:
        out = _spacing_blocks(spec, n)
    ctx._blocks[n] = out
    return out


def _sft_blocks(ctx: _Ctx, n: int) -> frozenset[str]:
    g = ctx.graph
    if not g.vertices:
        return frozenset()
    if n <= g.window:
        return frozenset(v[i : i + n] for v in g.vertices for i in range(g.window - n + 1))
    words = list(g.vertices)
    ends = list(range(len(g.vertices)))
    for _ in range(n - g.window):
        nxt_words, nxt_ends = [], []
        for w, e in zip(words, ends):
            for s, d in g.out[e]:
                nxt_words.append(w + _DIGITS[s])
                nxt_ends.append(d)
        words, ends = nxt_words, nxt_ends
    return frozenset(words)


def _spacing_blocks(spec: SpacingSpec, n: int) -> frozenset[str]:
    if n > spec.horizon:
        raise HorizonExceeded(f"word length {n} exceeds horizon {spec.horizon}")
    comp = _complement_set(spec)
    out: list[str] = []

    def extend(prefix: str, ones: tuple[int, ...]) -> None:
        if len(prefix) == n:
            out.append(prefix)
            return
        pos = len(prefix) + 1
        extend(prefix + "0", ones)
        if all((pos - o) not in comp for o in ones):
            extend(prefix + "1", ones + (pos,))

    extend("", ())
    return frozenset(out)


def _constraint_map(constraints: Iterable[tuple[int, int]]) -> dict[int, int]:
    cmap: dict[int, int] = {}
    for pos, sym in constraints:
        if pos < 1:
            raise ValueError(f"positions start at 1, got {pos}")
        old = cmap.get(pos)
        if old is not None and old != sym:
            raise ValueError(f"contradictory constraints at position {pos}: {old} vs {sym}")
        cmap[pos] = sym
    return cmap


def partial_extendable(spec: ShiftSpec, constraints: Iterable[tuple[int, int]]) -> bool:
    """Whether some point of the space satisfies every (position, symbol) pin."""
    cmap = _constraint_map(constraints)
    ctx = _ctx(spec)
    key = tuple(sorted(cmap.items()))
    hit = ctx._extendable.get(key)
    if hit is not None:
        return hit
    if isinstance(spec, SftSpec):
        res = _sft_extendable(ctx, cmap)
    else:
        res = _spacing_extendable(spec, cmap)
    ctx._extendable[key] = res
    return res


def _sft_extendable(ctx: _Ctx, cmap: Mapping[int, int]) -> bool:
    g = ctx.graph
    if not g.vertices:
        return False
    if not cmap:
        return True
    if any(sym >= ctx.spec.alphabet or sym < 0 for sym in cmap.values()):
        return False
    hi = max(cmap)
    L = g.window
    states = set()
    for i, v in enumerate(g.vertices):
        if all(cmap.get(p + 1) in (None, int(v[p])) for p in range(min(L, hi))):
            states.add(i)
    for t in range(L + 1, hi + 1):
        req = cmap.get(t)
        nxt = set()
        for u in states:
            for s, d in g.out[u]:
                if req is None or s == req:
                    nxt.add(d)
        if not nxt:
            return False
        states = nxt
    return bool(states)


def _spacing_extendable(spec: SpacingSpec, cmap: Mapping[int, int]) -> bool:
    if not cmap:
        return True
    if max(cmap) > spec.horizon:
        raise HorizonExceeded(f"position {max(cmap)} exceeds horizon {spec.horizon}")
    if any(sym not in (0, 1) for sym in cmap.values()):
        return False
    comp = _complement_set(spec)
    ones = sorted(p for p, sym in cmap.items() if sym == 1)
    for a in range(len(ones)):
        for b in range(a + 1, len(ones)):
            if ones[b] - ones[a] in comp:
                return False
    return True


def word_admissible(spec: ShiftSpec, word: str) -> bool:
    """Whether the word occurs in some point of the space."""
    return partial_extendable(spec, [(i + 1, int(c)) for i, c in enumerate(word)])


def least_word(spec: ShiftSpec, length: int, constraints: Iterable[tuple[int, int]] = ()) -> Optional[str]:
    """Lexicographically least admissible word of the given length matching the pins.

    Returns None when no admissible word fits.  The unconstrained answer
    is the prefix of the lexicographically least point, so fills agree
    across lengths.
    """
    cmap = _constraint_map(constraints)
    if cmap and max(cmap) > length:
        raise ValueError("constraint beyond requested length")
    ctx = _ctx(spec)
    key = (length, tuple(sorted(cmap.items())))
    if key in ctx._least:
        return ctx._least[key]
    if isinstance(spec, SftSpec):
        res = _sft_least_word(ctx, length, cmap)
    else:
        res = _spacing_least_word(spec, length, cmap)
    ctx._least[key] = res
    return res


def _sft_least_word(ctx: _Ctx, length: int, cmap: Mapping[int, int]) -> Optional[str]:
    g = ctx.graph
    if not g.vertices:
        return None
    L = g.window
    if length <= L:
        for v in g.vertices:  # sorted, so first hit is least
            if all(cmap.get(p + 1) in (None, int(v[p])) for p in range(length)):
                return v[:length]
        return None
    # feasible[t] = states (window ending at position t) from which t+1..length completes
    feasible: dict[int, set[int]] = {length: set(range(len(g.vertices)))}
    for t in range(length, L, -1):
        req = cmap.get(t)
        prev = set()
        for u in range(len(g.vertices)):
            for s, d in g.out[u]:
                if (req is None or s == req) and d in feasible[t]:
                    prev.add(u)
                    break
        feasible[t - 1] = prev
    start = None
    for v in g.vertices:  # sorted, so the first feasible start is least
        u = g.index[v]
        if u in feasible[L] and all(cmap.get(p + 1) in (None, int(v[p])) for p in range(L)):
            start = u
            break
    if start is None:
        return None
    word = g.vertices[start]
    state = start
    for t in range(L + 1, length + 1):
        req = cmap.get(t)
        step = None
        for s, d in g.out[state]:
            if (req is None or s == req) and d in feasible[t]:
                step = (s, d)
                break
        if step is None:
            return None  # unreachable given feasibility precomputation
        word += _DIGITS[step[0]]
        state = step[1]
    return word


def _spacing_least_word(spec: SpacingSpec, length: int, cmap: Mapping[int, int]) -> Optional[str]:
    if not _spacing_extendable(spec, cmap):
        return None
    return "".join(str(cmap.get(p, 0)) for p in range(1, length + 1))


# ---------------------------------------------------------------------------
# graph structure: strong connectivity, cycles, period


def _scc_partition(g: DeBruijnGraph) -> list[list[int]]:
    """Kosaraju strongly connected components."""
    n = len(g.vertices)
    order: list[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, 0)]
        seen[root] = True
        while stack:
            u, ei = stack.pop()
            edges = g.out[u]
            if ei < len(edges):
                stack.append((u, ei + 1))
                d = edges[ei][1]
                if not seen[d]:
                    seen[d] = True
                    stack.append((d, 0))
            else:
                order.append(u)
    rev: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for _, d in g.out[u]:
            rev[d].append(u)
    comp = [-1] * n
    comps: list[list[int]] = []
    for u in reversed(order):
        if comp[u] != -1:
            continue
        cur = [u]
        comp[u] = len(comps)
        queue = [u]
        while queue:
            x = queue.pop()
            for y in rev[x]:
                if comp[y] == -1:
                    comp[y] = len(comps)
                    cur.append(y)
                    queue.append(y)
        comps.append(cur)
    return comps


def _cycle_vertices(g: DeBruijnGraph) -> set[int]:
    comps = _scc_partition(g)
    out = set()
    for comp in comps:
        members = set(comp)
        if len(comp) > 1:
            out.update(comp)
        else:
            u = comp[0]
            if any(d == u for _, d in g.out[u]):
                out.add(u)
    return out


def _reachable_from(g: DeBruijnGraph, sources: set[int]) -> set[int]:
    seen = set(sources)
    queue = list(sources)
    while queue:
        u = queue.pop()
        for _, d in g.out[u]:
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen


def _strongly_connected(g: DeBruijnGraph) -> bool:
    return len(g.vertices) > 0 and len(_scc_partition(g)) == 1


def _cycle_gcd(g: DeBruijnGraph) -> int:
    """gcd of cycle lengths of a strongly connected graph."""
    dist = {0: 0}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for _, d in g.out[u]:
            if d not in dist:
                dist[d] = dist[u] + 1
                queue.append(d)
    g_val = 0
    for u in range(len(g.vertices)):
        for _, d in g.out[u]:
            g_val = math.gcd(g_val, dist[u] + 1 - dist[d])
    return abs(g_val)


def _primitivity_exponent(ctx: _Ctx) -> int:
    """Least t with every vertex pair joined by a length-t path."""
    if ctx._gamma is not None:
        return ctx._gamma
    g = ctx.graph
    n = len(g.vertices)
    rows = [0] * n
    for u in range(n):
        for _, d in g.out[u]:
            rows[u] |= 1 << d
    full = (1 << n) - 1
    power = rows[:]
    cap = (n - 1) * (n - 1) + 2
    for t in range(1, cap + 1):
        if all(r == full for r in power):
            ctx._gamma = t
            return t
        power = [_row_mul(power[u], rows, n) for u in range(n)]
    raise PreconditionFailed("graph is not primitive")


def _row_mul(row: int, rows: list[int], n: int) -> int:
    out = 0
    for j in range(n):
        if row >> j & 1:
            out |= rows[j]
    return out


# ---------------------------------------------------------------------------
# property decisions


def decide(spec: ShiftSpec, prop: str) -> PropertyVerdict:
    """Decide one property of the mixing hierarchy, with evidence."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    ctx = _ctx(spec)
    hit = ctx._verdicts.get(prop)
    if hit is None:
        if isinstance(spec, SftSpec):
            hit = _decide_sft(ctx, prop)
        else:
            hit = _decide_spacing(spec, prop)
        ctx._verdicts[prop] = hit
    return hit


def _decide_sft(ctx: _Ctx, prop: str) -> PropertyVerdict:
    g = ctx.graph
    if not g.vertices:
        return PropertyVerdict(prop, False, "empty language: every window dies under forward pruning")
    if prop == "extensible":
        cyc = _cycle_vertices(g)
        reach = _reachable_from(g, cyc)
        missing = [g.vertices[i] for i in range(len(g.vertices)) if i not in reach]
        ok = not missing
        ev = (
            f"window graph on {len(g)} vertices (pruned: {list(g.pruned)}); "
            f"{len(cyc)} cycle vertices; "
            + ("every vertex is reachable from a cycle" if ok else f"not cycle-reachable: {missing}")
        )
        return PropertyVerdict(prop, ok, ev)
    if prop == "transitive":
        comps = _scc_partition(g)
        ok = len(comps) == 1
        ev = f"window graph on {len(g)} vertices has {len(comps)} strongly connected component(s)"
        return PropertyVerdict(prop, ok, ev)
    # mixing, and the finite-type collapse for the two intermediate properties
    comps = _scc_partition(g)
    if len(comps) != 1:
        ev = f"not strongly connected ({len(comps)} components)"
        return PropertyVerdict(prop, False, ev)
    period = _cycle_gcd(g)
    ok = period == 1
    ev = f"strongly connected; cycle-length gcd {period}"
    if ok:
        ev += f"; primitivity exponent {_primitivity_exponent(ctx)}"
    if prop in ("weakly_mixing", "totally_transitive"):
        ev += " (finite-type collapse: aperiodic transitive <=> mixing)"
    return PropertyVerdict(prop, ok, ev)


def _decide_spacing(spec: SpacingSpec, prop: str) -> PropertyVerdict:
    cls = spec.declared_class
    comp = list(spec.complement)
    if prop == "extensible" or prop == "transitive":
        ev = f"gap-set shift (declared {cls}): admissible words place at any offset over the all-zero point"
        return PropertyVerdict(prop, True, ev)
    if cls == "general":
        raise UndecidableProperty(
            f"{prop} of a gap-set shift is not decidable from a tabulated prefix (declared class 'general')"
        )
    if prop == "mixing":
        ok = cls == "cofinite"
        ev = (
            f"declared cofinite: banned gaps {comp} are finite, any gap beyond {max(comp, default=0)} is allowed"
            if ok
            else "declared thick but not cofinite: arbitrarily large banned gaps remain"
        )
        return PropertyVerdict(prop, ok, ev)
    # weakly_mixing and totally_transitive coincide for gap-set shifts
    ev = f"declared {cls}: gap set contains arbitrarily long runs, giving simultaneous connections"
    return PropertyVerdict(prop, True, ev)


# ---------------------------------------------------------------------------
# connectors


def _require_admissible_word(spec: ShiftSpec, word: str, name: str) -> None:
    if not word or any(ch not in _DIGITS[: alphabet_of(spec)] for ch in word):
        raise InadmissiblePattern(f"{name}={word!r} uses symbols outside the alphabet")
    if not word_admissible(spec, word):
        raise InadmissiblePattern(f"{name}={word!r} is not an admissible word")


def connector_gaps(spec: ShiftSpec, u: str, v: str, bound: int) -> set[int]:
    """Gaps m <= bound at which some point carries u as a prefix and v after the gap."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    _require_admissible_word(spec, u, "u")
    _require_admissible_word(spec, v, "v")
    base = [(i + 1, int(c)) for i, c in enumerate(u)]
    out = set()
    for m in range(1, bound + 1):
        cons = base + [(len(u) + m + 1 + i, int(c)) for i, c in enumerate(v)]
        if partial_extendable(spec, cons):
            out.add(m)
    return out


def simultaneous_connector(
    spec: ShiftSpec, pairs: Sequence[tuple[str, str]], bound: int
) -> Optional[int]:
    """Smallest gap m <= bound usable by every pair at once, if any."""
    common: Optional[set[int]] = None
    for u, v in pairs:
        gaps = connector_gaps(spec, u, v, bound)
        common = gaps if common is None else common & gaps
        if not common:
            return None
    return min(common) if common else None


def mixing_gap_index(spec: ShiftSpec, max_word_len: int) -> int:
    """A gap index N: every word pair of length <= max_word_len connects at every gap m >= N.

    Not necessarily minimal.  Finite-type: the primitivity exponent of the
    pruned window graph.  Cofinite gap-set: one past the largest banned
    gap.  Soundness is spot-checked over gaps in [N, N + 10].
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")
    verdict = decide(spec, "mixing")
    if not verdict.value:
        raise PreconditionFailed(f"space is not mixing: {verdict.evidence}")
    ctx = _ctx(spec)
    hit = ctx._gap_index.get(max_word_len)
    if hit is not None:
        return hit
    if isinstance(spec, SftSpec):
        n = _primitivity_exponent(ctx)
    else:
        n = max(spec.complement, default=0) + 1
    words = sorted(w for t in range(1, max_word_len + 1) for w in blocks(spec, t))
    for u in words:
        for v in words:
            for m in range(n, n + 11):
                cons = [(i + 1, int(c)) for i, c in enumerate(u)]
                cons += [(len(u) + m + 1 + i, int(c)) for i, c in enumerate(v)]
                if not partial_extendable(spec, cons):
                    raise AssertionError(
                        f"gap index {n} failed soundness check at (u={u}, v={v}, m={m})"
                    )
    ctx._gap_index[max_word_len] = n
    return n
