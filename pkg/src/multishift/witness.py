"""Constructive witnesses for connection claims in multiplicative subshifts.

Each constructor proves a positive claim about the multiplicative
subshift by exhibiting a certificate: a multiplier, the per-chain
constraint groups it induces, and an explicit admissible prefix
satisfying every constraint.  Certificates are deterministic
(lexicographically least choices throughout) and re-checkable by the
exact oracle.

The three constructions:

* ``witness_transitive``: a prime multiplier step larger than the reach
  of the first pattern routes the second pattern into untouched chains,
  so extensibility of the base space suffices.
* ``witness_directional_power``: for moduli that are powers of the chain
  base, a finite cover of fiber pairs and bounded offsets is connected
  at one common absolute offset; weak mixing of the base space provides
  the simultaneous connection.
* ``witness_mixing``: past a gap-index threshold every multiplier works;
  mixing of the base space provides the per-chain connections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import mult_shift, shift_core
from .errors import ConnectorNotFound, NoCoprimePrime, PreconditionFailed
from .lambda_arith import a_set, decompose, factorization, next_prime_avoiding, product_offset_bound, xi
from .mult_shift import (
    MultiplierConstraintSet,
    Pattern,
    chain_length,
    class_reps,
    format_pattern,
    multiplier_constraints,
    require_admissible,
)
from .shift_core import ShiftSpec, decide, least_word, mixing_gap_index

__all__ = [
    "ConnectorCover",
    "DirectionalWitness",
    "MixingWitness",
    "WitnessCertificate",
    "certificate_to_dict",
    "certificate_from_dict",
    "extract_fiber_point",
    "try_certificate",
    "witness_directional_coprime",
    "witness_directional_power",
    "witness_mixing",
    "witness_transitive",
]

K_SEARCH_BOUND = 64


@dataclass(frozen=True)
class ConnectorCover:
    """Finite cover justifying one connector offset for every multiplier.

    ``pairs`` lists (chain rep of u-fiber, u-fiber word, pad length r,
    v-chain rep, pad word, v-fiber word); each pair is connected at the
    common absolute offset, with the pad absorbing the multiplier's
    chain-offset shift.
    """

    offset_bound: int
    common_offset: int
    pairs: tuple[tuple[int, str, int, int, str, str], ...]


@dataclass(frozen=True)
class WitnessCertificate:
    """A connection claim plus everything needed to re-check it exactly."""

    alpha: int
    k: int
    multiplier: int
    constraints: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    prefix: str
    construction: str
    u_literal: str
    v_literal: str
    directional_base: int
    cover: Optional[ConnectorCover] = None


@dataclass(frozen=True)
class DirectionalWitness:
    """Uniform depth step plus per-multiplier certificates for a directional claim."""

    q: int
    k: int
    certificates: tuple[WitnessCertificate, ...]
    cover: ConnectorCover


@dataclass(frozen=True)
class MixingWitness:
    """Gap-index threshold plus a certificate constructor past it."""

    threshold: int
    build: Callable[[int, int], WitnessCertificate]


def _fiber_words(u: Pattern) -> dict[int, str]:
    """Contiguous base-space words per chain, least-completing any gaps."""
    out = {}
    for rep, cons in u.fibers().items():
        depth = max(d for d, _ in cons)
        word = least_word(u.omega, depth, cons)
        if word is None:
            raise PreconditionFailed(f"fiber {rep} lost admissibility during completion")
        out[rep] = word
    return out


def _solve_prefix(omega: ShiftSpec, l: int, mcs: MultiplierConstraintSet) -> Optional[str]:
    """Admissible block satisfying the grouped constraints, or None.

    Constrained chains take their lexicographically least completion;
    untouched chains take the least base-space word outright.
    """
    if not mcs.satisfiable_form:
        return None
    length = max(rep * l ** (d - 1) for rep, cons in mcs.groups for d, _ in cons)
    groups = mcs.group_map()
    fibers = {}
    for rep in class_reps(length, l):
        need = chain_length(rep, length, l)
        cons = groups.get(rep, ())
        depth = max([need] + [d for d, _ in cons])
        word = least_word(omega, depth, cons)
        if word is None:
            return None
        fibers[rep] = word
    return mult_shift.assemble(fibers, l, length)


def try_certificate(
    omega: ShiftSpec,
    l: int,
    u: Pattern,
    v: Pattern,
    alpha: int,
    k: int,
    multiplier: int,
    construction: str,
    directional_base: Optional[int] = None,
    cover: Optional[ConnectorCover] = None,
) -> Optional[WitnessCertificate]:
    """Build and self-check a certificate, or report unsatisfiability as None."""
    mcs = multiplier_constraints(u, v, multiplier)
    prefix = _solve_prefix(omega, l, mcs)
    if prefix is None:
        return None
    cert = WitnessCertificate(
        alpha=alpha,
        k=k,
        multiplier=multiplier,
        constraints=mcs.groups,
        prefix=prefix,
        construction=construction,
        u_literal=format_pattern(u),
        v_literal=format_pattern(v),
        directional_base=directional_base if directional_base is not None else l,
        cover=cover,
    )
    _self_check(omega, l, cert)
    return cert


def _self_check(omega: ShiftSpec, l: int, cert: WitnessCertificate) -> None:
    block = cert.prefix
    for rep, cons in cert.constraints:
        for depth, sym in cons:
            pos = rep * l ** (depth - 1)
            if int(block[pos - 1]) != sym:
                raise AssertionError(f"certificate prefix violates constraint at position {pos}")
    if not mult_shift.is_admissible(Pattern.block(block, l, omega)):
        raise AssertionError("certificate prefix is not admissible")


def _prime_factors(n: int) -> set[int]:
    return {p for p, _ in factorization(n)}


def witness_transitive(omega: ShiftSpec, l: int, u: Pattern, v: Pattern, k: int) -> WitnessCertificate:
    """Connect u to v at any requested depth k via a large-prime multiplier step.

    The least prime alpha avoiding the base's prime factors and exceeding
    the reach of u sends every scaled chain of v outside every chain u
    touches, so per-chain extensibility of the base space finishes the
    construction.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    verdict = decide(omega, "extensible")
    if not verdict.value:
        raise PreconditionFailed(f"base space is not extensible: {verdict.evidence}")
    require_admissible(u, "u")
    require_admissible(v, "v")
    alpha = next_prime_avoiding(xi(u.length, l), _prime_factors(l))
    multiplier = u.length * alpha * l**k
    cert = try_certificate(omega, l, u, v, alpha, k, multiplier, "transitive_prime_alpha")
    if cert is None:
        raise AssertionError("prime-step construction failed on an extensible base space")
    return cert


def witness_directional_coprime(
    omega: ShiftSpec, l: int, modulus: int, u: Pattern, v: Pattern
) -> tuple[int, Callable[[int], WitnessCertificate]]:
    """Directional witnesses for a modulus with a prime factor coprime to the base.

    Returns the least k with p**k beyond the reach of u, plus a
    constructor valid for every alpha not divisible by the modulus;
    scaled chains keep a p-valuation of at least k, so they miss every
    chain u touches.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    verdict = decide(omega, "extensible")
    if not verdict.value:
        raise PreconditionFailed(f"base space is not extensible: {verdict.evidence}")
    require_admissible(u, "u")
    require_admissible(v, "v")
    base_primes = _prime_factors(l)
    coprime = sorted(p for p in _prime_factors(modulus) if p not in base_primes)
    if not coprime:
        raise NoCoprimePrime(
            f"every prime of modulus {modulus} divides the base {l}; use the power-modulus construction"
        )
    p = coprime[0]
    bound = xi(u.length, l)
    k = 1
    while p**k <= bound:
        k += 1

    def build(alpha: int) -> WitnessCertificate:
        if alpha % modulus == 0:
            raise ValueError(f"alpha {alpha} is divisible by the modulus {modulus}")
        multiplier = u.length * alpha * modulus**k
        cert = try_certificate(
            omega, l, u, v, alpha, k, multiplier, "directional_coprime", directional_base=modulus
        )
        if cert is None:
            raise AssertionError("coprime-prime construction failed on an extensible base space")
        return cert

    return k, build


def _connector_cover(
    omega: ShiftSpec,
    l: int,
    n: int,
    u: Pattern,
    v: Pattern,
    search_bound: int,
) -> ConnectorCover:
    """Common absolute connector offset covering all fiber pairs and offsets.

    The offset K must be congruent to the base power of |u| modulo n so
    that K = k1 + n*k for an integer depth step k.  The pad range covers
    every chain offset the multiplier family can produce plus its own
    base-power slack (up to n - 1).
    """
    k1 = decompose(u.length, l).k
    pad_bound = product_offset_bound(l, u.length, v.length) + (n - 1)
    u_words = _fiber_words(u)
    v_words = _fiber_words(v)

    def connected_at(K: int) -> bool:
        for uw in u_words.values():
            ucons = {i + 1: int(c) for i, c in enumerate(uw)}
            for vw in v_words.values():
                for r in range(pad_bound + 1):
                    cons = dict(ucons)
                    conflict = False
                    for i, c in enumerate(vw):
                        pos = K + r + 1 + i
                        if cons.get(pos, int(c)) != int(c):
                            conflict = True
                            break
                        cons[pos] = int(c)
                    if conflict or not shift_core.partial_extendable(omega, sorted(cons.items())):
                        return False
        return True

    k = 0
    while k <= search_bound:
        K = k1 + n * k
        if connected_at(K):
            pairs = []
            for urep, uw in sorted(u_words.items()):
                for vrep, vw in sorted(v_words.items()):
                    for r in range(pad_bound + 1):
                        pad = _pad_word(omega, r, vw)
                        pairs.append((urep, uw, r, vrep, pad, vw))
            return ConnectorCover(offset_bound=pad_bound, common_offset=K, pairs=tuple(pairs))
        k += 1
    raise ConnectorNotFound(
        f"no common connector offset congruent to {k1} mod {n} within {search_bound} steps",
        bound=search_bound,
    )


def _pad_word(omega: ShiftSpec, r: int, vw: str) -> str:
    """Least length-r word whose concatenation with vw stays admissible."""
    if r == 0:
        return ""
    cons = [(r + 1 + i, int(c)) for i, c in enumerate(vw)]
    word = least_word(omega, r + len(vw), cons)
    if word is None:
        raise PreconditionFailed("pad construction failed; base space lost extensibility")
    return word[:r]


def witness_directional_power(
    omega: ShiftSpec,
    l: int,
    n: int,
    u: Pattern,
    v: Pattern,
    alpha_bound: int,
    search_bound: int = K_SEARCH_BOUND,
) -> DirectionalWitness:
    """Directional witnesses for the modulus l**n with one depth step for all multipliers.

    Builds the finite fiber-pair cover, finds the common connector offset
    K, and returns k = (K - k1)/n together with certificates for every
    admissible alpha up to alpha_bound.  The cover itself is the
    uniform-in-alpha justification and is recorded on each certificate.
    """
    if n < 1:
        raise ValueError("power must be >= 1")
    if alpha_bound < 1:
        raise ValueError("alpha_bound must be >= 1")
    verdict = decide(omega, "weakly_mixing")
    if not verdict.value:
        raise PreconditionFailed(f"base space is not weakly mixing: {verdict.evidence}")
    require_admissible(u, "u")
    require_admissible(v, "v")
    q = l**n
    cover = _connector_cover(omega, l, n, u, v, search_bound)
    k1 = decompose(u.length, l).k
    k = (cover.common_offset - k1) // n
    certs = []
    for alpha in a_set(q, alpha_bound):
        multiplier = u.length * alpha * q**k
        cert = try_certificate(
            omega, l, u, v, alpha, k, multiplier, "directional_power", directional_base=q, cover=cover
        )
        if cert is None:
            raise AssertionError(f"covered construction failed at alpha={alpha}")
        certs.append(cert)
    return DirectionalWitness(q=q, k=k, certificates=tuple(certs), cover=cover)


def witness_mixing(omega: ShiftSpec, l: int, u: Pattern, v: Pattern) -> MixingWitness:
    """Threshold N and a constructor for every multiplier alpha * l**k >= l**N.

    N is the mixing gap index of the base space at the fiber-word lengths
    of u and v; past the threshold every chain collision leaves enough
    depth gap for the base space's uniform connections.
    """
    verdict = decide(omega, "mixing")
    if not verdict.value:
        raise PreconditionFailed(f"base space is not mixing: {verdict.evidence}")
    require_admissible(u, "u")
    require_admissible(v, "v")
    max_len = 1
    for pat in (u, v):
        for cons in pat.fibers().values():
            max_len = max(max_len, max(d for d, _ in cons))
    threshold = mixing_gap_index(omega, max_len)

    def build(alpha: int, k: int) -> WitnessCertificate:
        if alpha % l == 0:
            raise ValueError(f"alpha {alpha} is divisible by the base {l}")
        if alpha * l**k < l**threshold:
            raise ValueError(f"alpha * l**k = {alpha * l ** k} is below the threshold {l ** threshold}")
        multiplier = u.length * alpha * l**k
        cert = try_certificate(omega, l, u, v, alpha, k, multiplier, "mixing_threshold")
        if cert is None:
            raise AssertionError(f"threshold construction failed at alpha={alpha}, k={k}")
        return cert

    return MixingWitness(threshold=threshold, build=build)


def extract_fiber_point(y: str, rep: int, l: int, start_depth: int = 1) -> str:
    """Contiguous base-space word read along one chain of a block.

    ``start_depth`` shifts the chain start, implementing the inverse
    fiber extraction x_i = y at rep * l**(start_depth + i - 2).
    """
    if rep % l == 0:
        raise ValueError(f"{rep} is not a chain representative for base {l}")
    if start_depth < 1:
        raise ValueError("start depth begins at 1")
    out = []
    pos = rep * l ** (start_depth - 1)
    if pos > len(y):
        raise ValueError(f"chain position {pos} exits the covered prefix of length {len(y)}")
    while pos <= len(y):
        out.append(y[pos - 1])
        pos *= l
    return "".join(out)


# ---------------------------------------------------------------------------
# serialization (consumed by the CLI verify subcommand)


def certificate_to_dict(cert: WitnessCertificate) -> dict:
    out = {
        "alpha": cert.alpha,
        "k": cert.k,
        "multiplier": cert.multiplier,
        "directional_base": cert.directional_base,
        "construction": cert.construction,
        "u": cert.u_literal,
        "v": cert.v_literal,
        "constraints": [[rep, [list(c) for c in cons]] for rep, cons in cert.constraints],
        "prefix": cert.prefix,
    }
    if cert.cover is not None:
        out["cover"] = {
            "offset_bound": cert.cover.offset_bound,
            "common_offset": cert.cover.common_offset,
            "pairs": [list(p) for p in cert.cover.pairs],
        }
    return out


def certificate_from_dict(data: dict) -> WitnessCertificate:
    cover = None
    if "cover" in data:
        cover = ConnectorCover(
            offset_bound=data["cover"]["offset_bound"],
            common_offset=data["cover"]["common_offset"],
            pairs=tuple(tuple(p) for p in data["cover"]["pairs"]),
        )
    return WitnessCertificate(
        alpha=data["alpha"],
        k=data["k"],
        multiplier=data["multiplier"],
        constraints=tuple((rep, tuple(tuple(c) for c in cons)) for rep, cons in data["constraints"]),
        prefix=data["prefix"],
        construction=data["construction"],
        u_literal=data["u"],
        v_literal=data["v"],
        directional_base=data.get("directional_base", 0),
        cover=cover,
    )
