"""Independent brute-force oracles used to pin expected values.

Everything here enumerates raw symbol strings and scans them directly,
staying off the graph/fiber code paths it cross-checks.
"""

from itertools import product

from multishift.shift_core import SftSpec, SpacingSpec

_LANG_CACHE: dict = {}


def sft_language(spec: SftSpec, n: int) -> set[str]:
    """Words of length n occurring in points: avoid every forbidden word and
    extend on the right far enough to guarantee an infinite continuation
    (pumping bound: one symbol per possible window)."""
    digits = "0123456789"[: spec.alphabet]
    mem = max(spec.memory, 1)
    keep = mem - 1
    slack = spec.alphabet**keep + mem

    def clean(w: str) -> bool:
        return not any(f in w for f in spec.forbidden)

    extend_memo: dict[tuple[str, int], bool] = {}

    def can_extend(window: str, steps: int) -> bool:
        if steps == 0:
            return True
        key = (window, steps)
        if key not in extend_memo:
            extend_memo[key] = any(
                clean(window + c) and can_extend((window + c)[-keep:] if keep else "", steps - 1)
                for c in digits
            )
        return extend_memo[key]

    out = set()
    for tup in product(digits, repeat=n):
        w = "".join(tup)
        if clean(w) and can_extend(w[-keep:] if keep else "", slack):
            out.add(w)
    return out


def spacing_language(spec: SpacingSpec, n: int) -> set[str]:
    comp = set(spec.complement)
    out = set()
    for tup in product("01", repeat=n):
        w = "".join(tup)
        ones = [i + 1 for i, c in enumerate(w) if c == "1"]
        if all(b - a not in comp for a in ones for b in ones if b > a):
            out.add(w)
    return out


def language(spec, n: int) -> set[str]:
    key = (spec, n)
    if key not in _LANG_CACHE:
        _LANG_CACHE[key] = sft_language(spec, n) if isinstance(spec, SftSpec) else spacing_language(spec, n)
    return _LANG_CACHE[key]


def brute_extendable(spec, constraints) -> bool:
    """Reference for partial_extendable: scan every word up to the last pin."""
    cmap = dict(constraints)
    hi = max(cmap)
    return any(all(int(w[p - 1]) == s for p, s in cmap.items()) for w in language(spec, hi))


def brute_connector_gaps(spec, u: str, v: str, bound: int) -> set[int]:
    out = set()
    for m in range(1, bound + 1):
        cons = [(i + 1, int(c)) for i, c in enumerate(u)]
        cons += [(len(u) + m + 1 + i, int(c)) for i, c in enumerate(v)]
        if brute_extendable(spec, cons):
            out.add(m)
    return out


def naive_exists_witness(omega, l: int, u, v, alpha: int, k: int, depth_cap: int = 8) -> bool:
    """Reference for the exact witness oracle.

    Merge the two constraint sets, split them over chains by direct
    division, and per chain enumerate every symbol assignment up to the
    deepest pinned depth, testing membership in the brute language.
    """
    multiplier = u.length * alpha * l**k
    merged = {}
    for pos, sym in u.entries:
        merged[pos] = sym
    for pos, sym in v.entries:
        p = multiplier * pos
        if merged.get(p, sym) != sym:
            return False
        merged[p] = sym
    chains = {}
    for pos, sym in merged.items():
        rep, depth = pos, 1
        while rep % l == 0:
            rep //= l
            depth += 1
        chains.setdefault(rep, {})[depth] = sym
    digits = "0123456789"[: 2 if isinstance(omega, SpacingSpec) else omega.alphabet]
    for cons in chains.values():
        need = max(cons)
        if need > depth_cap:
            raise ValueError("instance too deep for the naive oracle")
        words = language(omega, need)
        if not any(all(int(w[d - 1]) == s for d, s in cons.items()) for w in words):
            return False
    return True
