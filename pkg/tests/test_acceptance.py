"""Acceptance suite: the package's exit criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s``.  Every criterion pins
its own runtime budget; timings accumulate per criterion group.
"""

import itertools
import random
import time
from contextlib import contextmanager
from decimal import Decimal

from brute import language, naive_exists_witness
from multishift.dimension import dimB_goldenmean, fib
from multishift.lambda_arith import a_set, decompose, offset_bound, offset_of
from multishift.mult_shift import Pattern, count_blocks, enumerate_blocks, is_admissible
from multishift.oracle import (
    SearchBudget,
    binary_sft_family,
    campaign,
    exists_witness_exact,
    probe_directional_q,
    random_sft_family,
    verify_certificate,
)
from multishift.shift_core import blocks, decide, sft, spacing
from multishift.witness import witness_mixing, witness_transitive

_ELAPSED: dict[str, float] = {}


@contextmanager
def criterion(tag: str, description: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _ELAPSED[tag] = time.perf_counter() - start
        print(f"\nACCEPTANCE {tag} ({description}): FAIL [{_ELAPSED[tag]:.2f}s]")
        raise
    _ELAPSED[tag] = time.perf_counter() - start
    assert limit is None or _ELAPSED[tag] <= limit, f"runtime {_ELAPSED[tag]:.1f}s over budget {limit}s"
    print(f"\nACCEPTANCE {tag} ({description}): PASS [{_ELAPSED[tag]:.2f}s]")


# --- criterion 1: pinned regression vectors (total runtime < 10 s) ----------


def test_criterion_1a_ramp_vector():
    with criterion("1a", "forbidden-01 vector: extensible, not transitive"):
        omega = sft(2, ["01"])
        assert decide(omega, "extensible").value is True
        assert decide(omega, "transitive").value is False
        u = Pattern.block("00", 2, omega)
        v = Pattern.block("1", 2, omega)
        for k in range(9):
            assert exists_witness_exact(omega, 2, u, v, 1, k) is None
        cert = witness_transitive(omega, 2, u, v, 0)
        assert cert.alpha == 3
        ok, reason = verify_certificate(omega, 2, cert)
        assert ok, reason


def test_criterion_1b_alternating_vector():
    with criterion("1b", "alternating-shift vector: parity obstruction"):
        omega = sft(2, ["00", "11"])
        assert decide(omega, "transitive").value is True
        assert decide(omega, "weakly_mixing").value is False
        u = Pattern.block("0110", 2, omega)
        v = Pattern.block("1011", 2, omega)
        verdict = probe_directional_q(omega, 2, 2, u, v, SearchBudget(alpha_bound=9, k_bound=8))
        assert verdict.k is None
        assert {k for k, _ in verdict.per_k_failures} == set(range(9))
        assert verdict.status == "proved_negative"
        residues = verdict.proof["per_chain_feasible_residues"]
        assert set(residues[1]).isdisjoint(residues[3])


def test_criterion_1c_cofinite_gapset_vector():
    with criterion("1c", "cofinite gap-set mixing vector"):
        omega = spacing("cofinite", [1, 2])
        assert decide(omega, "mixing").value is True
        u = Pattern.block("1" * 8, 6, omega)
        v = Pattern.block("1" * 5, 6, omega)
        # kept as stated: the all-ones length-8 block pins positions 1 and 6
        # (one chain, depths 1 and 2) to ones at spacing 1, which the gap
        # set bans, so no point extends u and the constructor must refuse
        mw = witness_mixing(omega, 6, u, v)
        assert mw.threshold == 3
        for alpha in range(1, 1001):
            if alpha % 6 == 0:
                continue
            k = 0
            while alpha * 6**k < 216:
                k += 1
            if alpha * 6**k <= 1000:
                ok, reason = verify_certificate(omega, 6, mw.build(alpha, k))
                assert ok, (alpha, k, reason)


def test_criterion_1_total_runtime():
    total = sum(_ELAPSED.get(tag, 0.0) for tag in ("1a", "1b", "1c"))
    assert total < 10.0, f"criterion 1 took {total:.1f}s"


# --- criterion 2: exhaustive theorem campaign (< 5 min) ----------------------


def test_criterion_2_exhaustive_campaign():
    with criterion("2", "exhaustive cross-validation campaign", limit=300.0):
        family = binary_sft_family(2) + random_sft_family(200, seed=20191030, max_word_len=3)
        assert len(family) == 264
        report = campaign(family, [2, 3], SearchBudget(), jobs=2)
        assert report.hard_contradictions == []
        assert report.certificate_failures == 0
        assert report.certificates_checked > 0


# --- criterion 3: arithmetic suites (< 30 s) ---------------------------------


def test_criterion_3_arithmetic_suites():
    with criterion("3", "arithmetic suites", limit=30.0):
        for l in (2, 3, 4, 6, 10):
            for n in range(1, 100_001):
                d = decompose(n, l)
                assert d.alpha * l**d.k == n and d.alpha % l != 0
        for l in (2, 3, 4, 6):
            n = 10_000
            seen = bytearray(n + 1)
            for rep in range(1, n + 1):
                if rep % l:
                    pos = rep
                    while pos <= n:
                        assert not seen[pos]
                        seen[pos] = 1
                        pos *= l
            assert all(seen[1:])
        for l in (2, 4, 6, 12):
            bound_for = {b: offset_bound(l, b).M for b in a_set(l, 20)}
            for a in range(1, 2001):
                if a % l:
                    for b, m in bound_for.items():
                        assert decompose(a * b, l).k <= m
        for alpha in a_set(4, 200):
            for k in range(6):
                for i in (1, 2, 3):
                    assert offset_of(i, 6, alpha, k, 4).c <= 2


# --- criterion 4: counting consistency (< 10 s) -------------------------------


def test_criterion_4_counting_consistency():
    with criterion("4", "counting consistency", limit=10.0):
        golden = sft(2, ["11"])
        for n in range(1, 11):
            assert count_blocks(golden, 2, n) == len(enumerate_blocks(golden, 2, n))
        for n in range(1, 21):
            assert fib(n) == len(blocks(golden, n))
        direct = sum(
            1
            for tup in itertools.product("01", repeat=4)
            if all(not (tup[i - 1] == "1" and tup[2 * i - 1] == "1") for i in (1, 2))
        )
        assert count_blocks(golden, 2, 4) == direct == 10


# --- criterion 5: dimension series (< 1 s) -------------------------------------


def test_criterion_5_dimension_series():
    with criterion("5", "dimension series", limit=1.0):
        assert abs(dimB_goldenmean(60).partial_sum - dimB_goldenmean(40).partial_sum) < Decimal("1e-9")
        forward = dimB_goldenmean(60).partial_sum
        backward = dimB_goldenmean(60, reverse=True).partial_sum
        assert abs(forward - backward) < Decimal("1e-12")
        reference = dimB_goldenmean(200).partial_sum
        for t in (1, 5, 10, 20, 40, 60, 100, 150):
            r = dimB_goldenmean(t)
            assert Decimal(0) <= reference - r.partial_sum <= r.tail_bound


# --- criterion 6: oracle exactness (< 1 min) ------------------------------------


def test_criterion_6_oracle_exactness():
    with criterion("6", "oracle agrees with naive assignment search", limit=60.0):
        rng = random.Random(1729)
        specs = [
            sft(2, ["11"]),
            sft(2, ["01"]),
            sft(2, ["00", "11"]),
            sft(2, []),
            sft(2, ["000", "11"]),
            sft(2, ["010"]),
            spacing("cofinite", [1, 2]),
            spacing("thick", [3, 12, 102]),
        ]
        checked = 0
        while checked < 500:
            spec = rng.choice(specs)
            l = rng.choice([2, 3])
            u = _random_admissible_pattern(rng, spec, l, max_positions=7)
            v = _random_admissible_pattern(rng, spec, l, max_positions=5)
            if u is None or v is None:
                continue
            if len(u.entries) + len(v.entries) > 12:
                continue
            alpha = rng.choice([a for a in range(1, 8) if a % l])
            k = rng.randint(0, 2)
            try:
                expected = naive_exists_witness(spec, l, u, v, alpha, k)
            except ValueError:
                continue
            got = exists_witness_exact(spec, l, u, v, alpha, k)
            assert (got is not None) == expected, (spec, l, u.entries, v.entries, alpha, k)
            checked += 1


def _random_admissible_pattern(rng, spec, l, max_positions):
    entries = {}
    for pos in rng.sample(range(1, 33), rng.randint(1, max_positions)):
        p = pos
        depth = 1
        while p % l == 0:
            p //= l
            depth += 1
        if depth <= 5:
            entries[pos] = rng.randint(0, 1)
    if not entries:
        return None
    pattern = Pattern.make(entries, l, spec)
    return pattern if is_admissible(pattern) else None
