import random

import pytest

from brute import naive_exists_witness
from multishift.mult_shift import Pattern, enumerate_blocks
from multishift.oracle import (
    SearchBudget,
    binary_sft_family,
    budget_from_env,
    campaign,
    dedupe_by_language,
    exists_witness_exact,
    probe_directional_q,
    probe_transitive_X,
    random_sft_family,
    verify_certificate,
)
from multishift.shift_core import blocks, sft, spacing

GOLDEN = sft(2, ["11"])
RAMP = sft(2, ["01"])
ALT = sft(2, ["00", "11"])


def block(word, base, omega):
    return Pattern.block(word, base, omega)


# --- exact witness decision ----------------------------------------------------


def test_exists_witness_pinned_negative():
    # alternating base space: depth parity needed by the two chains conflicts
    assert exists_witness_exact(ALT, 2, block("0110", 2, ALT), block("1011", 2, ALT), 1, 2) is None
    assert exists_witness_exact(RAMP, 2, block("00", 2, RAMP), block("1", 2, RAMP), 1, 3) is None


def test_exists_witness_pinned_positive():
    cert = exists_witness_exact(GOLDEN, 2, block("0", 2, GOLDEN), block("0", 2, GOLDEN), 1, 0)
    assert cert is not None and cert.prefix == "0"
    ok, reason = verify_certificate(GOLDEN, 2, cert)
    assert ok, reason


def test_exists_witness_validates_inputs():
    with pytest.raises(ValueError):
        exists_witness_exact(GOLDEN, 2, block("0", 2, GOLDEN), block("0", 2, GOLDEN), 2, 0)


def test_exists_witness_self_checks():
    cert = exists_witness_exact(ALT, 2, block("01", 2, ALT), block("01", 2, ALT), 1, 1)
    if cert is not None:
        ok, reason = verify_certificate(ALT, 2, cert)
        assert ok, reason


def _random_pattern(rng, spec, base, max_positions, depth_cap=8):
    positions = rng.sample(range(1, 40), rng.randint(1, max_positions))
    entries = {}
    for pos in positions:
        p, depth = pos, 1
        while p % base == 0:
            p //= base
            depth += 1
        if depth > depth_cap:
            continue
        entries[pos] = rng.randint(0, 1)
    if not entries:
        entries[1] = 0
    return Pattern.make(entries, base, spec)


def test_exact_oracle_agrees_with_naive_enumeration():
    rng = random.Random(2027)
    specs = [GOLDEN, RAMP, ALT, sft(2, []), sft(2, ["000", "11"]), spacing("cofinite", [1, 2])]
    agreements = 0
    while agreements < 120:
        spec = rng.choice(specs)
        l = rng.choice([2, 3])
        u = _random_pattern(rng, spec, l, 4)
        v = _random_pattern(rng, spec, l, 3)
        from multishift.mult_shift import is_admissible

        if not (is_admissible(u) and is_admissible(v)):
            continue
        alpha = rng.choice([1, 3, 5, 7]) if l == 2 else rng.choice([1, 2, 4, 5])
        k = rng.randint(0, 2)
        try:
            expected = naive_exists_witness(spec, l, u, v, alpha, k)
        except ValueError:
            continue
        got = exists_witness_exact(spec, l, u, v, alpha, k)
        assert (got is not None) == expected, (spec, l, u.entries, v.entries, alpha, k)
        agreements += 1


# --- probes ---------------------------------------------------------------------


def test_probe_transitive_pinned():
    budget = SearchBudget(alpha_bound=5, k_bound=4, pair_length_bound=2)
    assert probe_transitive_X(RAMP, 2, budget).status == "witnessed"
    assert probe_transitive_X(sft(2, ["0"]), 2, budget).status == "witnessed"
    assert probe_transitive_X(ALT, 2, budget).status == "witnessed"


def test_probe_transitive_proves_obstruction():
    dead = sft(2, ["01", "11"])  # not extensible: nothing precedes a 1
    verdict = probe_transitive_X(dead, 2, SearchBudget(alpha_bound=5, k_bound=4, pair_length_bound=2))
    assert verdict.status == "proved_negative"
    assert verdict.proofs


def test_probe_directional_negative_with_parity_proof():
    budget = budget_from_env()
    verdict = probe_directional_q(ALT, 2, 2, block("0110", 2, ALT), block("1011", 2, ALT), budget)
    assert verdict.status == "proved_negative"
    assert verdict.k is None
    assert all(k in dict(verdict.per_k_failures) for k in range(budget.k_bound + 1))
    proof = verdict.proof
    assert proof["period"] == 2
    residues = proof["per_chain_feasible_residues"]
    assert set(residues[1]) & set(residues[3]) == set()


def test_probe_directional_ramp_alpha_one_blocks():
    verdict = probe_directional_q(RAMP, 2, 2, block("00", 2, RAMP), block("1", 2, RAMP), budget_from_env())
    assert verdict.status == "proved_negative"
    assert verdict.proof["alpha"] == 1


def test_probe_directional_witnessed():
    verdict = probe_directional_q(GOLDEN, 2, 2, block("1", 2, GOLDEN), block("1", 2, GOLDEN), budget_from_env())
    assert verdict.status == "witnessed"
    assert verdict.k is not None and verdict.k <= 4


def test_proved_negatives_hold_far_beyond_their_horizon():
    # the periodicity proof promises no depth at all; sweep well past it
    from multishift.oracle import _PairProbe

    cases = [
        (ALT, block("0110", 2, ALT), block("1011", 2, ALT)),
        (RAMP, block("00", 2, RAMP), block("1", 2, RAMP)),
        (ALT, block("01", 2, ALT), block("10", 2, ALT)),
    ]
    for spec, u, v in cases:
        verdict = probe_directional_q(spec, 2, 2, u, v, budget_from_env())
        if verdict.status != "proved_negative":
            continue
        alpha = verdict.proof["alpha"]
        horizon = verdict.proof["horizon"]
        probe = _PairProbe(spec, 2, u, v, 1)
        for k in range(horizon + 25):
            assert not probe.decide(alpha, k), (spec, alpha, k)


def test_probe_budget_monotone():
    small = SearchBudget(alpha_bound=3, k_bound=2, pair_length_bound=2)
    large = SearchBudget(alpha_bound=9, k_bound=6, pair_length_bound=2)
    for spec in (GOLDEN, ALT, RAMP):
        pats = [block(w, 2, spec) for w in sorted(enumerate_blocks(spec, 2, 2))]
        for u in pats[:3]:
            for v in pats[:3]:
                a = probe_directional_q(spec, 2, 2, u, v, small)
                b = probe_directional_q(spec, 2, 2, u, v, large)
                if a.status == "witnessed":
                    assert b.status == "witnessed"


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("MULTISHIFT_BUDGET", "alpha=5,k=3,len=2")
    assert budget_from_env() == SearchBudget(5, 3, 2)
    monkeypatch.setenv("MULTISHIFT_BUDGET", "bogus=1")
    with pytest.raises(ValueError):
        budget_from_env()


# --- families and campaign -------------------------------------------------------


def test_binary_family_size_and_dedupe():
    fam = binary_sft_family(2)
    assert len(fam) == 64
    dedup = dedupe_by_language(fam)
    assert len(dedup) < len(fam)
    keys = set()
    for spec in dedup:
        key = tuple(blocks(spec, t) for t in range(1, 5))
        assert key not in keys
        keys.add(key)


def test_random_family_is_seeded():
    assert random_sft_family(10, seed=5) == random_sft_family(10, seed=5)
    assert random_sft_family(10, seed=5) != random_sft_family(10, seed=6)


def test_campaign_paper_anchored_rows():
    report = campaign([RAMP, ALT, GOLDEN], [2], SearchBudget(alpha_bound=9, k_bound=8, pair_length_bound=4))
    assert not report.hard_contradictions
    assert report.certificate_failures == 0
    by_spec = {row.spec: row for row in report.rows}
    ramp_row = by_spec[RAMP]
    assert ramp_row.omega_verdicts["extensible"] is True
    assert ramp_row.omega_verdicts["transitive"] is False
    assert ramp_row.x_probes["transitive"] == "witnessed"
    assert ramp_row.x_probes["directional_l"] == "proved_negative"
    alt_row = by_spec[ALT]
    assert alt_row.omega_verdicts["transitive"] is True
    assert alt_row.omega_verdicts["weakly_mixing"] is False
    assert alt_row.x_probes["directional_l"] == "proved_negative"
    assert alt_row.x_probes["mixing"] == "proved_negative"
    golden_row = by_spec[GOLDEN]
    assert all(golden_row.omega_verdicts[p] for p in golden_row.omega_verdicts)
    assert golden_row.x_probes == {
        "transitive": "witnessed",
        "directional_l": "witnessed",
        "directional_l2": "witnessed",
        "mixing": "witnessed",
    }


def test_campaign_jsonl_and_table():
    report = campaign([GOLDEN], [2, 3], SearchBudget(alpha_bound=5, k_bound=4, pair_length_bound=2))
    lines = [ln for ln in report.to_jsonl().splitlines() if ln]
    assert len(lines) == 2
    import json

    row = json.loads(lines[0])
    assert row["spec"] == {"kind": "sft", "alphabet": 2, "forbidden": ["11"]}
    table = report.render_table()
    assert "sft[2]{11}" in table
    assert "hard=0" in table


def test_campaign_parallel_matches_serial():
    fam = binary_sft_family(2)[:10]
    budget = SearchBudget(alpha_bound=5, k_bound=4, pair_length_bound=2)
    serial = campaign(fam, [2], budget)
    parallel = campaign(fam, [2], budget, jobs=2)
    assert [r.to_dict() for r in serial.rows] == [r.to_dict() for r in parallel.rows]
