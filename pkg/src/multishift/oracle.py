"""Exact witness decision and the exhaustive cross-validation campaign.

``exists_witness_exact`` decides, with no search bound, whether a pair of
patterns admits a connecting point under a given multiplier: the merged
constraints split over independent chain fibers, and each fiber is a
finite reachability question in the base space.

Negative answers over the unbounded depth parameter k are proved, not
sampled: for a fixed multiplier residue the per-chain reachable state
sets are eventually periodic in k, so sweeping one full period past the
preperiod is conclusive.  This is the machinery that turns "no k up to
the budget" into "no k at all" whenever a periodicity obstruction exists.

The campaign runs every decider and constructor against the exact oracle
over a family of base spaces and reports any hard contradiction: a
witness where the decided properties forbid one, or a constructed
certificate that fails re-verification.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import mult_shift, shift_core, witness as witness_mod
from .errors import ConnectorNotFound, InadmissiblePattern, PreconditionFailed, UndecidableProperty
from .lambda_arith import a_set, decompose
from .mult_shift import Pattern, multiplier_constraints, parse_pattern
from .shift_core import PROPERTIES, SftSpec, ShiftSpec, SpacingSpec, sft, spec_to_dict
from .witness import WitnessCertificate, try_certificate

__all__ = [
    "CampaignReport",
    "CampaignRow",
    "DirectionalVerdict",
    "SearchBudget",
    "TransitiveVerdict",
    "binary_sft_family",
    "budget_from_env",
    "campaign",
    "dedupe_by_language",
    "exists_witness_exact",
    "probe_directional_q",
    "probe_transitive_X",
    "random_sft_family",
    "verify_certificate",
]


@dataclass(frozen=True)
class SearchBudget:
    """Bounds recorded in every probe verdict for reproducibility."""

    alpha_bound: int = 9
    k_bound: int = 8
    pair_length_bound: int = 4

    def __post_init__(self):
        if min(self.alpha_bound, self.k_bound, self.pair_length_bound) < 1:
            raise ValueError("budget bounds must be positive")


def budget_from_env() -> SearchBudget:
    """Default budget, overridable via MULTISHIFT_BUDGET='alpha=9,k=8,len=4'."""
    raw = os.environ.get("MULTISHIFT_BUDGET", "")
    kwargs = {}
    names = {"alpha": "alpha_bound", "k": "k_bound", "len": "pair_length_bound"}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        if key.strip() not in names:
            raise ValueError(f"unknown budget field {key!r} in MULTISHIFT_BUDGET")
        kwargs[names[key.strip()]] = int(val)
    return SearchBudget(**kwargs)


# ---------------------------------------------------------------------------
# exact decision core


def _pair_decision(omega: ShiftSpec, l: int, u: Pattern, v: Pattern, multiplier: int) -> bool:
    """Exact: does some point carry u at its support and v at the scaled support?"""
    mcs = multiplier_constraints(u, v, multiplier)
    if not mcs.satisfiable_form:
        return False
    return all(shift_core.partial_extendable(omega, cons) for _, cons in mcs.groups)


def exists_witness_exact(
    omega: ShiftSpec, l: int, u: Pattern, v: Pattern, alpha: int, k: int
) -> Optional[WitnessCertificate]:
    """Exact witness decision for the multiplier |u| * alpha * l**k.

    Returns a self-checked certificate when a witness exists, None when
    provably none does.  Exactness rests on fiber independence: the
    merged constraints decompose over chains, and each chain is decided
    by base-space reachability.
    """
    if alpha % l == 0:
        raise ValueError(f"alpha {alpha} is divisible by the base {l}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    mult_shift.require_admissible(u, "u")
    mult_shift.require_admissible(v, "v")
    multiplier = u.length * alpha * l**k
    return try_certificate(omega, l, u, v, alpha, k, multiplier, "oracle_search")


def verify_certificate(omega: ShiftSpec, l: int, cert: WitnessCertificate) -> tuple[bool, str]:
    """Re-check a certificate from scratch against the exact oracle.

    Re-derives the constraint groups from the certificate's patterns and
    multiplier, then checks the prefix satisfies them and is admissible.
    """
    try:
        u = parse_pattern(cert.u_literal, omega, base=l)
        v = parse_pattern(cert.v_literal, omega, base=l)
    except ValueError as exc:
        return False, f"unparseable patterns: {exc}"
    if cert.directional_base >= 2 and cert.multiplier != u.length * cert.alpha * cert.directional_base**cert.k:
        return False, "multiplier disagrees with (alpha, k, directional base)"
    mcs = multiplier_constraints(u, v, cert.multiplier)
    if not mcs.satisfiable_form:
        return False, f"constraints conflict at positions {[c[0] for c in mcs.conflicts]}"
    if mcs.groups != cert.constraints:
        return False, "constraint transcript disagrees with the patterns and multiplier"
    needed = max(rep * l ** (d - 1) for rep, cons in mcs.groups for d, _ in cons)
    if len(cert.prefix) < needed:
        return False, f"prefix length {len(cert.prefix)} does not cover position {needed}"
    for rep, cons in mcs.groups:
        for depth, sym in cons:
            pos = rep * l ** (depth - 1)
            if int(cert.prefix[pos - 1]) != sym:
                return False, f"prefix violates the constraint at position {pos}"
    if not mult_shift.is_admissible(Pattern.block(cert.prefix, l, omega)):
        return False, "prefix is not an admissible block"
    return True, "ok"


# ---------------------------------------------------------------------------
# fast per-pair probing with precomputed fiber structure


class _PairProbe:
    """Per-pair decision engine for multipliers |u| * alpha * (l**n)**k.

    Precomputes both fiber decompositions; each (alpha, k) query then
    costs one chain-class merge plus memoized reachability checks.
    """

    def __init__(self, omega: ShiftSpec, l: int, u: Pattern, v: Pattern, n: int = 1):
        self.omega = omega
        self.l = l
        self.n = n
        self.u = u
        self.v = v
        d = decompose(u.length, l)
        self.alpha1 = d.alpha
        self.k1 = d.k
        self.u_groups = u.fibers()
        self.v_groups = v.fibers()
        self._targets: dict[int, list[tuple[int, int, tuple[tuple[int, int], ...]]]] = {}

    def _target_layout(self, alpha: int) -> list[tuple[int, int, tuple[tuple[int, int], ...]]]:
        layout = self._targets.get(alpha)
        if layout is None:
            layout = []
            for j, cons in self.v_groups.items():
                d = decompose(self.alpha1 * alpha * j, self.l)
                layout.append((d.alpha, d.k + self.k1, cons))
            self._targets[alpha] = layout
        return layout

    def decide(self, alpha: int, k: int) -> bool:
        shift = self.n * k
        groups: dict[int, dict[int, int]] = {}
        for rep, cons in self.u_groups.items():
            groups[rep] = dict(cons)
        for target, base, cons in self._target_layout(alpha):
            bucket = groups.setdefault(target, {})
            for depth, sym in cons:
                pos = base + shift + depth
                old = bucket.get(pos)
                if old is not None and old != sym:
                    return False
                bucket[pos] = sym
        for cons in groups.values():
            if not shift_core.partial_extendable(self.omega, tuple(sorted(cons.items()))):
                return False
        return True

    def class_feasible(self, alpha: int, k: int) -> dict[int, bool]:
        """Per-chain feasibility at (alpha, k), for obstruction transcripts."""
        shift = self.n * k
        groups: dict[int, dict[int, int]] = {rep: dict(cons) for rep, cons in self.u_groups.items()}
        ok: dict[int, bool] = {}
        for target, base, cons in self._target_layout(alpha):
            bucket = groups.setdefault(target, {})
            conflict = False
            for depth, sym in cons:
                pos = base + shift + depth
                if bucket.get(pos, sym) != sym:
                    conflict = True
                bucket[pos] = sym
            if conflict:
                ok[target] = False
        for rep, bucket in groups.items():
            if rep not in ok:
                ok[rep] = shift_core.partial_extendable(self.omega, tuple(sorted(bucket.items())))
        return ok


# ---------------------------------------------------------------------------
# all-k infeasibility proofs (finite-type base spaces, power moduli)


def _states_after(g: shift_core.DeBruijnGraph, cmap: dict[int, int], through: int) -> frozenset[int]:
    """Window states at end-depth ``through`` consistent with the pins."""
    L = g.window
    states = set()
    for i, vtx in enumerate(g.vertices):
        if all(cmap.get(p + 1) in (None, int(vtx[p])) for p in range(L)):
            states.add(i)
    for t in range(L + 1, through + 1):
        req = cmap.get(t)
        states = {d for s in states for sym, d in g.out[s] if req is None or sym == req}
        if not states:
            break
    return frozenset(states)


def _orbit(g: shift_core.DeBruijnGraph, start: frozenset[int]) -> tuple[int, int]:
    """Preperiod and period of the unconstrained-step state-set sequence."""
    seen = {start: 0}
    cur = start
    idx = 0
    while True:
        cur = frozenset(d for s in cur for _, d in g.out[s])
        idx += 1
        if cur in seen:
            return seen[cur], idx - seen[cur]
        seen[cur] = idx


def _forall_k_proof(probe: _PairProbe, alpha: int) -> Optional[dict]:
    """Proof that no depth k admits a witness at this multiplier residue, or None.

    Only for finite-type base spaces: per chain, the state sets reachable
    after the static constraints evolve periodically under unconstrained
    steps, so feasibility in k is eventually periodic with period
    dividing the orbit period.  An infeasible sweep over one full period
    past every preperiod is therefore conclusive for all k.
    """
    omega = probe.omega
    if not isinstance(omega, SftSpec):
        return None
    g = shift_core.build_graph(omega)
    if not g.vertices:
        return None
    n = probe.n
    k_star = 0
    periods = []
    for target, base, cons in probe._target_layout(alpha):
        static = dict(probe.u_groups.get(target, ()))
        static_max = max(list(static) + [g.window])
        d_min = min(d for d, _ in cons)
        start = _states_after(g, static, static_max)
        if not start:
            return None  # static side already unsatisfiable: caller's problem
        preperiod, period = _orbit(g, start)
        # least k with the dynamic block strictly past the static part and the orbit settled
        need = static_max + preperiod + 1
        k_min = max(0, -((base + d_min - need) // n))
        k_star = max(k_star, k_min)
        periods.append(period // math.gcd(n, period))
    if not periods:
        return None
    cycle = math.lcm(*periods)
    horizon = k_star + cycle
    for k in range(horizon):
        if probe.decide(alpha, k):
            return None
    residue_table: dict[int, list[int]] = {}
    for k in range(k_star, k_star + cycle):
        for rep, ok in probe.class_feasible(alpha, k).items():
            if ok:
                residue_table.setdefault(rep, []).append(k % cycle)
    return {
        "alpha": alpha,
        "modulus_step": n,
        "horizon": horizon,
        "period": cycle,
        "periodic_from_k": k_star,
        "per_chain_feasible_residues": {rep: sorted(set(res)) for rep, res in residue_table.items()},
        "statement": (
            f"per-chain feasibility is periodic in k with period {cycle} beyond k={k_star}; "
            f"no k < {horizon} is feasible, hence no k at all"
        ),
    }


# ---------------------------------------------------------------------------
# probes


@dataclass(frozen=True)
class DirectionalVerdict:
    """Outcome of the one-pair directional probe at modulus q."""

    q: int
    u_literal: str
    v_literal: str
    status: str  # witnessed | inconclusive_negative | proved_negative
    k: Optional[int]
    per_k_failures: tuple[tuple[int, int], ...]  # (k, first failing alpha)
    proof: Optional[dict]
    budget: SearchBudget


def probe_directional_q(
    omega: ShiftSpec, l: int, q: int, u: Pattern, v: Pattern, budget: SearchBudget
) -> DirectionalVerdict:
    """Search for one depth k valid for every multiplier residue up to the budget.

    Reports the first good k, or the per-k failing residues; a failure is
    upgraded from inconclusive to proved when some residue carries an
    all-k periodicity obstruction.
    """
    mult_shift.require_admissible(u, "u")
    mult_shift.require_admissible(v, "v")
    if q < 2:
        raise ValueError("modulus must be >= 2")
    n = _power_of(q, l)
    probe = _PairProbe(omega, l, u, v, n) if n else None
    alphas = a_set(q, budget.alpha_bound)
    failures = []
    for k in range(budget.k_bound + 1):
        bad = None
        for alpha in alphas:
            ok = (
                probe.decide(alpha, k)
                if probe is not None
                else _pair_decision(omega, l, u, v, u.length * alpha * q**k)
            )
            if not ok:
                bad = alpha
                break
        if bad is None:
            return DirectionalVerdict(
                q, mult_shift.format_pattern(u), mult_shift.format_pattern(v),
                "witnessed", k, tuple(failures), None, budget,
            )
        failures.append((k, bad))
    proof = None
    if probe is not None:
        always_failing = [a for a in alphas if all(not probe.decide(a, k) for k in range(budget.k_bound + 1))]
        for alpha in always_failing:
            proof = _forall_k_proof(probe, alpha)
            if proof is not None:
                break
    status = "proved_negative" if proof is not None else "inconclusive_negative"
    return DirectionalVerdict(
        q, mult_shift.format_pattern(u), mult_shift.format_pattern(v),
        status, None, tuple(failures), proof, budget,
    )


def _power_of(q: int, l: int) -> Optional[int]:
    """n with q == l**n, else None."""
    n = 0
    while q > 1 and q % l == 0:
        q //= l
        n += 1
    return n if q == 1 and n >= 1 else None


@dataclass(frozen=True)
class TransitiveVerdict:
    """Outcome of the all-pairs connection probe."""

    status: str  # witnessed | inconclusive_negative | proved_negative
    pairs_checked: int
    witnessed: int
    failing: tuple[tuple[str, str], ...]
    proofs: tuple[dict, ...]
    budget: SearchBudget


def _alpha_k_order(l: int, budget: SearchBudget) -> list[tuple[int, int]]:
    cands = [
        (alpha, k)
        for alpha in a_set(l, budget.alpha_bound)
        for k in range(budget.k_bound + 1)
    ]
    cands.sort(key=lambda ak: (ak[0] * l ** ak[1], ak[1]))
    return cands


def x_block_patterns(omega: ShiftSpec, l: int, max_len: int) -> list[Pattern]:
    """All admissible blocks of the multiplicative subshift up to a length."""
    out = []
    for t in range(1, max_len + 1):
        for w in sorted(mult_shift.enumerate_blocks(omega, l, t)):
            out.append(Pattern.block(w, l, omega))
    return out


def probe_transitive_X(omega: ShiftSpec, l: int, budget: SearchBudget) -> TransitiveVerdict:
    """For every block pair up to the budgeted length, search for some witness.

    Unwitnessed pairs leave the verdict inconclusive (the multiplier space
    is unbounded) unless a placement obstruction proves no multiplier can
    ever work: some fiber of v has a bounded placement horizon below the
    least chain offset any multiplier produces.
    """
    pats = x_block_patterns(omega, l, budget.pair_length_bound)
    order = _alpha_k_order(l, budget)
    failing = []
    proofs = []
    witnessed = 0
    for u in pats:
        for v in pats:
            probe = _PairProbe(omega, l, u, v, 1)
            if any(probe.decide(alpha, k) for alpha, k in order):
                witnessed += 1
                continue
            failing.append((mult_shift.format_pattern(u), mult_shift.format_pattern(v)))
            proof = _never_witnessable_proof(omega, l, u, v)
            if proof is not None:
                proofs.append(proof)
    if not failing:
        status = "witnessed"
    elif proofs:
        status = "proved_negative"
    else:
        status = "inconclusive_negative"
    return TransitiveVerdict(status, len(pats) ** 2, witnessed, tuple(failing), tuple(proofs), budget)


def _never_witnessable_proof(omega: ShiftSpec, l: int, u: Pattern, v: Pattern) -> Optional[dict]:
    """Placement obstruction valid for every (alpha, k), or None.

    Every multiplier lands the fiber of v's chain j at an offset of at
    least k1 + powerl(alpha1 * j); if that fiber's constraints only fit at
    strictly smaller offsets (offsets form a downward-closed set), no
    multiplier works.
    """
    d = decompose(u.length, l)
    for j, cons in v.fibers().items():
        e_min = d.k + decompose(d.alpha * j, l).k
        shifted = tuple((e_min + depth, sym) for depth, sym in cons)
        if not shift_core.partial_extendable(omega, shifted):
            return {
                "v_chain": j,
                "least_offset": e_min,
                "statement": (
                    f"the fiber of v on chain {j} cannot be placed at offset {e_min} or beyond, "
                    f"but every multiplier lands it at offset >= {e_min}"
                ),
            }
    return None


# ---------------------------------------------------------------------------
# campaign


@dataclass
class CampaignRow:
    spec: ShiftSpec
    l: int
    omega_verdicts: dict
    x_probes: dict
    checks: dict
    budget: SearchBudget
    certificates_checked: int = 0
    certificate_failures: int = 0
    hard: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "spec": spec_to_dict(self.spec),
            "l": self.l,
            "omega": self.omega_verdicts,
            "x_probes": self.x_probes,
            "checks": self.checks,
            "budget": vars(self.budget),
            "certificates_checked": self.certificates_checked,
            "certificate_failures": self.certificate_failures,
            "hard": self.hard,
            "notes": self.notes,
        }


@dataclass
class CampaignReport:
    rows: list
    budget: SearchBudget
    elapsed: float

    @property
    def hard_contradictions(self) -> list:
        out = []
        for row in self.rows:
            for item in row.hard:
                out.append({"spec": spec_to_dict(row.spec), "l": row.l, **item})
        return out

    @property
    def certificates_checked(self) -> int:
        return sum(r.certificates_checked for r in self.rows)

    @property
    def certificate_failures(self) -> int:
        return sum(r.certificate_failures for r in self.rows)

    def to_jsonl(self) -> str:
        import json

        return "\n".join(json.dumps(r.to_dict(), sort_keys=True) for r in self.rows) + "\n"

    def render_table(self) -> str:
        def tf(x):
            return "?" if x is None else ("T" if x else "F")

        header = (
            f"{'base space':<34} {'l':>2} | {'ext':>3} {'trn':>3} {'wm':>3} {'mix':>3} | "
            f"{'X:trn':>6} {'X:dir':>6} {'X:dir2':>6} {'X:mix':>6} | {'equivalences':<22} certs"
        )
        lines = [header, "-" * len(header)]
        short = {"witnessed": "T", "inconclusive_negative": "F?", "proved_negative": "F!", "empty": "-"}
        verdict_mark = {"pass": "EQ", "inconclusive": "?", "fail": "X"}
        for row in self.rows:
            spec_txt = _spec_label(row.spec)
            om = row.omega_verdicts
            checks = ",".join(f"{k[:4]}={verdict_mark.get(v, v)}" for k, v in row.checks.items())
            lines.append(
                f"{spec_txt:<34} {row.l:>2} | {tf(om.get('extensible')):>3} {tf(om.get('transitive')):>3} "
                f"{tf(om.get('weakly_mixing')):>3} {tf(om.get('mixing')):>3} | "
                f"{short.get(row.x_probes.get('transitive'), '?'):>6} "
                f"{short.get(row.x_probes.get('directional_l'), '?'):>6} "
                f"{short.get(row.x_probes.get('directional_l2'), '?'):>6} "
                f"{short.get(row.x_probes.get('mixing'), '?'):>6} | {checks:<22} "
                f"{row.certificates_checked}({row.certificate_failures})"
            )
        lines.append("-" * len(header))
        lines.append(
            f"rows={len(self.rows)} certificates={self.certificates_checked} "
            f"cert_failures={self.certificate_failures} hard={len(self.hard_contradictions)}"
        )
        return "\n".join(lines) + "\n"


def _spec_label(spec: ShiftSpec) -> str:
    if isinstance(spec, SftSpec):
        forb = ",".join(spec.forbidden) if spec.forbidden else "-"
        return f"sft[{spec.alphabet}]{{{forb}}}"
    return f"spacing[{spec.declared_class}]{{{','.join(map(str, spec.complement))}}}"


def binary_sft_family(max_word_len: int = 2, alphabet: int = 2) -> list[SftSpec]:
    """Every finite-type spec over the alphabet with forbidden words up to a length."""
    digits = "0123456789"[:alphabet]
    pool = []
    for t in range(1, max_word_len + 1):
        pool.extend("".join(p) for p in itertools.product(digits, repeat=t))
    out = []
    for r in range(len(pool) + 1):
        for combo in itertools.combinations(pool, r):
            out.append(sft(alphabet, combo))
    return out


def random_sft_family(count: int, seed: int, max_word_len: int = 3, alphabet: int = 2) -> list[SftSpec]:
    """Seeded random forbidden sets with words up to a length."""
    digits = "0123456789"[:alphabet]
    pool = []
    for t in range(1, max_word_len + 1):
        pool.extend("".join(p) for p in itertools.product(digits, repeat=t))
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = rng.randint(1, 4)
        out.append(sft(alphabet, rng.sample(pool, size)))
    return out


def dedupe_by_language(specs: Sequence[SftSpec]) -> list[SftSpec]:
    """Keep one spec per language (languages compared on words up to memory + 2)."""
    depth = max((s.memory for s in specs), default=1) + 2
    seen = {}
    for s in specs:
        key = tuple(shift_core.blocks(s, t) for t in range(1, depth + 1))
        if key not in seen:
            seen[key] = s
    return list(seen.values())


def _subset_pairs(pats: Sequence[Pattern], cap: int = 6) -> list[tuple[Pattern, Pattern]]:
    small = [p for p in pats if p.length <= 2]
    return list(itertools.product(small, small))[:cap]


def _campaign_row(spec: ShiftSpec, l: int, budget: SearchBudget) -> CampaignRow:
    omega_verdicts = {}
    for prop in PROPERTIES:
        try:
            omega_verdicts[prop] = shift_core.decide(spec, prop).value
        except UndecidableProperty:
            omega_verdicts[prop] = None
    row = CampaignRow(spec, l, omega_verdicts, {}, {}, budget)

    if not shift_core.blocks(spec, 1):
        row.notes.append("empty language; every check is vacuous")
        row.x_probes = {"transitive": "empty", "directional_l": "empty", "directional_l2": "empty", "mixing": "empty"}
        row.checks = {"transitivity": "pass", "directional": "pass", "mixing": "pass"}
        return row

    pats = x_block_patterns(spec, l, budget.pair_length_bound)
    _check_transitivity(row, spec, l, budget, pats)
    _check_directional(row, spec, l, budget, pats)
    _check_mixing(row, spec, l, budget, pats)
    return row


def _record_cert(row: CampaignRow, spec: ShiftSpec, l: int, cert: WitnessCertificate, where: str) -> None:
    ok, reason = verify_certificate(spec, l, cert)
    row.certificates_checked += 1
    if not ok:
        row.certificate_failures += 1
        row.hard.append({"check": where, "kind": "certificate_failed_verification", "reason": reason})


def _check_transitivity(row, spec, l, budget, pats) -> None:
    extensible = row.omega_verdicts["extensible"]
    verdict = probe_transitive_X(spec, l, budget)
    row.x_probes["transitive"] = verdict.status
    if extensible:
        if verdict.status != "witnessed":
            row.hard.append(
                {
                    "check": "transitivity",
                    "kind": "predicted_connection_missing",
                    "failing_pairs": list(verdict.failing)[:5],
                }
            )
            row.checks["transitivity"] = "fail"
            return
        for u, v in _subset_pairs(pats):
            cert = witness_mod.witness_transitive(spec, l, u, v, k=0)
            _record_cert(row, spec, l, cert, "transitivity")
        row.checks["transitivity"] = "pass"
        return
    # predicted no uniform connections: exhibit a pattern pair no multiplier connects
    refutation = _nonextensible_refutation(spec, l)
    if refutation is None:
        row.checks["transitivity"] = "inconclusive"
        row.notes.append("no placement obstruction found within the window graph")
        return
    u, v, word, offset = refutation
    probe = _PairProbe(spec, l, u, v, 1)
    found = [(a, k) for a, k in _alpha_k_order(l, budget) if probe.decide(a, k)]
    if found:
        row.hard.append(
            {
                "check": "transitivity",
                "kind": "witness_where_forbidden",
                "pair": (mult_shift.format_pattern(u), mult_shift.format_pattern(v)),
                "found": found[:3],
            }
        )
        row.checks["transitivity"] = "fail"
        return
    proof = _never_witnessable_proof(spec, l, u, v)
    if proof is None:
        row.checks["transitivity"] = "inconclusive"
    else:
        row.checks["transitivity"] = "pass"
        row.notes.append(
            f"word {word!r} admits no placement at offset {offset} or beyond; "
            f"its chain lift rules out every multiplier"
        )


def _nonextensible_refutation(spec: ShiftSpec, l: int):
    """Pattern pair that no multiplier connects, built from a non-extensible word."""
    if not isinstance(spec, SftSpec):
        return None
    g = shift_core.build_graph(spec)
    if not g.vertices:
        return None
    cyc = shift_core._cycle_vertices(g)
    reach = shift_core._reachable_from(g, cyc)
    dead = [i for i in range(len(g.vertices)) if i not in reach]
    if not dead:
        return None
    word = g.vertices[dead[0]]
    offset = None
    for m in range(1, len(g.vertices) + 2):
        cons = [(m + i + 1, int(c)) for i, c in enumerate(word)]
        if not shift_core.partial_extendable(spec, cons):
            offset = m
            break
    if offset is None:
        return None
    u_len = l**offset
    fibers = {}
    for rep in mult_shift.class_reps(u_len, l):
        fibers[rep] = shift_core.least_word(spec, mult_shift.chain_length(rep, u_len, l))
    u = Pattern.block(mult_shift.assemble(fibers, l, u_len), l, spec)
    v_len = l ** (len(word) - 1)
    vfibers = {}
    for rep in mult_shift.class_reps(v_len, l):
        t = mult_shift.chain_length(rep, v_len, l)
        vfibers[rep] = word if rep == 1 else shift_core.least_word(spec, t)
    v = Pattern.block(mult_shift.assemble(vfibers, l, v_len), l, spec)
    return u, v, word, offset


def _check_directional(row, spec, l, budget, pats) -> None:
    wm = row.omega_verdicts["weakly_mixing"]
    for label, q, n in (("directional_l", l, 1), ("directional_l2", l * l, 2)):
        statuses = []
        first_negative = None
        for u, v in itertools.product(pats, pats):
            verdict = probe_directional_q(spec, l, q, u, v, budget)
            statuses.append(verdict.status)
            if verdict.status != "witnessed" and first_negative is None:
                first_negative = verdict
        if all(s == "witnessed" for s in statuses):
            row.x_probes[label] = "witnessed"
        elif any(s == "proved_negative" for s in statuses):
            row.x_probes[label] = "proved_negative"
        else:
            row.x_probes[label] = "inconclusive_negative"
        if wm:
            if first_negative is not None:
                rescued = _rescue_directional(spec, l, n, first_negative)
                if rescued:
                    row.notes.append(f"{label}: a pair needed a depth step beyond the budget")
                else:
                    row.hard.append(
                        {
                            "check": "directional",
                            "kind": "predicted_uniform_depth_missing",
                            "q": q,
                            "pair": (first_negative.u_literal, first_negative.v_literal),
                        }
                    )
                    row.checks["directional"] = "fail"
                    return
        else:
            if row.x_probes[label] == "witnessed":
                row.notes.append(f"{label}: every budgeted pair connected; counterexample outside the family")
    if wm:
        for u, v in _subset_pairs(pats):
            for n in (1, 2):
                try:
                    dw = witness_mod.witness_directional_power(spec, l, n, u, v, budget.alpha_bound)
                except ConnectorNotFound:
                    row.hard.append(
                        {"check": "directional", "kind": "cover_connector_missing", "n": n,
                         "pair": (mult_shift.format_pattern(u), mult_shift.format_pattern(v))}
                    )
                    row.checks["directional"] = "fail"
                    return
                for cert in dw.certificates:
                    _record_cert(row, spec, l, cert, "directional")
        row.checks["directional"] = "pass"
    else:
        if row.x_probes["directional_l"] == "proved_negative" or row.x_probes["directional_l2"] == "proved_negative":
            row.checks["directional"] = "pass"
        else:
            row.checks["directional"] = "inconclusive"


def _rescue_directional(spec, l, n, verdict: DirectionalVerdict) -> bool:
    """Check whether a predicted uniform depth exists beyond the probe budget."""
    try:
        u = parse_pattern(verdict.u_literal, spec, base=l)
        v = parse_pattern(verdict.v_literal, spec, base=l)
        witness_mod.witness_directional_power(spec, l, n, u, v, alpha_bound=verdict.budget.alpha_bound)
        return True
    except (ConnectorNotFound, PreconditionFailed, InadmissiblePattern):
        return False


def _check_mixing(row, spec, l, budget, pats) -> None:
    mixing = row.omega_verdicts["mixing"]
    if mixing:
        threshold = shift_core.mixing_gap_index(spec, budget.pair_length_bound)
        window = [
            (alpha, k)
            for alpha in a_set(l, budget.alpha_bound)
            for k in range(budget.k_bound + 1)
            if l**threshold <= alpha * l**k <= 8 * l**threshold
        ]
        if not window:
            row.x_probes["mixing"] = "inconclusive_negative"
            row.checks["mixing"] = "inconclusive"
            row.notes.append(f"mixing window above l**{threshold} is out of budget reach")
            return
        for u, v in itertools.product(pats, pats):
            probe = _PairProbe(spec, l, u, v, 1)
            bad = [(a, k) for a, k in window if not probe.decide(a, k)]
            if bad:
                row.hard.append(
                    {
                        "check": "mixing",
                        "kind": "threshold_multiplier_unwitnessed",
                        "pair": (mult_shift.format_pattern(u), mult_shift.format_pattern(v)),
                        "threshold": threshold,
                        "failing": bad[:3],
                    }
                )
                row.x_probes["mixing"] = "inconclusive_negative"
                row.checks["mixing"] = "fail"
                return
        row.x_probes["mixing"] = "witnessed"
        for u, v in _subset_pairs(pats):
            mw = witness_mod.witness_mixing(spec, l, u, v)
            picks = [window[0], window[len(window) // 2], window[-1]]
            for alpha, k in picks:
                if alpha * l**k >= l**mw.threshold:
                    _record_cert(row, spec, l, mw.build(alpha, k), "mixing")
        row.checks["mixing"] = "pass"
        return
    # predicted not mixing: find multipliers past every threshold that fail
    proof = None
    for u, v in itertools.product(pats, pats):
        probe = _PairProbe(spec, l, u, v, 1)
        if all(probe.decide(a, k) for a, k in _alpha_k_order(l, budget)):
            continue
        for alpha in a_set(l, budget.alpha_bound):
            if all(not probe.decide(alpha, k) for k in range(budget.k_bound + 1)):
                proof = _forall_k_proof(probe, alpha)
                if proof is not None:
                    break
        if proof is not None:
            break
    if proof is not None:
        row.x_probes["mixing"] = "proved_negative"
        row.checks["mixing"] = "pass"
        row.notes.append("arbitrarily large multipliers fail by the periodicity obstruction")
    else:
        row.x_probes["mixing"] = "inconclusive_negative"
        row.checks["mixing"] = "inconclusive"
        row.notes.append(
            "no counterexample multiplier inside the budget and no periodicity refutation available"
        )


def campaign(
    family: Sequence[ShiftSpec],
    l_values: Sequence[int],
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
) -> CampaignReport:
    """Cross-validate deciders, constructors, and the oracle over a spec family.

    Finite-type specs are deduplicated by language first.  Rows are
    independent and may run in parallel; the report order is
    deterministic either way.
    """
    budget = budget or budget_from_env()
    sfts = [s for s in family if isinstance(s, SftSpec)]
    others = [s for s in family if not isinstance(s, SftSpec)]
    specs = dedupe_by_language(sfts) + others
    tasks = [(spec, l) for spec in specs for l in l_values]
    start = time.monotonic()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, [(spec, l, budget) for spec, l in tasks], chunksize=8))
    else:
        rows = [_campaign_row(spec, l, budget) for spec, l in tasks]
    elapsed = time.monotonic() - start
    return CampaignReport(rows, budget, elapsed)


def _row_task(args) -> CampaignRow:
    spec, l, budget = args
    return _campaign_row(spec, l, budget)
