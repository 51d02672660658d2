"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines; the
suite is also part of the default `pytest` run.
"""

import math
import random
import time

import pytest

from soig.arrangements import PointClass, min_sum_general, min_sum_two_class
from soig.bounds import Annulus, Params, phi
from soig.cli import main
from soig.geometry import (
    build_sig,
    hex_interior_indices,
    hex_lattice,
    lattice_report,
    projection_lemma_slack,
    run_experiment,
)
from soig.proofcheck import sweep_p, verify_proof
from soig.arrangements import enumerate_compositions

P = Params(1.409)
Q = P.q
TOP = 1 + P.p
TOPQ = 1 + Q


def _report(name: str, detail: str) -> None:
    print(f"\nACCEPTANCE {name}: PASS  ({detail})")


# (d, r, R, printed) with >= 2 printed decimals, evaluated from each
# case's annuli; the 34.008 entries are the ones whose printed arguments
# carry the notational slip.
PHI_CATALOG = [
    (P.p, P.p, TOP, 31.2555),
    (Q, 1.0, 1.25, 32.98),
    (Q, 1.25, TOPQ, 21.31),
    (Q, 1.32, TOPQ, 22.77),
    (P.p, 1.32, TOP, 29.03),
    (Q, 1.0, 1.32, 31.18),
    (P.p, 1.25, TOP, 26.69),
    (Q, 1.23, TOPQ, 20.77),
    (P.p, 1.23, TOP, 25.90),
    (Q, 1.0, 1.23, 33.53),
    (P.p, 1.259, TOP, 27.03),
    (Q, 1.0, 1.259, 32.74),
    (Q, 1.2, TOPQ, 19.85),
    (P.p, 1.2, TOP, 24.57),
    (Q, 1.33, TOPQ, 22.93),
    (P.p, 1.33, TOP, 29.32),
    (Q, 1.21, TOPQ, 20.17),
    (P.p, 1.21, TOP, 25.03),
    (Q, 1.0, 1.21, 34.10),
    (P.p, 1.0, 1.88, 44.01),
    (P.p, 1.88, TOP, 34.008),
    (Q, 1.29, TOPQ, 22.21),
    (P.p, 1.29, TOP, 28.11),
    (Q, 1.22, TOPQ, 20.48),
    (P.p, 1.22, TOP, 25.47),
    (Q, 1.0, 1.22, 33.82),
    (P.p, 1.0, 1.85, 44.76),
    (P.p, 1.85, TOP, 34.008),
    (Q, 1.45, TOPQ, 23.95),
    (P.p, 1.45, TOP, 32.06),
    (Q, 1.24, TOPQ, 21.05),
    (P.p, 1.24, TOP, 26.30),
    (Q, 1.19, TOPQ, 19.50),
    (P.p, 1.19, TOP, 24.08),
    (Q, 1.2931, TOPQ, 22.2806),
    (P.p, 1.2931, TOP, 28.2107),
    (Q, 1.0, 1.2931, 31.8557),
    (P.p, 1.0, 1.59, 52.6013),
    (Q, 1.12, TOPQ, 16.40),
    (P.p, 1.12, TOP, 19.94),
]

# Sum terms printed with a single decimal; they match under truncation.
PHI_TRUNCATED_PRINTS = [
    (Q, 1.0, 1.19, 34.6, 1),
    (Q, 1.0, 1.24, 33.2, 1),
    (Q, 1.0, 1.45, 26.3, 1),
]


def test_criterion_1_phi_reproduction():
    start = time.monotonic()
    worst = 0.0
    for d, r, R, printed in PHI_CATALOG:
        value = phi(d, r, R)
        worst = max(worst, abs(value - printed))
        assert abs(value - printed) <= 0.02, (d, r, R, printed, value)
    for d, r, R, printed, decimals in PHI_TRUNCATED_PRINTS:
        value = phi(d, r, R)
        scale = 10.0**decimals
        assert int(value * scale) / scale == pytest.approx(printed, abs=1e-9)
    # One statement prints 21.59 for the bound at [1.259, 1+q]; the value
    # recomputes to 21.5362, matching the 21.53 used in its arithmetic.
    slipped = phi(Q, 1.259, TOPQ)
    assert abs(slipped - 21.59) > 0.02
    assert slipped == pytest.approx(21.536192548551583, abs=1e-9)
    assert int(slipped * 100) / 100 == pytest.approx(21.53, abs=1e-9)
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    _report("1 phi-reproduction",
            f"{len(PHI_CATALOG)} printed values within 0.02 deg, worst "
            f"|diff| {worst:.4f}, {elapsed * 1000:.0f} ms")


def test_criterion_2_full_proof_verification():
    start = time.monotonic()
    report = verify_proof(P)
    elapsed = time.monotonic() - start
    assert report.overall == "verified"
    assert all(r.verdict == "verified" for r in report.results)
    assert report.coverage.passed

    # Printed totals cross-check: most recompute within tolerance directly;
    # totals that were printed from truncated multiplicands are reproduced
    # by the truncated-arithmetic reconstruction; the two totals that match
    # neither are genuine print slips and must be flagged as such.
    known_slips = {"fact-7.1", "fact-9.3"}
    for r in report.results:
        if r.expected_margin is None:
            continue
        if r.claim_id in known_slips:
            assert r.margin_discrepancy
        else:
            assert not r.margin_discrepancy, r.claim_id

    def check(claim_id, printed_sum, precise):
        r = report.result(claim_id)
        if precise:
            assert abs(r.min_sum - printed_sum) <= 0.02, (claim_id, r.min_sum)
        else:
            assert abs(r.reconstruction - printed_sum) <= 0.02, (claim_id, r.reconstruction)

    check("fact-3.6.1", 360.23, precise=False)
    check("fact-8.1", 360.0015, precise=True)
    check("fact-8.2", 360.0482, precise=True)
    check("lemma-8.3-final", 360.0047, precise=True)
    check("fact-4.1", 361.09, precise=True)
    check("fact-6.1", 362.86, precise=False)
    assert elapsed < 60.0
    _report("2 full-proof-verification",
            f"{len(report.results)} claims verified, coverage over "
            f"{report.coverage.checked} pairs, {elapsed:.2f} s")


def test_criterion_3_sensitivity_sweep():
    start = time.monotonic()
    rows = sweep_p(1.408, 1.410, 0.001)
    elapsed = time.monotonic() - start
    assert [r.p for r in rows] == [1.408, 1.409, 1.410]
    assert [r.overall for r in rows] == ["refused", "verified", "refused"]
    assert rows[0].failing and rows[2].failing
    assert elapsed < 180.0
    _report("3 sensitivity",
            f"verified only at p=1.409; 1.408 fails {len(rows[0].failing)} claims, "
            f"1.410 fails {len(rows[2].failing)}; {elapsed:.2f} s")


def test_criterion_4_composition_enumeration():
    expected = {
        (6, 8): [(0, 2, 12), (1, 3, 10), (2, 4, 8), (3, 5, 6), (4, 6, 4), (5, 7, 2)],
        (4, 11): [(0, 7, 8), (1, 8, 6), (2, 9, 4), (3, 10, 2)],
        (5, 10): [(0, 5, 10), (1, 6, 8), (2, 7, 6), (3, 8, 4), (4, 9, 2)],
        (10, 2): [(8, 0, 4), (9, 1, 2)],
        (11, 2): [(9, 0, 4), (10, 1, 2)],
    }
    for (m, h), triples in expected.items():
        got = sorted(tuple(c) for c in enumerate_compositions(m, h))
        assert got == triples, (m, h, got)
    _report("4 composition-enumeration",
            "triple lists for (6,8), (4,11), (5,10), (10,2), (11,2) match exactly")


def test_criterion_5_oracle_equivalence():
    rng = random.Random(20240517)
    checked = 0
    while checked < 200:
        m = rng.randint(0, 6)
        h = rng.randint(0, 8)
        if m + h < 2:
            continue
        ones = PointClass(1.0, Annulus(rng.uniform(P.p, 2.2), TOP), m, "one")
        halves = PointClass(0.5, Annulus(rng.uniform(1.0, 1.5), TOP), h, "half")
        closed = min_sum_two_class(ones, halves, P)
        active = [c for c in (ones, halves) if c.count > 0]
        exhaustive = min_sum_general(active, P)
        assert abs(closed.min_sum - exhaustive.min_sum) <= 1e-9
        checked += 1
    _report("5 oracle-equivalence",
            "closed form equals exhaustive search on 200 random instances")


def test_criterion_6_geometric_property_suite():
    start = time.monotonic()
    for part in ("a", "b"):
        slack = projection_lemma_slack(100_000, seed=987 + ord(part), part=part)
        assert slack.min() >= -1e-9, (part, slack.min())
    # Branch consistency at r == R.
    for R in [1 + i / 20 for i in range(1, 40)]:
        for frac in (0.05, 0.25, 0.5, 0.75, 1.0):
            d = frac * R
            cos_branch = math.degrees(math.acos(1 - d * d / (2 * R * R)))
            assert phi(d, R, R) == pytest.approx(cos_branch, abs=1e-9)
    # Monotone in d (non-decreasing) and in R (non-increasing).
    for r in (1.0, 1.1, 1.3, 1.6):
        for R in (1.6, 1.9, 2.2, 2.409):
            prev = None
            for d in (0.3, 0.5, 0.71, 1.0, 1.2, 1.409):
                if not (0 <= R - d <= r <= R):
                    prev = None
                    continue
                val = phi(d, r, R)
                if prev is not None:
                    assert val >= prev - 1e-12
                prev = val
    for d in (0.5, 0.71, 1.0, 1.409):
        for r in (1.0, 1.2, 1.5):
            prev = None
            for R in (1.5, 1.7, 1.9, 2.1, 2.409):
                if not (0 <= R - d <= r <= R):
                    prev = None
                    continue
                val = phi(d, r, R)
                if prev is not None:
                    assert val <= prev + 1e-12
                prev = val
    elapsed = time.monotonic() - start
    _report("6 geometric-properties",
            f"2x100000 projection samples within slack; phi grids pass; {elapsed:.2f} s")


def test_criterion_7_empirical_theorem_check():
    start = time.monotonic()
    summary = run_experiment(trials=1000, n=50, seed=1234, params=P)
    assert summary["out_weight_bound_ok"], summary["max_out_weight"]
    assert summary["edge_bound_ok"], summary["max_edges_per_vertex"]
    assert summary["smallest_ball_degree_ok"], summary["max_smallest_ball_degree"]

    report = lattice_report(20, 20, 1.0, P)
    assert report["interior_degree_min"] == 18
    assert report["interior_degree_max"] == 18
    assert report["interior_edges_per_vertex"] == pytest.approx(9.0, abs=1e-12)
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    _report("7 empirical-theorem-check",
            f"1000 trials: max out-weight {summary['max_out_weight']:.2f} <= 14.5, "
            f"max smallest-ball degree {summary['max_smallest_ball_degree']} <= 29, "
            f"lattice interior degree 18, ratio 9; {elapsed:.1f} s")


def test_criterion_8_determinism(tmp_path):
    pairs = []
    for tag, args in {
        "verify": ["verify", "--format", "json"],
        "sweep": ["sweep", "--from", "1.408", "--to", "1.410", "--step", "0.001"],
        "experiment": ["experiment", "--trials", "25", "--n", "30", "--seed", "99",
                       "--format", "json"],
    }.items():
        a = tmp_path / f"{tag}_a.out"
        b = tmp_path / f"{tag}_b.out"
        assert main(args + ["--out", str(a), "--no-figures"]) in (0, 1)
        assert main(args + ["--out", str(b), "--no-figures"]) in (0, 1)
        assert a.read_bytes() == b.read_bytes(), tag
        pairs.append(tag)
    _report("8 determinism", f"byte-identical reruns for {', '.join(pairs)}")
