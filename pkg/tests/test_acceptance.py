"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL - detail`` line.  Run the
file directly (``python3 tests/test_acceptance.py``) for just those lines.
"""
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from isodense import order, props, topo  # noqa: E402
from isodense.documents import load  # noqa: E402
from isodense.errors import UndefinedIntersection  # noqa: E402
from isodense.ground import GroundSet, SetFamily  # noqa: E402
from isodense.theorems import HOLDS, VIOLATED, InstanceStream, check, search_counterexample, sweep  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

FAMILY_STATEMENTS = ["P3.3", "P3.4", "T3.6", "T3.7", "C3.8", "T3.9", "T3.10", "C3.11", "T3.13"]
SPACE_STATEMENTS = ["P2.6", "P2.7", "P4.4", "T4.7", "T4.8", "T4.9", "C4.12", "P5.3", "P5.4", "C5.5", "C5.6"]


class Criterion:
    """Collects named checks; the criterion passes when all of them do."""

    def __init__(self):
        self.failed = []
        self.notes = []

    def expect(self, name, ok, note=None):
        if not ok:
            self.failed.append(name)
        if note:
            self.notes.append(note)
        return ok


def oracle_resolvable(t):
    return oracles.is_resolvable(oracles.to_family(t.opens), frozenset(range(t.n)))


def criterion_1(c):
    doc = load(FIXTURES / "four_point_family.json")
    g, A = doc.ground, doc.family
    mu = topo.mu_of_family(A, g).opens
    mt = topo.mu_tilde_of_family(A, g).opens
    q_A = order.quasiorder_from_family(A, g)
    q_mt = order.quasiorder_from_family(mt, g)
    tau_A = order.specialization_topology(q_A)
    tau_mt = order.specialization_topology(q_mt)

    def ups(q):
        return " ".join(g.format(order.up_set(q, x)) for x in range(g.size))

    c.expect("(i) mu", mu.format(g) == "{{}, {1,2}, {2,3,4}, {1,2,3,4}}")
    c.expect("(i) mu_tilde", mt.format(g) == "{{}, {1,2}, {1,2,3}, {1,2,4}, {2,3,4}, {1,2,3,4}}")
    c.expect("(ii)", ups(q_A) == "{1,2} {2} {2,3,4} {2,3,4}")
    c.expect("(iii)", tau_A == mu | [g.subset(["2"])])
    c.expect("(iv)", ups(q_mt) == "{1,2} {2} {2,3} {2,4}")
    c.expect("(v)", tau_mt == mt | [g.subset(["2"]), g.subset(["2", "3"]), g.subset(["2", "4"])])
    structures = {"mu[A]": mu, "mu_tilde[A]": mt, "tau[<=A]": tau_A, "tau[<=mu_tilde[A]]": tau_mt}
    for name, fam in structures.items():
        t = topo.GenTopology(g, fam, validate=False)
        pair = props.resolving_pair(t)
        # the oracle decides independently of the library search
        assert (pair is not None) == oracle_resolvable(t)
        if pair is not None:
            d, e = pair
            c.expect(f"(vi) {name} irresolvable", False,
                     f"{name} is resolvable: {g.format(d)} and {g.format(e)} are disjoint and dense")
        else:
            c.expect(f"(vi) {name} irresolvable", True)
    passed = [k for k in ("(i) mu", "(i) mu_tilde", "(ii)", "(iii)", "(iv)", "(v)") if k not in c.failed]
    c.notes.insert(0, "byte-exact: " + ", ".join(passed))


def criterion_2(c):
    t = load(FIXTURES / "strong_not_topology.json").space()
    do = topo.dense_open_family(t)
    c.expect("DO + {} = mu", do | [0] == t.opens)
    c.expect("not a topology", not topo.is_topology(t.opens, t.carrier))
    pair = props.resolving_pair(t)
    c.expect("resolvable", pair is not None)
    if pair:
        d, e = pair
        c.expect("witness", d & e == 0 and t.is_dense(d) and t.is_dense(e),
                 f"witness {t.carrier.format(d)}/{t.carrier.format(e)}")


def criterion_3(c):
    t = load(FIXTURES / "dense_open_core.json").space()
    g = t.carrier
    c.expect("I(D) = {}", topo.cap_I(topo.dense_family(t)) == 0)
    c.expect("I(DO) = {1,2}", topo.cap_I(topo.dense_open_family(t)) == g.subset(["1", "2"]))
    c.expect("Iso = {}", t.isolated == 0)
    r = check("P4.4", t)
    c.expect("P4.4(i)", r.verdict == HOLDS and r.condition("(i) I(D) = Iso and I(D) is open"))
    c.notes.append("I(D)={}, I(DO)={1,2}, Iso={}, P4.4 holds")


def criterion_4(c):
    for n in (2, 3, 4):
        doc = load(FIXTURES / f"singleton_family_n{n}.json")
        g, A = doc.ground, doc.family
        x0 = g.subset(["1"])
        mu = topo.mu_of_family(A, g).opens
        c.expect(f"n={n} mu not a topology", not topo.is_topology(mu, g))
        tau = order.specialization_topology(order.quasiorder_from_family(A, g))
        c.expect(f"n={n} tau", tau == SetFamily([0, g.full, x0]))
        c.expect(f"n={n} mu_tilde", topo.mu_tilde_of_family(A, g).opens == topo.superset_topology(x0, g).opens)
        c.expect(f"n={n} T3.10", check("T3.10", A, g).verdict == HOLDS)
        c.expect(f"n={n} converse probe", check("C3.11-converse", A, g).verdict == VIOLATED)
    c.notes.append("n=2,3,4")


def criterion_5(c):
    for n in (1, 2, 3, 4):
        g = GroundSet.of_size(n)
        empty = topo.GenTopology(g, [0])
        power = SetFamily.powerset(n)
        c.expect(f"n={n} D", topo.dense_family(empty) == power)
        c.expect(f"n={n} ND", topo.nowhere_dense_family(empty) == power)
        q_D = order.quasiorder_from_family(topo.dense_family(empty), g)
        c.expect(f"n={n} tau[<=D] discrete", order.specialization_topology(q_D) == power)
        do = topo.dense_open_family(empty)
        mt = topo.mu_tilde_of_family(do, g).opens
        tau = order.specialization_topology(order.quasiorder_from_family(mt, g))
        c.expect(f"n={n} tau[<=mu_tilde[DO]] indiscrete", tau == SetFamily([0, g.full]))
        try:
            topo.cap_I(do)
            c.expect(f"n={n} I(DO) undefined", False)
        except UndefinedIntersection:
            pass
        if n >= 2:
            ind = topo.indiscrete_topology(g)
            c.expect(f"n={n} D indiscrete", topo.dense_family(ind) == SetFamily(range(1, 1 << n)))
            c.expect(f"n={n} resolvable", props.is_resolvable(ind))
            c.expect(f"n={n} I(D)", topo.cap_I(topo.dense_family(ind)) == 0)
            c.expect(f"n={n} I(DO)", topo.cap_I(topo.dense_open_family(ind)) == g.full)
    c.notes.append("n=1..4")


def criterion_6(c):
    start = time.perf_counter()
    counts = []
    for n in (1, 2, 3, 4):
        results = sweep(FAMILY_STATEMENTS, InstanceStream.exhaustive_families(n))
        counts.append(results["T3.6"].instances)
        for sid, summary in results.items():
            c.expect(f"{sid} n={n}", not summary.violations)
    elapsed = time.perf_counter() - start
    c.expect("instance counts", counts == [2, 14, 254, 65534])
    c.expect("under 60 s", elapsed < 60)
    c.notes.append(f"instances {counts}, zero violations, {elapsed:.1f} s")


def criterion_7(c):
    start = time.perf_counter()
    streams = [InstanceStream.exhaustive_gentopos(n) for n in (0, 1, 2, 3)]
    streams += [InstanceStream.random(n, seed=0, count=10_000) for n in (4, 5)]
    total = 0
    for stream in streams:
        results = sweep(SPACE_STATEMENTS, stream)
        total += results["P2.6"].instances
        for sid, summary in results.items():
            c.expect(f"{sid} {stream.mode} n={stream.n}", not summary.violations)
    elapsed = time.perf_counter() - start
    c.expect("under 60 s", elapsed < 60)
    c.notes.append(f"{total} instances, zero violations, {elapsed:.1f} s")


def criterion_8(c):
    found = []
    for sid in ("T3.10-nohyp", "T4.8-nohyp", "P5.4-nohyp"):
        r = search_counterexample(sid, 2)
        c.expect(sid, r is not None and r.verdict == VIOLATED)
        if r is not None:
            found.append(f"{sid} at n={len(r.instance['ground'])}")
    c.notes.append(", ".join(found))


def criterion_9(c):
    for n in range(4):
        for q in order.enumerate_quasiorders(n):
            tau = order.specialization_topology(q)
            c.expect(f"n={n} brute force", tau == order.specialization_topology_bruteforce(q))
            c.expect(f"n={n} oracle", oracles.to_family(tau) == oracles.increasing_sets(set(q.pairs()), range(n)))
    rng = random.Random(2024)
    for _ in range(1000):
        q = order.random_quasiorder(4, rng)
        tau = order.specialization_topology(q)
        c.expect("n=4 brute force", tau == order.specialization_topology_bruteforce(q))
        c.expect("n=4 oracle", oracles.to_family(tau) == oracles.increasing_sets(set(q.pairs()), range(4)))
    pairs = 0
    for n in range(4):
        results = sweep(["L3.5"], InstanceStream.exhaustive_quasiorder_pairs(n))
        pairs += results["L3.5"].instances
        c.expect(f"L3.5 n={n}", not results["L3.5"].violations)
    c.notes.append(f"1+1+4+29 quasiorders, 1000 samples at n=4, {pairs} pairs")


def criterion_10(c):
    doc = load(FIXTURES / "zigzag_5.json")
    g, q = doc.ground, doc.quasiorder
    t = topo.GenTopology(g, order.specialization_topology(q), validate=False)
    M = order.maximal_elements(q)
    c.expect("M = {0,2,4}", M == g.subset(["0", "2", "4"]))
    c.expect("M = Iso", t.isolated == M)
    c.expect("iso-dense", props.is_iso_dense(t))
    c.expect("D + {} = super(M)", topo.dense_family(t) | [0] == topo.superset_topology(M, g).opens)
    c.expect("P2.13", check("P2.13", q).verdict == HOLDS)
    c.notes.append(f"M=Iso={g.format(M)}, iso-dense, D+{{}}=super(M)")


def criterion_11(c):
    for n in range(9):
        t = topo.cofinite_topology(GroundSet.of_size(n))
        c.expect(f"n={n} discrete", props.is_discrete(t))
        c.expect(f"n={n} f_d", props.f_d(t))
        if n >= 1:
            c.expect(f"n={n} irresolvable", not props.is_resolvable(t))
    c.notes.append("n=0..8; on the empty carrier {{}} is resolvable via {}/{}; infinite carriers untested")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]

# criteria whose failure is a known, documented discrepancy rather than a defect
KNOWN = {1: "mu[A] and mu_tilde[A] of the four-point example are resolvable under the resolvability definition"}


def evaluate(number):
    c = Criterion()
    CRITERIA[number - 1](c)
    ok = not c.failed
    detail = "; ".join(c.notes) if ok else "failed: " + ", ".join(c.failed)
    if not ok and c.notes:
        detail += "; " + "; ".join(c.notes)
    return ok, f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    if not ok and number in KNOWN:
        pytest.xfail(KNOWN[number])
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(i) for i in range(1, len(CRITERIA) + 1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
