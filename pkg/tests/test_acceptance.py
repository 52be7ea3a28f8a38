"""Acceptance criteria AC1-AC8.

Each test records one PASS/FAIL line through the ``acceptance`` fixture; the
lines are printed in the "acceptance criteria" section of the pytest
summary.  Runtime budgets are asserted alongside the results.
"""

import itertools
import time

import numpy as np
import pytest

from gengraph.families import (
    GroupSpec,
    an_hole,
    builtin_bundles,
    delta_graph,
    sn_hole,
    verify_bundle,
)
from gengraph.families.catalogue import builtin_groups
from gengraph.gamma import build_gamma, lift_path, prune_for_holes, verify_lift
from gengraph.graphs import (
    Graph,
    find_hole,
    find_odd_hole,
    iter_induced_paths,
    is_chordal,
    is_cograph,
    is_split,
    perfect_verdict,
    reduce_for_holes,
    verify_certificate,
)
from gengraph.groups import all_subgroups, is_cyclic, is_generating_pair, is_normal, quotient
from gengraph.report import analyze_target

import oracles


def prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def is_prime(n):
    return n > 1 and prime_factors(n) == {n}


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


# -- AC1 ----------------------------------------------------------------------------------

def _suite_line(results):
    failed = [r.bundle.name for r in results if not r.ok]
    return sum(r.ok for r in results), len(results), failed


@pytest.mark.xfail(strict=True, reason="published S_9/S_11 tuples: a3 and a4 both fix n")
def test_ac1_certificate_suite(acceptance):
    with Clock() as clk:
        published = [verify_bundle(b) for b in builtin_bundles()]
        corrected = [verify_bundle(b) for b in builtin_bundles(corrected=True)]
    ok, total, failed = _suite_line(published)
    ok_c, total_c, _ = _suite_line(corrected)
    acceptance("AC1", ok == total and clk.seconds < 60,
               f"{ok}/{total} published bundles verify (failing: {', '.join(failed) or 'none'}; "
               f"their third and fourth vertices both fix n); with the corrected fourth vertex "
               f"(1,2,4,5,n-1,n) {ok_c}/{total_c} verify; {clk.seconds:.1f}s")
    assert clk.seconds < 60
    assert ok == total, failed


def test_ac1_corrected_suite_and_failure_mode():
    with Clock() as clk:
        corrected = [verify_bundle(b) for b in builtin_bundles(corrected=True)]
    assert all(r.ok for r in corrected), [r.summary() for r in corrected if not r.ok]
    names = {r.bundle.name for r in corrected}
    for expect in ("S_5", "S_6", "S_7", "A_6", "PSL2(7)", "PSL2(11)", "C_3^3:C_2^2", "Delta_5",
                   "Y^K3", "D_105 (3,5,7,1)", "D_165 (3,5,11,1)", "D_231 (3,7,11,1)"):
        assert expect in names
    assert {f"A_{n}" for n in range(5, 13)} <= names
    assert clk.seconds < 60
    # the published odd tuples fail on exactly the (a3, a4) pair
    for n in (9, 11):
        res = verify_bundle(sn_hole(n))
        assert len(res.violations) == 1
        a3, a4 = sn_hole(n).vertices[2:4]
        assert f"{a3}" in res.violations[0] and f"{a4}" in res.violations[0]
    assert verify_bundle(an_hole(5)).ok


# -- AC2 ----------------------------------------------------------------------------------

def test_ac2_symmetric_and_alternating(acceptance):
    got = {}
    with Clock() as clk:
        for n in (3, 4):
            for fam in ("sym", "alt"):
                got[f"{fam}:{n}"] = analyze_target(f"{fam}:{n}", ("perfect",), "full").perfect.status
        for fam in ("sym", "alt"):
            rep = analyze_target(f"{fam}:5", ("perfect",), 5)
            assert verify_certificate(rep.graph, rep.perfect.witness)
            got[f"{fam}:5"] = rep.perfect.status
    expect = {"sym:3": "PerfectVerified", "alt:3": "PerfectVerified",
              "sym:4": "PerfectVerified", "alt:4": "PerfectVerified",
              "sym:5": "NotPerfect", "alt:5": "NotPerfect"}
    ok = got == expect and clk.seconds < 30
    acceptance("AC2", ok, ", ".join(f"{k}={v}" for k, v in got.items()) + f"; {clk.seconds:.1f}s")
    assert got == expect
    assert clk.seconds < 30


# -- AC3 ----------------------------------------------------------------------------------

def dihedral_predicate(n):
    return n % 2 == 0 or len(prime_factors(n)) <= 2


def test_ac3_dihedral_sweep(acceptance):
    ns = list(range(3, 41)) + [45, 105]
    mismatches, statuses, verified_large = [], {}, 0
    with Clock() as clk:
        for n in ns:
            rep = analyze_target(f"dihedral:{n}", ("perfect",), "auto")
            v = rep.perfect
            statuses[n] = v.status
            if len(prime_factors(n)) >= 3 and n % 2:
                good = v.status == "NotPerfect" and verify_certificate(rep.graph, v.witness)
            elif v.searched_vertices <= 20:
                good = v.status == "PerfectVerified"
            else:
                # beyond the full-search threshold the criterion asks for a bound;
                # a full search is still cheap here, so run it as well
                good = v.status == "PerfectUpTo" and v.search_limit >= 9
                full = analyze_target(f"dihedral:{n}", ("perfect",), "full").perfect
                good = good and full.status == "PerfectVerified"
                verified_large += full.status == "PerfectVerified"
            if not good or (v.is_perfect is not False) != dihedral_predicate(n):
                mismatches.append(n)
    ok = not mismatches and clk.seconds < 300
    counts = {s: sum(1 for x in statuses.values() if x == s) for s in sorted(set(statuses.values()))}
    acceptance("AC3", ok, f"{len(ns)} dihedral groups match the predicate (mismatches: {mismatches or 'none'}); "
                          f"auto statuses {counts}; {verified_large} bounded cases also fully verified; "
                          f"{clk.seconds:.1f}s")
    assert not mismatches
    assert statuses[105] == "NotPerfect"
    assert clk.seconds < 300


# -- AC4 ----------------------------------------------------------------------------------

SQUAREFREE = [6, 10, 15, 35, 30, 42, 66, 105, 210, 330, 1155]


def collapsed_matches_delta(n):
    """The generating graph of ``C_n``, collapsed to one vertex per cyclic
    subgroup, is ``Δ_t`` under ``d -> {primes not dividing d}``."""
    primes = sorted(prime_factors(n))
    t = len(primes)
    gamma = build_gamma(GroupSpec.parse(f"cyclic:{n}").build_group())
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    delta = delta_graph(t)

    def subset(d):
        return sum(1 << i for i, p in enumerate(primes) if d % p)

    for d1, d2 in itertools.combinations(divisors, 2):
        # x^d generates the subgroup of index d
        if gamma.adjacent(d1 % n, d2 % n) != delta.adjacent(subset(d1), subset(d2)):
            return False
    return True


def test_ac4_cyclic_and_abelian(acceptance):
    problems = []
    with Clock() as clk:
        for n in SQUAREFREE:
            v = analyze_target(f"cyclic:{n}", ("perfect",), "full").perfect
            if v.status != "PerfectVerified" or v.searched_vertices > 16:
                problems.append(f"C_{n}")
            if not collapsed_matches_delta(n):
                problems.append(f"C_{n} collapse")
        for t in (2, 3, 4):
            dv, _ = perfect_verdict(delta_graph(t), None, prune=False)
            if dv.status != "PerfectVerified":
                problems.append(f"Delta_{t}")
        rep = analyze_target("cyclic:2310", ("perfect",), "full")
        if rep.perfect.status != "NotPerfect" or not verify_certificate(rep.graph, rep.perfect.witness):
            problems.append("C_2310")
        rep = analyze_target("product:cyclic:30,cyclic:6", ("perfect",), 5)
        w = rep.perfect.witness
        if rep.perfect.status != "NotPerfect" or len(w) != 5 or not verify_certificate(rep.graph, w):
            problems.append("C30xC6")
        if analyze_target("product:cyclic:6,cyclic:6", ("perfect",), "full").perfect.status != "PerfectVerified":
            problems.append("C6xC6")
    ok = not problems and clk.seconds < 120
    acceptance("AC4", ok, f"{len(SQUAREFREE)} squarefree C_n PerfectVerified (reduced <= 16, collapse = Delta_t), "
                          f"C_2310 NotPerfect, C_30xC_6 5-hole, C_6xC_6 PerfectVerified; "
                          f"problems: {problems or 'none'}; {clk.seconds:.1f}s")
    assert not problems
    assert clk.seconds < 120


# -- AC5 ----------------------------------------------------------------------------------

COGRAPHS = ["cyclic:8", "cyclic:9", "cyclic:12", "product:cyclic:2,cyclic:2", "dihedral:3", "alt:4",
            "dihedral:4"]
NON_COGRAPHS = ["cyclic:30", "sym:4", "dihedral:15"]


def test_ac5_cographs(acceptance):
    wrong = []
    with Clock() as clk:
        for t in COGRAPHS:
            rep = analyze_target(t, ("cograph",))
            if not rep.cograph.value or not verify_certificate(rep.graph, rep.cograph.certificate):
                wrong.append(t)
        for t in NON_COGRAPHS:
            rep = analyze_target(t, ("cograph",))
            c = rep.cograph.certificate
            if rep.cograph.value or len(c.vertices) != 4 or not verify_certificate(rep.graph, c):
                wrong.append(t)
    ok = not wrong and clk.seconds < 30
    acceptance("AC5", ok, f"{len(COGRAPHS)} cographs with cotree, {len(NON_COGRAPHS)} non-cographs with P4; "
                          f"wrong: {wrong or 'none'}; {clk.seconds:.1f}s")
    assert not wrong
    assert clk.seconds < 30


# -- AC6 ----------------------------------------------------------------------------------

def split_predicate(G):
    n = G.n
    cyclic_p_group = is_cyclic(G) and len(prime_factors(n)) <= 1
    return cyclic_p_group or (n % 2 == 0 and is_prime(n // 2))


def test_ac6_split_chordal_c4free(acceptance):
    bad, skipped, checked, true_on = [], [], 0, []
    with Clock() as clk:
        for spec in builtin_groups(40):
            rep = analyze_target(spec, ("split", "chordal", "c4free"))
            if not rep.group_info["two_generated"]:
                skipped.append(str(spec))
                continue
            checked += 1
            vals = {rep.split.value, rep.chordal.value, rep.c4free.value}
            G = spec.build_group()
            if len(vals) != 1 or vals.pop() != split_predicate(G):
                bad.append(str(spec))
            if rep.split.value:
                true_on.append(str(spec))
            for v in (rep.split, rep.chordal, rep.c4free):
                if v.certificate is not None:
                    assert verify_certificate(rep.graph, v.certificate)
    ok = not bad and clk.seconds < 120
    acceptance("AC6", ok, f"{checked} 2-generated groups of order <= 40: verdicts identical and equal to "
                          f"'cyclic p-group or order 2p' (mismatches: {bad or 'none'}; true on {len(true_on)}); "
                          f"{len(skipped)} groups needing 3 generators excluded; {clk.seconds:.1f}s")
    assert not bad
    assert clk.seconds < 120


# -- AC7 ----------------------------------------------------------------------------------

def random_corpus(count=500, max_n=10, seed=20240901):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(0, max_n + 1))
        p = float(rng.choice([0.2, 0.35, 0.5, 0.65, 0.8]))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append(Graph.from_edges(n, edges))
    return out


AC7_INSTANCES = ["sym:3", "sym:4", "alt:4", "cyclic:30", "cyclic:210", "cyclic:2310",
                 "product:cyclic:6,cyclic:6", "delta:4", "delta:5", "tensor:y,k3"] + \
                [f"dihedral:{n}" for n in list(range(3, 41)) + [45]]


def test_ac7_oracle_equivalence(acceptance):
    disagreements = []
    with Clock() as clk:
        corpus = random_corpus()
        for i, g in enumerate(corpus):
            e = oracles.edge_set(g)
            n = g.n
            if (find_odd_hole(g, max(n, 5)) is not None) != oracles.has_odd_hole(n, e, n):
                disagreements.append((i, "odd hole"))
            if bool(is_chordal(g).value) != oracles.is_chordal(n, e):
                disagreements.append((i, "chordal"))
            if bool(is_split(g).value) != oracles.is_split(n, e):
                disagreements.append((i, "split"))
            if bool(is_cograph(g).value) == oracles.has_p4(n, e):
                disagreements.append((i, "cograph"))
            _, trace = reduce_for_holes(g)
            r = g.induced(trace.kept)
            re_ = oracles.edge_set(r)
            odd = range(5, n + 1, 2)
            if oracles.hole_lengths(n, e, odd) != oracles.hole_lengths(r.n, re_, odd) or \
                    oracles.hole_lengths(n, oracles.complement_edges(n, e), odd) != \
                    oracles.hole_lengths(r.n, oracles.complement_edges(r.n, re_), odd):
                disagreements.append((i, "prune"))
        corpus_seconds = time.perf_counter() - clk.start
        instances = 0
        for t in AC7_INSTANCES:
            spec = GroupSpec.parse(t)
            if spec.is_graph:
                g = spec.build_graph()
                _, trace = reduce_for_holes(g)
                red = g.induced(trace.kept)
            else:
                G = spec.build_group()
                g = build_gamma(G)
                red, _ = prune_for_holes(G, g)
            if red.n > 20:
                continue
            instances += 1
            before = find_hole(g, 5) is not None
            if g.n <= 24:
                before_oracle = bool(oracles.hole_lengths(g.n, oracles.edge_set(g), [5]))
                if before != before_oracle:
                    disagreements.append((t, "search vs oracle"))
            if before != (find_hole(red, 5) is not None):
                disagreements.append((t, "prune"))
    acceptance("AC7", not disagreements,
               f"500 random graphs (<= 10 vertices) agree with brute force on odd holes, chordal, split, "
               f"cograph and pruning ({corpus_seconds:.1f}s); 5-hole existence preserved on {instances} "
               f"instances with reduced graph <= 20 vertices; disagreements: {disagreements or 'none'}; "
               f"{clk.seconds:.1f}s")
    assert not disagreements
    assert instances >= 40


# -- AC8 ----------------------------------------------------------------------------------

def _normal_of_order(G, k):
    return next(S for S in all_subgroups(G).subgroups if len(S) == k and is_normal(G, S))


def _induced_paths(Q, t):
    """Induced P_t of the generating graph of ``Q``, one direction each,
    enumerated from scratch over all vertex sequences."""
    adj = [[a != b and is_generating_pair(Q, a, b) for b in range(Q.n)] for a in range(Q.n)]
    for seq in itertools.permutations(range(Q.n), t):
        if seq[0] < seq[-1] and all(adj[seq[i]][seq[j]] == (j == i + 1)
                                    for i in range(t) for j in range(i + 1, t)):
            yield list(seq)


def _lift_all(G, N, paths, Q):
    failures = []
    for p in paths:
        t = len(p)
        lifted = lift_path(G, N, p, Q)
        same = all(is_generating_pair(G, lifted[i], lifted[j]) == is_generating_pair(Q, p[i], p[j])
                   for i in range(t) for j in range(i + 1, t))
        images = [int(Q.projection[x]) for x in lifted] == p
        if not (verify_lift(G, lifted) and same and images):
            failures.append(p)
    return failures


def test_ac8_lifting(acceptance):
    S4 = GroupSpec.parse("sym:4").build_group()
    C12 = GroupSpec.parse("cyclic:12").build_group()
    D12 = GroupSpec.parse("dihedral:12").build_group()
    cases = [("S_4/V_4", S4, _normal_of_order(S4, 4)),
             ("C_12/<x^6>", C12, C12.subgroup([0, 6])),
             ("D_12/<rho^4>", D12, D12.subgroup([0, 4, 8]))]
    summary, failures = [], []
    with Clock() as clk:
        for name, G, N in cases:
            Q = quotient(G, N)
            # these quotients have cograph generating graphs, so no induced P4 exists
            assert is_cograph(build_gamma(Q)).value
            counts = []
            for t in (2, 3, 4):
                paths = list(_induced_paths(Q, t))
                failures += [(name, p) for p in _lift_all(G, N, paths, Q)]
                counts.append(len(paths))
            summary.append(f"{name} P2/P3/P4 = {counts[0]}/{counts[1]}/{counts[2]}")
        # supplementary: a quotient whose generating graph does contain P4s
        D30 = GroupSpec.parse("dihedral:30").build_group()
        N = D30.subgroup([0, 15])
        Q = quotient(D30, N)
        p4 = [list(p) for p in iter_induced_paths(build_gamma(Q), 4) if p[0] < p[-1]]
        failures += [("D_30/<rho^15>", p) for p in _lift_all(D30, N, p4, Q)]
    acceptance("AC8", not failures,
               "; ".join(summary) + f" (these quotient graphs are cographs, hence P4-free); "
               f"supplementary D_30/<rho^15>: {len(p4)} P4; all lifted with identical adjacency "
               f"pattern; failures: {failures or 'none'}; {clk.seconds:.1f}s")
    assert not failures
    assert all(not s.endswith(" = 0/0/0") for s in summary)
    assert p4
