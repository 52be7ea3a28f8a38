import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gengraph.exceptions import NotNormalError
from gengraph.families import alternating, cyclic, dihedral, symmetric
from gengraph.families.catalogue import builtin_groups
from gengraph.gamma import (
    build_gamma,
    delta_subgraph,
    frattini_quotient,
    gamma_perfect_verdict,
    lift_path,
    prune_for_holes,
    unique_maximal_elements,
    verify_lift,
)
from gengraph.graphs import tensor, verify_certificate
from gengraph.groups import (
    all_subgroups,
    direct_product,
    generates,
    is_generating_pair,
    is_normal,
    quotient,
)

import oracles


def c2c2():
    return direct_product(cyclic(2), cyclic(2))


def c3c3():
    return direct_product(cyclic(3), cyclic(3))


def normal_subgroup_of_order(G, k):
    for S in all_subgroups(G).subgroups:
        if len(S) == k and is_normal(G, S):
            return S
    raise LookupError(k)


# -- construction -------------------------------------------------------------------------

class TestBuildGamma:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_cyclic_prime_is_complete(self, p):
        g = build_gamma(cyclic(p))
        assert g.number_of_edges() == p * (p - 1) // 2

    def test_klein_four(self):
        g = build_gamma(c2c2())
        assert g.isolated() == [0]
        assert {frozenset(e) for e in g.edges()} == {frozenset(e) for e in [(1, 2), (1, 3), (2, 3)]}

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 9, 10, 15])
    def test_dihedral_edge_count(self, n):
        reflections = sum(1 for a, b in itertools.combinations(range(n), 2)
                          if oracles.is_dihedral_reflection_pair_generating(a, b, n))
        # a rotation pairs with a reflection exactly when it generates the rotations
        rotations = sum(1 for k in range(1, n) if math.gcd(k, n) == 1)
        assert build_gamma(dihedral(n)).number_of_edges() == reflections + rotations * n

    def test_d5_edge_count(self):
        assert build_gamma(dihedral(5)).number_of_edges() == 30

    @pytest.mark.parametrize("spec", [
        lambda: cyclic(12), lambda: dihedral(6), lambda: symmetric(4), lambda: alternating(4),
        lambda: c2c2(), lambda: c3c3(), lambda: direct_product(dihedral(3), cyclic(2)),
    ])
    def test_matches_brute_force(self, spec):
        G = spec()
        assert oracles.edge_set(build_gamma(G)) == oracles.brute_generating_edges(oracles.table(G))

    def test_labels_and_exports(self):
        g = build_gamma(dihedral(3))
        assert g.label(3) == "ι"
        assert '"ι"' in g.to_dot()
        data = g.to_json()
        assert data["order"] == 6 and len(data["vertices"]) == 6

    def test_no_loops_and_symmetric(self):
        g = build_gamma(symmetric(4))
        for u in range(g.n):
            assert not g.adjacent(u, u)
            for v in g.neighbors(u):
                assert g.adjacent(v, u)


class TestDelta:
    def test_c4_keeps_everything_but_the_square(self):
        # x^2 lies in the unique maximal subgroup, so only x and x^3 see it
        d, trace = delta_subgraph(build_gamma(cyclic(4)))
        assert trace.removed_isolated == []
        assert d.n == 4

    def test_d4_drops_identity_and_central_rotation(self):
        G = dihedral(4)
        d, trace = delta_subgraph(build_gamma(G))
        assert sorted(G.names[v] for v in trace.removed_isolated) == sorted(["1", "ρ^2"])
        assert {"ρ", "ρ^3"} <= set(d.labels)

    def test_a5_drops_only_identity(self):
        d, trace = delta_subgraph(build_gamma(alternating(5)))
        assert trace.removed_isolated == [0]
        assert d.n == 59


# -- pruning ------------------------------------------------------------------------------

class TestPrune:
    def test_d15_keeps_only_reflections(self):
        G = dihedral(15)
        reduced, trace = prune_for_holes(G, build_gamma(G))
        assert trace.lattice_used
        assert all(v >= 15 for v in trace.kept)
        assert set(range(15)) <= set(trace.removed)

    def test_unique_maximal_in_d15_are_generating_rotations(self):
        G = dihedral(15)
        um = set(unique_maximal_elements(G, all_subgroups(G)))
        generators = {k for k in range(1, 15) if math.gcd(k, 15) == 1}
        assert generators <= um

    @pytest.mark.parametrize("n", [8, 9, 16, 25, 27])
    def test_cyclic_prime_power_verified(self, n):
        v, _ = gamma_perfect_verdict(cyclic(n))
        assert v.status == "PerfectVerified"

    def test_without_lattice_still_sound(self):
        G = dihedral(15)
        with_l, _ = gamma_perfect_verdict(G, hole_limit=5)
        without, trace = gamma_perfect_verdict(G, hole_limit=5, use_lattice=False)
        assert not trace.lattice_used
        assert with_l.status == without.status == "PerfectUpTo"

    @pytest.mark.parametrize("G", [alternating(5), dihedral(105)], ids=["A5", "D105"])
    def test_witness_lives_in_full_graph(self, G):
        gamma = build_gamma(G)
        v, _ = gamma_perfect_verdict(G, gamma, hole_limit=5)
        assert v.status == "NotPerfect"
        assert len(v.witness) == 5 and verify_certificate(gamma, v.witness)


# -- Frattini quotient --------------------------------------------------------------------

SMALL_GROUPS = [s for s in builtin_groups(100)]


@pytest.mark.parametrize("spec", SMALL_GROUPS, ids=str)
def test_frattini_edge_correspondence(spec):
    G = spec.build_group()
    Q = frattini_quotient(G)
    gamma = build_gamma(G)
    proj = [int(c) for c in Q.projection]
    qgen = [[is_generating_pair(Q, a, b) for b in range(Q.n)] for a in range(Q.n)]
    for g1 in range(G.n):
        row = gamma.rows[g1]
        for g2 in range(G.n):
            if g1 == g2:
                continue
            assert bool((row >> g2) & 1) == qgen[proj[g1]][proj[g2]], (spec, g1, g2)


def test_frattini_quotient_orders():
    assert frattini_quotient(cyclic(8)).n == 2
    assert frattini_quotient(cyclic(36)).n == 6
    assert frattini_quotient(dihedral(4)).n == 4
    assert frattini_quotient(symmetric(4)).n == 24


# -- coprime tensor law -------------------------------------------------------------------

@pytest.mark.parametrize("A,B", [
    (c2c2, c3c3),
    (lambda: dihedral(3), lambda: direct_product(cyclic(5), cyclic(5))),
    (lambda: dihedral(5), c3c3),
], ids=["C2xC2-C3xC3", "D3-C5xC5", "D5-C3xC3"])
def test_coprime_tensor_law(A, B):
    A, B = A(), B()
    assert math.gcd(A.n, B.n) == 1
    # direct_product and tensor both index the pair (a, b) as a + |A| * b
    assert build_gamma(direct_product(A, B)) == tensor(build_gamma(A), build_gamma(B))


def test_tensor_law_fails_with_cyclic_factor():
    P, K = c3c3(), cyclic(2)
    G = direct_product(P, K)
    gamma = build_gamma(G)
    t = tensor(build_gamma(P), build_gamma(K))
    assert gamma != t
    # (a, x) and (b, x) generate although x and x are not adjacent in Γ(C_2)
    a, b = 1, 3
    assert generates(P, [a, b])
    assert gamma.adjacent(a + 9, b + 9) and not t.adjacent(a + 9, b + 9)


# -- lifting ------------------------------------------------------------------------------

def induced_paths(Q, t):
    out = []
    for seq in itertools.permutations(range(Q.n), t):
        if seq[0] > seq[-1]:
            continue
        if all(is_generating_pair(Q, seq[i], seq[j]) == (j == i + 1)
               for i in range(t) for j in range(i + 1, t)):
            out.append(list(seq))
    return out


def adjacency_pattern(G, xs):
    return [[i != j and is_generating_pair(G, xs[i], xs[j]) for j in range(len(xs))]
            for i in range(len(xs))]


def lifting_cases():
    S4 = symmetric(4)
    C12 = cyclic(12)
    D12 = dihedral(12)
    return [
        ("S4/V4", S4, normal_subgroup_of_order(S4, 4)),
        ("C12/<x^6>", C12, C12.subgroup([0, 6])),
        ("D12/<ρ^4>", D12, D12.subgroup([0, 4, 8])),
    ]


class TestLift:
    def test_s4_over_v4_p3(self):
        _, G, N = lifting_cases()[0]
        Q = quotient(G, N)
        assert Q.n == 6
        paths = induced_paths(Q, 3)
        assert paths
        for p in paths:
            lifted = lift_path(G, N, p, Q)
            assert verify_lift(G, lifted)
            assert [int(Q.projection[x]) for x in lifted] == p

    def test_c12_edge(self):
        _, G, N = lifting_cases()[1]
        Q = quotient(G, N)
        for p in induced_paths(Q, 2):
            lifted = lift_path(G, N, p, Q)
            assert generates(G, lifted)
            assert oracles.brute_closure(oracles.table(G), set(lifted)) == frozenset(range(12))

    def test_trivial_normal_subgroup(self):
        G = dihedral(5)
        N = G.subgroup([0])
        Q = quotient(G, N)
        for p in induced_paths(Q, 3):
            assert lift_path(G, N, p, Q) == p

    def test_single_vertex(self):
        G = symmetric(4)
        N = normal_subgroup_of_order(G, 4)
        lifted = lift_path(G, N, [1])
        assert len(lifted) == 1
        assert build_gamma(G).degree(lifted[0]) > 0

    def test_pattern_preserved(self):
        for _, G, N in lifting_cases():
            Q = quotient(G, N)
            for t in (2, 3, 4):
                for p in induced_paths(Q, t)[:10]:
                    lifted = lift_path(G, N, p, Q)
                    assert adjacency_pattern(G, lifted) == adjacency_pattern(Q, p)

    def test_rejects_non_normal(self):
        G = symmetric(4)
        H = next(S for S in all_subgroups(G).subgroups if len(S) == 2)
        with pytest.raises(NotNormalError):
            lift_path(G, H, [0, 1])

    def test_rejects_non_path(self):
        G = cyclic(12)
        N = G.subgroup([0, 6])
        with pytest.raises(ValueError, match="induced path"):
            lift_path(G, N, [0, 3])  # 1N and x^3N do not generate C_6

    def test_rejects_repeats_and_range(self):
        G = cyclic(12)
        N = G.subgroup([0, 6])
        with pytest.raises(ValueError):
            lift_path(G, N, [1, 1])
        with pytest.raises(ValueError):
            lift_path(G, N, [99])
        with pytest.raises(ValueError):
            lift_path(G, N, [])

    def test_rejects_three_generated(self):
        G = direct_product(c2c2(), cyclic(2))
        N = G.subgroup([0])
        with pytest.raises(ValueError, match="2-generated"):
            lift_path(G, N, [1, 2])


@settings(max_examples=40)
@given(st.sampled_from([4, 6, 8, 9, 10, 12, 15]), st.data())
def test_lift_dihedral_rotation_quotient(n, data):
    G = dihedral(2 * n if n % 2 else n)
    m = G.n // 2
    divisors = [d for d in range(1, m + 1) if m % d == 0 and d < m]
    d = data.draw(st.sampled_from(divisors))
    N = G.subgroup(range(0, m, m // d) if d > 1 else [0])
    Q = quotient(G, N)
    paths = induced_paths(Q, data.draw(st.integers(2, 3)))
    if not paths:
        return
    p = data.draw(st.sampled_from(paths))
    lifted = lift_path(G, N, p, Q)
    assert verify_lift(G, lifted)
    assert adjacency_pattern(G, lifted) == adjacency_pattern(Q, p)
