import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paramodular import ss_locus as ss
from paramodular.ss_locus import FIRST, P1_FIBER, SECOND, IncidenceModel, KernelType, StratumA

PRIMES = [2, 3, 5, 7, 11]


def ball_size(p, root_kind, radius):
    """Closed-form vertex count of the ball: the root, then children alternate p^2 and p."""
    q = {FIRST: p * p, SECOND: p}
    other = {FIRST: SECOND, SECOND: FIRST}
    total, layer, kind = 1, q[root_kind] + 1, other[root_kind]
    for _ in range(radius):
        total += layer
        layer *= q[kind]
        kind = other[kind]
    return total


def is_tree(t):
    adj = t.adjacency()
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == t.n_vertices and len(t.edges) == t.n_vertices - 1


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("kind", [FIRST, SECOND])
@pytest.mark.parametrize("radius", range(0, 5))
def test_tree_invariants(p, kind, radius):
    t = ss.build_tree(p, kind, radius)
    assert t.n_vertices == ball_size(p, kind, radius)
    assert is_tree(t) and t.is_bipartite()
    assert t.valency_violations() == []
    inc = ss.incidence_from_tree(t)
    assert inc.invariant_violations() == []
    a, b = inc.handshake()
    assert a == b == len(t.edges)
    sing = ss.contract_E(inc)
    assert sing.size == len(inc.components) == len(set(sing.singular_points))
    assert [c for c, _ in sing.contraction] == list(inc.components)


def test_radius_one_first_root():
    t = ss.build_tree(2, FIRST, 1)
    assert t.n_vertices == 6
    assert sorted(len(v) for v in t.adjacency().values()) == [1] * 5 + [5]
    assert [t.is_boundary(v) for v in range(6)] == [False] + [True] * 5


def test_build_tree_rejects_bad_input():
    with pytest.raises(ValueError):
        ss.build_tree(4, FIRST, 1)
    with pytest.raises(ValueError):
        ss.build_tree(2, FIRST, -1)
    with pytest.raises(ValueError):
        ss.build_tree(2, "third", 1)


def test_to_dot_and_dict():
    t = ss.build_tree(3, SECOND, 2)
    dot = t.to_dot()
    assert dot.startswith("graph") and dot.count("--") == len(t.edges)
    d = json.loads(ss.dumps(t))
    assert len(d["vertices"]) == t.n_vertices
    inc = ss.incidence_from_tree(t)
    assert json.loads(ss.dumps(inc))["boundary"] == sorted(inc.boundary)
    assert inc.to_dot().count("--") == len(inc.incidence)


def test_free_model_and_violations():
    # one component meeting p^2+1 = 5 points, each point on just that one component
    m = IncidenceModel.free(2, 1, 5, [("N0", f"M{i}") for i in range(5)])
    assert m.handshake() == (5, 5)
    bad = m.invariant_violations()
    assert len(bad) == 5 and all("lies on 1" in b for b in bad)
    with pytest.raises(ValueError):
        IncidenceModel.free(2, 1, 1, [("N0", "M7")])


def test_multigraph_allowed():
    m = IncidenceModel.free(2, 1, 1, [("N0", "M0"), ("N0", "M0")])
    assert not m.is_simple()
    assert m.handshake() == (2, 2)


def test_contract_is_idempotent():
    inc = ss.incidence_from_tree(ss.build_tree(2, FIRST, 2))
    once = ss.contract_E(inc)
    assert ss.contract_E(once) == once


@given(st.sampled_from(PRIMES), st.sampled_from([FIRST, SECOND]), st.integers(0, 2))
def test_handshake_property(p, kind, radius):
    if p > 5 and radius > 1:
        return
    inc = ss.incidence_from_tree(ss.build_tree(p, kind, radius))
    a, b = inc.handshake()
    assert a == b


@pytest.mark.parametrize("p", PRIMES)
def test_fiber_tables(p):
    got = tuple(ss.fiber_card_a(s, p) for s in StratumA)
    assert got == (2 * (p + 1), 3, 1, P1_FIBER)
    assert ss.fiber_card_b(KernelType.mu_p_x_Z_p, p) == 2
    assert ss.fiber_card_b(KernelType.I_1_1, p) == 1
    assert ss.fiber_card_b(KernelType.I_2_1_ambient, p) == 1
    assert ss.fiber_card_b(KernelType.alpha_p_x_alpha_p, p) == P1_FIBER
    assert ss.fiber_card_b("I11", p) == 1


def lines_in(dim, p):
    """Number of lines in F_p^dim, by counting nonzero vectors up to scalars."""
    return (p ** dim - 1) // (p - 1)


@pytest.mark.parametrize("p", PRIMES)
def test_generic_degrees(p):
    a = ss.generic_degree("a", p)
    assert a == lines_in(4, p) == (p * p + 1) * (p + 1)
    assert ss.generic_degree("b", p) == lines_in(2, p) == p + 1


def test_generic_degree_errors():
    with pytest.raises(ValueError):
        ss.generic_degree("c", 2)
    with pytest.raises(ValueError):
        ss.generic_degree("a", 6)


def test_unknown_stratum():
    with pytest.raises(ValueError):
        ss.fiber_card_a("supergeneric", 2)
    with pytest.raises(ValueError):
        ss.fiber_card_b("mu_p", 2)
