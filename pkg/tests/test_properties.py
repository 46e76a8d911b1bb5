"""Randomized invariants, each with a fixed seed and at least 200 examples."""

from hypothesis import given, seed, settings
from hypothesis import strategies as st

from conftest import divides, graph_from_mask, in_ideal
from covertool.betti import hochster_betti
from covertool.ideal import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    contains,
    cover_ideal,
    intersect,
    intersect_all,
    minimalize,
    power,
    symbolic_power,
)
from covertool.simplicial import SimplicialComplex, reduced_euler_characteristic, reduced_homology_dims

VARS = tuple(f"x{i}" for i in range(1, 7))

graphs6 = st.integers(2, 6).flatmap(
    lambda n: st.integers(1, (1 << (n * (n - 1) // 2)) - 1).map(lambda m: graph_from_mask(n, m))
)
exponent_vectors = st.lists(st.tuples(*[st.integers(0, 3)] * 4), min_size=0, max_size=12)
squarefree_ideals = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=10).map(
        lambda masks: MonomialIdeal(VARS[:n], [{VARS[i]: 1 for i in range(n) if m >> i & 1} for m in masks])
    )
)


@seed(20240501)
@settings(max_examples=250)
@given(graphs6, st.integers(1, 3))
def test_symbolic_power_dual_route(G, k):
    via_primes = symbolic_power(cover_ideal(G), k)
    via_edges = intersect_all([power(MonomialIdeal(G.vertices, [a, b]), k) for a, b in G.edges], G.vertices)
    assert via_primes == via_edges


@seed(20240502)
@settings(max_examples=250)
@given(exponent_vectors, st.lists(st.tuples(*[st.integers(0, 4)] * 4), min_size=5, max_size=5))
def test_minimalization_idempotent(vecs, probes):
    amb = VARS[:4]
    mons = [Monomial.from_vector(amb, v) for v in vecs]
    M = minimalize(mons, amb)
    assert minimalize(M.generators, amb) == M
    gens = M.vectors
    assert all(not (a != b and divides(a, b)) for a in gens for b in gens)
    assert set(gens) <= set(vecs)
    for p in probes:
        assert contains(M, Monomial.from_vector(amb, p)) == in_ideal(vecs, p)


@seed(20240503)
@settings(max_examples=250)
@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=8).map(lambda fs: (n, fs))))
def test_euler_characteristic_identity(data):
    n, masks = data
    verts = tuple(range(n))
    D = SimplicialComplex.from_faces(verts, [[v for v in verts if m >> v & 1] for m in masks])
    dims = reduced_homology_dims(D)
    assert sum((-1) ** (d - 1) * h for d, h in enumerate(dims)) == reduced_euler_characteristic(D)


@seed(20240504)
@settings(max_examples=250)
@given(squarefree_ideals)
def test_cone_pruning_neutral(I):
    if I.is_unit():
        return
    assert hochster_betti(I, prune=True).entries == hochster_betti(I, prune=False).entries


@seed(20240505)
@settings(max_examples=250)
@given(squarefree_ideals)
def test_alexander_dual_involution(I):
    if I.is_unit():
        return
    assert alexander_dual(alexander_dual(I)) == I


@seed(20240506)
@settings(max_examples=200)
@given(squarefree_ideals, squarefree_ideals)
def test_intersection_commutes(I, J):
    I, J = I.extend(VARS), J.extend(VARS)
    assert intersect(I, J) == intersect(J, I)
