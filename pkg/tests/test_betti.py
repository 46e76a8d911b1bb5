from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_from_mask, taylor_betti
from covertool.betti import (
    SUBSET_CAP,
    BettiTable,
    betti,
    has_linear_presentation,
    has_linear_resolution,
    hochster_betti,
    koszul_betti,
    require_same_field,
    resolution_stats,
)
from covertool.errors import SizeError
from covertool.graph import classify, complete_graph, cycle_graph, find_cm_vwc_labeling, path_graph
from covertool.ideal import MonomialIdeal, cover_ideal, edge_ideal, polarize, power, symbolic_power
from covertool.linalg import QQ, Field

X2 = ("x1", "x2")
C4, C5, P4, K2 = cycle_graph(4), cycle_graph(5), path_graph(4), complete_graph(2)


def small_graphs(max_n=6):
    return st.integers(2, max_n).flatmap(
        lambda n: st.integers(1, (1 << (n * (n - 1) // 2)) - 1).map(lambda m: graph_from_mask(n, m))
    )


class TestExamples:
    def test_principal(self):
        T = hochster_betti(MonomialIdeal(X2, ["x1*x2"]))
        assert T.entries == {(0, 2): 1}

    def test_c4_cover(self):
        T = hochster_betti(cover_ideal(C4))
        assert T.entries == {(0, 2): 2, (1, 4): 1}
        assert (T.reg, T.pd) == (3, 1)
        assert T.as_quotient().reg == 2 and T.as_quotient().pd == 2

    def test_c5_cover_generators(self):
        assert hochster_betti(cover_ideal(C5)).row(0) == {3: 5}

    def test_pure_power(self):
        assert betti(MonomialIdeal(("x1",), ["x1^2"])).entries == {(0, 2): 1}

    def test_square_of_maximal_ideal(self):
        m2 = power(MonomialIdeal.maximal(X2), 2)
        T = betti(m2)
        assert T.entries == {(0, 2): 3, (1, 3): 2}
        assert T.entries == taylor_betti(list(m2.vectors))
        assert has_linear_resolution(m2)

    def test_c5_square_two_generator_degrees(self):
        row0 = betti(symbolic_power(cover_ideal(C5), 2)).row(0)
        assert set(row0) == {5, 6}

    def test_stats(self):
        assert resolution_stats(betti(MonomialIdeal.maximal(X2))) == (1, 1)
        with pytest.raises(ValueError):
            resolution_stats(BettiTable({}, "I"))

    def test_rejects_improper(self):
        for I in (MonomialIdeal.zero(X2), MonomialIdeal.unit(X2)):
            with pytest.raises(ValueError):
                betti(I)

    def test_hochster_rejects_nonsquarefree(self):
        with pytest.raises(ValueError):
            hochster_betti(MonomialIdeal(X2, ["x1^2"]))

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            betti(cover_ideal(C4), method="magic")


class TestLinearity:
    def test_resolution(self):
        assert has_linear_resolution(cover_ideal(K2))
        assert not has_linear_resolution(cover_ideal(C4))
        assert not has_linear_resolution(edge_ideal(C5))
        assert has_linear_resolution(symbolic_power(edge_ideal(C5), 2))
        assert not has_linear_resolution(symbolic_power(cover_ideal(C5), 2))

    def test_presentation(self):
        assert not has_linear_presentation(cover_ideal(C4))
        assert has_linear_presentation(symbolic_power(cover_ideal(P4), 2))
        with pytest.raises(ValueError):
            has_linear_presentation(symbolic_power(cover_ideal(C5), 2))

    @settings(max_examples=120)
    @given(small_graphs(6))
    def test_resolution_implies_presentation(self, G):
        for k in (1, 2):
            J = symbolic_power(cover_ideal(G), k)
            if has_linear_resolution(J):
                assert has_linear_presentation(J)

    def test_vwc_eagon_reiner_direction(self):
        from covertool.graphio import generate_corpus

        for G in generate_corpus(6, dedup=True):
            if classify(G).very_well_covered:
                assert has_linear_resolution(cover_ideal(G)) == (find_cm_vwc_labeling(G) is not None), G.canonical_string()


class TestFields:
    def test_field_recorded(self):
        T = betti(cover_ideal(C5), Field(3))
        assert T.field == Field(3) and T.to_json()["field"] == "F3"

    def test_mixing_fields_rejected(self):
        a, b = betti(cover_ideal(C4)), betti(cover_ideal(C4), "f2")
        with pytest.raises(ValueError):
            require_same_field(a, b)
        assert require_same_field(a, a) == QQ

    def test_characteristic_dependence(self):
        # Stanley-Reisner ideal of the six-vertex RP^2 has an extra syzygy in char 2.
        from covertool.simplicial import SimplicialComplex, stanley_reisner_ideal

        rp2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
        verts = [f"x{i}" for i in range(1, 7)]
        D = SimplicialComplex.from_faces(verts, [[f"x{i}" for i in f] for f in rp2])
        I = stanley_reisner_ideal(D)
        q, f2 = hochster_betti(I, "q"), hochster_betti(I, "f2")
        assert q.entries != f2.entries
        assert betti(I, "q").entries == q.entries and betti(I, "f2").entries == f2.entries


class TestJson:
    def test_shape(self):
        d = betti(cover_ideal(C4)).to_json()
        assert list(d) == ["subject", "field", "entries", "reg", "pd"]
        assert d["entries"] == [{"i": 0, "j": 2, "beta": 2}, {"i": 1, "j": 4, "beta": 1}]
        q = betti(cover_ideal(C4)).as_quotient().to_json()
        assert q["entries"][0] == {"i": 0, "j": 0, "beta": 1}
        assert (q["reg"], q["pd"]) == (2, 2)


class TestRoutesAgree:
    @settings(max_examples=200)
    @given(small_graphs(6))
    def test_cover_ideal_routes(self, G):
        J = cover_ideal(G)
        T = betti(J)
        assert T.entries == hochster_betti(J).entries == betti(J, method="hochster").entries
        assert T.row(0) == dict(Counter(J.degrees()))

    @settings(max_examples=100)
    @given(small_graphs(5), st.integers(2, 3))
    def test_symbolic_powers_routes(self, G, k):
        J = symbolic_power(cover_ideal(G), k)
        if len(J) > 10:
            return
        T = betti(J)
        if len(polarize(J).ambient) <= 12:
            assert T.entries == betti(J, method="hochster").entries
        if len(J) <= 8:
            assert T.entries == taylor_betti(list(J.vectors))

    @settings(max_examples=100)
    @given(small_graphs(5))
    def test_taylor_oracle_on_edge_ideals(self, G):
        I = edge_ideal(G)
        if len(I) > 8:
            return
        assert betti(I).entries == taylor_betti(list(I.vectors))

    @settings(max_examples=100)
    @given(small_graphs(6))
    def test_pruning_is_neutral(self, G):
        for I in (cover_ideal(G), edge_ideal(G)):
            assert hochster_betti(I, prune=True).entries == hochster_betti(I, prune=False).entries

    def test_max_i_truncation(self):
        J = symbolic_power(cover_ideal(C5), 3)
        full = koszul_betti(J)
        low = koszul_betti(J, max_i=1)
        assert low.entries == {k: v for k, v in full.entries.items() if k[0] <= 1}

    def test_subset_cap(self):
        names = [f"x{i}" for i in range(23)]
        I = MonomialIdeal(names, [{names[i]: 1, names[(i + 1) % 23]: 1} for i in range(23)])
        assert 2**23 > SUBSET_CAP
        with pytest.raises(SizeError):
            hochster_betti(I, prune=False)
