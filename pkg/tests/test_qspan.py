from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from helpers import BOOL, LAW, plain
from relkit import ResourceError, StructureError, TypeChainError
from relkit.algebra import AlgebraHom, compose_homs
from relkit.library import chain_semilattice
from relkit.qspan import (
    QSpan, check_algebraic_span, classify_span, is_internal_monad_span, span_cograph, span_compose,
    span_converse, span_dagger, span_graph, span_id, span_iso_eq, span_leq, span_tensor,
)
from relkit.sampling import random_algebraic_span, random_hom, random_span

A2, B3 = plain(2), plain(3, "b")
seeds = st.integers(0, 10**6)


def span(dom, cod, pts, pom=LAW):
    """``pts`` lists (a, b, weight) triples; apex labels are positional."""
    return QSpan(pom, dom, cod, [f"p{i}" for i in range(len(pts))],
                 [p[0] for p in pts], [p[1] for p in pts], [F(p[2]) for p in pts])


class TestConstruction:
    def test_legs_must_be_total(self):
        with pytest.raises(StructureError):
            QSpan(LAW, A2, A2, ["x"], [0], [], [F(0)])

    def test_labels_distinct(self):
        with pytest.raises(StructureError):
            QSpan(LAW, A2, A2, ["x", "x"], [0, 1], [0, 1], [F(0), F(0)])

    def test_legs_stay_in_carriers(self):
        with pytest.raises(StructureError):
            QSpan(LAW, A2, A2, ["x"], [0], [5], [F(0)])


class TestComposition:
    def test_pullback_counts_witnesses(self):
        s = span(A2, B3, [(0, 1, 1), (0, 1, 2), (1, 2, 0)])
        t = span(B3, A2, [(1, 0, 3), (1, 1, 0)])
        c = span_compose(s, t)
        assert len(c) == 4
        assert sorted(c.chi) == [1, 2, 4, 5]
        assert all(p[0] == 0 for p in c.points())

    def test_type_chain(self):
        with pytest.raises(TypeChainError):
            span_compose(span_id(A2, LAW), span_id(B3, LAW))

    def test_identity_is_neutral_up_to_iso(self):
        s = random_span(LAW, A2, B3, 3, max_apex=4)
        assert span_iso_eq(span_compose(span_id(A2, LAW), s), s)
        assert span_iso_eq(span_compose(s, span_id(B3, LAW)), s)

    @given(seeds)
    def test_associative_up_to_iso(self, seed):
        r = random_span(LAW, A2, B3, seed, max_apex=3)
        s = random_span(LAW, B3, A2, seed + 1, max_apex=3)
        t = random_span(LAW, A2, A2, seed + 2, max_apex=3)
        left = span_compose(span_compose(r, s), t)
        right = span_compose(r, span_compose(s, t))
        assert span_iso_eq(left, right, cap=64)

    @given(seeds)
    def test_converse_is_involutive_and_reverses(self, seed):
        s = random_span(BOOL, A2, B3, seed, max_apex=3)
        t = random_span(BOOL, B3, A2, seed + 1, max_apex=3)
        assert span_converse(span_converse(s)) == s
        assert span_iso_eq(span_converse(span_compose(s, t)),
                           span_compose(span_converse(t), span_converse(s)), cap=64)

    def test_tensor_sizes(self):
        s = random_span(LAW, A2, B3, 1, min_apex=2, max_apex=2)
        t = random_span(LAW, B3, A2, 2, min_apex=3, max_apex=3)
        st_ = span_tensor(s, t)
        assert len(st_) == 6 and len(st_.dom) == 6 and len(st_.cod) == 6

    def test_dagger_is_iso_to_converse(self):
        s = random_span(LAW, A2, B3, 5, max_apex=4)
        assert span_iso_eq(span_dagger(s), span_converse(s), cap=64)


class TestIsoAndOrder:
    def test_iso_ignores_labels_and_order(self):
        s = span(A2, A2, [(0, 1, 1), (1, 1, 2)])
        t = QSpan(LAW, A2, A2, ["q", "r"], [1, 0], [1, 1], [F(2), F(1)])
        m = span_iso_eq(s, t)
        assert m and m.mapping == (1, 0)

    def test_iso_respects_weights(self):
        assert not span_iso_eq(span(A2, A2, [(0, 1, 1)]), span(A2, A2, [(0, 1, 2)]))

    def test_iso_respects_multiplicity(self):
        assert not span_iso_eq(span(A2, A2, [(0, 1, 1)]), span(A2, A2, [(0, 1, 1), (0, 1, 1)]))

    def test_leq_finds_an_injection(self):
        small = span(A2, A2, [(0, 1, 3)])
        big = span(A2, A2, [(0, 0, 0), (0, 1, 1)])
        m = span_leq(small, big)
        assert m and m.mapping == (1,)
        assert not span_leq(big, small)

    def test_leq_needs_distinct_targets(self):
        two = span(A2, A2, [(0, 1, 3), (0, 1, 3)])
        one = span(A2, A2, [(0, 1, 0)])
        assert not span_leq(two, one)

    def test_leq_backtracks(self):
        s1 = span(A2, A2, [(0, 0, 2), (0, 0, 5)])
        s2 = span(A2, A2, [(0, 0, 3), (0, 0, 1)])
        # the first point may only use the weight-1 witness, the second either
        m = span_leq(s1, s2)
        assert m and sorted(m.mapping) == [0, 1]
        assert LAW.leq(s1.chi[0], s2.chi[m.mapping[0]])

    def test_antisymmetry_fails_up_to_equality(self):
        s = span(A2, A2, [(0, 0, 1)])
        t = QSpan(LAW, A2, A2, ["other"], [0], [0], [F(1)])
        assert span_leq(s, t) and span_leq(t, s) and s != t and span_iso_eq(s, t)

    def test_cap_is_enforced(self):
        s = random_span(BOOL, A2, A2, 0, min_apex=9, max_apex=9)
        with pytest.raises(ResourceError):
            span_iso_eq(s, s)
        assert span_iso_eq(s, s, cap=9)

    def test_env_cap(self, monkeypatch):
        s = random_span(BOOL, A2, A2, 0, min_apex=9, max_apex=9)
        monkeypatch.setenv("RELKIT_APEX_CAP", "16")
        assert span_iso_eq(s, s)


class TestGraphsAndMonads:
    def test_graph_has_one_witness_per_element(self):
        f = AlgebraHom(A2, B3, [2, 0])
        g = span_graph(f, LAW)
        assert list(g.points()) == [(0, 2, 0), (1, 0, 0)]

    def test_identity_is_a_monad(self):
        assert is_internal_monad_span(span_id(B3, LAW))

    def test_monad_unit_failure(self):
        assert not is_internal_monad_span(span(A2, A2, [(0, 0, 0)]))

    def test_monad_multiplication(self):
        # identity plus one more self-loop witness: its square has four witnesses at (0, 0)
        s = span(A2, A2, [(0, 0, 0), (1, 1, 0), (0, 0, 0)])
        assert not is_internal_monad_span(s)


class TestAlgebraicSpans:
    def test_identity_is_algebraic(self):
        L = chain_semilattice(3)
        assert check_algebraic_span(span_id(L, BOOL)).ok

    def test_missing_witness(self):
        L = chain_semilattice(3)
        s = QSpan(BOOL, L, L, ["x", "y"], [0, 2], [1, 0], [F(1), F(1)])
        rep = check_algebraic_span(s)
        assert not rep.ok and rep.violations[0]["op"] == "m"

    @given(seeds)
    def test_random_algebraic_spans_are_algebraic(self, seed):
        L = chain_semilattice(3)
        assert check_algebraic_span(random_algebraic_span(LAW, L, L, seed)).ok

    def test_classification(self):
        assert classify_span(span(A2, A2, [(0, 0, 0)])).cartesian
        c = classify_span(span(A2, A2, [(0, 0, 1)]))
        assert c.affine and not c.relevant
        assert classify_span(span(A2, A2, [])).cartesian


class TestGraphCalculus:
    L3 = chain_semilattice(3)

    def _homs(self, seed):
        return random_hom(self.L3, self.L3, seed), random_hom(self.L3, self.L3, seed + 1)

    @given(seeds)
    def test_graph_preserves_composition(self, seed):
        f, g = self._homs(seed)
        left = span_graph(compose_homs(f, g), BOOL)
        right = span_compose(span_graph(f, BOOL), span_graph(g, BOOL))
        assert span_iso_eq(left, right)

    @given(seeds)
    def test_cograph_is_converse_of_graph(self, seed):
        f, _ = self._homs(seed)
        c = span_cograph(f, LAW)
        assert c.dom == f.cod and c.cod == f.dom
        assert span_iso_eq(c, span_converse(span_graph(f, LAW)))

    @given(seeds)
    def test_sandwich_by_graphs_moves_the_legs(self, seed):
        h, k = self._homs(seed)
        s = random_span(LAW, self.L3, self.L3, seed, max_apex=4)
        out = span_compose(span_compose(span_cograph(h, LAW), s), span_graph(k, LAW))
        expected = QSpan(LAW, self.L3, self.L3, s.apex, [h(a) for a in s.f], [k(b) for b in s.g], s.chi)
        assert span_iso_eq(out, expected)
