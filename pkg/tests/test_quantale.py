from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from relkit import INF, UnknownName, QuantaleMismatch
from relkit.quantale import (
    QuantaleHom, TableQuantale, builtin, check_hom, check_quantale_axioms, classify_quantale,
    compose_homs, format_extrat, identity_hom, parse_extrat, pom_view, q_join, q_leq, q_tensor,
)

L = builtin("lawvere")
U = builtin("ultrametric")
B = builtin("boolean")
I = builtin("interval")
T = builtin("terminal")

ext = st.one_of(st.just(INF), st.fractions(min_value=0, max_value=20, max_denominator=6))
unit_interval = st.fractions(min_value=0, max_value=1, max_denominator=8)


def chain3_min():
    """0 < 1 < 2 with tensor = min and unit = top."""
    mx = [[max(a, b) for b in range(3)] for a in range(3)]
    mn = [[min(a, b) for b in range(3)] for a in range(3)]
    return TableQuantale(3, mn, 2, join_table=mx, bottom=0)


def boolean_table():
    return TableQuantale(2, [[0, 0], [0, 1]], 1, join_table=[[0, 1], [1, 1]], bottom=0)


class TestJoinTensorOrder:
    def test_lawvere_join_is_minimum(self):
        assert q_join(L, [F(3), F(5)]) == 3

    def test_empty_join_is_bottom(self):
        assert q_join(L, []) is INF
        assert q_join(B, []) == 0

    def test_boolean_top_absorbs(self):
        assert q_join(B, [0, 1]) == 1

    def test_lawvere_tensor_adds(self):
        assert q_tensor(L, F(2), F(3)) == 5
        assert q_tensor(L, F(2), INF) is INF

    def test_ultrametric_tensor_is_max(self):
        assert q_tensor(U, F(2), F(3)) == 3

    @pytest.mark.parametrize("q,x", [(L, F(7, 3)), (U, F(4)), (B, 1), (I, F(1, 2)), (T, F(0))])
    def test_unit_is_neutral(self, q, x):
        assert q_tensor(q, q.unit, x) == x

    def test_reverse_order(self):
        assert q_leq(L, F(5), F(3))
        assert not q_leq(L, F(3), F(5))
        assert q_leq(L, INF, F(0))

    def test_boolean_order(self):
        assert q_leq(B, 0, 1) and not q_leq(B, 1, 0)

    def test_mismatched_value_is_rejected(self):
        with pytest.raises(QuantaleMismatch):
            q_join(B, [F(1, 2)])
        with pytest.raises(QuantaleMismatch):
            q_tensor(I, F(3), F(0))

    @given(ext, ext, ext)
    def test_lawvere_monoid_laws(self, a, b, c):
        assert q_tensor(L, a, q_tensor(L, b, c)) == q_tensor(L, q_tensor(L, a, b), c)
        assert q_tensor(L, a, b) == q_tensor(L, b, a)

    @given(ext, ext, ext)
    def test_monotone_tensor(self, a, a2, b):
        for q in (L, U):
            if q_leq(q, a, a2):
                assert q_leq(q, q_tensor(q, a, b), q_tensor(q, a2, b))

    @given(ext, ext)
    def test_leq_agrees_with_join(self, a, b):
        for q in (L, U):
            assert q_leq(q, a, b) == (q.join2(a, b) == b)

    @given(unit_interval, unit_interval)
    def test_interval_is_min_max(self, a, b):
        assert q_tensor(I, a, b) == min(a, b)
        assert q_join(I, [a, b]) == max(a, b)

    @given(st.lists(ext, max_size=6))
    def test_lawvere_join_is_exact_min(self, vs):
        finite = [v for v in vs if v is not INF]
        assert q_join(L, vs) == (min(finite) if finite else INF)


class TestLiterals:
    @pytest.mark.parametrize("text,value", [("0", F(0)), ("3/6", F(1, 2)), ("inf", INF), ("7", F(7))])
    def test_parse(self, text, value):
        assert parse_extrat(text) == value

    @given(ext)
    def test_round_trip(self, v):
        assert parse_extrat(format_extrat(v)) == v

    @pytest.mark.parametrize("bad", ["-1", "x", "1/0", True])
    def test_rejects(self, bad):
        with pytest.raises(QuantaleMismatch):
            parse_extrat(bad)


class TestAxioms:
    def test_boolean_table_is_valid(self):
        assert check_quantale_axioms(boolean_table()).ok

    def test_min_chain_is_valid(self):
        rep = check_quantale_axioms(chain3_min())
        assert rep.ok and rep.exhaustive

    def test_non_associative_tensor_names_a_triple(self):
        # chain 0 < 1 < 2 < 3 with unit 3 and 0 absorbing; only the middle products vary
        n = 4
        mx = [[max(a, b) for b in range(n)] for a in range(n)]
        t = [[min(a, b) for b in range(n)] for a in range(n)]
        t[1][1], t[1][2], t[2][1], t[2][2] = 0, 1, 1, 1
        rep = check_quantale_axioms(TableQuantale(n, t, 3, join_table=mx, bottom=0))
        assert not rep.ok
        v = rep.violations[0]
        assert "assoc" in v["law"] and len(v["instance"]) == 3
        a, b, c = v["instance"]
        assert t[t[a][b]][c] != t[a][t[b][c]]

    def test_builtins_are_trusted(self):
        rep = check_quantale_axioms(L)
        assert rep.ok and rep.notes

    def test_order_is_partial_order_on_tables(self):
        for q in (chain3_min(), boolean_table()):
            els = q.elements()
            for a, b, c in product(els, repeat=3):
                assert q.leq(a, a)
                if q.leq(a, b) and q.leq(b, a):
                    assert a == b
                if q.leq(a, b) and q.leq(b, c):
                    assert q.leq(a, c)

    def test_pom_view_drops_joins(self):
        p = pom_view(chain3_min())
        assert not p.has_joins and p.leq(0, 2) and not p.leq(2, 0)


class TestClassification:
    def test_boolean_is_cartesian(self):
        c = classify_quantale(B)
        assert (c.affine, c.relevant, c.cartesian) == (True, True, True)

    def test_lawvere_is_affine_only(self):
        c = classify_quantale(L)
        assert c.affine and not c.relevant and not c.cartesian

    def test_terminal_is_cartesian(self):
        assert classify_quantale(T).cartesian

    def test_tables_are_classified_by_enumeration(self):
        assert classify_quantale(chain3_min()).cartesian
        # Z/2 under addition, discrete order: neither affine nor relevant
        z2 = TableQuantale(2, [[0, 1], [1, 0]], 0, order=[[1, 0], [0, 1]])
        c = classify_quantale(z2)
        assert not c.affine and not c.relevant

    def test_cartesian_tensor_is_meet(self):
        for q in (chain3_min(), boolean_table()):
            assert classify_quantale(q).cartesian
            for a, b in product(q.elements(), repeat=2):
                meet = [c for c in q.elements() if q.leq(c, a) and q.leq(c, b)]
                greatest = [m for m in meet if all(q.leq(x, m) for x in meet)]
                assert q_tensor(q, a, b) == greatest[0]


class TestHoms:
    def test_boolean_to_lawvere(self):
        h = QuantaleHom(B, L, named="boolean_to")
        assert h(1) == 0 and h(0) is INF
        assert check_hom(h).ok

    def test_same_map_from_a_table(self):
        h = QuantaleHom(B, L, table={1: F(0), 0: INF})
        assert check_hom(h).ok

    def test_bottom_must_be_preserved(self):
        h = QuantaleHom(B, L, table={1: F(0), 0: F(0)})
        rep = check_hom(h)
        assert not rep.ok
        assert any("bottom" in v["law"] for v in rep.violations)

    @pytest.mark.parametrize("q", [B, I, L, U, T])
    def test_identity_is_valid(self, q):
        assert check_hom(identity_hom(q)).ok

    def test_double_is_a_monoid_endomorphism(self):
        h = QuantaleHom(L, L, named="double")
        assert h(F(3, 2)) == 3 and h(INF) is INF
        assert check_hom(h, kind="pom").ok

    def test_unit_map_from_terminal(self):
        for q in (B, I, L, U):
            h = QuantaleHom(T, q, named="unit")
            assert h(F(0)) == q.unit
            assert check_hom(h, kind="pom").ok

    def test_composite(self):
        h = compose_homs(QuantaleHom(B, L, named="boolean_to"), QuantaleHom(L, L, named="double"))
        assert h(1) == 0 and h(0) is INF and check_hom(h).ok


class TestBuiltin:
    def test_names(self):
        assert builtin("lawvere") == L
        assert builtin("terminal") == T
        assert builtin("C") == L

    def test_unknown(self):
        with pytest.raises(UnknownName):
            builtin("euclid")
