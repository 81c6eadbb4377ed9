from itertools import product

import pytest
from hypothesis import given, strategies as st

from relkit import StructureError
from relkit.algebra import (
    AlgebraHom, Equation, FiniteAlgebra, Interpretation, Signature, app, apply_interpretation,
    assoc_map, bang, check_algebra_hom, check_equations, classify_interpretation, classify_term,
    compose_homs, compose_interpretations, diagonal, eval_term, identity_hom,
    identity_interpretation, product_algebra, swap_map, term_function, terminal_algebra,
    trivial_interpretation, validate_interpretation, var,
)
from relkit.library import (
    affine_line, chain_semilattice, convex_fin, cyclic_group, midpoint, midpoint_cycle,
    midpoint_with_top, powerset_semilattice, semilattice, unary, unary_id,
)
from relkit.sampling import random_term

x, y, z = var(0), var(1), var(2)


class TestTerms:
    def test_eval(self):
        L = chain_semilattice(3)
        assert eval_term(L, app("m", x, y), (0, 2)) == 2

    def test_derived_operation_table(self):
        Z = cyclic_group(3)
        f = term_function(Z, app("m", x, app("m", x, y)), 2)
        assert f[(1, 1)] == 0 and f[(2, 0)] == 1

    def test_bad_arity(self):
        with pytest.raises(StructureError):
            semilattice().check_term(app("m", x), 1)

    def test_unbound_variable(self):
        with pytest.raises(StructureError):
            semilattice().check_term(app("m", x, z), 2)

    @pytest.mark.parametrize("term,n,name", [
        (app("m", x, y), 2, "linear"),
        (x, 2, "affine"),
        (app("m", x, x), 1, "relevant"),
        (app("m", x, x), 2, "cartesian"),
    ])
    def test_classes(self, term, n, name):
        assert classify_term(term, n).name == name

    @given(st.sampled_from(["linear", "affine", "relevant", "cartesian"]),
           st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=10**6))
    def test_random_terms_respect_class(self, cls, n, seed):
        t = random_term(semilattice(), n, cls, seed)
        c = classify_term(t, n)
        semilattice().check_term(t, n)
        if cls == "linear":
            assert c.linear
        elif cls == "affine":
            assert c.affine
        elif cls == "relevant":
            assert c.relevant


class TestAlgebras:
    @pytest.mark.parametrize("alg", [
        chain_semilattice(3), powerset_semilattice(2), cyclic_group(4), midpoint_cycle(5),
        affine_line([0.5]), affine_line(["1/3", "2/3"]),
    ], ids=lambda a: repr(a))
    def test_library_algebras_satisfy_equations(self, alg):
        assert check_equations(alg).ok

    def test_midpoint_with_top_is_a_midpoint_algebra(self):
        assert check_equations(midpoint_with_top(3)).ok

    def test_violation_names_assignment(self):
        bad = FiniteAlgebra(semilattice(), ["a", "b"], {"m": [1, 1, 1, 1]})
        rep = check_equations(bad)
        assert not rep.ok
        v = rep.violations[0]
        assert v["assignment"] == ["a"] and v["lhs"] == "b" and v["rhs"] == "a"

    def test_table_must_be_total(self):
        with pytest.raises(StructureError):
            FiniteAlgebra(semilattice(), ["a"], {"m": [0, 0]})
        with pytest.raises(StructureError):
            FiniteAlgebra(semilattice(), ["a"], {"m": [3]})

    def test_missing_and_extra_tables(self):
        with pytest.raises(StructureError):
            FiniteAlgebra(semilattice(), ["a"], {})
        with pytest.raises(StructureError):
            FiniteAlgebra(semilattice(), ["a"], {"m": [0], "k": [0]})

    def test_product_is_componentwise(self):
        L, Z = chain_semilattice(2), chain_semilattice(3)
        P = product_algebra(L, Z)
        assert len(P) == 6 and check_equations(P).ok
        for i, j in product(range(6), repeat=2):
            got = P.apply("m", [i, j])
            assert got == max(i // 3, j // 3) * 3 + max(i % 3, j % 3)

    def test_product_signature_must_match(self):
        with pytest.raises(StructureError):
            product_algebra(chain_semilattice(2), cyclic_group(2))

    def test_terminal(self):
        T = terminal_algebra(midpoint())
        assert len(T) == 1 and check_equations(T).ok

    def test_empty_algebra(self):
        E = FiniteAlgebra(semilattice(), [], {"m": []})
        assert check_equations(E).ok and len(product_algebra(E, chain_semilattice(2))) == 0

    def test_convex_fin_half_has_idempotence_and_commutativity(self):
        sig = convex_fin(["1/2"])
        assert len(sig.equations) == 2

    def test_convex_fin_rejects_weights(self):
        with pytest.raises(StructureError):
            convex_fin([1])


class TestHoms:
    def test_identity_and_bang(self):
        L = chain_semilattice(3)
        assert check_algebra_hom(identity_hom(L)).ok
        assert check_algebra_hom(bang(L)).ok
        assert check_algebra_hom(diagonal(L)).ok

    def test_non_hom(self):
        L = chain_semilattice(3)
        h = AlgebraHom(L, L, [2, 0, 1])
        rep = check_algebra_hom(h)
        assert not rep.ok and rep.violations[0]["op"] == "m"

    def test_structural_maps(self):
        L2, L3 = chain_semilattice(2), chain_semilattice(3)
        assert check_algebra_hom(assoc_map(L2, L3, L2)).ok
        assert check_algebra_hom(swap_map(L2, L3)).ok

    def test_swap_moves_pairs(self):
        A, B = FiniteAlgebra.plain("ab"), FiniteAlgebra.plain("xyz")
        s = swap_map(A, B)
        for i, (p, q) in enumerate(s.dom.carrier):
            assert s.cod.carrier[s(i)] == (q, p)

    def test_composition(self):
        L = chain_semilattice(3)
        h = AlgebraHom(L, L, [0, 1, 1])
        assert compose_homs(h, h) == h
        with pytest.raises(StructureError):
            compose_homs(h, bang(chain_semilattice(2)))

    def test_map_must_be_total(self):
        with pytest.raises(StructureError):
            AlgebraHom(chain_semilattice(2), chain_semilattice(2), [0])


class TestInterpretations:
    def test_identity_is_linear(self):
        assert classify_interpretation(identity_interpretation(semilattice())).name == "linear"

    def test_trivial_forgets_everything(self):
        i = trivial_interpretation(semilattice())
        A = apply_interpretation(i, chain_semilattice(3))
        assert A.signature.ops == () and len(A) == 3

    def test_doubling_is_relevant(self):
        i = Interpretation(unary_id(), semilattice(), {"u": app("m", x, x)})
        assert classify_interpretation(i).name == "relevant"
        A = apply_interpretation(i, chain_semilattice(3))
        assert check_equations(A).ok
        assert validate_interpretation(i, [chain_semilattice(3), powerset_semilattice(2)]).ok

    def test_projection_is_affine(self):
        sig = Signature((("p", 2),), (), "p")
        i = Interpretation(sig, semilattice(), {"p": x})
        assert classify_interpretation(i).name == "affine"

    def test_invalid_interpretation_is_caught(self):
        # doubling is the identity in a semilattice but not in Z_3
        i = Interpretation(unary_id(), cyclic_group(3).signature, {"u": app("m", x, x)})
        rep = validate_interpretation(i, [cyclic_group(3)])
        assert not rep.ok and rep.notes

    def test_missing_assignment(self):
        with pytest.raises(StructureError):
            Interpretation(semilattice(), semilattice(), {})

    def test_bad_target_term(self):
        with pytest.raises(StructureError):
            Interpretation(unary(), semilattice(), {"u": app("m", x)})

    def test_compose(self):
        i = Interpretation(unary_id(), semilattice(), {"u": app("m", x, x)})
        j = identity_interpretation(semilattice())
        k = compose_interpretations(i, j)
        assert k == i
        t = compose_interpretations(trivial_interpretation(unary_id()), i)
        assert t.source.ops == ()

    def test_translate_substitutes(self):
        i = Interpretation(unary_id(), semilattice(), {"u": app("m", x, x)})
        assert i.translate(app("u", app("u", y))) == app("m", app("m", y, y), app("m", y, y))
