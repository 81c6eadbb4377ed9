import pytest

from helpers import BOOL, INTERVAL, LAW, ULTRA, plain
from relkit import StructureError
from relkit.laws import (
    MUTANTS, LawSuite, SpanCalculus, check_order_enrichment, make_suite, mutant, run_suite,
    suite_json,
)
from relkit.library import chain_semilattice, cyclic_group

SMALL = [plain(0), plain(1), plain(2)]
QUANTALES = [BOOL, INTERVAL, LAW, ULTRA]


@pytest.mark.parametrize("kind", ["category", "monoidal", "hypergraph", "compact", "order"])
@pytest.mark.parametrize("q", QUANTALES, ids=lambda q: q.name)
def test_relation_suites_pass(kind, q):
    rep = run_suite(kind, make_suite(kind, "rel", q, SMALL, samples=40))
    assert rep.ok, rep.violations[:3]
    assert rep.checked > 0


@pytest.mark.parametrize("kind", ["category", "monoidal", "hypergraph", "compact", "order"])
@pytest.mark.parametrize("q", [BOOL, LAW], ids=lambda q: q.name)
def test_span_suites_pass(kind, q):
    rep = run_suite(kind, make_suite(kind, "span", q, SMALL, samples=30))
    assert rep.ok, rep.violations[:3]


def test_boolean_small_homsets_are_exhaustive():
    rep = run_suite("category", make_suite("category", "rel", BOOL, [plain(1), plain(2)]))
    assert rep.exhaustive


def test_lawvere_is_sampled():
    rep = run_suite("category", make_suite("category", "rel", LAW, [plain(2)], samples=10))
    assert not rep.exhaustive


def test_suites_over_algebras():
    objs = [chain_semilattice(2), chain_semilattice(3)]
    for kind in ("hypergraph", "compact"):
        assert run_suite(kind, make_suite(kind, "rel", LAW, objs, samples=20)).ok


def test_span_order_has_antisymmetry_witness():
    rep = check_order_enrichment(make_suite("order", "span", BOOL, [plain(2)], samples=20))
    assert rep.ok
    assert any(isinstance(n, dict) and "antisymmetry fails structurally" in n for n in rep.notes)


def test_same_seed_same_report():
    a = run_suite("monoidal", make_suite("m", "rel", LAW, [plain(2)], samples=15, seed=3))
    b = run_suite("monoidal", make_suite("m", "rel", LAW, [plain(2)], samples=15, seed=3))
    assert suite_json(a) == suite_json(b)


def test_json_shape():
    out = suite_json(run_suite("compact", make_suite("compact", "rel", BOOL, [plain(1)])))
    assert set(out) >= {"suite", "passed", "failed"} and out["failed"] == []


def test_unknown_suite():
    with pytest.raises(StructureError):
        run_suite("pentagon", make_suite("x", "rel", BOOL, [plain(1)]))


def test_objects_must_share_signature():
    with pytest.raises(StructureError):
        LawSuite("x", SpanCalculus(BOOL), [chain_semilattice(2), cyclic_group(2)])


@pytest.mark.parametrize("name", sorted(MUTANTS))
def test_mutants_are_caught(name):
    q = LAW if name != "strict-order" else BOOL
    calc, kind = mutant(name, q)
    suite = LawSuite(name, calc, [plain(1), plain(2)], samples=40)
    rep = run_suite(kind, suite)
    assert not rep.ok
    assert all("law" in v for v in rep.violations)
