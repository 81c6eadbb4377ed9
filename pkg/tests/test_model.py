import json

import pytest
from hypothesis import given, strategies as st

from helpers import BOOL, LAW
from relkit import StructureError, UnknownName
from relkit.algebra import app, var
from relkit.library import chain_semilattice, midpoint_with_top
from relkit.model import (
    Model, algebra_to_json, label_from_json, label_to_json, relation_to_json, shipped_models,
    span_to_json, term_from_json, term_to_json,
)
from relkit.qrel import QRelation
from relkit.sampling import random_relation, random_span

SHIPPED = ["boolean_rel.json", "convex_metric.json", "metric.json", "semilattice.json"]


def test_shipped_models_are_listed():
    assert shipped_models() == SHIPPED


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_models_load_and_validate(name):
    m = Model.load(name).resolve_all()
    assert m.path is None
    assert m.names("algebras")


def test_labels_round_trip():
    assert label_from_json(["a", ["b", "c"]]) == ("a", ("b", "c"))
    assert label_to_json(("a", ("b", "c"))) == ["a", ["b", "c"]]


def test_terms_round_trip():
    t = app("m", app("m", var(0), var(1)), app("e"))
    assert term_from_json(term_to_json(t)) == t
    assert term_from_json("e") == app("e")


@given(st.integers(0, 10**6))
def test_relation_round_trip(seed):
    L = chain_semilattice(3)
    for q in (BOOL, LAW):
        r = random_relation(q, L, L, seed)
        assert Model({}).relation(json.loads(json.dumps(relation_to_json(r)))) == r


@given(st.integers(0, 10**6))
def test_span_round_trip(seed):
    M = midpoint_with_top(3)
    s = random_span(LAW, M, M, seed)
    assert Model({}).span(json.loads(json.dumps(span_to_json(s)))) == s


def test_algebra_round_trip():
    M = midpoint_with_top(3)
    assert Model({}).algebra(algebra_to_json(M)) == M


def test_named_references():
    m = Model.load("semilattice.json")
    le = m.relation("le")
    assert isinstance(le, QRelation) and le.dom is m.algebra("L3")
    assert m.hom("top").mapping == (0, 1, 1)
    t, n = m.term("mixed")
    assert n == 2


def test_lookup():
    m = Model.load("metric.json")
    assert m.lookup("d3")[0] == "relations"
    assert m.lookup("lawvere")[0] == "quantales"
    with pytest.raises(UnknownName):
        m.lookup("nope")


def test_bad_algebra_is_rejected():
    raw = {"algebras": {"X": {"signature": "semilattice", "carrier": ["a", "b"],
                              "tables": {"m": [["b", "b"], ["b", "b"]]}}}}
    with pytest.raises(StructureError):
        Model(raw).algebra("X")


def test_bad_hom_is_rejected():
    m = Model.load("semilattice.json")
    m.put("homs", "rev", {"dom": "L3", "cod": "L3", "map": {"0": "2", "1": "1", "2": "0"}})
    with pytest.raises(StructureError):
        m.hom("rev")


def test_unknown_section():
    with pytest.raises(StructureError):
        Model({"relashuns": {}})


def test_cycle_is_reported():
    raw = {"algebras": {"A": "B", "B": "A"}}
    with pytest.raises(StructureError):
        Model(raw).algebra("A")


def test_builtin_algebra():
    m = Model({"algebras": {"Z": {"builtin": "midpoint_cycle", "args": [5]}}})
    assert len(m.algebra("Z")) == 5


def test_convex_signature():
    m = Model({"algebras": {"F": {"builtin": "affine_line", "args": [["1/2"]]}}})
    assert m.algebra("F").signature.ops == (("c1_2", 2),)


def test_save_round_trip(tmp_path):
    m = Model.load("metric.json")
    out = tmp_path / "copy.json"
    m.save(out)
    again = Model.load(out)
    assert again.path == out and again.relation("d3") == m.relation("d3")


def test_interpretation_is_validated_against_model_algebras():
    m = Model.load("semilattice.json")
    m.put("interpretations", "bad", {"source": "semilattice", "target": "semilattice",
                                     "assign": {"m": ["var", 0]}})
    with pytest.raises(StructureError):
        m.interpretation("bad")
    assert m.interpretation("square").source.name == "unary_id"
