"""Regenerate the example model files shipped in src/relkit/models."""
import json
from pathlib import Path

from relkit import library
from relkit.model import algebra_to_json

OUT = Path(__file__).resolve().parent.parent / "src" / "relkit" / "models"


def plain(labels):
    return {"carrier": labels}


def alg(a, signature):
    d = algebra_to_json(a)
    d["signature"] = signature
    return d


def write(name, model):
    (OUT / name).write_text(json.dumps(model, indent=2) + "\n")


write("boolean_rel.json", {
    "_about": "Ordinary relations: the boolean quantale over plain finite sets.",
    "defaults": {"quantale": "boolean", "object": "A", "target": "rel"},
    "algebras": {"A": plain(["a", "b", "c"]), "B": plain(["x", "y"])},
    "homs": {"f": {"dom": "A", "cod": "B", "map": {"a": "x", "b": "x", "c": "y"}}},
    "relations": {
        "R": {"quantale": "boolean", "dom": "A", "cod": "B", "matrix": [["1", "0"], ["1", "1"], ["0", "1"]]},
        "S": {"quantale": "boolean", "dom": "B", "cod": "A", "matrix": [["0", "1", "0"], ["0", "0", "1"]]},
        "P": {"quantale": "boolean", "dom": "A", "cod": "A",
              "matrix": [["1", "1", "1"], ["0", "1", "1"], ["0", "0", "1"]]},
        "Q": {"quantale": "boolean", "dom": "A", "cod": "A",
              "matrix": [["1", "1", "0"], ["0", "1", "1"], ["0", "0", "1"]]},
    },
    "spans": {
        "s": {"pom": "boolean", "dom": "A", "cod": "B", "apex": ["p", "q", "r"],
              "f": {"p": "a", "q": "a", "r": "c"}, "g": {"p": "x", "q": "x", "r": "y"},
              "chi": {"p": "1", "q": "0", "r": "1"}},
    },
})

write("metric.json", {
    "_about": "Lawvere metrics on three and four points; an ultrametric; a two-witness span.",
    "defaults": {"quantale": "lawvere", "object": "P3", "target": "rel"},
    "algebras": {"P3": plain(["a", "b", "c"]), "P4": plain(["a", "b", "c", "d"]),
                 "Bool2": plain(["no", "yes"])},
    "relations": {
        "d3": {"quantale": "lawvere", "dom": "P3", "cod": "P3",
               "matrix": [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]]},
        "d4": {"quantale": "lawvere", "dom": "P4", "cod": "P4",
               "matrix": [["0", "1", "2", "1"], ["1", "0", "1", "2"],
                          ["2", "1", "0", "1"], ["1", "2", "1", "0"]]},
        "q4": {"quantale": "lawvere", "dom": "P4", "cod": "P4",
               "matrix": [["0", "1/2", "inf", "3"], ["inf", "0", "1", "inf"],
                          ["inf", "inf", "0", "1"], ["inf", "inf", "inf", "0"]]},
        "broken": {"quantale": "lawvere", "dom": "P3", "cod": "P3",
                   "matrix": [["0", "1", "5"], ["1", "0", "1"], ["5", "1", "0"]]},
        "u3": {"quantale": "ultrametric", "dom": "P3", "cod": "P3",
               "matrix": [["0", "1", "2"], ["1", "0", "2"], ["2", "2", "0"]]},
        "e": {"quantale": "boolean", "dom": "Bool2", "cod": "Bool2",
              "matrix": [["1", "0"], ["1", "1"]]},
    },
    "spans": {
        "w": {"pom": "lawvere", "dom": "P3", "cod": "P3", "apex": ["x1", "x2", "x3"],
              "f": {"x1": "a", "x2": "a", "x3": "b"}, "g": {"x1": "b", "x2": "b", "x3": "c"},
              "chi": {"x1": "2", "x2": "5", "x3": "1"}},
        "wb": {"pom": "boolean", "dom": "P3", "cod": "P3", "apex": ["x1", "x2"],
               "f": {"x1": "a", "x2": "b"}, "g": {"x1": "b", "x2": "c"},
               "chi": {"x1": "1", "x2": "0"}},
    },
    "quantaleHoms": {
        "b2l": {"source": "boolean", "target": "lawvere", "named": "boolean_to"},
        "twice": {"source": "lawvere", "target": "lawvere", "named": "double"},
    },
})

mid = library.midpoint_with_top(3)
write("convex_metric.json", {
    "_about": "Midpoints on Z3 plus an absorbing point, with a distance respecting midpoints.",
    "defaults": {"quantale": "lawvere", "object": "M", "target": "rel"},
    "algebras": {"M": alg(mid, "midpoint")},
    "relations": {
        "d": {"quantale": "lawvere", "dom": "M", "cod": "M",
              "matrix": [["0", "1", "1", "2"], ["1", "0", "1", "2"],
                         ["1", "1", "0", "2"], ["2", "2", "2", "0"]]},
        "d_mutated": {"quantale": "lawvere", "dom": "M", "cod": "M",
                      "matrix": [["0", "2", "1", "2"], ["1", "0", "1", "2"],
                                 ["1", "1", "0", "2"], ["2", "2", "2", "0"]]},
    },
})

write("semilattice.json", {
    "_about": "Join semilattices, a relevant interpretation and terms of every class.",
    "defaults": {"quantale": "boolean", "object": "L3", "target": "rel"},
    "algebras": {
        "L2": alg(library.chain_semilattice(2), "semilattice"),
        "L3": alg(library.chain_semilattice(3), "semilattice"),
        "P2": alg(library.powerset_semilattice(2), "semilattice"),
    },
    "homs": {
        "top": {"dom": "L3", "cod": "L2", "map": {"0": "0", "1": "1", "2": "1"}},
        "incl": {"dom": "L2", "cod": "L3", "map": {"0": "0", "1": "2"}},
    },
    "relations": {
        "le": {"quantale": "boolean", "dom": "L3", "cod": "L3",
               "matrix": [["1", "1", "1"], ["0", "1", "1"], ["0", "0", "1"]]},
        "gap": {"quantale": "lawvere", "dom": "L3", "cod": "L3",
                "matrix": [["0", "0", "0"], ["1", "0", "0"], ["2", "1", "0"]]},
        "odd": {"quantale": "boolean", "dom": "L3", "cod": "L3",
                "matrix": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "0"]]},
    },
    "spans": {
        "sl": {"pom": "boolean", "dom": "L3", "cod": "L3", "apex": ["u0", "u1", "u2"],
               "f": {"u0": "0", "u1": "1", "u2": "2"}, "g": {"u0": "1", "u1": "1", "u2": "2"},
               "chi": {"u0": "1", "u1": "1", "u2": "1"}},
    },
    "quantaleHoms": {"b2l": {"source": "boolean", "target": "lawvere", "named": "boolean_to"}},
    "interpretations": {
        "forget": {"source": "empty", "target": "semilattice", "assign": {}},
        "same": {"source": "semilattice", "target": "semilattice",
                 "assign": {"m": ["m", ["var", 0], ["var", 1]]}},
        "square": {"source": "unary_id", "target": "semilattice",
                   "assign": {"u": ["m", ["var", 0], ["var", 0]]}},
    },
    "terms": {
        "join": {"vars": 2, "term": ["m", ["var", 0], ["var", 1]]},
        "first": {"vars": 2, "term": ["var", 0]},
        "double": {"vars": 1, "term": ["m", ["var", 0], ["var", 0]]},
        "mixed": {"vars": 2, "term": ["m", ["m", ["var", 0], ["var", 0]], ["var", 1]]},
    },
})
