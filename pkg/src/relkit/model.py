"""JSON model files: named quantales, signatures, algebras, homs, relations,
spans, quantale homs, interpretations and terms.

Every section is a map from names to JSON objects.  Wherever an object is
expected a name may be given instead; names resolve first within the file
and then against the shipped builtins.
"""
import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import library
from .algebra import (
    EMPTY_SIGNATURE, AlgebraHom, App, Equation, FiniteAlgebra, Interpretation, Signature, Var,
    check_algebra_hom, check_equations, term_vars, validate_interpretation,
)
from .errors import StructureError, UnknownName
from .qrel import QRelation
from .qspan import QSpan
from .quantale import BUILTINS, QuantaleHom, TableQuantale, builtin, check_hom

SECTIONS = ("quantales", "signatures", "algebras", "homs", "relations", "spans",
            "quantaleHoms", "interpretations", "terms")

LIBRARY_ALGEBRAS = {
    "plain_set": library.plain_set,
    "chain_semilattice": library.chain_semilattice,
    "powerset_semilattice": library.powerset_semilattice,
    "cyclic_group": library.cyclic_group,
    "midpoint_cycle": library.midpoint_cycle,
    "midpoint_with_top": library.midpoint_with_top,
    "midpoint_chain": library.midpoint_chain,
    "affine_line": library.affine_line,
}


# -- plain value codecs ------------------------------------------------------

def label_from_json(raw):
    """Carrier labels: JSON lists become tuples so they can be hashed."""
    if isinstance(raw, list):
        return tuple(label_from_json(x) for x in raw)
    return raw


def label_to_json(lab):
    if isinstance(lab, tuple):
        return [label_to_json(x) for x in lab]
    return lab


def term_from_json(raw):
    """``["var", i]`` is a variable; ``["op", t1, ...]`` or ``"c"`` an application."""
    if isinstance(raw, str):
        return App(raw, ())
    if not isinstance(raw, list) or not raw or not isinstance(raw[0], str):
        raise StructureError(f"malformed term {raw!r}")
    if raw[0] == "var":
        if len(raw) != 2 or not isinstance(raw[1], int):
            raise StructureError(f"malformed variable {raw!r}")
        return Var(raw[1])
    return App(raw[0], tuple(term_from_json(a) for a in raw[1:]))


def term_to_json(t):
    if isinstance(t, Var):
        return ["var", t.index]
    return [t.op] + [term_to_json(a) for a in t.args]


def quantale_to_json(q):
    return q.descriptor()


def signature_to_json(sig):
    return {
        "name": sig.name,
        "ops": [[n, a] for n, a in sig.ops],
        "equations": [{"vars": e.vars, "lhs": term_to_json(e.lhs), "rhs": term_to_json(e.rhs)}
                      for e in sig.equations],
    }


def _nest(flat, n, arity):
    if arity == 0:
        return flat[0]
    step = n ** (arity - 1)
    return [_nest(flat[i * step:(i + 1) * step], n, arity - 1) for i in range(n)]


def algebra_to_json(a):
    labels = [label_to_json(x) for x in a.carrier]
    tables = {}
    for op, arity in a.signature.ops:
        tables[op] = _nest([labels[i] for i in a.tables[op]], len(a), arity)
    return {"signature": signature_to_json(a.signature), "carrier": labels, "tables": tables}


def relation_to_json(r):
    q = r.quantale
    return {
        "kind": "relation",
        "quantale": quantale_to_json(q),
        "dom": algebra_to_json(r.dom),
        "cod": algebra_to_json(r.cod),
        "matrix": [[q.dump(v) for v in row] for row in r.matrix],
    }


def span_to_json(s):
    q = s.pom
    apex = [label_to_json(x) for x in s.apex]
    dom = [label_to_json(x) for x in s.dom.carrier]
    cod = [label_to_json(x) for x in s.cod.carrier]
    f = [dom[i] for i in s.f]
    g = [cod[i] for i in s.g]
    chi = [q.dump(c) for c in s.chi]
    if all(isinstance(x, str) for x in apex):
        f, g, chi = dict(zip(apex, f)), dict(zip(apex, g)), dict(zip(apex, chi))
    return {
        "kind": "span",
        "pom": quantale_to_json(q),
        "dom": algebra_to_json(s.dom),
        "cod": algebra_to_json(s.cod),
        "apex": apex,
        "f": f,
        "g": g,
        "chi": chi,
    }


def morphism_to_json(m):
    return relation_to_json(m) if isinstance(m, QRelation) else span_to_json(m)


def quantale_from_descriptor(raw):
    kind = raw.get("kind", "builtin" if "name" in raw and len(raw) == 1 else None)
    if kind == "builtin":
        return builtin(raw["name"])
    if kind == "table":
        return TableQuantale(
            carrier=raw["carrier"], tensor_table=raw["tensor"], unit=raw["unit"],
            join_table=raw.get("join"), bottom=raw.get("bottom"), order=raw.get("order"),
            name=raw.get("name", "table"),
        )
    raise StructureError(f"quantale descriptor needs kind 'builtin' or 'table', got {raw!r}")


# -- the model ---------------------------------------------------------------

class Model:
    """A loaded model file; ``raw`` keeps the JSON for writing back."""

    def __init__(self, raw=None, path=None):
        self.raw = raw if raw is not None else {}
        self.path = path
        self._cache = {s: {} for s in SECTIONS}
        self._loading = set()
        for key in self.raw:
            if key not in SECTIONS and key != "defaults" and not key.startswith("_"):
                raise StructureError(f"unknown model section {key!r}")

    @classmethod
    def load(cls, path):
        path = Path(path)
        if not path.exists():
            shipped = resources.files("relkit") / "models" / path.name
            if shipped.is_file():
                return cls(json.loads(shipped.read_text()), path=None)
        with open(path) as fh:
            return cls(json.load(fh), path=path)

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))

    def save(self, path=None):
        path = Path(path or self.path)
        with open(path, "w") as fh:
            json.dump(self.raw, fh, indent=2)
            fh.write("\n")

    def resolve_all(self):
        """Load every named entry (running the on-load checks)."""
        for section in SECTIONS:
            for name in self.raw.get(section, {}):
                self._get(section, name)
        return self

    def names(self, section):
        return list(self.raw.get(section, {}))

    @property
    def defaults(self):
        return self.raw.get("defaults", {})

    def _get(self, section, name):
        cache = self._cache[section]
        if name in cache:
            return cache[name]
        entries = self.raw.get(section, {})
        if name not in entries:
            return None
        key = (section, name)
        if key in self._loading:
            raise StructureError(f"cyclic reference through {section}.{name}")
        self._loading.add(key)
        try:
            raw = entries[name]
            if isinstance(raw, str) and section not in ("quantales", "signatures"):
                # an alias for another entry of the same section
                value = self._ref(section, raw, None)
            else:
                value = getattr(self, f"_build_{section}")(raw, name)
        finally:
            self._loading.discard(key)
        cache[name] = value
        return value

    def _ref(self, section, raw, build):
        if isinstance(raw, str):
            value = self._get(section, raw)
            if value is None:
                value = self._builtin(section, raw)
            return value
        return build(raw, None)

    def _builtin(self, section, name):
        try:
            if section == "quantales":
                return builtin(name)
            if section == "signatures":
                return library.signature(name)
        except UnknownName:
            pass
        raise UnknownName(f"no {section[:-1]} named {name!r}")

    # typed accessors
    def quantale(self, ref):
        return self._ref("quantales", ref, self._build_quantales)

    def signature(self, ref):
        return self._ref("signatures", ref, self._build_signatures)

    def algebra(self, ref):
        return self._ref("algebras", ref, self._build_algebras)

    def hom(self, ref):
        return self._ref("homs", ref, self._build_homs)

    def relation(self, ref):
        return self._ref("relations", ref, self._build_relations)

    def span(self, ref):
        return self._ref("spans", ref, self._build_spans)

    def quantale_hom(self, ref):
        return self._ref("quantaleHoms", ref, self._build_quantaleHoms)

    def interpretation(self, ref):
        return self._ref("interpretations", ref, self._build_interpretations)

    def term(self, ref):
        return self._ref("terms", ref, self._build_terms)

    def lookup(self, name):
        """Find a name in any section; returns ``(section, value)``."""
        hits = [s for s in SECTIONS if name in self.raw.get(s, {})]
        if len(hits) > 1:
            raise StructureError(f"name {name!r} is ambiguous: declared in {hits}")
        if hits:
            return hits[0], self._get(hits[0], name)
        if name in BUILTINS:
            return "quantales", builtin(name)
        raise UnknownName(f"nothing named {name!r} in the model")

    # builders, one per section
    def _build_quantales(self, raw, name):
        if isinstance(raw, str):
            return builtin(raw)
        q = quantale_from_descriptor(raw)
        if isinstance(q, TableQuantale) and name and q.name == "table":
            q = TableQuantale(q.carrier, q.tensor_table, q.unit, q.join_table, q.bottom,
                              None if q.join_table is not None else q.order, name=name)
        return q

    def _build_signatures(self, raw, name):
        if isinstance(raw, str):
            return library.signature(raw)
        if "builtin" in raw:
            if raw["builtin"] == "convex_fin":
                return library.convex_fin([Fraction(p) for p in raw["weights"]])
            return library.signature(raw["builtin"])
        eqs = [Equation(e["vars"], term_from_json(e["lhs"]), term_from_json(e["rhs"]))
               for e in raw.get("equations", [])]
        return Signature(tuple(tuple(o) for o in raw.get("ops", [])), tuple(eqs),
                         raw.get("name", name or ""))

    def _build_algebras(self, raw, name):
        if "builtin" in raw:
            try:
                make = LIBRARY_ALGEBRAS[raw["builtin"]]
            except KeyError:
                raise UnknownName(f"unknown library algebra {raw['builtin']!r}") from None
            return make(*raw.get("args", []))
        sig = self.signature(raw["signature"]) if "signature" in raw else EMPTY_SIGNATURE
        carrier = [label_from_json(x) for x in raw["carrier"]]
        index = {lab: i for i, lab in enumerate(carrier)}
        tables = {}
        given = raw.get("tables", {})
        for op, arity in sig.ops:
            if op not in given:
                raise StructureError(f"algebra {name or ''} has no table for {op!r}")
            flat = []
            _flatten(given[op], arity, len(carrier), flat, op)
            try:
                tables[op] = [index[label_from_json(x)] for x in flat]
            except KeyError as exc:
                raise StructureError(f"table for {op!r} mentions unknown element {exc}") from None
        alg = FiniteAlgebra(sig, carrier, tables)
        rep = check_equations(alg)
        if not rep.ok:
            raise StructureError(f"algebra {name or ''} violates an equation: {rep.violations[0]}")
        return alg

    def _build_homs(self, raw, name):
        dom, cod = self.algebra(raw["dom"]), self.algebra(raw["cod"])
        m = raw["map"]
        if isinstance(m, dict):
            table = {label_from_json(k) if not isinstance(k, str) else k: label_from_json(v)
                     for k, v in m.items()}
            h = AlgebraHom.from_labels(dom, cod, _string_keyed(dom, table))
        else:
            h = AlgebraHom(dom, cod, [cod.index(label_from_json(v)) for v in m])
        rep = check_algebra_hom(h)
        if not rep.ok:
            raise StructureError(f"hom {name or ''} is not a homomorphism: {rep.violations[0]}")
        return h

    def _build_relations(self, raw, name):
        q = self.quantale(raw["quantale"])
        dom, cod = self.algebra(raw["dom"]), self.algebra(raw["cod"])
        return QRelation(q, dom, cod, [[q.coerce(v) for v in row] for row in raw["matrix"]])

    def _build_spans(self, raw, name):
        q = self.quantale(raw.get("pom", raw.get("quantale")))
        dom, cod = self.algebra(raw["dom"]), self.algebra(raw["cod"])
        apex = [label_from_json(x) for x in raw["apex"]]

        def leg(key, alg):
            values = _per_point(raw[key], raw["apex"], key)
            return [alg.index(label_from_json(v)) for v in values]

        chi = [q.coerce(v) for v in _per_point(raw["chi"], raw["apex"], "chi")]
        return QSpan(q, dom, cod, apex, leg("f", dom), leg("g", cod), chi)

    def _build_quantaleHoms(self, raw, name):
        src, tgt = self.quantale(raw["source"]), self.quantale(raw["target"])
        if "named" in raw:
            h = QuantaleHom(src, tgt, named=raw["named"])
        else:
            h = QuantaleHom(src, tgt, table={src.coerce(k): tgt.coerce(v) for k, v in raw["table"].items()})
        kind = raw.get("kind", "quantale" if src.has_joins and tgt.has_joins else "pom")
        rep = check_hom(h, kind=kind)
        if not rep.ok:
            raise StructureError(f"quantale hom {name or ''} fails: {rep.violations[0]}")
        return h

    def _build_interpretations(self, raw, name):
        src = self.signature(raw.get("source", "empty"))
        tgt = self.signature(raw["target"])
        i = Interpretation(src, tgt, {op: term_from_json(t) for op, t in raw.get("assign", {}).items()})
        witnesses = []
        for alg_name in self.names("algebras"):
            a = self.algebra(alg_name)
            if a.signature == tgt:
                witnesses.append(a)
        rep = validate_interpretation(i, witnesses)
        if not rep.ok:
            raise StructureError(f"interpretation {name or 'inline'} breaks a source equation: {rep.violations[0]}")
        return i

    def _build_terms(self, raw, name):
        if isinstance(raw, dict):
            return term_from_json(raw["term"]), int(raw.get("vars", 0))
        t = term_from_json(raw)
        used = term_vars(t)
        return t, (max(used) + 1 if used else 0)

    # writing back
    def put(self, section, name, value_json):
        self.raw.setdefault(section, {})[name] = value_json
        self._cache[section].pop(name, None)


def _flatten(table, arity, n, out, op):
    if arity == 0:
        out.append(table)
        return
    if not isinstance(table, list) or len(table) != n:
        raise StructureError(f"table for {op!r} must have {n} rows at every level")
    for row in table:
        _flatten(row, arity - 1, n, out, op)


def _string_keyed(dom, table):
    """Accept map keys written as strings even for non-string labels."""
    out = {}
    for lab in dom.carrier:
        if lab in table:
            out[lab] = table[lab]
        elif str(lab) in table:
            out[lab] = table[str(lab)]
        else:
            raise StructureError(f"hom map undefined on {lab!r}")
    return out


def _per_point(values, apex, key):
    if isinstance(values, dict):
        missing = [x for x in apex if not isinstance(x, str) or x not in values]
        if missing:
            raise StructureError(f"span {key} undefined on apex points {missing}")
        return [values[x] for x in apex]
    if len(values) != len(apex):
        raise StructureError(f"span {key} must list one value per apex point")
    return list(values)


def load_model(path):
    return Model.load(path)


def shipped_models():
    return sorted(p.name for p in (resources.files("relkit") / "models").iterdir()
                  if p.name.endswith(".json"))
