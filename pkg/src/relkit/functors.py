"""Functors between models: extensional collapse V, h* and i*, plus diagram checks."""
from collections import defaultdict

from . import qrel, qspan
from .algebra import apply_interpretation, apply_interpretation_hom, classify_interpretation
from .config import SUITE_APEX_CAP
from .errors import ClassMismatch, QuantaleMismatch, StructureError
from .qrel import QRelation
from .qspan import QSpan
from .quantale import check_hom
from .report import Report

def v_collapse(s):
    """Join the χ-weights of all witnesses of each (a, b)."""
    q = s.pom
    if not q.has_joins:
        raise QuantaleMismatch(f"{q.name} has no joins; V needs a quantale")
    acc = defaultdict(list)
    for a, b, c in s.points():
        acc[(a, b)].append(c)
    bot = q.bottom
    rows = [[q.join(acc[(a, b)]) if (a, b) in acc else bot for b in range(len(s.cod))]
            for a in range(len(s.dom))]
    return QRelation(q, s.dom, s.cod, rows, check=False)


def _require_hom(h, kind):
    rep = check_hom(h, kind=kind)
    if not rep.ok:
        raise StructureError(f"not a {kind} morphism: {rep.violations[0]}")


def hstar_rel(h, r, check=True):
    """Postcompose every entry with ``h``."""
    if r.quantale != h.source:
        raise QuantaleMismatch(f"relation over {r.quantale.name}, hom from {h.source.name}")
    if check:
        _require_hom(h, "quantale")
    return QRelation(h.target, r.dom, r.cod, [[h(v) for v in row] for row in r.matrix], check=False)


def hstar_span(h, s, check=True):
    """Postcompose χ with a monotone monoid morphism ``h``."""
    if s.pom != h.source:
        raise QuantaleMismatch(f"span over {s.pom.name}, hom from {h.source.name}")
    if check:
        _require_hom(h, "pom")
    return QSpan(h.target, s.dom, s.cod, s.apex, s.f, s.g, [h(c) for c in s.chi], check=False)


def _gate(i, flags, what):
    """i* is only defined on morphisms at least as strong as the interpretation's class."""
    cls = classify_interpretation(i).name
    ok = {
        "linear": True,
        "affine": flags.affine,
        "relevant": flags.relevant,
        "cartesian": flags.cartesian,
    }[cls]
    if not ok:
        raise ClassMismatch(f"{cls} interpretation needs a {cls} {what}, got a {flags.name} one")
    return cls


def istar_rel(i, r, verify=False):
    """Reinterpret the domain and codomain algebras; the matrix is unchanged."""
    _gate(i, qrel.classify_relation(r), "relation")
    out = QRelation(r.quantale, apply_interpretation(i, r.dom), apply_interpretation(i, r.cod),
                    r.matrix, check=False)
    if verify:
        rep = qrel.check_algebraic(out)
        if qrel.check_algebraic(r).ok and not rep.ok:
            raise AssertionError(f"i* produced a non-algebraic relation: {rep.violations[0]}")
    return out


def istar_span(i, s, verify=False):
    _gate(i, qspan.classify_span(s), "span")
    out = QSpan(s.pom, apply_interpretation(i, s.dom), apply_interpretation(i, s.cod),
                s.apex, s.f, s.g, s.chi, check=False)
    if verify:
        rep = qspan.check_algebraic_span(out)
        if qspan.check_algebraic_span(s).ok and not rep.ok:
            raise AssertionError(f"i* produced a non-algebraic span: {rep.violations[0]}")
    return out


# -- functor descriptors used by the square checks ----------------------------

class Collapse:
    """V from spans over ``q`` to relations over ``q``."""

    name = "V"
    target_kind = "rel"

    def __init__(self, q):
        self.q = q

    def __call__(self, s):
        return v_collapse(s)

    def map_hom(self, f):
        return f

    def source_graph(self, f):
        return qspan.span_graph(f, self.q)

    def target_graph(self, f):
        return qrel.rel_graph(f, self.q)


class MapQ:
    """h* on relations (``kind="rel"``) or spans (``kind="span"``)."""

    name = "h*"

    def __init__(self, h, kind="rel"):
        self.h = h
        self.target_kind = kind
        _require_hom(h, "quantale" if kind == "rel" else "pom")

    def __call__(self, m):
        if self.target_kind == "rel":
            return hstar_rel(self.h, m, check=False)
        return hstar_span(self.h, m, check=False)

    def map_hom(self, f):
        return f

    def _graph(self, f, q):
        return qrel.rel_graph(f, q) if self.target_kind == "rel" else qspan.span_graph(f, q)

    def source_graph(self, f):
        return self._graph(f, self.h.source)

    def target_graph(self, f):
        return self._graph(f, self.h.target)


class Reinterp:
    """i* on relations or spans over a fixed quantale ``q``."""

    name = "i*"

    def __init__(self, i, q, kind="rel"):
        self.i = i
        self.q = q
        self.target_kind = kind

    def __call__(self, m):
        return istar_rel(self.i, m) if self.target_kind == "rel" else istar_span(self.i, m)

    def map_hom(self, f):
        return apply_interpretation_hom(self.i, f)

    def _graph(self, f):
        if self.target_kind == "rel":
            return qrel.rel_graph(f, self.q)
        return qspan.span_graph(f, self.q)

    def source_graph(self, f):
        return self._graph(f)

    def target_graph(self, f):
        return self._graph(f)


def _converse(m):
    return qrel.rel_converse(m) if isinstance(m, QRelation) else qspan.span_converse(m)


def equal_morphisms(x, y, cap=SUITE_APEX_CAP):
    """Exact equality for relations, iso-class equality for spans."""
    if isinstance(x, QRelation) or isinstance(y, QRelation):
        return x == y
    if x.pom != y.pom or x.dom != y.dom or x.cod != y.cod:
        return False
    return bool(qspan.span_iso_eq(x, y, cap=cap))


def _describe(m):
    return repr(m)


def check_square_graph(functor, homs):
    """F(graph f) = graph(F f) for each sample homomorphism."""
    rep = Report(f"{functor.name} commutes with graphs")
    for f in homs:
        rep.checked += 1
        left = functor(functor.source_graph(f))
        right = functor.target_graph(functor.map_hom(f))
        if not equal_morphisms(left, right):
            rep.fail(hom=list(f.mapping), left=_describe(left), right=_describe(right))
    return rep


def check_square_converse(functor, morphisms):
    """F(m°) = F(m)° for each sample morphism."""
    rep = Report(f"{functor.name} commutes with converses")
    for m in morphisms:
        rep.checked += 1
        left = functor(_converse(m))
        right = _converse(functor(m))
        if not equal_morphisms(left, right):
            rep.fail(sample=_describe(m), left=_describe(left), right=_describe(right))
    return rep


BOX_FACES = (
    "top: h*∘i* = i*∘h* on spans",
    "bottom: h*∘i* = i*∘h* on relations",
    "left: V∘h* = h*∘V over the target signature",
    "right: V∘h* = h*∘V over the source signature",
    "back: V∘i* = i*∘V over the source quantale",
    "front: V∘i* = i*∘V over the target quantale",
    "diagonal: V∘i*∘h* = h*∘i*∘V",
)


def check_box(h, i, samples):
    """Check every face of the inner cube on each sample span.

    ``h`` is a quantale hom Q₁ → Q₂, ``i`` a linear interpretation
    (Σ₁, E₁) → (Σ₂, E₂), samples are spans over Σ₂-algebras and Q₁.
    """
    _require_hom(h, "quantale")
    cls = classify_interpretation(i).name
    if cls != "linear":
        raise ClassMismatch(f"the inner cube needs a linear interpretation, got a {cls} one")
    rep = Report("inner cube")
    for n, s in enumerate(samples):
        if s.pom != h.source:
            raise QuantaleMismatch("sample span is not over the hom's source quantale")
        if s.dom.signature != i.target:
            raise StructureError("sample span is not over the interpretation's target signature")
        hs = hstar_span(h, s, check=False)
        is_ = istar_span(i, s)
        vs = v_collapse(s)
        checks = (
            (BOX_FACES[0], hstar_span(h, is_, check=False), istar_span(i, hs)),
            (BOX_FACES[1], hstar_rel(h, istar_rel(i, vs), check=False), istar_rel(i, hstar_rel(h, vs, check=False))),
            (BOX_FACES[2], v_collapse(hs), hstar_rel(h, vs, check=False)),
            (BOX_FACES[3], v_collapse(hstar_span(h, is_, check=False)), hstar_rel(h, v_collapse(is_), check=False)),
            (BOX_FACES[4], v_collapse(is_), istar_rel(i, vs)),
            (BOX_FACES[5], v_collapse(istar_span(i, hs)), istar_rel(i, v_collapse(hs))),
            (BOX_FACES[6], v_collapse(istar_span(i, hs)), hstar_rel(h, istar_rel(i, vs), check=False)),
        )
        for face, left, right in checks:
            rep.checked += 1
            if not equal_morphisms(left, right):
                rep.fail(sample=n, face=face, left=_describe(left), right=_describe(right))
    return rep
