"""Law-checking harness shared by the relation and span categories.

A *calculus* bundles the structure of one category: identities,
composition, tensor, converse, generators and coherence morphisms, plus
an equality and an order.  ``RelCalculus`` and ``SpanCalculus`` wrap
modules ``qrel`` and ``qspan``; ``mutant`` returns a deliberately broken
variant so that each law family can be shown to detect a bug.

Every check takes a ``LawSuite`` and returns a ``Report``.  Instances are
enumerated exhaustively when there are at most ``EXHAUSTIVE_LIMIT`` of
them and are otherwise drawn with a seeded generator.
"""
import random
from dataclasses import dataclass, field
from itertools import product
from math import prod

from . import qrel, qspan
from .algebra import terminal_algebra
from .config import DEFAULT_SEED, DEFAULT_SAMPLES, EXHAUSTIVE_LIMIT, SUITE_APEX_CAP
from .errors import StructureError
from .report import Report
from .sampling import all_relations, random_relation, random_span, random_value

# homsets larger than this are sampled rather than listed
HOMSET_LIST_LIMIT = 256


class RelCalculus:
    """Relations over a quantale; equality is exact."""

    target = "rel"
    equality = "exact"

    def __init__(self, quantale):
        self.q = quantale

    def unit_object(self, signature):
        return terminal_algebra(signature)

    def id(self, a):
        return qrel.rel_id(a, self.q)

    def compose(self, r, s):
        return qrel.rel_compose(r, s)

    def tensor(self, r, s):
        return qrel.rel_tensor(r, s)

    def converse(self, r):
        return qrel.rel_converse(r)

    def dagger(self, r):
        return qrel.rel_dagger(r)

    def graph(self, f):
        return qrel.rel_graph(f, self.q)

    def delta(self, a):
        return qrel.rel_delta(a, self.q)

    def epsilon(self, a):
        return qrel.rel_epsilon(a, self.q)

    def mu(self, a):
        return qrel.rel_mu(a, self.q)

    def eta(self, a):
        return qrel.rel_eta(a, self.q)

    def cup(self, a):
        return qrel.rel_cup(a, self.q)

    def cap(self, a):
        return qrel.rel_cap(a, self.q)

    def assoc(self, a, b, c):
        return qrel.rel_assoc(a, b, c, self.q)

    def assoc_inv(self, a, b, c):
        return qrel.rel_assoc_inv(a, b, c, self.q)

    def lunitor(self, a):
        return qrel.rel_lunitor(a, self.q)

    def lunitor_inv(self, a):
        return qrel.rel_lunitor_inv(a, self.q)

    def runitor(self, a):
        return qrel.rel_runitor(a, self.q)

    def runitor_inv(self, a):
        return qrel.rel_runitor_inv(a, self.q)

    def symmetry(self, a, b):
        return qrel.rel_symmetry(a, b, self.q)

    def equal(self, x, y):
        return x == y

    def leq(self, x, y):
        return qrel.rel_leq(x, y)

    def difference(self, x, y):
        """The first differing entry, as a JSON-friendly descriptor."""
        if (x.dom, x.cod) != (y.dom, y.cod):
            return {"types": [x.type_str, y.type_str]}
        for a, (rx, ry) in enumerate(zip(x.matrix, y.matrix)):
            for b, (vx, vy) in enumerate(zip(rx, ry)):
                if vx != vy:
                    return {"entry": [_label(x.dom, a), _label(x.cod, b)],
                            "left": self.q.dump(vx), "right": self.q.dump(vy)}
        return {}

    def describe(self, r):
        return [[self.q.dump(v) for v in row] for row in r.matrix]

    def homset(self, a, b):
        """All relations a → b when the quantale is finite and the set is small."""
        els = self.q.elements()
        if els is None or len(els) ** (len(a) * len(b)) > HOMSET_LIST_LIMIT:
            return None
        return list(all_relations(self.q, a, b))

    def random(self, a, b, rng):
        return random_relation(self.q, a, b, rng)

    def raise_(self, r, rng):
        """A relation above ``r``."""
        return qrel.rel_join(r, random_relation(self.q, r.dom, r.cod, rng, bottom_weight=0.6))

    def iso_copy(self, r, rng):
        return None


class SpanCalculus:
    """Spans over a partially ordered monoid; equality is iso-class equality."""

    target = "span"
    equality = "iso-class"

    def __init__(self, pom, apex_cap=SUITE_APEX_CAP, max_apex=3):
        self.q = pom
        self.apex_cap = apex_cap
        self.max_apex = max_apex

    def unit_object(self, signature):
        return terminal_algebra(signature)

    def id(self, a):
        return qspan.span_id(a, self.q)

    def compose(self, s, t):
        return qspan.span_compose(s, t)

    def tensor(self, s, t):
        return qspan.span_tensor(s, t)

    def converse(self, s):
        return qspan.span_converse(s)

    def dagger(self, s):
        return qspan.span_dagger(s)

    def graph(self, f):
        return qspan.span_graph(f, self.q)

    def delta(self, a):
        return qspan.span_delta(a, self.q)

    def epsilon(self, a):
        return qspan.span_epsilon(a, self.q)

    def mu(self, a):
        return qspan.span_mu(a, self.q)

    def eta(self, a):
        return qspan.span_eta(a, self.q)

    def cup(self, a):
        return qspan.span_cup(a, self.q)

    def cap(self, a):
        return qspan.span_cap(a, self.q)

    def assoc(self, a, b, c):
        return qspan.span_assoc(a, b, c, self.q)

    def assoc_inv(self, a, b, c):
        return qspan.span_assoc_inv(a, b, c, self.q)

    def lunitor(self, a):
        return qspan.span_lunitor(a, self.q)

    def lunitor_inv(self, a):
        return qspan.span_lunitor_inv(a, self.q)

    def runitor(self, a):
        return qspan.span_runitor(a, self.q)

    def runitor_inv(self, a):
        return qspan.span_runitor_inv(a, self.q)

    def symmetry(self, a, b):
        return qspan.span_symmetry(a, b, self.q)

    def equal(self, x, y):
        if (x.dom, x.cod) != (y.dom, y.cod):
            return False
        return bool(qspan.span_iso_eq(x, y, cap=self.apex_cap))

    def leq(self, x, y):
        return bool(qspan.span_leq(x, y, cap=self.apex_cap))

    def difference(self, x, y):
        if (x.dom, x.cod) != (y.dom, y.cod):
            return {"types": [x.type_str, y.type_str]}
        if len(x) != len(y):
            return {"apex sizes": [len(x), len(y)]}
        left = sorted(_point_key(x, p) for p in x.points())
        right = sorted(_point_key(y, p) for p in y.points())
        for px, py in zip(left, right):
            if px != py:
                return {"apex point": list(px), "unmatched by": list(py)}
        return {}

    def describe(self, s):
        return {"apex": len(s), "points": [list(_point_key(s, p)) for p in s.points()]}

    def homset(self, a, b):
        return None

    def random(self, a, b, rng):
        return random_span(self.q, a, b, rng, max_apex=self.max_apex)

    def raise_(self, s, rng):
        """A span above ``s``: raise some weights, then maybe add a point."""
        pom = self.q
        chi = list(s.chi)
        if pom.has_joins:
            for x in range(len(chi)):
                if rng.random() < 0.5:
                    chi[x] = pom.join2(chi[x], random_value(pom, rng))
        apex, f, g = list(s.apex), list(s.f), list(s.g)
        if len(s.dom) and len(s.cod) and rng.random() < 0.5:
            extra = random_span(pom, s.dom, s.cod, rng, 1, 1)
            apex.append(("new", len(apex)))
            f.append(extra.f[0])
            g.append(extra.g[0])
            chi.append(extra.chi[0])
        return qspan.QSpan(pom, s.dom, s.cod, apex, f, g, chi, check=False)

    def iso_copy(self, s, rng):
        """The same span with its apex listed in reverse and relabelled."""
        order = list(range(len(s)))[::-1]
        return qspan.QSpan(self.q, s.dom, s.cod, [("copy", i) for i in range(len(s))],
                           [s.f[i] for i in order], [s.g[i] for i in order],
                           [s.chi[i] for i in order], check=False)


def _label(a, i):
    lab = a.carrier[i]
    return list(lab) if isinstance(lab, tuple) else lab


def _point_key(s, p):
    f, g, c = p
    return (str(s.dom.carrier[f]), str(s.cod.carrier[g]), str(s.pom.dump(c)))


# -- mutants ----------------------------------------------------------------

class _JoinAsTensor(RelCalculus):
    """Composition folds with the tensor where it should join."""

    def compose(self, r, s):
        q = self.q
        rows = []
        for row in r.matrix:
            out = []
            for c in range(len(s.cod)):
                acc = q.bottom
                for b, v in enumerate(row):
                    acc = q.tensor(acc, q.tensor(v, s.matrix[b][c]))
                out.append(acc)
            rows.append(out)
        return qrel.QRelation(q, r.dom, s.cod, rows, check=False)


class _TensorAsJoin(RelCalculus):
    """The monoidal product combines entries by join."""

    def tensor(self, r, s):
        t = qrel.rel_tensor(r, s)
        j = self.q.join2
        rows = [[j(x, y) for x in ra for y in sa] for ra in r.matrix for sa in s.matrix]
        return qrel.QRelation(self.q, t.dom, t.cod, rows, check=False)


class _CopyEverything(RelCalculus):
    """Comultiplication relating every point to every pair."""

    def delta(self, a):
        d = qrel.rel_delta(a, self.q)
        k = self.q.unit
        return qrel.QRelation(self.q, d.dom, d.cod, [[k] * len(d.cod) for _ in range(len(d.dom))], check=False)


class _LooseCup(RelCalculus):
    """A cup that also links distinct points."""

    def cup(self, a):
        c = qrel.rel_cup(a, self.q)
        k = self.q.unit
        return qrel.QRelation(self.q, c.dom, c.cod, [[k] * len(c.cod)], check=False)


class _StrictOrder(RelCalculus):
    """An order that forgets reflexivity."""

    def leq(self, x, y):
        return qrel.rel_leq(x, y) and x != y


class _ForgetfulCompose(SpanCalculus):
    """Pullback composition that keeps only the first weight."""

    def compose(self, s, t):
        out = qspan.span_compose(s, t)
        chi = [s.chi[x] for x in range(len(s)) for y in range(len(t)) if s.g[x] == t.f[y]]
        return qspan.QSpan(self.q, out.dom, out.cod, out.apex, out.f, out.g, chi, check=False)


MUTANTS = {
    "compose-join-as-tensor": ("rel", _JoinAsTensor, "category"),
    "tensor-as-join": ("rel", _TensorAsJoin, "monoidal"),
    "copy-everything": ("rel", _CopyEverything, "hypergraph"),
    "loose-cup": ("rel", _LooseCup, "compact"),
    "strict-order": ("rel", _StrictOrder, "order"),
    "forgetful-span-compose": ("span", _ForgetfulCompose, "category"),
}


def mutant(name, quantale):
    """A broken calculus and the suite expected to catch it."""
    target, cls, suite = MUTANTS[name]
    return cls(quantale), suite


# -- suites -----------------------------------------------------------------

@dataclass
class LawSuite:
    """Samples and settings for one run of the law checks."""

    name: str
    calculus: object
    objects: list
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    exhaustive_limit: int = EXHAUSTIVE_LIMIT
    morphisms: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.objects:
            raise StructureError("a law suite needs at least one object")
        sigs = {a.signature for a in self.objects}
        if len(sigs) != 1:
            raise StructureError("suite objects must share a signature")

    @property
    def target(self):
        return self.calculus.target

    @property
    def equality(self):
        return self.calculus.equality

    @property
    def signature(self):
        return self.objects[0].signature

    def rng(self, law):
        return random.Random(f"{self.seed}:{self.name}:{law}")

    def homset(self, a, b):
        key = (a, b)
        if key in self.morphisms:
            return self.morphisms[key]
        return self.calculus.homset(a, b)

    def instances(self, law, arity, shape):
        """Yield ``(objects, morphisms)`` for a law over ``arity`` objects.

        ``shape`` lists the (source, target) object positions of each
        morphism argument.  Returns the generator and whether it is
        exhaustive.
        """
        obj_tuples = list(product(self.objects, repeat=arity))
        sizes = []
        for objs in obj_tuples:
            sets = [self.homset(objs[i], objs[j]) for i, j in shape]
            if any(s is None for s in sets):
                sizes = None
                break
            sizes.append(prod(len(s) for s in sets))
        if sizes is not None and sum(sizes) <= self.exhaustive_limit:
            def exhaustive():
                for objs in obj_tuples:
                    sets = [self.homset(objs[i], objs[j]) for i, j in shape]
                    for ms in product(*sets):
                        yield objs, ms
            return exhaustive(), True
        rng = self.rng(law)

        def sampled():
            for _ in range(self.samples):
                objs = rng.choice(obj_tuples)
                ms = []
                for i, j in shape:
                    listed = self.homset(objs[i], objs[j])
                    ms.append(rng.choice(listed) if listed else
                              self.calculus.random(objs[i], objs[j], rng))
                yield objs, tuple(ms)
        return sampled(), False


def _chain(c, *ms):
    out = ms[0]
    for m in ms[1:]:
        out = c.compose(out, m)
    return out


class _Checker:
    """Collects per-law reports into one suite report."""

    def __init__(self, suite, title):
        self.suite = suite
        self.c = suite.calculus
        self.report = Report(f"{title} laws ({suite.target}, {suite.name})")
        self.passed = []
        self.failed = []

    def law(self, name, instances, exhaustive=True):
        rep = Report(name, exhaustive=exhaustive)
        for descriptor, left, right in instances:
            rep.checked += 1
            if not self.c.equal(left, right):
                rep.fail(law=name, instance=descriptor, **self.c.difference(left, right))
        self._record(rep)
        return rep

    def predicate(self, name, instances, exhaustive=True):
        """``instances`` yields ``(descriptor, holds)`` pairs."""
        rep = Report(name, exhaustive=exhaustive)
        for descriptor, holds in instances:
            rep.checked += 1
            if not holds:
                rep.fail(law=name, instance=descriptor)
        self._record(rep)
        return rep

    def _record(self, rep):
        (self.passed if rep.ok else self.failed).append(rep.name)
        self.report.merge(rep)

    def done(self):
        self.report.notes.append(f"laws passed: {len(self.passed)}, failed: {len(self.failed)}")
        return self.report


def _objs(objs):
    return [len(a) for a in objs]


def _morph(c, ms):
    return [c.describe(m) for m in ms]


def check_category_laws(suite):
    ch = _Checker(suite, "category")
    c = suite.calculus

    it, ex = suite.instances("identity", 2, [(0, 1)])
    ch.law("left identity", ((_morph(c, ms), c.compose(c.id(objs[0]), ms[0]), ms[0])
                             for objs, ms in it), ex)
    it, ex = suite.instances("identity-right", 2, [(0, 1)])
    ch.law("right identity", ((_morph(c, ms), c.compose(ms[0], c.id(objs[1])), ms[0])
                              for objs, ms in it), ex)
    it, ex = suite.instances("associativity", 4, [(0, 1), (1, 2), (2, 3)])
    ch.law("associativity", ((_morph(c, ms), c.compose(c.compose(ms[0], ms[1]), ms[2]),
                              c.compose(ms[0], c.compose(ms[1], ms[2])))
                             for objs, ms in it), ex)
    return ch.done()


def check_monoidal_laws(suite):
    ch = _Checker(suite, "monoidal")
    c = suite.calculus
    unit = c.unit_object(suite.signature)

    def interchange():
        it, ex = suite.instances("interchange", 6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        return ((_morph(c, ms), c.compose(c.tensor(ms[0], ms[2]), c.tensor(ms[1], ms[3])),
                 c.tensor(c.compose(ms[0], ms[1]), c.compose(ms[2], ms[3])))
                for objs, ms in it), ex

    ch.law("interchange", *interchange())

    pairs = list(product(suite.objects, repeat=2))
    ch.law("tensor of identities", ((_objs(p), c.tensor(c.id(p[0]), c.id(p[1])),
                                     c.id(c.tensor(c.id(p[0]), c.id(p[1])).dom)) for p in pairs))

    it, ex = suite.instances("assoc-natural", 6, [(0, 3), (1, 4), (2, 5)])
    ch.law("associator naturality",
           ((_morph(c, ms),
             c.compose(c.assoc(*objs[:3]), c.tensor(ms[0], c.tensor(ms[1], ms[2]))),
             c.compose(c.tensor(c.tensor(ms[0], ms[1]), ms[2]), c.assoc(*objs[3:])))
            for objs, ms in it), ex)

    it, ex = suite.instances("lunitor-natural", 2, [(0, 1)])
    ch.law("left unitor naturality",
           ((_morph(c, ms), c.compose(c.lunitor(objs[0]), ms[0]),
             c.compose(c.tensor(c.id(unit), ms[0]), c.lunitor(objs[1]))) for objs, ms in it), ex)
    it, ex = suite.instances("runitor-natural", 2, [(0, 1)])
    ch.law("right unitor naturality",
           ((_morph(c, ms), c.compose(c.runitor(objs[0]), ms[0]),
             c.compose(c.tensor(ms[0], c.id(unit)), c.runitor(objs[1]))) for objs, ms in it), ex)
    it, ex = suite.instances("symmetry-natural", 4, [(0, 2), (1, 3)])
    ch.law("symmetry naturality",
           ((_morph(c, ms), c.compose(c.symmetry(objs[0], objs[1]), c.tensor(ms[1], ms[0])),
             c.compose(c.tensor(ms[0], ms[1]), c.symmetry(objs[2], objs[3]))) for objs, ms in it), ex)

    ch.law("symmetry is self-inverse",
           ((_objs(p), c.compose(c.symmetry(*p), c.symmetry(p[1], p[0])),
             c.id(c.symmetry(*p).dom)) for p in pairs))

    triples = list(product(suite.objects, repeat=3))
    ch.law("associator inverse",
           ((_objs(t), c.compose(c.assoc(*t), c.assoc_inv(*t)), c.id(c.assoc(*t).dom))
            for t in triples))
    ch.law("unitor inverses",
           ((_objs([a]), c.compose(c.lunitor_inv(a), c.lunitor(a)), c.id(a)) for a in suite.objects))
    ch.law("right unitor inverse",
           ((_objs([a]), c.compose(c.runitor_inv(a), c.runitor(a)), c.id(a)) for a in suite.objects))

    def pentagon(a, b, cc, d):
        i = c.id
        ab = c.tensor(i(a), i(b)).dom
        bc = c.tensor(i(b), i(cc)).dom
        cd = c.tensor(i(cc), i(d)).dom
        left = c.compose(c.assoc(ab, cc, d), c.assoc(a, b, cd))
        right = _chain(c, c.tensor(c.assoc(a, b, cc), i(d)),
                       c.assoc(a, bc, d),
                       c.tensor(i(a), c.assoc(b, cc, d)))
        return left, right

    quads = list(product(suite.objects, repeat=4))
    if len(quads) > suite.samples:
        quads = suite.rng("pentagon").sample(quads, suite.samples)
    ch.law("pentagon", ((_objs(t), *pentagon(*t)) for t in quads))

    ch.law("triangle",
           ((_objs(p),
             c.compose(c.assoc(p[0], unit, p[1]), c.tensor(c.id(p[0]), c.lunitor(p[1]))),
             c.tensor(c.runitor(p[0]), c.id(p[1]))) for p in pairs))

    def hexagon(a, b, cc):
        i = c.id
        bc = c.tensor(i(b), i(cc)).dom
        left = c.compose(c.assoc(a, b, cc), c.symmetry(a, bc))
        left = c.compose(left, c.assoc(b, cc, a))
        right = _chain(c, c.tensor(c.symmetry(a, b), i(cc)),
                       c.assoc(b, a, cc),
                       c.tensor(i(b), c.symmetry(a, cc)))
        return left, right

    if len(triples) > suite.samples:
        triples = suite.rng("hexagon").sample(triples, suite.samples)
    ch.law("hexagon", ((_objs(t), *hexagon(*t)) for t in triples))
    return ch.done()


def middle_four(c, a, b):
    """(A⊗A)⊗(B⊗B) → (A⊗B)⊗(A⊗B), built from coherence morphisms."""
    i = c.id
    bb = c.tensor(i(b), i(b)).dom
    ab = c.tensor(i(a), i(b)).dom
    return _chain(c,
                  c.assoc(a, a, bb),
                  c.tensor(i(a), c.assoc_inv(a, b, b)),
                  c.tensor(i(a), c.tensor(c.symmetry(a, b), i(b))),
                  c.tensor(i(a), c.assoc(b, a, b)),
                  c.assoc_inv(a, b, ab))


def _frobenius_left(c, a):
    return _chain(c, c.tensor(c.delta(a), c.id(a)), c.assoc(a, a, a), c.tensor(c.id(a), c.mu(a)))


def _frobenius_right(c, a):
    return _chain(c, c.tensor(c.id(a), c.delta(a)), c.assoc_inv(a, a, a), c.tensor(c.mu(a), c.id(a)))


def check_hypergraph_laws(suite):
    """Special commutative Frobenius structure on every object, coherent with the tensor."""
    ch = _Checker(suite, "hypergraph")
    c = suite.calculus
    objs = suite.objects
    i = c.id
    unit = c.unit_object(suite.signature)

    ch.law("coassociativity", ((_objs([a]),
                                _chain(c, c.delta(a), c.tensor(c.delta(a), i(a)), c.assoc(a, a, a)),
                                c.compose(c.delta(a), c.tensor(i(a), c.delta(a)))) for a in objs))
    ch.law("cocommutativity", ((_objs([a]), c.compose(c.delta(a), c.symmetry(a, a)), c.delta(a))
                               for a in objs))
    ch.law("left counit", ((_objs([a]), _chain(c, c.delta(a), c.tensor(c.epsilon(a), i(a)),
                                               c.lunitor(a)), i(a)) for a in objs))
    ch.law("right counit", ((_objs([a]), _chain(c, c.delta(a), c.tensor(i(a), c.epsilon(a)),
                                                c.runitor(a)), i(a)) for a in objs))
    ch.law("associativity of the monoid",
           ((_objs([a]), _chain(c, c.assoc_inv(a, a, a), c.tensor(c.mu(a), i(a)), c.mu(a)),
             c.compose(c.tensor(i(a), c.mu(a)), c.mu(a))) for a in objs))
    ch.law("commutativity of the monoid",
           ((_objs([a]), c.compose(c.symmetry(a, a), c.mu(a)), c.mu(a)) for a in objs))
    ch.law("left unit", ((_objs([a]), _chain(c, c.lunitor_inv(a), c.tensor(c.eta(a), i(a)), c.mu(a)),
                          i(a)) for a in objs))
    ch.law("right unit", ((_objs([a]), _chain(c, c.runitor_inv(a), c.tensor(i(a), c.eta(a)), c.mu(a)),
                           i(a)) for a in objs))
    ch.law("frobenius (left)", ((_objs([a]), _frobenius_left(c, a), c.compose(c.mu(a), c.delta(a)))
                                for a in objs))
    ch.law("frobenius (right)", ((_objs([a]), _frobenius_right(c, a), c.compose(c.mu(a), c.delta(a)))
                                 for a in objs))
    ch.law("special", ((_objs([a]), c.compose(c.delta(a), c.mu(a)), i(a)) for a in objs))

    pairs = list(product(objs, repeat=2))
    if len(pairs) > suite.samples:
        pairs = suite.rng("coherence").sample(pairs, suite.samples)

    def ab(p):
        return c.tensor(i(p[0]), i(p[1])).dom

    ch.law("comultiplication of a tensor",
           ((_objs(p), c.delta(ab(p)),
             c.compose(c.tensor(c.delta(p[0]), c.delta(p[1])), middle_four(c, *p))) for p in pairs))
    ch.law("counit of a tensor",
           ((_objs(p), c.epsilon(ab(p)),
             c.compose(c.tensor(c.epsilon(p[0]), c.epsilon(p[1])), c.lunitor(unit))) for p in pairs))
    ch.law("multiplication of a tensor",
           ((_objs(p), c.mu(ab(p)),
             c.compose(c.converse(middle_four(c, *p)), c.tensor(c.mu(p[0]), c.mu(p[1])))) for p in pairs))
    ch.law("unit of a tensor",
           ((_objs(p), c.eta(ab(p)),
             c.compose(c.lunitor_inv(unit), c.tensor(c.eta(p[0]), c.eta(p[1])))) for p in pairs))
    ch.law("structure on the unit object",
           (([], c.delta(unit), c.lunitor_inv(unit)), ([], c.epsilon(unit), i(unit))))
    return ch.done()


def check_compact_closed(suite):
    """Snake equations and the dagger given by the transpose."""
    ch = _Checker(suite, "compact closed")
    c = suite.calculus
    objs = suite.objects
    i = c.id

    ch.law("snake (left)", ((_objs([a]),
                             _chain(c, c.lunitor_inv(a), c.tensor(c.cup(a), i(a)), c.assoc(a, a, a),
                                    c.tensor(i(a), c.cap(a)), c.runitor(a)), i(a)) for a in objs))
    ch.law("snake (right)", ((_objs([a]),
                              _chain(c, c.runitor_inv(a), c.tensor(i(a), c.cup(a)),
                                     c.assoc_inv(a, a, a), c.tensor(c.cap(a), i(a)), c.lunitor(a)),
                              i(a)) for a in objs))
    ch.law("cap is the converse of cup", ((_objs([a]), c.cap(a), c.converse(c.cup(a))) for a in objs))
    ch.law("dagger of an identity", ((_objs([a]), c.dagger(i(a)), i(a)) for a in objs))

    it, ex = suite.instances("dagger-converse", 2, [(0, 1)])
    ch.law("dagger equals converse", ((_morph(c, ms), c.dagger(ms[0]), c.converse(ms[0]))
                                      for objs_, ms in it), ex)
    it, ex = suite.instances("dagger-involutive", 2, [(0, 1)])
    ch.law("dagger is involutive", ((_morph(c, ms), c.dagger(c.dagger(ms[0])), ms[0])
                                    for objs_, ms in it), ex)
    it, ex = suite.instances("dagger-contravariant", 3, [(0, 1), (1, 2)])
    ch.law("dagger is contravariant",
           ((_morph(c, ms), c.dagger(c.compose(ms[0], ms[1])),
             c.compose(c.dagger(ms[1]), c.dagger(ms[0]))) for objs_, ms in it), ex)
    it, ex = suite.instances("converse-monoidal", 4, [(0, 1), (2, 3)])
    ch.law("converse is monoidal",
           ((_morph(c, ms), c.converse(c.tensor(ms[0], ms[1])),
             c.tensor(c.converse(ms[0]), c.converse(ms[1]))) for objs_, ms in it), ex)
    return ch.done()


def check_order_enrichment(suite):
    """Order axioms and monotonicity of composition, tensor and converse.

    Relations are partially ordered.  Spans are only preordered: an iso
    copy of a span is below and above it without being structurally
    equal, and the report records such a witness in its notes.
    """
    ch = _Checker(suite, "order")
    c = suite.calculus
    leq = c.leq

    def related(law, arity, shape):
        """Instances whose first two morphisms are ordered (first below second)."""
        it, ex = suite.instances(law, arity, [shape[0], shape[0]] + shape[1:])
        if ex:
            return ((objs, ms) for objs, ms in it if leq(ms[0], ms[1])), True
        rng = suite.rng(law + "/raise")
        return ((objs, (ms[0], c.raise_(ms[0], rng)) + tuple(ms[2:])) for objs, ms in it), False

    it, ex = suite.instances("reflexive", 2, [(0, 1)])
    ch.predicate("reflexivity", ((_morph(c, ms), leq(ms[0], ms[0])) for _, ms in it), ex)

    it, ex = related("transitive", 2, [(0, 1)])
    rng = suite.rng("transitive/third")
    ch.predicate("transitivity",
                 ((_morph(c, ms), not leq(ms[1], top) or leq(ms[0], top))
                  for _, ms in it for top in [c.raise_(ms[1], rng)]), ex)

    it, ex = related("antisymmetric", 2, [(0, 1)])
    if c.target == "rel":
        ch.predicate("antisymmetry", ((_morph(c, ms), not leq(ms[1], ms[0]) or ms[0] == ms[1])
                                      for _, ms in it), ex)
    else:
        ch.predicate("antisymmetry up to iso",
                     ((_morph(c, ms), not leq(ms[1], ms[0]) or c.equal(ms[0], ms[1]))
                      for _, ms in it), ex)
        witness = _antisymmetry_witness(suite)
        if witness is not None:
            ch.report.notes.append(witness)

    it, ex = related("compose-left", 3, [(0, 1), (1, 2)])
    ch.predicate("composition monotone (first argument)",
                 ((_morph(c, ms), leq(c.compose(ms[0], ms[2]), c.compose(ms[1], ms[2])))
                  for _, ms in it), ex)
    it, ex = related("compose-right", 3, [(1, 2), (0, 1)])
    ch.predicate("composition monotone (second argument)",
                 ((_morph(c, ms), leq(c.compose(ms[2], ms[0]), c.compose(ms[2], ms[1])))
                  for _, ms in it), ex)
    it, ex = related("tensor", 4, [(0, 1), (2, 3)])
    ch.predicate("tensor monotone",
                 ((_morph(c, ms), leq(c.tensor(ms[0], ms[2]), c.tensor(ms[1], ms[2]))
                   and leq(c.tensor(ms[2], ms[0]), c.tensor(ms[2], ms[1]))) for _, ms in it), ex)
    it, ex = related("converse", 2, [(0, 1)])
    ch.predicate("converse monotone",
                 ((_morph(c, ms), leq(c.converse(ms[0]), c.converse(ms[1]))) for _, ms in it), ex)
    return ch.done()


def _antisymmetry_witness(suite):
    """Two spans below each other that are iso but not structurally equal."""
    c = suite.calculus
    rng = suite.rng("antisymmetry-witness")
    for a in suite.objects:
        for b in suite.objects:
            for _ in range(20):
                s = c.random(a, b, rng)
                if len(s) < 2:
                    continue
                t = c.iso_copy(s, rng)
                if c.leq(s, t) and c.leq(t, s) and s != t:
                    return {"antisymmetry fails structurally": {
                        "first": c.describe(s), "second": c.describe(t),
                        "iso": True}}
    return None


SUITES = {
    "category": check_category_laws,
    "monoidal": check_monoidal_laws,
    "hypergraph": check_hypergraph_laws,
    "compact": check_compact_closed,
    "order": check_order_enrichment,
}


def run_suite(kind, suite):
    try:
        check = SUITES[kind]
    except KeyError:
        raise StructureError(f"unknown law suite {kind!r}; choose from {sorted(SUITES)}") from None
    return check(suite)


def suite_json(rep):
    """The CLI-facing summary ``{"suite", "passed", "failed"}``."""
    return {
        "suite": rep.name,
        "passed": rep.checked - len(rep.violations),
        "failed": rep.violations,
        "exhaustive": rep.exhaustive,
        "notes": rep.notes,
    }


def make_suite(name, target, quantale, objects, **kw):
    calc = RelCalculus(quantale) if target == "rel" else SpanCalculus(quantale)
    return LawSuite(name, calc, list(objects), **kw)


__all__ = [
    "RelCalculus", "SpanCalculus", "LawSuite", "MUTANTS", "mutant", "middle_four",
    "check_category_laws", "check_monoidal_laws", "check_hypergraph_laws",
    "check_compact_closed", "check_order_enrichment", "SUITES", "run_suite", "suite_json",
    "make_suite",
]
