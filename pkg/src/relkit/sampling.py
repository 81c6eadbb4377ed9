"""Seeded generators for random quantale values, relations, spans and terms."""
import random
from fractions import Fraction
from itertools import product

from .algebra import App, Var, AlgebraHom, check_algebra_hom
from .errors import StructureError
from .qrel import QRelation, check_algebraic
from .qspan import QSpan
from .quantale import IntervalQuantale


def rng_for(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_value(q, rng, bottom_weight=0.25):
    """A random element; chains draw small-denominator rationals."""
    els = q.elements()
    if els is not None:
        return rng.choice(els)
    if rng.random() < bottom_weight:
        return q.bottom
    if isinstance(q, IntervalQuantale):
        den = rng.randint(1, 4)
        return Fraction(rng.randint(0, den), den)
    den = rng.choice((1, 1, 2, 3))
    return Fraction(rng.randint(0, 4 * den), den)


def random_relation(q, dom, cod, rng, bottom_weight=0.25):
    rng = rng_for(rng)
    return QRelation(q, dom, cod, [[random_value(q, rng, bottom_weight) for _ in range(len(cod))]
                                   for _ in range(len(dom))])


def all_relations(q, dom, cod):
    """Every relation between two carriers over a finite quantale."""
    els = q.elements()
    if els is None:
        raise StructureError(f"{q.name} is infinite")
    nb = len(cod)
    for flat in product(els, repeat=len(dom) * nb):
        yield QRelation(q, dom, cod, [flat[i * nb:(i + 1) * nb] for i in range(len(dom))], check=False)


def random_span(pom, dom, cod, rng, max_apex=5, min_apex=0):
    rng = rng_for(rng)
    n = rng.randint(min_apex, max_apex)
    if len(dom) == 0 or len(cod) == 0:
        n = 0
    return QSpan(pom, dom, cod, [f"x{i}" for i in range(n)],
                 [rng.randrange(len(dom)) for _ in range(n)],
                 [rng.randrange(len(cod)) for _ in range(n)],
                 [random_value(pom, rng, bottom_weight=0.1) for _ in range(n)])


def random_hom(dom, cod, rng, tries=200):
    """A random homomorphism, found by rejection sampling over maps."""
    rng = rng_for(rng)
    if len(dom) and not len(cod):
        return None
    for _ in range(tries):
        h = AlgebraHom(dom, cod, [rng.randrange(len(cod)) for _ in range(len(dom))])
        if check_algebra_hom(h).ok:
            return h
    return None


def algebraic_closure(r, max_rounds=200):
    """Least algebraic relation above ``r``: raise R(σ(ā), σ(b̄)) to the tensor of its premises."""
    q = r.quantale
    rows = [list(row) for row in r.matrix]
    na, nb = len(r.dom), len(r.cod)
    pairs = [(a, b) for a in range(na) for b in range(nb)]
    for _ in range(max_rounds):
        changed = False
        for op, arity in r.dom.signature.ops:
            for tup in product(pairs, repeat=arity):
                lhs = q.tensor_all(rows[a][b] for a, b in tup)
                if lhs == q.bottom:
                    continue
                ta = r.dom.apply(op, [a for a, _ in tup])
                tb = r.cod.apply(op, [b for _, b in tup])
                new = q.join2(rows[ta][tb], lhs)
                if new != rows[ta][tb]:
                    rows[ta][tb] = new
                    changed = True
        if not changed:
            out = QRelation(q, r.dom, r.cod, rows, check=False)
            assert check_algebraic(out).ok
            return out
    raise StructureError("algebraic closure did not stabilise")


def random_algebraic_relation(q, dom, cod, rng, density=0.3):
    """Closure of a sparse random relation; usually far from all-top."""
    rng = rng_for(rng)
    rows = [[random_value(q, rng, bottom_weight=0.0) if rng.random() < density else q.bottom
             for _ in range(len(cod))] for _ in range(len(dom))]
    return algebraic_closure(QRelation(q, dom, cod, rows, check=False))


def span_algebraic_closure(s, max_apex=64):
    """Add witness points until every operation tuple has one."""
    pom = s.pom
    apex, f, g, chi = list(s.apex), list(s.f), list(s.g), list(s.chi)
    fresh = 0
    changed = True
    while changed:
        changed = False
        for op, arity in s.dom.signature.ops:
            for tup in product(range(len(apex)), repeat=arity):
                need = pom.tensor_all(chi[x] for x in tup)
                ta = s.dom.apply(op, [f[x] for x in tup])
                tb = s.cod.apply(op, [g[x] for x in tup])
                if any(f[x] == ta and g[x] == tb and pom.leq(need, chi[x]) for x in range(len(apex))):
                    continue
                while f"w{fresh}" in apex:
                    fresh += 1
                apex.append(f"w{fresh}")
                f.append(ta)
                g.append(tb)
                chi.append(need)
                changed = True
                if len(apex) > max_apex:
                    return None
    return QSpan(pom, s.dom, s.cod, apex, f, g, chi, check=False)


def random_algebraic_span(pom, dom, cod, rng, max_apex=4, limit=12, tries=50):
    rng = rng_for(rng)
    for _ in range(tries):
        out = span_algebraic_closure(random_span(pom, dom, cod, rng, max_apex=max_apex), max_apex=limit)
        if out is not None:
            return out
    raise StructureError("could not generate a small algebraic span")


def random_term(signature, nvars, cls, rng, extra_uses=2):
    """A random term in which the variable usage follows ``cls``.

    linear: each variable exactly once; affine: at most once; relevant: at
    least once; cartesian: any multiset.
    """
    rng = rng_for(rng)
    vs = list(range(nvars))
    if cls == "linear":
        leaves = vs
    elif cls == "affine":
        leaves = [v for v in vs if rng.random() < 0.6]
    elif cls == "relevant":
        leaves = vs + [rng.choice(vs) for _ in range(rng.randint(1, extra_uses))] if vs else []
    elif cls == "cartesian":
        leaves = [v for v in vs if rng.random() < 0.6]
        leaves += [rng.choice(vs) for _ in range(rng.randint(0, extra_uses))] if vs else []
    else:
        raise StructureError(f"unknown term class {cls!r}")
    if not leaves and vs and not any(a == 0 for _, a in signature.ops):
        leaves = [rng.choice(vs)]
    rng.shuffle(leaves)
    return _build(signature, [Var(v) for v in leaves], rng)


def _build(signature, leaves, rng):
    consts = [op for op, a in signature.ops if a == 0]
    unary = [op for op, a in signature.ops if a == 1]
    multi = [(op, a) for op, a in signature.ops if a >= 2]
    if not leaves:
        if not consts:
            raise StructureError("no variables and no constants to build a term from")
        return App(rng.choice(consts))
    if len(leaves) == 1:
        t = leaves[0]
        if unary and rng.random() < 0.3:
            t = App(rng.choice(unary), (t,))
        return t
    fits = [(op, a) for op, a in multi if a <= len(leaves)]
    if not fits:
        if not multi:
            raise StructureError("signature cannot combine several variables")
        op, a = min(multi, key=lambda oa: oa[1])
        # pad with constants when the operation is wider than the leaf count
        if not consts:
            raise StructureError("operation arity exceeds available leaves")
        leaves = leaves + [App(rng.choice(consts))] * (a - len(leaves))
        fits = [(op, a)]
    op, a = rng.choice(fits)
    cuts = sorted(rng.sample(range(1, len(leaves)), a - 1))
    chunks = [leaves[i:j] for i, j in zip([0] + cuts, cuts + [len(leaves)])]
    return App(op, tuple(_build(signature, c, rng) if len(c) > 1 or isinstance(c[0], Var)
                         else c[0] for c in chunks))


__all__ = [
    "rng_for", "random_value", "random_relation", "all_relations", "random_span", "random_hom",
    "algebraic_closure", "random_algebraic_relation", "span_algebraic_closure",
    "random_algebraic_span", "random_term",
]
