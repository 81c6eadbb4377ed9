"""Quantale-valued relations between finite algebras.

``rel_compose(R, S)`` is "R first, then S", i.e. the composite S∘R with
entries ⋁_b R(a,b) ⊗ S(b,c).
"""
from dataclasses import dataclass
from itertools import product

from . import algebra as alg
from .algebra import FiniteAlgebra, check_algebra_hom, eval_term, product_algebra, terminal_algebra
from .config import enum_cap, require_within
from .errors import QuantaleMismatch, StructureError, TypeChainError
from .quantale import classify_values
from .report import Report


class QRelation:
    """A |dom| x |cod| matrix of quantale values."""

    __slots__ = ("quantale", "dom", "cod", "matrix")

    def __init__(self, quantale, dom, cod, matrix, check=True):
        self.quantale = quantale
        self.dom = dom
        self.cod = cod
        rows = tuple(tuple(r) for r in matrix)
        if check:
            if len(rows) != len(dom) or any(len(r) != len(cod) for r in rows):
                raise StructureError(f"matrix must be {len(dom)}x{len(cod)}")
            for r in rows:
                for v in r:
                    quantale.check(v)
        self.matrix = rows

    def __eq__(self, other):
        return (isinstance(other, QRelation) and self.quantale == other.quantale
                and self.dom == other.dom and self.cod == other.cod and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.dom, self.cod, self.matrix))

    def __repr__(self):
        q = self.quantale
        rows = "; ".join(" ".join(str(q.dump(v)) for v in r) for r in self.matrix)
        return f"QRelation[{q.name}]({len(self.dom)}->{len(self.cod)}: {rows})"

    def __getitem__(self, ab):
        a, b = ab
        return self.matrix[a][b]

    @property
    def type_str(self):
        return f"{_obj_str(self.dom)} -> {_obj_str(self.cod)}"


def _obj_str(a):
    labels = ",".join(str(lab) for lab in a.carrier[:4])
    more = ",..." if len(a) > 4 else ""
    return f"{{{labels}{more}}}"


def _same_quantale(r, s):
    if r.quantale != s.quantale:
        raise QuantaleMismatch(f"relations over {r.quantale.name} and {s.quantale.name}")


def _fast(q, dom, cod, rows):
    return QRelation(q, dom, cod, rows, check=False)


def rel_id(a, q):
    n = len(a)
    k, bot = q.unit, q.bottom
    return _fast(q, a, a, [[k if i == j else bot for j in range(n)] for i in range(n)])


def rel_bottom(a, b, q):
    return _fast(q, a, b, [[q.bottom] * len(b) for _ in range(len(a))])


def rel_compose(r, s):
    """Diagrammatic composite: ``r: A → B`` then ``s: B → C``."""
    _same_quantale(r, s)
    if r.cod != s.dom:
        raise TypeChainError(f"cannot compose {r.type_str} with {s.type_str}")
    q = r.quantale
    bot = q.bottom
    join2, tensor = q.join2, q.tensor
    nc = len(s.cod)
    # rows of s restricted to non-bottom entries
    s_sparse = [[(c, v) for c, v in enumerate(row) if v != bot] for row in s.matrix]
    out = []
    for row in r.matrix:
        acc = [bot] * nc
        for b, rv in enumerate(row):
            if rv == bot:
                continue
            for c, sv in s_sparse[b]:
                acc[c] = join2(acc[c], tensor(rv, sv))
        out.append(acc)
    return _fast(q, r.dom, s.cod, out)


def rel_join(r, s):
    _same_quantale(r, s)
    if (r.dom, r.cod) != (s.dom, s.cod):
        raise TypeChainError(f"cannot join {r.type_str} with {s.type_str}")
    j = r.quantale.join2
    return _fast(r.quantale, r.dom, r.cod,
                 [[j(x, y) for x, y in zip(ra, sa)] for ra, sa in zip(r.matrix, s.matrix)])


def rel_tensor(r, s):
    _same_quantale(r, s)
    t = r.quantale.tensor
    rows = []
    for ra in r.matrix:
        for sa in s.matrix:
            rows.append([t(x, y) for x in ra for y in sa])
    return _fast(r.quantale, product_algebra(r.dom, s.dom), product_algebra(r.cod, s.cod), rows)


def rel_converse(r):
    return _fast(r.quantale, r.cod, r.dom, list(zip(*r.matrix)) if r.matrix else
                 [[] for _ in range(len(r.cod))])


def rel_graph(f, q, check=True):
    """The relation with k where f(a) = b and bottom elsewhere."""
    if check:
        rep = check_algebra_hom(f)
        if not rep.ok:
            raise StructureError(f"not a homomorphism: {rep.violations[0]}")
    k, bot = q.unit, q.bottom
    nb = len(f.cod)
    return _fast(q, f.dom, f.cod, [[k if f(a) == b else bot for b in range(nb)] for a in range(len(f.dom))])


def _graph(f, q):
    # coherence maps and canonical comonoids are homomorphisms by construction
    return rel_graph(f, q, check=False)


def rel_delta(a, q):
    return _graph(alg.diagonal(a), q)


def rel_epsilon(a, q):
    return _graph(alg.bang(a), q)


def rel_mu(a, q):
    return rel_converse(rel_delta(a, q))


def rel_eta(a, q):
    return rel_converse(rel_epsilon(a, q))


def rel_cup(a, q):
    """I → A⊗A: η then δ."""
    return rel_compose(rel_eta(a, q), rel_delta(a, q))


def rel_cap(a, q):
    """A⊗A → I: μ then ε."""
    return rel_compose(rel_mu(a, q), rel_epsilon(a, q))


def rel_assoc(a, b, c, q):
    return _graph(alg.assoc_map(a, b, c), q)


def rel_assoc_inv(a, b, c, q):
    return _graph(alg.assoc_inv_map(a, b, c), q)


def rel_lunitor(a, q):
    return _graph(alg.lunitor_map(a), q)


def rel_lunitor_inv(a, q):
    return _graph(alg.lunitor_inv_map(a), q)


def rel_runitor(a, q):
    return _graph(alg.runitor_map(a), q)


def rel_runitor_inv(a, q):
    return _graph(alg.runitor_inv_map(a), q)


def rel_symmetry(a, b, q):
    return _graph(alg.swap_map(a, b), q)


def rel_dagger(r):
    """The transpose built from cup, cap and coherence maps.

    B ≅ I⊗B → (A⊗A)⊗B ≅ A⊗(A⊗B) → A⊗(B⊗B) → A⊗I ≅ A
    """
    q, a, b = r.quantale, r.dom, r.cod
    steps = [
        rel_lunitor_inv(b, q),
        rel_tensor(rel_cup(a, q), rel_id(b, q)),
        rel_assoc(a, a, b, q),
        rel_tensor(rel_id(a, q), rel_tensor(r, rel_id(b, q))),
        rel_tensor(rel_id(a, q), rel_cap(b, q)),
        rel_runitor(a, q),
    ]
    out = steps[0]
    for s in steps[1:]:
        out = rel_compose(out, s)
    return out


def rel_leq(r, s):
    _same_quantale(r, s)
    if (r.dom, r.cod) != (s.dom, s.cod):
        raise TypeChainError(f"cannot compare {r.type_str} with {s.type_str}")
    leq = r.quantale.leq
    return all(leq(x, y) for ra, sa in zip(r.matrix, s.matrix) for x, y in zip(ra, sa))


def _inequation(r, f_dom, f_cod, nvars, label, cap):
    """Check ⊗_i R(a_i,b_i) <= R(f_dom(ā), f_cod(b̄)) over all tuples."""
    q = r.quantale
    na, nb = len(r.dom), len(r.cod)
    require_within((na * nb) ** nvars, cap, f"{label} over {nvars}-tuples")
    rep = Report(label)
    pairs = [(a, b) for a in range(na) for b in range(nb)]
    for tup in product(pairs, repeat=nvars):
        rep.checked += 1
        lhs = q.tensor_all(r.matrix[a][b] for a, b in tup)
        if lhs == q.bottom:
            continue
        abar = tuple(a for a, _ in tup)
        bbar = tuple(b for _, b in tup)
        ta, tb = f_dom(abar), f_cod(bbar)
        rhs = r.matrix[ta][tb]
        if not q.leq(lhs, rhs):
            rep.fail(a=[r.dom.carrier[i] for i in abar], b=[r.cod.carrier[i] for i in bbar],
                     image=[r.dom.carrier[ta], r.cod.carrier[tb]],
                     lhs=q.dump(lhs), rhs=q.dump(rhs))
    return rep


def check_algebraic(r, cap=None):
    """For every operation σ: R(a₁,b₁)⊗…⊗R(aₙ,bₙ) <= R(σ(ā), σ(b̄))."""
    if r.dom.signature != r.cod.signature:
        raise StructureError("domain and codomain algebras have different signatures")
    cap = enum_cap(cap)
    rep = Report("algebraic relation")
    for op, arity in r.dom.signature.ops:
        sub = _inequation(r, lambda t, op=op: r.dom.apply(op, t),
                          lambda t, op=op: r.cod.apply(op, t), arity, f"op {op}", cap)
        for v in sub.violations:
            v["op"] = op
        rep.merge(sub)
    return rep


def check_closed_under_term(r, term, nvars, cap=None):
    """The algebraic inequation for the derived operation of ``term``."""
    cap = enum_cap(cap)
    tclass = alg.classify_term(term, nvars)
    rep = _inequation(r, lambda t: eval_term(r.dom, term, t),
                      lambda t: eval_term(r.cod, term, t), nvars, f"closed under {term}", cap)
    rclass = classify_relation(r)
    if not alg.admits(rclass, tclass.name):
        rep.notes.append(f"premise not met: {tclass.name} term on a {rclass.name} relation")
    return rep


def classify_relation(r):
    """Affine/relevant flags from all entries (affine over all ordered entry pairs)."""
    return classify_values(r.quantale, [v for row in r.matrix for v in row])


@dataclass(frozen=True)
class MonadVerdict:
    holds: bool
    certificate: dict = None

    def __bool__(self):
        return self.holds


MONAD_LABELS = {
    "boolean": "preorder",
    "interval": "fuzzy preorder",
    "lawvere": "generalized metric",
    "ultrametric": "generalized ultrametric",
}


def is_internal_monad(r):
    """``1 ⊆ R`` and ``R∘R ⊆ R``; the certificate names the first failure."""
    if r.dom != r.cod:
        raise TypeChainError(f"internal monads are endo-relations, got {r.type_str}")
    q = r.quantale
    n = len(r.dom)
    lab = r.dom.carrier
    m = r.matrix
    for a in range(n):
        if not q.leq(q.unit, m[a][a]):
            return MonadVerdict(False, {"law": "unit", "at": [lab[a]], "value": q.dump(m[a][a])})
    for a in range(n):
        for b in range(n):
            ab = m[a][b]
            if ab == q.bottom:
                continue
            for c in range(n):
                lhs = q.tensor(ab, m[b][c])
                if not q.leq(lhs, m[a][c]):
                    return MonadVerdict(False, {"law": "transitivity", "at": [lab[a], lab[b], lab[c]],
                                                "lhs": q.dump(lhs), "rhs": q.dump(m[a][c])})
    return MonadVerdict(True)


def rel_closure(r, max_rounds=64):
    """Least internal monad above ``r``: join with the identity, square until stable."""
    if r.dom != r.cod:
        raise TypeChainError("closure needs an endo-relation")
    x = rel_join(rel_id(r.dom, r.quantale), r)
    for _ in range(max_rounds):
        nxt = rel_join(x, rel_compose(x, x))
        if nxt == x:
            return x
        x = nxt
    raise StructureError("closure did not stabilise")


def unit_object(signature):
    return terminal_algebra(signature)


__all__ = [name for name in dir() if name.startswith("rel_")] + [
    "QRelation", "check_algebraic", "check_closed_under_term", "classify_relation",
    "is_internal_monad", "MonadVerdict", "MONAD_LABELS", "unit_object", "FiniteAlgebra",
]
