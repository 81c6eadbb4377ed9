"""Spans A ← X → B with a characteristic function X → Q.

Spans are kept as constructed representatives; compare them with
:func:`span_iso_eq`, never with ``==`` unless structural identity is meant.
"""
from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from . import algebra as alg
from .algebra import check_algebra_hom, eval_term, product_algebra
from .config import apex_cap, enum_cap, require_within
from .errors import QuantaleMismatch, StructureError, TypeChainError
from .quantale import classify_values
from .report import Report


class QSpan:
    __slots__ = ("pom", "dom", "cod", "apex", "f", "g", "chi")

    def __init__(self, pom, dom, cod, apex, f, g, chi, check=True):
        self.pom = pom
        self.dom = dom
        self.cod = cod
        self.apex = tuple(apex)
        self.f = tuple(f)
        self.g = tuple(g)
        self.chi = tuple(chi)
        if check:
            n = len(self.apex)
            if not (len(self.f) == len(self.g) == len(self.chi) == n):
                raise StructureError("legs and characteristic function must be total on the apex")
            if len(set(self.apex)) != n:
                raise StructureError("apex labels must be distinct")
            if any(not 0 <= i < len(dom) for i in self.f) or any(not 0 <= i < len(cod) for i in self.g):
                raise StructureError("span legs leave their carriers")
            for v in self.chi:
                pom.check(v)

    def __len__(self):
        return len(self.apex)

    def __eq__(self, other):
        # structural identity of representatives
        return (isinstance(other, QSpan) and self.pom == other.pom and self.dom == other.dom
                and self.cod == other.cod and self.apex == other.apex and self.f == other.f
                and self.g == other.g and self.chi == other.chi)

    def __hash__(self):
        return hash((self.apex, self.f, self.g, self.chi))

    def __repr__(self):
        pts = ", ".join(f"{self.dom.carrier[a]}<-{x}->{self.cod.carrier[b]}:{self.pom.dump(c)}"
                        for x, a, b, c in zip(self.apex, self.f, self.g, self.chi))
        return f"QSpan[{self.pom.name}]({pts})"

    @property
    def type_str(self):
        return f"{len(self.dom)}-element -> {len(self.cod)}-element"

    def points(self):
        return zip(self.f, self.g, self.chi)


def _fast(pom, dom, cod, apex, f, g, chi):
    return QSpan(pom, dom, cod, apex, f, g, chi, check=False)


def _same_pom(s, t):
    if s.pom != t.pom:
        raise QuantaleMismatch(f"spans over {s.pom.name} and {t.pom.name}")


def span_id(a, pom):
    n = len(a)
    return _fast(pom, a, a, a.carrier, range(n), range(n), [pom.unit] * n)


def span_compose(s, t):
    """Pullback composite: ``s: A → B`` then ``t: B → C``; apex pairs in lexicographic order."""
    _same_pom(s, t)
    if s.cod != t.dom:
        raise TypeChainError(f"cannot compose {s.type_str} with {t.type_str}")
    by_b = defaultdict(list)
    for y, b in enumerate(t.f):
        by_b[b].append(y)
    tensor = s.pom.tensor
    apex, f, g, chi = [], [], [], []
    for x, b in enumerate(s.g):
        for y in by_b.get(b, ()):
            apex.append((s.apex[x], t.apex[y]))
            f.append(s.f[x])
            g.append(t.g[y])
            chi.append(tensor(s.chi[x], t.chi[y]))
    return _fast(s.pom, s.dom, t.cod, apex, f, g, chi)


def span_tensor(s, t):
    _same_pom(s, t)
    nd, nc = len(t.dom), len(t.cod)
    tensor = s.pom.tensor
    apex, f, g, chi = [], [], [], []
    for x in range(len(s)):
        for y in range(len(t)):
            apex.append((s.apex[x], t.apex[y]))
            f.append(s.f[x] * nd + t.f[y])
            g.append(s.g[x] * nc + t.g[y])
            chi.append(tensor(s.chi[x], t.chi[y]))
    return _fast(s.pom, product_algebra(s.dom, t.dom), product_algebra(s.cod, t.cod), apex, f, g, chi)


def span_converse(s):
    return _fast(s.pom, s.cod, s.dom, s.apex, s.g, s.f, s.chi)


def _check_hom(f):
    rep = check_algebra_hom(f)
    if not rep.ok:
        raise StructureError(f"not a homomorphism: {rep.violations[0]}")


def span_graph(f, pom, check=True):
    """(A, 1, f, χ_k)."""
    if check:
        _check_hom(f)
    n = len(f.dom)
    return _fast(pom, f.dom, f.cod, f.dom.carrier, range(n), f.mapping, [pom.unit] * n)


def span_cograph(f, pom, check=True):
    """The converse of the graph, (A, f, 1, χ_k): cod → dom."""
    return span_converse(span_graph(f, pom, check=check))


def _graph(f, pom):
    return span_graph(f, pom, check=False)


def span_delta(a, pom):
    return _graph(alg.diagonal(a), pom)


def span_epsilon(a, pom):
    return _graph(alg.bang(a), pom)


def span_mu(a, pom):
    return span_converse(span_delta(a, pom))


def span_eta(a, pom):
    return span_converse(span_epsilon(a, pom))


def span_cup(a, pom):
    return span_compose(span_eta(a, pom), span_delta(a, pom))


def span_cap(a, pom):
    return span_compose(span_mu(a, pom), span_epsilon(a, pom))


def span_assoc(a, b, c, pom):
    return _graph(alg.assoc_map(a, b, c), pom)


def span_assoc_inv(a, b, c, pom):
    return _graph(alg.assoc_inv_map(a, b, c), pom)


def span_lunitor(a, pom):
    return _graph(alg.lunitor_map(a), pom)


def span_lunitor_inv(a, pom):
    return _graph(alg.lunitor_inv_map(a), pom)


def span_runitor(a, pom):
    return _graph(alg.runitor_map(a), pom)


def span_runitor_inv(a, pom):
    return _graph(alg.runitor_inv_map(a), pom)


def span_symmetry(a, b, pom):
    return _graph(alg.swap_map(a, b), pom)


def span_dagger(s):
    """Transpose via cup, cap and coherence maps (iso to the converse)."""
    pom, a, b = s.pom, s.dom, s.cod
    steps = [
        span_lunitor_inv(b, pom),
        span_tensor(span_cup(a, pom), span_id(b, pom)),
        span_assoc(a, a, b, pom),
        span_tensor(span_id(a, pom), span_tensor(s, span_id(b, pom))),
        span_tensor(span_id(a, pom), span_cap(b, pom)),
        span_runitor(a, pom),
    ]
    out = steps[0]
    for st in steps[1:]:
        out = span_compose(out, st)
    return out


# -- iso classes and the preorder -------------------------------------------

@dataclass(frozen=True)
class Match:
    """Result of an iso or embedding search; ``mapping[x]`` is the image of apex point x."""

    found: bool
    mapping: tuple = None

    def __bool__(self):
        return self.found


def _homset_check(s1, s2, what):
    _same_pom(s1, s2)
    if s1.dom != s2.dom or s1.cod != s2.cod:
        raise TypeChainError(f"{what} between spans of different types")


def span_iso_eq(s1, s2, cap=None):
    """Search a bijection of apexes preserving both legs and χ.

    The morphism conditions are pointwise, so an isomorphism exists exactly
    when the multisets of (f(x), g(x), χ(x)) fingerprints agree; matching each
    point to the least unused point with its fingerprint gives the
    lexicographically least witness.
    """
    _homset_check(s1, s2, "iso search")
    cap = apex_cap(cap)
    require_within(max(len(s1), len(s2)), cap, "apex size for iso search")
    if len(s1) != len(s2):
        return Match(False)
    pools = defaultdict(list)
    for y, fp in enumerate(s2.points()):
        pools[fp].append(y)
    for pool in pools.values():
        pool.reverse()
    mapping = []
    for fp in s1.points():
        pool = pools.get(fp)
        if not pool:
            return Match(False)
        mapping.append(pool.pop())
    return Match(True, tuple(mapping))


def is_span_morphism(s1, s2, alpha):
    return all(s1.f[x] == s2.f[y] and s1.g[x] == s2.g[y] and s1.chi[x] == s2.chi[y]
               for x, y in enumerate(alpha))


def span_leq(s1, s2, cap=None):
    """Search an injection m with equal legs and χ₁(x) <= χ₂(m(x)).

    Points only ever map within the same (f, g) leg pair, so the search is a
    bipartite matching per leg pair.  Points are assigned in apex order to the
    least candidate that still admits a complete matching, which yields the
    lexicographically least injection.
    """
    _homset_check(s1, s2, "order search")
    cap = apex_cap(cap)
    require_within(max(len(s1), len(s2)), cap, "apex size for order search")
    if len(s1) > len(s2):
        return Match(False)
    leq = s1.pom.leq
    candidates = []
    for x in range(len(s1)):
        cands = [y for y in range(len(s2))
                 if s2.f[y] == s1.f[x] and s2.g[y] == s1.g[x] and leq(s1.chi[x], s2.chi[y])]
        if not cands:
            return Match(False)
        candidates.append(cands)
    if not _has_matching(candidates, range(len(s1)), {}):
        return Match(False)
    fixed = {}
    for x in range(len(s1)):
        for y in candidates[x]:
            if y in fixed.values():
                continue
            fixed[x] = y
            if _has_matching(candidates, range(x + 1, len(s1)), fixed):
                break
            del fixed[x]
    return Match(True, tuple(fixed[x] for x in range(len(s1))))


def _has_matching(candidates, free, fixed):
    """Kuhn's augmenting paths: can every x in ``free`` be matched avoiding ``fixed`` targets?"""
    taken = set(fixed.values())
    owner = {}

    def augment(x, seen):
        for y in candidates[x]:
            if y in taken or y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = x
                return True
        return False

    return all(augment(x, set()) for x in free)


# -- algebraic structure and classes -----------------------------------------

def _witness_search(s, f_dom, f_cod, nvars, label, cap):
    pom = s.pom
    n = len(s)
    require_within(n**nvars * max(n, 1), cap, f"{label} over {nvars}-tuples of apex points")
    index = defaultdict(list)
    for x, (a, b, c) in enumerate(s.points()):
        index[(a, b)].append(x)
    rep = Report(label)
    for tup in product(range(n), repeat=nvars):
        rep.checked += 1
        need = pom.tensor_all(s.chi[x] for x in tup)
        ta = f_dom(tuple(s.f[x] for x in tup))
        tb = f_cod(tuple(s.g[x] for x in tup))
        if not any(pom.leq(need, s.chi[x]) for x in index.get((ta, tb), ())):
            rep.fail(points=[s.apex[x] for x in tup], image=[s.dom.carrier[ta], s.cod.carrier[tb]],
                     needed=pom.dump(need))
    return rep


def check_algebraic_span(s, cap=None):
    """Every σ-tuple of apex points has a witness over its σ-image with χ at least the tensor."""
    if s.dom.signature != s.cod.signature:
        raise StructureError("domain and codomain algebras have different signatures")
    cap = enum_cap(cap)
    rep = Report("algebraic span")
    for op, arity in s.dom.signature.ops:
        sub = _witness_search(s, lambda t, op=op: s.dom.apply(op, t),
                              lambda t, op=op: s.cod.apply(op, t), arity, f"op {op}", cap)
        for v in sub.violations:
            v["op"] = op
        rep.merge(sub)
    return rep


def check_span_closed_under_term(s, term, nvars, cap=None):
    cap = enum_cap(cap)
    rep = _witness_search(s, lambda t: eval_term(s.dom, term, t),
                          lambda t: eval_term(s.cod, term, t), nvars, f"closed under {term}", cap)
    tclass = alg.classify_term(term, nvars)
    sclass = classify_span(s)
    if not alg.admits(sclass, tclass.name):
        rep.notes.append(f"premise not met: {tclass.name} term on a {sclass.name} span")
    return rep


def classify_span(s):
    """Affine over all ordered pairs of apex points (x₁ = x₂ included); relevant per point."""
    return classify_values(s.pom, s.chi)


def is_internal_monad_span(s, cap=None):
    if s.dom != s.cod:
        raise TypeChainError("internal monads are endo-spans")
    unit = span_leq(span_id(s.dom, s.pom), s, cap=cap)
    if not unit:
        return Match(False)
    mult = span_leq(span_compose(s, s), s, cap=cap)
    return Match(bool(mult), mult.mapping)
