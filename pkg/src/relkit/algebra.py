"""Finite universal algebra: signatures, terms, finite algebras, interpretations."""
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .config import enum_cap, require_within
from .errors import StructureError
from .report import Report


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class App:
    op: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.op
        return f"{self.op}({', '.join(map(str, self.args))})"


def var(i):
    return Var(i)


def app(op, *args):
    return App(op, tuple(args))


def term_vars(t):
    """Occurrence counts of each variable index in ``t``."""
    counts = Counter()
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Var):
            counts[s.index] += 1
        else:
            stack.extend(s.args)
    return counts


def substitute(t, env):
    """Replace ``Var(i)`` by ``env[i]``."""
    if isinstance(t, Var):
        return env[t.index]
    return App(t.op, tuple(substitute(a, env) for a in t.args))


@dataclass(frozen=True)
class Equation:
    vars: int
    lhs: object
    rhs: object

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Signature:
    ops: tuple = ()
    equations: tuple = ()
    name: str = ""

    def __post_init__(self):
        ops = tuple((str(n), int(a)) for n, a in self.ops)
        names = [n for n, _ in ops]
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate operation names in {names}")
        if any(a < 0 for _, a in ops):
            raise StructureError("arities must be non-negative")
        if "var" in names:
            raise StructureError("'var' is reserved for variables")
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "equations", tuple(self.equations))
        for eq in self.equations:
            self.check_term(eq.lhs, eq.vars)
            self.check_term(eq.rhs, eq.vars)

    def __eq__(self, other):
        return isinstance(other, Signature) and (self.ops, self.equations) == (other.ops, other.equations)

    def __hash__(self):
        return hash((self.ops, self.equations))

    def arity(self, op):
        for n, a in self.ops:
            if n == op:
                return a
        raise StructureError(f"unknown operation {op!r}")

    def check_term(self, t, nvars):
        if isinstance(t, Var):
            if not 0 <= t.index < nvars:
                raise StructureError(f"variable {t} outside a {nvars}-variable context")
            return
        if len(t.args) != self.arity(t.op):
            raise StructureError(f"{t.op} expects {self.arity(t.op)} arguments, got {len(t.args)}")
        for a in t.args:
            self.check_term(a, nvars)


EMPTY_SIGNATURE = Signature((), (), "empty")


class FiniteAlgebra:
    """A finite model of a signature.

    Elements are the indices ``0..n-1``; ``carrier`` holds their labels.  Each
    operation table is a flat tuple indexed in mixed radix by the argument
    indices (first argument most significant).
    """

    __slots__ = ("signature", "carrier", "tables", "_key", "_index")

    def __init__(self, signature, carrier, tables):
        self.signature = signature
        self.carrier = tuple(carrier)
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise StructureError("carrier labels must be distinct")
        tabs = {}
        for op, arity in signature.ops:
            if op not in tables:
                raise StructureError(f"missing table for {op!r}")
            flat = tuple(int(x) for x in tables[op])
            if len(flat) != n**arity:
                raise StructureError(f"table for {op!r} must have {n**arity} entries")
            if any(not 0 <= x < n for x in flat):
                raise StructureError(f"table for {op!r} leaves the carrier")
            tabs[op] = flat
        extra = set(tables) - set(tabs)
        if extra:
            raise StructureError(f"tables for undeclared operations {sorted(extra)}")
        self.tables = tabs
        self._key = (signature, self.carrier, tuple(tabs[o] for o, _ in signature.ops))
        self._index = None

    @classmethod
    def plain(cls, labels):
        """A bare finite set, as an algebra over the empty signature."""
        return cls(EMPTY_SIGNATURE, labels, {})

    @classmethod
    def from_function(cls, signature, carrier, ops):
        """Build tables from Python callables ``ops[name](*indices) -> index``."""
        n = len(carrier)
        tables = {}
        for op, arity in signature.ops:
            fn = ops[op]
            tables[op] = [fn(*args) for args in product(range(n), repeat=arity)]
        return cls(signature, carrier, tables)

    def __len__(self):
        return len(self.carrier)

    @property
    def size(self):
        return len(self.carrier)

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FiniteAlgebra({len(self.carrier)} elements, ops={[o for o, _ in self.signature.ops]})"

    def index(self, label):
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.carrier)}
        try:
            return self._index[label]
        except KeyError:
            raise StructureError(f"{label!r} is not in the carrier") from None

    def apply(self, op, args):
        n = len(self.carrier)
        idx = 0
        for a in args:
            idx = idx * n + a
        return self.tables[op][idx]

    def op_table(self, op):
        """Iterate ``(args, result)`` over the whole table of ``op``."""
        arity = self.signature.arity(op)
        flat = self.tables[op]
        for i, args in enumerate(product(range(len(self.carrier)), repeat=arity)):
            yield args, flat[i]


def eval_term(alg, t, env):
    if isinstance(t, Var):
        if not 0 <= t.index < len(env):
            raise StructureError(f"unbound variable {t}")
        return env[t.index]
    if t.op not in alg.tables:
        raise StructureError(f"unknown operation {t.op!r}")
    if len(t.args) != alg.signature.arity(t.op):
        raise StructureError(f"{t.op} applied to {len(t.args)} arguments")
    return alg.apply(t.op, [eval_term(alg, a, env) for a in t.args])


def term_function(alg, t, nvars):
    """Tabulate the derived operation of ``t`` as a dict from argument tuples."""
    return {env: eval_term(alg, t, env) for env in product(range(len(alg)), repeat=nvars)}


def check_equations(alg, equations=None, cap=None):
    """Evaluate both sides of every equation under every assignment."""
    cap = enum_cap(cap)
    eqs = alg.signature.equations if equations is None else equations
    rep = Report("equations")
    n = len(alg)
    for eq in eqs:
        require_within(n**eq.vars, cap, f"equation {eq}")
        for env in product(range(n), repeat=eq.vars):
            rep.checked += 1
            left, right = eval_term(alg, eq.lhs, env), eval_term(alg, eq.rhs, env)
            if left != right:
                rep.fail(equation=str(eq), assignment=[alg.carrier[i] for i in env],
                         lhs=alg.carrier[left], rhs=alg.carrier[right])
    return rep


# -- products and canonical objects -----------------------------------------

def product_algebra(a, b):
    """Componentwise product; the carrier is ordered lexicographically."""
    if a.signature != b.signature:
        raise StructureError("product of algebras over different signatures")
    nb = len(b)
    carrier = [(x, y) for x in a.carrier for y in b.carrier]
    tables = {}
    for op, arity in a.signature.ops:
        flat = []
        for args in product(range(len(a) * nb), repeat=arity):
            left = a.apply(op, [i // nb for i in args])
            right = b.apply(op, [i % nb for i in args])
            flat.append(left * nb + right)
        tables[op] = flat
    return FiniteAlgebra(a.signature, carrier, tables)


def terminal_algebra(signature):
    return FiniteAlgebra(signature, ("*",), {op: [0] for op, _ in signature.ops})


@dataclass(frozen=True, eq=False)
class AlgebraHom:
    dom: FiniteAlgebra
    cod: FiniteAlgebra
    mapping: tuple

    def __post_init__(self):
        m = tuple(int(x) for x in self.mapping)
        if len(m) != len(self.dom) or any(not 0 <= x < len(self.cod) for x in m):
            raise StructureError("homomorphism map is not a total function between the carriers")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def from_labels(cls, dom, cod, table):
        return cls(dom, cod, [cod.index(table[lab]) for lab in dom.carrier])

    def __call__(self, i):
        return self.mapping[i]

    def __eq__(self, other):
        return (isinstance(other, AlgebraHom) and self.dom == other.dom
                and self.cod == other.cod and self.mapping == other.mapping)

    def __hash__(self):
        return hash((self.dom, self.cod, self.mapping))

    def __repr__(self):
        return f"AlgebraHom({self.mapping})"


def check_algebra_hom(h, cap=None):
    rep = Report("algebra homomorphism")
    if h.dom.signature != h.cod.signature:
        raise StructureError("homomorphism between algebras over different signatures")
    cap = enum_cap(cap)
    for op, arity in h.dom.signature.ops:
        require_within(len(h.dom) ** arity, cap, f"hom check for {op}")
        for args, res in h.dom.op_table(op):
            rep.checked += 1
            image = h.cod.apply(op, [h(a) for a in args])
            if h(res) != image:
                rep.fail(op=op, args=[h.dom.carrier[a] for a in args],
                         expected=h.cod.carrier[image], got=h.cod.carrier[h(res)])
    return rep


def identity_hom(a):
    return AlgebraHom(a, a, range(len(a)))


def compose_homs(f, g):
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise StructureError("homomorphisms do not compose")
    return AlgebraHom(f.dom, g.cod, [g(f(i)) for i in range(len(f.dom))])


def product_hom(f, g):
    dom = product_algebra(f.dom, g.dom)
    cod = product_algebra(f.cod, g.cod)
    nb, nd = len(g.dom), len(g.cod)
    return AlgebraHom(dom, cod, [f(i // nb) * nd + g(i % nb) for i in range(len(dom))])


def diagonal(a):
    n = len(a)
    return AlgebraHom(a, product_algebra(a, a), [i * n + i for i in range(n)])


def bang(a):
    return AlgebraHom(a, terminal_algebra(a.signature), [0] * len(a))


def assoc_map(a, b, c):
    """(A×B)×C → A×(B×C).  Lexicographic indexing makes this the identity on indices."""
    dom = product_algebra(product_algebra(a, b), c)
    cod = product_algebra(a, product_algebra(b, c))
    return AlgebraHom(dom, cod, range(len(dom)))


def assoc_inv_map(a, b, c):
    dom = product_algebra(a, product_algebra(b, c))
    cod = product_algebra(product_algebra(a, b), c)
    return AlgebraHom(dom, cod, range(len(dom)))


def lunitor_map(a):
    """1×A → A."""
    dom = product_algebra(terminal_algebra(a.signature), a)
    return AlgebraHom(dom, a, range(len(a)))


def lunitor_inv_map(a):
    cod = product_algebra(terminal_algebra(a.signature), a)
    return AlgebraHom(a, cod, range(len(a)))


def runitor_map(a):
    """A×1 → A."""
    dom = product_algebra(a, terminal_algebra(a.signature))
    return AlgebraHom(dom, a, range(len(a)))


def runitor_inv_map(a):
    cod = product_algebra(a, terminal_algebra(a.signature))
    return AlgebraHom(a, cod, range(len(a)))


def swap_map(a, b):
    """A×B → B×A."""
    na, nb = len(a), len(b)
    dom, cod = product_algebra(a, b), product_algebra(b, a)
    return AlgebraHom(dom, cod, [(i % nb) * na + i // nb for i in range(na * nb)])


# -- term classes and interpretations ---------------------------------------

@dataclass(frozen=True)
class TermClass:
    linear: bool
    affine: bool
    relevant: bool
    cartesian: bool = True

    @property
    def name(self):
        if self.linear:
            return "linear"
        if self.affine:
            return "affine"
        if self.relevant:
            return "relevant"
        return "cartesian"

    def to_dict(self):
        return {"linear": self.linear, "affine": self.affine,
                "relevant": self.relevant, "cartesian": self.cartesian}


CLASS_NAMES = ("linear", "affine", "relevant", "cartesian")


def classify_term(t, nvars):
    counts = term_vars(t)
    uses = [counts.get(i, 0) for i in range(nvars)]
    return TermClass(
        linear=all(u == 1 for u in uses),
        affine=all(u <= 1 for u in uses),
        relevant=all(u >= 1 for u in uses),
    )


def admits(structure_class, term_class_name):
    """Whether a structure with the given resource flags supports terms of a class.

    ``structure_class`` has ``affine``/``relevant`` attributes.
    """
    return {
        "linear": True,
        "affine": structure_class.affine,
        "relevant": structure_class.relevant,
        "cartesian": structure_class.affine and structure_class.relevant,
    }[term_class_name]


@dataclass(frozen=True, eq=False)
class Interpretation:
    """Assigns each source operation a derived term of the target signature."""

    source: Signature
    target: Signature
    assign: dict

    def __post_init__(self):
        assign = dict(self.assign)
        for op, arity in self.source.ops:
            if op not in assign:
                raise StructureError(f"interpretation leaves {op!r} unassigned")
            self.target.check_term(assign[op], arity)
        extra = set(assign) - {o for o, _ in self.source.ops}
        if extra:
            raise StructureError(f"interpretation assigns undeclared operations {sorted(extra)}")
        object.__setattr__(self, "assign", assign)

    def _key(self):
        return (self.source, self.target, tuple(sorted(self.assign.items(), key=lambda kv: kv[0])))

    def __eq__(self, other):
        return isinstance(other, Interpretation) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def translate(self, t):
        """Rewrite a source-signature term into the target signature."""
        if isinstance(t, Var):
            return t
        args = [self.translate(a) for a in t.args]
        return substitute(self.assign[t.op], args)


def identity_interpretation(sig):
    return Interpretation(sig, sig, {op: App(op, tuple(Var(i) for i in range(a))) for op, a in sig.ops})


def trivial_interpretation(sig):
    """The unique interpretation of the empty signature into ``sig``."""
    return Interpretation(EMPTY_SIGNATURE, sig, {})


def compose_interpretations(first, second):
    """``first: S1 → S2`` then ``second: S2 → S3`` gives ``S1 → S3``."""
    if first.target != second.source:
        raise StructureError("interpretations do not compose")
    return Interpretation(first.source, second.target,
                          {op: second.translate(t) for op, t in first.assign.items()})


@dataclass(frozen=True)
class InterpretationClass:
    name: str
    per_op: dict

    def to_dict(self):
        return {"class": self.name, "ops": dict(self.per_op)}


def classify_interpretation(i):
    per_op = {op: classify_term(i.assign[op], a) for op, a in i.source.ops}
    classes = list(per_op.values())
    if all(c.linear for c in classes):
        name = "linear"
    elif all(c.affine for c in classes):
        name = "affine"
    elif all(c.relevant for c in classes):
        name = "relevant"
    else:
        name = "cartesian"
    return InterpretationClass(name, {op: c.name for op, c in per_op.items()})


def apply_interpretation(i, alg):
    """Reinterpret a target-signature algebra as a source-signature algebra."""
    if alg.signature != i.target:
        raise StructureError("algebra is not over the interpretation's target signature")
    tables = {}
    for op, arity in i.source.ops:
        t = i.assign[op]
        tables[op] = [eval_term(alg, t, env) for env in product(range(len(alg)), repeat=arity)]
    return FiniteAlgebra(i.source, alg.carrier, tables)


def apply_interpretation_hom(i, f):
    return AlgebraHom(apply_interpretation(i, f.dom), apply_interpretation(i, f.cod), f.mapping)


def validate_interpretation(i, witnesses, cap=None):
    """Model-check the translated source equations in every witness algebra.

    This is validity in the supplied finite models, which is weaker than
    derivability in equational logic.
    """
    rep = Report("interpretation validity")
    rep.notes.append("semantic check in the supplied witness algebras; weaker than equational derivability")
    translated = [Equation(eq.vars, i.translate(eq.lhs), i.translate(eq.rhs)) for eq in i.source.equations]
    for w_index, w in enumerate(witnesses):
        if w.signature != i.target:
            raise StructureError("witness algebra is not over the target signature")
        sub = check_equations(w, translated, cap=cap)
        rep.checked += sub.checked
        for v in sub.violations:
            rep.fail(witness=w_index, **v)
    return rep
