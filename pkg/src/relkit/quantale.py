"""Commutative quantales and partially ordered commutative monoids.

Values of the built-in chains are exact: :class:`fractions.Fraction` plus the
singleton :data:`INF`.  Values of table quantales are element indices.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from itertools import combinations, product

from .errors import QuantaleMismatch, StructureError, UnknownName
from .report import Report


@total_ordering
class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("relkit.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def parse_extrat(text):
    """Parse ``"p/q"``, ``"0"`` or ``"inf"`` (ints and Fractions pass through)."""
    if text is INF:
        return INF
    if isinstance(text, bool):
        raise QuantaleMismatch(f"boolean literal {text!r} is not an extended rational")
    if isinstance(text, (int, Fraction)):
        value = Fraction(text)
    elif isinstance(text, str):
        s = text.strip().lower()
        if s in ("inf", "infinity", "∞"):
            return INF
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise QuantaleMismatch(f"not an extended rational: {text!r}") from exc
    else:
        raise QuantaleMismatch(f"not an extended rational: {text!r}")
    if value < 0:
        raise QuantaleMismatch(f"extended rationals are non-negative, got {text!r}")
    return value


def format_extrat(v):
    if v is INF:
        return "inf"
    return str(Fraction(v))


def _is_rational(v):
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


class Quantale:
    """Interface shared by built-in chains and table quantales.

    ``join``/``tensor``/``leq`` are unchecked fast paths used by the relation
    and span code.  The module-level ``q_join``/``q_tensor``/``q_leq`` check
    membership first.
    """

    name = "quantale"
    finite = False
    has_joins = True
    bottom = None
    unit = None

    def contains(self, v):
        raise NotImplementedError

    def join2(self, a, b):
        raise NotImplementedError

    def tensor(self, a, b):
        raise NotImplementedError

    def leq(self, a, b):
        return self.join2(a, b) == b

    def join(self, values):
        acc = self.bottom
        for v in values:
            acc = self.join2(acc, v)
        return acc

    def tensor_all(self, values):
        acc = self.unit
        for v in values:
            acc = self.tensor(acc, v)
        return acc

    def elements(self):
        """All elements for finite carriers, else None."""
        return None

    def sample_elements(self):
        """A finite set of representative elements used by sampled checks."""
        return self.elements()

    def coerce(self, raw):
        """Turn a JSON literal into a value of this quantale."""
        raise NotImplementedError

    def dump(self, v):
        raise NotImplementedError

    def check(self, v):
        if not self.contains(v):
            raise QuantaleMismatch(f"{v!r} is not an element of {self.name}")
        return v

    def descriptor(self):
        raise NotImplementedError


class _Builtin(Quantale):
    """Base for the built-in chains; instances compare equal by class."""

    samples = ()

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(type(self).__name__)

    def __repr__(self):
        return f"builtin({self.name!r})"

    def contains(self, v):
        return _is_rational(v) and v >= 0

    def coerce(self, raw):
        return self.check(parse_extrat(raw))

    def dump(self, v):
        return format_extrat(v)

    def sample_elements(self):
        return tuple(self.samples)

    def descriptor(self):
        return {"kind": "builtin", "name": self.name}


class BooleanQuantale(_Builtin):
    name = "boolean"
    finite = True
    bottom = Fraction(0)
    unit = Fraction(1)

    def contains(self, v):
        return _is_rational(v) and v in (0, 1)

    def join2(self, a, b):
        return a if a >= b else b

    def tensor(self, a, b):
        return a if a <= b else b

    def leq(self, a, b):
        return a <= b

    def elements(self):
        return (Fraction(0), Fraction(1))


class IntervalQuantale(_Builtin):
    """Rationals in [0, 1] with max as join and min as tensor."""

    name = "interval"
    bottom = Fraction(0)
    unit = Fraction(1)
    samples = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))

    def contains(self, v):
        return _is_rational(v) and 0 <= v <= 1

    def join2(self, a, b):
        return a if a >= b else b

    def tensor(self, a, b):
        return a if a <= b else b

    def leq(self, a, b):
        return a <= b


class _ReverseChain(_Builtin):
    # [0, inf] ordered by reverse numeric order: joins are minima, bottom is inf
    bottom = INF
    unit = Fraction(0)
    samples = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), INF)

    def contains(self, v):
        return v is INF or (_is_rational(v) and v >= 0)

    def join2(self, a, b):
        return a if a <= b else b

    def leq(self, a, b):
        return a >= b


class LawvereQuantale(_ReverseChain):
    name = "lawvere"

    def tensor(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b


class UltrametricQuantale(_ReverseChain):
    name = "ultrametric"

    def tensor(self, a, b):
        return a if a >= b else b


class TerminalQuantale(_Builtin):
    name = "terminal"
    finite = True
    bottom = Fraction(0)
    unit = Fraction(0)

    def contains(self, v):
        return _is_rational(v) and v == 0

    def join2(self, a, b):
        return self.bottom

    def tensor(self, a, b):
        return self.unit

    def leq(self, a, b):
        return True

    def elements(self):
        return (Fraction(0),)


BUILTINS = {
    "boolean": BooleanQuantale(),
    "interval": IntervalQuantale(),
    "lawvere": LawvereQuantale(),
    "ultrametric": UltrametricQuantale(),
    "terminal": TerminalQuantale(),
}
_ALIASES = {"B": "boolean", "I": "interval", "C": "lawvere", "F": "ultrametric", "1": "terminal"}


def builtin(name):
    """Look up a built-in quantale by name (or its one-letter alias)."""
    key = _ALIASES.get(name, name)
    try:
        return BUILTINS[key]
    except KeyError:
        raise UnknownName(f"unknown builtin quantale {name!r}") from None


def _square(table, n, what):
    rows = tuple(tuple(int(x) for x in row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"{what} table must be {n}x{n}")
    if any(not 0 <= x < n for r in rows for x in r):
        raise StructureError(f"{what} table has entries outside the carrier")
    return rows


@dataclass(frozen=True, eq=False)
class TableQuantale(Quantale):
    """Finite quantale given by binary join, bottom, tensor and unit tables.

    With ``join=None`` the structure is only a partially ordered monoid and
    ``order`` (an n x n boolean matrix, ``order[a][b]`` meaning a <= b) must
    be supplied instead.
    """

    carrier: int
    tensor_table: tuple
    unit: int
    join_table: tuple = None
    bottom: int = None
    order: tuple = None
    name: str = field(default="table")

    finite = True

    def __post_init__(self):
        n = self.carrier
        if n < 1:
            raise StructureError("a quantale carrier needs at least one element")
        object.__setattr__(self, "tensor_table", _square(self.tensor_table, n, "tensor"))
        if not 0 <= self.unit < n:
            raise StructureError("unit outside the carrier")
        if self.join_table is not None:
            object.__setattr__(self, "join_table", _square(self.join_table, n, "join"))
            if self.bottom is None or not 0 <= self.bottom < n:
                raise StructureError("a join table needs a bottom element in the carrier")
            order = tuple(tuple(self.join_table[a][b] == b for b in range(n)) for a in range(n))
            object.__setattr__(self, "order", order)
        elif self.order is None:
            raise StructureError("a table pom needs either a join table or an order")
        else:
            order = tuple(tuple(bool(x) for x in row) for row in self.order)
            if len(order) != n or any(len(r) != n for r in order):
                raise StructureError(f"order table must be {n}x{n}")
            object.__setattr__(self, "order", order)

    @property
    def has_joins(self):
        return self.join_table is not None

    def _key(self):
        return (self.carrier, self.tensor_table, self.unit, self.join_table, self.bottom, self.order)

    def __eq__(self, other):
        return isinstance(other, TableQuantale) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"TableQuantale({self.name!r}, carrier={self.carrier})"

    def contains(self, v):
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.carrier

    def join2(self, a, b):
        if self.join_table is None:
            raise QuantaleMismatch(f"{self.name} has no joins")
        return self.join_table[a][b]

    def tensor(self, a, b):
        return self.tensor_table[a][b]

    def leq(self, a, b):
        return self.order[a][b]

    def elements(self):
        return tuple(range(self.carrier))

    def coerce(self, raw):
        if isinstance(raw, str) and raw.strip().isdigit():
            raw = int(raw)
        return self.check(raw)

    def dump(self, v):
        return v

    def descriptor(self):
        d = {"kind": "table", "carrier": self.carrier}
        if self.join_table is not None:
            d["join"] = [list(r) for r in self.join_table]
            d["bottom"] = self.bottom
        else:
            d["order"] = [[int(x) for x in r] for r in self.order]
        d["tensor"] = [list(r) for r in self.tensor_table]
        d["unit"] = self.unit
        return d


def pom_view(q):
    """The partially ordered monoid underlying ``q`` (joins dropped)."""
    if isinstance(q, TableQuantale) and q.has_joins:
        return TableQuantale(q.carrier, q.tensor_table, q.unit, order=q.order, name=q.name)
    return q


def _checked(q, *values):
    for v in values:
        q.check(v)


def q_join(q, values):
    values = list(values)
    _checked(q, *values)
    if not q.has_joins:
        raise QuantaleMismatch(f"{q.name} has no joins")
    return q.join(values)


def q_tensor(q, a, b):
    _checked(q, a, b)
    return q.tensor(a, b)


def q_leq(q, a, b):
    _checked(q, a, b)
    return q.leq(a, b)


def _subsets(elements):
    for r in range(len(elements) + 1):
        yield from combinations(elements, r)


def check_quantale_axioms(q, subset_cap=16):
    """Exhaustively verify the quantale (or pom) axioms of a table quantale."""
    rep = Report(f"quantale axioms: {q.name}")
    if not isinstance(q, TableQuantale):
        rep.notes.append("builtin quantales are axiom-correct by construction; nothing enumerated")
        return rep
    els = q.elements()
    t, k = q.tensor, q.unit
    for a, b, c in product(els, repeat=3):
        rep.checked += 1
        if t(a, t(b, c)) != t(t(a, b), c):
            rep.fail(law="tensor associativity", instance=[a, b, c])
        if q.has_joins and q.join2(a, q.join2(b, c)) != q.join2(q.join2(a, b), c):
            rep.fail(law="join associativity", instance=[a, b, c])
        if not q.has_joins and q.leq(a, b) and q.leq(b, c) and not q.leq(a, c):
            rep.fail(law="order transitivity", instance=[a, b, c])
    for a, b in product(els, repeat=2):
        rep.checked += 1
        if t(a, b) != t(b, a):
            rep.fail(law="tensor commutativity", instance=[a, b])
        if q.has_joins and q.join2(a, b) != q.join2(b, a):
            rep.fail(law="join commutativity", instance=[a, b])
        if a != b and q.leq(a, b) and q.leq(b, a):
            rep.fail(law="order antisymmetry", instance=[a, b])
    for a in els:
        rep.checked += 1
        if t(k, a) != a:
            rep.fail(law="unit", instance=[a])
        if q.has_joins:
            if q.join2(a, a) != a:
                rep.fail(law="join idempotence", instance=[a])
            if q.join2(q.bottom, a) != a:
                rep.fail(law="bottom neutral for join", instance=[a])
        elif not q.leq(a, a):
            rep.fail(law="order reflexivity", instance=[a])
    if q.has_joins:
        if q.carrier > subset_cap:
            rep.notes.append("distributivity checked over binary joins and bottom only (carrier above subset cap)")
            rep.exhaustive = False
            subsets = [()] + [tuple(p) for p in combinations(els, 2)]
        else:
            subsets = list(_subsets(els))
        for a in els:
            for sub in subsets:
                rep.checked += 1
                lhs = t(a, q.join(sub))
                rhs = q.join(t(a, b) for b in sub)
                if lhs != rhs:
                    rep.fail(law="distributivity", instance=[a, list(sub)])
    else:
        for a, b, c in product(els, repeat=3):
            if q.leq(a, b) and not q.leq(t(a, c), t(b, c)):
                rep.fail(law="tensor monotone", instance=[a, b, c])
    return rep


@dataclass(frozen=True)
class QuantaleClass:
    affine: bool
    relevant: bool

    @property
    def cartesian(self):
        return self.affine and self.relevant

    @property
    def name(self):
        if self.cartesian:
            return "cartesian"
        if self.affine:
            return "affine"
        if self.relevant:
            return "relevant"
        return "linear"

    def to_dict(self):
        return {"affine": self.affine, "relevant": self.relevant, "cartesian": self.cartesian}


_BUILTIN_CLASSES = {
    "boolean": QuantaleClass(True, True),
    "interval": QuantaleClass(True, True),
    "lawvere": QuantaleClass(True, False),
    "ultrametric": QuantaleClass(True, True),
    "terminal": QuantaleClass(True, True),
}


def classify_values(q, values):
    """Resource flags of a finite set of values of ``q``.

    Affine: every ordered pair (including equal pairs) satisfies p⊗r <= p.
    Relevant: every value satisfies p <= p⊗p.
    """
    values = list(dict.fromkeys(values))
    affine = all(q.leq(q.tensor(p, r), p) for p in values for r in values)
    relevant = all(q.leq(p, q.tensor(p, p)) for p in values)
    return QuantaleClass(affine, relevant)


def classify_quantale(q):
    if isinstance(q, _Builtin):
        return _BUILTIN_CLASSES[q.name]
    return classify_values(q, q.elements())


# -- homomorphisms -----------------------------------------------------------

_NAMED_MAPS = {}


def _named(name):
    def deco(fn):
        _NAMED_MAPS[name] = fn
        return fn
    return deco


@_named("identity")
def _identity_map(source, target):
    if source != target:
        raise StructureError("identity map needs equal source and target")
    return lambda v: v


@_named("boolean_to")
def _boolean_to(source, target):
    if source != BUILTINS["boolean"]:
        raise StructureError("boolean_to needs the boolean quantale as source")
    return lambda v: target.unit if v == 1 else target.bottom


@_named("unit")
def _unit_map(source, target):
    if source.elements() is None or len(source.elements()) != 1:
        raise StructureError("unit map needs a one-element source")
    return lambda v: target.unit


@_named("to_terminal")
def _to_terminal(source, target):
    if target.elements() is None or len(target.elements()) != 1:
        raise StructureError("to_terminal needs a one-element target")
    only = target.elements()[0]
    return lambda v: only


@_named("double")
def _double(source, target):
    if not isinstance(source, _ReverseChain) or source != target:
        raise StructureError("double is an endomorphism of lawvere or ultrametric")
    return lambda v: INF if v is INF else 2 * v


NAMED_MAP_ALIASES = {"boolean_to_lawvere": "boolean_to"}


@dataclass(frozen=True, eq=False)
class QuantaleHom:
    """A structure map between quantales (or poms).

    Give either ``table`` (a dict from every source element to a target
    element, finite sources only) or ``named`` (one of the shipped maps:
    identity, boolean_to, unit, to_terminal, double).
    """

    source: Quantale
    target: Quantale
    table: dict = None
    named: str = None

    def __post_init__(self):
        if (self.table is None) == (self.named is None):
            raise StructureError("a quantale hom needs exactly one of table or named")
        if self.table is not None:
            els = self.source.elements()
            if els is None:
                raise StructureError("table maps need a finite source")
            tbl = {self.source.check(k): self.target.check(v) for k, v in self.table.items()}
            missing = [e for e in els if e not in tbl]
            if missing:
                raise StructureError(f"table map undefined on {missing}")
            object.__setattr__(self, "table", tbl)
            fn = tbl.__getitem__
        else:
            key = NAMED_MAP_ALIASES.get(self.named, self.named)
            if key not in _NAMED_MAPS:
                raise UnknownName(f"unknown named quantale map {self.named!r}")
            fn = _NAMED_MAPS[key](self.source, self.target)
        object.__setattr__(self, "_fn", fn)

    def __call__(self, v):
        return self._fn(v)

    def _key(self):
        if self.table is not None:
            return (self.source, self.target, tuple(sorted(self.table.items())))
        return (self.source, self.target, NAMED_MAP_ALIASES.get(self.named, self.named))

    def __eq__(self, other):
        return isinstance(other, QuantaleHom) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.named or "table"
        return f"QuantaleHom({self.source.name}->{self.target.name}, {label})"


@dataclass(frozen=True, eq=False)
class ComposedHom(QuantaleHom):
    first: QuantaleHom = None
    second: QuantaleHom = None

    def __post_init__(self):
        object.__setattr__(self, "_fn", lambda v: self.second(self.first(v)))

    def _key(self):
        return ("compose", self.first._key(), self.second._key())


def compose_homs(first, second):
    """``second ∘ first``."""
    if first.target != second.source:
        raise QuantaleMismatch("quantale homs do not compose")
    return ComposedHom(first.source, second.target, named="composite", first=first, second=second)


def identity_hom(q):
    return QuantaleHom(q, q, named="identity")


def check_hom(h, kind="quantale"):
    """Check that ``h`` preserves unit, tensor and (for quantale homs) joins.

    ``kind="pom"`` checks a monotone monoid morphism instead: unit, tensor and
    order.  Finite sources are checked exhaustively; built-in chains on their
    representative sample elements (the report says so).
    """
    src, tgt = h.source, h.target
    rep = Report(f"{kind} hom {src.name} -> {tgt.name}")
    els = src.elements()
    if els is None:
        els = src.sample_elements()
        rep.exhaustive = False
        rep.notes.append("infinite source: checked on representative sample elements")
    image = {}
    for a in els:
        b = h(a)
        image[a] = b
        if not tgt.contains(b):
            rep.fail(law="maps into target", instance=[src.dump(a)])
    if not rep.ok:
        return rep
    rep.checked += 1
    if image.get(src.unit, h(src.unit)) != tgt.unit:
        rep.fail(law="unit preserved", instance=[src.dump(src.unit)])
    for a, b in product(els, repeat=2):
        rep.checked += 1
        if h(src.tensor(a, b)) != tgt.tensor(image[a], image[b]):
            rep.fail(law="tensor preserved", instance=[src.dump(a), src.dump(b)])
        if kind == "pom":
            if src.leq(a, b) and not tgt.leq(image[a], image[b]):
                rep.fail(law="order preserved", instance=[src.dump(a), src.dump(b)])
        elif h(src.join2(a, b)) != tgt.join2(image[a], image[b]):
            rep.fail(law="binary join preserved", instance=[src.dump(a), src.dump(b)])
    if kind == "quantale":
        rep.checked += 1
        if not (src.has_joins and tgt.has_joins):
            rep.fail(law="joins available", instance=[])
        elif h(src.bottom) != tgt.bottom:
            rep.fail(law="empty join (bottom) preserved", instance=[])
    return rep
