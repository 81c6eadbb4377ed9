"""A small expression language over the morphisms of a model file.

Grammar (``~`` and ``dagger`` bind tighter than ``*``, which binds tighter
than ``;``)::

    expr    := tensor (";" tensor)*
    tensor  := unary ("*" unary)*
    unary   := "~" unary | primary
    primary := NAME | GEN ["[" object "]"] | FUNC "(" args ")" | "(" expr ")"
    object  := atom ("*" atom)*         atom := NAME | "I" | "(" object ")"

``R ; S`` is diagrammatic: first ``R``, then ``S``.  Generators written
without an object (``id``, ``delta``...) are completed from the
neighbouring operand, or from the model's ``defaults``.
"""
import re
from dataclasses import dataclass

from . import functors, qrel, qspan
from .algebra import EMPTY_SIGNATURE, product_algebra, terminal_algebra
from .errors import RelkitError, StructureError, TypeChainError, UnknownName
from .qrel import QRelation
from .qspan import QSpan

GENERATORS = ("id", "delta", "eps", "mu", "eta", "cup", "cap")
FUNCTIONS = {"graph": 1, "cograph": 1, "V": 1, "mapq": 2, "reinterp": 2, "dagger": 1}


class ParseError(RelkitError, SyntaxError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Compose:
    left: object
    right: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Converse:
    body: object


@dataclass(frozen=True)
class Gen:
    name: str
    obj: object = None


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class ObjRef:
    name: str


@dataclass(frozen=True)
class ObjUnit:
    pass


@dataclass(frozen=True)
class ObjTensor:
    left: object
    right: object


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[;*~()\[\],])")


def _tokens(text):
    pos, line, col = 0, 1, 1
    out = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            line, col = (line + 1, 1) if ch == "\n" else (line, col + 1)
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        out.append((m.lastgroup, m.group(), line, col))
        col += m.end() - pos
        pos = m.end()
    out.append(("end", "", line, col))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, line, col = self.next()
        if v != value:
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", line, col)

    def error(self, what):
        kind, v, line, col = self.peek()
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"expected {what}, found {found}", line, col)

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "end":
            self.error("';', '*' or end of input")
        return e

    def expr(self):
        e = self.tensor()
        while self.peek()[1] == ";":
            self.next()
            e = Compose(e, self.tensor())
        return e

    def tensor(self):
        e = self.unary()
        while self.peek()[1] == "*":
            self.next()
            e = Tensor(e, self.unary())
        return e

    def unary(self):
        if self.peek()[1] == "~":
            self.next()
            return Converse(self.unary())
        return self.primary()

    def primary(self):
        kind, v, line, col = self.peek()
        if v == "(":
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        if kind != "name":
            self.error("an expression")
        self.next()
        if v in GENERATORS:
            if self.peek()[1] == "[":
                self.next()
                obj = self.obj()
                self.expect("]")
                return Gen(v, obj)
            return Gen(v)
        if v in FUNCTIONS and self.peek()[1] == "(":
            self.next()
            args = [self.expr()]
            while self.peek()[1] == ",":
                self.next()
                args.append(self.expr())
            self.expect(")")
            if len(args) != FUNCTIONS[v]:
                raise ParseError(f"{v} takes {FUNCTIONS[v]} argument(s), got {len(args)}", line, col)
            return Call(v, tuple(args))
        return Ref(v)

    def obj(self):
        o = self.obj_atom()
        while self.peek()[1] == "*":
            self.next()
            o = ObjTensor(o, self.obj_atom())
        return o

    def obj_atom(self):
        kind, v, _, _ = self.peek()
        if v == "(":
            self.next()
            o = self.obj()
            self.expect(")")
            return o
        if kind != "name":
            self.error("an object name")
        self.next()
        return ObjUnit() if v == "I" else ObjRef(v)


def parse_expr(text):
    return _Parser(text).parse()


# -- evaluation --------------------------------------------------------------

@dataclass
class _Pending:
    """A generator whose object, kind or quantale is not fixed yet."""

    gen: str
    obj: object  # a FiniteAlgebra or None
    fixed_kind: str = None
    fixed_q: object = None

    def resolve(self, kind, q, obj=None):
        a = self.obj if self.obj is not None else obj
        if a is None:
            raise StructureError(f"cannot tell which object {self.gen} lives on; write {self.gen}[A]")
        return _generator(self.gen, a, self.fixed_kind or kind, self.fixed_q or q)


@dataclass
class _PendingGraph:
    hom: object
    co: bool

    def resolve(self, kind, q, obj=None):
        if kind == "rel":
            r = qrel.rel_graph(self.hom, q)
            return qrel.rel_converse(r) if self.co else r
        return (qspan.span_cograph if self.co else qspan.span_graph)(self.hom, q)


def _generator(name, a, kind, q):
    mod = qrel if kind == "rel" else qspan
    pre = "rel_" if kind == "rel" else "span_"
    fn = {"id": "id", "delta": "delta", "eps": "epsilon", "mu": "mu", "eta": "eta",
          "cup": "cup", "cap": "cap"}[name]
    return getattr(mod, pre + fn)(a, q)


# generators whose domain (codomain) is the bare object they live on
_DOM_IS_A = {"id", "delta", "eps"}
_COD_IS_A = {"id", "mu", "eta"}


def _gen(p):
    return getattr(p, "gen", None)


def _kind_of(m):
    return "rel" if isinstance(m, QRelation) else "span"


def _q_of(m):
    return m.quantale if isinstance(m, QRelation) else m.pom


class Evaluator:
    def __init__(self, model):
        self.model = model
        d = model.defaults
        self.default_kind = d.get("target", "rel")
        self._default_q = d.get("quantale")
        self._default_obj = d.get("object")

    @property
    def default_q(self):
        if self._default_q is None:
            raise StructureError("the model declares no default quantale; name a morphism instead")
        return self.model.quantale(self._default_q)

    @property
    def default_obj(self):
        return self.model.algebra(self._default_obj) if self._default_obj else None

    def finish(self, v, kind=None, q=None):
        if isinstance(v, (_Pending, _PendingGraph)):
            return v.resolve(kind or self.default_kind, q or self.default_q, self.default_obj)
        return v

    def eval(self, e):
        return self.finish(self._eval(e))

    def _unit(self):
        d = self.default_obj
        return terminal_algebra(d.signature if d is not None else EMPTY_SIGNATURE)

    def _obj(self, o):
        """Object expressions; ``I`` takes the signature of its tensor partner."""
        if isinstance(o, ObjRef):
            return self.model.algebra(o.name)
        if isinstance(o, ObjUnit):
            return None
        left, right = self._obj(o.left), self._obj(o.right)
        if left is None and right is None:
            left = right = self._unit()
        left = left if left is not None else terminal_algebra(right.signature)
        right = right if right is not None else terminal_algebra(left.signature)
        return product_algebra(left, right)

    def _eval(self, e):
        if isinstance(e, Ref):
            return self._ref(e.name)
        if isinstance(e, Gen):
            if e.obj is None:
                return _Pending(e.name, None)
            a = self._obj(e.obj)
            return _Pending(e.name, a if a is not None else self._unit())
        if isinstance(e, Converse):
            v = self._eval(e.body)
            if isinstance(v, (_Pending, _PendingGraph)):
                v = self.finish(v)
            return qrel.rel_converse(v) if isinstance(v, QRelation) else qspan.span_converse(v)
        if isinstance(e, (Compose, Tensor)):
            return self._binary(e)
        if isinstance(e, Call):
            return self._call(e)
        raise StructureError(f"cannot evaluate {e!r}")

    def _ref(self, name):
        section, value = self.model.lookup(name)
        if section in ("relations", "spans"):
            return value
        if section == "homs":
            return _PendingGraph(value, False)
        raise StructureError(f"{name!r} is declared under {section}, not a relation or span")

    def _binary(self, e):
        left, right = self._eval(e.left), self._eval(e.right)
        compose = isinstance(e, Compose)
        lp = isinstance(left, (_Pending, _PendingGraph))
        rp = isinstance(right, (_Pending, _PendingGraph))
        if lp and rp:
            left, right = self.finish(left), self.finish(right)
        elif lp:
            boundary = right.dom if compose and _gen(left) in _COD_IS_A else self.default_obj
            left = left.resolve(_kind_of(right), _q_of(right), boundary)
        elif rp:
            boundary = left.cod if compose and _gen(right) in _DOM_IS_A else self.default_obj
            right = right.resolve(_kind_of(left), _q_of(left), boundary)
        if _kind_of(left) != _kind_of(right):
            raise TypeChainError(f"cannot combine a {_kind_of(left)} with a {_kind_of(right)}")
        if _kind_of(left) == "rel":
            return qrel.rel_compose(left, right) if compose else qrel.rel_tensor(left, right)
        return qspan.span_compose(left, right) if compose else qspan.span_tensor(left, right)

    def _call(self, e):
        f = e.func
        if f in ("graph", "cograph"):
            arg = e.args[0]
            if not isinstance(arg, Ref):
                raise StructureError(f"{f} expects the name of a homomorphism")
            return _PendingGraph(self.model.hom(arg.name), f == "cograph")
        if f == "dagger":
            v = self.finish(self._eval(e.args[0]))
            return qrel.rel_dagger(v) if isinstance(v, QRelation) else qspan.span_dagger(v)
        if f == "V":
            v = self.finish(self._eval(e.args[0]), kind="span")
            if not isinstance(v, QSpan):
                raise TypeChainError("V expects a span")
            return functors.v_collapse(v)
        name = e.args[0]
        if not isinstance(name, Ref):
            raise StructureError(f"{f} expects a name as its first argument")
        if f == "mapq":
            h = self.model.quantale_hom(name.name)
            v = self.finish(self._eval(e.args[1]), q=h.source)
            if isinstance(v, QRelation):
                return functors.hstar_rel(h, v)
            return functors.hstar_span(h, v)
        if f == "reinterp":
            i = self.model.interpretation(name.name)
            v = self.finish(self._eval(e.args[1]))
            if isinstance(v, QRelation):
                return functors.istar_rel(i, v)
            return functors.istar_span(i, v)
        raise UnknownName(f"unknown function {f!r}")


def eval_expr(model, e):
    if isinstance(e, str):
        e = parse_expr(e)
    return Evaluator(model).eval(e)


__all__ = ["parse_expr", "eval_expr", "ParseError", "Ref", "Compose", "Tensor", "Converse",
           "Gen", "Call", "ObjRef", "ObjUnit", "ObjTensor", "GENERATORS", "FUNCTIONS"]
