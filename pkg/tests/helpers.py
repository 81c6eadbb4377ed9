"""Conversions between relkit objects and the plain data the oracles use."""
from fractions import Fraction

from relkit import INF
from relkit.algebra import FiniteAlgebra
from relkit.qrel import QRelation
from relkit.quantale import builtin

BOOL = builtin("boolean")
LAW = builtin("lawvere")
ULTRA = builtin("ultrametric")
INTERVAL = builtin("interval")


def plain(n, prefix="a"):
    return FiniteAlgebra.plain([f"{prefix}{i}" for i in range(n)])


def to_plain(r):
    """Matrix with None for infinity."""
    return [[None if v is INF else v for v in row] for row in r.matrix]


def from_plain(q, dom, cod, m):
    return QRelation(q, dom, cod, [[INF if v is None else Fraction(v) for v in row] for row in m])


def from_set(dom, cod, pairs):
    return QRelation(BOOL, dom, cod, [[Fraction(int((a, b) in pairs)) for b in range(len(cod))]
                                      for a in range(len(dom))])
