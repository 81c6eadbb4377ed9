"""Shipped example signatures and finite algebras."""
from fractions import Fraction

from .algebra import EMPTY_SIGNATURE, Equation, FiniteAlgebra, Signature, app, var
from .errors import StructureError, UnknownName

x, y, z, w = var(0), var(1), var(2), var(3)


def empty():
    return EMPTY_SIGNATURE


def semilattice():
    """One associative, commutative, idempotent binary operation."""
    return Signature(
        (("m", 2),),
        (
            Equation(3, app("m", app("m", x, y), z), app("m", x, app("m", y, z))),
            Equation(2, app("m", x, y), app("m", y, x)),
            Equation(1, app("m", x, x), x),
        ),
        "semilattice",
    )


def monoid():
    return Signature(
        (("m", 2), ("e", 0)),
        (
            Equation(3, app("m", app("m", x, y), z), app("m", x, app("m", y, z))),
            Equation(1, app("m", app("e"), x), x),
            Equation(1, app("m", x, app("e")), x),
        ),
        "monoid",
    )


def commutative_monoid():
    sig = monoid()
    return Signature(sig.ops, sig.equations + (Equation(2, app("m", x, y), app("m", y, x)),),
                     "commutative_monoid")


def midpoint():
    """Finite stand-in for convex algebras: one idempotent, commutative, medial mix."""
    return Signature(
        (("m", 2),),
        (
            Equation(1, app("m", x, x), x),
            Equation(2, app("m", x, y), app("m", y, x)),
            Equation(4, app("m", app("m", x, y), app("m", z, w)),
                     app("m", app("m", x, z), app("m", y, w))),
        ),
        "midpoint",
    )


def unary():
    """A single unary operation and no equations."""
    return Signature((("u", 1),), (), "unary")


def unary_id():
    """A single unary operation required to be the identity."""
    return Signature((("u", 1),), (Equation(1, app("u", x), x),), "unary_id")


def mix_name(p):
    p = Fraction(p)
    return f"c{p.numerator}_{p.denominator}"


def convex_fin(ps):
    """Binary mixes ``c_p`` for a finite set of rationals ``p`` in (0, 1).

    Equations are those convex-algebra laws whose mixing weights all lie in
    the chosen set: idempotence, skew commutativity and skew associativity.
    """
    ps = sorted({Fraction(p) for p in ps})
    if not ps or any(not 0 < p < 1 for p in ps):
        raise StructureError("mixing weights must lie strictly between 0 and 1")
    pset = set(ps)
    eqs = []
    for p in ps:
        eqs.append(Equation(1, app(mix_name(p), x, x), x))
        if 1 - p in pset:
            eqs.append(Equation(2, app(mix_name(p), x, y), app(mix_name(1 - p), y, x)))
    for p in ps:
        for q in ps:
            pq = p * q
            if pq == 1:
                continue
            r = p * (1 - q) / (1 - pq)
            if pq in pset and r in pset:
                eqs.append(Equation(
                    3,
                    app(mix_name(p), app(mix_name(q), x, y), z),
                    app(mix_name(pq), x, app(mix_name(r), y, z)),
                ))
    return Signature(tuple((mix_name(p), 2) for p in ps), tuple(eqs), "convex_fin")


SIGNATURES = {
    "empty": empty,
    "semilattice": semilattice,
    "monoid": monoid,
    "commutative_monoid": commutative_monoid,
    "midpoint": midpoint,
    "unary": unary,
    "unary_id": unary_id,
}


def signature(name):
    try:
        return SIGNATURES[name]()
    except KeyError:
        raise UnknownName(f"unknown builtin signature {name!r}") from None


# -- algebras ----------------------------------------------------------------

def plain_set(n, prefix="a"):
    return FiniteAlgebra.plain([f"{prefix}{i}" for i in range(n)])


def chain_semilattice(n):
    """The chain 0 < 1 < ... < n-1 with join = max."""
    return FiniteAlgebra.from_function(semilattice(), [str(i) for i in range(n)], {"m": max})


def powerset_semilattice(k=2):
    """Subsets of a k-element set under union (2**k elements, bitmask labels)."""
    n = 2**k
    labels = ["{" + ",".join(str(b) for b in range(k) if i >> b & 1) + "}" for i in range(n)]
    return FiniteAlgebra.from_function(semilattice(), labels, {"m": lambda i, j: i | j})


def cyclic_group(n):
    """Z_n as a monoid under addition."""
    return FiniteAlgebra.from_function(monoid(), [str(i) for i in range(n)],
                                       {"m": lambda i, j: (i + j) % n, "e": lambda: 0})


def midpoint_cycle(n):
    """Z_n (n odd) with m(x, y) = (x + y) / 2."""
    if n % 2 == 0:
        raise StructureError("midpoints on Z_n need n odd")
    half = pow(2, -1, n)
    return FiniteAlgebra.from_function(midpoint(), [f"p{i}" for i in range(n)],
                                       {"m": lambda i, j: (i + j) * half % n})


def midpoint_with_top(n=3):
    """Z_n midpoints plus one absorbing point ``top``: a non-associative midpoint algebra."""
    half = pow(2, -1, n)

    def m(i, j):
        if i == n or j == n:
            return n
        return (i + j) * half % n

    return FiniteAlgebra.from_function(midpoint(), [f"p{i}" for i in range(n)] + ["top"], {"m": m})


def midpoint_chain(n):
    """The chain 0..n-1 with m = max; semilattices are midpoint algebras."""
    return FiniteAlgebra.from_function(midpoint(), [str(i) for i in range(n)], {"m": max})


def affine_line(ps, modulus=5):
    """GF(modulus) with c_p(x, y) = p·x + (1 - p)·y, a finite model of ``convex_fin(ps)``."""
    sig = convex_fin(ps)
    ops = {}
    for name, _ in sig.ops:
        num, den = name[1:].split("_")
        p = Fraction(int(num), int(den))
        pm = p.numerator * pow(p.denominator, -1, modulus) % modulus
        ops[name] = (lambda c: lambda i, j: (c * i + (1 - c) * j) % modulus)(pm)
    return FiniteAlgebra.from_function(sig, [str(i) for i in range(modulus)], ops)
