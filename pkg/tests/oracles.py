"""Independent reference implementations used to cross-check the library.

Nothing here imports relkit: relations are sets of pairs or plain nested
lists, and infinity is ``None``.
"""
from fractions import Fraction
from itertools import product


def set_compose(r, s):
    """Ordinary relational composite, r first: {(a, c) | (a, b) in r, (b, c) in s}."""
    return {(a, c) for a, b in r for b2, c in s if b == b2}


def set_converse(r):
    return {(b, a) for a, b in r}


def set_tensor(r, s):
    return {((a, x), (b, y)) for a, b in r for x, y in s}


def set_subset(r, s):
    return r <= s


def is_preorder(r, n):
    return all((a, a) in r for a in range(n)) and all(
        (a, c) in r for a, b in r for b2, c in r if b == b2)


def matrix_to_set(m):
    return {(a, b) for a, row in enumerate(m) for b, v in enumerate(row) if v}


def _add(x, y):
    return None if x is None or y is None else x + y


def _min(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)


def min_plus(m1, m2):
    """Min-plus product; ``None`` is infinity."""
    n, k = len(m1), len(m2[0]) if m2 else 0
    out = [[None] * k for _ in range(n)]
    for i in range(n):
        for j in range(k):
            best = None
            for mid in range(len(m2)):
                best = _min(best, _add(m1[i][mid], m2[mid][j]))
            out[i][j] = best
    return out


def floyd_warshall(w):
    """All-pairs shortest paths with zero-length self loops."""
    n = len(w)
    d = [[Fraction(0) if i == j else w[i][j] for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                d[i][j] = _min(d[i][j], _add(d[i][k], d[k][j]))
    return d


def is_generalized_metric(d):
    n = len(d)
    if any(d[a][a] != 0 for a in range(n)):
        return False
    for a, b, c in product(range(n), repeat=3):
        total = _add(d[a][b], d[b][c])
        if total is not None and (d[a][c] is None or d[a][c] > total):
            return False
    return True


def is_generalized_ultrametric(d):
    n = len(d)
    if any(d[a][a] != 0 for a in range(n)):
        return False
    for a, b, c in product(range(n), repeat=3):
        if d[a][b] is None or d[b][c] is None:
            continue
        bound = max(d[a][b], d[b][c])
        if d[a][c] is None or d[a][c] > bound:
            return False
    return True
