"""Pure-Python truncated-product and composition kernels.

Coefficients are laid out in graded order: index(i, j) = d(d+1)/2 + j with
d = i + j, so degree-d terms occupy one contiguous block.  The routines only
use ``+`` and ``*`` on the entries, so they serve ints, floats and exact
field elements alike.
"""
from functools import lru_cache

BACKEND = "python"


def size(order: int) -> int:
    return (order + 1) * (order + 2) // 2


def index(i: int, j: int) -> int:
    d = i + j
    return d * (d + 1) // 2 + j


@lru_cache(maxsize=None)
def monomials(order: int) -> tuple:
    return tuple((d - j, j) for d in range(order + 1) for j in range(d + 1))


@lru_cache(maxsize=None)
def product_table(order: int) -> tuple:
    """For each left index, the (right index, target index) pairs kept by truncation."""
    mons = monomials(order)
    rows = []
    for ia, (i1, j1) in enumerate(mons):
        d1 = i1 + j1
        row = []
        for ib in range(size(order - d1)):
            i2, j2 = mons[ib]
            row.append((ib, index(i1 + i2, j1 + j2)))
        rows.append(tuple(row))
    return tuple(rows)


def mul(a, b, order: int):
    out = [0] * size(order)
    table = product_table(order)
    for ia, x in enumerate(a):
        if not x:
            continue
        for ib, ic in table[ia]:
            y = b[ib]
            if y:
                out[ic] += x * y
    return out


def _axpy(acc, c, p):
    for k, y in enumerate(p):
        if y:
            acc[k] += c * y


def compose(outer, g1, g2, order: int, one=1):
    """outer(g1, g2) truncated at ``order``; g1, g2 must have zero constant term.

    Horner in the first variable over polynomials in the second:
    outer = sum_i g1^i * S_i(g2).
    """
    n = size(order)
    mons = monomials(order)
    unit = [0] * n
    unit[0] = one
    pow2 = [unit]
    for _ in range(order):
        pow2.append(mul(pow2[-1], g2, order))
    # S_i = sum_j c_ij g2^j
    sums = [[0] * n for _ in range(order + 1)]
    for k, c in enumerate(outer):
        if c:
            i, j = mons[k]
            _axpy(sums[i], c, pow2[j])
    acc = sums[order]
    for i in range(order - 1, -1, -1):
        acc = mul(acc, g1, order)
        s = sums[i]
        for k in range(n):
            if s[k]:
                acc[k] += s[k]
    return acc
