"""Small exact linear algebra over Q (Gaussian elimination on Fractions).

Just enough for the kernel/rank computations behind Casimir analysis and
for solving the linear systems that recover Poisson pairings from
bracket tables.  Rows are lists of Fractions; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _row_reduce(rows: list) -> tuple:
    """In-place RREF.  Returns (pivot columns, reduced rows)."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return [], rows
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, rows


def rank(rows: list) -> int:
    pivots, _ = _row_reduce(rows)
    return len(pivots)


def kernel_basis(rows: list, ncols: int) -> list:
    """Basis of {v : A v = 0}, scaled to coprime integer vectors."""
    pivots, red = _row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(_integerise(v))
    return basis


def _integerise(v: list) -> list:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def solve(rows: list, rhs: list) -> tuple:
    """Solve A x = b exactly.

    Returns (solution, free_cols, inconsistent_rows): the particular
    solution sets every free variable to zero; inconsistent_rows lists the
    indices of input equations that cannot be satisfied (empty means the
    system is consistent).
    """
    if not rows:
        return [], [], []
    ncols = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots, red = _row_reduce(aug)
    if ncols not in pivots:
        x = [Fraction(0)] * ncols
        for r, pc in enumerate(pivots):
            x[pc] = red[r][ncols]
        free = [c for c in range(ncols) if c not in pivots]
        return x, free, []
    # Inconsistent: solve a maximal consistent subsystem greedily and report
    # every original equation the result violates.
    sub: list = []
    for r, b in zip(rows, rhs):
        trial = sub + [list(map(Fraction, r)) + [Fraction(b)]]
        piv, _ = _row_reduce([row[:] for row in trial])
        if ncols not in piv:
            sub = trial
    piv, red2 = _row_reduce([row[:] for row in sub])
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(piv):
        x[pc] = red2[r][ncols]
    bad = [i for i, (r, b) in enumerate(zip(rows, rhs))
           if sum(Fraction(a) * xv for a, xv in zip(r, x)) != Fraction(b)]
    free = [c for c in range(ncols) if c not in piv]
    return x, free, bad
