"""Exact linear algebra over the rationals (list-of-lists, Fraction entries)."""

from fractions import Fraction
from math import gcd


def _echelon(rows):
    """Row echelon form in place; returns list of pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1, 1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows):
    work = [[Fraction(x) for x in row] for row in rows]
    return len(_echelon(work))


def kernel_basis(rows):
    """Basis of the right kernel of the matrix given by `rows`."""
    if not rows:
        return []
    ncols = len(rows[0])
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = _echelon(work)
    work = work[: len(pivots)]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -work[r][f]
        basis.append(v)
    return basis


def primitive(vec):
    """Scale a rational vector to a primitive integer vector (gcd 1, same ray)."""
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def det_int(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_square(a, bs):
    """Solve A x = b for each column b in bs; A square invertible, exact."""
    n = len(a)
    nb = len(bs)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(bs[k][i]) for k in range(nb)]
           for i in range(n)]
    pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [[aug[i][n + k] for i in range(n)] for k in range(nb)]


class SpanTracker:
    """Incremental rank tracking for a growing set of rational vectors."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []       # reduced echelon rows
        self.pivots = []

    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def add(self, vec):
        """Add a vector; returns the echelon row appended (or None if dependent)."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return None
        inv = Fraction(1, 1) / v[p]
        v = [x * inv for x in v]
        self.rows.append(v)
        self.pivots.append(p)
        return v

    def pop(self):
        self.rows.pop()
        self.pivots.pop()

    def copy(self):
        t = SpanTracker(self.dim)
        t.rows = [row[:] for row in self.rows]
        t.pivots = self.pivots[:]
        return t
