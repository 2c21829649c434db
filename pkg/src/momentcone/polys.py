"""Polynomial utilities: squarefree parts, restriction to a line, and exact
arithmetic in the quotient field Q[z]/(delta).

Multivariate polynomials are sympy sparse ring elements (PolyElement);
univariate polynomials over Q are plain coefficient lists [c0, c1, ...] with
Fraction entries.
"""

from fractions import Fraction

import sympy


def sqfree_part(p):
    """Squarefree part of a multivariate ring element: p / gcd(p, partials)."""
    g = p
    for x in p.ring.gens:
        d = p.diff(x)
        if d:
            g = g.gcd(d)
    return p.exquo(p.gcd(g))


def _poly_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                       for i in range(n)])


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def poly_scale(a, c):
    return _poly_trim([x * c for x in a]) if c else []


def poly_deriv(a):
    return _poly_trim([i * a[i] for i in range(1, len(a))])


def poly_divmod(a, b):
    """Division with remainder over Q; b must be non-zero."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _poly_trim(a[: len(b) - 1])


def poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        inv = Fraction(1) / a[-1]
        a = [x * inv for x in a]
    return a


def poly_sqfree(a):
    """Squarefree part (monic) of a univariate rational polynomial."""
    if len(a) <= 1:
        return a
    return poly_divmod(a, poly_gcd(a, poly_deriv(a)))[0]


def compose_line(p, line):
    """Restriction of a ring element to the line x_i = a_i z + b_i.

    `line` maps each generator of p.ring to a pair (a_i, b_i) of Fractions.
    Returns the coefficient list of the resulting polynomial in z.
    """
    gens = p.ring.gens
    powers = [[[Fraction(1)]] for _ in gens]  # powers[i][e] = (a_i z + b_i)^e
    lines = []
    for g in gens:
        a, b = line[g]
        lines.append([Fraction(b), Fraction(a)])
    out = []
    for monom, coeff in p.terms():
        term = [Fraction(coeff.numerator, coeff.denominator)]
        for i, e in enumerate(monom):
            while len(powers[i]) <= e:
                powers[i].append(poly_mul(powers[i][-1], lines[i]))
            term = poly_mul(term, powers[i][e])
        out = poly_add(out, term)
    return out


def poly_factor(a):
    """Irreducible monic factors over Q of a univariate coefficient list."""
    z = sympy.Symbol("z")
    expr = sum(sympy.Rational(c) * z**i for i, c in enumerate(a))
    _, factors = sympy.factor_list(expr, z)
    out = []
    for f, mult in factors:
        poly = sympy.Poly(f, z)
        coeffs = [Fraction(sympy.Rational(c)) for c in reversed(poly.all_coeffs())]
        inv = Fraction(1) / coeffs[-1]
        out.append(([c * inv for c in coeffs], mult))
    return out


class QuotientField:
    """The field Q[z]/(delta) with delta irreducible, elements as coeff lists."""

    def __init__(self, delta):
        self.delta = [Fraction(c) for c in delta]
        self.deg = len(delta) - 1

    def reduce(self, a):
        return poly_divmod(a, self.delta)[1]

    def mul(self, a, b):
        return self.reduce(poly_mul(a, b))

    def inv(self, a):
        """Inverse modulo delta by the extended Euclidean algorithm."""
        r0, r1 = list(self.delta), self.reduce(a)
        if not r1:
            raise ZeroDivisionError("zero in quotient field")
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, poly_add(t0, poly_scale(poly_mul(q, t1), -1))
        # r0 is a nonzero constant gcd
        return self.reduce(poly_scale(t0, Fraction(1) / r0[0]))
