"""Brute-force ground truth at tiny scale.

The coordinate ring of V decomposes with Kronecker coefficients (tensor
products) or plethysm coefficients (wedge/symmetric powers) as
multiplicities; enumerating all irreducibles with nonzero multiplicity up to
a degree bound gives honest semigroup points, whose rational cone hull is an
independent oracle for the facet list produced by the main pipeline.
"""

from fractions import Fraction
from itertools import product

from .linalg import kernel_basis, primitive, rank
from .partitions import (kronecker_coefficient, partitions_of,
                         plethysm_expansion)


def semigroup_points(spec, degree_bound):
    """All highest weights (padded, concatenated) appearing in C[V] up to the bound."""
    pts = set()
    if spec.kind == "kronecker":
        if max(spec.dims) > 4 or degree_bound > 10:
            raise ValueError("degree bound too large for the brute-force oracle")
        for n in range(1, degree_bound + 1):
            cands = [partitions_of(n, max_length=d) for d in spec.dims]
            for lams in product(*cands):
                if kronecker_coefficient(list(lams)):
                    pts.add(_pad(spec, lams))
        return pts
    d = spec.dims[0]
    if d > 6 or degree_bound > 10:
        raise ValueError("degree bound too large for the brute-force oracle")
    theta = (1,) * spec.r if spec.kind == "fermion" else (spec.r,)
    for n in range(1, degree_bound + 1):
        exp = plethysm_expansion((n,), theta, d)
        for lam, c in exp.items():
            if c:
                pts.add(_pad(spec, (lam,)))
    return pts


def _pad(spec, lams):
    out = []
    for k, lam in enumerate(lams):
        out.extend(list(lam) + [0] * (spec.dims[k] - len(lam)))
    return tuple(out)


def span_basis(points):
    """A subset of the points forming a basis of their linear span."""
    basis, mat = [], []
    for p in sorted(points):
        cand = mat + [[Fraction(x) for x in p]]
        if rank([row[:] for row in cand]) > len(mat):
            mat = cand
            basis.append(p)
    return basis


def _coords(basis, p):
    """Coordinates of p in the span basis (exact, via least-squares-free solve)."""
    m = len(basis)
    gram = [[Fraction(sum(a * b for a, b in zip(basis[i], basis[j])))
             for j in range(m)] for i in range(m)]
    rhs = [Fraction(sum(a * b for a, b in zip(basis[i], p))) for i in range(m)]
    # solve gram * x = rhs by Gaussian elimination
    for col in range(m):
        piv = next(r for r in range(col, m) if gram[r][col] != 0)
        gram[col], gram[piv] = gram[piv], gram[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = Fraction(1) / gram[col][col]
        gram[col] = [v * inv for v in gram[col]]
        rhs[col] *= inv
        for r in range(m):
            if r != col and gram[r][col]:
                f = gram[r][col]
                gram[r] = [a - f * b for a, b in zip(gram[r], gram[col])]
                rhs[r] -= f * rhs[col]
    return rhs


def dual_extreme_rays(rows):
    """Extreme rays of {a : <row, a> <= 0 for all rows}, rows full-dimensional.

    Incremental double description; every ray is returned as a primitive
    integer tuple.
    """
    d = len(rows[0])
    # start from the orthant decomposition of R^d: rays +-e_i would carry a
    # lineality space; instead initialize with the first d independent rows
    init, rest = [], []
    mat = []
    for row in rows:
        cand = mat + [[Fraction(x) for x in row]]
        if len(init) < d and rank([r[:] for r in cand]) > len(mat):
            mat = cand
            init.append(row)
        else:
            rest.append(row)
    if len(init) < d:
        raise ValueError("constraints are not full-dimensional")
    # rays of {a : <init_i, a> <= 0} = -(inverse of init)^T columns
    rays = []
    for i in range(d):
        rhs = [Fraction(-1 if j == i else 0) for j in range(d)]
        rays.append(tuple(_solve(init, rhs)))
    rays = [tuple(primitive(r)) for r in rays]
    done = list(init)
    for row in rest:
        vals = {r: sum(Fraction(a) * b for a, b in zip(row, r)) for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        zero = [r for r in rays if vals[r] == 0]
        neg = [r for r in rays if vals[r] < 0]
        if not pos:
            done.append(row)
            continue
        new = list(neg) + list(zero)
        zsets = {r: frozenset(i for i, c in enumerate(done)
                              if sum(Fraction(a) * b for a, b in zip(c, r)) == 0)
                 for r in rays}
        for rp in pos:
            for rn in neg:
                common = zsets[rp] & zsets[rn]
                if len(common) < d - 2:
                    continue
                if any(r is not rp and r is not rn and common <= zsets[r]
                       for r in rays):
                    continue
                comb = tuple(vals[rp] * b - vals[rn] * a
                             for a, b in zip(rp, rn))
                new.append(tuple(primitive(comb)))
        rays = new
        done.append(row)
    return sorted(set(rays))


def _solve(mat, rhs):
    m = len(rhs)
    a = [[Fraction(x) for x in row] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(m):
        piv = next(r for r in range(col, m) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][m] for i in range(m)]


def hull_facets(points):
    """Facet functionals of the cone generated by the points.

    Returns (basis, facets): `basis` spans the points' linear span; each
    facet is the primitive tuple of values of the supporting functional on
    the basis vectors (all points evaluate <= 0, some point evaluates to 0,
    and the zero set has full facet rank).
    """
    points = sorted(set(points))
    basis = span_basis(points)
    d = len(basis)
    if d < 2:
        raise ValueError("points do not span a cone with facets")
    coords = [tuple(_coords(basis, p)) for p in points]
    rays = dual_extreme_rays(coords)
    facets = []
    for a in rays:
        sat = [p for p, c in zip(points, coords)
               if sum(x * y for x, y in zip(a, c)) == 0]
        if len(sat) >= d - 1 and rank([[Fraction(x) for x in p] for p in sat]) == d - 1:
            facets.append(tuple(a))
    return basis, sorted(facets)


def functional_on_basis(normal, basis):
    """The facet-comparison form of an ambient normal vector: its primitive
    tuple of values on the span basis (None when it vanishes on the span)."""
    vals = tuple(sum(Fraction(a) * b for a, b in zip(normal, bvec))
                 for bvec in basis)
    if all(v == 0 for v in vals):
        return None
    return tuple(primitive(vals))
