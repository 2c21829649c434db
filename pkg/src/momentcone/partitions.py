"""Partition combinatorics and coefficient oracles.

Brute-force exact computations of symmetric group characters
(Murnaghan-Nakayama), Kronecker coefficients (character inner products),
multiple Littlewood-Richardson coefficients (lattice-word tableaux) and
plethysm coefficients (power-sum expansion in finitely many variables).
All sizes are expected to be small; everything is memoized.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial


def partitions_of(n, max_length=None, max_part=None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        if max_length < 1:
            break
        for rest in partitions_of(n - first, max_length - 1, first):
            out.append((first,) + rest)
    return out


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_factor(mu):
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= part ** m * factorial(m)
    return z


@lru_cache(maxsize=None)
def sym_character(lam, mu):
    """Character of the Specht module S^lam at cycle type mu (Murnaghan-Nakayama).

    Rim hooks are handled through beta-numbers: with beta_i = lam_i + L - 1 - i
    removing a k-hook is subtracting k from one beta-number while keeping them
    distinct, with sign (-1)^(number of beta-numbers jumped over).
    """
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    L = len(lam)
    if L == 0:
        return 0
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        new = tuple(p for p in (newbeta[i] - (L - 1 - i) for i in range(L))
                    if p > 0)
        total += (-1) ** crossed * sym_character(new, rest)
    return total


def kronecker_coefficient(lams):
    """Dimension of S_n-invariants in the tensor product of Specht modules."""
    sizes = {sum(l) for l in lams}
    if len(sizes) != 1:
        return 0
    n = sizes.pop()
    if n == 0:
        return 1
    total = Fraction(0)
    for mu in partitions_of(n):
        prod = 1
        for lam in lams:
            prod *= sym_character(tuple(lam), mu)
            if prod == 0:
                break
        if prod:
            total += Fraction(prod, z_factor(mu))
    assert total.denominator == 1 and total >= 0
    return int(total)


@lru_cache(maxsize=None)
def _lr2(nu, lam, mu):
    """Littlewood-Richardson coefficient c^nu_{lam,mu} by tableau counting."""
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    if not mu:
        return 1 if tuple(lam) == tuple(nu) else 0
    rows = len(nu)
    lam = lam + (0,) * (rows - len(lam))
    # fill the skew shape nu/lam with entries 1..len(mu): rows weakly
    # increasing, columns strictly increasing, and the reverse reading word
    # (right to left, top to bottom) a lattice word.  Cells are visited in
    # reading order, so the lattice property is checked incrementally.
    cells = [(r, c) for r in range(rows)
             for c in range(nu[r] - 1, lam[r] - 1, -1)]

    def rec(idx, filling, content):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        hi = filling.get((r, c + 1), len(mu))
        for val in range(1, hi + 1):
            if content[val - 1] >= mu[val - 1]:
                continue
            if filling.get((r - 1, c), 0) >= val:
                continue
            if val > 1 and content[val - 1] + 1 > content[val - 2]:
                continue
            filling[(r, c)] = val
            content[val - 1] += 1
            total += rec(idx + 1, filling, content)
            content[val - 1] -= 1
            del filling[(r, c)]
        return total

    return rec(0, {}, [0] * len(mu))


def lr_coefficient(nu, lams):
    """Multiple Littlewood-Richardson coefficient, by iterating two factors."""
    nu = tuple(nu)
    lams = [tuple(l) for l in lams]
    if sum(nu) != sum(map(sum, lams)):
        return 0
    if not lams:
        return 1 if not nu else 0
    states = {lams[0]: 1}
    for lam in lams[1:]:
        new = {}
        for rho, mult in states.items():
            size = sum(rho) + sum(lam)
            for cand in partitions_of(size, max_length=len(nu) or 1,
                                      max_part=nu[0] if nu else 0):
                c = _lr2(cand, rho, lam)
                if c:
                    new[cand] = new.get(cand, 0) + mult * c
        states = new
    return states.get(nu, 0)


def _theta_weights(theta, m):
    """Exponent vectors of the weights of S^theta(C^m) for theta a row or column."""
    if not theta:
        return [(0,) * m]
    if all(p == 1 for p in theta):          # exterior power
        r = len(theta)
        if r > m:
            return []
        out = []
        for comb in combinations(range(m), r):
            w = [0] * m
            for i in comb:
                w[i] = 1
            out.append(tuple(w))
        return out
    if len(theta) == 1:                     # symmetric power
        out = []
        for comb in combinations_with_replacement(range(m), theta[0]):
            w = [0] * m
            for i in comb:
                w[i] += 1
            out.append(tuple(w))
        return out
    raise ValueError("theta must be a single row or a single column")


def _poly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


def _schur_on_weights(lam, weights, m):
    """The polynomial s_lam evaluated at the monomials `weights`, in m variables."""
    n = sum(lam)
    if n == 0:
        return {(0,) * m: Fraction(1)}
    out = {}
    for mu in partitions_of(n):
        chi = sym_character(tuple(lam), mu)
        if chi == 0:
            continue
        term = {(0,) * m: Fraction(chi, z_factor(mu))}
        for k in mu:
            pk = {}
            for w in weights:
                mm = tuple(k * x for x in w)
                pk[mm] = pk.get(mm, 0) + 1
            term = _poly_mul(term, pk)
        for mm, c in term.items():
            cc = out.get(mm, Fraction(0)) + c
            if cc:
                out[mm] = cc
            elif mm in out:
                del out[mm]
    return out


@lru_cache(maxsize=None)
def _schur_poly(lam, m):
    unit = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
    return _schur_on_weights(lam, unit, m)


def _schur_expand(poly, m):
    """Expansion of a symmetric polynomial in m variables in the Schur basis."""
    poly = dict(poly)
    out = {}
    while poly:
        dom = max((mm for mm in poly
                   if all(mm[i] >= mm[i + 1] for i in range(m - 1))),
                  default=None)
        if dom is None:
            raise ValueError("polynomial is not symmetric")
        c = poly[dom]
        lam = tuple(p for p in dom if p > 0)
        out[lam] = c
        for mm, cc in _schur_poly(lam, m).items():
            nc = poly.get(mm, Fraction(0)) - c * cc
            if nc:
                poly[mm] = nc
            elif mm in poly:
                del poly[mm]
    return out


@lru_cache(maxsize=None)
def plethysm_expansion(lam, theta, m):
    """Schur expansion of the plethysm s_lam[s_theta] in m variables.

    Returns {mu: coefficient}; mu runs over partitions with at most m parts.
    """
    weights = _theta_weights(theta, m)
    if not weights:
        return {} if sum(lam) else {(): 1}
    poly = _schur_on_weights(lam, weights, m)
    out = _schur_expand(poly, m)
    assert all(c.denominator == 1 and c >= 0 for c in out.values())
    return {mu: int(c) for mu, c in out.items() if c}


def plethysm_coefficient(lam, theta, mu, m):
    """Multiplicity of S^mu(C^m) in S^lam(S^theta(C^m))."""
    if len(mu) > m:
        return 0
    return plethysm_expansion(tuple(lam), tuple(theta), m).get(tuple(mu), 0)
