"""Birationality of the collapsing map of a dominant pair (tau, w).

The map is birational iff its ramification divisor (in a proper model) is
contracted.  The ramification has two kinds of components:

* boundary divisors D_beta, one for each non-simple positive root beta with
  v = s_beta.w one step below w in the Bruhat order and minimal in its coset;
  D_beta is contracted iff the analogous map built from v does NOT have
  finite generic fibers;
* the interior ramification R0 = div(Jbar), checked on a random line
  z -> az + b in V^{tau<=0}: for each irreducible factor delta of the
  squarefree part of J restricted to the line, the kernel of the differential
  over Q[z]/(delta) must (when it is a line) pair to zero with the gradient
  of Jbar.
"""

import random
from fractions import Fraction

from .dominance import jacobian_polynomial, level_data
from .linalg import kernel_basis, rank
from .polys import (
    QuotientField,
    compose_line,
    poly_add,
    poly_factor,
    poly_mul,
    poly_scale,
    poly_sqfree,
    sqfree_part,
)
from .roots import (
    act_elementary,
    cached_weights,
    pairing,
    perm_to_inversions,
    positive_roots,
    root_level,
)


class DegenerateLine(RuntimeError):
    """No sufficiently generic sample line was found."""


def boundary_roots(spec, tau, w):
    """Non-simple positive roots beta with s_beta.w covered by w in W^{P(tau)}."""
    lw = len(perm_to_inversions(spec, w))
    out = []
    for beta in positive_roots(spec):
        k, i, j = beta
        if j == i + 1:
            continue
        v = _swap_values(spec, w, beta)
        inv = perm_to_inversions(spec, v)
        if len(inv) != lw - 1:
            continue
        if all(root_level(spec, tau, b) > 0 for b in inv):
            out.append((beta, v))
    return out


def _swap_values(spec, w, beta):
    k, i, j = beta
    wk = list(w[k])
    for p, val in enumerate(wk):
        if val == i:
            wk[p] = j
        elif val == j:
            wk[p] = i
    return w[:k] + (tuple(wk),) + w[k + 1:]


def has_finite_fibers(spec, tau, v, seed=0, retries=3):
    """Generic finiteness of the fibers of the map built from v.

    True when the differential at a random point of V^{tau<=0} has full rank,
    which proves finiteness.
    """
    inv = sorted(perm_to_inversions(spec, v))
    nonpos = [wt.index for wt in cached_weights(spec) if pairing(tau, wt.coords) <= 0]
    posrow = {wt.index: r for r, wt in enumerate(
        [wt for wt in cached_weights(spec) if pairing(tau, wt.coords) > 0])}
    rng = random.Random(repr(("fibers", seed, tau, v)))
    for _ in range(retries):
        m0 = {idx: rng.randint(1, 9999) * rng.choice((1, -1)) for idx in nonpos}
        rows = [[0] * len(inv) for _ in posrow]
        for c, gamma in enumerate(inv):
            for idx in nonpos:
                hit = act_elementary(spec, gamma, idx)
                if hit is not None and hit[0] in posrow:
                    rows[posrow[hit[0]]][c] += hit[1] * m0[idx]
        if rank(rows) == len(inv):
            return True
    return False


def _line_matrix(spec, tau, roots, row_indices, ab):
    """Matrix of E_beta . phi(z) on the given rows; entries are [b, a] lists."""
    pos = {idx: r for r, idx in enumerate(row_indices)}
    m = [[[] for _ in roots] for _ in row_indices]
    for c, beta in enumerate(roots):
        for idx, (a, b) in ab.items():
            hit = act_elementary(spec, beta, idx)
            if hit is not None and hit[0] in pos:
                coeff = Fraction(hit[1])
                m[pos[hit[0]]][c] = poly_add(m[pos[hit[0]]][c],
                                             [coeff * b, coeff * a])
    return m


def _kernel_mod_delta(matrix, delta):
    """(corank, one kernel vector) of a square matrix over Q[z]/(delta).

    Entries of `matrix` are coefficient lists; the kernel vector is returned
    as a list of coefficient lists (None when corank != 1).
    """
    n = len(matrix)
    if len(delta) == 2:  # linear factor: work over Q at the rational root
        r = -delta[0]
        num = [[sum(((e[i] * r**i) for i in range(len(e))), Fraction(0))
                for e in row] for row in matrix]
        ker = kernel_basis(num)
        if len(ker) != 1:
            return len(ker), None
        return 1, [[x] if x else [] for x in ker[0]]
    k = QuotientField(delta)
    work = [[k.reduce(e) for e in row] for row in matrix]
    ncols = n
    piv_of_col = {}
    row_used = [False] * n
    for col in range(ncols):
        piv = next((i for i in range(n) if not row_used[i] and work[i][col]), None)
        if piv is None:
            continue
        row_used[piv] = True
        piv_of_col[col] = piv
        inv = k.inv(work[piv][col])
        work[piv] = [k.mul(e, inv) for e in work[piv]]
        for i in range(n):
            if i != piv and work[i][col]:
                f = work[i][col]
                work[i] = [k.reduce(poly_add(a, poly_scale(poly_mul(f, b), -1)))
                           for a, b in zip(work[i], work[piv])]
    free = [c for c in range(ncols) if c not in piv_of_col]
    if len(free) != 1:
        return len(free), None
    f = free[0]
    vec = [[] for _ in range(ncols)]
    vec[f] = [Fraction(1)]
    for col, piv in piv_of_col.items():
        vec[col] = poly_scale(work[piv][f], -1)
    return 1, vec


def ram0_contracted(spec, tau, w, seed=0, retries=5):
    """Is the interior ramification divisor contracted, via a random line."""
    j, ring, gens = jacobian_polynomial(spec, tau, w)
    if not j:
        raise ValueError("map is not dominant")
    jbar = sqfree_part(j)
    total = _total_degree(jbar)
    if total == 0:
        return True
    zero, levels = level_data(spec, tau, w)
    nonpos = [wt.index for wt in cached_weights(spec) if pairing(tau, wt.coords) <= 0]
    posidx = [idx for _, rows, _ in levels for idx in rows]
    roots = [b for _, _, rs in levels for b in rs]
    grads = {idx: jbar.diff(gens[idx]) for idx in zero}
    rng = random.Random(repr(("ram0", seed, tau, w)))
    for _ in range(retries):
        ab = {idx: (Fraction(rng.randint(1, 999) * rng.choice((1, -1))),
                    Fraction(rng.randint(1, 999) * rng.choice((1, -1))))
              for idx in nonpos}
        line = {gens[idx]: ab[idx] for idx in zero}
        jline = compose_line(jbar, line)
        sq = poly_sqfree(jline)
        if len(sq) - 1 < total:
            continue  # the line misses a component or hits one twice
        amat = _line_matrix(spec, tau, roots, posidx, ab)
        bmat = _line_matrix(spec, tau, roots, zero, ab)
        gline = {idx: compose_line(g, line) for idx, g in grads.items()}
        ok = True
        for delta, _ in poly_factor(sq):
            corank, u = _kernel_mod_delta(amat, delta)
            if corank >= 2:
                continue  # such components are always contracted
            k = QuotientField(delta)
            acc = []
            for r, idx in enumerate(zero):
                y0 = []
                for c in range(len(roots)):
                    if bmat[r][c] and u[c]:
                        y0 = poly_add(y0, poly_mul(bmat[r][c], u[c]))
                if y0:
                    acc = poly_add(acc, poly_mul(k.reduce(poly_scale(y0, -1)),
                                                 gline[idx]))
            if k.reduce(acc):
                ok = False
                break
        return ok
    raise DegenerateLine("no generic line found for %r" % ((tau, w),))


def _total_degree(p):
    return max((sum(m) for m in p.monoms()), default=0)


def is_birational(spec, tau, w, seed=0):
    """Full birationality test: boundary divisors, then interior ramification."""
    for beta, v in boundary_roots(spec, tau, w):
        if has_finite_fibers(spec, tau, v, seed=seed):
            return False
    return ram0_contracted(spec, tau, w, seed=seed)


def step5(spec, pairs, seed=0):
    return [(t, w) for (t, w) in pairs if is_birational(spec, t, w, seed=seed)]
