"""Dominance of the collapsing map attached to a pair (tau, w).

By block-triangularity of the differential at a point of V^{tau<=0}, the map
is dominant iff for each level l > 0 the square matrix of the action

    u(Phi(w))^{tau=l} -> V^{tau=l},  E_beta |-> E_beta . x0

is invertible for generic x0 in V^tau.  The blocks are square exactly when
the level-count condition from the Weyl search holds.
"""

import random

from sympy import QQ
from sympy.polys.rings import ring as poly_ring

from .linalg import det_int
from .roots import (
    cached_weights,
    pairing,
    perm_to_inversions,
    root_level,
)


def level_data(spec, tau, w):
    """Zero-level basis indices and, per positive level, (weight idxs, roots)."""
    zero = []
    wlev = {}
    for wt in cached_weights(spec):
        l = pairing(tau, wt.coords)
        if l == 0:
            zero.append(wt.index)
        elif l > 0:
            wlev.setdefault(l, []).append(wt.index)
    rlev = {}
    for beta in sorted(perm_to_inversions(spec, w)):
        l = root_level(spec, tau, beta)
        rlev.setdefault(l, []).append(beta)
    assert sorted(wlev) == sorted(rlev)
    return zero, [(l, wlev[l], rlev[l]) for l in sorted(wlev)]


def jacobian_blocks(spec, tau, w, x0):
    """The level blocks of the differential at x0 (a dict index -> value)."""
    from .roots import act_elementary

    zero, levels = level_data(spec, tau, w)
    blocks = []
    for l, rows, roots in levels:
        pos = {idx: r for r, idx in enumerate(rows)}
        m = [[0] * len(roots) for _ in rows]
        for c, beta in enumerate(roots):
            for idx in zero:
                v = x0[idx]
                if not v:
                    continue
                hit = act_elementary(spec, beta, idx)
                if hit is not None and hit[0] in pos:
                    m[pos[hit[0]]][c] += hit[1] * v
        blocks.append(m)
    return blocks


def is_dominant(spec, tau, w, seed=0, retries=3):
    """Probabilistic dominance test; a full-rank sample proves dominance."""
    zero, levels = level_data(spec, tau, w)
    if any(len(rows) != len(roots) for _, rows, roots in levels):
        return False
    rng = random.Random(repr((seed, tau, w)))
    for _ in range(retries):
        x0 = {idx: rng.randint(1, 9999) * rng.choice((1, -1)) for idx in zero}
        if all(det_int(b) for b in jacobian_blocks(spec, tau, w, x0)):
            return True
    return False


def poly_det(rows, one):
    """Fraction-free Bareiss determinant over a polynomial ring."""
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return one * 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exquo(prev)
            m[i][k] = m[i][k] * 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def generic_point_ring(spec, tau, w):
    """Polynomial ring with one generator per zero-level weight.

    Returns (ring, gens) where gens maps weight indices to generators.
    """
    zero, _ = level_data(spec, tau, w)
    names = ",".join("x%d" % n for n in range(len(zero)))
    rng = poly_ring(names, QQ)
    return rng[0], dict(zip(zero, rng[1:]))


def jacobian_block_dets(spec, tau, w):
    """Determinants of the level blocks at the generic point of V^tau.

    Returns (dets, ring, gens); the map is dominant iff no det vanishes.
    """
    rng, gens = generic_point_ring(spec, tau, w)
    blocks = jacobian_blocks(spec, tau, w, gens)
    one = rng.one
    dets = [poly_det([[one * e for e in row] for row in b], one) for b in blocks]
    return dets, rng, gens


def jacobian_polynomial(spec, tau, w):
    """Product of the level-block determinants at the generic point of V^tau.

    Identically zero iff the map is not dominant; only zero-level coordinates
    appear.  Returns (J, ring, gens).
    """
    dets, rng, gens = jacobian_block_dets(spec, tau, w)
    j = rng.one
    for d in dets:
        j = j * d
    return j, rng, gens


def is_dominant_symbolic(spec, tau, w):
    zero, levels = level_data(spec, tau, w)
    if any(len(rows) != len(roots) for _, rows, roots in levels):
        return False
    dets, _, _ = jacobian_block_dets(spec, tau, w)
    return all(dets)


def step4(spec, pairs, seed=0, symbolic=False):
    """Keep the pairs whose collapsing map is dominant."""
    if symbolic:
        return [(t, w) for (t, w) in pairs if is_dominant_symbolic(spec, t, w)]
    return [(t, w) for (t, w) in pairs if is_dominant(spec, t, w, seed=seed)]
