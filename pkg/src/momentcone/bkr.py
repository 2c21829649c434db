"""Levi multiplicity filter for candidate pairs (tau, w).

For a pair with matching dimension counts the collapsing map, when
birational, forces the determinant character chi_det to span a one
dimensional space of Levi-lowest-weight vectors in the coordinate ring of
V^tau.  The dimension of that space expands as a finite sum of products of
Kronecker, Littlewood-Richardson and (for wedge/symmetric powers) plethysm
coefficients; a value different from 1 certifies that the pair is not
birational, so the pair can be eliminated without any Groebner or
ramification computation.
"""

from itertools import product

from .partitions import (kronecker_coefficient, lr_coefficient,
                         partitions_of, plethysm_coefficient)
from .roots import (cached_weights, pairing, perm_to_inversions,
                    reduce_to_face, root_coords)


def chi_det(spec, tau, w):
    """The character -sum_{Phi(w)} alpha + sum_{<chi,tau> > 0} m_chi chi."""
    co = [0] * spec.n
    for root in perm_to_inversions(spec, w):
        rc = root_coords(spec, root)
        for t in range(spec.n):
            co[t] -= rc[t]
    for wt in cached_weights(spec):
        if pairing(tau, wt.coords) > 0:
            for t in range(spec.n):
                co[t] += wt.mult * wt.coords[t]
    chi = tuple(co)
    if pairing(tau, chi) != 0:
        raise ValueError("chi_det does not pair to zero with tau")
    return chi


def _blocks(spec, tau):
    """Positions of the tau-level blocks, as lists indexed like taubar."""
    face = reduce_to_face(spec, tau)
    blocks = [[] for _ in face.mtau]
    for pos, red in enumerate(face.proj):
        blocks[red].append(pos)
    return face, blocks


def levi_dominant_weight(spec, tau, w):
    """chi_det sorted into a partition inside each tau-level block.

    Returns the list of blockwise weakly decreasing integer tuples (the
    highest weight of the Levi irreducible generated by the determinant of
    the collapsing map), or None when some block is not a polynomial weight
    (negative entry), in which case the multiplicity is zero.
    """
    chi = chi_det(spec, tau, w)
    face, blocks = _blocks(spec, tau)
    nu = []
    for b in blocks:
        vals = tuple(sorted((chi[p] for p in b), reverse=True))
        if vals and vals[-1] < 0:
            return None
        nu.append(vals)
    return nu


def _strip(vals):
    return tuple(p for p in vals if p > 0)


def _delta_maps(rows, targets, keys):
    """Non-negative integer maps delta on rows with, for every key,
    sum of delta over the rows hitting the key equal to targets[key]."""
    hits = [[key for key in keys if key in row_keys] for row_keys in rows]

    def rec(j, remaining, acc):
        if j == len(rows):
            if all(v == 0 for v in remaining.values()):
                yield tuple(acc)
            return
        bound = min((remaining[key] for key in hits[j]), default=0)
        for d in range(bound + 1):
            for key in hits[j]:
                remaining[key] -= d
            acc.append(d)
            yield from rec(j + 1, remaining, acc)
            acc.pop()
            for key in hits[j]:
                remaining[key] += d
        return

    return rec(0, dict(targets), [])


def _kron_rows(size, length_bounds):
    """All tuples of partitions of `size` within the length bounds having a
    nonzero multiple Kronecker coefficient, with the coefficient."""
    cands = [partitions_of(size, max_length=b) for b in length_bounds]
    out = []
    for lams in product(*cands):
        g = kronecker_coefficient(list(lams))
        if g:
            out.append((lams, g))
    return out


def _levi_multiplicity_kron(spec, tau, w):
    nu = levi_dominant_weight(spec, tau, w)
    if nu is None:
        return 0
    face, _ = _blocks(spec, tau)
    offs = []
    off = 0
    for k in range(spec.s):
        offs.append(off)
        off += face.dbar[k]
    pset = [idx for idx in product(*(range(face.dbar[k]) for k in range(spec.s)))
            if sum(face.taubar[offs[k] + idx[k]] for k in range(spec.s)) == 0]
    keys = [(i, k) for k in range(spec.s) for i in range(face.dbar[k])]
    targets = {(i, k): sum(nu[offs[k] + i]) for (i, k) in keys}
    if not pset:
        return 1 if all(v == 0 for v in targets.values()) else 0
    rows = [{(idx[k], k) for k in range(spec.s)} for idx in pset]
    total = 0
    for delta in _delta_maps(rows, targets, keys):
        choices = [_kron_rows(delta[j],
                              [face.mtau[offs[k] + pset[j][k]]
                               for k in range(spec.s)])
                   for j in range(len(pset))]
        for picks in product(*choices):
            term = 1
            for _, g in picks:
                term *= g
            for (i, k) in keys:
                inner = [picks[j][0][k] for j in range(len(pset))
                         if pset[j][k] == i]
                term *= lr_coefficient(_strip(nu[offs[k] + i]), inner)
                if term == 0:
                    break
            total += term
    return total


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out


def _levi_multiplicity_theta(spec, tau, w):
    """Fermion/boson case: wedge or symmetric powers of the blocks."""
    nu = levi_dominant_weight(spec, tau, w)
    if nu is None:
        return 0
    face, _ = _blocks(spec, tau)
    nb = face.dbar[0]
    m = face.mtau
    r = spec.r
    fermion = spec.kind == "fermion"
    bounds = [min(m[j], r) if fermion else r for j in range(nb)]
    pset = [idx for idx in product(*(range(b + 1) for b in bounds))
            if sum(idx) == r
            and sum(idx[j] * face.taubar[j] for j in range(nb)) == 0]
    targets = {j: sum(nu[j]) for j in range(nb)}
    if not pset:
        return 1 if all(v == 0 for v in targets.values()) else 0

    def theta(i):
        return (1,) * i if fermion else ((i,) if i else ())

    total = 0
    for delta in _delta_rows(pset, targets, nb):
        # per row I and block j, admissible (Lambda, Mu) pairs with their
        # plethysm coefficient a(Lambda, theta(I_j), Mu)
        choices = []
        ok = True
        for jrow, idx in enumerate(pset):
            d = delta[jrow]
            per_block = []
            for j in range(nb):
                dim = (_binom(m[j], idx[j]) if fermion
                       else _binom(m[j] + idx[j] - 1, idx[j]))
                pairs = []
                for lam in partitions_of(d, max_length=dim):
                    for mu in partitions_of(idx[j] * d, max_length=m[j]):
                        a = plethysm_coefficient(lam, theta(idx[j]), mu, m[j])
                        if a:
                            pairs.append((lam, mu, a))
                if not pairs:
                    ok = False
                    break
                per_block.append(pairs)
            if not ok:
                break
            choices.append(per_block)
        if not ok:
            continue
        for picks in product(*(product(*per_block) for per_block in choices)):
            term = 1
            for jrow in range(len(pset)):
                term *= kronecker_coefficient([picks[jrow][j][0]
                                               for j in range(nb)])
                if term == 0:
                    break
                for j in range(nb):
                    term *= picks[jrow][j][2]
            if term == 0:
                continue
            for j in range(nb):
                inner = [picks[jrow][j][1] for jrow in range(len(pset))]
                term *= lr_coefficient(_strip(nu[j]), inner)
                if term == 0:
                    break
            total += term
    return total


def _delta_rows(pset, targets, nb):
    """Maps delta on pset rows with sum_I I_j delta(I) = targets[j] for all j."""
    def rec(jrow, remaining, acc):
        if jrow == len(pset):
            if all(v == 0 for v in remaining):
                yield tuple(acc)
            return
        idx = pset[jrow]
        bound = min((remaining[j] // idx[j] for j in range(nb) if idx[j]),
                    default=0)
        for d in range(bound + 1):
            for j in range(nb):
                remaining[j] -= idx[j] * d
            acc.append(d)
            yield from rec(jrow + 1, remaining, acc)
            acc.pop()
            for j in range(nb):
                remaining[j] += idx[j] * d
    return rec(0, [targets[j] for j in range(nb)], [])


def levi_multiplicity(spec, tau, w):
    """Multiplicity of the determinant character's Levi irreducible in the
    coordinate ring of V^tau; birational pairs must give exactly 1."""
    if spec.kind == "kronecker":
        return _levi_multiplicity_kron(spec, tau, w)
    return _levi_multiplicity_theta(spec, tau, w)


def bkr_verdict(spec, tau, w):
    """'not birational' when the multiplicity differs from 1, else 'undecided'."""
    return "undecided" if levi_multiplicity(spec, tau, w) == 1 else "not birational"
