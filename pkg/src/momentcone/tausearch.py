"""Enumeration of the candidate one-parameter subgroups (Step 1).

A candidate tau is a dominant, indivisible, normalized one-parameter subgroup
whose orthogonal weight set spans a suitable hyperplane (codimension s for
tensor products, 1 otherwise) and whose positive weight count does not exceed
dim U(tau).  The search runs face by face on the reduced torus: weights are
split into "orthogonal / positive / negative / nonzero / undecided" classes
and branched on, with transfers driven by the face order.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, floor

from .linalg import SpanTracker, kernel_basis, primitive
from .roots import (RepSpec, cached_weights, dim_u_tau, face_leq, normalize,
                    pairing, weight_span_codim)

UNDECIDED, ORTHO, PLUS, MINUS, NONZERO = 0, 1, 2, 3, 4


def hyperplane_search(coords, mults, dim, codim_target, u):
    """All maximal orthogonal classes spanning codimension `codim_target`.

    coords: reduced weight coordinate vectors; mults: their multiplicities.
    Returns a list of frozensets of indices (raw, undeduplicated).
    """
    nw = len(coords)
    leq = [[face_leq_cached(coords[i], coords[j]) for j in range(nw)] for i in range(nw)]
    status = [UNDECIDED] * nw
    tracker = SpanTracker(dim)
    s0 = []
    out = []

    def rec(plus_mult):
        if dim - tracker.rank() == codim_target:
            out.append(frozenset(s0))
            return
        qs = [i for i in range(nw) if status[i] == UNDECIDED]
        if tracker.rank() + len(qs) < dim - codim_target:
            return
        if not qs:
            return
        # branch on a face-order-maximal undecided weight
        chi = qs[0]
        for i in qs[1:]:
            if leq[chi][i] and chi != i:
                chi = i
        # branch 1: chi is not orthogonal to tau
        status[chi] = NONZERO
        rec(plus_mult)
        status[chi] = UNDECIDED
        # branch 2: chi is orthogonal; order transfers fix signs of comparables
        moved = []
        added = plus_mult
        for j in range(nw):
            if status[j] in (UNDECIDED, NONZERO) and j != chi:
                if leq[chi][j] and not leq[j][chi]:
                    moved.append((j, status[j]))
                    status[j] = PLUS
                    added += mults[j]
                elif leq[j][chi] and not leq[chi][j]:
                    moved.append((j, status[j]))
                    status[j] = MINUS
        if added <= u:
            status[chi] = ORTHO
            s0.append(chi)
            grew = tracker.add(list(coords[chi])) is not None
            rec(added)
            if grew:
                tracker.pop()
            s0.pop()
            status[chi] = UNDECIDED
        for j, st in moved:
            status[j] = st

    rec(0)
    return out


def face_leq_cached(a, b):
    # prefix-sum dominance per block; reduced coords are single-block
    # concatenations already, so compare directly
    run = 0
    for x, y in zip(a, b):
        run += y - x
        if run < 0:
            return False
    return run == 0


class _ReducedKron:
    """Reduced weights of a tensor product with all blocks regular."""

    def __init__(self, e):
        self.e = e
        self.spec = RepSpec("kronecker", tuple(sorted(e, reverse=True)))

    # NB: e is kept in its given (non-increasing) order throughout


def _kron_reduced_coords(e):
    from itertools import product as iproduct
    dim = sum(e)
    offs = []
    t = 0
    for d in e:
        offs.append(t)
        t += d
    coords = []
    for idx in iproduct(*[range(d) for d in e]):
        co = [0] * dim
        for k, a in enumerate(idx):
            co[offs[k] + a] = 1
        coords.append(tuple(co))
    return coords, offs


def _kron_face_leq(e, offs, a, b):
    # per-block prefix sums
    for k, d in enumerate(e):
        run = 0
        for i in range(d):
            run += b[offs[k] + i] - a[offs[k] + i]
            if run < 0:
                return False
        if run != 0:
            return False
    return True


def _reduced_kron_search(e, u):
    """Candidate reduced taus on the face with block dimensions e.

    Returns (kept, n_hyperplanes, n_regular) where kept is a list of reduced
    tau tuples (normalized, regular dominant, satisfying the count bound).
    """
    s = len(e)
    dim = sum(e)
    coords, offs = _kron_reduced_coords(e)
    nw = len(coords)
    leq = [[_kron_face_leq(e, offs, coords[i], coords[j]) for j in range(nw)]
           for i in range(nw)]

    status = [UNDECIDED] * nw
    tracker = SpanTracker(dim)
    s0 = []
    raw = []

    def rec(plus_mult):
        if dim - tracker.rank() == s:
            raw.append(frozenset(s0))
            return
        qs = [i for i in range(nw) if status[i] == UNDECIDED]
        if tracker.rank() + len(qs) < dim - s or not qs:
            return
        chi = qs[0]
        for i in qs[1:]:
            if leq[chi][i] and chi != i:
                chi = i
        status[chi] = NONZERO
        rec(plus_mult)
        status[chi] = UNDECIDED
        moved = []
        added = plus_mult
        for j in range(nw):
            if status[j] in (UNDECIDED, NONZERO) and j != chi:
                if leq[chi][j] and not leq[j][chi]:
                    moved.append((j, status[j]))
                    status[j] = PLUS
                    added += 1
                elif leq[j][chi] and not leq[chi][j]:
                    moved.append((j, status[j]))
                    status[j] = MINUS
        if added <= u:
            status[chi] = ORTHO
            s0.append(chi)
            grew = tracker.add(list(coords[chi])) is not None
            rec(added)
            if grew:
                tracker.pop()
            s0.pop()
            status[chi] = UNDECIDED
        for j, st in moved:
            status[j] = st

    rec(0)

    # one normalized tau line per candidate hyperplane
    lines = {}
    for cand in raw:
        rows = [list(coords[i]) for i in cand]
        # normalization: last coordinate of each block except the last is 0
        for k in range(s - 1):
            row = [0] * dim
            row[offs[k] + e[k] - 1] = 1
            rows.append(row)
        ker = kernel_basis(rows)
        if len(ker) != 1:
            continue
        tau = primitive(ker[0])
        key = tau if tau >= [-x for x in tau] else [-x for x in tau]
        lines[tuple(key)] = None
    n_hyp = len(lines)

    def regular_dominant(t):
        return all(t[offs[k] + i] > t[offs[k] + i + 1]
                   for k in range(s) for i in range(e[k] - 1))

    regs = []
    for key in lines:
        for sign in (1, -1):
            t = tuple(sign * x for x in key)
            if regular_dominant(t):
                regs.append(t)
                break
    n_reg = len(regs)

    kept = []
    for t in regs:
        npos = sum(1 for co in coords if pairing(t, co) > 0)
        if npos <= u:
            kept.append(t)
    return kept, n_hyp, n_reg, regs


def lower_bound_dim_u(d, e):
    """Upper bound for dim U(tau) over taus with reduced dimensions e.

    Both d and e are taken non-increasing; the bound pairs them sorted.
    """
    ds = sorted(d, reverse=True)
    es = sorted(e, reverse=True)
    return floor(sum(Fraction(dk * dk, 2) * (1 - Fraction(1, ek))
                     for dk, ek in zip(ds, es)))


def canonical_mod_symmetry(spec, tau):
    """Minimal representative of tau under permutations of equal-size blocks."""
    best = None
    dims = spec.dims
    for perm in permutations(range(spec.s)):
        if tuple(dims[p] for p in perm) != dims:
            continue
        permuted = []
        for k in range(spec.s):
            permuted.extend(spec.block(tau, perm[k]))
        cand = normalize(spec, permuted)
        if best is None or cand < best:
            best = cand
    return best


def symmetry_stabilizer(spec, tau):
    """Permutations of equal-size factors fixing tau (up to normalization)."""
    out = []
    dims = spec.dims
    for perm in permutations(range(spec.s)):
        if tuple(dims[p] for p in perm) != dims:
            continue
        permuted = []
        for k in range(spec.s):
            permuted.extend(spec.block(tau, perm[k]))
        if normalize(spec, permuted) == tuple(tau):
            out.append(perm)
    return out


def symmetry_orbit(spec, tau):
    orb = set()
    dims = spec.dims
    for perm in permutations(range(spec.s)):
        if tuple(dims[p] for p in perm) != dims:
            continue
        permuted = []
        for k in range(spec.s):
            permuted.extend(spec.block(tau, perm[k]))
        orb.add(normalize(spec, permuted))
    return orb


def _compositions(total, parts):
    """Compositions of `total` into exactly `parts` positive parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_tau_plus(spec, mod_symmetry=True, diagnostics=None):
    """Step-1 candidate list for a representation (tau vectors, deduplicated)."""
    if spec.kind == "kronecker":
        return _enumerate_kron(spec, mod_symmetry, diagnostics)
    return _enumerate_single(spec, diagnostics)


def _dim_multisets(d):
    """Non-increasing tuples e with 1 <= e_i <= d_i (d non-increasing)."""
    s = len(d)

    def rec(i, prev):
        if i == s:
            yield ()
            return
        for v in range(1, min(prev, d[i]) + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    return list(rec(0, max(d)))


def _enumerate_kron(spec, mod_symmetry, diagnostics):
    d = spec.dims
    s = spec.s
    diag = diagnostics if diagnostics is not None else {}
    diag.setdefault("tau_prime", 0)
    diag.setdefault("extensions", 0)
    diag.setdefault("b2_pass", 0)
    wts = cached_weights(spec)

    seen = {}  # normalized tau -> passed (B'') flag
    for e in _dim_multisets(d):
        u = lower_bound_dim_u(d, e)
        kept, _, _ = _reduced_kron_search(list(e), u)
        diag["tau_prime"] += len(kept)
        offs_e = []
        t = 0
        for x in e:
            offs_e.append(t)
            t += x
        for tprime in kept:
            blocks = [tprime[offs_e[i]:offs_e[i] + e[i]] for i in range(s)]
            for sigma in permutations(range(s)):
                # block i of the reduced tau goes to block sigma(i)
                if any(e[i] > d[sigma[i]] for i in range(s)):
                    continue
                choice_sets = [list(_compositions(d[sigma[i]], e[i])) for i in range(s)]

                def assemble(i, acc):
                    if i == s:
                        full = [None] * s
                        for ii in range(s):
                            blk = []
                            for val, m in zip(blocks[ii], acc[ii]):
                                blk.extend([val] * m)
                            full[sigma[ii]] = blk
                        flat = [x for blk in full for x in blk]
                        yield flat
                        return
                    for mchoice in choice_sets[i]:
                        yield from assemble(i + 1, acc + [mchoice])

                for flat in assemble(0, []):
                    tau = normalize(spec, flat)
                    if not any(tau):
                        continue
                    diag["extensions"] += 1
                    if tau in seen:
                        if seen[tau]:
                            diag["b2_pass"] += 1
                        continue
                    npos = sum(1 for w in wts if pairing(tau, w.coords) > 0)
                    ok = npos <= dim_u_tau(spec, tau)
                    seen[tau] = ok
                    if ok:
                        diag["b2_pass"] += 1

    passed = [tau for tau, ok in seen.items() if ok]
    if mod_symmetry:
        passed = sorted({canonical_mod_symmetry(spec, tau) for tau in passed})
    diag["mod_symmetry"] = len(passed)
    final = [tau for tau in passed if weight_span_codim(spec, tau, wts) == s]
    diag["c_prime_pass"] = len(final)
    return sorted(final)


def _ordered_compositions(total):
    """All compositions of `total` (any number of positive parts)."""
    out = []

    def rec(rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for first in range(1, rem + 1):
            acc.append(first)
            rec(rem - first, acc)
            acc.pop()

    rec(total, [])
    return out


def _enumerate_single(spec, diagnostics):
    d = spec.dims[0]
    r = spec.r
    fermion = spec.kind == "fermion"
    diag = diagnostics if diagnostics is not None else {}
    diag.setdefault("faces", 0)
    wts = cached_weights(spec)

    found = set()
    for m in _ordered_compositions(d):
        p = len(m)
        if p < 2:
            continue
        diag["faces"] += 1
        # reduced weights: how many of the r indices fall in each of the p runs
        coords, mults = [], []

        def rec(j, rem, acc):
            if j == p:
                if rem == 0:
                    coords.append(tuple(acc))
                    mu = 1
                    for cj, mj in zip(acc, m):
                        mu *= comb(mj, cj) if fermion else comb(mj + cj - 1, cj)
                    mults.append(mu)
                return
            cap = min(rem, m[j]) if fermion else rem
            for c in range(cap + 1):
                acc.append(c)
                rec(j + 1, rem - c, acc)
                acc.pop()

        rec(0, r, [])
        u = sum(m[i] * m[j] for i in range(p) for j in range(i + 1, p))
        raw = hyperplane_search(coords, mults, p, 1, u)
        lines = set()
        for cand in raw:
            ker = kernel_basis([list(coords[i]) for i in cand])
            if len(ker) != 1:
                continue
            t = primitive(ker[0])
            lines.add(tuple(t) if t >= [-x for x in t] else tuple(-x for x in t))
        for key in lines:
            for sign in (1, -1):
                tb = [sign * x for x in key]
                if all(tb[i] > tb[i + 1] for i in range(p - 1)):
                    npos = sum(mu for co, mu in zip(coords, mults)
                               if pairing(tb, co) > 0)
                    if npos <= u:
                        tau = []
                        for val, mj in zip(tb, m):
                            tau.extend([val] * mj)
                        tau = tuple(tau)
                        if weight_span_codim(spec, tau, wts) == 1:
                            found.add(tau)
                    break
    return sorted(found)


def dense_face_diagnostics(spec):
    """Raw hyperplane/regular/symmetry counts for the dense (regular) face."""
    if spec.kind != "kronecker":
        raise ValueError("dense-face diagnostics are for tensor products")
    e = list(spec.dims)
    u = lower_bound_dim_u(spec.dims, e)
    kept, n_hyp, n_reg = _reduced_kron_search(e, u)
    canon = {canonical_mod_symmetry(spec, t) for t in kept}
    return {"hyperplanes": n_hyp, "regular": n_reg, "kept": len(kept),
            "mod_symmetry": len(canon)}
