"""Fast partial birationality filters based on the fiber equations.

Over a point x of V^{tau<=0} the fiber of the collapsing map identifies with
the zero set of the polynomials f_chi(v) = xi_chi(phi(v).x), one for each
weight chi of positive level, in the unipotent coordinates v_beta indexed by
the inversions of w.  The pair (tau, w) gives a birational collapsing iff for
generic x this system defines the reduced point v = 0.

* linear-triangular filter: purely combinatorial sufficient condition, the
  system solves by iterated elimination of equations that stay linear;
* Groebner filter: compute the reduced basis of the ideal (under a time
  budget); it equals the list of coordinate functions iff the fiber is the
  reduced origin.
"""

import multiprocessing
import random
from itertools import product

import sympy

from .roots import cached_weights, pairing, perm_to_inversions


def lin_tri_verdict(spec, tau, w):
    """'birational' when the fiber system is triangular linear, else 'undecided'.

    Repeatedly looks for equations that are linear in a single variable: each
    forces that variable to zero (the base point coefficients are independent
    transcendentals, so no cancellation hides behind them).  Substituting and
    iterating until the variables are exhausted certifies that the fiber is
    the reduced origin.  Pairs with an empty inversion set carry no equations
    and are left to the caller.
    """
    inv = sorted(perm_to_inversions(spec, w))
    if not inv:
        return "undecided"
    vsyms = [sympy.Symbol("v_%d_%d_%d" % b) for b in inv]
    vgens = dict(zip(inv, vsyms))
    level = {wt.index: pairing(tau, wt.coords) for wt in cached_weights(spec)}
    x = {idx: sympy.Symbol("x%d" % t)
         for t, (idx, l) in enumerate(level.items()) if l <= 0}
    eqs = [sympy.Poly(e, *vsyms) for e in fiber_equations(spec, tau, w, x, vgens)]
    vs = set(vsyms)
    remaining = set(vsyms)
    while remaining:
        solved = set()
        rest = []
        for p in eqs:
            fv = set(p.free_symbols) & vs
            if p.total_degree() == 1 and len(fv) == 1:
                solved |= fv
            else:
                rest.append(p)
        if not solved:
            return "undecided"
        sub = {v: 0 for v in solved}
        eqs = []
        for p in rest:
            q = p.as_expr().subs(sub)
            if q != 0:
                eqs.append(sympy.Poly(q, *vsyms))
        remaining -= solved
    return "birational"


def _substitutions(spec, roots, vgens):
    """Per factor, per source position j: the terms (i, v_beta) of phi(v).e_j."""
    subs = [{} for _ in range(spec.s)]
    for beta in roots:
        k, i, j = beta
        subs[k].setdefault(j, []).append((i, vgens[beta]))
    return subs


def _apply_unipotent(spec, subs, idx):
    """phi(v).e_idx in the weight basis, as a dict {weight index: coefficient}.

    phi(v) acts on each tensor slot (or wedge/symmetric slot) by
    e_j -> e_j + sum_beta v_beta e_i, and the product over slots expands.
    """
    slots = []
    if spec.kind == "kronecker":
        for k, j in enumerate(idx):
            slots.append([(j, 1)] + subs[k].get(j, []))
    else:
        for j in idx:
            slots.append([(j, 1)] + subs[0].get(j, []))
    out = {}
    for choice in product(*slots):
        targets = tuple(c[0] for c in choice)
        coeff = 1
        for c in choice:
            coeff = coeff * c[1]
        if spec.kind == "kronecker":
            tgt = targets
        elif spec.kind == "fermion":
            if len(set(targets)) < len(targets):
                continue
            tgt = tuple(sorted(targets))
            # sign of the permutation sorting the chosen indices
            lst = list(targets)
            sign = 1
            for a in range(len(lst)):
                for b in range(a + 1, len(lst)):
                    if lst[a] > lst[b]:
                        sign = -sign
            coeff = coeff * sign
        else:
            tgt = tuple(sorted(targets))
        out[tgt] = out.get(tgt, 0) + coeff
    return out


def fiber_equations(spec, tau, w, x, vgens):
    """The fiber polynomials f_chi = xi_chi(phi(v).x) for positive-level chi.

    `x` maps non-positive-level weight indices to coefficients; `vgens` maps
    the inversions of w to polynomial variables.
    """
    subs = _substitutions(spec, set(vgens), vgens)
    level = {wt.index: pairing(tau, wt.coords) for wt in cached_weights(spec)}
    acc = {}
    for idx, xval in x.items():
        for tgt, coeff in _apply_unipotent(spec, subs, idx).items():
            if level[tgt] > 0:
                acc[tgt] = acc.get(tgt, 0) + coeff * xval
    return [sympy.expand(p) for p in acc.values()]


# --- fraction-free Buchberger over Q[x]-coefficients ------------------------
#
# sympy's generic Groebner routine is far too slow over rational function
# fields, so the generic mode works with primitive polynomials whose
# coefficients live in ZZ[x_1..x_m]: S-polynomials and reductions are done by
# cross-multiplying leading coefficients and stripping the content afterwards.

def _grevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _mmul(a, b):
    return tuple(i + j for i, j in zip(a, b))


def _mdiv(a, b):
    q = tuple(i - j for i, j in zip(a, b))
    return q if min(q) >= 0 else None


def _mlcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))


def _lead(p):
    return max(p, key=_grevlex)


def _primitive(p, one):
    if not p:
        return p
    it = iter(p.values())
    g = next(it)
    for c in it:
        g = g.gcd(c)
        if g == one:
            return p
    return {m: c.exquo(g) for m, c in p.items()}


def _full_reduce(p, basis, zero, one):
    out = {}
    p = dict(p)
    while p:
        lm = _lead(p)
        lc = p[lm]
        hit = None
        for b in basis:
            d = _mdiv(lm, _lead(b))
            if d is not None:
                hit = (b, d)
                break
        if hit is None:
            out[lm] = lc
            del p[lm]
            continue
        b, d = hit
        lcb = b[_lead(b)]
        g = lc.gcd(lcb)
        mp, mb = lcb.exquo(g), lc.exquo(g)
        if mp != one:
            p = {m: c * mp for m, c in p.items()}
            out = {m: c * mp for m, c in out.items()}
            lc = p[lm]
        for m, c in b.items():
            mm = _mmul(m, d)
            nc = p.get(mm, zero) - c * mb
            if nc:
                p[mm] = nc
            elif mm in p:
                del p[mm]
    return _primitive(out, one)


def _spoly(a, b, zero):
    la, lb = _lead(a), _lead(b)
    lcm = _mlcm(la, lb)
    ca, cb = a[la], b[lb]
    g = ca.gcd(cb)
    ma, mb = _mdiv(lcm, la), _mdiv(lcm, lb)
    fa, fb = cb.exquo(g), ca.exquo(g)
    out = {}
    for m, c in a.items():
        out[_mmul(m, ma)] = c * fa
    for m, c in b.items():
        mm = _mmul(m, mb)
        nc = out.get(mm, zero) - c * fb
        if nc:
            out[mm] = nc
        elif mm in out:
            del out[mm]
    return out


def _leading_monomials(polys, zero, one):
    """Minimal leading monomials of the ideal generated by `polys`."""
    basis = [q for q in (_primitive(p, one) for p in polys) if q]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()
    while pairs:
        i, j = min(pairs, key=lambda ij: _grevlex(
            _mlcm(_lead(basis[ij[0]]), _lead(basis[ij[1]]))))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = _lead(basis[i]), _lead(basis[j])
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        lcm = _mlcm(li, lj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (_mdiv(lcm, _lead(basis[k])) is not None
                    and tuple(sorted((i, k))) in done
                    and tuple(sorted((j, k))) in done):
                skip = True
                break
        if skip:
            continue
        r = _full_reduce(_spoly(basis[i], basis[j], zero), basis, zero, one)
        if r:
            basis.append(r)
            k = len(basis) - 1
            pairs |= {(t, k) for t in range(k)}
    lms = [_lead(b) for b in basis]
    return sorted({m for m in lms
                   if not any(m2 != m and _mdiv(m, m2) for m2 in lms)})


def _to_coeff_dicts(eqs, vsyms, xs, base):
    """Fiber equations as {v-monomial: coefficient in ZZ[x...]} dictionaries."""
    out = []
    for e in eqs:
        p = sympy.Poly(e, *vsyms)
        d = {}
        for mono, c in p.terms():
            coeff = base.zero
            for xm, q in sympy.Poly(c, *xs).terms():
                t = base.ground_new(int(q))
                for g, e2 in zip(base.gens, xm):
                    t = t * g ** e2
                coeff = coeff + t
            d[tuple(mono)] = coeff
        out.append(d)
    return out


_MODULUS = 2147483647


def _groebner_worker(eqs, vsyms, xs, queue):
    try:
        nv = len(vsyms)
        base = sympy.polys.rings.ring(
            ",".join(s.name for s in xs), sympy.GF(_MODULUS))[0]
        polys = _to_coeff_dicts(eqs, vsyms, xs, base)
        lms = _leading_monomials(polys, base.zero, base.one)
        varmons = sorted(tuple(1 if t == k else 0 for t in range(nv))
                         for k in range(nv))
        queue.put(lms == varmons)
    except Exception:
        queue.put(None)


def _staircase_worker(eqs, vsyms, queue):
    try:
        nonzero = [e for e in eqs if e != 0]
        if not nonzero:
            queue.put(())
            return
        gb = sympy.groebner(nonzero, *vsyms, order="grevlex", modulus=_MODULUS)
        queue.put(tuple(sorted(
            sympy.Poly(g, *vsyms).monoms(order="grevlex")[0]
            for g in gb.exprs)))
    except Exception:
        queue.put(None)


def _run_budgeted(target, args, budget):
    queue = multiprocessing.Queue()
    proc = multiprocessing.Process(target=target, args=args + (queue,))
    proc.start()
    proc.join(budget)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None
    return queue.get() if not queue.empty() else None


def groebner_verdict(spec, tau, w, seed=0, generic=False, budget=None):
    """'birational', 'not birational' or 'inconclusive' (budget exceeded).

    With generic=False the Groebner basis is computed over a large prime
    field at a base point with random integer coordinates.  With
    generic=True the computation is carried out along a random affine line
    u |-> x0 + u*x1 in the base, in two stages:
    (1) a Groebner basis over the function field F_p(u) (fraction free,
        coefficients in GF(p)[u]) under a fraction of the budget, and
    (2) if stage 1 exceeds its budget, the staircases at three distinct
        integer points of the same line, which must agree.
    In every mode a 'birational' answer is certain: the fiber degree can
    only grow under each of the specialisations x -> line, u -> u0 and
    reduction mod p, so degree one at the special point forces degree one
    generically.  A 'not birational' answer additionally assumes the random
    choices avoid the exceptional locus where the fiber degenerates.
    The budget defaults to 5 seconds (random point) or 60 seconds (generic).
    """
    inv = sorted(perm_to_inversions(spec, w))
    vsyms = [sympy.Symbol("v_%d_%d_%d" % b) for b in inv]
    vgens = dict(zip(inv, vsyms))
    level = {wt.index: pairing(tau, wt.coords) for wt in cached_weights(spec)}
    lower = [i for i, l in level.items() if l <= 0]
    if not vsyms:
        return "birational"
    varmons = tuple(sorted(tuple(1 if t == k else 0 for t in range(len(vsyms)))
                           for k in range(len(vsyms))))
    if not generic:
        rng = random.Random(repr((seed, "fiber", tau, w)))
        x = {idx: rng.randint(-1000, 1000) for idx in lower}
        budget = 5.0 if budget is None else budget
        eqs = fiber_equations(spec, tau, w, x, vgens)
        st = _run_budgeted(_staircase_worker, (eqs, vsyms), budget)
        if st is None:
            return "inconclusive"
        return "birational" if st == varmons else "not birational"
    budget = 60.0 if budget is None else budget
    u = sympy.Symbol("u")
    rng = random.Random(repr((seed, "fiber line", tau, w)))
    line = {idx: (rng.randint(-99, 99), rng.randint(-99, 99)) for idx in lower}
    x = {idx: a + u * b for idx, (a, b) in line.items()}
    eqs = fiber_equations(spec, tau, w, x, vgens)
    ok = _run_budgeted(_groebner_worker, (eqs, vsyms, [u]), budget / 3.0)
    if ok is not None:
        return "birational" if ok else "not birational"
    stairs = []
    for u0 in (1, 2, 3):
        xe = {idx: a + u0 * b for idx, (a, b) in line.items()}
        eqs0 = fiber_equations(spec, tau, w, xe, vgens)
        st = _run_budgeted(_staircase_worker, (eqs0, vsyms), budget * 2.0 / 9.0)
        if st is None:
            return "inconclusive"
        stairs.append(st)
    if len(set(stairs)) != 1:
        return "inconclusive"
    return "birational" if stairs[0] == varmons else "not birational"
