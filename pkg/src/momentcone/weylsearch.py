"""Enumerate the Weyl elements pairing with a given one-parameter subgroup.

For each candidate tau we list all w, minimal in their coset modulo the
stabilizer of tau, whose inversion set matches the positive part of the
weight system level by level: for every l > 0 the number of inversions of
level l equals the total multiplicity of the weights of level l.

An inversion set with no inversions inside a tau-level block is, on each
ordered pair of blocks, a staircase: row i of the upper block inverts a
prefix of the lower block, with prefix lengths non-decreasing down the rows.
Pairs of blocks are filled by increasing distance so that transitivity
(closure and co-closure of the inversion set) only constrains already
visible cells.
"""

from collections import Counter

from .roots import cached_weights, inversions_to_perm, pairing
from .tausearch import symmetry_stabilizer


def tau_blocks(spec, tau):
    """Runs of equal tau-values per factor, as lists of 1-based positions."""
    out = []
    for k in range(spec.s):
        o = spec.offsets[k]
        blocks = []
        for i in range(1, spec.dims[k] + 1):
            if blocks and tau[o + i - 2] == tau[o + i - 1]:
                blocks[-1][1].append(i)
            else:
                blocks.append((tau[o + i - 1], [i]))
        out.append(blocks)
    return out


def weight_level_counts(spec, tau):
    counts = Counter()
    for w in cached_weights(spec):
        l = pairing(tau, w.coords)
        if l > 0:
            counts[l] += w.mult
    return counts


def _staircases(nrows, lo, hi, size):
    """Non-decreasing prefix profiles f with lo <= f <= hi and sum(f) = size."""

    def gen(i, prev, left):
        if i == nrows:
            if left == 0:
                yield []
            return
        for f in range(max(prev, lo[i]), min(hi[i], left) + 1):
            for tail in gen(i + 1, f, left - f):
                yield [f] + tail

    return list(gen(0, 0, size))


def enumerate_w(spec, tau):
    """All minimal-coset Weyl elements whose inversion levels match the weights."""
    blocks = tau_blocks(spec, tau)
    budgets = dict(weight_level_counts(spec, tau))
    # all ordered block pairs, by factor, sorted by distance within the factor
    pairs = []
    for k in range(spec.s):
        nb = len(blocks[k])
        for a in range(nb):
            for b in range(a + 1, nb):
                level = blocks[k][a][0] - blocks[k][b][0]
                pairs.append((b - a, k, a, b, level))
    pairs.sort()
    cap = Counter()
    for _, k, a, b, level in pairs:
        cap[level] += len(blocks[k][a][1]) * len(blocks[k][b][1])
    if any(budgets.get(l, 0) > cap[l] for l in budgets):
        return []
    results = []
    # chosen[(k, a, b)] = prefix profile f (list over the rows of block a)
    chosen = {}

    def cell(k, a, b, r, c):
        return chosen[(k, a, b)][r] > c

    def rec(idx, rem, remcap):
        if idx == len(pairs):
            if all(v == 0 for v in rem.values()):
                results.append(_to_inversions(spec, blocks, chosen))
            return
        _, k, a, b, level = pairs[idx]
        rows = blocks[k][a][1]
        cols = blocks[k][b][1]
        p, q = len(rows), len(cols)
        lo = [0] * p
        hi = [q] * p
        for r in range(p):
            for c in range(q):
                forced_in = forced_out = False
                for m in range(a + 1, b):
                    mid = len(blocks[k][m][1])
                    for t in range(mid):
                        upper = cell(k, a, m, r, t)
                        lower = cell(k, m, b, t, c)
                        if upper and lower:
                            forced_in = True
                        if not upper and not lower:
                            forced_out = True
                if forced_in:
                    lo[r] = max(lo[r], c + 1)
                if forced_out:
                    hi[r] = min(hi[r], c)
        if any(lo[r] > hi[r] for r in range(p)):
            return
        newcap = dict(remcap)
        newcap[level] = remcap[level] - p * q
        budget = rem.get(level, 0)
        for size in range(max(0, budget - newcap[level]), min(budget, p * q) + 1):
            for prof in _staircases(p, lo, hi, size):
                chosen[(k, a, b)] = prof
                newrem = dict(rem)
                newrem[level] = budget - size
                rec(idx + 1, newrem, newcap)
        chosen.pop((k, a, b), None)

    rec(0, dict(budgets), dict(cap))
    return results


def _to_inversions(spec, blocks, chosen):
    inv = set()
    for (k, a, b), prof in chosen.items():
        rows = blocks[k][a][1]
        cols = blocks[k][b][1]
        for r, f in enumerate(prof):
            for c in range(f):
                inv.add((k, rows[r], cols[c]))
    return inversions_to_perm(spec, frozenset(inv))


def step3(spec, taus, mod_symmetry=True):
    """All (tau, w) pairs surviving the level-count condition.

    With mod_symmetry, w's related by a factor permutation fixing tau are
    listed once (the tau's themselves are already symmetry representatives).
    """
    out = []
    for tau in taus:
        ws = enumerate_w(spec, tau)
        if mod_symmetry:
            stab = [s for s in symmetry_stabilizer(spec, tau) if s != tuple(range(spec.s))]
            if stab:
                seen = set()
                kept = []
                for w in ws:
                    if w in seen:
                        continue
                    kept.append(w)
                    for sig in stab:
                        seen.add(tuple(w[sig[k]] for k in range(spec.s)))
                ws = kept
        for w in ws:
            out.append((tau, w))
    return out
