"""Second filtering pass on admissible one-parameter subgroups.

Two tests on each candidate tau from the search stage: a per-level counting
bound (the dimension of each positive-level weight space must not exceed the
number of positive roots at that level), and the exact generic-isotropy
condition on the zero level.
"""

from collections import Counter

from .isotropy import check_C, generic_isotropy_dim
from .roots import cached_weights, pairing, positive_roots, root_level


def check_Bprime(spec, tau):
    """Per-level bound: dim V_l <= #{positive roots of level l} for l > 0."""
    wcount = Counter()
    for w in cached_weights(spec):
        l = pairing(tau, w.coords)
        if l > 0:
            wcount[l] += w.mult
    rcount = Counter()
    for beta in positive_roots(spec):
        l = root_level(spec, tau, beta)
        if l > 0:
            rcount[l] += 1
    return all(wcount[l] <= rcount[l] for l in wcount)


def step2(spec, taus, seed=0, diagnostics=None):
    """Keep the candidates satisfying both the counting bound and condition (C)."""
    bprime = [tau for tau in taus if check_Bprime(spec, tau)]
    base_pid = generic_isotropy_dim(spec, seed)
    kept = [tau for tau in bprime if check_C(spec, tau, seed=seed, base_pid=base_pid)]
    if diagnostics is not None:
        diagnostics["b_prime_pass"] = len(bprime)
        diagnostics["c_pass"] = len(kept)
    return kept
