from momentcone.roots import RepSpec, perm_to_inversions, root_level
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import step2
from momentcone.weylsearch import enumerate_w, step3


def _survivors(dims):
    spec = RepSpec("kronecker", dims)
    return spec, step2(spec, enumerate_tau_plus(spec))


def test_step3_small_counts():
    spec, taus = _survivors((2, 2, 2))
    assert len(step3(spec, taus)) == 2
    spec, taus = _survivors((3, 2, 2))
    assert len(step3(spec, taus)) == 9


def test_enumerated_w_are_valid_permutations():
    spec, taus = _survivors((3, 2, 2))
    for tau in taus:
        for w in enumerate_w(spec, tau):
            assert len(w) == spec.s
            for k, blk in enumerate(w):
                assert sorted(blk) == list(range(1, spec.dims[k] + 1))


def test_inversion_sets_lie_in_positive_levels():
    # Phi(w) must consist of roots with positive pairing against tau
    spec, taus = _survivors((3, 2, 2))
    for tau in taus:
        for w in enumerate_w(spec, tau):
            for root in perm_to_inversions(spec, w):
                assert root_level(spec, tau, root) > 0


def test_level_counts_match_inversions():
    # the number of inversions at each level equals the number of weights
    # at that level, which is what makes the collapsing map square
    spec, taus = _survivors((2, 2, 2))
    from momentcone.dominance import level_data
    for tau, w in step3(spec, taus):
        _, levels = level_data(spec, tau, w)
        for _, rows, roots in levels:
            assert len(rows) == len(roots)
