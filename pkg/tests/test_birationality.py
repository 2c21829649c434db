from momentcone.birationality import boundary_roots, is_birational, step5
from momentcone.dominance import step4
from momentcone.roots import RepSpec, perm_to_inversions
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import step2
from momentcone.weylsearch import step3


def _survivors(dims):
    spec = RepSpec("kronecker", dims)
    return spec, step4(spec, step3(spec, step2(spec, enumerate_tau_plus(spec))))


def test_step5_small_counts():
    spec, pairs = _survivors((2, 2, 2))
    assert len(step5(spec, pairs)) == 1
    spec, pairs = _survivors((3, 2, 2))
    assert len(step5(spec, pairs)) == 5


def test_seed_independence():
    spec, pairs = _survivors((3, 2, 2))
    assert step5(spec, pairs, seed=0) == step5(spec, pairs, seed=17)


def test_boundary_roots_are_length_one_covers():
    # each boundary divisor comes from removing one inversion of w
    spec, pairs = _survivors((3, 2, 2))
    for tau, w in pairs:
        phi = perm_to_inversions(spec, w)
        for beta, v in boundary_roots(spec, tau, w):
            assert beta in phi
            assert len(perm_to_inversions(spec, v)) == len(phi) - 1


def test_final_pairs_survive_rechecks():
    spec, pairs = _survivors((3, 2, 2))
    for tau, w in step5(spec, pairs):
        assert is_birational(spec, tau, w, seed=3)
