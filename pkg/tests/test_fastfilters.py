from momentcone.birationality import is_birational, step5
from momentcone.dominance import step4
from momentcone.fastfilters import groebner_verdict, lin_tri_verdict
from momentcone.roots import RepSpec
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import step2
from momentcone.weylsearch import step3


def _survivors(dims):
    spec = RepSpec("kronecker", dims)
    return spec, step4(spec, step3(spec, step2(spec, enumerate_tau_plus(spec))))


def test_lin_tri_implies_birational():
    spec, pairs = _survivors((3, 2, 2))
    final = set(step5(spec, pairs))
    hits = [p for p in pairs if lin_tri_verdict(spec, *p) == "birational"]
    assert hits, "linear-triangular certificate should fire at this size"
    assert set(hits) <= final


def test_groebner_generic_matches_exact_small():
    spec, pairs = _survivors((3, 2, 2))
    for tau, w in pairs:
        v = groebner_verdict(spec, tau, w, generic=True)
        assert v != "inconclusive"
        assert (v == "birational") == is_birational(spec, tau, w)


def test_groebner_random_never_contradicts_exact():
    spec, pairs = _survivors((3, 2, 2))
    for tau, w in pairs:
        v = groebner_verdict(spec, tau, w, generic=False)
        if v != "inconclusive":
            assert (v == "birational") == is_birational(spec, tau, w)


def test_trivial_pair_is_undecided_by_lin_tri():
    # an identity Weyl element has no inversions: nothing to eliminate
    spec = RepSpec("kronecker", (2, 2, 2))
    tau = next(iter(enumerate_tau_plus(spec)))
    w = ((1, 2), (1, 2), (1, 2))
    assert lin_tri_verdict(spec, tau, w) == "undecided"
