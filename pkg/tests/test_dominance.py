from momentcone.dominance import (is_dominant, is_dominant_symbolic,
                                  jacobian_polynomial, step4)
from momentcone.roots import RepSpec
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import step2
from momentcone.weylsearch import step3


def _pairs(dims):
    spec = RepSpec("kronecker", dims)
    return spec, step3(spec, step2(spec, enumerate_tau_plus(spec)))


def test_symbolic_jacobian_worked_example():
    spec = RepSpec("kronecker", (3, 3, 3, 1))
    tau = (2, 1, 0, 2, 1, 0, 3, 2, 0, -4)
    w = ((3, 2, 1), (3, 2, 1), (3, 2, 1), (1,))
    J, rng, gens = jacobian_polynomial(spec, tau, w)
    terms = J.terms()
    assert len(terms) == 1
    mon, coeff = terms[0]
    assert coeff == 3
    exp_of = {idx: mon[rng.gens.index(g)] for idx, g in gens.items()}
    expected = {(1, 1, 3, 1): 2, (1, 3, 2, 1): 1, (2, 2, 2, 1): 1,
                (2, 3, 1, 1): 2, (3, 1, 2, 1): 1, (3, 2, 1, 1): 2}
    assert {k: v for k, v in exp_of.items() if v} == expected


def test_probabilistic_matches_symbolic_small():
    for dims in [(2, 2, 2), (3, 2, 2)]:
        spec, pairs = _pairs(dims)
        for tau, w in pairs:
            assert is_dominant(spec, tau, w) == is_dominant_symbolic(spec, tau, w)


def test_step4_small_counts():
    spec, pairs = _pairs((2, 2, 2))
    assert len(step4(spec, pairs)) == 2
    spec, pairs = _pairs((3, 2, 2))
    assert len(step4(spec, pairs)) == 9


def test_step4_symbolic_agrees():
    spec, pairs = _pairs((3, 2, 2))
    assert step4(spec, pairs) == step4(spec, pairs, symbolic=True)
