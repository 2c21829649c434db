from momentcone.isotropy import check_C0, generic_isotropy_dim
from momentcone.roots import RepSpec
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import check_Bprime, step2


def test_c0_small_specs():
    assert check_C0(RepSpec("kronecker", (2, 2, 2)))
    assert check_C0(RepSpec("boson", (3,), 2))
    # saturated tensor square: generic isotropy stays positive-dimensional
    assert not check_C0(RepSpec("kronecker", (2, 2)))
    # self-dual exterior power: non-trivial generic isotropy
    assert not check_C0(RepSpec("fermion", (6,), 3))


def test_generic_isotropy_central_torus():
    # one central torus per extra tensor factor acts trivially
    assert generic_isotropy_dim(RepSpec("kronecker", (2, 2, 2))) == 2
    assert generic_isotropy_dim(RepSpec("kronecker", (3, 2, 2))) == 2


def test_step2_small_counts():
    spec = RepSpec("kronecker", (2, 2, 2))
    assert len(step2(spec, enumerate_tau_plus(spec))) == 2
    spec = RepSpec("kronecker", (3, 2, 2))
    assert len(step2(spec, enumerate_tau_plus(spec))) == 4


def test_step2_keeps_subset_and_reports_diagnostics():
    spec = RepSpec("kronecker", (3, 3, 3))
    taus = enumerate_tau_plus(spec)
    diag = {}
    kept = step2(spec, taus, diagnostics=diag)
    assert set(kept) <= set(taus)
    assert diag["c_pass"] == len(kept) <= diag["b_prime_pass"] <= len(taus)


def test_bprime_rejects_oversized_positive_part():
    # tau = (1,0|1,0|1,0): seven weights pair positively but dim U(tau) = 3
    spec = RepSpec("kronecker", (2, 2, 2))
    assert not check_Bprime(spec, (1, 0, 1, 0, 1, 0))
