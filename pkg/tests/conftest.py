import pytest

from momentcone.roots import RepSpec
from momentcone.tausearch import enumerate_tau_plus
from momentcone.taufilter import step2
from momentcone.weylsearch import step3
from momentcone.dominance import step4
from momentcone.birationality import step5


def run_stages(spec, mod_symmetry=True):
    """Steps 1-5 with per-stage results, shared across tests."""
    import time
    out = {"times": {}}
    t = time.time()
    out["taus1"] = enumerate_tau_plus(spec, mod_symmetry=mod_symmetry)
    out["times"][1] = time.time() - t
    t = time.time()
    out["taus2"] = step2(spec, out["taus1"])
    out["times"][2] = time.time() - t
    t = time.time()
    out["pairs3"] = step3(spec, out["taus2"], mod_symmetry=mod_symmetry)
    out["times"][3] = time.time() - t
    t = time.time()
    out["pairs4"] = step4(spec, out["pairs3"])
    out["times"][4] = time.time() - t
    t = time.time()
    out["pairs5"] = step5(spec, out["pairs4"])
    out["times"][5] = time.time() - t
    return out


@pytest.fixture(scope="session")
def k444():
    return run_stages(RepSpec("kronecker", (4, 4, 4)))


@pytest.fixture(scope="session")
def k333():
    return run_stages(RepSpec("kronecker", (3, 3, 3)))


@pytest.fixture(scope="session")
def f63():
    return run_stages(RepSpec("fermion", (6,), 3))
