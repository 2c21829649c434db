from itertools import permutations

import pytest

from momentcone.roots import (RepSpec, apply_w_to_tau, perm_to_inversions,
                              positive_roots, reduce_to_face, root_coords,
                              weights)


def test_repspec_validation():
    with pytest.raises(ValueError):
        RepSpec("kronecker", (2,))
    with pytest.raises(ValueError):
        RepSpec("kronecker", (2, 3))      # must be non-increasing
    with pytest.raises(ValueError):
        RepSpec("fermion", (4,), 3)       # needs r <= d-2
    with pytest.raises(ValueError):
        RepSpec("mystery", (2, 2))
    assert RepSpec("kronecker", (3, 2, 2)).n == 7


def test_weight_counts():
    assert len(weights(RepSpec("kronecker", (3, 2, 2)))) == 12
    assert len(weights(RepSpec("fermion", (6,), 3))) == 20   # binom(6,3)
    assert len(weights(RepSpec("boson", (3,), 2))) == 6      # binom(4,2)


def test_positive_roots_count():
    spec = RepSpec("kronecker", (3, 2, 2))
    assert len(positive_roots(spec)) == 3 + 1 + 1


def test_root_coords_sign():
    spec = RepSpec("kronecker", (2, 2))
    (root,) = [r for r in positive_roots(spec) if r[0] == 0]
    assert root_coords(spec, root) == (1, -1, 0, 0)


def test_inversions_identity_and_longest():
    spec = RepSpec("kronecker", (3, 3))
    assert perm_to_inversions(spec, ((1, 2, 3), (1, 2, 3))) == frozenset()
    assert len(perm_to_inversions(spec, ((3, 2, 1), (1, 2, 3)))) == 3


def test_inversion_count_matches_length():
    spec = RepSpec("kronecker", (3, 3))
    for p in permutations((1, 2, 3)):
        inv = perm_to_inversions(spec, (p, (1, 2, 3)))
        length = sum(1 for i in range(3) for j in range(i + 1, 3)
                     if p[i] > p[j])
        assert len(inv) == length


def test_apply_w_permutes_tau():
    spec = RepSpec("kronecker", (3, 3))
    tau = (5, 3, 1, 2, 1, 0)
    wtau = apply_w_to_tau(spec, ((2, 3, 1), (1, 2, 3)), tau)
    assert sorted(spec.block(wtau, 0)) == sorted(spec.block(tau, 0))
    assert spec.block(wtau, 1) == spec.block(tau, 1)


def test_face_reduction_worked_example():
    spec = RepSpec("kronecker", (5, 5, 5, 1))
    tau = (4, 3, 3, 0, 0, 5, 5, 0, 0, 0, 5, 1, 1, 1, 0, -1)
    face = reduce_to_face(spec, tau)
    assert face.dbar == (3, 2, 3, 1)
    assert face.taubar == (4, 3, 0, 5, 0, 5, 1, 0, -1)
    assert face.mtau == (1, 2, 2, 2, 3, 1, 3, 1, 1)
