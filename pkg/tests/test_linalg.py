from fractions import Fraction
from math import gcd

from hypothesis import given, strategies as st

from momentcone.linalg import kernel_basis, primitive, rank

ints = st.integers(min_value=-30, max_value=30)
vectors = st.lists(ints, min_size=1, max_size=6)


def matrices(nrows=st.integers(1, 5), ncols=st.integers(1, 5)):
    return ncols.flatmap(lambda c: st.lists(
        st.lists(ints, min_size=c, max_size=c), min_size=1, max_size=5))


def test_rank_basic():
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0


@given(matrices())
def test_rank_plus_kernel_is_ncols(rows):
    ncols = len(rows[0])
    assert rank(rows) + len(kernel_basis(rows)) == ncols


@given(matrices())
def test_kernel_vectors_annihilate(rows):
    for v in kernel_basis(rows):
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0


@given(vectors.filter(lambda v: any(v)))
def test_primitive_properties(v):
    p = primitive(v)
    g = 0
    for c in p:
        g = gcd(g, c)
    assert g == 1
    # same ray: p is v divided by a positive rational
    ratios = {Fraction(a, b) for a, b in zip(v, p) if b}
    assert len(ratios) == 1 and ratios.pop() > 0


def test_primitive_fractions():
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
