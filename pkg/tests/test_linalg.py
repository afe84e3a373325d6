from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fatpoints.linalg import DEFAULT_PRIME, Field, rank_mod_p, rank_mod_p_numpy, rank_rational

small_matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=1, max_size=7)
)


def test_rank_examples():
    assert rank_mod_p([[1, 2], [2, 4]]) == 1
    assert rank_mod_p([[1, 0], [0, 1]]) == 2
    assert rank_mod_p([]) == 0
    assert rank_mod_p([[2, 0], [0, 3]], p=3) == 1


def test_rational_rank_with_fractions():
    assert rank_rational([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert rank_rational([[Fraction(1, 3), 1], [1, 2]]) == 2


@given(small_matrices)
def test_flint_numpy_and_bareiss_agree(m):
    r = rank_rational(m)
    assert rank_mod_p(m) == r
    assert rank_mod_p_numpy(m) == r


def test_numpy_rejects_large_prime():
    with pytest.raises(ValueError):
        rank_mod_p_numpy([[1]], p=2**61 - 1)


@pytest.mark.parametrize("text,prime", [("rational", None), ("prime", DEFAULT_PRIME), ("prime:101", 101)])
def test_field_parse(text, prime):
    f = Field.parse(text)
    assert f.prime == prime
    assert Field.parse(str(f)) == f


@pytest.mark.parametrize("text", ["prime:100", "prime:1", "reals"])
def test_field_parse_rejects(text):
    with pytest.raises(ValueError):
        Field.parse(text)


@pytest.mark.parametrize("fld", [Field(None), Field(101)])
def test_inverse(fld):
    m = [[2, 1], [7, 4]]
    inv = fld.inverse(m)
    prod = [[fld.reduce(sum(m[i][k] * inv[k][j] for k in range(2))) for j in range(2)] for i in range(2)]
    assert prod == [[fld.reduce(1), fld.reduce(0)], [fld.reduce(0), fld.reduce(1)]]


def test_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        Field(None).inverse([[1, 2], [2, 4]])
