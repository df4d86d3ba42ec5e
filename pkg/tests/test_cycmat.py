import random

import pytest

from eistrace.chars import primitive_characters, quadratic_character, trivial_character
from eistrace.cycmat import (
    build_conjecture_matrix,
    build_matrix,
    determinant,
    determinant_cofactor,
    is_nonsingular,
)
from eistrace.exact import Cyclotomic, Rational


def random_matrix(rng, n, order=1):
    from eistrace.exact import totient

    return [
        [Cyclotomic(order, [Rational(rng.randint(-5, 5))
                            for _ in range(totient(order))])
         for _ in range(n)]
        for _ in range(n)
    ]


def test_determinant_known_small():
    a = [[Rational(1), Rational(2)], [Rational(3), Rational(4)]]
    assert determinant(a) == Rational(-2)
    b = [[Rational(2)]]
    assert determinant(b) == Rational(2)
    assert determinant([]) == 1


def test_determinant_singular():
    z = Cyclotomic.root_of_unity(5)
    # rank-1 matrix: rows proportional
    m = [[z, z * z], [z ** 3, z ** 4]]
    assert determinant(m).is_zero()
    assert not is_nonsingular(m)


def test_bareiss_agrees_with_cofactor_random():
    rng = random.Random(99)
    for order in (1, 3, 4, 5, 12):
        for n in (2, 3, 4):
            for _ in range(5):
                m = random_matrix(rng, n, order)
                assert determinant(m) == determinant_cofactor(m)


def test_determinant_multiplies_on_row_scale():
    rng = random.Random(17)
    m = random_matrix(rng, 3, 4)
    d = determinant(m)
    scaled = [list(m[0]), [x * 3 for x in m[1]], list(m[2])]
    assert determinant(scaled) == d * 3


def test_determinant_sign_on_row_swap():
    rng = random.Random(18)
    m = random_matrix(rng, 3, 3)
    swapped = [m[1], m[0], m[2]]
    assert determinant(swapped) == -determinant(m)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        determinant([[Rational(1), Rational(2)]])


def test_build_matrix_M_level_one():
    one = trivial_character()
    m = build_matrix("M", 12, one, [4, 6])
    # both rows are normalized tau coefficients at n = 1, 2
    assert m[0][0] == 1 and m[1][0] == 1
    assert m[0][1] == -24 and m[1][1] == -24
    assert determinant(m).is_zero()  # dim S_12 = 1 forces dependence


def test_build_matrix_M_weight_24_nonsingular():
    one = trivial_character()
    m = build_matrix("M", 24, one, [4, 6])
    assert is_nonsingular(m)


def test_build_matrix_N_weight_24():
    one = trivial_character()
    m = build_matrix("N", 24, one, [4, 6])
    assert is_nonsingular(m)


def test_build_matrix_P_requires_distinct_values_at_two():
    chis = primitive_characters(15, parity=1)
    # single character is always fine
    m = build_matrix("P", 24, [chis[0]], 4)
    assert len(m) == 1
    same = [chis[0], chis[0]]
    with pytest.raises(ValueError):
        build_matrix("P", 24, same, 4)


def test_build_conjecture_matrix_size_guard():
    one = trivial_character()
    with pytest.raises(ValueError):
        build_conjecture_matrix("C1", 12, one, [4, 6])  # dim S_12 = 1
    m = build_conjecture_matrix("C1", 12, one, [4])
    assert len(m) == 1 and m[0][0] == f_first()


def f_first():
    from eistrace.kernels import f_coeff

    return f_coeff(12, 4, trivial_character(), 1)


def test_build_conjecture_matrix_weight_24():
    one = trivial_character()
    for which in ("C1", "C2"):
        m = build_conjecture_matrix(which, 24, one, [4, 6])
        assert len(m) == 2 and len(m[0]) == 2
        assert is_nonsingular(m)


def test_build_conjecture_matrix_characters():
    chis = primitive_characters(5, parity=-1)  # odd characters mod 5
    assert len(chis) == 2
    m = build_conjecture_matrix("C3", 24, chis, 5)
    assert len(m) == 2
    assert is_nonsingular(m)


def test_unknown_kind_rejected():
    one = trivial_character()
    with pytest.raises(ValueError):
        build_matrix("X", 12, one, [4])
    with pytest.raises(ValueError):
        build_conjecture_matrix("C9", 24, one, [4, 6])
