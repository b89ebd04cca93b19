from fractions import Fraction

import pytest

from exact import (
    GaussianRational, gaussian, integer_kernel_basis, invariant_factors, kernel_coordinates,
    matmul, matvec, nullspace_mod2, parse_rational, rank_mod2, rank_rational,
    rational_nullspace, render_rational, smith_decomposition, smith_normal_form,
    solve_rational,
)
from exceptions import ParseError


def test_render_and_parse_rational():
    assert render_rational(Fraction(6, 4)) == "3/2"
    assert render_rational(Fraction(-4, 2)) == "-2"
    assert parse_rational(" -3/9 ") == Fraction(-1, 3)
    with pytest.raises(ParseError):
        parse_rational("1.5")
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_gaussian_arithmetic():
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -1)
    assert z * w == GaussianRational(Fraction(5, 2), 0)
    assert z / z == 1
    assert (z + 1) - z == 1
    assert 2 * z == GaussianRational(2, 4)
    assert 1 / GaussianRational(0, 1) == GaussianRational(0, -1)
    assert z.norm2() == 5
    assert not GaussianRational()
    with pytest.raises(ZeroDivisionError):
        z / 0


def test_gaussian_hash_matches_rational():
    assert hash(GaussianRational(3)) == hash(Fraction(3))
    assert {GaussianRational(1, 1), GaussianRational(1, 1)} == {GaussianRational(1, 1)}


@pytest.mark.parametrize("text, expected", [
    ("1/2+3/4i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
    ("-2", GaussianRational(-2)),
    ("0-1i", GaussianRational(0, -1)),
    (" 3 - 1/3i ", GaussianRational(3, Fraction(-1, 3))),
])
def test_gaussian_parse(text, expected):
    assert GaussianRational.parse(text) == expected


def test_gaussian_render():
    assert GaussianRational(Fraction(1, 2), Fraction(3, 4)).render() == "1/2+3/4i"
    assert GaussianRational(0, -1).render() == "0-1i"
    assert gaussian("7").render() == "7"
    with pytest.raises(ParseError):
        GaussianRational.parse("i")


def test_rank_rational_mixed_entries():
    assert rank_rational([[1, 2], [2, 4]]) == 1
    assert rank_rational([[GaussianRational(0, 1), 1], [-1, GaussianRational(0, 1)]]) == 1
    assert rank_rational([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert rank_rational([]) == 0


def test_rational_nullspace_and_solve():
    m = [[1, 1, 0], [0, 1, 1]]
    basis = rational_nullspace(m)
    assert len(basis) == 1
    assert matvec(m, basis[0]) == [0, 0]
    x = solve_rational(m, [2, 3])
    assert matvec(m, x) == [2, 3]
    assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None


def test_smith_normal_form_of_small_matrices():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ((2, 6, 12), 3)
    assert smith_normal_form([[2]]) == ((2,), 1)
    assert invariant_factors([[0, 0], [0, 0]]) == ()


@pytest.mark.parametrize("m", [
    [[12, 6, 4], [3, 9, 6], [2, 16, 14]],
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 2]],
])
def test_invariant_factors_agree_with_sympy(m):
    from sympy import ZZ, Matrix
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    d = sympy_snf(Matrix(m), domain=ZZ)
    diagonal = sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i])
    assert tuple(diagonal) == invariant_factors(m)


def test_smith_decomposition_is_a_factorization():
    m = [[3, 6, 1], [4, 8, 2], [0, 0, 5]]
    dec = smith_decomposition(m)
    assert dec.diagonal == (1, 1, 0)
    assert dec.rank == 2
    assert matmul(matmul(dec.u, m), dec.v) == dec.d
    assert matmul(dec.v, dec.v_inv) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert matmul(dec.v_inv, dec.v) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    (kernel,) = integer_kernel_basis(m)
    assert matvec(m, kernel) == [0, 0, 0]
    assert kernel_coordinates(dec, kernel) == [1]
    for i, a in enumerate(dec.diagonal[:-1]):
        if dec.diagonal[i + 1]:
            assert dec.diagonal[i + 1] % a == 0


def test_integer_kernel_basis_and_coordinates():
    # unsigned incidence of a triangle: kernel is trivial over Z
    triangle = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    assert integer_kernel_basis(triangle) == []
    assert invariant_factors(triangle) == (1, 1, 2)

    square = [[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
    basis = integer_kernel_basis(square)
    assert len(basis) == 1
    assert matvec(square, basis[0]) == [0, 0, 0, 0]
    dec = smith_decomposition(square)
    alternating = [1, -1, 1, -1]
    assert abs(kernel_coordinates(dec, alternating)[0]) == 1
    with pytest.raises(ValueError):
        kernel_coordinates(dec, [1, 0, 0, 0])


def test_kernel_of_matrix_without_rows():
    assert integer_kernel_basis([], 2) == [[1, 0], [0, 1]]
    assert invariant_factors([], 2) == ()
    assert smith_decomposition([], 2).rank == 0


def test_negative_pivots_are_normalized():
    dec = smith_decomposition([[-3]])
    assert dec.diagonal == (3,)
    assert matmul(matmul(dec.u, [[-3]]), dec.v) == [[3]]
    assert invariant_factors([[0, -4], [6, 0]]) == (2, 12)


def test_linear_algebra_mod2():
    triangle = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    assert rank_mod2(triangle) == 2
    (x,) = nullspace_mod2(triangle)
    assert x == [1, 1, 1]
    assert rank_mod2([[2, 4], [6, 8]]) == 0
    assert len(nullspace_mod2([], 3)) == 3
