import random
from fractions import Fraction

import pytest
from sympy import Poly, Rational, Symbol, cyclotomic_poly, invert, rem, totient

from pkg.cyclo import (
    CycloMatrix,
    CycloNumber,
    RootOfUnity,
    common_eigenspaces,
    eigenspaces,
    kernel,
    order_of,
    rank,
    rou_arith,
    simultaneous_eigenbasis,
)
import pkg.cyclo.linalg as linalg_module
import pkg.cyclo.number as number_module
from pkg.cyclo.linalg import matrix_order

z = Symbol("z")
I = CycloNumber.root(1, 4)


@pytest.mark.parametrize("k, n, num, den", [(3, 6, 1, 2), (0, 5, 0, 1), (-1, 4, 3, 4), (10, 12, 5, 6)])
def test_root_of_unity_is_stored_reduced(k, n, num, den):
    q = RootOfUnity.of(k, n)
    assert (q.num, q.den) == (num, den)


def test_root_of_unity_arithmetic():
    assert RootOfUnity.of(1, 3) * RootOfUnity.of(1, 6) == RootOfUnity.minus_one()
    assert RootOfUnity.of(1, 4) ** 2 == RootOfUnity.minus_one()
    assert RootOfUnity.of(1, 4).inverse() == RootOfUnity.of(3, 4)
    assert (RootOfUnity.of(2, 5) / RootOfUnity.of(2, 5)).is_one()
    assert RootOfUnity.of(2, 6).order == 3
    assert RootOfUnity.of(1, 3).exponent_at(12) == 4
    assert rou_arith(RootOfUnity.of(1, 6), 3, "pow").is_minus_one()
    with pytest.raises(ValueError):
        RootOfUnity.of(1, 3).exponent_at(4)
    with pytest.raises(ValueError):
        rou_arith(RootOfUnity.one(), RootOfUnity.one(), "add")


def test_root_of_unity_text_form():
    assert RootOfUnity.of(5, 12).render() == "zeta(12)^5"
    assert RootOfUnity.one().render() == "zeta(1)^0"
    assert RootOfUnity.parse("zeta(12)^5") == RootOfUnity.of(5, 12)
    assert RootOfUnity.parse(" zeta(8)^6 ") == RootOfUnity.of(3, 4)
    with pytest.raises(ValueError):
        RootOfUnity.parse("i")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 20, 24])
def test_cyclotomic_polynomial_vanishes_at_zeta(n):
    coeffs = [int(c) for c in reversed(Poly(cyclotomic_poly(n, z), z).all_coeffs())]
    value = CycloNumber.zero(n)
    for i, c in enumerate(coeffs):
        value = value + CycloNumber.root(i, n) * c
    assert value.is_zero()
    assert len(CycloNumber.root(1, n).reduced()) == totient(n)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
def test_roots_of_unity_sum_to_zero(n):
    total = CycloNumber.zero(n)
    for k in range(n):
        total = total + CycloNumber.root(k, n)
    assert total == 0


def test_field_operations():
    w = CycloNumber.root(1, 3)
    assert I * I == -1
    assert w + w * w == -1
    assert (w + w * w).as_rational() == Fraction(-1)
    assert CycloNumber.root(1, 8).conjugate() == CycloNumber.root(7, 8)
    a = 1 + CycloNumber.root(1, 5)
    assert a * a.inverse() == 1
    assert a / a == 1
    assert I ** -1 == -I
    assert CycloNumber.root(1, 4).lift(8) == CycloNumber.root(2, 8)
    assert I + CycloNumber.root(1, 6) == CycloNumber.root(1, 6) + I
    with pytest.raises(ZeroDivisionError):
        CycloNumber.zero(5).inverse()
    with pytest.raises(ValueError):
        CycloNumber.root(1, 4).lift(6)


def test_root_of_unity_recognition():
    assert CycloNumber.root(3, 12).as_root_of_unity() == RootOfUnity.of(1, 4)
    assert (-CycloNumber.root(1, 3)).as_root_of_unity() == RootOfUnity.of(5, 6)
    assert (1 + I).as_root_of_unity() is None
    assert I.as_rational() is None
    assert CycloNumber.zero().render() == "0"


def test_numbers_are_not_hashable():
    with pytest.raises(TypeError):
        hash(CycloNumber.one())
    with pytest.raises(TypeError):
        hash(CycloMatrix.identity(2))


def test_matrix_arithmetic():
    flip = CycloMatrix.build([[0, 1], [1, 0]])
    assert (flip @ flip).is_identity()
    assert (flip ** 2) == CycloMatrix.identity(2)
    assert flip.trace() == 0
    assert matrix_order(flip) == 2
    rot = CycloMatrix.diagonal([I, -I])
    assert matrix_order(rot) == 4
    assert not flip.commutes_with(rot)
    assert (rot @ flip) == CycloMatrix.build([[0, I], [-I, 0]])
    w = CycloMatrix.scalar(RootOfUnity.of(1, 3), 2)
    assert w.scalar_value() == CycloNumber.root(1, 3)
    assert flip.scalar_value() is None
    assert (w ** 3).is_identity()


def test_kernel_and_rank():
    m = CycloMatrix.build([[1, 2], [2, 4]])
    assert rank(m) == 1
    (v,) = kernel(m)
    assert v[0] == -2 and v[1] == 1
    assert rank(CycloMatrix.identity(3)) == 3
    assert kernel(CycloMatrix.identity(3)) == []


def test_eigenspaces_of_flip():
    flip = CycloMatrix.build([[0, 1], [1, 0]])
    spaces = eigenspaces(flip, 2)
    assert [value for value, _ in spaces] == [RootOfUnity.one(), RootOfUnity.minus_one()]
    (plus,) = spaces[0][1]
    assert plus[0] == 1 and plus[1] == 1
    with pytest.raises(ValueError):
        eigenspaces(CycloMatrix.diagonal([I, 1]), 2)


def test_fixed_vector_of_quarter_turn_reflection():
    # ρ((1 3)(2 4)) in the two-dimensional representation of the centralizer of (1 2)(3 4) in A_6
    m = CycloMatrix.build([[0, I], [-I, 0]])
    value, basis = eigenspaces(m, 2)[0]
    assert value.is_one()
    assert basis[0][0] == I and basis[0][1] == 1


def test_joint_eigenspaces():
    flip = CycloMatrix.build([[0, 1], [1, 0]])
    sign = CycloMatrix.diagonal([1, -1])
    assert common_eigenspaces([flip, sign]) == []
    with pytest.raises(ValueError):
        simultaneous_eigenbasis([flip, sign])
    basis = simultaneous_eigenbasis([sign, CycloMatrix.diagonal([I, I])])
    assert len(basis) == 2
    assert {values for _, values in basis} == {
        (RootOfUnity.one(), RootOfUnity.of(1, 4)),
        (RootOfUnity.minus_one(), RootOfUnity.of(1, 4)),
    }


@pytest.mark.parametrize("q, order", [(RootOfUnity.minus_one(), 2), (RootOfUnity.of(1, 3), 3), (RootOfUnity.one(), 1), (RootOfUnity.of(4, 6), 3)])
def test_order_of(q, order):
    assert order_of(q) == order


def sympy_coordinates(expr, n):
    """Power-basis coordinates of a polynomial in z modulo Phi_n, computed by sympy."""
    deg = int(totient(n))
    poly = Poly(rem(expr, cyclotomic_poly(n, z), z), z, domain="QQ")
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return tuple(coeffs + [Fraction(0)] * (deg - len(coeffs)))


def random_number(rng, n):
    coeffs = tuple(Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3])) for _ in range(n))
    return CycloNumber(n, coeffs)


def as_expr(a):
    return sum(Rational(c.numerator, c.denominator) * z ** i for i, c in enumerate(a.coeffs))


def test_field_operations_agree_with_sympy():
    rng = random.Random(20240611)
    for _ in range(100):
        n = rng.choice([3, 4, 5, 7, 8, 9, 12, 15])
        a, b = random_number(rng, n), random_number(rng, n)
        assert (a + b).reduced() == sympy_coordinates(as_expr(a) + as_expr(b), n)
        assert (a * b).reduced() == sympy_coordinates(as_expr(a) * as_expr(b), n)
        if a.is_zero():
            continue
        expected = sympy_coordinates(invert(as_expr(a), cyclotomic_poly(n, z), z), n)
        assert a.inverse().reduced() == expected


def test_monomials_invert_without_elimination(monkeypatch):
    def no_elimination(*args):
        raise AssertionError("monomials are inverted directly")

    monkeypatch.setattr(number_module, "_solve_rational", no_elimination)
    a = 3 * CycloNumber.root(2, 7)
    assert a.inverse() == Fraction(1, 3) * CycloNumber.root(5, 7)
    assert (-I).inverse() == I


def test_inverse_coordinates_are_cached():
    a = 2 + CycloNumber.root(1, 9)
    first = a.inverse()
    hits = number_module._inverse_coordinates.cache_info().hits
    assert a.inverse() == first
    assert number_module._inverse_coordinates.cache_info().hits == hits + 1


def common_eigenspaces_without_shortcut(monkeypatch, family):
    monkeypatch.setattr(linalg_module, "_diagonal_roots", lambda m: None)
    return common_eigenspaces(family)


def test_diagonal_families_skip_elimination(monkeypatch):
    family = [CycloMatrix.diagonal([1, -1, 1]), CycloMatrix.diagonal([I, I, -1])]
    general = common_eigenspaces_without_shortcut(monkeypatch, family)
    monkeypatch.undo()

    def no_kernel(m):
        raise AssertionError("diagonal families need no kernels")

    monkeypatch.setattr(linalg_module, "kernel", no_kernel)
    found = common_eigenspaces(family)
    assert [values for _, values in found] == [
        (RootOfUnity.one(), RootOfUnity.of(1, 4)),
        (RootOfUnity.one(), RootOfUnity.minus_one()),
        (RootOfUnity.minus_one(), RootOfUnity.of(1, 4)),
    ]
    assert [[list(v) for v in basis] for basis, _ in found] == [[list(v) for v in basis] for basis, _ in general]
    assert [values for _, values in found] == [values for _, values in general]


def test_empty_family():
    basis = simultaneous_eigenbasis([], size=2)
    assert [values for _, values in basis] == [(), ()]
    assert [list(vec) for vec, _ in basis] == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        simultaneous_eigenbasis([])
