import itertools
import random

import pytest
from sympy import Matrix
from sympy.liealgebras.cartan_type import CartanType

from app.braiding.entity.module import QMatrix
from app.cartan.entity.cartan import CartanMatrix, InfiniteImmediately, NotCartanType
from app.cartan.service.cartan_service import cartan_from_q, is_finite_type
from app.cartan.service.hilbert_service import HilbertOptions, nichols_hilbert_prefix
from app.core.errors import BudgetExceededError
from pkg.cyclo import RootOfUnity

W = RootOfUnity.of(1, 3)
W2 = RootOfUnity.of(2, 3)
MINUS = RootOfUnity.minus_one()


def chain(k):
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        rows[i][i] = 2
        if i + 1 < k:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return rows


def with_branch(k, at):
    """A chain on k-1 nodes with an extra node attached to node ``at``."""
    rows = [row + [0] for row in chain(k - 1)] + [[0] * k]
    rows[k - 1][k - 1] = 2
    rows[at][k - 1] = rows[k - 1][at] = -1
    return rows


def finite_by_minors(rows):
    n = len(rows)
    m = Matrix(rows)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if m.extract(list(subset), list(subset)).det() <= 0:
                return False
    return True


def cartan_matrices(n, values=(-1, -2, -3)):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    options = [(0, 0)] + list(itertools.product(values, repeat=2))
    for choice in itertools.product(options, repeat=len(pairs)):
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), (a, b) in zip(pairs, choice):
            rows[i][j], rows[j][i] = a, b
        yield rows


def random_cartan(n, rng):
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i][j], rows[j][i] = rng.choice([-1, -2, -3]), rng.choice([-1, -2, -3])
    return rows


@pytest.mark.parametrize(
    "name, label, det",
    [
        ("A2", "A2", 3), ("A3", "A3", 4), ("A4", "A4", 5), ("A5", "A5", 6),
        ("B3", "B3", 2), ("B4", "B4", 2), ("C3", "C3", 2), ("C4", "C4", 2),
        ("B2", "B2", 2), ("F4", "F4", 1), ("G2", "G2", 1),
    ],
)
def test_sympy_cartan_matrices_are_recognized(name, label, det):
    a = CartanMatrix.of(CartanType(name).cartan_matrix().tolist())
    report = is_finite_type(a)
    assert report.finite
    assert report.labels == [label]
    assert report.components[0].determinant == det


@pytest.mark.parametrize(
    "rows, label, det",
    [
        (with_branch(4, 1), "D4", 4),
        (with_branch(5, 2), "D5", 4),
        (with_branch(6, 3), "D6", 4),
        (with_branch(6, 2), "E6", 3),
        (with_branch(7, 2), "E7", 2),
        (with_branch(8, 2), "E8", 1),
    ],
)
def test_simply_laced_branches(rows, label, det):
    report = is_finite_type(CartanMatrix.of(rows))
    assert report.labels == [label]
    assert report.components[0].determinant == det
    assert int(Matrix(rows).det()) == det


def test_affine_and_disconnected_matrices():
    affine = is_finite_type(CartanMatrix.of([[2, -2], [-2, 2]]))
    assert not affine
    assert affine.labels == ["non-finite[1, 2]"]
    assert affine.components[0].determinant == 0
    triangle = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert not is_finite_type(CartanMatrix.of(triangle))
    split = is_finite_type(CartanMatrix.of([[2, 0, 0], [0, 2, -1], [0, -1, 2]]))
    assert split.finite
    assert split.labels == ["A1", "A2"]
    assert not is_finite_type(CartanMatrix.of(with_branch(9, 2)))


@pytest.mark.parametrize("rows", [[[2, 1], [-1, 2]], [[1, -1], [-1, 2]], [[2, -1]]])
def test_invalid_cartan_matrices(rows):
    with pytest.raises(ValueError):
        CartanMatrix.of(rows)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_finite_type_matches_principal_minors(n):
    for rows in cartan_matrices(n):
        assert is_finite_type(CartanMatrix.of(rows)).finite == finite_by_minors(rows), rows


@pytest.mark.parametrize("samples", [300, pytest.param(100_000, marks=pytest.mark.slow)])
def test_finite_type_matches_principal_minors_in_rank_four(samples):
    rng = random.Random(4)
    for _ in range(samples):
        rows = random_cartan(4, rng)
        assert is_finite_type(CartanMatrix.of(rows)).finite == finite_by_minors(rows), rows


def test_cartan_matrix_of_a_diagonal_braiding():
    a = cartan_from_q(QMatrix.of([[-1, -1], [1, -1]]))
    assert a == CartanMatrix.of([[2, -1], [-1, 2]])
    assert is_finite_type(a).labels == ["A2"]
    assert cartan_from_q(QMatrix.of([[-1, 1], [1, -1]])) == CartanMatrix.of([[2, 0], [0, 2]])
    assert cartan_from_q(QMatrix(((W, W2), (RootOfUnity.one(), W)))) == CartanMatrix.of([[2, -1], [-1, 2]])
    assert cartan_from_q(QMatrix(((W, RootOfUnity.one()), (RootOfUnity.one(), W)))).entries[0][1] == 0


def test_cartan_matrix_exponents_run_up_to_the_order():
    q6 = RootOfUnity.of(1, 6)
    a = cartan_from_q(QMatrix(((q6, q6), (q6, q6))))
    # q_ii^-4 = ζ6^2
    assert a == CartanMatrix.of([[2, -4], [-4, 2]])
    assert not is_finite_type(a)


def test_cartan_matrix_does_not_exist():
    assert cartan_from_q(QMatrix(((MINUS, W), (RootOfUnity.one(), MINUS)))) == NotCartanType(0, 1)
    assert cartan_from_q(QMatrix.of([[-1, 1], [1, 1]])) == InfiniteImmediately(1)


@pytest.mark.parametrize(
    "rows, max_degree, coefficients, total",
    [
        ([[MINUS]], 4, (1, 1, 0, 0, 0), 2),
        ([[W]], 4, (1, 1, 1, 0, 0), 3),
        ([[MINUS, RootOfUnity.one()], [RootOfUnity.one(), MINUS]], 3, (1, 2, 1, 0), 4),
        ([[MINUS, MINUS], [RootOfUnity.one(), MINUS]], 5, (1, 2, 2, 2, 1, 0), 8),
    ],
)
def test_hilbert_prefix(rows, max_degree, coefficients, total):
    prefix = nichols_hilbert_prefix(QMatrix(tuple(tuple(r) for r in rows)), max_degree=max_degree)
    assert prefix.coefficients == coefficients
    assert prefix.terminated
    assert prefix.total == total


def test_negative_braiding_of_rank_three_is_an_exterior_algebra():
    q = QMatrix.of([[-1, 1, -1], [1, -1, 1], [-1, 1, -1]])
    prefix = nichols_hilbert_prefix(q, options=HilbertOptions(max_degree=4, budget=100))
    assert prefix.coefficients == (1, 3, 3, 1, 0)
    assert prefix.total == 8


def test_trivial_braiding_does_not_terminate():
    prefix = nichols_hilbert_prefix(QMatrix.of([[1]]), max_degree=6)
    assert prefix.coefficients == (1,) * 7
    assert not prefix.terminated
    assert prefix.total is None


def test_hilbert_budget():
    q = QMatrix.of([[-1] * 3] * 3)
    with pytest.raises(BudgetExceededError):
        nichols_hilbert_prefix(q, max_degree=10, budget=100)
    with pytest.raises(BudgetExceededError):
        nichols_hilbert_prefix(q, options=HilbertOptions(max_degree=5, budget=200))
