# pkg/cyclo/linalg.py
"""
Exact linear algebra over Q(zeta_N): row reduction, kernels, eigenspaces of
finite-order matrices and joint eigenspaces of families of such matrices.

Eigenvalues are never found from characteristic polynomials. A matrix of
finite order m is diagonalizable with m-th roots of unity as eigenvalues, so
every candidate zeta_m**k is tried in turn.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .matrix import CycloMatrix, Vector
from .number import CycloNumber, RootOfUnity, _lcm

Subspace = List[Vector]


def _row_reduce(rows: List[List[CycloNumber]], ncols: int) -> Tuple[List[List[CycloNumber]], List[int]]:
    """Reduced row echelon form; returns the reduced rows and the pivot columns."""
    work = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == len(work):
            break
        pivot = next((i for i in range(r, len(work)) if not work[i][col].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][col].is_zero():
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def kernel(m: CycloMatrix) -> Subspace:
    """Basis of the null space; each basis vector has a 1 in one free column."""
    nrows, ncols = m.shape
    reduced, pivots = _row_reduce([list(row) for row in m.rows], ncols)
    free = [c for c in range(ncols) if c not in pivots]
    n = m.modulus
    basis: Subspace = []
    for f in free:
        vec = [CycloNumber.zero(n) for _ in range(ncols)]
        vec[f] = CycloNumber.one(n)
        for row_idx, p in enumerate(pivots):
            vec[p] = -reduced[row_idx][f]
        basis.append(tuple(vec))
    return basis


def rank(m: CycloMatrix) -> int:
    if not m.rows:
        return 0
    _, pivots = _row_reduce([list(row) for row in m.rows], m.shape[1])
    return len(pivots)


def rank_of_vectors(vectors: Sequence[Sequence[CycloNumber]]) -> int:
    if not vectors:
        return 0
    return rank(CycloMatrix.build([list(v) for v in vectors]))


def matrix_order(m: CycloMatrix, bound: int = 10_000) -> int:
    """Multiplicative order of a square matrix, searched up to ``bound``."""
    ident = CycloMatrix.identity(m.size, m.modulus)
    power = m
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power @ m
    raise ValueError(f"matrix has no finite order up to {bound}")


def eigenspaces(m: CycloMatrix, order: int) -> List[Tuple[RootOfUnity, Subspace]]:
    """Eigenspaces of a matrix with m**order == Id, eigenvalues in ascending exponent."""
    if not (m ** order).is_identity():
        raise ValueError(f"matrix is not of order dividing {order}")
    n = _lcm(m.modulus, order)
    m = m.lift(n)
    ident = CycloMatrix.identity(m.size, n)
    spaces = []
    total = 0
    for k in range(order):
        value = RootOfUnity.of(k, order)
        basis = kernel(m - ident.scale(value.to_cyclo(n)))
        if basis:
            spaces.append((value, basis))
            total += len(basis)
    if total != m.size:
        raise ValueError("eigenspaces do not span; matrix is not diagonalizable")
    return spaces


def _restrict_kernel(m: CycloMatrix, value: RootOfUnity, basis: Subspace) -> Subspace:
    """Vectors of span(basis) that m maps to value * themselves."""
    n = _lcm(m.modulus, value.den)
    shifted = m.lift(n) - CycloMatrix.identity(m.size, n).scale(value.to_cyclo(n))
    images = [shifted.apply(b) for b in basis]
    # columns of the system are the images of the basis vectors
    system = CycloMatrix.build([[images[j][i] for j in range(len(basis))] for i in range(m.size)], n)
    out: Subspace = []
    for coeffs in kernel(system):
        vec = [CycloNumber.zero(n) for _ in range(m.size)]
        for c, b in zip(coeffs, basis):
            if c.is_zero():
                continue
            vec = [acc + c * x for acc, x in zip(vec, b)]
        out.append(tuple(vec))
    return out


def _is_diagonal(m: CycloMatrix) -> bool:
    return all(i == j or e.is_zero() for i, row in enumerate(m.rows) for j, e in enumerate(row))


def _diagonal_roots(m: CycloMatrix) -> List[RootOfUnity] | None:
    """The diagonal entries as roots of unity, when m is diagonal."""
    if not _is_diagonal(m):
        return None
    roots = []
    for i in range(m.size):
        q = m.rows[i][i].as_root_of_unity()
        if q is None:
            raise ValueError("diagonal entry is not a root of unity; matrix has no finite order")
        roots.append(q)
    return roots


def _diagonal_eigenspaces(
    diagonals: Sequence[Sequence[RootOfUnity]], size: int
) -> List[Tuple[Subspace, Tuple[RootOfUnity, ...]]]:
    """Joint eigenspaces of diagonal matrices, ordered as the general refinement orders them."""
    ident = CycloMatrix.identity(size)
    groups: Dict[Tuple[RootOfUnity, ...], Subspace] = {}
    for j in range(size):
        values = tuple(d[j] for d in diagonals)
        groups.setdefault(values, []).append(ident.column(j))
    ordered = sorted(groups.items(), key=lambda item: tuple(Fraction(v.num, v.den) for v in item[0]))
    return [(basis, values) for values, basis in ordered]


def common_eigenspaces(
    mats: Sequence[CycloMatrix], size: int | None = None
) -> List[Tuple[Subspace, Tuple[RootOfUnity, ...]]]:
    """
    Joint eigenspaces of a family of finite-order matrices.

    Each entry is a basis of the joint eigenspace together with the tuple of
    eigenvalues, one per input matrix. The family does not have to commute;
    for a non-commuting family the joint eigenspaces simply span less than the
    whole space.
    """
    if size is None:
        if not mats:
            raise ValueError("size is required for an empty family")
        size = mats[0].size
    diagonals = [_diagonal_roots(m) for m in mats]
    if all(d is not None for d in diagonals):
        return _diagonal_eigenspaces(diagonals, size)
    ident = CycloMatrix.identity(size)
    parts: List[Tuple[Subspace, Tuple[RootOfUnity, ...]]] = [
        ([ident.column(j) for j in range(size)], ())
    ]
    for m in mats:
        order = matrix_order(m)
        refined = []
        for basis, values in parts:
            for k in range(order):
                value = RootOfUnity.of(k, order)
                piece = _restrict_kernel(m, value, basis)
                if piece:
                    refined.append((piece, values + (value,)))
        parts = refined
        if not parts:
            break
    return parts


def simultaneous_eigenbasis(
    mats: Sequence[CycloMatrix], size: int | None = None
) -> List[Tuple[Vector, Tuple[RootOfUnity, ...]]]:
    """
    Basis of common eigenvectors of a commuting family, with their eigenvalue tuples.

    An empty family needs ``size``; its eigenbasis is the standard basis.
    """
    # diagonal matrices commute with each other
    diagonal = [_is_diagonal(m) for m in mats]
    for i, a in enumerate(mats):
        for k in range(i + 1, len(mats)):
            if not (diagonal[i] and diagonal[k]) and not a.commutes_with(mats[k]):
                raise ValueError("matrices do not commute")
    if size is None:
        if not mats:
            raise ValueError("size is required for an empty family")
        size = mats[0].size
    out = []
    for basis, values in common_eigenspaces(mats, size):
        for vec in basis:
            out.append((vec, values))
    if len(out) != size:
        raise ValueError("family is not simultaneously diagonalizable")
    return out
