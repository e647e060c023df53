# pkg/cyclo/matrix.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .number import CycloNumber, Rational, RootOfUnity, _lcm

Vector = Tuple[CycloNumber, ...]


def vector(entries: Iterable[CycloNumber | Rational], modulus: int = 1) -> Vector:
    out = []
    for e in entries:
        out.append(e if isinstance(e, CycloNumber) else CycloNumber.from_rational(e, modulus))
    return tuple(out)


def vector_is_zero(v: Sequence[CycloNumber]) -> bool:
    return all(x.is_zero() for x in v)


def vectors_equal(u: Sequence[CycloNumber], v: Sequence[CycloNumber]) -> bool:
    return len(u) == len(v) and all(x == y for x, y in zip(u, v))


def scale_vector(c: CycloNumber, v: Sequence[CycloNumber]) -> Vector:
    return tuple(c * x for x in v)


def render_vector(v: Sequence[CycloNumber]) -> str:
    return "(" + ", ".join(x.render() for x in v) + ")"


@dataclass(frozen=True, slots=True, eq=False)
class CycloMatrix:
    """Row-major matrix over Q(zeta_modulus)."""

    modulus: int
    rows: Tuple[Tuple[CycloNumber, ...], ...]

    __hash__ = None

    @classmethod
    def build(cls, rows: Sequence[Sequence[CycloNumber | Rational]], modulus: int = 1) -> "CycloMatrix":
        n = modulus
        for row in rows:
            for e in row:
                if isinstance(e, CycloNumber):
                    n = _lcm(n, e.modulus)
        lifted = tuple(
            tuple(
                (e if isinstance(e, CycloNumber) else CycloNumber.from_rational(e, n)).lift(n)
                for e in row
            )
            for row in rows
        )
        return cls(n, lifted)

    @classmethod
    def identity(cls, size: int, modulus: int = 1) -> "CycloMatrix":
        return cls.build([[1 if i == j else 0 for j in range(size)] for i in range(size)], modulus)

    @classmethod
    def scalar(cls, q: RootOfUnity, size: int = 1, modulus: int | None = None) -> "CycloMatrix":
        n = _lcm(modulus or 1, q.den)
        value = q.to_cyclo(n)
        zero = CycloNumber.zero(n)
        return cls(n, tuple(tuple(value if i == j else zero for j in range(size)) for i in range(size)))

    @classmethod
    def diagonal(cls, entries: Sequence[CycloNumber | Rational], modulus: int = 1) -> "CycloMatrix":
        size = len(entries)
        return cls.build([[entries[i] if i == j else 0 for j in range(size)] for i in range(size)], modulus)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def size(self) -> int:
        return len(self.rows)

    def lift(self, n: int) -> "CycloMatrix":
        if n == self.modulus:
            return self
        return CycloMatrix(n, tuple(tuple(e.lift(n) for e in row) for row in self.rows))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        n = _lcm(self.modulus, other.modulus)
        a, b = self.lift(n), other.lift(n)
        inner = a.shape[1]
        if inner != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        cols = b.shape[1]
        out = []
        for row in a.rows:
            new_row = []
            for j in range(cols):
                acc = CycloNumber.zero(n)
                for k in range(inner):
                    if any(row[k].coeffs):
                        acc = acc + row[k] * b.rows[k][j]
                new_row.append(acc)
            out.append(tuple(new_row))
        return CycloMatrix(n, tuple(out))

    def __add__(self, other: "CycloMatrix") -> "CycloMatrix":
        n = _lcm(self.modulus, other.modulus)
        a, b = self.lift(n), other.lift(n)
        return CycloMatrix(n, tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a.rows, b.rows)))

    def __sub__(self, other: "CycloMatrix") -> "CycloMatrix":
        return self + other.scale(CycloNumber.from_rational(-1))

    def __neg__(self) -> "CycloMatrix":
        return self.scale(CycloNumber.from_rational(-1))

    def scale(self, c: CycloNumber) -> "CycloMatrix":
        n = _lcm(self.modulus, c.modulus)
        a = self.lift(n)
        return CycloMatrix(n, tuple(tuple(c * x for x in row) for row in a.rows))

    def apply(self, v: Sequence[CycloNumber]) -> Vector:
        out = []
        for row in self.rows:
            acc = CycloNumber.zero(self.modulus)
            for x, y in zip(row, v):
                acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int) -> "CycloMatrix":
        if e < 0:
            raise ValueError("negative matrix powers are not supported")
        result = CycloMatrix.identity(self.size, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def is_identity(self) -> bool:
        return self == CycloMatrix.identity(self.size)

    def commutes_with(self, other: "CycloMatrix") -> bool:
        return (self @ other) == (other @ self)

    def trace(self) -> CycloNumber:
        acc = CycloNumber.zero(self.modulus)
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def scalar_value(self) -> CycloNumber | None:
        """c when the matrix equals c * Id, else None."""
        c = self.rows[0][0]
        if self == CycloMatrix.identity(self.size, self.modulus).scale(c):
            return c
        return None

    def render(self) -> list[list[str]]:
        return [[e.render() for e in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"CycloMatrix({self.render()})"
