# pkg/cyclo/number.py
"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

A ``CycloNumber`` is a length-N vector of rationals ``c`` standing for
``sum c[i] * zeta_N**i``. Addition and multiplication work on that vector
directly (multiplication is a cyclic convolution); reduction modulo the N-th
cyclotomic polynomial only happens when two numbers are compared or a number
is inverted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Literal, Tuple, Union

from sympy import Poly, Symbol, cyclotomic_poly

Rational = Union[int, Fraction]

_Z = Symbol("z")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def phi_coefficients(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    coeffs = Poly(cyclotomic_poly(n, _Z), _Z).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(coeffs: Tuple[Fraction, ...], n: int) -> Tuple[Fraction, ...]:
    """Remainder of sum coeffs[i] z**i modulo Phi_n, padded to length deg(Phi_n)."""
    phi = phi_coefficients(n)
    deg = len(phi) - 1
    work = list(coeffs)
    # Phi_n is monic
    for top in range(len(work) - 1, deg - 1, -1):
        lead = work[top]
        if lead == 0:
            continue
        shift = top - deg
        for k, p in enumerate(phi):
            if p:
                work[shift + k] -= lead * p
    out = work[:deg] + [Fraction(0)] * (deg - len(work[:deg]))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class RootOfUnity:
    """zeta_den**num, stored as the reduced fraction num/den taken mod 1."""

    num: int
    den: int

    @classmethod
    def of(cls, k: int, n: int) -> "RootOfUnity":
        if n <= 0:
            raise ValueError(f"modulus must be positive, got {n}")
        frac = Fraction(k % n, n)
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(0, 1)

    @classmethod
    def minus_one(cls) -> "RootOfUnity":
        return cls(1, 2)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = _lcm(self.den, other.den)
        return RootOfUnity.of(self.num * (n // self.den) + other.num * (n // other.den), n)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return self * other.inverse()

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity.of(self.num * e, self.den)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.of(-self.num, self.den)

    @property
    def order(self) -> int:
        return self.den

    def is_one(self) -> bool:
        return self.num == 0

    def is_minus_one(self) -> bool:
        return self.den == 2

    def exponent_at(self, n: int) -> int:
        """k with self == zeta_n**k; n must be a multiple of the order."""
        if n % self.den:
            raise ValueError(f"zeta({self.den}) is not an {n}-th root of unity")
        return self.num * (n // self.den)

    def to_cyclo(self, n: int | None = None) -> "CycloNumber":
        n = n or self.den
        return CycloNumber.root(self.exponent_at(n), n)

    def render(self) -> str:
        return f"zeta({self.den})^{self.num}"

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        body = text.strip()
        if not body.startswith("zeta(") or ")^" not in body:
            raise ValueError(f"not a root of unity: {text!r}")
        n, k = body[len("zeta("):].split(")^", 1)
        return cls.of(int(k), int(n))

    def __str__(self) -> str:
        return self.render()


Op = Literal["mul", "div", "pow"]


def rou_arith(a: RootOfUnity, b: RootOfUnity | int, op: Op) -> RootOfUnity:
    """Exponent arithmetic on roots of unity; for ``pow`` the second operand is the exponent."""
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def order_of(q: RootOfUnity) -> int:
    return q.order


@dataclass(frozen=True, slots=True, eq=False)
class CycloNumber:
    modulus: int
    coeffs: Tuple[Fraction, ...]

    __hash__ = None  # equality is decided modulo Phi_N

    @classmethod
    def zero(cls, n: int = 1) -> "CycloNumber":
        return cls(n, (Fraction(0),) * n)

    @classmethod
    def from_rational(cls, value: Rational, n: int = 1) -> "CycloNumber":
        coeffs = [Fraction(0)] * n
        coeffs[0] = Fraction(value)
        return cls(n, tuple(coeffs))

    @classmethod
    def one(cls, n: int = 1) -> "CycloNumber":
        return cls.from_rational(1, n)

    @classmethod
    def root(cls, k: int, n: int) -> "CycloNumber":
        coeffs = [Fraction(0)] * n
        coeffs[k % n] = Fraction(1)
        return cls(n, tuple(coeffs))

    def lift(self, n: int) -> "CycloNumber":
        if n == self.modulus:
            return self
        if n % self.modulus:
            raise ValueError(f"cannot lift Q(zeta_{self.modulus}) into Q(zeta_{n})")
        step = n // self.modulus
        coeffs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CycloNumber(n, tuple(coeffs))

    def _common(self, other: "CycloNumber") -> Tuple["CycloNumber", "CycloNumber"]:
        if self.modulus == other.modulus:
            return self, other
        n = _lcm(self.modulus, other.modulus)
        return self.lift(n), other.lift(n)

    @staticmethod
    def _coerce(value: Union["CycloNumber", Rational]) -> "CycloNumber":
        if isinstance(value, CycloNumber):
            return value
        return CycloNumber.from_rational(value)

    def __add__(self, other: Union["CycloNumber", Rational]) -> "CycloNumber":
        a, b = self._common(self._coerce(other))
        return CycloNumber(a.modulus, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other: Union["CycloNumber", Rational]) -> "CycloNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "CycloNumber":
        return self._coerce(other) - self

    def __mul__(self, other: Union["CycloNumber", Rational]) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            factor = Fraction(other)
            return CycloNumber(self.modulus, tuple(x * factor for x in self.coeffs))
        a, b = self._common(other)
        n = a.modulus
        out = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    out[(i + j) % n] += x * y
        return CycloNumber(n, tuple(out))

    __rmul__ = __mul__

    def reduced(self) -> Tuple[Fraction, ...]:
        """Canonical coordinates in the power basis 1, zeta, ..., zeta**(phi(N)-1)."""
        return _reduce(self.coeffs, self.modulus)

    def is_zero(self) -> bool:
        if not any(self.coeffs):
            return True
        return not any(self.reduced())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return (self - other).is_zero()

    def conjugate(self) -> "CycloNumber":
        n = self.modulus
        coeffs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            coeffs[(-i) % n] = c
        return CycloNumber(n, tuple(coeffs))

    def inverse(self) -> "CycloNumber":
        """Field inverse; c * zeta**k is inverted directly, anything else solves a * x = 1."""
        n = self.modulus
        support = [i for i, c in enumerate(self.coeffs) if c]
        if len(support) == 1:
            k = support[0]
            coeffs = [Fraction(0)] * n
            coeffs[(-k) % n] = 1 / self.coeffs[k]
            return CycloNumber(n, tuple(coeffs))
        reduced = self.reduced()
        if not any(reduced):
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        solution = _inverse_coordinates(n, reduced)
        return CycloNumber(n, solution + (Fraction(0),) * (n - len(solution)))

    def __truediv__(self, other: Union["CycloNumber", Rational]) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __pow__(self, e: int) -> "CycloNumber":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNumber.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def as_rational(self) -> Fraction | None:
        red = self.reduced()
        if any(red[1:]):
            return None
        return red[0] if red else Fraction(0)

    def as_root_of_unity(self) -> RootOfUnity | None:
        """The root of unity equal to this number, if there is one."""
        support = [i for i, c in enumerate(self.coeffs) if c]
        if len(support) == 1 and abs(self.coeffs[support[0]]) == 1:
            k = support[0]
            if self.coeffs[k] == 1:
                return RootOfUnity.of(k, self.modulus)
            return RootOfUnity.of(2 * k + self.modulus, 2 * self.modulus)
        n = self.modulus if self.modulus % 2 == 0 else 2 * self.modulus
        for k in range(n):
            if self == CycloNumber.root(k, n):
                return RootOfUnity.of(k, n)
        return None

    def render(self) -> str:
        terms = []
        for i, c in enumerate(self.reduced()):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coef}zeta({self.modulus})^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloNumber({self.render()})"


@lru_cache(maxsize=4096)
def _inverse_coordinates(n: int, reduced: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    """Power-basis coordinates of the inverse of a nonzero reduced element of Q(zeta_n)."""
    deg = len(reduced)
    a = CycloNumber(n, reduced + (Fraction(0),) * (n - deg))
    # column k holds the coordinates of a * zeta**k
    columns = [(a * CycloNumber.root(k, n)).reduced() for k in range(deg)]
    system = [[columns[k][row] for k in range(deg)] for row in range(deg)]
    rhs = [Fraction(1)] + [Fraction(0)] * (deg - 1)
    return tuple(_solve_rational(system, rhs))


def _solve_rational(system: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination for a square nonsingular rational system."""
    size = len(rhs)
    rows = [list(r) + [rhs[i]] for i, r in enumerate(system)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular rational system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][size] for i in range(size)]
