# app/group/entity/element.py
"""
Group elements.

Four concrete kinds share the ``GroupElement`` interface: permutations,
dihedral normal forms x^a*y^b, residues of a cyclic group and tuples for
direct products. All are frozen and hashable so they can key dictionaries.
"""

from __future__ import annotations

import re
from math import lcm
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


class GroupElement(ABC):
    @abstractmethod
    def __mul__(self, other: "GroupElement") -> "GroupElement":
        pass

    @abstractmethod
    def inverse(self) -> "GroupElement":
        pass

    @abstractmethod
    def identity(self) -> "GroupElement":
        pass

    @abstractmethod
    def render(self) -> str:
        pass

    def is_identity(self) -> bool:
        return self == self.identity()

    def power(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.identity()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, g: "GroupElement") -> "GroupElement":
        """g ▷ self = g self g^-1."""
        return g * self * g.inverse()

    def commutes_with(self, other: "GroupElement") -> bool:
        return self * other == other * self

    def order(self) -> int:
        k, current = 1, self
        while not current.is_identity():
            current = current * self
            k += 1
        return k

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, slots=True)
class Perm(GroupElement):
    """Bijection of {1..n}; ``images[i]`` is the 0-based image of i. (p*q)(i) = p(q(i))."""

    images: Tuple[int, ...]

    @classmethod
    def checked(cls, images: Sequence[int]) -> "Perm":
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {tuple(images)}")
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        for cycle in cycles:
            for idx, point in enumerate(cycle):
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} outside 1..{degree}")
                images[point - 1] = cycle[(idx + 1) % len(cycle)] - 1
        return cls.checked(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Perm":
        """Disjoint-cycle notation, e.g. "(1 2)(3 4 5 6)"; "()" or "e" is the identity."""
        body = text.strip()
        if body in ("", "e", "()", "id"):
            return cls(tuple(range(degree)))
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", body):
            raise ValueError(f"malformed permutation {text!r}")
        cycles = [
            [int(p) for p in re.split(r"[\s,]+", c.strip())]
            for c in re.findall(r"\(([^)]*)\)", body)
        ]
        points = [p for c in cycles for p in c]
        if len(points) != len(set(points)):
            raise ValueError(f"cycles of {text!r} are not disjoint")
        return cls.from_cycles(cycles, degree)

    def __mul__(self, other: "Perm") -> "Perm":
        mine = self.images
        return Perm(tuple(mine[i] for i in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inv[image] = i
        return Perm(tuple(inv))

    def identity(self) -> "Perm":
        return Perm(tuple(range(len(self.images))))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(p + 1 for p in cycle))
        return out

    def sign(self) -> int:
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def render(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


@dataclass(frozen=True, slots=True)
class Dihedral(GroupElement):
    """x^a * y^b in D_n, with x^2 = e = y^n and xyx = y^-1."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.a not in (0, 1) or not 0 <= self.b < self.n:
            raise ValueError(f"not a normal form in D_{self.n}: x^{self.a}*y^{self.b}")

    @classmethod
    def parse(cls, text: str, n: int) -> "Dihedral":
        """Accepts "e", "x", "y^3", "x*y^2", "xy^2", "x^1*y^0"."""
        body = text.replace(" ", "")
        if body in ("e", "1", "id"):
            return cls(0, 0, n)
        match = re.fullmatch(r"(?:x(?:\^(\d+))?)?\*?(?:y(?:\^(-?\d+))?)?", body)
        if not body or body == "*" or not match:
            raise ValueError(f"malformed dihedral element {text!r}")
        has_x = body.startswith("x")
        has_y = "y" in body
        a = (int(match.group(1)) if match.group(1) is not None else 1) if has_x else 0
        b = (int(match.group(2)) if match.group(2) is not None else 1) if has_y else 0
        return cls(a % 2, b % n, n)

    def __mul__(self, other: "Dihedral") -> "Dihedral":
        sign = -1 if other.a else 1
        return Dihedral((self.a + other.a) % 2, (sign * self.b + other.b) % self.n, self.n)

    def inverse(self) -> "Dihedral":
        if self.a:
            return self
        return Dihedral(0, (-self.b) % self.n, self.n)

    def identity(self) -> "Dihedral":
        return Dihedral(0, 0, self.n)

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0

    def render(self) -> str:
        return f"x^{self.a}*y^{self.b}"


@dataclass(frozen=True, slots=True)
class Cyclic(GroupElement):
    """Residue r in Z_n, written additively as the exponent of a generator."""

    r: int
    n: int

    def __post_init__(self):
        if not 0 <= self.r < self.n:
            raise ValueError(f"residue {self.r} outside Z_{self.n}")

    def __mul__(self, other: "Cyclic") -> "Cyclic":
        return Cyclic((self.r + other.r) % self.n, self.n)

    def inverse(self) -> "Cyclic":
        return Cyclic((-self.r) % self.n, self.n)

    def identity(self) -> "Cyclic":
        return Cyclic(0, self.n)

    def is_identity(self) -> bool:
        return self.r == 0

    def render(self) -> str:
        return str(self.r)


@dataclass(frozen=True, slots=True)
class Product(GroupElement):
    parts: Tuple[GroupElement, ...]

    def __mul__(self, other: "Product") -> "Product":
        return Product(tuple(p * q for p, q in zip(self.parts, other.parts)))

    def inverse(self) -> "Product":
        return Product(tuple(p.inverse() for p in self.parts))

    def identity(self) -> "Product":
        return Product(tuple(p.identity() for p in self.parts))

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self.parts)

    def render(self) -> str:
        return " | ".join(p.render() for p in self.parts)
