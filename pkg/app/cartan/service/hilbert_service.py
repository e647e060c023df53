# app/cartan/service/hilbert_service.py
"""
Graded dimensions of the Nichols algebra of a diagonal braiding.

dim B^d is the rank of the quantum symmetrizer Ω_d on V^{⊗d}, built
recursively as Ω_d = (Ω_{d-1} ⊗ id) ∘ (id + c_{d-1} + c_{d-1}c_{d-2} + ... + c_{d-1}⋯c_1).
A diagonal braiding only permutes letters, so Ω_d preserves the multiset of
letters of a word and the rank is summed over multisets.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from math import lcm
from typing import Dict, List, Optional, Tuple

from app.braiding.entity.module import QMatrix
from app.cartan.entity.cartan import HilbertPrefix
from app.core.config import settings
from app.core.errors import BudgetExceededError
from app.core.logger import get_logger
from pkg.cyclo import CycloMatrix, CycloNumber, RootOfUnity, rank

logger = get_logger("HilbertService")

Word = Tuple[int, ...]
Image = Dict[Word, CycloNumber]


@dataclass
class HilbertOptions:
    max_degree: int = settings.MAX_DEGREE
    budget: int = settings.BUDGET


class _Symmetrizer:
    def __init__(self, q: QMatrix):
        self.q = q
        self.modulus = lcm(*(e.order for row in q.entries for e in row)) if q.size else 1
        self._images: Dict[Word, Image] = {}

    def _shuffle_terms(self, word: Word) -> List[Tuple[RootOfUnity, Word]]:
        """c_{d-1}c_{d-2}⋯c_k(word) for every k: letter k is carried past every later letter to the end."""
        terms = []
        for k, letter in enumerate(word):
            coeff = RootOfUnity.one()
            for later in word[k + 1:]:
                coeff = coeff * self.q.q(letter, later)
            terms.append((coeff, word[:k] + word[k + 1:] + (letter,)))
        return terms

    def image(self, word: Word) -> Image:
        cached = self._images.get(word)
        if cached is not None:
            return cached
        n = self.modulus
        if len(word) <= 1:
            result = {word: CycloNumber.one(n)}
        else:
            acc: Image = {}
            for coeff, moved in self._shuffle_terms(word):
                scalar = coeff.to_cyclo(n)
                for prefix, c in self.image(moved[:-1]).items():
                    key = prefix + (moved[-1],)
                    term = scalar * c
                    acc[key] = acc[key] + term if key in acc else term
            result = {k: v for k, v in acc.items() if not v.is_zero()}
        self._images[word] = result
        return result

    def degree_dimension(self, d: int) -> int:
        classes: Dict[Word, List[Word]] = defaultdict(list)
        for word in product(range(self.q.size), repeat=d):
            classes[tuple(sorted(word))].append(word)
        total = 0
        zero = CycloNumber.zero(self.modulus)
        for words in classes.values():
            column = {w: k for k, w in enumerate(words)}
            rows = []
            for w in words:
                row = [zero] * len(words)
                for target, c in self.image(w).items():
                    row[column[target]] = c
                rows.append(row)
            total += rank(CycloMatrix.build(rows, self.modulus))
        return total


def nichols_hilbert_prefix(
    q: QMatrix,
    max_degree: Optional[int] = None,
    budget: Optional[int] = None,
    options: Optional[HilbertOptions] = None,
) -> HilbertPrefix:
    """dim B^0 .. dim B^cap; explicit keyword arguments win over ``options``."""
    options = options or HilbertOptions()
    cap = max_degree if max_degree is not None else options.max_degree
    limit = budget if budget is not None else options.budget
    theta = q.size
    if theta ** cap > limit:
        raise BudgetExceededError(f"{theta}^{cap} = {theta ** cap} words exceed the symmetrizer budget {limit}")
    sym = _Symmetrizer(q)
    coefficients = [1]
    for d in range(1, cap + 1):
        if coefficients[-1] == 0:
            coefficients.append(0)
            continue
        coefficients.append(theta if d == 1 else sym.degree_dimension(d))
    logger.debug(f"Hilbert prefix up to degree {cap}: {coefficients}")
    return HilbertPrefix(cap, tuple(coefficients))
