# app/analysis/service/class_service.py
from math import gcd
from typing import List, Optional

from app.analysis.entity.reality import AbsoluteRealityCriteria, PowerWitness, RealityReport
from app.core.errors import PreconditionError
from app.core.logger import get_logger
from app.group.entity.element import GroupElement, Perm
from app.group.entity.group import ConjugacyClass, CycleType, FiniteGroup
from app.group.service.group_service import classes, cycle_type

logger = get_logger("ClassService")


def reality_report(group: FiniteGroup, s: GroupElement) -> RealityReport:
    """Brute-force search, ascending over the element list, for elements inverting s."""
    if not group.contains(s):
        raise PreconditionError(f"{s.render()} is not an element of {group.spec}")
    target = s.inverse()
    inverting: Optional[GroupElement] = None
    involution: Optional[GroupElement] = None
    for g in group.elements:
        if s.conjugate_by(g) != target:
            continue
        if inverting is None:
            inverting = g
        if (g * g).is_identity():
            involution = g
            break
    return RealityReport(
        is_real=inverting is not None,
        is_absolutely_real=involution is not None,
        inverting_witness=inverting,
        involution_witness=involution,
    )


def an_inverting_involution(j: int) -> Perm:
    """
    g_j = (1 j-1)(2 j-2)... on {1..j}, inverting τ_j = (1 2 ... j).

    For j = 2 the product is empty and the identity is returned, which
    inverts the involution τ_2.
    """
    if j < 2:
        raise PreconditionError(f"j must be at least 2, got {j}")
    pairs = [(i, j - i) for i in range(1, j) if i < j - i]
    return Perm.from_cycles(pairs, j)


def an_class_splits(t: CycleType) -> bool:
    """True iff the S_n-class of this even type breaks into two A_n-classes."""
    if not t.is_even:
        raise PreconditionError(f"type {t.render()} is odd; it does not lie in A_n")
    if t.degree < 2:
        return False
    return all(m == 0 or (j % 2 == 1 and m == 1) for j, m in enumerate(t.multiplicities, start=1))


def commutes_with_odd(p: Perm) -> bool:
    """Some odd permutation of S_n commutes with p (the class of p does not split in A_n)."""
    t = cycle_type(p)
    for j, m in enumerate(t.multiplicities, start=1):
        if j % 2 == 0 and m > 0:
            return True
        if m >= 2:
            return True
    return False


def absolute_reality_criterion(t: CycleType) -> AbsoluteRealityCriteria:
    """Sufficient conditions for an even permutation to be absolutely real in A_n."""
    count = sum(t.m(j) for j in range(3, t.degree + 1) if j % 4 in (0, 3))
    return AbsoluteRealityCriteria(fixed_points=t.m(1) >= 2, translation_parity=count % 2 == 0)


def power_witnesses(group: FiniteGroup, cls: ConjugacyClass) -> List[PowerWitness]:
    s = cls.base
    order = s.order()
    witnesses = []
    for j in range(2, order):
        if gcd(j, order) != 1:
            continue
        target = s.power(j)
        if target == s or not cls.contains(target):
            continue
        sigma = next(g for g in group.elements if s.conjugate_by(g) == target)
        square = s.power(j * j)
        witnesses.append(
            PowerWitness(
                j=j,
                sigma=sigma,
                sigma_order=sigma.order(),
                distinct3=square != s and square != target,
                square_returns=square == s,
            )
        )
    logger.debug(f"{len(witnesses)} power witnesses for {s.render()} in {group.spec}")
    return witnesses


def group_is_real(group: FiniteGroup) -> bool:
    return all(reality_report(group, c.base).is_real for c in classes(group))


def group_is_absolutely_real(group: FiniteGroup) -> bool:
    return all(reality_report(group, c.base).is_absolutely_real for c in classes(group))
