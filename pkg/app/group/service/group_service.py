# app/group/service/group_service.py
import re
from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.errors import BudgetExceededError, PreconditionError, SpecError
from app.core.logger import get_logger
from app.group.entity.element import GroupElement, Perm
from app.group.entity.group import ConjugacyClass, CycleType, FiniteGroup, Subgroup

logger = get_logger("GroupService")

_SIMPLE_SPEC = re.compile(r"(Sn|An|Dn|Zn):(\d+)")


def _split_product(spec: str) -> Optional[List[str]]:
    """Split "(G1)x(G2)x..." at top-level 'x'; None when spec is not a product."""
    if not spec.startswith("("):
        return None
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(spec):
        ch = spec[i]
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in group spec {spec!r}")
            if depth == 0:
                parts.append(spec[start:i])
                rest = spec[i + 1:]
                if rest and not rest.startswith("x("):
                    raise SpecError(f"malformed product group spec {spec!r}")
                i += 1
                continue
        i += 1
    if depth != 0 or len(parts) < 2:
        raise SpecError(f"malformed product group spec {spec!r}")
    return parts


def _build_group(spec: str) -> FiniteGroup:
    factors = _split_product(spec)
    if factors is not None:
        return FiniteGroup("Product", factors=tuple(_build_group(f.strip()) for f in factors))
    match = _SIMPLE_SPEC.fullmatch(spec)
    if not match:
        raise SpecError(f"malformed group spec {spec!r}; expected An:<n>, Sn:<n>, Dn:<n>, Zn:<n> or (G1)x(G2)")
    kind, n = match.group(1), int(match.group(2))
    if n < 1 or (kind == "Dn" and n < 2):
        raise SpecError(f"group parameter out of range in {spec!r}")
    return FiniteGroup(kind, n=n)


@lru_cache(maxsize=64)
def _parse_group_cached(spec: str, size_bound: int) -> FiniteGroup:
    group = _build_group(spec)
    if group.order > size_bound:
        raise BudgetExceededError(f"{spec} has order {group.order}, above the enumeration bound {size_bound}")
    group.elements
    logger.debug(f"Enumerated {spec}: {group.order} elements")
    return group


def parse_group(spec: str, size_bound: Optional[int] = None) -> FiniteGroup:
    """Parse a group spec and enumerate its elements."""
    bound = size_bound if size_bound is not None else settings.GROUP_SIZE_BOUND
    return _parse_group_cached(spec.replace(" ", ""), bound)


def parse_element(group: FiniteGroup, text: str) -> GroupElement:
    try:
        return group.parse_element(text)
    except ValueError as e:
        raise SpecError(str(e)) from e


def _require_member(group: FiniteGroup, g: GroupElement) -> None:
    if not group.contains(g):
        raise SpecError(f"{g.render()} is not an element of {group.spec}")


def element_order(group: FiniteGroup, g: GroupElement) -> int:
    _require_member(group, g)
    return g.order()


def cycle_type(p: Perm) -> CycleType:
    return CycleType.from_perm(p)


@lru_cache(maxsize=512)
def conjugacy_class(group: FiniteGroup, s: GroupElement) -> ConjugacyClass:
    """Breadth-first orbit of s under the group generators, recording g_i with g_i ▷ s = t_i."""
    _require_member(group, s)
    identity = group.identity
    reps: Dict[GroupElement, GroupElement] = {s: identity}
    order = [s]
    queue = deque([s])
    generators = group.generators
    while queue:
        t = queue.popleft()
        g = reps[t]
        for gen in generators:
            image = t.conjugate_by(gen)
            if image not in reps:
                reps[image] = gen * g
                order.append(image)
                queue.append(image)
    return ConjugacyClass(group, s, tuple(order), tuple(reps[t] for t in order))


def class_with_numeration(
    group: FiniteGroup, s: GroupElement, representatives: Sequence[GroupElement]
) -> ConjugacyClass:
    """The class of s numbered by the given g_i (t_i = g_i ▷ s); g_1 must be the identity."""
    _require_member(group, s)
    reps = tuple(representatives)
    if not reps or not reps[0].is_identity():
        raise PreconditionError("the first coset representative must be the identity")
    elements = tuple(s.conjugate_by(g) for g in reps)
    full = conjugacy_class(group, s)
    if len(set(elements)) != len(elements) or set(elements) != set(full.elements):
        raise PreconditionError(f"representatives do not number the class of {s.render()} bijectively")
    return ConjugacyClass(group, s, elements, reps)


def subgroup_closure(generators: Sequence[GroupElement], identity: GroupElement) -> List[GroupElement]:
    """Elements of ⟨generators⟩ in breadth-first discovery order."""
    seen = {identity}
    out = [identity]
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for gen in generators:
            nxt = h * gen
            if nxt not in seen:
                seen.add(nxt)
                out.append(nxt)
                queue.append(nxt)
    return out


def _greedy_generators(elements: Sequence[GroupElement]) -> List[GroupElement]:
    identity = elements[0].identity()
    gens: List[GroupElement] = []
    span = {identity}
    for g in elements:
        if g not in span:
            gens.append(g)
            span = set(subgroup_closure(gens, identity))
    return gens


def cyclic_decomposition(
    elements: Sequence[GroupElement], first: Optional[GroupElement] = None
) -> Optional[List[GroupElement]]:
    """
    Greedy splitting of an abelian group into cyclic factors.

    At each step the element of largest order whose cyclic group meets the
    product so far trivially is taken, ties broken by position in ``elements``.
    When ``first`` has maximal order the first factor is ⟨first⟩, generated by
    its earliest generator in ``elements``.
    Returns None when the greedy product does not exhaust the group.
    """
    identity = elements[0].identity()
    orders = {g: g.order() for g in elements}
    chosen: List[GroupElement] = []
    span = {identity}
    while len(span) < len(elements):
        best = None
        if not chosen and first is not None and orders[first] == max(orders.values()):
            cyclic = {first.power(k) for k in range(orders[first])}
            best = next(g for g in elements if g in cyclic and orders[g] == orders[first])
        else:
            for g in elements:
                if g in span:
                    continue
                cyclic = {g.power(k) for k in range(orders[g])}
                if cyclic & span != {identity}:
                    continue
                if best is None or orders[g] > orders[best]:
                    best = g
        if best is None:
            return None
        chosen.append(best)
        span = {a * best.power(k) for a in span for k in range(orders[best])}
    return chosen


def _dihedral_generators(elements: Sequence[GroupElement]) -> Optional[Tuple[GroupElement, GroupElement]]:
    """(a, b) with |b| = |H|/2, a an involution outside ⟨b⟩ and aba = b^-1."""
    half = len(elements) // 2
    if len(elements) % 2 or half < 3:
        return None
    b = next((g for g in elements if g.order() == half), None)
    if b is None:
        return None
    rotations = {b.power(k) for k in range(half)}
    b_inv = b.inverse()
    for a in elements:
        if a in rotations or a.is_identity() or not (a * a).is_identity():
            continue
        if a * b * a == b_inv:
            return a, b
    return None


def describe_subgroup(
    group: FiniteGroup, elements: Sequence[GroupElement], base: Optional[GroupElement] = None
) -> Subgroup:
    """Attach a structure label: Z<k>, Z<k1>xZ<k2>..., D<m>, or unknown(order=k)."""
    elements = tuple(elements)
    gens = _greedy_generators(elements)
    abelian = all(a.commutes_with(b) for a in gens for b in gens)
    order = len(elements)
    if abelian:
        factors = cyclic_decomposition(elements, base) if order > 1 else []
        if factors is None:
            label = f"unknown(order={order})"
            factors = []
        elif not factors:
            label = "Z1"
        else:
            label = "x".join(f"Z{g.order()}" for g in factors)
        return Subgroup(group, elements, label, True, tuple(factors), base)
    dihedral = _dihedral_generators(elements)
    if dihedral is not None:
        return Subgroup(group, elements, f"D{order // 2}", False, dihedral, base)
    return Subgroup(group, elements, f"unknown(order={order})", False, tuple(gens), base)


@lru_cache(maxsize=512)
def centralizer(group: FiniteGroup, s: GroupElement) -> Subgroup:
    _require_member(group, s)
    elements = [g for g in group.elements if g.commutes_with(s)]
    return describe_subgroup(group, elements, s)


def classes(group: FiniteGroup) -> List[ConjugacyClass]:
    """All classes, ordered by element order then by the enumeration rank of the base point."""
    seen = set()
    found: List[ConjugacyClass] = []
    for g in group.elements:
        if g in seen:
            continue
        cls = conjugacy_class(group, g)
        seen.update(cls.elements)
        found.append(cls)
    found.sort(key=lambda c: (c.base.order(), group.rank(c.base)))
    if sum(c.size for c in found) != group.order:
        raise SpecError(f"class sizes of {group.spec} do not add up to {group.order}")
    return found


def are_conjugate(group: FiniteGroup, a: GroupElement, b: GroupElement) -> bool:
    return conjugacy_class(group, a).contains(b)


def split_partner(group: FiniteGroup, p: Perm) -> Perm:
    """(1 2) p (1 2), which lies in the other A_n-class when the S_n-class of p splits."""
    if group.kind != "An":
        raise PreconditionError(f"split_partner needs an alternating group, got {group.spec}")
    _require_member(group, p)
    swap = Perm.from_cycles([(1, 2)], group.n)
    partner = p.conjugate_by(swap)
    if are_conjugate(group, p, partner):
        raise PreconditionError(f"the S_{group.n}-class of {p.render()} does not split in {group.spec}")
    return partner
