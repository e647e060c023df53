# app/reps/service/rep_service.py
import itertools
from fractions import Fraction
from math import lcm, prod
from typing import Dict, List, Sequence

from app.core.errors import AlgebraError, PreconditionError, SpecError, UnsupportedError
from app.core.logger import get_logger
from app.group.entity.element import GroupElement
from app.group.entity.group import Subgroup
from app.group.service.group_service import cyclic_decomposition
from app.reps.entity.irrep import Index2Data, Irrep
from pkg.cyclo import CycloMatrix, CycloNumber, RootOfUnity, common_eigenspaces

logger = get_logger("RepService")

# representations of larger domains are checked on generators only
EXHAUSTIVE_CHECK_ORDER = 64


def _check_multiplicative(rep: Irrep) -> None:
    elements = rep.domain.elements
    pairs = (
        itertools.product(elements, elements)
        if len(elements) <= EXHAUSTIVE_CHECK_ORDER
        else itertools.product(elements, rep.domain.generators)
    )
    for g, h in pairs:
        if rep(g) @ rep(h) != rep(g * h):
            raise AlgebraError(f"{rep.label} is not multiplicative at ({g.render()}, {h.render()})")


def norm_square(rep: Irrep) -> Fraction:
    """Σ_g |χ(g)|^2 / |H|, which is 1 exactly for irreducible representations."""
    total = CycloNumber.zero(rep.modulus)
    for g in rep.domain.elements:
        chi = rep.character(g)
        total = total + chi * chi.conjugate()
    value = total.as_rational()
    if value is None:
        raise AlgebraError(f"character norm of {rep.label} is not rational")
    return value / rep.domain.order


def is_irreducible(rep: Irrep) -> bool:
    return norm_square(rep) == 1


def _character_label(orders: Sequence[int], exponents: Sequence[int]) -> str:
    if not orders:
        return "eps"
    if all(n == 2 for n in orders):
        return "⊗".join("sgn" if l else "eps" for l in exponents)
    if len(orders) == 1:
        return f"chi:{exponents[0]}"
    return "chi:" + ",".join(str(l) for l in exponents)


def abelian_irreps(h: Subgroup) -> List[Irrep]:
    """All characters of an abelian subgroup, indexed by exponents along a cyclic decomposition."""
    if not h.is_abelian:
        raise PreconditionError(f"{h.label} is not abelian")
    factors = list(h.generators) if h.order > 1 else []
    if h.order > 1 and not factors:
        factors = cyclic_decomposition(h.elements, h.base) or []
    orders = [f.order() for f in factors]
    if prod(orders) != h.order:
        raise UnsupportedError(f"no cyclic decomposition found for {h.label}")
    modulus = lcm(*orders) if orders else 1
    coordinates: Dict[GroupElement, tuple] = {}
    identity = h.elements[0].identity()
    for exps in itertools.product(*(range(n) for n in orders)):
        g = identity
        for f, e in zip(factors, exps):
            g = g * f.power(e)
        coordinates[g] = exps
    if len(coordinates) != h.order:
        raise AlgebraError(f"cyclic factors of {h.label} do not generate it freely")
    irreps = []
    for ls in itertools.product(*(range(n) for n in orders)):
        images = {}
        for g, exps in coordinates.items():
            k = sum(l * e * (modulus // n) for l, e, n in zip(ls, exps, orders))
            images[g] = CycloMatrix.scalar(RootOfUnity.of(k, modulus), 1, modulus)
        rep = Irrep(h, 1, _character_label(orders, ls), images)
        _check_multiplicative(rep)
        irreps.append(rep)
    return irreps


def builtin_irreps(h: Subgroup) -> List[Irrep]:
    """
    Irreps of a dihedral subgroup labeled D<k> with generators a (involution), b (order k).

    rho:1..rho:4 are the characters with (ρ(a), ρ(b)) = (1, 1), (-1, 1), (1, -1),
    (-1, -1), only the first two when k is odd. The remaining labels are the
    2-dimensional ρ(a) = [[0, 1], [1, 0]], ρ(b) = diag(ζ_k^h, ζ_k^-h).
    """
    if h.is_abelian or not h.is_dihedral or len(h.generators) != 2:
        raise UnsupportedError(f"no built-in representation table for {h.label}")
    a, b = h.generators
    k = b.order()
    modulus = lcm(2, k)
    words: Dict[GroupElement, tuple] = {}
    for e in (0, 1):
        for f in range(k):
            words[a.power(e) * b.power(f)] = (e, f)
    if len(words) != h.order:
        raise AlgebraError(f"generators of {h.label} do not produce every element")

    signs = [(1, 1), (-1, 1), (1, -1), (-1, -1)] if k % 2 == 0 else [(1, 1), (-1, 1)]
    images_of_generators = [
        (CycloMatrix.build([[sa]], modulus), CycloMatrix.build([[sb]], modulus)) for sa, sb in signs
    ]
    flip = CycloMatrix.build([[0, 1], [1, 0]], modulus)
    for step in range(1, (k + 1) // 2):
        rot = CycloMatrix.diagonal([CycloNumber.root(step, k), CycloNumber.root(-step, k)], modulus)
        images_of_generators.append((flip, rot))

    irreps = []
    for idx, (ra, rb) in enumerate(images_of_generators, start=1):
        powers_b = [CycloMatrix.identity(ra.size, modulus)]
        for _ in range(1, k):
            powers_b.append(powers_b[-1] @ rb)
        images = {g: (ra if e else CycloMatrix.identity(ra.size, modulus)) @ powers_b[f] for g, (e, f) in words.items()}
        rep = Irrep(h, ra.size, f"rho:{idx}", images)
        _check_multiplicative(rep)
        if not is_irreducible(rep):
            raise AlgebraError(f"{rep.label} of {h.label} is reducible")
        irreps.append(rep)
    return irreps


def supported_irreps(h: Subgroup) -> List[Irrep]:
    if h.is_abelian:
        return abelian_irreps(h)
    if h.is_dihedral:
        return builtin_irreps(h)
    raise UnsupportedError(f"centralizer {h.label} has no supported representation table")


def normalize_label(text: str) -> str:
    body = text.strip().replace(" ", "").replace("ε", "eps").replace("(x)", "⊗").replace("*", "⊗")
    if body.startswith("chi_"):
        body = "chi:" + body[len("chi_"):]
    if body.startswith("rho_"):
        body = "rho:" + body[len("rho_"):]
    return body


def parse_rep(irreps: Sequence[Irrep], text: str) -> Irrep:
    wanted = normalize_label(text)
    for rep in irreps:
        if rep.label == wanted:
            return rep
    available = ", ".join(r.label for r in irreps)
    raise SpecError(f"unknown representation {text!r}; available: {available}")


def schur_scalar(rep: Irrep, s: GroupElement) -> RootOfUnity:
    """q_ss with ρ(s) = q_ss Id."""
    value = rep(s).scalar_value()
    if value is None:
        raise AlgebraError(f"{s.render()} does not act by a scalar in {rep.label}")
    q = value.as_root_of_unity()
    if q is None:
        raise AlgebraError(f"{rep.label}({s.render()}) is a scalar but not a root of unity")
    return q


def conjugate_rep(rep: Irrep, g: GroupElement) -> Irrep:
    """h ↦ ρ(g h g^-1)."""
    domain = rep.domain
    if not all(domain.contains(h.conjugate_by(g)) for h in domain.generators or domain.elements):
        raise PreconditionError(f"{g.render()} does not normalize {domain.label}")
    images = {h: rep(h.conjugate_by(g)) for h in domain.elements}
    return Irrep(domain, rep.degree, f"{rep.label}^{g.render()}", images)


def characters_equal(a: Irrep, b: Irrep) -> bool:
    if a.domain.order != b.domain.order:
        return False
    return all(a.character(g) == b.character(g) for g in a.domain.elements)


def restrict(rep: Irrep, h: Subgroup) -> Irrep:
    if not all(rep.domain.contains(g) for g in h.elements):
        raise PreconditionError(f"{h.label} is not contained in the domain of {rep.label}")
    return Irrep(h, rep.degree, f"Res {rep.label}", {g: rep(g) for g in h.elements})


def index2_decompose(eta: Irrep, small: Subgroup) -> Index2Data:
    big = eta.domain
    if big.order != 2 * small.order or not all(big.contains(g) for g in small.elements):
        raise PreconditionError(f"{small.label} is not of index 2 in {big.label}")
    outside = next(g for g in big.elements if not small.contains(g))
    twisted_equal = all(eta.character(g).is_zero() for g in big.elements if not small.contains(g))
    res = restrict(eta, small)
    if not twisted_equal:
        if not is_irreducible(res):
            raise AlgebraError(f"restriction of {eta.label} should be irreducible")
        return Index2Data(big, small, eta, "i", (res,))

    if not small.is_abelian:
        raise UnsupportedError(f"splitting a restriction to the nonabelian {small.label} is not supported")
    elements = list(small.elements)
    mats = [res(g) for g in elements]
    parts = []
    for basis, values in common_eigenspaces(mats, eta.degree):
        for _ in basis:
            images = {g: CycloMatrix.scalar(v, 1, eta.modulus) for g, v in zip(elements, values)}
            parts.append(Irrep(small, 1, "", images))
    if len(parts) != 2:
        raise AlgebraError(f"restriction of {eta.label} does not split into two characters")
    rho, rho_bar = parts
    if not characters_equal(conjugate_rep(rho, outside), rho_bar):
        raise AlgebraError(f"summands of Res {eta.label} are not conjugate")
    labels = {r.label: r for r in abelian_irreps(small)}
    for part in parts:
        part.label = next(
            (label for label, cand in labels.items() if characters_equal(cand, part)), "unlabeled"
        )
    return Index2Data(big, small, eta, "ii", (rho, rho_bar))
