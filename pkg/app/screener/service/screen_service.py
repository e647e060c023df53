# app/screener/service/screen_service.py
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

from app.analysis.entity.reality import PowerWitness, RealityReport
from app.analysis.service.class_service import power_witnesses, reality_report
from app.braiding.entity.module import QMatrix, YDModule
from app.braiding.service.braiding_service import (
    abelian_subracks,
    build_yd_module,
    check_braid_equation,
    check_grading,
    diagonal_subspace,
    full_diagonal_form,
    is_flip,
)
from app.cartan.entity.cartan import CartanMatrix, InfiniteImmediately
from app.cartan.service.cartan_service import cartan_from_q, is_finite_type
from app.cartan.service.hilbert_service import HilbertOptions, nichols_hilbert_prefix
from app.core.config import settings
from app.core.errors import AlgebraError, BudgetExceededError, SpecError
from app.core.logger import get_logger
from app.group.entity.element import GroupElement
from app.group.entity.group import ConjugacyClass, FiniteGroup
from app.group.service.group_service import centralizer, conjugacy_class
from app.reps.entity.irrep import Irrep
from app.reps.service.rep_service import schur_scalar
from app.screener.entity.verdict import ScreenOptions, Verdict
from pkg.cyclo import RootOfUnity

logger = get_logger("ScreenService")

# principal submatrices are searched only below this size
SUBSET_SEARCH_SIZE = 8


@dataclass(frozen=True)
class ClassFacts:
    """Everything the rules need about a class that does not depend on the representation."""

    order: int
    reality: RealityReport
    witnesses: Tuple[PowerWitness, ...]


@lru_cache(maxsize=256)
def class_facts(group: FiniteGroup, s: GroupElement) -> ClassFacts:
    cls = conjugacy_class(group, s)
    return ClassFacts(s.order(), reality_report(group, s), tuple(power_witnesses(group, cls)))


def _render_q(q: QMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in q.render()) + "]"


def _cartan_note(q: QMatrix) -> str:
    result = cartan_from_q(q)
    if isinstance(result, CartanMatrix):
        report = is_finite_type(result)
        kind = "finite type " + " x ".join(report.labels) if report.finite else "not of finite type"
        return f"Cartan matrix {result.render()} ({kind})"
    if isinstance(result, InfiniteImmediately):
        return f"q_{result.i + 1}{result.i + 1} = 1"
    return "not of Cartan type"


def _power_q(q: RootOfUnity, j: int, e: int) -> RootOfUnity:
    """q^(j^e)."""
    return q ** pow(j, e, q.order) if q.order > 1 else q


def power_witness_q(q: RootOfUnity, pw: PowerWitness, points: int) -> QMatrix:
    """The 2-, 3- or 4-point diagonal subspaces spanned by g_0 v, g_1 v, ... with g_l = σ^l."""
    m = pw.sigma_order
    j = pw.j
    back1 = _power_q(q, j, m - 1)
    fwd1 = _power_q(q, j, 1)
    if points == 2:
        return QMatrix.of([[q, back1], [fwd1, q]])
    if points == 3:
        back2 = _power_q(q, j, m - 2)
        fwd2 = _power_q(q, j, 2)
        return QMatrix.of([[q, back1, back2], [fwd1, q, back1], [fwd2, fwd1, q]])
    if points == 4:
        return QMatrix.of([[q, q, back1, back1], [q, q, back1, back1], [fwd1, fwd1, q, q], [fwd1, fwd1, q, q]])
    raise ValueError(f"no {points}-point witness subspace")


def _bad(q: RootOfUnity, order: int) -> bool:
    """q_ss ≠ -1 or |s| odd."""
    return not (q.is_minus_one() and order % 2 == 0)


def rep_free_rules(facts: ClassFacts, q: RootOfUnity, degree: int) -> Optional[Verdict]:
    """R1 to R4: they only see q_ss, |s|, deg ρ and the class."""
    bad = _bad(q, facts.order)
    if q.is_one():
        return Verdict.infinite("R1: q_ss = 1, so the line g_1 v spans an infinite Nichols algebra",
                                witness="{g_1 v}")
    if facts.reality.is_real and bad:
        sigma = facts.reality.involution_witness or facts.reality.inverting_witness
        kind = "absolutely real" if facts.reality.is_absolutely_real else "real"
        return Verdict.infinite(
            f"R2: s is {kind} while q_ss = {q.render()} and |s| = {facts.order}; "
            "real classes need q_ss = -1 and |s| even",
            witness=f"sigma={sigma.render()}",
        )
    distinct = next((w for w in facts.witnesses if w.distinct3), None)
    if distinct is not None and bad:
        wq = power_witness_q(q, distinct, 3)
        return Verdict.infinite(
            f"R3: s, s^j, s^(j^2) are distinct and conjugate (j = {distinct.j}) while q_ss = {q.render()}, "
            f"|s| = {facts.order}; witness subspace {_cartan_note(wq)}",
            witness=f"{distinct.render()}; Q={_render_q(wq)}",
            witness_q=wq,
        )
    returning = next((w for w in facts.witnesses if w.square_returns), None)
    if returning is not None:
        if degree > 1 and bad:
            wq = power_witness_q(q, returning, 4)
            return Verdict.infinite(
                f"R4: s^j is conjugate to s with s^(j^2) = s (j = {returning.j}), deg ρ = {degree} > 1, "
                f"q_ss = {q.render()}, |s| = {facts.order}; witness subspace {_cartan_note(wq)}",
                witness=f"{returning.render()}; Q={_render_q(wq)}",
                witness_q=wq,
            )
        exempt = (not bad) or q.order == 3
        if degree == 1 and not exempt:
            wq = power_witness_q(q, returning, 2)
            return Verdict.infinite(
                f"R4: s^j is conjugate to s with s^(j^2) = s (j = {returning.j}), deg ρ = 1, "
                f"q_ss = {q.render()} is neither -1 with |s| even nor a primitive cube root of 1; "
                f"witness subspace {_cartan_note(wq)}",
                witness=f"{returning.render()}; Q={_render_q(wq)}",
                witness_q=wq,
            )
    return None


def _infinite_cartan(q: QMatrix) -> Optional[Tuple[QMatrix, str]]:
    """A principal part of q of Cartan type but not of finite type, if there is one."""
    result = cartan_from_q(q)
    if isinstance(result, InfiniteImmediately):
        return q.restricted([result.i]), "a diagonal entry equals 1"
    if isinstance(result, CartanMatrix):
        report = is_finite_type(result)
        if report.finite:
            return None
        return q, f"Cartan matrix {result.render()} is not of finite type ({', '.join(report.labels)})"
    if q.size > SUBSET_SEARCH_SIZE:
        return None
    for size in range(q.size - 1, 1, -1):
        for positions in combinations(range(q.size), size):
            sub = q.restricted(positions)
            found = cartan_from_q(sub)
            if isinstance(found, CartanMatrix) and not is_finite_type(found).finite:
                return sub, f"Cartan matrix {found.render()} of a principal part is not of finite type"
    return None


@dataclass
class SubrackSubspaces:
    """Diagonal subspaces over the maximal abelian subracks of one module, or why they were not searched."""

    parts: List[Tuple[Tuple[int, ...], QMatrix]]
    skipped: Optional[str] = None


def subrack_subspaces(module: YDModule, bound: int) -> SubrackSubspaces:
    try:
        subracks = abelian_subracks(module.cls, max_only=True, bound=bound)
    except BudgetExceededError as e:
        logger.warning(f"R5 and R7 skipped for {module.cls.base.render()}: {e.detail}")
        return SubrackSubspaces([], e.detail)
    return SubrackSubspaces([(sr.indices, qm) for sr in subracks for qm in diagonal_subspace(module, sr)])


def subrack_rule(module: YDModule, subspaces: SubrackSubspaces, full: Optional[QMatrix] = None) -> Optional[Verdict]:
    """R5 over every diagonal subspace of every maximal abelian subrack, then over the whole module."""
    candidates = list(subspaces.parts)
    if full is not None and module.rep.degree > 1:
        candidates.append((tuple(range(module.cls.size)), full))
    for indices, qm in candidates:
        found = _infinite_cartan(qm)
        if found is None:
            continue
        witness_q, why = found
        rendered = "{" + ", ".join(module.cls.elements[i].render() for i in indices) + "}"
        return Verdict.infinite(
            f"R5: diagonal subspace over the abelian subrack {rendered}: {why}",
            witness=f"subrack={rendered}; Q={_render_q(witness_q)}",
            witness_q=witness_q,
            witness_subrack=indices,
        )
    return None


def negative_braiding_of(subspaces: SubrackSubspaces) -> Optional[bool]:
    """None when the subracks were not searched."""
    if subspaces.skipped is not None:
        return None
    if not subspaces.parts:
        return False
    return all(qm.is_negative() for _, qm in subspaces.parts)


def exterior_rule(module: YDModule, full: Optional[QMatrix]) -> Optional[Verdict]:
    """R6: the whole module is diagonal with q_ii = -1 and q_ij q_ji = 1."""
    if full is None or not full.is_negative():
        return None
    flip = is_flip(module)
    kind = "c(u ⊗ w) = -w ⊗ u on the whole module" if flip else "the whole module is diagonal with q_ii = -1, q_ij q_ji = 1"
    dimension = 2 ** module.degree
    return Verdict(
        tag="FiniteDim",
        dimension=dimension,
        reasons=[f"R6: {kind}; the Nichols algebra is a quantum exterior algebra of dimension 2^{module.degree}"],
        witness=f"Q={_render_q(full)}",
        witness_q=full,
    )


def _confirm(verdict: Verdict, options: ScreenOptions) -> None:
    if verdict.dimension is None or verdict.dimension > 16 or verdict.witness_q is None:
        return
    q = verdict.witness_q
    hilbert = HilbertOptions(max_degree=max(options.max_degree, q.size + 1), budget=options.budget)
    try:
        prefix = nichols_hilbert_prefix(q, options=hilbert)
    except BudgetExceededError as e:
        logger.warning(f"Hilbert confirmation skipped: {e.detail}")
        return
    if prefix.total != verdict.dimension:
        raise AlgebraError(f"Hilbert prefix {prefix.coefficients} contradicts dimension {verdict.dimension}")
    verdict.reasons.append(f"confirmed: Hilbert series {list(prefix.coefficients)} terminates at total {prefix.total}")


def screen_identity(group: FiniteGroup) -> Verdict:
    """The identity class needs no representation table: q_ss = 1 for every ρ."""
    return rep_free_rules(class_facts(group, group.identity), RootOfUnity.one(), 1)


def screen(
    group: FiniteGroup, cls: ConjugacyClass, rep: Irrep, options: Optional[ScreenOptions] = None
) -> Verdict:
    options = options or ScreenOptions()
    s = cls.base
    cent = centralizer(group, s)
    if rep.domain.order != cent.order or not all(cent.contains(g) for g in rep.domain.elements):
        raise SpecError(f"{rep.label} is not a representation of the centralizer of {s.render()}")
    q = schur_scalar(rep, s)
    facts = class_facts(group, s)

    verdict = rep_free_rules(facts, q, rep.degree)
    if verdict is not None:
        logger.debug(f"{s.render()}, {rep.label}: {verdict.reasons[0]}")
        if cls.size <= options.corroboration_bound:
            module = build_yd_module(cls, rep)
            full = full_diagonal_form(module) if rep.degree > 1 else None
            corroborated = subrack_rule(module, subrack_subspaces(module, options.subrack_bound), full)
            if corroborated is not None:
                verdict.reasons.append(corroborated.reasons[0].replace("R5:", "R5 corroborates:", 1))
        return verdict

    module = build_yd_module(cls, rep, check_bound=options.subrack_bound)
    if options.verify and module.degree <= settings.BRAID_CHECK_DEGREE:
        if not (check_braid_equation(module) and check_grading(module)):
            raise AlgebraError(f"M({s.render()}, {rep.label}) fails the braid equation")

    subspaces = subrack_subspaces(module, options.subrack_bound)
    full = full_diagonal_form(module)
    verdict = subrack_rule(module, subspaces, full)
    if verdict is not None:
        return verdict

    negative = negative_braiding_of(subspaces)
    verdict = exterior_rule(module, full)
    if verdict is not None:
        verdict.negative_braiding = bool(negative)
        if options.confirm_finite:
            _confirm(verdict, options)
        return verdict

    reasons = ["R1-R6 do not apply"]
    if negative is None:
        reasons.append(f"R5 skipped: {subspaces.skipped}")
        reasons.append("R7 not evaluated: negative braiding is read off the abelian subracks, which were not searched")
    elif negative:
        reasons.append("R7: every maximal abelian subrack gives q_ii = -1 and q_ij q_ji = 1 (negative braiding)")
    return Verdict(tag="Undetermined", reasons=reasons, negative_braiding=bool(negative))
