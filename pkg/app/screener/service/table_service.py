# app/screener/service/table_service.py
"""
Whole-group runs of the screener: the dihedral tables and the alternating scans.

Rows come out ordered by class (element order, then enumeration rank) and,
inside a class, by the order the representation table lists its irreps.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.errors import SpecError, UnsupportedError
from app.core.logger import get_logger
from app.group.entity.element import Dihedral, Perm
from app.group.entity.group import ConjugacyClass, FiniteGroup
from app.group.service.group_service import (
    centralizer,
    classes,
    conjugacy_class,
    cycle_type,
    parse_element,
    parse_group,
)
from app.reps.service.rep_service import schur_scalar, supported_irreps
from app.screener.entity.verdict import ScreenOptions, TableSummaryRow, Verdict, VerdictRecord
from app.screener.service.screen_service import class_facts, rep_free_rules, screen, screen_identity
from pkg.cyclo import RootOfUnity

logger = get_logger("TableService")

EVEN_BLOCK_NOTE = (
    "all cycles share one even length: q_ss = -1 is necessary here, "
    "the remaining conditions on ρ are not decided by these rules"
)


def verdict_record(
    group: FiniteGroup, cls: ConjugacyClass, rep: str, q: RootOfUnity, verdict: Verdict
) -> VerdictRecord:
    return VerdictRecord(
        group=group.spec,
        class_rep=cls.base.render(),
        class_size=cls.size,
        centralizer=centralizer(group, cls.base).label,
        rep=rep,
        q_ss=q.render(),
        verdict=verdict.tag,
        dimension=verdict.dimension,
        reasons=list(verdict.reasons),
        witness=verdict.witness,
        negative_braiding=verdict.negative_braiding,
    )


def rep_free_verdicts(group: FiniteGroup, cls: ConjugacyClass) -> List[Tuple[RootOfUnity, Optional[Verdict]]]:
    """
    R1 to R4 for every |s|-th root of unity q.

    A q counts as decided only when the rules fire for degree 1 and for
    degree > 1 alike, so the verdict holds for every ρ with q_ss = q.
    """
    facts = class_facts(group, cls.base)
    out = []
    for k in range(facts.order):
        q = RootOfUnity.of(k, facts.order)
        linear = rep_free_rules(facts, q, 1)
        higher = rep_free_rules(facts, q, 2)
        out.append((q, linear if linear is not None and higher is not None else None))
    return out


def all_label(q: RootOfUnity) -> str:
    return f"ALL(q={q.render()})"


def _has_even_blocks(s: Perm) -> bool:
    t = cycle_type(s)
    lengths = [j for j in range(1, t.degree + 1) if t.m(j)]
    return len(lengths) == 1 and lengths[0] % 2 == 0


def screen_class(group: FiniteGroup, cls: ConjugacyClass, options: ScreenOptions) -> List[VerdictRecord]:
    free = rep_free_verdicts(group, cls)
    if all(v is not None for _, v in free):
        return [verdict_record(group, cls, all_label(q), q, v) for q, v in free]

    cent = centralizer(group, cls.base)
    try:
        irreps = supported_irreps(cent)
    except UnsupportedError:
        logger.info(f"{cls.base.render()}: no representations for {cent.label}, reporting per q_ss")
        rows = []
        for q, v in free:
            if v is None:
                v = Verdict(tag="Undetermined", reasons=["centralizer reps unavailable"])
            rows.append(verdict_record(group, cls, all_label(q), q, v))
        return rows

    note = isinstance(cls.base, Perm) and _has_even_blocks(cls.base)
    rows = []
    for rep in irreps:
        verdict = screen(group, cls, rep, options)
        if note and verdict.tag == "Undetermined":
            verdict.reasons.append(EVEN_BLOCK_NOTE)
        rows.append(verdict_record(group, cls, rep.label, schur_scalar(rep, cls.base), verdict))
    return rows


def _screen_class_worker(spec: str, base: str, options: ScreenOptions) -> List[VerdictRecord]:
    group = parse_group(spec)
    return screen_class(group, conjugacy_class(group, parse_element(group, base)), options)


def scan_an(n: int, jobs: Optional[int] = None, options: Optional[ScreenOptions] = None) -> List[VerdictRecord]:
    if not 4 <= n <= 8:
        raise SpecError(f"scan_an needs 4 <= n <= 8, got {n}")
    options = options or ScreenOptions()
    workers = jobs if jobs is not None else settings.JOBS
    group = parse_group(f"An:{n}")
    found = classes(group)
    logger.info(f"Scanning A_{n}: {len(found)} classes, {workers} worker(s)")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(
                    _screen_class_worker,
                    [group.spec] * len(found),
                    [c.base.render() for c in found],
                    [options] * len(found),
                )
            )
    else:
        chunks = [screen_class(group, c, options) for c in found]

    rows = [row for chunk in chunks for row in chunk]
    logger.info(f"Scan of A_{n} finished: {len(rows)} rows")
    return rows


def _dihedral_families(n: int) -> List[Tuple[str, Dihedral]]:
    """(family, class base) in table order."""
    families = [("e", Dihedral(0, 0, n))]
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    families += [("y^h", Dihedral(0, h, n)) for h in range(1, top + 1)]
    if n % 2 == 0:
        families.append(("y^m", Dihedral(0, n // 2, n)))
    families.append(("x", Dihedral(1, 0, n)))
    if n % 2 == 0:
        families.append(("xy", Dihedral(1, 1, n)))
    return families


def dihedral_family(n: int, class_rep: str) -> str:
    s = Dihedral.parse(class_rep, n)
    for family, base in _dihedral_families(n):
        if base == s:
            return family
    raise SpecError(f"{class_rep} is not a class base of D_{n}")


def table_dn(n: int, options: Optional[ScreenOptions] = None) -> List[VerdictRecord]:
    if n < 3:
        raise SpecError(f"table_dn needs n >= 3, got {n}")
    options = options or ScreenOptions()
    group = parse_group(f"Dn:{n}")
    logger.info(f"Building the table for D_{n}")
    rows = []
    for family, base in _dihedral_families(n):
        cls = conjugacy_class(group, base)
        if family == "e":
            rows.append(verdict_record(group, cls, "any", RootOfUnity.one(), screen_identity(group)))
            continue
        for rep in supported_irreps(centralizer(group, base)):
            verdict = screen(group, cls, rep, options)
            rows.append(verdict_record(group, cls, rep.label, schur_scalar(rep, base), verdict))
    logger.info(f"Table for D_{n} finished: {len(rows)} rows")
    return rows


def summarize_table(n: int, rows: Sequence[VerdictRecord]) -> List[TableSummaryRow]:
    """Collapse table rows sharing orbit family, verdict, dimension and the negative-braiding flag."""
    groups: Dict[tuple, List[VerdictRecord]] = {}
    for row in rows:
        key = (dihedral_family(n, row.class_rep), row.verdict, row.dimension, row.negative_braiding)
        groups.setdefault(key, []).append(row)
    summary = []
    for (family, verdict, dimension, negative), members in groups.items():
        summary.append(
            TableSummaryRow(
                orbit=f"O_{{{family}}}" if family != "e" else "e",
                centralizer=", ".join(dict.fromkeys(m.centralizer for m in members)),
                reps=list(dict.fromkeys(m.rep for m in members)),
                verdict=verdict,
                dimension=dimension,
                negative_braiding=negative,
                count=len(members),
            )
        )
    return summary
