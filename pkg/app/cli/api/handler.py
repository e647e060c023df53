# app/cli/api/handler.py
from typing import Dict, List

from app.analysis.service.class_service import (
    absolute_reality_criterion,
    an_class_splits,
    commutes_with_odd,
    power_witnesses,
    reality_report,
)
from app.braiding.service.braiding_service import rack_decomposition
from app.cli.api.dto import ClassRow, Command, RackBlockRow, RealityRow
from app.core.errors import SpecError, UnsupportedError
from app.core.logger import get_logger
from app.group.entity.element import Dihedral, Perm
from app.group.service.group_service import (
    centralizer,
    classes,
    conjugacy_class,
    cycle_type,
    parse_element,
    parse_group,
)
from app.reps.service.rep_service import normalize_label, parse_rep, schur_scalar, supported_irreps
from app.screener.entity.verdict import ScreenOptions, VerdictRecord
from app.screener.service.screen_service import screen, screen_identity
from app.screener.service.table_service import scan_an, table_dn, verdict_record
from pkg.cyclo import RootOfUnity

logger = get_logger("CliHandler")


def _require(value, flag: str, verb: str):
    if value is None or value == []:
        raise SpecError(f"{verb} needs {flag}")
    return value


def screen_options(cmd: Command) -> ScreenOptions:
    return ScreenOptions(max_degree=cmd.max_degree, budget=cmd.budget, verify=cmd.verify)


def handle_classes(cmd: Command) -> List[ClassRow]:
    group = parse_group(_require(cmd.group, "--group", cmd.verb))
    rows = []
    for k, cls in enumerate(classes(group), start=1):
        cent = centralizer(group, cls.base)
        splits = None
        if group.kind == "An" and group.n >= 2:
            splits = an_class_splits(cycle_type(cls.base))
        rows.append(
            ClassRow(
                index=k,
                class_rep=cls.base.render(),
                size=cls.size,
                order=cls.base.order(),
                centralizer_order=cent.order,
                centralizer=cent.label,
                splits=splits,
            )
        )
    return rows


def handle_screen(cmd: Command) -> VerdictRecord:
    group = parse_group(_require(cmd.group, "--group", cmd.verb))
    s = parse_element(group, _require(cmd.class_rep, "--class", cmd.verb))
    cls = conjugacy_class(group, s)
    label = _require(cmd.rep, "--rep", cmd.verb)
    try:
        irreps = supported_irreps(centralizer(group, s))
    except UnsupportedError:
        if not s.is_identity():
            raise
        verdict = screen_identity(group)
        logger.info(f"{group.spec} identity class, {label}: {verdict.tag}")
        return verdict_record(group, cls, normalize_label(label), RootOfUnity.one(), verdict)
    rep = parse_rep(irreps, label)
    verdict = screen(group, cls, rep, screen_options(cmd))
    logger.info(f"{group.spec} {s.render()} {rep.label}: {verdict.tag}")
    return verdict_record(group, cls, rep.label, schur_scalar(rep, s), verdict)


def handle_table_dn(cmd: Command) -> Dict[int, List[VerdictRecord]]:
    return {n: table_dn(n, screen_options(cmd)) for n in _require(cmd.n, "--n", cmd.verb)}


def handle_scan_an(cmd: Command) -> List[VerdictRecord]:
    rows = []
    for n in _require(cmd.n, "--n", cmd.verb):
        rows.extend(scan_an(n, jobs=cmd.jobs, options=screen_options(cmd)))
    return rows


def handle_rack_decompose(cmd: Command) -> List[RackBlockRow]:
    ns = _require(cmd.n, "--n", cmd.verb)
    if len(ns) != 1:
        raise SpecError("rack-decompose takes a single --n")
    n = ns[0]
    d = _require(cmd.d, "--d", cmd.verb)
    group = parse_group(f"Dn:{n}")
    cls = conjugacy_class(group, Dihedral(1, 0, n))
    decomposition = rack_decomposition(cls, d)
    rows = []
    for k, (block, iso) in enumerate(zip(decomposition.blocks, decomposition.isomorphisms)):
        rows.append(
            RackBlockRow(
                block=k,
                elements=[cls.elements[i].render() for i in block],
                images=[iso[i].render() for i in block],
                quotient=decomposition.quotient[block[0]].render(),
            )
        )
    return rows


def handle_reality(cmd: Command) -> RealityRow:
    group = parse_group(_require(cmd.group, "--group", cmd.verb))
    s = parse_element(group, _require(cmd.class_rep, "--class", cmd.verb))
    report = reality_report(group, s)
    witnesses = power_witnesses(group, conjugacy_class(group, s))
    row = RealityRow(
        group=group.spec,
        class_rep=s.render(),
        order=s.order(),
        is_real=report.is_real,
        is_absolutely_real=report.is_absolutely_real,
        inverting_witness=report.inverting_witness.render() if report.inverting_witness is not None else None,
        involution_witness=report.involution_witness.render() if report.involution_witness is not None else None,
        power_witnesses=[w.render() for w in witnesses],
    )
    if isinstance(s, Perm) and group.kind == "An":
        criterion = absolute_reality_criterion(cycle_type(s))
        row.commutes_with_odd = commutes_with_odd(s)
        row.criterion_fixed_points = criterion.fixed_points
        row.criterion_translation_parity = criterion.translation_parity
    return row
