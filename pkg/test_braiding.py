from itertools import permutations

import pytest

from app.braiding.entity.module import QMatrix, Subrack
from app.braiding.service.braiding_service import (
    abelian_subracks,
    braiding,
    build_yd_module,
    check_braid_equation,
    check_grading,
    diagonal_subspace,
    full_diagonal_form,
    is_flip,
    is_negative_braiding,
    rack_decomposition,
)
from app.core.errors import BudgetExceededError, PreconditionError, UnsupportedError
from app.group.entity.element import Dihedral, Perm
from app.group.service.group_service import (
    centralizer,
    class_with_numeration,
    classes,
    conjugacy_class,
    parse_group,
)
from app.reps.service.rep_service import parse_rep, supported_irreps
from pkg.cyclo import RootOfUnity

BRAID_CHECK_DEGREE = 12


def perm(cycles, n):
    return Perm.from_cycles(cycles, n)


def modules_of(spec):
    group = parse_group(spec)
    for cls in classes(group):
        try:
            irreps = supported_irreps(centralizer(group, cls.base))
        except UnsupportedError:
            continue
        for rep in irreps:
            if cls.size * rep.degree <= BRAID_CHECK_DEGREE:
                yield build_yd_module(cls, rep)


@pytest.fixture(scope="module")
def klein_module():
    """sgn⊗eps over the double transpositions of A_4, numbered by e, (1 3 2), (1 2 3)."""
    a4 = parse_group("An:4")
    s = perm([(1, 2), (3, 4)], 4)
    cls = class_with_numeration(a4, s, [a4.identity, perm([(1, 3, 2)], 4), perm([(1, 2, 3)], 4)])
    rep = parse_rep(supported_irreps(centralizer(a4, s)), "sgn⊗eps")
    return build_yd_module(cls, rep)


def dihedral_module(n, base, label):
    group = parse_group(f"Dn:{n}")
    cls = conjugacy_class(group, base)
    return build_yd_module(cls, parse_rep(supported_irreps(centralizer(group, base)), label))


@pytest.mark.parametrize("spec", ["An:4", "Sn:4", "Dn:4", "Dn:5", "Dn:6"])
def test_modules_satisfy_the_braid_equation(spec):
    count = 0
    for module in modules_of(spec):
        assert check_grading(module)
        assert check_braid_equation(module), f"{module.cls.base.render()} {module.rep.label}"
        count += 1
    assert count > 0


def test_factorization_identity(klein_module):
    cls = klein_module.cls
    t, g = cls.elements, cls.representatives
    for i in range(cls.size):
        for j in range(cls.size):
            h, gamma = klein_module.factor(i, j)
            assert g[h] * gamma == t[i] * g[j]
            assert t[h] == t[j].conjugate_by(t[i])
            assert gamma.commutes_with(cls.base)


def test_module_needs_a_centralizer_representation():
    a4 = parse_group("An:4")
    cls = conjugacy_class(a4, perm([(1, 2), (3, 4)], 4))
    other = supported_irreps(centralizer(a4, perm([(1, 2, 3)], 4)))[1]
    with pytest.raises(PreconditionError):
        build_yd_module(cls, other)


def test_diagonal_subspace_of_klein_class(klein_module):
    (subrack,) = abelian_subracks(klein_module.cls)
    assert subrack.indices == (0, 1, 2)
    (qm,) = diagonal_subspace(klein_module, subrack)
    assert qm.entries == QMatrix.of([[-1, -1, 1], [1, -1, -1], [-1, 1, -1]]).entries
    assert not qm.is_negative()
    assert full_diagonal_form(klein_module).entries == qm.entries
    assert not is_negative_braiding(klein_module)


def test_sgn_sgn_on_klein_class():
    a4 = parse_group("An:4")
    s = perm([(1, 2), (3, 4)], 4)
    cls = class_with_numeration(a4, s, [a4.identity, perm([(1, 3, 2)], 4), perm([(1, 2, 3)], 4)])
    module = build_yd_module(cls, parse_rep(supported_irreps(centralizer(a4, s)), "sgn⊗sgn"))
    (qm,) = diagonal_subspace(module, Subrack((0, 1, 2), True, True))
    assert qm.entries == QMatrix.of([[-1, 1, -1], [-1, -1, 1], [1, -1, -1]]).entries


def test_subracks_of_non_commuting_classes():
    a4 = parse_group("An:4")
    three_cycles = conjugacy_class(a4, perm([(1, 2, 3)], 4))
    assert [r.indices for r in abelian_subracks(three_cycles)] == [(0,), (1,), (2,), (3,)]
    d5 = parse_group("Dn:5")
    assert len(abelian_subracks(conjugacy_class(d5, Dihedral(1, 0, 5)))) == 5


def test_all_abelian_subracks():
    a4 = parse_group("An:4")
    cls = conjugacy_class(a4, perm([(1, 2), (3, 4)], 4))
    found = abelian_subracks(cls, max_only=False)
    assert len(found) == 7
    assert [r.size for r in found] == [1, 1, 1, 2, 2, 2, 3]
    assert [r.maximal for r in found] == [False] * 6 + [True]
    with pytest.raises(BudgetExceededError):
        abelian_subracks(cls, bound=2)


def test_diagonal_subspace_needs_commuting_points():
    d5 = parse_group("Dn:5")
    x = Dihedral(1, 0, 5)
    module = build_yd_module(conjugacy_class(d5, x), supported_irreps(centralizer(d5, x))[1])
    with pytest.raises(PreconditionError):
        diagonal_subspace(module, Subrack((0, 1), True, False))
    assert full_diagonal_form(module) is None


@pytest.mark.parametrize("label, negative", [("sgn⊗eps", True), ("sgn⊗sgn", True), ("eps⊗sgn", False)])
def test_negative_braiding_on_d4_reflections(label, negative):
    assert is_negative_braiding(dihedral_module(4, Dihedral(1, 0, 4), label)) == negative


def test_central_involution_with_two_dimensional_irreps():
    flip = dihedral_module(6, Dihedral(0, 3, 6), "rho:5")
    assert flip.degree == 2
    assert is_flip(flip)
    assert is_negative_braiding(flip)
    assert not is_flip(dihedral_module(6, Dihedral(0, 3, 6), "rho:6"))
    qm = full_diagonal_form(flip)
    assert qm.entries == ((RootOfUnity.minus_one(),) * 2,) * 2


@pytest.mark.parametrize("n, d, blocks", [(9, 3, 3), (15, 5, 3), (15, 3, 5), (7, 7, 1), (5, 1, 5)])
def test_rack_decomposition(n, d, blocks):
    cls = conjugacy_class(parse_group(f"Dn:{n}"), Dihedral(1, 0, n))
    decomposition = rack_decomposition(cls, d)
    assert len(decomposition.blocks) == blocks
    assert all(len(block) == d for block in decomposition.blocks)
    covered = sorted(i for block in decomposition.blocks for i in block)
    assert covered == list(range(n))
    for block in decomposition.blocks:
        assert len({decomposition.quotient[i] for i in block}) == 1


@pytest.mark.parametrize(
    "n, base, d",
    [(6, Dihedral(1, 0, 6), 3), (9, Dihedral(1, 0, 9), 2), (9, Dihedral(0, 1, 9), 3)],
)
def test_rack_decomposition_preconditions(n, base, d):
    cls = conjugacy_class(parse_group(f"Dn:{n}"), base)
    with pytest.raises(PreconditionError):
        rack_decomposition(cls, d)


def test_q_matrix_validation():
    with pytest.raises(ValueError):
        QMatrix.of([[1, 2], [1, 1]])
    with pytest.raises(ValueError):
        QMatrix.of([[1, 1]])
    qm = QMatrix.of([[-1, 1, -1], [1, -1, 1], [-1, 1, -1]], indices=(4, 5, 6))
    sub = qm.restricted([0, 1])
    assert sub.indices == (4, 5)
    assert sub.is_negative()
    assert qm.render()[0] == ["zeta(2)^1", "zeta(1)^0", "zeta(2)^1"]


def test_braiding_of_basis_pairs(klein_module):
    assert braiding(klein_module, (0, 0), (0, 0)) == {((0, 0), (0, 0)): -1}
    (qm,) = diagonal_subspace(klein_module, Subrack((0, 1, 2), True, True))
    for i in range(3):
        for j in range(3):
            (term,) = braiding(klein_module, (i, 0), (j, 0)).items()
            assert term == (((j, 0), (i, 0)), qm.q(i, j).to_cyclo())


def test_flip_braiding_of_a_central_class():
    flip = dihedral_module(6, Dihedral(0, 3, 6), "rho:5")
    for u in range(2):
        for w in range(2):
            assert braiding(flip, (0, u), (0, w)) == {((0, w), (0, u)): -1}


def canonical_q(qm):
    """The q-matrix up to renumbering of its basis, as its smallest rendering."""
    rows = qm.render()
    return min(
        tuple(tuple(rows[p[i]][p[j]] for j in range(qm.size)) for i in range(qm.size))
        for p in permutations(range(qm.size))
    )


def diagonal_parts(n, base):
    """Per irrep of the centralizer, the sorted diagonal subspaces over all maximal abelian subracks."""
    group = parse_group(f"Dn:{n}")
    cls = conjugacy_class(group, base)
    parts = []
    for rep in supported_irreps(centralizer(group, base)):
        module = build_yd_module(cls, rep)
        found = [canonical_q(qm) for sub in abelian_subracks(cls) for qm in diagonal_subspace(module, sub)]
        parts.append(tuple(sorted(found)))
    return sorted(parts)


@pytest.mark.parametrize("n", [6, 8, 12])
def test_both_reflection_classes_have_the_same_diagonal_parts(n):
    x_parts = diagonal_parts(n, Dihedral(1, 0, n))
    assert x_parts
    assert x_parts == diagonal_parts(n, Dihedral(1, 1, n))
