import pytest

from app.core.errors import AlgebraError, PreconditionError, SpecError, UnsupportedError
from app.group.entity.element import Dihedral, Perm
from app.group.service.group_service import centralizer, parse_group
from app.reps.service.rep_service import (
    abelian_irreps,
    builtin_irreps,
    characters_equal,
    conjugate_rep,
    index2_decompose,
    is_irreducible,
    norm_square,
    normalize_label,
    parse_rep,
    restrict,
    schur_scalar,
    supported_irreps,
)
from pkg.cyclo import CycloMatrix, CycloNumber, RootOfUnity

I = CycloNumber.root(1, 4)


def perm(cycles, n):
    return Perm.from_cycles(cycles, n)


@pytest.fixture(scope="module")
def d4_in_a6():
    a6 = parse_group("An:6")
    return centralizer(a6, perm([(1, 2), (3, 4)], 6))


@pytest.mark.parametrize(
    "spec, base",
    [
        ("An:4", [(1, 2), (3, 4)]),
        ("An:5", [(1, 2, 3, 4, 5)]),
        ("An:6", [(1, 2), (3, 4)]),
        ("An:6", [(1, 2), (3, 4, 5, 6)]),
        ("An:6", [(1, 2, 3), (4, 5, 6)]),
        ("Sn:4", [(1, 2), (3, 4)]),
    ],
)
def test_supported_irreps_are_complete(spec, base):
    group = parse_group(spec)
    cent = centralizer(group, perm(base, group.n))
    irreps = supported_irreps(cent)
    assert sum(rep.degree ** 2 for rep in irreps) == cent.order
    assert all(is_irreducible(rep) for rep in irreps)
    assert len({rep.label for rep in irreps}) == len(irreps)


def test_klein_four_labels_follow_the_base_point():
    a4 = parse_group("An:4")
    s = perm([(1, 2), (3, 4)], 4)
    irreps = abelian_irreps(centralizer(a4, s))
    assert [rep.label for rep in irreps] == ["eps⊗eps", "eps⊗sgn", "sgn⊗eps", "sgn⊗sgn"]
    assert [schur_scalar(rep, s) for rep in irreps] == [RootOfUnity.one()] * 2 + [RootOfUnity.minus_one()] * 2


def test_cyclic_labels():
    a5 = parse_group("An:5")
    s = perm([(1, 2, 3, 4, 5)], 5)
    irreps = abelian_irreps(centralizer(a5, s))
    assert [rep.label for rep in irreps] == [f"chi:{k}" for k in range(5)]
    assert schur_scalar(irreps[1], s) == RootOfUnity.of(1, 5)
    assert schur_scalar(irreps[3], s) == RootOfUnity.of(3, 5)


def test_product_of_cyclic_labels():
    a6 = parse_group("An:6")
    s = perm([(1, 2, 3), (4, 5, 6)], 6)
    labels = [rep.label for rep in abelian_irreps(centralizer(a6, s))]
    assert labels[:4] == ["chi:0,0", "chi:0,1", "chi:0,2", "chi:1,0"]
    assert len(labels) == 9


def test_abelian_irreps_reject_nonabelian_domains(d4_in_a6):
    with pytest.raises(PreconditionError):
        abelian_irreps(d4_in_a6)


def test_dihedral_irreps(d4_in_a6):
    irreps = builtin_irreps(d4_in_a6)
    assert [rep.label for rep in irreps] == ["rho:1", "rho:2", "rho:3", "rho:4", "rho:5"]
    assert [rep.degree for rep in irreps] == [1, 1, 1, 1, 2]
    a, b = d4_in_a6.generators
    rho5 = irreps[4]
    assert rho5(b * b) == CycloMatrix.build([[-1, 0], [0, -1]])
    assert b * a == perm([(1, 3), (2, 4)], 6)
    assert rho5(b * a) == CycloMatrix.build([[0, I], [-I, 0]])
    assert schur_scalar(rho5, perm([(1, 2), (3, 4)], 6)).is_minus_one()
    with pytest.raises(AlgebraError):
        schur_scalar(rho5, b)


def test_odd_dihedral_irreps():
    d5 = parse_group("Dn:5")
    whole = centralizer(d5, d5.identity)
    assert whole.label == "D5"
    irreps = supported_irreps(whole)
    assert [rep.degree for rep in irreps] == [1, 1, 2, 2]
    assert irreps[2](Dihedral(0, 1, 5)).trace() == CycloNumber.root(1, 5) + CycloNumber.root(4, 5)


def test_unknown_centralizer_has_no_table():
    s4 = parse_group("Sn:4")
    with pytest.raises(UnsupportedError):
        supported_irreps(centralizer(s4, s4.identity))
    with pytest.raises(UnsupportedError):
        builtin_irreps(centralizer(s4, perm([(1, 2, 3)], 4)))


@pytest.mark.parametrize(
    "text, label",
    [("chi_2", "chi:2"), ("sgn (x) eps", "sgn⊗eps"), ("sgn*sgn", "sgn⊗sgn"), ("rho_5", "rho:5"), (" chi:1 ", "chi:1")],
)
def test_label_normalization(text, label):
    assert normalize_label(text) == label


def test_parse_rep(d4_in_a6):
    irreps = builtin_irreps(d4_in_a6)
    assert parse_rep(irreps, "rho_5") is irreps[4]
    with pytest.raises(SpecError):
        parse_rep(irreps, "rho:9")


def test_irrep_outside_its_domain(d4_in_a6):
    rep = builtin_irreps(d4_in_a6)[0]
    with pytest.raises(PreconditionError):
        rep(perm([(1, 2, 3)], 6))


@pytest.fixture(scope="module")
def s4_and_a4_centralizers():
    s = perm([(1, 2), (3, 4)], 4)
    big = centralizer(parse_group("Sn:4"), s)
    small = centralizer(parse_group("An:4"), s)
    return big, small


def test_index_two_generators(s4_and_a4_centralizers):
    big, _ = s4_and_a4_centralizers
    assert big.label == "D4"
    assert big.generators == (perm([(3, 4)], 4), perm([(1, 3, 2, 4)], 4))


def test_two_dimensional_irrep_splits_on_index_two_subgroup(s4_and_a4_centralizers):
    big, small = s4_and_a4_centralizers
    eta = parse_rep(supported_irreps(big), "rho:5")
    data = index2_decompose(eta, small)
    assert data.case == "ii"
    assert len(data.components) == 2
    assert {part.label for part in data.components} == {"sgn⊗eps", "sgn⊗sgn"}
    outside = perm([(3, 4)], 4)
    rho, rho_bar = data.components
    assert characters_equal(conjugate_rep(rho, outside), rho_bar)
    assert not characters_equal(rho, rho_bar)


@pytest.mark.parametrize("label", ["rho:1", "rho:2", "rho:3", "rho:4"])
def test_characters_stay_irreducible_on_index_two_subgroup(s4_and_a4_centralizers, label):
    big, small = s4_and_a4_centralizers
    data = index2_decompose(parse_rep(supported_irreps(big), label), small)
    assert data.case == "i"
    assert len(data.components) == 1


def test_index_two_preconditions(s4_and_a4_centralizers):
    big, _ = s4_and_a4_centralizers
    eta = supported_irreps(big)[4]
    with pytest.raises(PreconditionError):
        index2_decompose(eta, centralizer(parse_group("An:4"), perm([(1, 2, 3)], 4)))
    with pytest.raises(PreconditionError):
        restrict(eta, centralizer(parse_group("An:4"), perm([(1, 2, 3)], 4)))


def test_reducible_restriction_has_norm_two(s4_and_a4_centralizers):
    big, small = s4_and_a4_centralizers
    res = restrict(supported_irreps(big)[4], small)
    assert norm_square(res) == 2
    assert not is_irreducible(res)
