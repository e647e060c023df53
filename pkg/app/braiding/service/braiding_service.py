# app/braiding/service/braiding_service.py
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from app.braiding.entity.module import BasisPair, QMatrix, RackDecomposition, Subrack, YDModule
from app.core.config import settings
from app.core.errors import AlgebraError, BudgetExceededError, PreconditionError
from app.core.logger import get_logger
from app.group.entity.element import Dihedral
from app.group.entity.group import ConjugacyClass, FiniteGroup
from app.group.service.group_service import centralizer, conjugacy_class
from app.reps.entity.irrep import Irrep
from pkg.cyclo import CycloMatrix, CycloNumber, common_eigenspaces, simultaneous_eigenbasis

logger = get_logger("BraidingService")

Tensor = Dict[Tuple[BasisPair, ...], CycloNumber]


def build_yd_module(cls: ConjugacyClass, rep: Irrep, check_bound: Optional[int] = None) -> YDModule:
    """M(O, ρ); the factorization t_i g_j = g_h γ is checked for every pair when |O| is within the bound."""
    cent = centralizer(cls.group, cls.base)
    if rep.domain.order != cent.order or not all(cent.contains(g) for g in rep.domain.elements):
        raise PreconditionError(
            f"{rep.label} is not a representation of the centralizer of {cls.base.render()}"
        )
    module = YDModule(cls, rep, cent)
    bound = check_bound if check_bound is not None else settings.SUBRACK_CLASS_BOUND
    if cls.size <= bound:
        for i in range(cls.size):
            for j in range(cls.size):
                module.factor(i, j)
    return module


def braiding(module: YDModule, a: BasisPair, b: BasisPair) -> Dict[Tuple[BasisPair, BasisPair], CycloNumber]:
    """c(g_i e_u ⊗ g_j e_w) = Σ_w' ρ(γ)[w'][w] (h, w') ⊗ (i, u)."""
    i, u = a
    j, w = b
    h, gamma = module.factor(i, j)
    mat = module.rep(gamma)
    out = {}
    for w2 in range(module.rep.degree):
        coeff = mat.rows[w2][w]
        if not coeff.is_zero():
            out[((h, w2), (i, u))] = coeff
    return out


def _apply_at(module: YDModule, tensor: Tensor, pos: int) -> Tensor:
    out: Tensor = {}
    for word, coeff in tensor.items():
        for (x, y), c in braiding(module, word[pos], word[pos + 1]).items():
            key = word[:pos] + (x, y) + word[pos + 2:]
            out[key] = out[key] + coeff * c if key in out else coeff * c
    return {k: v for k, v in out.items() if not v.is_zero()}


def _tensors_equal(a: Tensor, b: Tensor) -> bool:
    for key in set(a) | set(b):
        left = a.get(key)
        right = b.get(key)
        if left is None or right is None:
            if not (left if left is not None else right).is_zero():
                return False
        elif left != right:
            return False
    return True


def check_braid_equation(module: YDModule) -> bool:
    """(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on every basis triple."""
    basis = module.basis
    one = CycloNumber.one(module.rep.modulus)
    for triple in product(basis, repeat=3):
        start: Tensor = {triple: one}
        left = _apply_at(module, _apply_at(module, _apply_at(module, start, 0), 1), 0)
        right = _apply_at(module, _apply_at(module, _apply_at(module, start, 1), 0), 1)
        if not _tensors_equal(left, right):
            logger.warning(f"braid equation fails at {triple}")
            return False
    return True


def check_grading(module: YDModule) -> bool:
    """c(a ⊗ b) lies in the (t_i ▷ t_j)-component tensor the t_i-component."""
    t = module.cls.elements
    for a, b in product(module.basis, repeat=2):
        target = module.cls.index_of(t[b[0]].conjugate_by(t[a[0]]))
        for (x, y) in braiding(module, a, b):
            if x[0] != target or y[0] != a[0]:
                return False
    return True


def _commuting_graph(cls: ConjugacyClass) -> List[set]:
    t = cls.elements
    return [
        {j for j in range(cls.size) if j != i and t[i].commutes_with(t[j])} for i in range(cls.size)
    ]


def _maximal_cliques(graph: List[set]) -> List[Tuple[int, ...]]:
    cliques: List[Tuple[int, ...]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(graph[v] & p))
        for v in sorted(p - graph[pivot]):
            expand(r | {v}, p & graph[v], x & graph[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(len(graph))), set())
    return sorted(cliques)


def abelian_subracks(cls: ConjugacyClass, max_only: bool = True, bound: Optional[int] = None) -> List[Subrack]:
    """
    Abelian subracks of a class, found as cliques of its commuting graph.

    Pairwise commuting elements fix each other under ▷, so every clique is
    closed and is a subrack.
    """
    limit = bound if bound is not None else settings.SUBRACK_CLASS_BOUND
    if cls.size > limit:
        raise BudgetExceededError(f"class of size {cls.size} exceeds the subrack search bound {limit}")
    graph = _commuting_graph(cls)
    maximal = _maximal_cliques(graph)
    if max_only:
        return [Subrack(c, True, True) for c in maximal]
    maximal_set = set(maximal)
    found = set()
    for clique in maximal:
        for mask in range(1, 1 << len(clique)):
            found.add(tuple(v for k, v in enumerate(clique) if mask >> k & 1))
    return [Subrack(c, True, c in maximal_set) for c in sorted(found, key=lambda c: (len(c), c))]


def _is_abelian_subset(cls: ConjugacyClass, indices: Sequence[int]) -> bool:
    t = cls.elements
    return all(t[i].commutes_with(t[j]) for i in indices for j in indices)


def diagonal_subspace(module: YDModule, subrack: Subrack) -> List[QMatrix]:
    """
    One q-matrix per joint eigenspace of the ρ(γ_ij), i, j in the subrack.

    The braided subspace spanned by g_i v (i in the subrack) for a common
    eigenvector v is of diagonal type with q_ij the eigenvalue of ρ(γ_ij).
    """
    idx = subrack.indices
    if not _is_abelian_subset(module.cls, idx):
        raise PreconditionError("diagonal subspaces need an abelian subrack")
    pairs = [(i, j) for i in idx for j in idx]
    mats = []
    for i, j in pairs:
        h, gamma = module.factor(i, j)
        if h != j:
            raise AlgebraError(f"commuting t_{i + 1}, t_{j + 1} moved component {j + 1}")
        mats.append(module.rep(gamma))
    out = []
    for basis, values in common_eigenspaces(mats, module.rep.degree):
        q = dict(zip(pairs, values))
        rows = tuple(tuple(q[(i, j)] for j in idx) for i in idx)
        out.append(QMatrix(rows, idx, basis[0]))
    return out


def is_negative_braiding(module: YDModule) -> bool:
    found = False
    for subrack in abelian_subracks(module.cls):
        for qm in diagonal_subspace(module, subrack):
            found = True
            if not qm.is_negative():
                return False
    return found


def full_diagonal_form(module: YDModule) -> Optional[QMatrix]:
    """
    The whole module as a diagonal braiding, when the class is abelian and
    one basis of V diagonalizes every ρ(γ_ij). Rows are ordered (i, v).
    """
    cls = module.cls
    if not _is_abelian_subset(cls, range(cls.size)):
        return None
    size = cls.size
    pairs = [(i, j) for i in range(size) for j in range(size)]
    mats = [module.rep(module.factor(i, j)[1]) for i, j in pairs]
    try:
        eigenbasis = simultaneous_eigenbasis(mats)
    except ValueError:
        return None
    lookup = {pair: k for k, pair in enumerate(pairs)}
    labels = [(i, a) for i in range(size) for a in range(len(eigenbasis))]
    rows = tuple(
        tuple(eigenbasis[b][1][lookup[(i, j)]] for (j, b) in labels) for (i, _a) in labels
    )
    return QMatrix(rows, tuple(i for i, _ in labels))


def is_flip(module: YDModule) -> bool:
    """c(u ⊗ w) = -w ⊗ u on the whole module."""
    size = module.cls.size
    minus = CycloMatrix.identity(module.rep.degree, module.rep.modulus).scale(CycloNumber.from_rational(-1))
    for i in range(size):
        for j in range(size):
            h, gamma = module.factor(i, j)
            if h != j or module.rep(gamma) != minus:
                return False
    return True


def rack_decomposition(cls: ConjugacyClass, d: int) -> RackDecomposition:
    """Split the reflections of D_n (n odd) into n/d copies of the reflections of D_d."""
    group = cls.group
    if group.kind != "Dn" or not isinstance(cls.base, Dihedral) or cls.base.a != 1:
        raise PreconditionError("rack decomposition needs the reflection class of a dihedral group")
    n = group.n
    if n % 2 == 0:
        raise PreconditionError(f"reflections of D_{n} form two classes; n must be odd")
    if d < 1 or n % d:
        raise PreconditionError(f"{d} does not divide {n}")
    e = n // d
    small = FiniteGroup("Dn", n=d)
    small_class = conjugacy_class(small, Dihedral(1, 0, d))

    blocks, isos = [], []
    for r in range(e):
        block = tuple(cls.index_of(Dihedral(1, (r + e * k) % n, n)) for k in range(d))
        iso = {cls.index_of(Dihedral(1, (r + e * k) % n, n)): Dihedral(1, k, d) for k in range(d)}
        for x in block:
            for y in block:
                image = cls.elements[y].conjugate_by(cls.elements[x])
                z = cls.index_of(image)
                if z not in iso or iso[y].conjugate_by(iso[x]) != iso[z]:
                    raise AlgebraError(f"block {r} is not isomorphic to the reflection rack of D_{d}")
        if set(iso.values()) != set(small_class.elements):
            raise AlgebraError(f"block {r} does not cover the reflections of D_{d}")
        blocks.append(block)
        isos.append(iso)
    quotient = {cls.index_of(Dihedral(1, b, n)): Dihedral(1, b % e, e) for b in range(n)}
    for x in range(cls.size):
        for y in range(cls.size):
            z = cls.index_of(cls.elements[y].conjugate_by(cls.elements[x]))
            if quotient[y].conjugate_by(quotient[x]) != quotient[z]:
                raise AlgebraError("block map is not a rack morphism")
    logger.debug(f"D_{n} reflections split into {e} blocks of size {d}")
    return RackDecomposition(n, d, blocks, isos, quotient)
