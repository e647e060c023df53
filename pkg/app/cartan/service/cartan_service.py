# app/cartan/service/cartan_service.py
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Matrix

from app.braiding.entity.module import QMatrix
from app.cartan.entity.cartan import (
    CartanMatrix,
    DynkinComponent,
    FiniteTypeReport,
    InfiniteImmediately,
    NotCartanType,
)
from app.core.errors import AlgebraError
from app.core.logger import get_logger

logger = get_logger("CartanService")

CartanResult = Union[CartanMatrix, NotCartanType, InfiniteImmediately]

_EXCEPTIONAL_ARMS = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}


def cartan_from_q(q: QMatrix) -> CartanResult:
    """a_ij is the first of 0, -1, -2, ... above -|q_ii| with q_ii^a_ij = q_ij q_ji."""
    n = q.size
    for i in range(n):
        if q.q(i, i).is_one():
            return InfiniteImmediately(i)
    rows = [[2] * n for _ in range(n)]
    for i in range(n):
        qii = q.q(i, i)
        for j in range(n):
            if i == j:
                continue
            target = q.q(i, j) * q.q(j, i)
            exponent = next((-k for k in range(qii.order) if (qii ** -k) == target), None)
            if exponent is None:
                return NotCartanType(i, j)
            rows[i][j] = exponent
    for i in range(n):
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AlgebraError(f"a_{i + 1}{j + 1} and a_{j + 1}{i + 1} disagree on vanishing")
    return CartanMatrix.of(rows)


def _components(a: CartanMatrix) -> List[Tuple[int, ...]]:
    n = a.size
    seen = set()
    out = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in range(n):
                if w not in seen and a.a(v, w) != 0:
                    seen.add(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def _path_order(nodes: Sequence[int], adj: Dict[int, List[int]]) -> List[int]:
    end = next(v for v in nodes if len(adj[v]) <= 1)
    order = [end]
    prev = None
    while len(order) < len(nodes):
        nxt = next(w for w in adj[order[-1]] if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def _arm_length(start: int, center: int, adj: Dict[int, List[int]]) -> int:
    length, prev, cur = 1, center, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def _component_label(a: CartanMatrix, nodes: Tuple[int, ...]) -> Optional[str]:
    """Finite Dynkin label of a connected component, or None."""
    k = len(nodes)
    if k == 1:
        return "A1"
    adj = {v: [w for w in nodes if w != v and a.a(v, w) != 0] for v in nodes}
    edges = [(v, w) for v in nodes for w in adj[v] if v < w]
    if len(edges) != k - 1:
        return None
    weights = {(v, w): a.a(v, w) * a.a(w, v) for v, w in edges}
    if any(x > 3 for x in weights.values()):
        return None
    multiple = [e for e, x in weights.items() if x > 1]
    degrees = sorted(len(adj[v]) for v in nodes)

    if not multiple:
        if degrees[-1] <= 2:
            return f"A{k}"
        branch = [v for v in nodes if len(adj[v]) >= 3]
        if len(branch) != 1 or len(adj[branch[0]]) != 3:
            return None
        center = branch[0]
        arms = tuple(sorted(_arm_length(w, center, adj) for w in adj[center]))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{k}"
        return _EXCEPTIONAL_ARMS.get(arms)

    if len(multiple) > 1 or degrees[-1] > 2:
        return None
    (v, w), = multiple
    if weights[(v, w)] == 3:
        return "G2" if k == 2 else None
    if k == 2:
        return "B2"
    path = _path_order(nodes, adj)
    pos = sorted((path.index(v), path.index(w)))
    if pos == [0, 1] or pos == [k - 2, k - 1]:
        end, inner = (path[0], path[1]) if pos == [0, 1] else (path[-1], path[-2])
        # B: the -2 sits in the row of the inner (long) node
        return f"B{k}" if a.a(inner, end) == -2 else f"C{k}"
    if k == 4 and pos == [1, 2]:
        return "F4"
    return None


def _determinant(a: CartanMatrix, nodes: Sequence[int]) -> int:
    return int(Matrix([[a.a(i, j) for j in nodes] for i in nodes]).det())


def is_finite_type(a: CartanMatrix) -> FiniteTypeReport:
    report = FiniteTypeReport()
    for nodes in _components(a):
        label = _component_label(a, nodes)
        report.components.append(DynkinComponent(label, nodes, _determinant(a, nodes)))
    logger.debug(f"Cartan matrix {a.render()} has components {report.labels}")
    return report
