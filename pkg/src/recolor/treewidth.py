"""Tree decompositions and the same-color merge construction.

`merge_by_coloring` collapses, bag by bag, vertices that share a color
under a given proper coloring, then saturates every (quotient) bag into a
clique.  The result is a chordal graph whose degeneracy is at most the
decomposition width, together with the projection map back to the
original vertices.  Because the preimage of every quotient vertex is an
independent set, walks on the quotient expand step-for-fiber into walks
on the original graph.

`run_pipeline` strings two such quotients together: recolor alpha-merged
and beta-merged instances toward small greedy colorings, expand both to
the original graph, and (optionally) connect the two small colorings by
an exhaustive-search walk.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DisconnectedTrace,
    ImproperInput,
    InvalidQuotientSequence,
    OracleInfeasible,
    RecolorError,
    StateCapExceeded,
    UncoveredEdge,
    UncoveredVertex,
)
from .graphs import Coloring, Graph, greedy_color, is_proper, mcs_peo
from .engine import (
    RecoloringSequence,
    RecoloringStep,
    apply_sequence,
    best_choice_sequence,
    reverse_sequence,
)
from . import oracle as _oracle


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags of vertices arranged on a tree (edges over bag indices)."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @classmethod
    def make(
        cls, bags: Iterable[Iterable[int]], tree_edges: Iterable[tuple[int, int]]
    ) -> "TreeDecomposition":
        return cls(
            tuple(frozenset(b) for b in bags),
            tuple((int(i), int(j)) for i, j in tree_edges),
        )

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _check_tree(td: TreeDecomposition) -> None:
    k = len(td.bags)
    if k == 0:
        raise ValueError("a decomposition needs at least one bag")
    if len(td.tree_edges) != k - 1:
        raise ValueError("tree_edges must form a tree over the bags")
    nbr: list[list[int]] = [[] for _ in range(k)]
    for i, j in td.tree_edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            raise ValueError(f"bad tree edge ({i},{j})")
        nbr[i].append(j)
        nbr[j].append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in nbr[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != k:
        raise ValueError("tree_edges must form a tree over the bags")


def validate_decomposition(g: Graph, td: TreeDecomposition) -> int:
    """Verify the three decomposition conditions and return the width.

    Raises UncoveredVertex, UncoveredEdge or DisconnectedTrace with a
    witness; malformed bag trees raise ValueError.
    """
    _check_tree(td)
    covered: set[int] = set()
    for b in td.bags:
        covered |= b
    for v in range(g.n):
        if v not in covered:
            raise UncoveredVertex(v)
    for u, v in g.edges():
        if not any(u in b and v in b for b in td.bags):
            raise UncoveredEdge((u, v))
    k = len(td.bags)
    nbr: list[list[int]] = [[] for _ in range(k)]
    for i, j in td.tree_edges:
        nbr[i].append(j)
        nbr[j].append(i)
    for v in range(g.n):
        holding = [i for i, b in enumerate(td.bags) if v in b]
        if not holding:
            continue
        seen = {holding[0]}
        queue = deque([holding[0]])
        hold = set(holding)
        while queue:
            i = queue.popleft()
            for j in nbr[i]:
                if j in hold and j not in seen:
                    seen.add(j)
                    queue.append(j)
        if len(seen) != len(holding):
            raise DisconnectedTrace(v)
    return td.width


@dataclass(frozen=True)
class MergeMap:
    """Projection pi from original vertices onto quotient vertices, plus
    the fibers (preimages).  Fibers partition the original vertex set."""

    pi: tuple[int, ...]
    fibers: tuple[frozenset[int], ...]

    @property
    def n_original(self) -> int:
        return len(self.pi)

    @property
    def n_quotient(self) -> int:
        return len(self.fibers)


class MergeResult(NamedTuple):
    graph: Graph
    merge_map: MergeMap
    coloring: Coloring
    decomposition: TreeDecomposition


def merge_by_coloring(g: Graph, td: TreeDecomposition, alpha: Coloring) -> MergeResult:
    """Collapse same-colored vertices sharing a bag, then saturate bags.

    Scans bags in index order and always merges the lowest-id same-color
    pair, repeating until no bag holds two vertices of one color; the
    quotient is then relabeled densely by smallest original member.  Every
    quotient bag is finally completed into a clique.  The projected
    coloring stays proper because only non-adjacent same-colored vertices
    ever merge.
    """
    validate_decomposition(g, td)
    if not is_proper(g, alpha):
        raise ImproperInput("alpha is not proper")
    n = g.n
    root = list(range(n))

    def find(a: int) -> int:
        while root[a] != a:
            root[a] = root[root[a]]
            a = root[a]
        return a

    def bag_classes(b: frozenset[int]) -> list[int]:
        return sorted({find(v) for v in b})

    while True:
        pair = None
        for b in td.bags:
            classes = bag_classes(b)
            by_color: dict[int, list[int]] = {}
            for cl in classes:
                by_color.setdefault(alpha[cl], []).append(cl)
            best = None
            for members in by_color.values():
                if len(members) >= 2:
                    cand = (members[0], members[1])
                    if best is None or cand < best:
                        best = cand
            if best is not None:
                pair = best
                break
        if pair is None:
            break
        a, b2 = pair
        root[b2] = a  # classes keep their smallest original id as root
    reps = sorted({find(v) for v in range(n)})
    index = {rep: i for i, rep in enumerate(reps)}
    pi = tuple(index[find(v)] for v in range(n))
    fibers = [set() for _ in reps]
    for v in range(n):
        fibers[pi[v]].add(v)
    mm = MergeMap(pi, tuple(frozenset(f) for f in fibers))

    edges = set()
    for u, v in g.edges():
        pu, pv = pi[u], pi[v]
        if pu != pv:
            edges.add((min(pu, pv), max(pu, pv)))
    new_bags = []
    for b in td.bags:
        q = sorted({pi[v] for v in b})
        new_bags.append(frozenset(q))
        for i in range(len(q)):
            for j in range(i + 1, len(q)):
                edges.add((q[i], q[j]))
    g2 = Graph(len(reps), edges)
    alpha2 = Coloring([alpha[rep] for rep in reps], alpha.palette_size)
    td2 = TreeDecomposition(tuple(new_bags), td.tree_edges)
    if not is_proper(g2, alpha2):
        raise RecolorError("projected coloring became improper; input was inconsistent")
    return MergeResult(g2, mm, alpha2, td2)


def project_coloring(mm: MergeMap, gamma2: Coloring) -> Coloring:
    """Pull a quotient coloring back to the original vertices."""
    return Coloring([gamma2[mm.pi[v]] for v in range(mm.n_original)], gamma2.palette_size)


def expand_sequence(
    g2: Graph, mm: MergeMap, s2: RecoloringSequence
) -> RecoloringSequence:
    """Turn a walk on the quotient into a walk on the original graph by
    recoloring each fiber member in ascending order.  The quotient walk is
    validated first; fibers are independent sets, so the expanded walk is
    proper at every intermediate point."""
    try:
        apply_sequence(g2, s2)
    except RecolorError as e:
        raise InvalidQuotientSequence(f"quotient sequence invalid: {e}") from e
    steps = []
    for v, c in s2.steps:
        for u in sorted(mm.fibers[v]):
            steps.append(RecoloringStep(u, c))
    return RecoloringSequence(
        tuple(steps), project_coloring(mm, s2.start), s2.palette_size
    )


@dataclass
class PipelineResult:
    """Everything produced by `run_pipeline`.

    alpha_side goes alpha -> gamma1 on the original graph; beta_side goes
    beta -> gamma2.  When the bridge ran, `bridge` holds the gamma1 ->
    gamma2 walk and `composed` the full alpha -> beta sequence (beta side
    reversed); otherwise both are None and bridge_status says why.
    """

    alpha_side: RecoloringSequence
    beta_side: RecoloringSequence
    gamma1: Coloring
    gamma2: Coloring
    bridge: RecoloringSequence | None
    bridge_status: str
    composed: RecoloringSequence | None
    per_vertex: dict[int, int]

    def to_json_dict(self) -> dict:
        from .io import sequence_to_json

        out = {
            "schema_version": 1,
            "bridge_status": self.bridge_status,
            "gamma1": list(self.gamma1.colors),
            "gamma2": list(self.gamma2.colors),
            "alpha_side": sequence_to_json(self.alpha_side),
            "beta_side": sequence_to_json(self.beta_side),
            "bridge": sequence_to_json(self.bridge) if self.bridge else None,
            "composed": sequence_to_json(self.composed) if self.composed else None,
            "per_vertex": {str(v): c for v, c in sorted(self.per_vertex.items())},
        }
        return out


def _half_sequence(
    g: Graph, td: TreeDecomposition, coloring: Coloring, t: int
) -> tuple[RecoloringSequence, Coloring]:
    """Merge by `coloring`, recolor the quotient toward a greedy small
    coloring, and expand back.  Returns the expanded walk and its final
    (projected) coloring."""
    k = td.width
    g2, mm, col2, td2 = merge_by_coloring(g, td, coloring)
    peo = mcs_peo(g2)
    gamma_small = greedy_color(g2, peo, k + 1).with_palette(t)
    s2 = best_choice_sequence(g2, peo, col2.with_palette(t), gamma_small)
    expanded = expand_sequence(g2, mm, s2)
    return expanded, project_coloring(mm, gamma_small)


def run_pipeline(
    g: Graph,
    td: TreeDecomposition,
    alpha: Coloring,
    beta: Coloring,
    t: int,
    bridge: str = "oracle",
    state_cap: int = _oracle.DEFAULT_STATE_CAP,
) -> PipelineResult:
    """Plan an alpha -> beta recoloring on a graph of treewidth k given a
    width-k decomposition and palette t >= 2k+1.

    Both endpoint colorings are pushed, through their own same-color
    quotients, to greedy (k+1)-colorings gamma1 and gamma2.  With
    bridge="oracle" the two are joined by a shortest walk found by
    exhaustive search (OracleInfeasible if t**n exceeds the cap) and the
    full composition is validated to end exactly at beta; with
    bridge="none" the two half-walks are returned on their own.
    """
    k = validate_decomposition(g, td)
    if t < 2 * k + 1:
        raise ValueError(f"palette {t} too small for width {k}; need >= {2 * k + 1}")
    if alpha.palette_size != t:
        alpha = alpha.with_palette(t)
    if beta.palette_size != t:
        beta = beta.with_palette(t)
    if not is_proper(g, alpha) or not is_proper(g, beta):
        raise ImproperInput("endpoint colorings must be proper")
    alpha_side, gamma1 = _half_sequence(g, td, alpha, t)
    beta_side, gamma2 = _half_sequence(g, td, beta, t)

    if bridge == "none":
        per_vertex = {v: 0 for v in range(g.n)}
        for st in alpha_side.steps:
            per_vertex[st.vertex] += 1
        for st in beta_side.steps:
            per_vertex[st.vertex] += 1
        return PipelineResult(
            alpha_side, beta_side, gamma1, gamma2,
            None, "unavailable", None, per_vertex,
        )
    if bridge != "oracle":
        raise ValueError(f"unknown bridge {bridge!r}")
    try:
        mid = _oracle.rt_path(g, t, gamma1, gamma2, state_cap)
    except StateCapExceeded as e:
        raise OracleInfeasible(str(e)) from e
    if mid is None:
        raise OracleInfeasible("no walk between the two greedy colorings")
    composed_steps = (
        alpha_side.steps + mid.steps + reverse_sequence(beta_side).steps
    )
    composed = RecoloringSequence(composed_steps, alpha, t)
    end = apply_sequence(g, composed)
    if end.colors != beta.colors:
        raise RecolorError("composed sequence does not end at beta")
    per_vertex = {v: 0 for v in range(g.n)}
    for st in composed.steps:
        per_vertex[st.vertex] += 1
    return PipelineResult(
        alpha_side, beta_side, gamma1, gamma2,
        mid, "oracle", composed, per_vertex,
    )
