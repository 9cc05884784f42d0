"""Structural analysis of recoloring sequences.

Everything here is a pure function of the sequence (usually of its
restriction to a small vertex set), so detectors can be re-run on stored
sequences without the graph state that produced them.  Indices returned
by the detectors are positions inside the restriction they are defined
over, not inside the full sequence, unless said otherwise.

Conventions for a vertex v with earlier-neighbor set B, d = |B|:
  * restriction to B ∪ {v}: the subsequence of steps recoloring those
    vertices, with the start coloring kept whole for replaying colors;
  * a recoloring of v is "tight" when exactly d steps separate it from
    the next recoloring of v inside that restriction;
  * a step recoloring a member of B is "saved" when it provably cannot
    force an extra recoloring of v (three disjunctive conditions below);
  * the budget inequality bounds v's recoloring count by the saved-
    adjusted count of its earlier neighbors' recolorings.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import NotAClique, WrongSize
from .graphs import Coloring, EliminationOrdering, Graph
from .engine import RecoloringSequence, RecoloringStep


def restrict(s: RecoloringSequence, x: Iterable[int]) -> RecoloringSequence:
    """Subsequence of steps recoloring vertices of x.

    The start coloring is kept in full so member colors can still be
    replayed; restrictions are analysis objects, not replayable walks.
    """
    keep = set(x)
    steps = tuple(st for st in s.steps if st.vertex in keep)
    return RecoloringSequence(steps, s.start, s.palette_size)


def count_pattern(s: RecoloringSequence, pattern: Sequence[int]) -> int:
    """Occurrences of `pattern` in the step-vertex word, overlaps counted."""
    word = [st.vertex for st in s.steps]
    p = list(pattern)
    if not p or len(p) > len(word):
        return 0
    return sum(1 for i in range(len(word) - len(p) + 1) if word[i : i + len(p)] == p)


def caused_by(g: Graph, s: RecoloringSequence, i: int) -> int | None:
    """The vertex whose upcoming move forced step i, or None.

    Step i recoloring u is caused by w when the very next step recolors a
    neighbor w of u to the color u held just before step i.  Closing
    steps (nothing relevant after them) return None.
    """
    steps = s.steps
    u = steps[i].vertex
    if i + 1 >= len(steps):
        return None
    w, c2 = steps[i + 1]
    if w not in g.adj[u]:
        return None
    pre = s.start[u]
    for st in steps[:i]:
        if st.vertex == u:
            pre = st.new_color
    return w if c2 == pre else None


def per_vertex_counts(s: RecoloringSequence) -> dict[int, int]:
    """How many times each vertex (including untouched ones) is recolored."""
    counts = {v: 0 for v in range(len(s.start))}
    for st in s.steps:
        counts[st.vertex] += 1
    return counts


# ---------------------------------------------------------------------------
# per-vertex detectors over the restriction to B ∪ {v}


def _steps_by_vertex(s: RecoloringSequence) -> dict[int, list[tuple[int, int]]]:
    by: dict[int, list[tuple[int, int]]] = {}
    for i, (v, c) in enumerate(s.steps):
        by.setdefault(v, []).append((i, c))
    return by


def _restriction_steps(
    by: dict[int, list[tuple[int, int]]], members: Iterable[int]
) -> list[RecoloringStep]:
    merged: list[tuple[int, int, int]] = []
    for v in members:
        merged.extend((i, v, c) for i, c in by.get(v, ()))
    merged.sort()
    return [RecoloringStep(v, c) for _, v, c in merged]


def _v_positions(rsteps: Sequence[RecoloringStep], v: int) -> list[int]:
    return [i for i, st in enumerate(rsteps) if st.vertex == v]


def _tight(rsteps: Sequence[RecoloringStep], v: int, d: int) -> list[int]:
    pos = _v_positions(rsteps, v)
    return [pos[j] for j in range(len(pos) - 1) if pos[j + 1] - pos[j] - 1 == d]


def tight_recolorings(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering, v: int
) -> list[int]:
    """Positions (inside the restriction to earlier neighbors plus v) of
    recolorings of v followed by the next one after exactly d other steps,
    d being v's back-degree.  The last recoloring of v is never tight."""
    b = ordering.back_nbrs[v]
    rsteps = _restriction_steps(_steps_by_vertex(s), (*b, v))
    return _tight(rsteps, v, len(b))


def _saved(rsteps: Sequence[RecoloringStep], v: int, d: int) -> list[int]:
    pos = _v_positions(rsteps, v)
    m = len(rsteps)
    saved = []
    for i, st in enumerate(rsteps):
        if st.vertex == v:
            continue
        before = bisect_right(pos, i)  # recolorings of v at positions <= i
        if before == 0:
            saved.append(i)
            continue
        if pos[-1] < i:
            saved.append(i)
            continue
        lo = max(0, i - d)
        k = bisect_left(pos, lo)
        if k >= len(pos) or pos[k] >= i:
            saved.append(i)
    return saved


def saved_steps(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering, v: int
) -> tuple[list[int], int]:
    """Steps of v's earlier neighbors that cannot be charged a recoloring
    of v: v untouched up to them, or untouched from them on, or untouched
    in the d steps just before them (window clamped at the start).

    Returns (positions inside the restriction, their count r).
    """
    b = ordering.back_nbrs[v]
    rsteps = _restriction_steps(_steps_by_vertex(s), (*b, v))
    idx = _saved(rsteps, v, len(b))
    return idx, len(idx)


class SaveInequalityResult(NamedTuple):
    passed: bool
    count_v: int
    kappa: int  # total recolorings of earlier neighbors
    r: int  # saved among them
    d: int
    bound: int


def _save_inequality(
    rsteps: Sequence[RecoloringStep], v: int, d: int
) -> SaveInequalityResult:
    count_v = sum(1 for st in rsteps if st.vertex == v)
    kappa = len(rsteps) - count_v
    if d == 0:
        return SaveInequalityResult(count_v <= 1, count_v, kappa, 0, 0, 1)
    r = len(_saved(rsteps, v, d))
    bound = 1 + -((-(kappa - r)) // d)  # 1 + ceil((kappa - r) / d)
    return SaveInequalityResult(count_v <= bound, count_v, kappa, r, d, bound)


def check_save_inequality(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering, v: int
) -> SaveInequalityResult:
    """Budget check: v is recolored at most 1 + ceil((kappa - r) / d) times,
    where kappa counts its earlier neighbors' recolorings and r the saved
    ones among them.  With no earlier neighbors the bound is simply 1.

    Like the spacing check, this is a guarantee of the construction only
    when the palette has at least 2d+1 colors."""
    b = ordering.back_nbrs[v]
    rsteps = _restriction_steps(_steps_by_vertex(s), (*b, v))
    return _save_inequality(rsteps, v, len(b))


@dataclass(frozen=True)
class Violation:
    check: str
    vertex: int | None
    indices: tuple[int, ...]
    note: str


def _revisit_spacing(
    rsteps: Sequence[RecoloringStep], v: int, d: int
) -> list[Violation]:
    pos = _v_positions(rsteps, v)
    out = []
    for j in range(len(pos) - 1):
        gap = pos[j + 1] - pos[j] - 1
        if gap == 0:
            out.append(
                Violation(
                    "revisit-spacing", v, (pos[j], pos[j + 1]),
                    "vertex recolored twice in a row",
                )
            )
        elif gap <= d - 1 and pos[j + 1] != pos[-1]:
            out.append(
                Violation(
                    "revisit-spacing", v, (pos[j], pos[j + 1]),
                    f"revisit after only {gap} steps before a later recoloring",
                )
            )
    return out


def check_revisit_spacing(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering
) -> list[Violation]:
    """No vertex is ever recolored twice in a row within its restriction,
    and a revisit after fewer than d intervening steps may only happen at
    the vertex's last recoloring.

    This is guaranteed for constructed sequences once the palette holds at
    least 2d+1 colors for the vertex's back-degree d; below that the
    flagged patterns can legitimately occur."""
    by = _steps_by_vertex(s)
    out = []
    for v in range(g.n):
        b = ordering.back_nbrs[v]
        rsteps = _restriction_steps(by, (*b, v))
        out.extend(_revisit_spacing(rsteps, v, len(b)))
    return out


def _causation(
    rsteps: Sequence[RecoloringStep], start: Coloring, v: int, bset: frozenset[int]
) -> list[Violation]:
    pos = _v_positions(rsteps, v)
    out = []
    color = start[v]
    for j, p in enumerate(pos):
        if j < len(pos) - 1:
            nxt = rsteps[p + 1] if p + 1 < len(rsteps) else None
            if nxt is None or nxt.vertex not in bset or nxt.new_color != color:
                out.append(
                    Violation(
                        "causation", v, (p,),
                        "non-final recoloring not forced by the following step",
                    )
                )
        color = rsteps[p].new_color
    return out


def check_causation(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering
) -> list[Violation]:
    """Every recoloring of v except its last must be immediately followed,
    inside v's restriction, by an earlier neighbor taking v's old color."""
    by = _steps_by_vertex(s)
    out = []
    for v in range(g.n):
        b = ordering.back_nbrs[v]
        rsteps = _restriction_steps(by, (*b, v))
        out.extend(_causation(rsteps, s.start, v, frozenset(b)))
    return out


def _tight_palette_coverage(
    rsteps: Sequence[RecoloringStep],
    start: Coloring,
    v: int,
    back: Sequence[int],
    t: int,
) -> list[Violation]:
    d = len(back)
    pos = _v_positions(rsteps, v)
    m = len(rsteps)
    want = {
        pos[j]
        for j in range(len(pos) - 1)
        if pos[j + 1] - pos[j] - 1 == d and pos[j + 1] != m - 1
    }
    if not want:
        return []
    full = set(range(1, t + 1))
    cur = {w: start[w] for w in (*back, v)}
    out = []
    snapshots: dict[int, tuple[int, list[int]]] = {}
    for i, (w, c) in enumerate(rsteps):
        if i in want:
            snapshots[i] = (cur[v], [cur[u] for u in back])
        cur[w] = c
    for p in sorted(want):
        c0, cs = snapshots[p]
        gap_new = [rsteps[k].new_color for k in range(p + 1, p + 1 + d)]
        covered = {c0, rsteps[p].new_color, *cs, *gap_new}
        if covered != full:
            missing = sorted(full - covered)
            out.append(
                Violation(
                    "tight-coverage", v, (p,),
                    f"colors {missing} unused around a tight recoloring",
                )
            )
    return out


def check_tight_palette_coverage(
    s: RecoloringSequence, g: Graph, ordering: EliminationOrdering, v: int
) -> list[Violation]:
    """With palette exactly 2d+1 (d = v's back-degree), every tight
    recoloring of v must see the whole palette: v's color before and
    after, its earlier neighbors' colors before, and the d intervening
    new colors together cover {1..2d+1}.

    The one exception is a tight recoloring whose follower is the very
    last step of the restriction, where the final move is a free choice.
    """
    back = ordering.back_nbrs[v]
    d = len(back)
    if s.palette_size != 2 * d + 1:
        raise ValueError(
            f"coverage check needs palette 2d+1 = {2 * d + 1}, got {s.palette_size}"
        )
    rsteps = _restriction_steps(_steps_by_vertex(s), (*back, v))
    return _tight_palette_coverage(rsteps, s.start, v, back, s.palette_size)


def rotating_recolorings(s: RecoloringSequence, x: int) -> list[int]:
    """Step indices (in s) of recolorings of x whose color three moves
    later returns to the color held just before: with color history
    x_0, x_1, ..., the j-th recoloring is rotating iff x_{j+2} = x_{j-1}.
    Recolorings lacking two successors are never rotating."""
    positions = [i for i, st in enumerate(s.steps) if st.vertex == x]
    hist = [s.start[x]] + [s.steps[i].new_color for i in positions]
    q = len(positions)
    return [positions[j - 1] for j in range(1, q + 1) if j + 2 <= q and hist[j + 2] == hist[j - 1]]


def naughty_recolorings(
    s: RecoloringSequence,
    g: Graph,
    alpha: Coloring | None,
    clique_x: Iterable[int],
    d: int | None = None,
    w1: int | None = None,
    w2: int | None = None,
) -> list[int]:
    """Positions, inside the restriction to a (d-1)-clique X, of steps that
    are both color-avoiding and causation-free:

      1. at least three palette colors appear neither among X's colors
         just before the step nor among the next w1 steps' new colors;
      2. none of the following w2 steps is forced by its successor
         (successor's new color equals that step's vertex's old color).

    Windows default to w1 = 3d+4 and w2 = 3d-4 and are clamped at the
    tail.  X's colors are replayed from `alpha` (default: s.start).
    """
    xs = sorted(set(clique_x))
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if xs[j] not in g.adj[xs[i]]:
                raise NotAClique(xs, (xs[i], xs[j]))
    if d is None:
        d = len(xs) + 1
    elif len(xs) != d - 1:
        raise WrongSize(f"expected a clique of size {d - 1}, got {len(xs)}")
    if w1 is None:
        w1 = 3 * d + 4
    if w2 is None:
        w2 = 3 * d - 4
    base = alpha if alpha is not None else s.start
    t = s.palette_size
    keep = set(xs)
    rsteps = [st for st in s.steps if st.vertex in keep]
    m = len(rsteps)
    cur = {x: base[x] for x in xs}
    pre_colors: list[frozenset[int]] = []
    pre_own: list[int] = []
    for w, c in rsteps:
        pre_colors.append(frozenset(cur.values()))
        pre_own.append(cur[w])
        cur[w] = c
    palette = set(range(1, t + 1))
    out = []
    for i in range(m):
        window_new = {rsteps[k].new_color for k in range(i + 1, min(m, i + w1 + 1))}
        if len(palette - pre_colors[i] - window_new) < 3:
            continue
        caused = False
        for j in range(i + 1, min(m - 2, i + w2) + 1):
            if rsteps[j + 1].new_color == pre_own[j]:
                caused = True
                break
        if not caused:
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# aggregate report


@dataclass
class AnalysisReport:
    n: int
    palette: int
    max_back_degree: int
    length: int
    per_vertex: dict[int, int]
    max_count: int
    violations: list[Violation] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "palette": self.palette,
            "max_back_degree": self.max_back_degree,
            "length": self.length,
            "max_count": self.max_count,
            "per_vertex": {str(v): c for v, c in sorted(self.per_vertex.items())},
            "passed": self.passed,
            "violations": [
                {
                    "check": w.check,
                    "vertex": w.vertex,
                    "indices": list(w.indices),
                    "note": w.note,
                }
                for w in self.violations
            ],
            "stats": self.stats,
        }


def analyze_sequence(
    g: Graph,
    ordering: EliminationOrdering,
    s: RecoloringSequence,
    coverage: str = "auto",
    causation: bool = True,
    naughty_cliques: Sequence[Iterable[int]] | None = None,
) -> AnalysisReport:
    """Run every applicable structural check over one sequence.

    Checks whose guarantee needs palette headroom (spacing, the save
    budget) are applied per vertex only when t >= 2d+1 for that vertex's
    back-degree d, so reported violations are genuine at any palette.
    `coverage` is "auto" (palette-coverage check on max-back-degree
    vertices whenever the palette is exactly 2d+1), "on" (check every
    vertex whose back-degree d satisfies palette = 2d+1) or "off".
    """
    by = _steps_by_vertex(s)
    counts = per_vertex_counts(s)
    dmax = ordering.max_back_degree
    t = s.palette_size
    violations: list[Violation] = []
    tight_total = 0
    saved_total = 0
    rotating_total = 0
    for v in range(g.n):
        back = ordering.back_nbrs[v]
        d = len(back)
        rsteps = _restriction_steps(by, (*back, v))
        tight_total += len(_tight(rsteps, v, d))
        if causation:
            violations.extend(_causation(rsteps, s.start, v, frozenset(back)))
        # The spacing and budget guarantees hold once the palette leaves
        # room beside the back-clique: t >= 2d+1 for this vertex's d.
        if t >= 2 * d + 1:
            violations.extend(_revisit_spacing(rsteps, v, d))
            res = _save_inequality(rsteps, v, d)
            saved_total += res.r
            if not res.passed:
                violations.append(
                    Violation(
                        "save-inequality", v, (),
                        f"{res.count_v} recolorings exceed bound {res.bound} "
                        f"(kappa={res.kappa}, r={res.r}, d={res.d})",
                    )
                )
        do_cover = coverage == "on" or (
            coverage == "auto" and d == dmax and t == 2 * dmax + 1
        )
        if do_cover and t == 2 * d + 1:
            violations.extend(_tight_palette_coverage(rsteps, s.start, v, back, t))
        own = by.get(v, [])
        if len(own) >= 3:
            hist = [s.start[v]] + [c for _, c in own]
            q = len(own)
            rotating_total += sum(
                1 for j in range(1, q - 1) if hist[j + 2] == hist[j - 1]
            )
    stats = {
        "tight": tight_total,
        "saved": saved_total,
        "rotating": rotating_total,
    }
    if naughty_cliques is not None:
        naughty_counts = [
            len(naughty_recolorings(s, g, None, x)) for x in naughty_cliques
        ]
        stats["naughty_max"] = max(naughty_counts, default=0)
        stats["naughty_cliques"] = len(naughty_counts)
    return AnalysisReport(
        n=g.n,
        palette=t,
        max_back_degree=dmax,
        length=len(s.steps),
        per_vertex=counts,
        max_count=max(counts.values(), default=0),
        violations=violations,
        stats=stats,
    )
