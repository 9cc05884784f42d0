"""Readers and writers for the on-disk formats.

Graphs travel either as plain text ("n m" header then one "u v" line per
edge, 0-based) or as JSON {"n": ..., "adj": [[...], ...]}.  Colorings are
JSON arrays of 1-based colors.  Decompositions are {"bags": [[...], ...],
"tree_edges": [[i, j], ...]}.  Sequences are {"palette": t, "start":
[...], "steps": [[vertex, color], ...]}.

`read_graph` sniffs the format and also accepts a generator bundle (a
JSON object with a "graph" key), so files written by `recolor gen` can be
fed straight back into the other subcommands.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidParams
from .graphs import Coloring, EliminationOrdering, Graph
from .engine import RecoloringSequence, RecoloringStep
from .treewidth import TreeDecomposition


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise InvalidParams("graph text needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    nums = tokens[2:]
    if len(nums) != 2 * m:
        raise InvalidParams(f"expected {m} edges, found {len(nums) // 2}")
    edges = [(int(nums[2 * i]), int(nums[2 * i + 1])) for i in range(m)]
    return Graph(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "adj": [sorted(s) for s in g.adj]}


def graph_from_json(obj: dict) -> Graph:
    n = int(obj["n"])
    if "adj" in obj:
        edges = [(u, int(v)) for u, nbrs in enumerate(obj["adj"]) for v in nbrs]
    elif "edges" in obj:
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    else:
        raise InvalidParams("graph JSON needs 'adj' or 'edges'")
    return Graph(n, edges)


def read_graph(path: str | Path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "graph" in obj:
            obj = obj["graph"]
        return graph_from_json(obj)
    return graph_from_text(text)


def write_graph(path: str | Path, g: Graph, fmt: str = "json") -> None:
    if fmt == "text":
        Path(path).write_text(graph_to_text(g))
    else:
        Path(path).write_text(json.dumps(graph_to_json(g), indent=1) + "\n")


def coloring_to_json(c: Coloring) -> list[int]:
    return list(c.colors)


def read_coloring(path: str | Path, palette: int) -> Coloring:
    obj = json.loads(Path(path).read_text())
    if not isinstance(obj, list):
        raise InvalidParams("a coloring file must hold a JSON array")
    return Coloring([int(x) for x in obj], palette)


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_text(json.dumps(coloring_to_json(c)) + "\n")


def decomposition_to_json(td: TreeDecomposition) -> dict:
    return {
        "bags": [sorted(b) for b in td.bags],
        "tree_edges": [list(e) for e in td.tree_edges],
    }


def decomposition_from_json(obj: dict) -> TreeDecomposition:
    return TreeDecomposition.make(obj["bags"], [tuple(e) for e in obj["tree_edges"]])


def read_decomposition(path: str | Path) -> TreeDecomposition:
    obj = json.loads(Path(path).read_text())
    if "decomposition" in obj:
        obj = obj["decomposition"]
    return decomposition_from_json(obj)


def ordering_to_json(ordering: EliminationOrdering) -> dict:
    return {"order": list(ordering.order), "perfect": ordering.perfect}


def read_ordering(path: str | Path, g: Graph) -> EliminationOrdering:
    obj = json.loads(Path(path).read_text())
    if isinstance(obj, dict):
        if "ordering" in obj:
            obj = obj["ordering"]
        order = obj["order"] if isinstance(obj, dict) else obj
    else:
        order = obj
    return EliminationOrdering.from_order(g, [int(v) for v in order])


def sequence_to_json(s: RecoloringSequence) -> dict:
    return {
        "palette": s.palette_size,
        "start": list(s.start.colors),
        "steps": [[st.vertex, st.new_color] for st in s.steps],
    }


def sequence_from_json(obj: dict) -> RecoloringSequence:
    palette = int(obj["palette"])
    start = Coloring([int(c) for c in obj["start"]], palette)
    steps = tuple(RecoloringStep(int(v), int(c)) for v, c in obj["steps"])
    return RecoloringSequence(steps, start, palette)


def read_sequence(path: str | Path) -> RecoloringSequence:
    return sequence_from_json(json.loads(Path(path).read_text()))


def write_sequence(path: str | Path, s: RecoloringSequence) -> None:
    Path(path).write_text(json.dumps(sequence_to_json(s), indent=1) + "\n")


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(json.dumps(obj, indent=1, sort_keys=False) + "\n")
