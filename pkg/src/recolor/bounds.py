"""Closed-form budgets the construction is guaranteed to respect.

All three are deliberately loose worst-case ceilings; observed counts on
random instances sit far below them.
"""

from __future__ import annotations


def per_vertex_bound(d: int) -> int:
    """Maximum recolorings of any single vertex, in terms of the
    degeneracy d of the input graph (palette size 2d+1 or larger)."""
    if d < 1:
        raise ValueError("degeneracy must be at least 1")
    return (2**18) * d**7


def naughty_threshold(d: int) -> int:
    """Largest number of color-avoiding, causation-free recolorings a
    (d-1)-clique can witness before the per-vertex budget would break."""
    return (d - 1) * per_vertex_bound(d) - 160 * d**3 - 1


def pipeline_bound(k: int) -> int:
    """Per-vertex recoloring ceiling for the two-sided construction on
    graphs of treewidth k: one budget per side plus the two closing moves."""
    return 2 * per_vertex_bound(k) + 2
