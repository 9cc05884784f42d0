"""A first walk: recolor a three-vertex path step by step.

Builds the path 0-1-2, asks for a recoloring from (1,2,1) to (2,1,2)
with three colors, prints every intermediate coloring, and compares the
walk's length against the exact shortest walk found by exhaustive search.
"""

from recolor import (
    Coloring,
    Graph,
    apply_sequence,
    best_choice_sequence,
    mcs_peo,
    rt_distance,
    rt_path,
)


def main():
    g = Graph(3, [(0, 1), (1, 2)])
    ordering = mcs_peo(g)
    print(f"graph: path on 3 vertices, elimination order {ordering.order}")

    alpha = Coloring((1, 2, 1), 3)
    beta = Coloring((2, 1, 2), 3)
    print(f"from {alpha.colors} to {beta.colors} with palette 1..3\n")

    s = best_choice_sequence(g, ordering, alpha, beta)
    colors = list(alpha.colors)
    print(f"  start   {tuple(colors)}")
    for step in s.steps:
        colors[step.vertex] = step.new_color
        print(f"  vertex {step.vertex} -> color {step.new_color}   {tuple(colors)}")
    end = apply_sequence(g, s)
    assert end.colors == beta.colors

    dist = rt_distance(g, 3, alpha, beta)
    print(f"\nconstructed walk: {len(s)} steps; exhaustive shortest: {dist} steps")

    shortest = rt_path(g, 3, alpha, beta)
    print(f"one shortest walk: {[(st.vertex, st.new_color) for st in shortest.steps]}")


if __name__ == "__main__":
    main()
