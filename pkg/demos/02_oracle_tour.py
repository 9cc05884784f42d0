"""Exact answers at small scale: counting, connectivity, diameter.

The oracle enumerates every proper coloring and walks the graph whose
vertices are colorings and whose edges are single-vertex color changes.
Small palettes freeze things; one extra color usually melts them.
"""

from recolor import Graph, enumerate_colorings, frozen_states, rt_connected, rt_diameter


def describe(name, g, t):
    count = enumerate_colorings(g, t)
    connected = rt_connected(g, t)
    diam = rt_diameter(g, t)
    frozen = len(frozen_states(g, t))
    print(f"{name}, {t} colors:")
    print(f"  proper colorings : {count}")
    print(f"  all reachable    : {connected}")
    print(f"  diameter         : {diam}")
    if frozen:
        print(f"  frozen colorings : {frozen} (no single move is possible)")
    print()


def main():
    edge = Graph(2, [(0, 1)])
    path3 = Graph(3, [(0, 1), (1, 2)])
    triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])

    describe("single edge", edge, 3)
    describe("path on 3 vertices", path3, 3)

    # With exactly as many colors as the clique needs, every coloring of a
    # triangle is stuck: each vertex sees both other colors.
    describe("triangle", triangle, 3)
    describe("triangle", triangle, 4)


if __name__ == "__main__":
    main()
