#!/usr/bin/env python3
"""Writes the graph documents in corpus/ from straight-line drawings.

Each instance is given by vertex coordinates (y up), an edge list and the
outer face walk. Rotations are the clockwise angular order of neighbours.
"""

import json
import math
import sys
from pathlib import Path


def document(coords, edges, outer):
    nbrs = {v: [] for v in coords}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)

    def clockwise(v):
        x0, y0 = coords[v]
        return sorted(nbrs[v], key=lambda w: -math.atan2(coords[w][1] - y0, coords[w][0] - x0))

    vertices = sorted(coords)
    return {
        "vertices": vertices,
        "rotation": {str(v): clockwise(v) for v in vertices},
        "outer_face": outer,
    }


def circle(ids, radius=4.0, start=90.0):
    step = 360.0 / len(ids)
    return {
        v: (radius * math.cos(math.radians(start - i * step)), radius * math.sin(math.radians(start - i * step)))
        for i, v in enumerate(ids)
    }


def centroid(coords, ids):
    return (sum(coords[v][0] for v in ids) / len(ids), sum(coords[v][1] for v in ids) / len(ids))


def cycle_edges(ids):
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def instances():
    out = {}
    out["single_vertex"] = document({1: (0, 0)}, [], [1])
    out["single_edge"] = document({1: (0, 0), 2: (1, 0)}, [(1, 2)], [1, 2])
    out["triangle"] = document({1: (-1, 0), 2: (0, 1), 3: (1, 0)}, [(1, 2), (2, 3), (3, 1)], [1, 2, 3])
    out["diamond"] = document(
        {1: (-1, 0), 2: (0, 1), 3: (1, 0), 4: (0, -1)},
        [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)],
        [1, 2, 3, 4],
    )
    out["k4"] = document(
        {1: (-2, -1), 2: (0, 2), 3: (2, -1), 4: (0, 0)},
        [(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)],
        [1, 2, 3],
    )

    c = {1: (-3, 3), 2: (3, 3), 3: (0, -3), 4: (0, 1), 5: (1, -0.5), 6: (-1, -0.5)}
    e = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)]
    out["octahedron"] = document(c, e, [1, 2, 3])
    out["octahedron_open"] = document(c, [x for x in e if x != (3, 1)], [1, 2, 3, 6])

    # three triangles in a row; the middle one has both cut vertices on an exterior edge
    c = {1: (-2, 1), 2: (-2, -1), 4: (-1, 0), 5: (0, 1), 6: (1, 0), 7: (2, 1), 8: (2, -1)}
    e = [(1, 2), (2, 4), (4, 1), (4, 5), (5, 6), (6, 4), (6, 7), (7, 8), (8, 6)]
    out["fig3"] = document(c, e, [1, 4, 5, 6, 7, 8, 6, 4, 2])

    # 9-cycle with chords (1,3), (4,9), (6,8), two interior vertices
    c = circle(list(range(1, 10)))
    c[10] = centroid(c, [1, 3, 4, 9])
    c[11] = centroid(c, [4, 5, 6, 8, 9])
    e = cycle_edges(list(range(1, 10))) + [(1, 3), (4, 9), (6, 8)]
    e += [(10, v) for v in (1, 3, 4, 9)] + [(11, v) for v in (4, 5, 6, 8, 9)]
    out["fig4"] = document(c, e, list(range(1, 10)))

    # two separating triangles 4-6-7 and 4-8-7 sharing the edge (4,7)
    c = {4: (-2, 0), 6: (0, 2), 7: (2, 0), 8: (0, -2), 5: (0, 0.7), 9: (0, -0.7)}
    e = cycle_edges([4, 6, 7, 8]) + [(4, 7), (5, 4), (5, 6), (5, 7), (9, 4), (9, 8), (9, 7)]
    out["nested_triangles"] = document(c, e, [4, 6, 7, 8])

    # triangle, diamond, triangle in a row; cut vertices 4 and 6 are opposite in the diamond
    c = {1: (-3, 1), 2: (-3, -1), 4: (-2, 0), 5: (0, 1), 7: (0, -1), 6: (2, 0), 8: (3, 1), 9: (3, -1)}
    e = [(1, 2), (2, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 4), (5, 7), (6, 8), (8, 9), (9, 6)]
    out["fig10_chain"] = document(c, e, [1, 4, 5, 6, 8, 9, 6, 7, 4, 2])

    # three triangles sharing vertex 1: the block graph is a cycle
    c = {1: (0, 0), 2: (-1, 2), 3: (1, 2), 4: (2, -1), 5: (1, -2), 6: (-1, -2), 7: (-2, -1)}
    e = [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1), (1, 6), (6, 7), (7, 1)]
    out["fig10_cycle"] = document(c, e, [1, 2, 3, 1, 4, 5, 1, 6, 7])

    # central triangle with a pendant triangle at each corner: the block graph is a star
    c = {1: (-1, 0), 2: (0, 1.5), 3: (1, 0), 4: (-2, 1), 5: (-2, -1), 6: (-1, 3), 7: (1, 3), 8: (2, -1), 9: (2, 1)}
    e = [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1), (2, 6), (6, 7), (7, 2), (3, 8), (8, 9), (9, 3)]
    out["fig11_star"] = document(c, e, [4, 1, 2, 6, 7, 2, 3, 9, 8, 3, 1, 5])

    # pentagon with a bump on every side: five critical shortcuts
    inner = circle([1, 2, 3, 4, 5], radius=2.0)
    c = dict(inner)
    outer = []
    for i in range(1, 6):
        j = i % 5 + 1
        b = 5 + i
        mid = centroid(inner, [i, j])
        c[b] = (mid[0] * 2.0, mid[1] * 2.0)
        outer += [i, b]
    c[11] = (0.0, 0.0)
    e = cycle_edges([1, 2, 3, 4, 5]) + [(v, 11) for v in range(1, 6)]
    e += [(i, 5 + i) for i in range(1, 6)] + [(5 + i, i % 5 + 1) for i in range(1, 6)]
    out["pentagon_bumps"] = document(c, e, outer)

    # two diamonds glued at a shortcut endpoint
    c = {1: (-2, 1), 2: (-3, 0), 3: (-2, -1), 4: (0, 0), 5: (2, 1), 6: (3, 0), 7: (2, -1)}
    e = cycle_edges([1, 4, 3, 2]) + [(2, 4)] + cycle_edges([4, 5, 6, 7]) + [(4, 6)]
    out["two_diamonds"] = document(c, e, [1, 4, 5, 6, 7, 4, 3, 2])
    return out


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    target.mkdir(parents=True, exist_ok=True)
    for name, doc in instances().items():
        (target / f"{name}.graph").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
