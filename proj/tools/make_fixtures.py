#!/usr/bin/env python3
"""Regenerate the JSON graph fixtures from planar coordinates.

Each fixture is a bipartite graph drawn in a fundamental domain of a period
lattice. Rotations are obtained by sorting dart directions counterclockwise;
h is the lattice translation from the black end to the white copy it touches.
"""
import json
import math
import sys
from fractions import Fraction
from pathlib import Path


def solve2(P, v):
    (a, b), (c, d) = P  # columns: P[0], P[1]
    det = a * d - c * b
    x = (v[0] * d - c * v[1]) / det
    y = (a * v[1] - b * v[0]) / det
    return x, y


def make(vertices, edges, P):
    """vertices: {id: (color, (x, y))}; edges: [(id, black, white, (dx, dy))]
    where (dx, dy) is the displacement from the black vertex to the white copy."""
    rot = {v: [] for v in vertices}
    out_edges = []
    for eid, b, w, disp in edges:
        pb = vertices[b][1]
        pw = vertices[w][1]
        target = (pb[0] + disp[0] - pw[0], pb[1] + disp[1] - pw[1])
        hx, hy = solve2(P, target)
        h = (round(hx), round(hy))
        assert abs(hx - h[0]) < 1e-9 and abs(hy - h[1]) < 1e-9, (eid, hx, hy)
        out_edges.append({"id": eid, "black": b, "white": w, "h": list(h)})
        rot[b].append((math.atan2(disp[1], disp[0]), eid))
        rot[w].append((math.atan2(-disp[1], -disp[0]), eid))
    rotations = {v: [e for _, e in sorted(rot[v])] for v in vertices}
    return {
        "vertices": [{"id": v, "color": c} for v, (c, _) in vertices.items()],
        "edges": out_edges,
        "rotations": rotations,
    }


def toda():
    L = 3.0
    V = {"B1": ("b", (1.5, 0.0)), "B2": ("b", (0.0, 1.5)),
         "W0": ("w", (0.0, 0.0)), "W1": ("w", (1.5, 1.5))}
    E = [("e1", "B1", "W0", (-1.5, 0)), ("e2", "B1", "W0", (1.5, 0)),
         ("e3", "B2", "W1", (1.5, 0)), ("e4", "B2", "W1", (-1.5, 0)),
         ("e5", "B2", "W0", (0, -1.5)), ("e6", "B2", "W0", (0, 1.5)),
         ("e7", "B1", "W1", (0, 1.5)), ("e8", "B1", "W1", (0, -1.5))]
    return make(V, E, ((L, 0), (0, L)))


def honeycomb(M):
    """Honeycomb lattice modulo the sublattice spanned by the columns of M
    (integer coordinates in the triangular basis u, v)."""
    u = (1.0, 0.0)
    v = (0.5, math.sqrt(3) / 2)

    def pt(i, j):
        return (i * u[0] + j * v[0], i * u[1] + j * v[1])

    (m11, m12), (m21, m22) = M
    det = m11 * m22 - m12 * m21
    n = abs(det)
    # coset representatives of Z^2 / M Z^2
    reps = []
    seen = set()

    def reduce(i, j):
        # coordinates in basis M, fractional part
        a = Fraction(i * m22 - j * m12, det)
        b = Fraction(-i * m21 + j * m11, det)
        return (a - math.floor(a), b - math.floor(b))

    R = 3 * n
    for i in range(-R, R + 1):
        for j in range(-R, R + 1):
            key = reduce(i, j)
            if key in seen:
                continue
            seen.add(key)
            reps.append((i, j))
    assert len(reps) == n
    reps.sort(key=lambda p: (p[0] + p[1], p[0]))
    P = (pt(m11, m21), pt(m12, m22))
    off = ((u[0] + v[0]) / 3, (u[1] + v[1]) / 3)
    V = {}
    for k, (i, j) in enumerate(reps):
        p = pt(i, j)
        V[f"b{k}"] = ("b", p)
        V[f"w{k}"] = ("w", (p[0] + off[0], p[1] + off[1]))
    idx = {reduce(i, j): k for k, (i, j) in enumerate(reps)}
    E = []
    c = 0
    for k, (i, j) in enumerate(reps):
        for di, dj in ((0, 0), (-1, 0), (0, -1)):
            wk = idx[reduce(i + di, j + dj)]
            q = pt(i + di, j + dj)
            disp = (q[0] + off[0] - pt(i, j)[0], q[1] + off[1] - pt(i, j)[1])
            E.append((f"e{c}", f"b{k}", f"w{wk}", disp))
            c += 1
    return make(V, E, P)


FIXTURES = {
    "toda.json": toda,
    "honeycomb.json": lambda: honeycomb(((1, 0), (0, 1))),
    "dp0.json": lambda: honeycomb(((1, -1), (1, 2))),
    "hex6.json": lambda: honeycomb(((2, 0), (0, 3))),
}


def dump(g):
    return json.dumps(g, indent=2) + "\n"


if __name__ == "__main__":
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, fn in FIXTURES.items():
        (outdir / name).write_text(dump(fn()))
