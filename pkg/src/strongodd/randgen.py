"""Seeded random instances: trees, unicyclic graphs, general graphs,
and embedded planar graphs (stacked triangulations with optional edge
deletions).  Everything is deterministic given the seed."""

from __future__ import annotations

import random
from .graphs import Graph
from .planemaps import PlaneMultigraph, from_neighbor_rotations


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random recursive tree: each vertex attaches to an earlier one."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_odd_tree(n_grows: int, rng: random.Random) -> Graph:
    """Tree with all degrees odd: start from an edge and repeatedly hang
    two leaves on a random vertex (which keeps every degree odd)."""
    edges = [(0, 1)]
    n = 2
    for _ in range(n_grows):
        v = rng.randrange(n)
        edges.append((v, n))
        edges.append((v, n + 1))
        n += 2
    return Graph.from_edges(n, edges)


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Random tree plus one extra edge (connected, exactly one cycle)."""
    if n < 3:
        raise ValueError("need at least three vertices")
    while True:
        t = random_tree(n, rng)
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not t.has_edge(u, v)
        ]
        if non_edges:
            extra = rng.choice(non_edges)
            return Graph(n, t.edges | {extra})


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_triangulation(n: int, rng: random.Random) -> PlaneMultigraph:
    """Stacked triangulation: grow from a triangle by planting each new
    vertex inside a random triangular face, joined to its three corners."""
    if n < 3:
        raise ValueError("triangulation needs at least three vertices")
    # clockwise neighbor lists and the current face triples (walk order)
    rot = [[2, 1], [0, 2], [1, 0]]
    faces = [(0, 1, 2), (0, 2, 1)]
    for w in range(3, n):
        fi = rng.randrange(len(faces))
        a, b, c = faces.pop(fi)
        # new darts hug the removed corners: after the reversal of the
        # face dart arriving at each corner
        rot[b].insert(rot[b].index(a) + 1, w)
        rot[c].insert(rot[c].index(b) + 1, w)
        rot[a].insert(rot[a].index(c) + 1, w)
        rot.append([a, c, b])
        faces.extend([(a, b, w), (b, c, w), (c, a, w)])
    return from_neighbor_rotations(rot)


def random_planar_map(
    n: int, rng: random.Random, delete_fraction: float = 0.25
) -> PlaneMultigraph:
    """Connected embedded planar graph: a stacked triangulation with a
    random subset of non-bridge edges removed."""
    pm = random_triangulation(n, rng)
    rot = [list(pm.rotation[v]) for v in range(pm.n)]
    nbrs = [[pm.vertex_of(pm.twin(d)) for d in rot[v]] for v in range(pm.n)]
    edges = list(pm.edges)
    rng.shuffle(edges)
    target = int(delete_fraction * len(edges))
    removed = 0
    for u, v in edges:
        if removed >= target:
            break
        if len(nbrs[u]) <= 1 or len(nbrs[v]) <= 1:
            continue
        nbrs[u].remove(v)
        nbrs[v].remove(u)
        if _connected(nbrs):
            removed += 1
        else:
            nbrs[u].append(v)
            nbrs[v].append(u)
    # removal by value keeps the cyclic order of the remaining neighbors
    return from_neighbor_rotations(nbrs)


def _connected(nbrs) -> bool:
    n = len(nbrs)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n
