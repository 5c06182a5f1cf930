"""Simple undirected graphs: representation, generators, products, serialization.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored in
normalized (min, max) form.  Graphs are immutable after construction and
safe to share between workers.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

PRODUCT_KINDS = ("cartesian", "direct", "strong", "lexicographic")


class GraphError(ValueError):
    """Raised for malformed graph data (bad endpoints, loops, duplicates)."""


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite loopless undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ids."""
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = _normalize(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return Graph(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize(u, v) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from source; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def diameter(self) -> int:
        """Diameter of a connected graph (0 for a single vertex)."""
        best = 0
        for v in range(self.n):
            dist = self.bfs_distances(v)
            if min(dist) < 0:
                raise GraphError("diameter undefined for disconnected graph")
            best = max(best, max(dist))
        return best


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph(n, frozenset(_normalize(i, (i + 1) % n) for i in range(n)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, frozenset(combinations(range(n), 2)))


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; part i occupies a contiguous id block."""
    if not parts or any(p < 1 for p in parts):
        raise GraphError("parts must be a nonempty list of positive sizes")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    n = bounds[-1]
    edges = set()
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.add((u, v))
    return Graph(n, frozenset(edges))


def make_complete_bipartite(m: int, n: int) -> Graph:
    return make_complete_multipartite([m, n])


def make_star(leaves: int) -> Graph:
    """Star K_{1,leaves} with the center at vertex 0."""
    return make_complete_bipartite(1, leaves)


# ---------------------------------------------------------------------------
# Unary and binary operations
# ---------------------------------------------------------------------------

def disjoint_union(*graphs: Graph) -> Graph:
    if not graphs:
        raise GraphError("disjoint_union needs at least one operand")
    edges = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides (g first)."""
    base = disjoint_union(g, h)
    cross = {(u, g.n + v) for u in range(g.n) for v in range(h.n)}
    return Graph(base.n, base.edges | frozenset(cross))


def complement(g: Graph) -> Graph:
    all_pairs = frozenset(combinations(range(g.n), 2))
    return Graph(g.n, all_pairs - g.edges)


def square(g: Graph) -> Graph:
    """Add an edge between every pair of vertices at distance exactly 2."""
    extra = set()
    for v in range(g.n):
        for a in g.adj[v]:
            for b in g.adj[v]:
                if a < b and not g.has_edge(a, b):
                    extra.add((a, b))
    return Graph(g.n, g.edges | frozenset(extra))


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """One of the four standard graph products.

    Vertex (a, b) of the product is the id a * h.n + b, so rows (fixed
    second coordinate) and columns (fixed first coordinate) can be
    recovered from ids.
    """
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"unknown product kind {kind!r}")
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be nonempty")
    nh = h.n
    edges = set()

    def vid(a, b):
        return a * nh + b

    if kind in ("cartesian", "strong"):
        for a in range(g.n):
            for x, y in h.edges:
                edges.add(_normalize(vid(a, x), vid(a, y)))
        for x, y in g.edges:
            for b in range(nh):
                edges.add(_normalize(vid(x, b), vid(y, b)))
    if kind in ("direct", "strong"):
        for x, y in g.edges:
            for a, b in h.edges:
                edges.add(_normalize(vid(x, a), vid(y, b)))
                edges.add(_normalize(vid(x, b), vid(y, a)))
    if kind == "lexicographic":
        for x, y in g.edges:
            for a in range(nh):
                for b in range(nh):
                    edges.add(_normalize(vid(x, a), vid(y, b)))
        for a in range(g.n):
            for x, y in h.edges:
                edges.add(_normalize(vid(a, x), vid(a, y)))
    return Graph(g.n * nh, frozenset(edges))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def from_json_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        raw = data["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(n, int):
        raise GraphError("n must be an integer")
    edges = []
    for e in raw:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphError(f"malformed edge entry {e!r}")
        u, v = e
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphError(f"malformed edge entry {e!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def save_json(g: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(g), fh)
        fh.write("\n")


def load_json(path) -> Graph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed JSON: {exc}") from exc
    return from_json_dict(data)


def export_dot(g: Graph, coloring=None) -> str:
    """GraphViz text; vertices carry a color=<id> attribute if given."""
    lines = ["graph G {"]
    for v in range(g.n):
        if coloring is not None:
            lines.append(f'  {v} [color={coloring.colors[v]}];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
