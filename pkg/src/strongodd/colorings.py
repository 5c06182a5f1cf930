"""Vertex colorings and the four verifier predicates.

Colors are 0-based ids.  Verifiers never mutate and collect every
violation rather than failing fast, so tests can assert exact violation
sets.  An empty report means the predicate holds.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, square

NOT_PROPER = "not_proper"
EVEN_COLOR = "even_color_in_neighborhood"
NO_ODD_COLOR = "no_odd_color"
DISTANCE2_CLASH = "distance2_clash"


@dataclass(frozen=True)
class Coloring:
    """A total assignment of color ids to vertices."""

    colors: tuple[int, ...]

    def __post_init__(self):
        for c in self.colors:
            if c < 0:
                raise ValueError(f"negative color id {c}")

    @property
    def k(self) -> int:
        """Number of colors: one plus the largest id actually used."""
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)

    def permuted(self, perm: dict[int, int]) -> "Coloring":
        return Coloring(tuple(perm[c] for c in self.colors))


@dataclass(frozen=True)
class Violation:
    kind: str
    vertex: int
    color: Optional[int] = None
    count: Optional[int] = None


def _check_length(g: Graph, phi: Coloring) -> None:
    if len(phi) != g.n:
        raise ValueError(f"coloring length {len(phi)} does not match n={g.n}")


def neighborhood_histogram(g: Graph, phi: Coloring, v: int) -> dict[int, int]:
    """Color counts over the open neighborhood of v."""
    _check_length(g, phi)
    return dict(Counter(phi.colors[u] for u in g.adj[v]))


def is_proper(g: Graph, phi: Coloring) -> list[Violation]:
    """Empty iff no edge joins two vertices of the same color."""
    _check_length(g, phi)
    out = []
    for v in range(g.n):
        same = sum(1 for u in g.adj[v] if phi.colors[u] == phi.colors[v])
        if same:
            out.append(Violation(NOT_PROPER, v, phi.colors[v], same))
    return out

def is_strong_odd(g: Graph, phi: Coloring) -> list[Violation]:
    """Proper, and every color present in any open neighborhood has odd
    multiplicity there."""
    out = is_proper(g, phi)
    for v in range(g.n):
        for c, cnt in sorted(neighborhood_histogram(g, phi, v).items()):
            if cnt % 2 == 0:
                out.append(Violation(EVEN_COLOR, v, c, cnt))
    return out


def is_odd(g: Graph, phi: Coloring) -> list[Violation]:
    """Proper, and every non-isolated vertex sees some color an odd
    number of times."""
    out = is_proper(g, phi)
    for v in range(g.n):
        if not g.adj[v]:
            continue
        hist = neighborhood_histogram(g, phi, v)
        if all(cnt % 2 == 0 for cnt in hist.values()):
            out.append(Violation(NO_ODD_COLOR, v))
    return out


def is_square_coloring(g: Graph, phi: Coloring) -> list[Violation]:
    """Proper on the square of g.  Distance-2 conflicts are reported with
    their own kind so they are distinguishable from plain edge conflicts."""
    _check_length(g, phi)
    out = is_proper(g, phi)
    g2 = square(g)
    for v in range(g2.n):
        clash = sum(
            1
            for u in g2.adj[v]
            if phi.colors[u] == phi.colors[v] and not g.has_edge(u, v)
        )
        if clash:
            out.append(Violation(DISTANCE2_CLASH, v, phi.colors[v], clash))
    return out


def coloring_to_json_dict(phi: Coloring) -> dict:
    return {"colors": list(phi.colors)}


def coloring_from_json_dict(data: dict) -> Coloring:
    try:
        colors = data["colors"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring JSON: {exc}") from exc
    if not all(isinstance(c, int) for c in colors):
        raise ValueError("colors must be integers")
    return Coloring(tuple(colors))


def save_coloring(phi: Coloring, path) -> None:
    with open(path, "w") as fh:
        json.dump(coloring_to_json_dict(phi), fh)
        fh.write("\n")


def load_coloring(path) -> Coloring:
    with open(path) as fh:
        data = json.load(fh)
    return coloring_from_json_dict(data)
