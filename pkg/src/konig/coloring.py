"""Proper edge coloring of bipartite multigraphs with ``k >= max degree`` colors.

Edges are inserted one at a time in id order. An edge whose endpoints share
a free color takes the lowest such color. Otherwise a two-colored alternating
path starting at the Left endpoint is swapped, which frees a color at both
ends. On a bipartite graph that path can never reach the Right endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InternalInvariantViolation, InvalidColoring, KTooSmall
from .graph import BipartiteMultigraph, L, R, Side, VertexId


@dataclass(frozen=True)
class EdgeColoring:
    """Map from edge id to a color in ``0..k-1``.

    Colorings produced by this module are total. Partial colorings (as
    accepted by ``insert_and_recolor``) simply omit the uncolored edges.
    """

    k: int
    assignment: Mapping[int, int]

    def color(self, e: int) -> int:
        return self.assignment[e]

    def classes(self) -> list[list[int]]:
        """Edge ids of each color, ascending."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for e in sorted(self.assignment):
            out[self.assignment[e]].append(e)
        return out

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def as_record(self) -> dict:
        return {"k": self.k, "assignments": [[e, self.assignment[e]] for e in sorted(self.assignment)]}


@dataclass(frozen=True)
class AlternatingPath:
    """Maximal path from ``start`` whose edge colors alternate ``first, second, first, ...``."""

    start: VertexId
    first: int
    second: int
    edges: tuple[int, ...]
    vertices: tuple[VertexId, ...]


@dataclass(frozen=True)
class Violation:
    reason: str
    vertex: VertexId | None = None
    edges: tuple[int, ...] = ()


class _Colorer:
    """Mutable coloring state over flat vertex numbers.

    Left ``i`` is vertex ``i`` and Right ``j`` is vertex ``n_left + j``.
    ``slot[x * k + c]`` holds the edge of color ``c`` at ``x`` (or -1) and
    ``used[x]`` is the bitmask of colors present at ``x``.
    """

    def __init__(self, g: BipartiteMultigraph, k: int):
        self.g = g
        self.k = k
        nl = g.n_left
        self.ends = [(u, nl + v) for u, v in g.edges]
        self.color = [-1] * g.m
        self.slot = [-1] * (g.n_vertices * k)
        self.used = [0] * g.n_vertices
        self.full = (1 << k) - 1
        self._mark = [0] * g.n_vertices
        self._stamp = 0

    def assign(self, e: int, c: int) -> None:
        k = self.k
        for x in self.ends[e]:
            if self.used[x] >> c & 1:
                raise InvalidColoring(f"color {c} appears twice at {self._vertex(x)}")
            self.used[x] |= 1 << c
            self.slot[x * k + c] = e
        self.color[e] = c

    def _vertex(self, x: int) -> VertexId:
        return L(x) if x < self.g.n_left else R(x - self.g.n_left)

    def path(self, start: int, c1: int, c2: int, forbidden: int = -1) -> tuple[list[int], list[int]]:
        """Follow colors c1, c2, c1, ... from ``start`` for as long as possible."""
        k, slot, ends = self.k, self.slot, self.ends
        edges: list[int] = []
        verts = [start]
        self._stamp += 1
        stamp, mark = self._stamp, self._mark
        mark[start] = stamp
        x, col, other = start, c1, c2
        while True:
            f = slot[x * k + col]
            if f < 0:
                return edges, verts
            a, b = ends[f]
            y = b if a == x else a
            if y == forbidden:
                raise InternalInvariantViolation(
                    f"alternating path from {self._vertex(start)} reached {self._vertex(y)}; "
                    "the graph is not bipartite")
            if mark[y] == stamp:
                raise InternalInvariantViolation(
                    f"alternating path revisits {self._vertex(y)}")
            mark[y] = stamp
            edges.append(f)
            verts.append(y)
            x, col, other = y, other, col

    def insert(self, e: int) -> list[int]:
        """Color edge ``e``; returns the (possibly empty) list of swapped edges."""
        a, b = self.ends[e]
        used = self.used
        ua, ub = used[a], used[b]
        if ua == self.full or ub == self.full:
            raise KTooSmall(f"no free color at an endpoint of edge {e} with k={self.k}")
        free = ~(ua | ub) & self.full
        if free:
            self.assign(e, _lowest(free))
            return []
        c1 = _lowest(~ub & self.full)  # missing at B, hence present at A
        c2 = _lowest(~ua & self.full)  # missing at A
        path, _ = self.path(a, c1, c2, forbidden=b)
        self._swap(path, c1, c2)
        self.assign(e, c1)
        return path

    def _swap(self, path: list[int], c1: int, c2: int) -> None:
        k, slot, used, ends, color = self.k, self.slot, self.used, self.ends, self.color
        toggle = (1 << c1) | (1 << c2)
        for f in path:
            c = color[f]
            for x in ends[f]:
                if slot[x * k + c] == f:
                    slot[x * k + c] = -1
                used[x] ^= toggle  # interior vertices toggle twice
        for f in path:
            c = c1 + c2 - color[f]
            color[f] = c
            for x in ends[f]:
                slot[x * k + c] = f

    def result(self) -> EdgeColoring:
        return EdgeColoring(self.k, {e: c for e, c in enumerate(self.color) if c >= 0})


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def color_edges(g: BipartiteMultigraph, k: int) -> EdgeColoring:
    """Properly color the edges of ``g`` with colors ``0..k-1``.

    Args:
        g: Bipartite multigraph.
        k: Number of colors, at least the maximum degree.

    Returns:
        A total proper coloring. The result depends only on ``g`` (including
        edge order) and ``k``.

    Raises:
        KTooSmall: If ``k`` is below the maximum degree.
    """
    delta = g.max_degree()
    if k < delta:
        raise KTooSmall(f"k={k} is smaller than the maximum degree {delta}")
    if g.m == 0:
        return EdgeColoring(k, {})
    state = _Colorer(g, k)
    for e in range(g.m):
        state.insert(e)
    return state.result()


def _load_partial(partial: EdgeColoring, g: BipartiteMultigraph) -> _Colorer:
    state = _Colorer(g, partial.k)
    for e, c in sorted(partial.assignment.items()):
        if not 0 <= e < g.m:
            raise InvalidColoring(f"edge {e} is not in the graph")
        if not 0 <= c < partial.k:
            raise InvalidColoring(f"edge {e} has color {c} outside 0..{partial.k - 1}")
        state.assign(e, c)
    return state


def find_alternating_path(partial: EdgeColoring, g: BipartiteMultigraph, start: VertexId,
                          first: int, second: int) -> AlternatingPath:
    """The maximal ``first``/``second`` alternating path leaving ``start``."""
    state = _load_partial(partial, g)
    x = start.index if start.side is Side.LEFT else g.n_left + start.index
    edges, verts = state.path(x, first, second)
    return AlternatingPath(start, first, second, tuple(edges), tuple(state._vertex(v) for v in verts))


def insert_and_recolor(partial: EdgeColoring, g: BipartiteMultigraph, e: int) -> EdgeColoring:
    """Extend a proper partial coloring to the uncolored edge ``e``.

    Only ``e`` and the edges of one alternating path change color.

    Raises:
        InvalidColoring: If ``partial`` is not proper, ``e`` is already
            colored, or an endpoint of ``e`` has no free color.
        InternalInvariantViolation: If the alternating path reaches the other
            endpoint of ``e`` or revisits a vertex (non-bipartite input).
    """
    if e in partial.assignment:
        raise InvalidColoring(f"edge {e} is already colored")
    if not 0 <= e < g.m:
        raise InvalidColoring(f"edge {e} is not in the graph")
    state = _load_partial(partial, g)
    try:
        state.insert(e)
    except KTooSmall as exc:
        raise InvalidColoring(str(exc)) from None
    return state.result()


def verify_coloring(g: BipartiteMultigraph, c: EdgeColoring) -> tuple[bool, Violation | None]:
    """Check that ``c`` is total on ``g``, uses colors below ``k`` and is proper.

    Returns ``(True, None)`` or ``(False, first violation)``.
    """
    for e in range(g.m):
        if e not in c.assignment:
            return False, Violation("uncolored edge", edges=(e,))
        col = c.assignment[e]
        if not 0 <= col < c.k:
            return False, Violation(f"color {col} outside 0..{c.k - 1}", edges=(e,))
    extra = set(c.assignment) - set(range(g.m))
    if extra:
        return False, Violation("colored edge not in graph", edges=(min(extra),))
    for x in g.vertices():
        seen: dict[int, int] = {}
        for e in g.adjacency(x):
            col = c.assignment[e]
            if col in seen:
                return False, Violation(f"color {col} repeated", vertex=x, edges=(seen[col], e))
            seen[col] = e
    return True, None
