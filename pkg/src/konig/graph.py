"""Bipartite multigraphs, general graphs, two-coloring and components."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import IndexOutOfBounds, NotBipartite, SelfLoop


class Side(enum.IntEnum):
    LEFT = 0
    RIGHT = 1


class VertexId(NamedTuple):
    """A vertex named by its side and its 0-based index within that side.

    Tuples order Left before Right, then by index, which is the canonical
    vertex order used throughout the package.
    """

    side: Side
    index: int

    def label(self) -> str:
        """1-based user-facing label, ``A1``.. for Left and ``B1``.. for Right."""
        return f"{'A' if self.side is Side.LEFT else 'B'}{self.index + 1}"


def L(index: int) -> VertexId:
    return VertexId(Side.LEFT, index)


def R(index: int) -> VertexId:
    return VertexId(Side.RIGHT, index)


class BipartiteMultigraph:
    """An immutable bipartite multigraph with stable edge identities.

    Edge ``e`` joins Left vertex ``edges[e][0]`` to Right vertex
    ``edges[e][1]``. Parallel edges are allowed and each has its own id.
    Adjacency lists hold edge ids in insertion order.
    """

    __slots__ = ("n_left", "n_right", "edges", "_left_adj", "_right_adj")

    def __init__(self, n_left: int, n_right: int, edges: Iterable[tuple[int, int]] = ()):
        if n_left < 0 or n_right < 0:
            raise IndexOutOfBounds(f"negative side size ({n_left}, {n_right})")
        self.n_left = n_left
        self.n_right = n_right
        left_adj: list[list[int]] = [[] for _ in range(n_left)]
        right_adj: list[list[int]] = [[] for _ in range(n_right)]
        stored = []
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n_left and 0 <= v < n_right):
                raise IndexOutOfBounds(
                    f"edge {e} = ({u}, {v}) outside sides of size ({n_left}, {n_right})")
            stored.append((u, v))
            left_adj[u].append(e)
            right_adj[v].append(e)
        self.edges: tuple[tuple[int, int], ...] = tuple(stored)
        self._left_adj = tuple(tuple(a) for a in left_adj)
        self._right_adj = tuple(tuple(a) for a in right_adj)

    def __repr__(self) -> str:
        return f"BipartiteMultigraph({self.n_left}, {self.n_right}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteMultigraph):
            return NotImplemented
        return (self.n_left, self.n_right, self.edges) == (other.n_left, other.n_right, other.edges)

    def __hash__(self) -> int:
        return hash((self.n_left, self.n_right, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n_vertices(self) -> int:
        return self.n_left + self.n_right

    def vertices(self) -> list[VertexId]:
        return [L(i) for i in range(self.n_left)] + [R(j) for j in range(self.n_right)]

    def endpoints(self, e: int) -> tuple[VertexId, VertexId]:
        u, v = self.edges[e]
        return L(u), R(v)

    def other_end(self, e: int, x: VertexId) -> VertexId:
        u, v = self.edges[e]
        return R(v) if x.side is Side.LEFT else L(u)

    def adjacency(self, x: VertexId) -> tuple[int, ...]:
        self._check_vertex(x)
        return self._left_adj[x.index] if x.side is Side.LEFT else self._right_adj[x.index]

    def degree(self, x: VertexId) -> int:
        return len(self.adjacency(x))

    def left_degrees(self) -> list[int]:
        return [len(a) for a in self._left_adj]

    def right_degrees(self) -> list[int]:
        return [len(a) for a in self._right_adj]

    def max_degree(self) -> int:
        return max(self.left_degrees() + self.right_degrees(), default=0)

    def regular_degree(self) -> int | None:
        """Common degree of every vertex, or ``None`` if degrees differ.

        A graph without vertices is 0-regular.
        """
        degrees = set(self.left_degrees()) | set(self.right_degrees())
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def _check_vertex(self, x: VertexId) -> None:
        size = self.n_left if x.side is Side.LEFT else self.n_right
        if not 0 <= x.index < size:
            raise IndexOutOfBounds(f"vertex {x} outside side of size {size}")


def build_bipartite(n_left: int, n_right: int,
                    edge_list: Iterable[tuple[int, int]]) -> BipartiteMultigraph:
    return BipartiteMultigraph(n_left, n_right, edge_list)


def subgraph(g: BipartiteMultigraph, edge_ids: Iterable[int]) -> tuple[BipartiteMultigraph, list[int]]:
    """Spanning subgraph on the given edges (kept in increasing id order).

    Returns the subgraph and the list mapping each new edge id to the old one.
    """
    kept = sorted(edge_ids)
    return BipartiteMultigraph(g.n_left, g.n_right, (g.edges[e] for e in kept)), kept


@dataclass(frozen=True)
class GeneralGraph:
    """Undirected multigraph on vertices ``0..n_vertices-1``, loops forbidden."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]] = ()):
        stored = tuple((int(u), int(v)) for u, v in edges)
        for e, (u, v) in enumerate(stored):
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise IndexOutOfBounds(f"edge {e} = ({u}, {v}) outside {n_vertices} vertices")
            if u == v:
                raise SelfLoop(f"edge {e} is a loop at vertex {u}")
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", stored)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the list of ``(edge id, neighbour)`` in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((e, v))
            adj[v].append((e, u))
        return adj


@dataclass(frozen=True)
class OddWalk:
    """Closed walk with an odd number of edges; ``vertices[0] == vertices[-1]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TwoColoringResult:
    """Either a class (0 for I, 1 for II) per vertex, or an odd closed walk."""

    classes: tuple[int, ...] | None = None
    witness: OddWalk | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.classes is not None


def two_coloring(g: GeneralGraph) -> TwoColoringResult:
    """Split the vertices into two classes with every edge crossing.

    Breadth-first search from the lowest unvisited vertex, which is put in
    class I. When an edge joins two vertices of the same class, the tree
    paths from both ends to their common ancestor plus that edge form an odd
    closed walk, which is returned instead.
    """
    adj = g.adjacency()
    cls = [-1] * g.n_vertices
    parent_edge = [-1] * g.n_vertices
    depth = [0] * g.n_vertices
    for root in range(g.n_vertices):
        if cls[root] != -1:
            continue
        cls[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for e, v in adj[u]:
                if cls[v] == -1:
                    cls[v] = 1 - cls[u]
                    parent_edge[v] = e
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif cls[v] == cls[u]:
                    return TwoColoringResult(witness=_odd_walk(g, u, v, e, parent_edge, depth))
    return TwoColoringResult(classes=tuple(cls))


def _odd_walk(g: GeneralGraph, u: int, v: int, e: int,
              parent_edge: list[int], depth: list[int]) -> OddWalk:
    def up(x: int) -> tuple[int, int]:
        pe = g.edges[parent_edge[x]]
        return parent_edge[x], pe[0] if pe[1] == x else pe[1]

    # climb both ends to their common ancestor
    up_u: list[tuple[int, int]] = []  # (edge, vertex reached)
    up_v: list[tuple[int, int]] = []
    a, b = u, v
    while depth[a] > depth[b]:
        pe, a = up(a)
        up_u.append((pe, a))
    while depth[b] > depth[a]:
        pe, b = up(b)
        up_v.append((pe, b))
    while a != b:
        pe, a = up(a)
        up_u.append((pe, a))
        pe, b = up(b)
        up_v.append((pe, b))

    vertices = [v, u] + [x for _, x in up_u]
    edges = [e] + [pe for pe, _ in up_u]
    # descend from the ancestor back to v
    for i in range(len(up_v) - 1, -1, -1):
        edges.append(up_v[i][0])
        vertices.append(up_v[i - 1][1] if i > 0 else v)
    return OddWalk(tuple(vertices), tuple(edges))


def as_bipartite(g: GeneralGraph) -> tuple[BipartiteMultigraph, tuple[VertexId, ...]]:
    """Relabel a two-colorable graph as a bipartite multigraph.

    Class I vertices become the Left side and class II the Right side, each
    in increasing original order. Returns the graph and the map from each
    original vertex to its new VertexId.

    Raises:
        NotBipartite: carrying the odd closed walk found by ``two_coloring``.
    """
    result = two_coloring(g)
    if result.classes is None:
        raise NotBipartite(result.witness)
    relabel: list[VertexId] = []
    counts = [0, 0]
    for c in result.classes:
        relabel.append(VertexId(Side(c), counts[c]))
        counts[c] += 1
    edges = []
    for u, v in g.edges:
        a, b = relabel[u], relabel[v]
        if a.side is Side.RIGHT:
            a, b = b, a
        edges.append((a.index, b.index))
    return BipartiteMultigraph(counts[0], counts[1], edges), tuple(relabel)


@dataclass(frozen=True)
class Component:
    vertices: frozenset[VertexId]
    edges: frozenset[int]


def components(g: BipartiteMultigraph) -> list[Component]:
    """Connected components, ordered by their smallest vertex."""
    seen: set[VertexId] = set()
    out = []
    for start in g.vertices():  # already in canonical order
        if start in seen:
            continue
        seen.add(start)
        verts = {start}
        edges: set[int] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for e in g.adjacency(x):
                edges.add(e)
                y = g.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    verts.add(y)
                    stack.append(y)
        out.append(Component(frozenset(verts), frozenset(edges)))
    return out


def to_general(g: BipartiteMultigraph) -> GeneralGraph:
    """Forget the sides: Left ``i`` becomes ``i``, Right ``j`` becomes ``n_left + j``."""
    return GeneralGraph(g.n_vertices, ((u, g.n_left + v) for u, v in g.edges))


def is_valid_two_coloring(g: GeneralGraph, classes: Sequence[int]) -> bool:
    return len(classes) == g.n_vertices and all(classes[u] != classes[v] for u, v in g.edges)


def is_odd_closed_walk(g: GeneralGraph, walk: OddWalk) -> bool:
    if len(walk.edges) % 2 == 0 or len(walk.vertices) != len(walk.edges) + 1:
        return False
    if walk.vertices[0] != walk.vertices[-1]:
        return False
    for i, e in enumerate(walk.edges):
        if {walk.vertices[i], walk.vertices[i + 1]} != set(g.edges[e]):
            return False
    return True
