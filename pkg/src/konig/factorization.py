"""Factors of regular bipartite multigraphs.

A factor of degree ``d`` is a set of edges meeting every vertex exactly ``d``
times. This module finds perfect matchings and full 1-factorizations through
the edge coloring engine, builds the regular host used to color
bounded-degree graphs, and provides the vertex splitting construction that
powers an independent power-of-two factorization engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coloring import EdgeColoring, color_edges
from .errors import (
    DTooLarge,
    InvalidFactor,
    KTooSmall,
    NotDivisible,
    NotPowerOfTwo,
    NotRegular,
    ZeroDegree,
)
from .graph import BipartiteMultigraph, L, R, VertexId, subgraph


@dataclass(frozen=True)
class Factor:
    degree: int
    edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Factor, ...]

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def as_record(self) -> dict:
        return {"k": self.degree, "factors": [sorted(f.edges) for f in self.factors]}


def factor_degree(g: BipartiteMultigraph, edges: Iterable[int]) -> int | None:
    """Uniform number of given edges at each vertex, or ``None`` if not uniform.

    Also ``None`` if an edge id is out of range or repeated.
    """
    edges = list(edges)
    if len(set(edges)) != len(edges) or any(not 0 <= e < g.m for e in edges):
        return None
    left = [0] * g.n_left
    right = [0] * g.n_right
    for e in edges:
        u, v = g.edges[e]
        left[u] += 1
        right[v] += 1
    degrees = set(left) | set(right)
    if not degrees:
        return 0
    return degrees.pop() if len(degrees) == 1 else None


def is_factor(g: BipartiteMultigraph, f: Factor) -> bool:
    return factor_degree(g, f.edges) == f.degree


def verify_factorization(g: BipartiteMultigraph, fz: Factorization) -> tuple[bool, str | None]:
    """Check disjointness, coverage and per-factor degree uniformity.

    Returns ``(True, None)`` or ``(False, reason)``.
    """
    seen: set[int] = set()
    for i, f in enumerate(fz.factors):
        if not is_factor(g, f):
            return False, f"factor {i} is not a factor of degree {f.degree}"
        clash = seen & f.edges
        if clash:
            return False, f"factor {i} reuses edge {min(clash)}"
        seen |= f.edges
    if seen != set(range(g.m)):
        return False, f"edges {sorted(set(range(g.m)) - seen)[:5]} are not covered"
    k = g.regular_degree()
    if g.m and fz.degree != k:
        return False, f"factor degrees sum to {fz.degree}, graph degree is {k}"
    return True, None


def _require_regular(g: BipartiteMultigraph) -> int:
    k = g.regular_degree()
    if k is None:
        raise NotRegular(f"graph is not regular (degrees range up to {g.max_degree()})")
    return k


def one_factorization(g: BipartiteMultigraph) -> Factorization:
    """Split a k-regular graph into k perfect matchings.

    Factor ``i`` is color class ``i`` of ``color_edges(g, k)``: with exactly k
    colors at degree-k vertices every color meets every vertex once.
    """
    k = _require_regular(g)
    if k == 0:
        return Factorization(())
    classes = color_edges(g, k).classes()
    return Factorization(tuple(Factor(1, frozenset(c)) for c in classes))


def perfect_matching(g: BipartiteMultigraph) -> Factor:
    """A degree-1 factor of a regular graph of positive degree.

    Raises:
        NotRegular: If vertex degrees differ.
        ZeroDegree: If the graph has vertices but no edges.
    """
    k = _require_regular(g)
    if k == 0:
        if g.n_vertices:
            raise ZeroDegree("a 0-regular graph with vertices has no perfect matching")
        return Factor(1, frozenset())
    return Factor(1, frozenset(color_edges(g, k).classes()[0]))


def factor_of_degree(g: BipartiteMultigraph, d: int) -> Factor:
    """Union of the first ``d`` perfect matchings of a 1-factorization.

    The remaining edges form a factor of degree ``k - d``.
    """
    k = _require_regular(g)
    if not 0 <= d <= k:
        raise DTooLarge(f"d={d} outside 0..{k}")
    fz = one_factorization(g)
    edges: set[int] = set()
    for f in fz.factors[:d]:
        edges |= f.edges
    return Factor(d, frozenset(edges))


def complement(g: BipartiteMultigraph, f: Factor) -> Factor:
    k = _require_regular(g)
    return Factor(k - f.degree, frozenset(range(g.m)) - f.edges)


@dataclass(frozen=True)
class RegularizationEmbedding:
    """A k-regular bipartite host containing the original graph.

    ``vertex_map`` sends original vertices to the host, ``copy_map`` sends
    them to their mirror copy (which sits on the opposite side so that the
    padding edges cross). ``edge_map[e]`` is the host id of original edge
    ``e``; ``copy_edge_map[e]`` that of its mirror.
    """

    host: BipartiteMultigraph
    k: int
    vertex_map: dict[VertexId, VertexId]
    copy_map: dict[VertexId, VertexId]
    edge_map: tuple[int, ...]
    copy_edge_map: tuple[int, ...]
    padding_edges: frozenset[int]


def regularize(g: BipartiteMultigraph, k: int) -> RegularizationEmbedding:
    """Embed ``g`` (max degree <= k) in a k-regular bipartite graph.

    The host has two copies of ``g``. Left ``i`` of the copy becomes host
    Right ``n_right + i`` and Right ``j`` becomes host Left ``n_left + j``.
    Each original vertex of degree ``a`` is joined to its copy by ``k - a``
    parallel padding edges. Host edge order: originals, mirrors, then
    padding (Left vertices first, then Right).
    """
    delta = g.max_degree()
    if k < delta:
        raise KTooSmall(f"k={k} is smaller than the maximum degree {delta}")
    nl, nr = g.n_left, g.n_right
    edges: list[tuple[int, int]] = list(g.edges)
    edges += [(nl + v, nr + u) for u, v in g.edges]
    padding_start = len(edges)
    for u, a in enumerate(g.left_degrees()):
        edges += [(u, nr + u)] * (k - a)
    for v, a in enumerate(g.right_degrees()):
        edges += [(nl + v, v)] * (k - a)
    host = BipartiteMultigraph(nl + nr, nr + nl, edges)

    vertex_map = {x: x for x in g.vertices()}
    copy_map = {L(i): R(nr + i) for i in range(nl)}
    copy_map.update({R(j): L(nl + j) for j in range(nr)})
    return RegularizationEmbedding(
        host=host,
        k=k,
        vertex_map=vertex_map,
        copy_map=copy_map,
        edge_map=tuple(range(g.m)),
        copy_edge_map=tuple(range(g.m, 2 * g.m)),
        padding_edges=frozenset(range(padding_start, len(edges))),
    )


def color_via_regularization(g: BipartiteMultigraph, k: int) -> EdgeColoring:
    """Color ``g`` by 1-factorizing its k-regular host and reading each
    original edge's factor index."""
    emb = regularize(g, k)
    fz = one_factorization(emb.host)
    factor_of = {}
    for i, f in enumerate(fz.factors):
        for e in f.edges:
            factor_of[e] = i
    return EdgeColoring(k, {e: factor_of[h] for e, h in enumerate(emb.edge_map)})


@dataclass(frozen=True)
class SplitEmbedding:
    """Graph obtained by replacing every vertex with ``mu`` copies of degree ``nu``.

    Copy ``b`` of a vertex with index ``i`` has index ``i * mu + b`` on the
    same side. Edge ids are shared between the split and the original graph.
    """

    original: BipartiteMultigraph
    split: BipartiteMultigraph
    mu: int
    nu: int

    def vertex_map(self, x: VertexId) -> VertexId:
        return VertexId(x.side, x.index // self.mu)

    def edge_bijection(self, e: int) -> int:
        return e


def split_degree(g: BipartiteMultigraph, mu: int) -> SplitEmbedding:
    """Split each vertex of a ``mu*nu``-regular graph into ``mu`` vertices of degree ``nu``.

    Copy ``b`` of a vertex receives its adjacency-list entries
    ``b*nu .. (b+1)*nu - 1``.

    Raises:
        NotRegular: If ``g`` is not regular.
        NotDivisible: If ``mu`` does not divide the degree.
    """
    k = _require_regular(g)
    if mu < 1 or k % mu:
        raise NotDivisible(f"mu={mu} does not divide the degree {k}")
    nu = k // mu
    left_copy = [0] * g.m
    right_copy = [0] * g.m
    if nu:
        for u in range(g.n_left):
            for pos, e in enumerate(g.adjacency(L(u))):
                left_copy[e] = u * mu + pos // nu
        for v in range(g.n_right):
            for pos, e in enumerate(g.adjacency(R(v))):
                right_copy[e] = v * mu + pos // nu
    split = BipartiteMultigraph(g.n_left * mu, g.n_right * mu,
                                zip(left_copy, right_copy))
    return SplitEmbedding(g, split, mu, nu)


def merge_factor(se: SplitEmbedding, f: Factor) -> Factor:
    """Lift a degree-d factor of the split graph to a degree ``mu*d`` factor
    of the original."""
    d = factor_degree(se.split, f.edges)
    if d is None or d != f.degree:
        raise InvalidFactor(f"edge set is not a degree-{f.degree} factor of the split graph")
    lifted = Factor(se.mu * d, frozenset(se.edge_bijection(e) for e in f.edges))
    if not is_factor(se.original, lifted):
        raise InvalidFactor("lifted edge set is not a factor of the original graph")
    return lifted


def split_cycles_factorization(g: BipartiteMultigraph) -> Factorization:
    """Split a 2-regular graph into two perfect matchings.

    Each cycle (a double edge counts as a 2-cycle) is walked starting from
    its lowest edge id, which goes to the first matching; edges then
    alternate.
    """
    k = _require_regular(g)
    if k != 2:
        raise NotRegular(f"expected a 2-regular graph, degree is {k}")
    side = [0] * g.m
    visited = [False] * g.m
    for start in range(g.m):
        if visited[start]:
            continue
        e, x, parity = start, L(g.edges[start][0]), 0
        while not visited[e]:
            visited[e] = True
            side[e] = parity
            x = g.other_end(e, x)
            a, b = g.adjacency(x)
            e = b if a == e else a
            parity ^= 1
    halves = ([e for e in range(g.m) if side[e] == 0], [e for e in range(g.m) if side[e] == 1])
    return Factorization(tuple(Factor(1, frozenset(h)) for h in halves))


def power_of_two_factorization(g: BipartiteMultigraph) -> Factorization:
    """1-factorize a ``2**m``-regular graph by repeated halving.

    Each round splits every vertex into ``2**(m-1)`` vertices of degree 2,
    splits the resulting cycles into two matchings, and merges one of them
    back into a factor of degree ``2**(m-1)``. Both halves are then
    factorized recursively. Uses no edge coloring.
    """
    k = _require_regular(g)
    if k < 1 or k & (k - 1):
        raise NotPowerOfTwo(f"degree {k} is not a power of two")
    return Factorization(tuple(_halve(g, k)))


def _halve(g: BipartiteMultigraph, k: int) -> list[Factor]:
    if k == 1:
        return [Factor(1, frozenset(range(g.m)))]
    se = split_degree(g, k // 2)
    halves = split_cycles_factorization(se.split)
    out = []
    for h in halves.factors:
        merged = merge_factor(se, h)
        sub, back = subgraph(g, merged.edges)
        for f in _halve(sub, k // 2):
            out.append(Factor(1, frozenset(back[e] for e in f.edges)))
    return out
