"""Simple graphs without isolated vertices, plus the structural primitives
(components, bipartiteness, cycles, blocks) used by the algebraic and
combinatorial modules.

Vertices are positive integers. Edges are stored as ordered pairs ``(i, j)``
with ``i < j`` and the edge tuple is kept sorted, which fixes the canonical
variable order used everywhere downstream.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ResourceLimit, ValidationError

Edge = tuple[int, int]

DEFAULT_CYCLE_CAP = 10**6


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if u > v:
                raise ValidationError(f"edge ({u},{v}) is not stored as (min, max)")
        for a, b in zip(self.edges, self.edges[1:]):
            if a == b:
                raise ValidationError(f"parallel edge {a}")
            if a > b:
                raise ValidationError("edge list is not sorted")
        if not self.edges:
            raise ValidationError("graph has no edges")
        if any(v < 1 for v in self.vertices):
            raise ValidationError("vertices must be positive integers")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValidationError("vertex list is not strictly increasing")
        covered = {v for e in self.edges for v in e}
        isolated = sorted(set(self.vertices) - covered)
        if isolated:
            raise ValidationError(f"isolated vertices {isolated}")
        if covered != set(self.vertices):
            raise ValidationError("edge endpoints missing from vertex list")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]],
                   vertices: Iterable[int] | None = None) -> "Graph":
        """Canonicalize an edge collection; raises on loops and repeated edges."""
        canon = []
        for pair in edges:
            if len(pair) != 2:
                raise ParseError(f"edge {pair!r} does not have two endpoints")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            canon.append(edge(u, v))
        seen = set()
        for e in canon:
            if e in seen:
                raise ValidationError(f"parallel edge {e}")
            seen.add(e)
        canon.sort()
        covered = sorted({v for e in canon for v in e})
        if vertices is not None:
            listed = sorted(set(int(v) for v in vertices))
            isolated = sorted(set(listed) - set(covered))
            if isolated:
                raise ValidationError(f"isolated vertices {isolated}")
            missing = sorted(set(covered) - set(listed))
            if missing:
                raise ValidationError(f"edge endpoints {missing} not in vertex list")
        return cls(tuple(covered), tuple(canon))

    @cached_property
    def adjacency(self) -> Mapping[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @cached_property
    def edge_index(self) -> Mapping[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Subgraph spanned by ``edges`` (vertices are their endpoints)."""
        chosen = [edge(*e) for e in edges]
        for e in chosen:
            if e not in self.edge_index:
                raise ValidationError(f"{e} is not an edge of the graph")
        return Graph.from_edges(chosen)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph({body})"


@dataclass(frozen=True)
class Cycle:
    """A simple cycle. ``vertices`` lists the closed walk without repeating
    its first vertex; the walk starts at the smallest vertex."""

    vertices: tuple[int, ...]
    edges: frozenset = field(compare=False)

    @classmethod
    def from_vertices(cls, walk: Sequence[int]) -> "Cycle":
        walk = tuple(walk)
        es = frozenset(edge(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))
        return cls(walk, es)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return len(self.vertices) % 2 == 0


@dataclass(frozen=True)
class BipartiteResult:
    flag: bool
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None
    odd_cycle: Cycle | None

    def __bool__(self) -> bool:
        return self.flag


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


# -- parsing ---------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse a graph from JSON (``{"edges": [[i, j], ...]}``) or edge-list text."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty graph description")
    if stripped[0] in "{[":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if isinstance(data, list):
            data = {"edges": data}
        if not isinstance(data, dict) or "edges" not in data:
            raise ParseError('JSON graph needs an "edges" key')
        edges = data["edges"]
        if not isinstance(edges, list):
            raise ParseError('"edges" must be a list')
        for pair in edges:
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
                raise ParseError(f"bad edge {pair!r}")
        vertices = data.get("vertices")
        if vertices is not None and (not isinstance(vertices, list)
                                     or not all(isinstance(x, int) for x in vertices)):
            raise ParseError('"vertices" must be a list of integers')
        return Graph.from_edges(edges, vertices)

    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not edges:
        raise ParseError("no edges found")
    return Graph.from_edges(edges)


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


# -- structure -------------------------------------------------------------

def connected_components(g: Graph) -> tuple[int, dict[int, int]]:
    """Return ``(b0, label)`` with components numbered from 0 in order of
    their smallest vertex."""
    label: dict[int, int] = {}
    count = 0
    for root in g.vertices:
        if root in label:
            continue
        label[root] = count
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in label:
                    label[w] = count
                    queue.append(w)
        count += 1
    return count, label


def _bfs_forest(g: Graph):
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    tree: list[Edge] = []
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree.append(edge(v, w))
                    queue.append(w)
    return parent, depth, tree


def _tree_cycle(parent, depth, u: int, v: int) -> Cycle:
    """Cycle closed by the non-tree edge ``uv`` in a BFS forest."""
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    walk = left + right[-2::-1]
    k = walk.index(min(walk))
    walk = walk[k:] + walk[:k]
    if len(walk) > 2 and walk[1] > walk[-1]:
        walk = [walk[0]] + walk[:0:-1]
    return Cycle.from_vertices(walk)


def is_bipartite(g: Graph) -> BipartiteResult:
    parent, depth, _ = _bfs_forest(g)
    for u, v in g.edges:
        if depth[u] % 2 == depth[v] % 2:
            return BipartiteResult(False, None, _tree_cycle(parent, depth, u, v))
    even = tuple(v for v in g.vertices if depth[v] % 2 == 0)
    odd = tuple(v for v in g.vertices if depth[v] % 2 == 1)
    return BipartiteResult(True, (even, odd), None)


def enumerate_simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """All simple cycles, each reported once.

    A cycle is anchored at its smallest vertex ``s`` and traversed in the
    direction whose second vertex is smaller than its last one.
    """
    cycles: list[Cycle] = []
    adj = g.adjacency
    for s in g.vertices:
        path = [s]
        on_path = {s}
        stack = [iter(adj[s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(Cycle.from_vertices(path))
                        if len(cycles) > cap:
                            raise ResourceLimit(f"more than {cap} simple cycles")
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    stack.append(iter(adj[w]))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
    return cycles


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs and bridges), as sorted edge
    tuples, ordered by their smallest edge."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[tuple[Edge, ...]] = []
    counter = 0
    adj = g.adjacency
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(adj[root]))]
        edge_stack: list[Edge] = []
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for w in it:
                if w == par:
                    continue
                if w not in disc:
                    edge_stack.append(edge(v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(edge(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block = []
                target = edge(u, v)
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == target:
                        break
                blocks.append(tuple(sorted(block)))
    blocks.sort()
    return BlockDecomposition(tuple(blocks))


def is_two_connected(g: Graph) -> bool:
    """Connected, at least three vertices, no cut vertex."""
    return g.num_vertices >= 3 and len(biconnected_blocks(g)) == 1


def upper_bound_witness(g: Graph) -> Graph:
    """Spanning subgraph with the same components and the same bipartiteness:
    a spanning forest, plus one odd-cycle-closing edge when ``g`` is not
    bipartite."""
    parent, depth, tree = _bfs_forest(g)
    extra = []
    for u, v in g.edges:
        if depth[u] % 2 == depth[v] % 2:
            extra.append((u, v))
            break
    return Graph.from_edges(tree + extra)


# -- named families --------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges((i, i + 1) for i in range(1, n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges([(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1))


def theta_graph(*lengths: int) -> Graph:
    """Vertices 1 and 2 joined by internally disjoint paths of the given lengths."""
    if sorted(lengths).count(1) > 1:
        raise ValueError("at most one path of length 1")
    edges = []
    nxt = 3
    for length in lengths:
        walk = [1] + list(range(nxt, nxt + length - 1)) + [2]
        nxt += length - 1
        edges += list(zip(walk, walk[1:]))
    return Graph.from_edges(edges)
