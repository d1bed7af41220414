"""Maximum vertex joins and ear decompositions.

A join is an edge set meeting every cycle in at most half of its edges;
``mu(G)`` is the largest size of a join. Checking simple cycles suffices,
since any circuit splits into edge-disjoint cycles.

Ears are stored as vertex sequences. The first ear is a cycle through the
base vertex (first and last entries equal). Later ears are paths whose
ends lie on earlier pieces and whose inner vertices are new; a later ear
may also be closed at an earlier vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError, ResourceLimit
from .graph import (DEFAULT_CYCLE_CAP, Cycle, Edge, Graph, edge, enumerate_simple_cycles,
                    is_two_connected)

DEFAULT_JOIN_EDGE_CAP = 22


# -- joins -----------------------------------------------------------------

@dataclass(frozen=True)
class JoinCertificate:
    edges: tuple[Edge, ...]
    # (cycle, |J ∩ E_C|, |E_C|) for every simple cycle
    cycle_checks: tuple[tuple[Cycle, int, int], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {"join": [list(e) for e in self.edges]}


def is_join(g: Graph, J: Iterable[Sequence[int]], cycles: Sequence[Cycle] | None = None
            ) -> tuple[bool, Cycle | None]:
    """``(True, None)`` or ``(False, first violated cycle)``."""
    chosen = {edge(*e) for e in J}
    for e in chosen:
        if e not in g.edge_index:
            raise PreconditionError(f"{e} is not an edge of the graph")
    if cycles is None:
        cycles = enumerate_simple_cycles(g)
    for c in cycles:
        if 2 * len(chosen & c.edges) > len(c):
            return False, c
    return True, None


def max_join(g: Graph, edge_cap: int = DEFAULT_JOIN_EDGE_CAP,
             cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[int, JoinCertificate]:
    """Exact ``mu(G)`` by depth-first branch and bound over the edges.

    Each cycle carries a budget of ``floor(|C|/2)`` join edges; an edge can
    be taken only while all of its cycles have budget left. The bound is
    the current size plus the number of later edges that are still
    admissible.
    """
    m = g.num_edges
    if m > edge_cap:
        raise ResourceLimit(f"{m} edges exceeds the join solver cap of {edge_cap}")
    cycles = enumerate_simple_cycles(g, cap=cycle_cap)
    index = g.edge_index
    on_cycles: list[list[int]] = [[] for _ in range(m)]
    for ci, c in enumerate(cycles):
        for e in c.edges:
            on_cycles[index[e]].append(ci)
    budget = [len(c) // 2 for c in cycles]
    chosen: list[int] = []
    best: list[int] = []

    def admissible(k: int) -> bool:
        return all(budget[ci] > 0 for ci in on_cycles[k])

    def search(k: int):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if k == m:
            return
        bound = len(chosen) + sum(1 for j in range(k, m) if admissible(j))
        if bound <= len(best):
            return
        if admissible(k):
            for ci in on_cycles[k]:
                budget[ci] -= 1
            chosen.append(k)
            search(k + 1)
            chosen.pop()
            for ci in on_cycles[k]:
                budget[ci] += 1
        search(k + 1)

    search(0)
    J = tuple(g.edges[k] for k in best)
    Jset = set(J)
    checks = tuple((c, len(Jset & c.edges), len(c)) for c in cycles)
    return len(J), JoinCertificate(J, checks)


# -- ear decompositions ----------------------------------------------------

@dataclass(frozen=True)
class Ear:
    vertices: tuple[int, ...]
    host: int | None = None          # 0 is the base vertex, i >= 1 the ear P_i
    interval: tuple[int, ...] | None = None   # vertex sequence of the nest interval

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def inner(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def to_json(self) -> dict:
        out: dict = {"vertices": list(self.vertices)}
        if self.host is not None:
            out["host"] = self.host
        if self.interval is not None:
            out["interval"] = list(self.interval)
        return out


@dataclass(frozen=True)
class EarDecomposition:
    base: int
    ears: tuple[Ear, ...]

    @classmethod
    def of(cls, base: int, ears: Iterable[Sequence[int]]) -> "EarDecomposition":
        return cls(base, tuple(Ear(tuple(e)) for e in ears))

    @property
    def nesting(self) -> dict[int, tuple[int, tuple[int, ...]]] | None:
        """``{ear number: (host number, interval)}`` if every ear has one."""
        if any(e.host is None for e in self.ears):
            return None
        return {i + 1: (e.host, e.interval) for i, e in enumerate(self.ears)}

    def with_nesting(self, assignment: dict[int, tuple[int, tuple[int, ...]]]
                     ) -> "EarDecomposition":
        ears = []
        for i, e in enumerate(self.ears, 1):
            host, interval = assignment[i]
            ears.append(Ear(e.vertices, host, interval))
        return EarDecomposition(self.base, tuple(ears))

    def to_json(self) -> dict:
        return {"base": self.base, "ears": [e.to_json() for e in self.ears]}

    @classmethod
    def from_json(cls, data: dict | str) -> "EarDecomposition":
        if isinstance(data, str):
            data = json.loads(data)
        ears = []
        for e in data["ears"]:
            interval = e.get("interval")
            ears.append(Ear(tuple(e["vertices"]), e.get("host"),
                            tuple(interval) if interval is not None else None))
        return cls(int(data["base"]), tuple(ears))


def verify_ear_decomposition(g: Graph, d: EarDecomposition) -> tuple[bool, list[str]]:
    """Check the edge partition, the anchoring of ear ends and the
    freshness of inner vertices."""
    problems: list[str] = []
    if d.base not in g.adjacency:
        problems.append(f"base {d.base} is not a vertex")
    if not d.ears:
        problems.append("no ears")
    covered = {d.base}
    used: set[Edge] = set()
    for i, ear in enumerate(d.ears, 1):
        vs = ear.vertices
        if len(vs) < 2:
            problems.append(f"P{i}: fewer than two vertices")
            continue
        for e in ear.edges:
            if e[0] == e[1] or e not in g.edge_index:
                problems.append(f"P{i}: {e} is not an edge")
            elif e in used:
                problems.append(f"P{i}: edge {e} already used")
            used.add(e)
        if len(set(ear.edges)) != len(ear.edges):
            problems.append(f"P{i}: repeats an edge")
        inner = ear.inner
        if len(set(inner)) != len(inner) or set(inner) & set(ear.ends):
            problems.append(f"P{i}: not a path (repeated vertex)")
        for v in ear.ends:
            if v not in covered:
                problems.append(f"P{i}: end-vertex {v} not in earlier pieces")
        stale = sorted(set(inner) & covered)
        if stale:
            problems.append(f"P{i}: inner vertices {stale} already in earlier pieces")
        if ear.closed and ear.length < 3:
            problems.append(f"P{i}: closed ear shorter than 3")
        covered.update(vs)
    missing = sorted(set(g.edges) - used)
    if missing:
        problems.append(f"edges {missing} not covered by any ear")
    return not problems, problems


def even_ear_count(d: EarDecomposition) -> int:
    return sum(1 for e in d.ears if e.length % 2 == 0)


def _host_intervals(host: Sequence[int], a: int, b: int) -> list[tuple[int, ...]]:
    """Subpaths of ``host`` between ``a`` and ``b``; both arcs when the
    host is closed."""
    vs = list(host)
    if vs[0] == vs[-1]:
        cyc = vs[:-1]
        n = len(cyc)
        if a not in cyc or b not in cyc:
            return []
        i, j = cyc.index(a), cyc.index(b)
        fwd = [cyc[(i + k) % n] for k in range((j - i) % n + 1)]
        bwd = [cyc[(i - k) % n] for k in range((i - j) % n + 1)]
        return [tuple(fwd), tuple(bwd)]
    if a not in vs or b not in vs:
        return []
    i, j = vs.index(a), vs.index(b)
    if i <= j:
        return [tuple(vs[i:j + 1])]
    return [tuple(reversed(vs[j:i + 1]))]


def _path_edges(vs: Sequence[int]) -> frozenset:
    return frozenset(edge(vs[k], vs[k + 1]) for k in range(len(vs) - 1))


def _laminar(a: frozenset, b: frozenset) -> bool:
    return not (a & b) or a <= b or b <= a


def is_nested(g: Graph, d: EarDecomposition
              ) -> tuple[bool, dict[int, tuple[int, tuple[int, ...]]] | None]:
    """Search host ears and nest intervals making ``d`` nested.

    ``P1`` is nested in the base vertex by convention. Every later ear must
    be open, have both ends on one earlier ear, and nest intervals inside a
    common host must be disjoint or contained in one another.
    """
    valid, _ = verify_ear_decomposition(g, d)
    if not valid:
        return False, None
    ears = d.ears
    options: list[list[tuple[int, tuple[int, ...], frozenset]]] = []
    for i, ear in enumerate(ears[1:], 2):
        a, b = ear.ends
        if a == b:
            return False, None
        opts = []
        for j in range(1, i):
            for iv in _host_intervals(ears[j - 1].vertices, a, b):
                opts.append((j, iv, _path_edges(iv)))
        if not opts:
            return False, None
        options.append(opts)

    chosen: list[tuple[int, tuple[int, ...], frozenset]] = []

    def place(k: int) -> bool:
        if k == len(options):
            return True
        for host, iv, es in options[k]:
            if all(h != host or _laminar(es, es2) for h, _, es2 in chosen):
                chosen.append((host, iv, es))
                if place(k + 1):
                    return True
                chosen.pop()
        return False

    if not place(0):
        return False, None
    first = ears[0]
    assignment = {1: (0, (first.vertices[0],))}
    for i, (host, iv, _) in enumerate(chosen, 2):
        assignment[i] = (host, iv)
    return True, assignment


# -- searches over decompositions ------------------------------------------

def _require_two_connected(g: Graph):
    if not is_two_connected(g):
        raise PreconditionError("ear decompositions are searched on 2-connected graphs only")


def _ears_from(g: Graph, used: int, covered: int, vbit: dict, ebit: dict,
               closed_ok: bool = True) -> Iterator[tuple[tuple[int, ...], int]]:
    """Paths starting at a covered vertex, running through uncovered
    vertices, ending at a covered vertex over unused edges. Each open ear
    is produced once (from its smaller end)."""
    adj = g.adjacency
    for s in g.vertices:
        if not covered & vbit[s]:
            continue
        path = [s]
        stack = [iter(adj[s])]
        on_path = vbit[s]
        emask = 0
        emasks = [0]
        while stack:
            advanced = False
            for w in stack[-1]:
                e = ebit[edge(path[-1], w)]
                if used & e or emask & e:
                    continue
                if covered & vbit[w]:
                    if w == s:
                        if not closed_ok or len(path) < 3:
                            continue
                    elif w < s:
                        continue
                    yield tuple(path) + (w,), emask | e
                    continue
                if on_path & vbit[w]:
                    continue
                path.append(w)
                on_path |= vbit[w]
                emask |= e
                emasks.append(emask)
                stack.append(iter(adj[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                v = path.pop()
                on_path &= ~vbit[v]
                emasks.pop()
                emask = emasks[-1] if emasks else 0


def _bits(g: Graph):
    vbit = {v: 1 << i for i, v in enumerate(g.vertices)}
    ebit = {e: 1 << i for i, e in enumerate(g.edges)}
    return vbit, ebit


def _mask_vertices(g: Graph, emask: int) -> int:
    vbit, _ = _bits(g)
    out = 0
    for i, (u, v) in enumerate(g.edges):
        if emask >> i & 1:
            out |= vbit[u] | vbit[v]
    return out


def min_even_ears(g: Graph, state_cap: int = 2_000_000) -> tuple[int, EarDecomposition]:
    """``phi(G)`` and a decomposition attaining it, by dynamic programming
    over the set of edges already covered."""
    _require_two_connected(g)
    vbit, ebit = _bits(g)
    full = (1 << g.num_edges) - 1
    INF = float("inf")
    memo: dict[tuple[int, int], tuple[float, tuple | None]] = {}

    def solve(used: int, covered: int) -> float:
        if used == full:
            return 0
        key = (used, covered)
        if key in memo:
            return memo[key][0]
        if len(memo) > state_cap:
            raise ResourceLimit(f"more than {state_cap} ear-search states")
        best: float = INF
        arg = None
        for ear, emask in _ears_from(g, used, covered, vbit, ebit):
            cost = (len(ear) - 1) % 2 == 0
            if cost >= best:
                continue
            nv = covered
            for v in ear:
                nv |= vbit[v]
            sub = cost + solve(used | emask, nv)
            if sub < best:
                best, arg = sub, (ear, used | emask, nv)
                if best == 0:
                    break
        memo[key] = (best, arg)
        return best

    best_val: float = INF
    best_base = None
    for v in g.vertices:
        val = solve(0, vbit[v])
        if val < best_val:
            best_val, best_base = val, v
    if best_val == INF:
        raise PreconditionError("graph has no ear decomposition")
    ears = []
    key = (0, vbit[best_base])
    while key[0] != full:
        _, (ear, used, covered) = memo[key]
        ears.append(ear)
        key = (used, covered)
    return int(best_val), EarDecomposition.of(best_base, ears)


def frank_check(g: Graph) -> tuple[bool, int, int]:
    """``(2 mu == phi + |V| - 1, mu, phi)``."""
    mu, _ = max_join(g)
    phi, _ = min_even_ears(g)
    return 2 * mu == phi + g.num_vertices - 1, mu, phi


class _NestedSearch:
    """Nested ear decompositions of a 2-connected graph.

    A state is the set of placed ears together with their host and nest
    interval; the future depends only on that set, not on the order in
    which the ears were placed.
    """

    def __init__(self, g: Graph, state_cap: int):
        self.g = g
        self.state_cap = state_cap
        self.vbit, self.ebit = _bits(g)
        self.full = (1 << g.num_edges) - 1
        self.memo: dict[frozenset, frozenset[int]] = {}

    def first_ears(self) -> Iterator[tuple[int, ...]]:
        for c in enumerate_simple_cycles(self.g):
            yield c.vertices + (c.vertices[0],)

    def moves(self, placed: tuple) -> Iterator[tuple]:
        """Next ears: ``(vertices, host index, interval, interval edges)``."""
        g = self.g
        vbit, ebit = self.vbit, self.ebit
        used = 0
        covered = 0
        for vs, _, _, _ in placed:
            for k in range(len(vs) - 1):
                used |= ebit[edge(vs[k], vs[k + 1])]
            for v in vs:
                covered |= vbit[v]
        for ear, emask in _ears_from(g, used, covered, vbit, ebit, closed_ok=False):
            a, b = ear[0], ear[-1]
            for h, (hvs, _, _, _) in enumerate(placed):
                for iv in _host_intervals(hvs, a, b):
                    es = _path_edges(iv)
                    if all(p[1] != h or _laminar(es, p[3]) for p in placed[1:]):
                        yield ear, h, iv, es

    def epsilons(self, placed: tuple) -> frozenset[int]:
        """Even-ear counts achievable by completing ``placed``."""
        used = 0
        for vs, _, _, _ in placed:
            for k in range(len(vs) - 1):
                used |= self.ebit[edge(vs[k], vs[k + 1])]
        if used == self.full:
            return frozenset([0])
        key = frozenset((p[0], p[1], p[2]) for p in placed)
        if key in self.memo:
            return self.memo[key]
        if len(self.memo) > self.state_cap:
            raise ResourceLimit(f"more than {self.state_cap} nested-search states")
        out = set()
        for ear, h, iv, es in self.moves(placed):
            even = (len(ear) - 1) % 2 == 0
            for rest in self.epsilons(placed + ((ear, h, iv, es),)):
                out.add(rest + even)
        result = frozenset(out)
        self.memo[key] = result
        return result

    def find(self, placed: tuple) -> tuple | None:
        used = 0
        for vs, _, _, _ in placed:
            for k in range(len(vs) - 1):
                used |= self.ebit[edge(vs[k], vs[k + 1])]
        if used == self.full:
            return placed
        for ear, h, iv, es in self.moves(placed):
            nxt = placed + ((ear, h, iv, es),)
            if self.epsilons(nxt):
                return self.find(nxt)
        return None


def _to_decomposition(placed: tuple) -> EarDecomposition:
    first = placed[0][0]
    ears = [Ear(first, 0, (first[0],))]
    for vs, h, iv, _ in placed[1:]:
        ears.append(Ear(vs, h + 1, iv))
    return EarDecomposition(first[0], tuple(ears))


def search_nested_decomposition(g: Graph, state_cap: int = 500_000
                                ) -> tuple[EarDecomposition, int] | None:
    """A nested ear decomposition and its number of even ears, or ``None``."""
    _require_two_connected(g)
    search = _NestedSearch(g, state_cap)
    for first in search.first_ears():
        start = ((first, -1, (first[0],), frozenset()),)
        if search.epsilons(start):
            d = _to_decomposition(search.find(start))
            return d, even_ear_count(d)
    return None


def nested_epsilon_values(g: Graph, state_cap: int = 500_000) -> frozenset[int]:
    """Even-ear counts over all nested ear decompositions (empty if none)."""
    _require_two_connected(g)
    search = _NestedSearch(g, state_cap)
    out: set[int] = set()
    for first in search.first_ears():
        even = (len(first) - 1) % 2 == 0
        start = ((first, -1, (first[0],), frozenset()),)
        out.update(e + even for e in search.epsilons(start))
    return frozenset(out)
