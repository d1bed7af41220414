"""Graph corpora: seeded random graphs and small exhaustive families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path

from .graph import Graph, connected_components, is_bipartite, load_graph


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    graph: Graph
    connected: bool


def relabel(edges) -> Graph:
    """Rename the vertices to ``1..n`` in order of appearance in sorted edges."""
    names: dict[int, int] = {}
    for e in sorted(tuple(sorted(e)) for e in edges):
        for v in e:
            names.setdefault(v, len(names) + 1)
    return Graph.from_edges((names[u], names[v]) for u, v in edges)


def random_corpus(count: int, max_edges: int, seed: int,
                  max_vertices: int | None = None) -> list[CorpusEntry]:
    """Erdős–Rényi samples with isolated vertices pruned.

    Even-numbered entries are bipartite, odd-numbered ones are not; samples
    that miss the quota, are empty or exceed ``max_edges`` are rejected.
    """
    if max_edges < 1 or count < 0:
        raise ValueError("need max_edges >= 1 and count >= 0")
    rng = random.Random(seed)
    top = max_vertices or max_edges + 1
    out: list[CorpusEntry] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10_000 * (count + 1):
            raise RuntimeError("random corpus rejection sampling did not converge")
        want_bipartite = len(out) % 2 == 0
        if not want_bipartite and max_edges < 3:
            want_bipartite = True
        n = rng.randint(2, max(2, top))
        prob = rng.random()
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < prob]
        if not edges or len(edges) > max_edges:
            continue
        g = relabel(edges)
        if is_bipartite(g).flag != want_bipartite:
            continue
        b0, _ = connected_components(g)
        out.append(CorpusEntry(f"random-{seed}-{len(out):04d}", g, b0 == 1))
    return out


def _canonical(g: Graph) -> tuple:
    """Smallest relabelled edge list, permuting only within classes of
    vertices sharing degree and neighbour-degree profile."""
    adj = g.adjacency
    profile = {v: (len(adj[v]), tuple(sorted(len(adj[w]) for w in adj[v])))
               for v in g.vertices}
    classes: dict[tuple, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(profile[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for perms in product(*(permutations(c) for c in groups)):
        order = [v for p in perms for v in p]
        name = {v: i + 1 for i, v in enumerate(order)}
        key = tuple(sorted(tuple(sorted((name[u], name[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return best


def connected_bipartite_graphs(max_edges: int) -> list[Graph]:
    """All connected bipartite graphs with at most ``max_edges`` edges, one
    per isomorphism class, grown edge by edge from a single edge."""
    level = {_canonical(Graph.from_edges([(1, 2)])): Graph.from_edges([(1, 2)])}
    found = dict(level)
    for _ in range(max_edges - 1):
        nxt = {}
        for g in level.values():
            vs = g.vertices
            fresh = max(vs) + 1
            cands = [(u, fresh) for u in vs]
            cands += [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]
                      if (u, v) not in g.edge_index]
            for e in cands:
                h = Graph.from_edges(list(g.edges) + [e])
                if not is_bipartite(h).flag:
                    continue
                key = _canonical(h)
                if key not in found and key not in nxt:
                    nxt[key] = Graph.from_edges(key)
        found.update(nxt)
        level = nxt
    return sorted(found.values(), key=lambda g: (g.num_edges, g.num_vertices, g.edges))


def directory_corpus(path: str | Path) -> list[CorpusEntry]:
    """Every ``*.json`` and ``*.txt`` graph file in ``path``, sorted by name."""
    files = sorted(p for p in Path(path).iterdir() if p.suffix in (".json", ".txt"))
    out = []
    for f in files:
        g = load_graph(f)
        out.append(CorpusEntry(f.stem, g, connected_components(g)[0] == 1))
    return out
