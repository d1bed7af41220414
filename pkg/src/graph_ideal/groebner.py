"""Buchberger's algorithm and the elimination route from a graph to a
reduced Gröbner basis of its binomial ideal ``I(X_G)``.

The ideal is the preimage of ``(x_i^2 - x_j^2)`` under ``t_ij -> x_i x_j``.
It is obtained by eliminating ``x`` and ``z`` from the ideal generated by
``t_e - x_i x_j z`` and ``x_i^2 - x_k^2`` under a block order in which the
edge variables are the smallest.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import (Monomial, MonomialOrder, Polynomial, PolynomialRing, PrimeField,
                      VariableSpace, coprime, divides, edge_var, guard_mask, lead_table, mono_lcm, pack,
                      normal_form,
                      s_polynomial, vertex_var)
from .errors import ResourceLimit, ValidationError
from .graph import Edge, Graph, edge

log = logging.getLogger(__name__)

DEFAULT_PAIR_CAP = 10**6


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Polynomial, ...]
    ring: PolynomialRing
    # edge labelling of the variables when the basis lives in K[E_G]
    edges: tuple[Edge, ...] | None = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def characteristic(self) -> int:
        return self.ring.field.p

    @property
    def space(self) -> VariableSpace:
        return self.ring.space

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.lm for g in self.elements)

    def edge_monomial(self, powers: Mapping[Sequence[int], int]) -> Monomial:
        """Monomial in the edge variables from ``{edge: exponent}``."""
        if self.edges is None:
            raise ValueError("basis is not over edge variables")
        index = {e: i for i, e in enumerate(self.edges)}
        exps = [0] * len(self.edges)
        for e, k in powers.items():
            exps[index[edge(*e)]] += k
        return tuple(exps)

    def normalized(self) -> tuple:
        """Characteristic-free fingerprint: signed, monic terms."""
        return tuple(g.monic().signed_terms() for g in self.elements)

    def strings(self) -> list[str]:
        return [str(g) for g in self.elements]

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "order": self.order.name,
            "variables": list(self.space.names),
            "elements": self.strings(),
        }


@dataclass(frozen=True)
class GraphVariables:
    """Variable layout ``x_1 > ... > x_n > z > t_(first) > ... > t_(last)``."""

    graph: Graph
    t_order: tuple[Edge, ...]

    @classmethod
    def of(cls, g: Graph, t_order: Iterable[Sequence[int]] | None = None) -> "GraphVariables":
        if t_order is None:
            order = g.edges
        else:
            order = tuple(edge(*e) for e in t_order)
            if sorted(order) != list(g.edges) or len(set(order)) != len(order):
                raise ValidationError("t-order must be a permutation of the edge set")
        return cls(g, order)

    @property
    def split(self) -> int:
        return self.graph.num_vertices + 1

    @property
    def full_space(self) -> VariableSpace:
        names = [vertex_var(v) for v in self.graph.vertices] + ["z"]
        return VariableSpace(tuple(names + [edge_var(e) for e in self.t_order]))

    @property
    def t_space(self) -> VariableSpace:
        return VariableSpace(tuple(edge_var(e) for e in self.t_order))

    def full_ring(self, p: int) -> PolynomialRing:
        return PolynomialRing(PrimeField(p), self.full_space,
                              MonomialOrder("block", split=self.split))

    def t_ring(self, p: int) -> PolynomialRing:
        return PolynomialRing(PrimeField(p), self.t_space, MonomialOrder("grevlex"))


def build_extended_generators(g: Graph, p: int = 3,
                              t_order: Iterable[Sequence[int]] | None = None
                              ) -> list[Polynomial]:
    layout = GraphVariables.of(g, t_order)
    ring = layout.full_ring(p)
    space = ring.space
    gens = []
    for e in layout.t_order:
        i, j = e
        gens.append(ring.from_terms([
            (space.var(edge_var(e)), 1),
            (space.monomial({vertex_var(i): 1, vertex_var(j): 1, "z": 1}), -1),
        ]))
    last = g.vertices[-1]
    for v in g.vertices[:-1]:
        gens.append(ring.binomial(space.var(vertex_var(v), 2), space.var(vertex_var(last), 2)))
    return gens


def _interreduce(G: list[Polynomial]) -> list[Polynomial]:
    """Minimalize leading monomials, then reduce every tail; sorted by
    decreasing leading monomial."""
    key = G[0].ring.order.key if G else None
    G = sorted((g.monic() for g in G if g), key=lambda g: key(g.lm), reverse=True)
    minimal: list[Polynomial] = []
    for i, g in enumerate(G):
        if any(divides(h.lm, g.lm) and (h.lm != g.lm or j < i)
               for j, h in enumerate(G) if j != i):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others).monic())
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], pair_cap: int = DEFAULT_PAIR_CAP,
               edges: tuple[Edge, ...] | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Critical pairs are taken by lowest lcm degree, ties broken by the pair's
    ``(i, j)`` indices. New pairs go through the Gebauer-Möller update, which
    contains the coprime-leading-monomial criterion.
    """
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ring = gens[0].ring
    G: list[Polynomial] = []      # every element ever added, by index
    leads: list = []              # lead_table rows for the live elements
    live: list[int] = []          # indices of elements not made redundant
    heap: list[tuple[int, int, int]] = []
    pairs: dict[tuple[int, int], tuple[Monomial, int]] = {}   # pending -> (lcm, packed)
    guard = guard_mask(ring.nvars)
    created = 0

    def add(h: Polynomial):
        nonlocal created, live
        k = len(G)
        G.append(h)
        lh = h.lm
        # Gebauer-Möller, new pairs: keep one pair per minimal lcm, in order
        # of increasing degree; coprime pairs only act as eliminators
        cand = sorted(((sum(L), i, L) for i in live for L in (mono_lcm(G[i].lm, lh),)))
        minimal: list[int] = []
        new_pairs = []
        for d, i, L in cand:
            pL = pack(L) | guard
            if any((pL - m) & guard == guard for m in minimal):
                continue
            minimal.append(pack(L))
            if not coprime(G[i].lm, lh):
                new_pairs.append((d, i, L))
        # old pairs made redundant by h
        for (i, j), (L, pL) in list(pairs.items()):
            if ((pL - pack(lh)) & guard == guard
                    and mono_lcm(G[i].lm, lh) != L and mono_lcm(G[j].lm, lh) != L):
                del pairs[(i, j)]
        for d, i, L in new_pairs:
            pairs[(i, k)] = (L, pack(L) | guard)
            heapq.heappush(heap, (d, i, k))
        created += len(new_pairs)
        if created > pair_cap:
            raise ResourceLimit(f"more than {pair_cap} critical pairs")
        live = [i for i in live
                if ((pack(G[i].lm) | guard) - pack(lh)) & guard != guard] + [k]
        leads[:] = lead_table([G[i] for i in live])

    seen = set()
    for f in gens:
        if f.ring != ring:
            raise ValueError("generators live in different rings")
        if f:
            f = f.monic()
            if f.terms not in seen:
                seen.add(f.terms)
                f = normal_form(f, (), leads) if leads else f
                if f:
                    add(f.monic())
    if not G:
        return GroebnerBasis((), ring, edges)

    reductions = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        r = normal_form(s_polynomial(G[i], G[j]), (), leads)
        reductions += 1
        if r:
            add(r.monic())
    log.debug("buchberger: %d S-polynomials reduced, %d live elements",
              reductions, len(live))
    return GroebnerBasis(tuple(_interreduce([G[i] for i in live])), ring, edges)


def eliminate(gb: GroebnerBasis, layout: GraphVariables) -> GroebnerBasis:
    """Keep the elements free of ``x`` and ``z`` and move them to ``K[E_G]``."""
    split = layout.split
    t_ring = layout.t_ring(gb.characteristic)
    kept = []
    for f in gb.elements:
        if all(not any(m[:split]) for m in f.monomials):
            kept.append(t_ring.from_terms((m[split:], c) for m, c in f.terms))
    return GroebnerBasis(tuple(_interreduce(kept)), t_ring, layout.t_order)


@lru_cache(maxsize=512)
def _ideal_cached(g: Graph, p: int, t_order: tuple[Edge, ...] | None,
                  pair_cap: int) -> GroebnerBasis:
    layout = GraphVariables.of(g, t_order)
    gens = build_extended_generators(g, p, layout.t_order)
    full = buchberger(gens, pair_cap=pair_cap)
    log.info("graph with %d edges: extended basis %d elements", g.num_edges, len(full))
    return eliminate(full, layout)


def ideal_of_graph(g: Graph, p: int = 3, t_order: Iterable[Sequence[int]] | None = None,
                   pair_cap: int = DEFAULT_PAIR_CAP) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I(X_G)`` over GF(p), grevlex on the edge
    variables (canonical edge order unless ``t_order`` is given, largest
    first). Results are cached."""
    key = None if t_order is None else tuple(edge(*e) for e in t_order)
    return _ideal_cached(g, p, key, pair_cap)


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero (no criteria used)."""
    G = gb.elements
    return all(not normal_form(s_polynomial(G[i], G[j]), G)
               for i in range(len(G)) for j in range(i + 1, len(G)))


def is_reduced(gb: GroebnerBasis) -> bool:
    G = gb.elements
    for i, g in enumerate(G):
        if g.lc != 1:
            return False
        for j, h in enumerate(G):
            if i != j and any(divides(h.lm, m) for m in g.monomials):
                return False
    return True
