"""Per-graph analysis: invariant reports and theorem verdicts.

Every verdict compares two independently computed quantities. A ``fail``
always carries the values that disagree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .combinatorics import (DEFAULT_JOIN_EDGE_CAP, max_join, min_even_ears,
                            nested_epsilon_values, search_nested_decomposition)
from .errors import InconsistencyError
from .graph import (DEFAULT_CYCLE_CAP, Edge, Graph, biconnected_blocks, connected_components,
                    is_bipartite, is_two_connected)
from .groebner import DEFAULT_PAIR_CAP, GroebnerBasis, ideal_of_graph
from .invariants import (degree, degree_from_hf, hilbert_sequence, initial_ideal,
                         regularity, regularity_artinian)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

REPORT_VERDICTS = ("lowerBound", "upperBound", "bipartiteEquality", "degreeFormula",
                   "fieldIndependence", "frankIdentity")
CHECK_VERDICTS = REPORT_VERDICTS + ("blockAdditivity", "nestedEarFormula",
                                    "artinianRegularity")


@dataclass(frozen=True)
class RunConfig:
    p: int = 3
    primes: tuple[int, ...] = (5, 7)
    t_order: tuple[Edge, ...] | None = None
    pair_cap: int = DEFAULT_PAIR_CAP
    cycle_cap: int = DEFAULT_CYCLE_CAP
    join_edge_cap: int = DEFAULT_JOIN_EDGE_CAP


@dataclass(frozen=True)
class Verdict:
    theorem_id: str
    status: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"theoremId": self.theorem_id, "status": self.status, "details": self.details}


def dumps(obj: Any) -> str:
    """Canonical text form of every JSON document the tool writes."""
    return json.dumps(obj, indent=2) + "\n"


def _verdict(name: str, ok: bool, **details) -> Verdict:
    return Verdict(name, PASS if ok else FAIL, details)


class Analysis:
    """Lazily computed invariants of one graph under one configuration."""

    def __init__(self, g: Graph, config: RunConfig = RunConfig()):
        self.g = g
        self.config = config

    def basis(self, p: int | None = None) -> GroebnerBasis:
        c = self.config
        return ideal_of_graph(self.g, c.p if p is None else p, c.t_order, c.pair_cap)

    @cached_property
    def b0(self) -> int:
        return connected_components(self.g)[0]

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.g).flag

    @cached_property
    def two_connected(self) -> bool:
        return is_two_connected(self.g)

    @cached_property
    def degree(self) -> int:
        return degree(self.g)

    @cached_property
    def reg(self) -> int:
        return regularity(self.basis(), self.g)

    @cached_property
    def hf(self) -> list[int]:
        return hilbert_sequence(initial_ideal(self.basis()), self.reg)

    @cached_property
    def reg_artinian(self) -> dict[Edge, int]:
        gb = self.basis()
        return {e: regularity_artinian(gb, e) for e in self.g.edges}

    @cached_property
    def join(self):
        return max_join(self.g, edge_cap=self.config.join_edge_cap,
                        cycle_cap=self.config.cycle_cap)

    @property
    def mu(self) -> int:
        return self.join[0]

    @cached_property
    def phi(self) -> int | None:
        return min_even_ears(self.g)[0] if self.two_connected else None

    @cached_property
    def nested(self):
        return search_nested_decomposition(self.g) if self.two_connected else None

    @cached_property
    def nested_epsilons(self) -> frozenset[int]:
        return nested_epsilon_values(self.g) if self.two_connected else frozenset()

    @property
    def epsilon(self) -> int | None:
        return self.nested[1] if self.nested else None

    @property
    def upper_bound(self) -> int:
        return self.g.num_vertices - self.b0 + (0 if self.bipartite else 1)

    # -- verdicts ----------------------------------------------------------

    def lower_bound(self) -> Verdict:
        return _verdict("lowerBound", self.mu <= self.reg, mu=self.mu, reg=self.reg,
                        join=[list(e) for e in self.join[1].edges])

    def upper(self) -> Verdict:
        return _verdict("upperBound", self.reg <= self.upper_bound, reg=self.reg,
                        bound=self.upper_bound, v=self.g.num_vertices, b0=self.b0,
                        bipartite=self.bipartite)

    def bipartite_equality(self) -> Verdict:
        if not self.bipartite:
            return Verdict("bipartiteEquality", SKIPPED, {"reason": "not bipartite"})
        return _verdict("bipartiteEquality", self.reg == self.mu, reg=self.reg, mu=self.mu)

    def degree_formula(self) -> Verdict:
        try:
            from_hf = degree_from_hf(initial_ideal(self.basis()))
        except InconsistencyError as exc:
            return _verdict("degreeFormula", False, formula=self.degree, error=str(exc))
        return _verdict("degreeFormula", from_hf == self.degree, formula=self.degree,
                        hilbert=from_hf)

    def field_independence(self) -> Verdict:
        """Initial ideals, normalized bases and regularity agree across the
        configured primes. Signed normalization is skipped in characteristic 2,
        where the sign of a coefficient is not defined."""
        primes = sorted({self.config.p, *self.config.primes})
        ref = self.basis(primes[0])
        ref_in = initial_ideal(ref).generators
        ref_reg = regularity(ref, self.g)
        mismatches = []
        for p in primes[1:]:
            gb = self.basis(p)
            if initial_ideal(gb).generators != ref_in:
                mismatches.append({"p": p, "what": "initialIdeal"})
            if 2 not in (p, primes[0]) and gb.normalized() != ref.normalized():
                mismatches.append({"p": p, "what": "basis"})
            r = regularity(gb, self.g)
            if r != ref_reg:
                mismatches.append({"p": p, "what": "reg", "reg": r, "expected": ref_reg})
        return _verdict("fieldIndependence", not mismatches, primes=primes,
                        mismatches=mismatches)

    def frank_identity(self) -> Verdict:
        if not self.two_connected:
            return Verdict("frankIdentity", SKIPPED, {"reason": "not 2-connected"})
        n = self.g.num_vertices
        return _verdict("frankIdentity", 2 * self.mu == self.phi + n - 1,
                        mu=self.mu, phi=self.phi, v=n)

    def block_additivity(self) -> Verdict:
        if not self.bipartite:
            return Verdict("blockAdditivity", SKIPPED, {"reason": "not bipartite"})
        regs = []
        for block in biconnected_blocks(self.g):
            h = self.g.subgraph(block)
            regs.append(regularity(ideal_of_graph(h, self.config.p,
                                                  pair_cap=self.config.pair_cap), h))
        return _verdict("blockAdditivity", sum(regs) == self.reg, reg=self.reg,
                        blockRegs=regs)

    def nested_ear_formula(self) -> Verdict:
        if not (self.bipartite and self.two_connected):
            return Verdict("nestedEarFormula", SKIPPED,
                           {"reason": "not bipartite and 2-connected"})
        eps = sorted(self.nested_epsilons)
        if not eps:
            return Verdict("nestedEarFormula", SKIPPED, {"reason": "no nested decomposition"})
        n = self.g.num_vertices
        bad = [e for e in eps if n + e - 1 != 2 * self.reg or e != self.phi]
        return _verdict("nestedEarFormula", not bad, reg=self.reg, v=n, epsilons=eps,
                        phi=self.phi, witness=self.nested[0].to_json())

    def artinian_regularity(self) -> Verdict:
        bad = {f"{u}-{v}": k for (u, v), k in self.reg_artinian.items() if k != self.reg}
        return _verdict("artinianRegularity", not bad, reg=self.reg, mismatches=bad)

    def verdicts(self, names=CHECK_VERDICTS) -> list[Verdict]:
        table = {
            "lowerBound": self.lower_bound,
            "upperBound": self.upper,
            "bipartiteEquality": self.bipartite_equality,
            "degreeFormula": self.degree_formula,
            "fieldIndependence": self.field_independence,
            "frankIdentity": self.frank_identity,
            "blockAdditivity": self.block_additivity,
            "nestedEarFormula": self.nested_ear_formula,
            "artinianRegularity": self.artinian_regularity,
        }
        return [table[n]() for n in names]

    def report(self) -> dict:
        reg_a = set(self.reg_artinian.values())
        verdicts = {v.theorem_id: v.status for v in self.verdicts(REPORT_VERDICTS)}
        return {
            "graph": {"v": self.g.num_vertices, "e": self.g.num_edges, "b0": self.b0,
                      "bipartite": self.bipartite},
            "p": self.config.p,
            "degree": self.degree,
            "hf": self.hf,
            "reg": self.reg,
            # one value when every edge agrees, else the list of all values
            "regArtinian": reg_a.pop() if len(reg_a) == 1 else sorted(reg_a),
            "mu": self.mu,
            "phi": self.phi,
            "epsilon": self.epsilon,
            "verdicts": verdicts,
        }


def check(g: Graph, config: RunConfig = RunConfig()) -> list[Verdict]:
    return Analysis(g, config).verdicts()


def invariant_report(g: Graph, config: RunConfig = RunConfig()) -> dict:
    return Analysis(g, config).report()
