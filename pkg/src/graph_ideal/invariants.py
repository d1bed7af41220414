"""Hilbert function, degree and regularity of ``K[E_G]/I(X_G)``, and
membership questions for monomials and binomials.

The quotient is one-dimensional and Cohen-Macaulay with every edge variable
regular, so its Hilbert function is non-decreasing and constant from the
index of regularity on; ``reg I(X_G)`` is that index plus one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import Monomial, divides
from .errors import InconsistencyError, PreconditionError
from .graph import Edge, Graph, connected_components, edge, is_bipartite
from .groebner import GroebnerBasis, buchberger, ideal_of_graph


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[Monomial, ...]

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        """Minimalize under divisibility and sort."""
        gens = sorted(set(monomials), key=lambda m: (sum(m), m))
        minimal: list[Monomial] = []
        for m in gens:
            if not any(divides(g, m) for g in minimal):
                minimal.append(m)
        return cls(nvars, tuple(minimal))

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(len(gb.space), gb.leading_monomials())


@lru_cache(maxsize=4096)
def standard_monomials(mi: MonomialIdeal, d: int) -> frozenset[Monomial]:
    """Degree-``d`` monomials outside ``mi``.

    Built from degree ``d - 1``: the standard monomials form an order
    ideal, so each one of degree ``d`` is a standard monomial of degree
    ``d - 1`` times a variable.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    n = mi.nvars
    if d == 0:
        return frozenset([(0,) * n]) if (0,) * n not in mi else frozenset()
    out = set()
    for m in standard_monomials(mi, d - 1):
        for i in range(n):
            up = m[:i] + (m[i] + 1,) + m[i + 1:]
            if up not in out and up not in mi:
                out.add(up)
    return frozenset(out)


def hilbert_function(mi: MonomialIdeal, d: int) -> int:
    return len(standard_monomials(mi, d))


def hilbert_sequence(mi: MonomialIdeal, upto: int) -> list[int]:
    return [hilbert_function(mi, d) for d in range(upto + 1)]


def degree(g: Graph) -> int:
    """Closed form ``2^(|V| - b0)``, halved for bipartite graphs."""
    b0, _ = connected_components(g)
    exponent = g.num_vertices - b0 - (1 if is_bipartite(g).flag else 0)
    return 2 ** exponent


def degree_from_hf(mi: MonomialIdeal, max_degree: int = 64) -> int:
    """Stable value of the Hilbert function.

    Relies on a regular linear form: once ``HF(d) == HF(d+1)`` the function
    stays constant.
    """
    prev = hilbert_function(mi, 0)
    for d in range(1, max_degree + 1):
        cur = hilbert_function(mi, d)
        if cur == prev:
            return cur
        if cur < prev:
            raise InconsistencyError(f"Hilbert function decreases at degree {d}")
        prev = cur
    raise InconsistencyError(f"Hilbert function not stable by degree {max_degree}")


def checked_degree(g: Graph, gb: GroebnerBasis) -> int:
    expected = degree(g)
    got = degree_from_hf(initial_ideal(gb))
    if got != expected:
        raise InconsistencyError(f"degree formula gives {expected}, Hilbert function {got}")
    return expected


def regularity(gb: GroebnerBasis, g: Graph) -> int:
    """``reg I(X_G)``: first degree where HF reaches the degree, plus one."""
    target = degree(g)
    mi = initial_ideal(gb)
    for d in range(g.num_vertices + 2):
        h = hilbert_function(mi, d)
        if h > target:
            raise InconsistencyError(f"HF({d}) = {h} exceeds degree {target}")
        if h == target:
            return d + 1
    raise InconsistencyError(f"Hilbert function never reaches degree {target}")


@lru_cache(maxsize=2048)
def augmented_basis(gb: GroebnerBasis, extra: Monomial) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I + (t^extra)``."""
    gens = list(gb.elements) + [gb.ring.monomial(extra)]
    return buchberger(gens, edges=gb.edges)


def _edge_var_monomial(gb: GroebnerBasis, e: Sequence[int]) -> Monomial:
    return gb.edge_monomial({edge(*e): 1})


def regularity_artinian(gb: GroebnerBasis, e: Sequence[int], max_degree: int | None = None
                        ) -> int:
    """Least ``k`` such that every degree-``k`` monomial lies in ``(I, t_e)``."""
    mi = initial_ideal(augmented_basis(gb, _edge_var_monomial(gb, e)))
    limit = max_degree if max_degree is not None else len(gb.space) + 2
    for k in range(limit + 1):
        if hilbert_function(mi, k) == 0:
            return k
    raise InconsistencyError(f"Artinian reduction not zero by degree {limit}")


def monomial_membership(m: Monomial, gb: GroebnerBasis, extra: Monomial | None = None) -> bool:
    """Whether ``t^m`` lies in ``I(X_G)`` or, with ``extra``, in ``(I(X_G), t^extra)``."""
    basis = gb if extra is None else augmented_basis(gb, tuple(extra))
    return not basis.reduce(gb.ring.monomial(tuple(m)))


def replacement_witness(m: Monomial, gb: GroebnerBasis, extra: Monomial) -> Monomial | None:
    """A monomial ``t^b`` with ``t^m - t^b`` in ``I`` and ``t^extra | t^b``,
    found by brute force over monomials of the same degree; ``None`` if no
    such monomial exists."""
    from itertools import combinations_with_replacement

    n = len(gb.space)
    d = sum(m)
    rest = d - sum(extra)
    if rest < 0:
        return None
    for combo in combinations_with_replacement(range(n), rest):
        b = list(extra)
        for i in combo:
            b[i] += 1
        b = tuple(b)
        if not gb.reduce(gb.ring.binomial(tuple(m), b)):
            return b
    return None


def _as_edge_powers(g: Graph, mono) -> dict[Edge, int]:
    if isinstance(mono, Mapping):
        out = {}
        for e, k in mono.items():
            e = edge(*e)
            if e not in g.edge_index:
                raise PreconditionError(f"{e} is not an edge")
            if k:
                out[e] = out.get(e, 0) + k
        return out
    if len(mono) != g.num_edges:
        raise PreconditionError("exponent tuple length differs from edge count")
    return {e: k for e, k in zip(g.edges, mono) if k}


def binomial_in_ideal_oracle(g: Graph, alpha, beta) -> bool:
    """Parity test for ``t^alpha - t^beta`` in ``I(X_G)``.

    ``alpha``/``beta`` are ``{edge: exponent}`` maps or exponent tuples in
    canonical edge order. The binomial must be homogeneous with coprime
    terms. It belongs to the ideal iff the edges carrying an odd exponent
    form a subgraph in which every vertex has even degree.
    """
    a = _as_edge_powers(g, alpha)
    b = _as_edge_powers(g, beta)
    if sum(a.values()) != sum(b.values()):
        raise PreconditionError("binomial is not homogeneous")
    if set(a) & set(b):
        raise PreconditionError("monomials are not coprime")
    odd_edges = [e for e, k in list(a.items()) + list(b.items()) if k % 2]
    deg: dict[int, int] = {}
    for u, v in odd_edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return all(k % 2 == 0 for k in deg.values())


def binomial_in_ideal(gb: GroebnerBasis, alpha: Mapping, beta: Mapping) -> bool:
    """Same question decided by reduction modulo the Gröbner basis."""
    f = gb.ring.binomial(gb.edge_monomial(alpha), gb.edge_monomial(beta))
    return not gb.reduce(f)


def join_witness_excluded(gb: GroebnerBasis, join: Iterable[Sequence[int]]) -> bool:
    """For each ``e`` in the join, the product over the other join edges is
    not in ``(I, t_e)``."""
    J = [edge(*e) for e in join]
    for e in J:
        m = gb.edge_monomial({f: 1 for f in J if f != e})
        if monomial_membership(m, gb, _edge_var_monomial(gb, e)):
            return False
    return True


def graph_regularity(g: Graph, p: int = 3, **kw) -> int:
    return regularity(ideal_of_graph(g, p, **kw), g)
