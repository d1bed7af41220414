"""Prime fields, monomial orders and sparse multivariate polynomials.

Monomials are exponent tuples over a fixed :class:`VariableSpace`; a
polynomial is a tuple of ``(monomial, coefficient)`` terms kept sorted in
decreasing order for its ring's monomial order, with coefficients in
``[0, p)`` and never zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, ParseError

Monomial = tuple[int, ...]
Term = tuple[Monomial, int]

LT, EQ, GT = -1, 0, 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 3

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"0 has no inverse modulo {self.p}")
        return pow(a, -1, self.p)

    def signed(self, a: int) -> int:
        """Representative in ``(-p/2, p/2]``, used for printing and for
        comparing results across characteristics."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


def field_ops(a: int, b: int | None, op: str, p: int = 3) -> int:
    F = PrimeField(p)
    if op == "add":
        return F.add(a, b)
    if op == "mul":
        return F.mul(a, b)
    if op == "neg":
        return F.neg(a)
    if op == "inv":
        return F.inv(a)
    raise ValueError(f"unknown field operation {op!r}")


# -- monomials -------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


# Packed form: each exponent in its own 16-bit field whose top bit is a
# guard. (b | guard) - a keeps every guard bit set iff a divides b.
_WIDTH = 16


@lru_cache(maxsize=1 << 18)
def pack(m: Monomial) -> int:
    v = 0
    for i, e in enumerate(m):
        v |= e << (_WIDTH * i)
    return v


@lru_cache(maxsize=None)
def guard_mask(nvars: int) -> int:
    return sum(1 << (_WIDTH * i + _WIDTH - 1) for i in range(nvars))


def divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass(frozen=True)
class VariableSpace:
    names: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.names)

    @property
    def one(self) -> Monomial:
        return (0,) * len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def var(self, name: str, power: int = 1) -> Monomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = power
        return tuple(exps)

    def monomial(self, powers: Mapping[str, int]) -> Monomial:
        exps = [0] * len(self.names)
        for name, e in powers.items():
            exps[self.index(name)] += e
        return tuple(exps)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def vertex_var(i: int) -> str:
    return f"x{i}"


def edge_var(e: Sequence[int]) -> str:
    return f"t{e[0]}_{e[1]}"


# -- orders ----------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


class MonomialOrder:
    """Total order on exponent tuples; the first variable is the largest.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``. The block order
    compares the first ``split`` variables by grevlex and breaks ties with
    grevlex on the remaining ones, so any monomial involving the first
    block beats every monomial in the second block alone.
    """

    __slots__ = ("kind", "split", "key")

    def __init__(self, kind: str = "grevlex", split: int | None = None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and split is None:
            raise ValueError("block order needs a split index")
        self.kind = kind
        self.split = split if kind == "block" else None
        if kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "lex":
            self.key = _identity
        else:
            k = split

            @lru_cache(maxsize=1 << 16)
            def block_key(m):
                return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

            self.key = block_key

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.split) == (other.kind, other.split))

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', split={self.split})"
        return f"MonomialOrder({self.kind!r})"

    @property
    def name(self) -> str:
        return "block-elimination" if self.kind == "block" else self.kind


def _identity(m):
    return m


def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    """``GT`` (1), ``EQ`` (0) or ``LT`` (-1)."""
    if m1 == m2:
        return EQ
    return GT if order.key(m1) > order.key(m2) else LT


# -- polynomials -----------------------------------------------------------

@dataclass(frozen=True)
class PolynomialRing:
    field: PrimeField
    space: VariableSpace
    order: MonomialOrder

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.space)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def from_terms(self, terms: Iterable[tuple[Monomial, int]]) -> "Polynomial":
        acc: dict[Monomial, int] = {}
        p = self.field.p
        for m, c in terms:
            acc[m] = (acc.get(m, 0) + c) % p
        return self.from_dict(acc)

    def from_dict(self, d: Mapping[Monomial, int]) -> "Polynomial":
        key = self.order.key
        terms = sorted(((m, c) for m, c in d.items() if c), key=lambda t: key(t[0]),
                       reverse=True)
        return Polynomial(self, tuple(terms))

    def monomial(self, m: Monomial, c: int = 1) -> "Polynomial":
        c %= self.field.p
        return Polynomial(self, ((m, c),) if c else ())

    def binomial(self, a: Monomial, b: Monomial) -> "Polynomial":
        """``x^a - x^b``."""
        return self.from_terms([(a, 1), (b, -1)])

    def var(self, name: str) -> "Polynomial":
        return self.monomial(self.space.var(name))

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(self.field, self.space, order)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = terms

    # basic accessors
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        return self.terms[0][1]

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_polynomial(self)

    # arithmetic
    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        p = self.ring.field.p
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = (acc.get(m, 0) + sign * c) % p
        return self.ring.from_dict(acc)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, -1)

    def __neg__(self) -> "Polynomial":
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((m, (-c) % p) for m, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        p = self.ring.field.p
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring.from_dict(acc)

    def mul_term(self, c: int, m: Monomial) -> "Polynomial":
        """Multiply by the term ``c * x^m``; order is preserved, no re-sort."""
        p = self.ring.field.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((mono_mul(mm, m), (cc * c) % p)
                                           for mm, cc in self.terms))

    def monic(self) -> "Polynomial":
        if not self.terms or self.lc == 1:
            return self
        return self.mul_term(self.ring.field.inv(self.lc), self.ring.space.one)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    @property
    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def signed_terms(self) -> tuple[tuple[Monomial, int], ...]:
        """Terms with coefficients mapped to ``(-p/2, p/2]``; comparable
        across characteristics."""
        F = self.ring.field
        return tuple((m, F.signed(c)) for m, c in self.terms)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``lcm/lt(f) * f - lcm/lt(g) * g`` with both leading terms made monic."""
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial")
    F = f.ring.field
    L = mono_lcm(f.lm, g.lm)
    a = f.mul_term(F.inv(f.lc), mono_div(L, f.lm))
    b = g.mul_term(F.inv(g.lc), mono_div(L, g.lm))
    return a - b


def lead_table(divisors: Sequence[Polynomial]) -> list:
    """Precomputed ``(packed lm, lm, 1/lc, tail)`` rows for :func:`normal_form`."""
    return [(pack(d.lm), d.lm, d.ring.field.inv(d.lc), d.terms[1:]) for d in divisors if d]


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], leads: list | None = None
                ) -> Polynomial:
    """Remainder of ``f`` on division by ``divisors`` (full reduction).

    ``leads`` may be passed in from :func:`lead_table` to skip rebuilding it.
    """
    ring = f.ring
    p = ring.field.p
    key = ring.order.key
    guard = guard_mask(ring.nvars)
    if leads is None:
        leads = lead_table(divisors)
    work = dict(f.terms)
    rem: dict[Monomial, int] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        pm = pack(m) | guard
        for plm, lm, inv_lc, tail in leads:
            if (pm - plm) & guard == guard:
                factor = (c * inv_lc) % p
                shift = mono_div(m, lm)
                for dm, dc in tail:
                    nm = mono_mul(dm, shift)
                    nc = (work.get(nm, 0) - factor * dc) % p
                    if nc:
                        work[nm] = nc
                    else:
                        work.pop(nm, None)
                break
        else:
            rem[m] = c
    return ring.from_dict(rem)


def divide(f: Polynomial, divisors: Sequence[Polynomial]
           ) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: returns ``(quotients, remainder)`` with
    ``f = sum(q_i * d_i) + remainder`` and no remainder term divisible by
    any leading monomial. The first divisor that applies is always used."""
    ring = f.ring
    p = ring.field.p
    key = ring.order.key
    if any(not d for d in divisors):
        raise ValueError("division by the zero polynomial")
    quotients: list[dict[Monomial, int]] = [{} for _ in divisors]
    work = dict(f.terms)
    rem: dict[Monomial, int] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for i, d in enumerate(divisors):
            if divides(d.lm, m):
                factor = (c * ring.field.inv(d.lc)) % p
                shift = mono_div(m, d.lm)
                q = quotients[i]
                q[shift] = (q.get(shift, 0) + factor) % p
                for dm, dc in d.terms[1:]:
                    nm = mono_mul(dm, shift)
                    nc = (work.get(nm, 0) - factor * dc) % p
                    if nc:
                        work[nm] = nc
                    else:
                        work.pop(nm, None)
                break
        else:
            rem[m] = c
    return [ring.from_dict(q) for q in quotients], ring.from_dict(rem)


# -- text form -------------------------------------------------------------

def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    F = f.ring.field
    out = []
    for i, (m, c) in enumerate(f.terms):
        s = F.signed(c)
        neg = s < 0
        mag = abs(s)
        mono = f.ring.space.format_monomial(m)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``"2*t1_2^2*t2_3 - t3_4*t1_4"``-style text."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if pieces[0] != "":
        raise ParseError(f"cannot parse {text!r}")
    terms = []
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = 1
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _FACTOR.match(factor)
            if not match:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            exps[ring.space.index(match.group(1))] += int(match.group(2) or 1)
        terms.append((tuple(exps), coeff if sign == "+" else -coeff))
    return ring.from_terms(terms)
