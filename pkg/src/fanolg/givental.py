"""The mirror Laurent polynomial of a Fano complete intersection and its period check.

A complete intersection of degrees (d_1, ..., d_k) in P^(N+k) has the mirror
candidate

    f = prod_i (x_{i,1} + ... + x_{i,d_i-1} + 1)^{d_i} / (prod x_{i,j} * prod y_j)
        + y_1 + ... + y_l,            l = index - 1,

a Laurent polynomial in exactly N variables.  Its constant-term series must
reproduce, coefficient by coefficient, the regularized hypergeometric series

    sum_{d >= 0} (d*index)! * (d*d_1)! * ... * (d*d_k)! / (d!)^(N+k+1) * t^(d*index).

The expansion side is computed generically (iterated sparse multiplication);
the closed-form side from factorials.  Agreement is reported, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator, Mapping

from .exactmath import multinomial
from .varieties import CompleteIntersection


class LaurentPolynomial:
    """Sparse Laurent polynomial with exact integer coefficients.

    ``terms`` maps exponent tuples of length ``arity`` (entries may be negative)
    to nonzero integers; zero coefficients are never stored.
    """

    __slots__ = ("arity", "terms")

    def __init__(
        self, arity: int, terms: Mapping[tuple[int, ...], int] | None = None
    ) -> None:
        if arity < 1:
            raise ValueError(f"arity must be positive, got {arity}")
        self.arity = arity
        clean: dict[tuple[int, ...], int] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != arity:
                raise ValueError(
                    f"exponent vector {exponents} has length {len(exponents)}, expected {arity}"
                )
            if coeff:
                clean[exponents] = coeff
        self.terms = clean

    @classmethod
    def one(cls, arity: int) -> "LaurentPolynomial":
        return cls(arity, {(0,) * arity: 1})

    def coefficient(self, exponents: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def term_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return LaurentPolynomial(self.arity, out)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError(f"negative powers are not supported, got {n}")
        result = LaurentPolynomial.one(self.arity)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"LaurentPolynomial(arity={self.arity}, terms={len(self.terms)})"


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series with exact integer coefficients, indexed 0..truncation_order.

    ``alpha`` carries the regularization constant attached to the closed-form
    series: the product of the degree factorials at index 1, zero otherwise.
    """

    truncation_order: int
    coefficients: tuple[int, ...]
    alpha: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if self.truncation_order < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.truncation_order}")
        if len(self.coefficients) != self.truncation_order + 1:
            raise ValueError(
                f"expected {self.truncation_order + 1} coefficients, got {len(self.coefficients)}"
            )


@dataclass(frozen=True)
class PeriodReport:
    match: bool
    first_mismatch: int | None
    phi: PowerSeries
    i0: PowerSeries


def _bounded_compositions(limit: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers with sum at most `limit`."""
    if parts == 0:
        yield ()
        return
    for first in range(limit + 1):
        for rest in _bounded_compositions(limit - first, parts - 1):
            yield (first,) + rest


def build_fx(ci: CompleteIntersection) -> LaurentPolynomial:
    """The mirror Laurent polynomial of ``ci`` in exactly ``ci.dim`` variables,
    ordered block by block: x_{1,1}..x_{1,d_1-1}, ..., x_{k,1}..x_{k,d_k-1},
    then y_1..y_l.

    The numerator product is multiplied out with multinomial coefficients; the
    division by the x- and y-variables is realized as an exact exponent shift
    of -1 in every slot, never as field arithmetic.  The trailing y summands
    each contribute a single term, which cannot collide with the shifted block
    (their y-exponents are +1 against -1).
    """
    x_slots = sum(d - 1 for d in ci.degrees)
    arity = x_slots + ci.l
    # sum(d_i - 1) + l = dim is an identity, not an assumption
    assert arity == ci.dim

    blocks: list[list[tuple[tuple[int, ...], int]]] = []
    for d in ci.degrees:
        block = [
            (exponents, multinomial(d, exponents))
            for exponents in _bounded_compositions(d, d - 1)
        ]
        blocks.append(block)

    terms: dict[tuple[int, ...], int] = {}
    for combo in product(*blocks):
        exponents = tuple(e for part, _ in combo for e in part) + (0,) * ci.l
        coeff = 1
        for _, c in combo:
            coeff *= c
        shifted = tuple(e - 1 for e in exponents)
        terms[shifted] = terms.get(shifted, 0) + coeff

    for j in range(ci.l):
        unit = tuple(1 if t == x_slots + j else 0 for t in range(arity))
        terms[unit] = terms.get(unit, 0) + 1

    return LaurentPolynomial(arity, terms)


def _constant_terms(f: LaurentPolynomial, order: int) -> list[int]:
    """Constant terms of f^0, f^1, ..., f^order by iterated sparse multiplication.

    After each multiplication, monomials that can no longer reach exponent zero
    with the remaining factors are discarded.  The window uses the per-variable
    extremes of f's support, so the pruning never alters a retained coefficient.
    """
    out = [1]
    if order == 0:
        return out
    if not f.terms:
        return out + [0] * order
    arity = f.arity
    lo = [min(e[v] for e in f.terms) for v in range(arity)]
    hi = [max(e[v] for e in f.terms) for v in range(arity)]
    zero = (0,) * arity
    acc: dict[tuple[int, ...], int] = {zero: 1}
    for m in range(1, order + 1):
        nxt: dict[tuple[int, ...], int] = {}
        for e1, c1 in acc.items():
            for e2, c2 in f.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nxt[e] = nxt.get(e, 0) + c1 * c2
        out.append(nxt.get(zero, 0))
        remaining = order - m
        acc = {
            e: c
            for e, c in nxt.items()
            if c
            and all(
                -remaining * hi[v] <= e[v] <= -remaining * lo[v] for v in range(arity)
            )
        }
    return out


def constant_term(f: LaurentPolynomial, n: int) -> int:
    """Coefficient of the zero exponent vector in f^n (f^0 = 1 by convention)."""
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")
    return _constant_terms(f, n)[n]


def phi_series(f: LaurentPolynomial, order: int) -> PowerSeries:
    """Constant-term series of f up to the given truncation order."""
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    return PowerSeries(order, tuple(_constant_terms(f, order)))


def i_series(ci: CompleteIntersection, order: int) -> PowerSeries:
    """Closed-form coefficient series of ``ci``: the coefficient at t^(d*index) is

        (d*index)! * (d*d_1)! * ... * (d*d_k)! / (d!)^(dim + k + 1)

    (an exact integer, a product of multinomial coefficients) and every other
    coefficient vanishes.  ``alpha`` is the product of the degree factorials at
    index 1, zero otherwise.
    """
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    idx = ci.index
    coefficients = [0] * (order + 1)
    exponents_per_step = ci.dim + ci.k + 1
    d = 0
    while d * idx <= order:
        numerator = factorial(d * idx)
        for degree in ci.degrees:
            numerator *= factorial(d * degree)
        coefficients[d * idx] = numerator // factorial(d) ** exponents_per_step
        d += 1
    alpha = 1 if idx == 1 else 0
    if idx == 1:
        for degree in ci.degrees:
            alpha *= factorial(degree)
    return PowerSeries(order, tuple(coefficients), alpha=alpha)


def _first_mismatch(a: tuple[int, ...], b: tuple[int, ...]) -> int | None:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return None


def verify_period(ci: CompleteIntersection, order: int) -> PeriodReport:
    """Compare the constant-term expansion of the mirror polynomial with the
    closed-form series, coefficient by coefficient up to ``order``.

    Exact equality is required; on failure the first differing index is
    reported.
    """
    phi = phi_series(build_fx(ci), order)
    closed = i_series(ci, order)
    mismatch = _first_mismatch(phi.coefficients, closed.coefficients)
    return PeriodReport(
        match=mismatch is None, first_mismatch=mismatch, phi=phi, i0=closed
    )
