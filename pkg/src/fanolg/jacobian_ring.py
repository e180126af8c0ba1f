"""The Hodge number h^{1,N-1} of a Fano complete intersection.

It equals the dimension of one bigraded piece of the Jacobian-type ring of the
defining equations, and that dimension depends only on the degrees.  The module
computes it by three routes that must agree: a closed inclusion-exclusion
formula, a nested binomial sum, and direct monomial enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exactmath import binomial
from .varieties import CompleteIntersection


@dataclass(frozen=True)
class HodgeReport:
    """Hodge data of a complete intersection.

    ``h`` is h^{1, dim-1}; ``h_pr`` the primitive part, which differs from ``h``
    only in the middle slot of a surface, where the hyperplane class adds one.
    The two ring dimensions it is derived from are kept for inspection.
    """

    h_pr: int
    h: int
    dim_R_prime: int
    dim_R: int
    index: int


def poly_space_dim(d: int, m: int) -> int:
    """Dimension of the space of homogeneous polynomials of degree d in m
    variables, i.e. C(d + m - 1, m - 1); zero for negative d."""
    if m <= 0:
        raise ValueError(f"poly_space_dim requires m >= 1, got m={m}")
    if d < 0:
        return 0
    return binomial(d + m - 1, m - 1)


def delta_j(ci: CompleteIntersection, j: int) -> int:
    """Number of monomials of degree d_j - index in the dim + k + 1 ambient
    variables whose first k exponents stay below d_1, ..., d_k respectively.

    Evaluated by inclusion-exclusion over which of the k exponent caps fail:

        sum over subsets I of {1..k} of (-1)^(k - |I|) * C(sum_I d + d_j - 1, dim + k).
    """
    k = ci.k
    if not 1 <= j <= k:
        raise ValueError(f"j must be in 1..{k}, got {j}")
    dj = ci.degrees[j - 1]
    total = 0
    for mask in range(1 << k):
        subset_sum = sum(d for t, d in enumerate(ci.degrees) if mask >> t & 1)
        size = bin(mask).count("1")
        total += (-1) ** (k - size) * binomial(subset_sum + dj - 1, ci.dim + k)
    return total


def dim_R_prime_1(ci: CompleteIntersection) -> int:
    """Dimension of the (1, -index) piece of the partial quotient ring, namely
    sum_j delta_j."""
    return sum(delta_j(ci, j) for j in range(1, ci.k + 1))


def count_monomials_oracle(ci: CompleteIntersection) -> int:
    """The same dimension as ``dim_R_prime_1``, by direct enumeration of the
    monomial basis.

    For each j the basis monomials carry total degree d_j - index across the
    ambient variables, with the first k exponents capped at d_t - 1.  The k
    capped exponents are enumerated explicitly; the dim + 1 free ones are
    counted by stars and bars, which keeps the enumeration polynomial.
    """
    total = 0
    for j in range(1, ci.k + 1):
        target = ci.degrees[j - 1] - ci.index
        if target < 0:
            continue
        for head in product(*[range(d) for d in ci.degrees]):
            remaining = target - sum(head)
            if remaining >= 0:
                total += poly_space_dim(remaining, ci.dim + 1)
    return total


def dim_R_1(ci: CompleteIntersection) -> int:
    """Dimension of the (1, -index) piece of the full quotient ring.

    For index >= 2 it coincides with ``dim_R_prime_1``; at index 1 the ambient
    partial derivatives contribute dim + k + 1 independent relations in exactly
    this bidegree, which are subtracted.
    """
    correction = ci.dim + ci.k + 1 if ci.index == 1 else 0
    return dim_R_prime_1(ci) - correction


def alt_dim_formula(ci: CompleteIntersection) -> int:
    """``dim_R_1`` evaluated through the nested binomial sum

        sum_j  sum over 0 <= i_t <= d_t - 1 of
            C(sum_t (d_t - i_t) + d_j - k - 1, dim),

    with the same index-1 correction.  The inner ranges stop at d_t - 1: a
    monomial whose t-th exponent reaches d_t is zero in the quotient, and for
    k >= 2 the excluded slices contribute nonzero binomials whenever some
    d_j >= d_t + index, so extending the range would overcount.
    """
    k = ci.k
    total = 0
    ranges = [range(d) for d in ci.degrees]
    for j in range(1, k + 1):
        dj = ci.degrees[j - 1]
        for ivec in product(*ranges):
            top = sum(d - i for d, i in zip(ci.degrees, ivec)) + dj - k - 1
            total += binomial(top, ci.dim)
    correction = ci.dim + k + 1 if ci.index == 1 else 0
    return total - correction


def hodge_h1(ci: CompleteIntersection) -> HodgeReport:
    """Hodge number h^{1, dim-1} together with the ring dimensions behind it.

    The primitive number equals ``dim_R_1``; the full number adds the hyperplane
    class exactly when dim = 2 (the middle (1,1) slot of a surface).
    """
    prime = dim_R_prime_1(ci)
    full = dim_R_1(ci)
    h_pr = full
    h = h_pr + 1 if ci.dim == 2 else h_pr
    return HodgeReport(h_pr=h_pr, h=h, dim_R_prime=prime, dim_R=full, index=ci.index)


def hypersurface_corollary(dim: int, d: int) -> int:
    """Primitive h^{1, dim-1} of a degree-d hypersurface: C(2d - 1, dim + 1) for
    d <= dim, and C(2*dim + 1, dim + 1) - dim - 2 in the index-1 case d = dim + 1."""
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    if not 2 <= d <= dim + 1:
        raise ValueError(
            f"degree must lie in [2, dim + 1] = [2, {dim + 1}] (Fano, nonlinear), got {d}"
        )
    if d <= dim:
        return binomial(2 * d - 1, dim + 1)
    return binomial(2 * dim + 1, dim + 1) - dim - 2
