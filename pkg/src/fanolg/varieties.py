"""The input datum shared by every computation: a smooth Fano complete intersection."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True)
class CompleteIntersection:
    """A smooth complete intersection of dimension ``dim`` in projective space of
    dimension ``dim + k``, cut out by ``k = len(degrees)`` generic hypersurfaces.

    Every quantity computed downstream depends only on the dimension and the
    degree list; smoothness is assumed, never checked.  The Fano condition
    ``sum(degrees) <= dim + k`` is enforced, as is ``degree >= 2`` for every
    hypersurface (a linear equation merely lowers the ambient dimension) and
    ``k >= 1`` (projective space itself is not accepted as a degenerate case).
    """

    dim: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if not isinstance(self.dim, int) or self.dim < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.dim!r}")
        if not degrees:
            raise ValueError("at least one hypersurface is required (k = 0 is not supported)")
        for d in degrees:
            if not isinstance(d, int) or d < 2:
                raise ValueError(
                    f"every degree must be an integer >= 2, got {d!r}"
                    " (a degree-1 equation reduces to a smaller ambient space)"
                )
        if self.index < 1:
            raise ValueError(
                f"not Fano: total degree {sum(degrees)} exceeds dim + k = {self.dim + self.k}"
            )

    @property
    def k(self) -> int:
        """Number of defining hypersurfaces."""
        return len(self.degrees)

    @property
    def index(self) -> int:
        """Fano index: dim + k + 1 - sum(degrees), at least 1 by construction."""
        return self.dim + self.k + 1 - sum(self.degrees)

    @property
    def l(self) -> int:
        """index - 1; the number of free torus variables in the mirror polynomial."""
        return self.index - 1

    def __str__(self) -> str:
        return f"dim {self.dim}, degrees ({', '.join(map(str, self.degrees))})"


def fano_sweep(
    max_dim: int, max_k: int, max_degree: int, *, min_dim: int = 2
) -> Iterator[CompleteIntersection]:
    """All Fano complete intersections with dimension in [min_dim, max_dim], at most
    max_k hypersurfaces and degrees in [2, max_degree].

    One representative per unordered degree multiset (nondecreasing tuples), in
    deterministic (dim, k, degrees) order.
    """
    for dim in range(min_dim, max_dim + 1):
        for k in range(1, max_k + 1):
            for degrees in combinations_with_replacement(range(2, max_degree + 1), k):
                if sum(degrees) <= dim + k:
                    yield CompleteIntersection(dim, degrees)
