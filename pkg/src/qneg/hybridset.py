"""Hybrid sets with integer multiplicities and the subset-counting oracle.

A hybrid set assigns an integer multiplicity (possibly negative) to each
element.  Restricted to the standard new sets X_n, enumerating k-element
subsets yields a combinatorial interpretation of the q-binomial coefficient:
a signed, q-weighted sum over subsets reproduces qbinom(n, k) exactly.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import Counter
from typing import Iterable, Iterator, Mapping

from .laurent import LaurentPoly, ZERO
from .qbinom import Region, region

__all__ = [
    "HybridSet",
    "standard_new_set",
    "k_subsets",
    "subset_count",
    "qbinom_via_subsets",
]


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class HybridSet:
    """A finite map from integer elements to nonzero integer multiplicities.

    Rendered in the bar notation: positive-multiplicity elements (repeated
    per multiplicity) before the bar, negative after, sorted descending.

    >>> print(HybridSet({-1: 2}))
    {-1, -1 | }
    >>> print(HybridSet({-1: -2, -2: -1, -3: -1}))
    { | -1, -1, -2, -3}
    """

    multiplicities: tuple[tuple[int, int], ...]

    def __init__(self, multiplicities: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = (
            multiplicities.items()
            if isinstance(multiplicities, Mapping)
            else multiplicities
        )
        self.multiplicities = tuple(
            sorted(((e, m) for e, m in items if m != 0), reverse=True)
        )

    @classmethod
    def from_elements(cls, positives: Iterable[int] = (), negatives: Iterable[int] = ()) -> HybridSet:
        """Build from element listings, counting repeats as multiplicity."""
        counts: Counter[int] = Counter(positives)
        counts.subtract(Counter(negatives))
        return cls(counts)

    def multiplicity(self, e: int) -> int:
        for elem, m in self.multiplicities:
            if elem == e:
                return m
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.multiplicities)

    def element_count(self) -> int:
        """Sum of multiplicities; may be negative."""
        return sum(m for _, m in self.multiplicities)

    def sigma(self) -> int:
        """Multiplicity-weighted sum of elements."""
        return sum(m * e for e, m in self.multiplicities)

    def __str__(self) -> str:
        pos = [str(e) for e, m in self.multiplicities if m > 0 for _ in range(m)]
        neg = [str(e) for e, m in self.multiplicities if m < 0 for _ in range(-m)]
        return "{" + ", ".join(pos) + " | " + ", ".join(neg) + "}"

    def __repr__(self) -> str:
        return f"HybridSet('{self}')"


def standard_new_set(n: int) -> HybridSet:
    """X_n: the elements 0..n-1 with multiplicity +1 for n >= 0, or the
    elements -1..n with multiplicity -1 for n < 0."""
    if n >= 0:
        return HybridSet({e: 1 for e in range(n)})
    return HybridSet({e: -1 for e in range(-1, n - 1, -1)})


def k_subsets(n: int, k: int) -> Iterator[HybridSet]:
    """Stream the k-element subsets of X_n, region by region:

    * 0 <= k <= n: ordinary k-element subsets of {0..n-1};
    * n < 0 <= k: size-k multisets over the elements -1..n (chosen with
      replacement, all multiplicities positive);
    * k <= n < 0: hybrid sets containing X_n, every element of -1..n with
      multiplicity <= -1 and multiplicities summing to k;
    * otherwise nothing.

    Enumeration order is fixed (elements traversed -1, -2, ... on the
    negative regions) so golden tests are deterministic.
    """
    if 0 <= k <= n:
        for combo in itertools.combinations(range(n), k):
            yield HybridSet({e: 1 for e in combo})
    elif n < 0 <= k:
        elements = range(-1, n - 1, -1)
        for combo in itertools.combinations_with_replacement(elements, k):
            yield HybridSet(Counter(combo))
    elif k <= n < 0:
        elements = range(-1, n - 1, -1)
        extra = n - k  # stars to distribute on top of one mandatory copy each
        for combo in itertools.combinations_with_replacement(elements, extra):
            extras = Counter(combo)
            yield HybridSet({e: -1 - extras[e] for e in elements})


def subset_count(n: int, k: int) -> int:
    """The number of k-element subsets of X_n, counted from the stream."""
    return sum(1 for _ in k_subsets(n, k))


def qbinom_via_subsets(n: int, k: int) -> LaurentPoly:
    """The combinatorial evaluation of the q-binomial coefficient:

        eps * sum over k-subsets Y of X_n of q^(sigma(Y) - k(k-1)/2)

    with eps = 1 on the classical region, (-1)^k for n < 0 <= k, and
    (-1)^(n-k) for k <= n < 0.  Agrees with qbinom(n, k) everywhere.

    >>> qbinom_via_subsets(-3, -4)
    LaurentPoly('-q^-3 - q^-2 - q^-1')
    """
    reg = region(n, k)
    if reg is Region.VANISHING:
        return ZERO
    if reg is Region.CLASSICAL:
        eps = 1
    elif reg is Region.NEGATIVE_N:
        eps = -1 if k % 2 else 1
    else:
        eps = -1 if (n - k) % 2 else 1
    offset = -(k * (k - 1) // 2)
    weights: Counter[int] = Counter()
    for y in k_subsets(n, k):
        weights[y.sigma() + offset] += eps
    return LaurentPoly.from_terms(weights)
