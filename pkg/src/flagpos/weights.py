"""Dominance, the dominant-difference order, and maximal weights.

``leq(mu, lam)`` holds when ``lam - mu`` is a nonnegative combination of
dominant weights. Since the dominant cone is generated by the fundamental
weights, this is the same as ``lam - mu`` being dominant.

The usual root order (difference is a nonnegative integer combination of
simple roots) is available as :func:`root_order_leq` for cross-checks only.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidInputError
from .rootsys import RootSystem, Weight

__all__ = [
    "WeightMultiset",
    "is_dominant",
    "leq",
    "lt",
    "maximal_weights",
    "root_order_leq",
    "maximal_weights_root_order",
    "to_simple_root_coords",
]


def weight_sort_key(w: Weight):
    # mirrors the root ordering: "height" first, then coordinates
    return (sum(w.coords), w.coords)


@dataclass(frozen=True)
class WeightMultiset:
    """Weights with positive multiplicities, merged and sorted canonically."""

    entries: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        merged: Counter = Counter()
        rank = None
        for w, m in self.entries:
            if not isinstance(w, Weight):
                w = Weight(tuple(w))
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise InvalidInputError(f"multiplicity must be a positive integer, got {m!r}")
            if rank is None:
                rank = w.rank
            elif w.rank != rank:
                raise InvalidInputError(f"weight {w} has rank {w.rank}, expected {rank}")
            merged[w] += m
        if not merged:
            raise InvalidInputError("weight multiset is empty")
        ordered = tuple(sorted(merged.items(), key=lambda e: weight_sort_key(e[0])))
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def of(cls, weights: Iterable) -> "WeightMultiset":
        """Build from an iterable of weights (or coordinate sequences), one copy each."""
        return cls(tuple((w if isinstance(w, Weight) else Weight(tuple(w)), 1) for w in weights))

    @property
    def rank(self) -> int:
        return self.entries[0][0].rank

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def distinct(self) -> list[Weight]:
        return [w for w, _ in self.entries]

    def expanded(self) -> list[Weight]:
        """Every weight repeated according to its multiplicity."""
        return [w for w, m in self.entries for _ in range(m)]

    def multiplicity(self, w: Weight) -> int:
        return dict(self.entries).get(w, 0)

    def shifted(self, mu: Weight) -> "WeightMultiset":
        """Add ``mu`` to every weight (tensoring with the line bundle of weight mu)."""
        return WeightMultiset(tuple((w + mu, m) for w, m in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "[" + ",".join(f"{w}x{m}" if m > 1 else str(w) for w, m in self.entries) + "]"


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam.coords)


def leq(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam`` in the dominant-difference order."""
    if mu.rank != lam.rank:
        raise InvalidInputError(f"rank mismatch: {mu.rank} vs {lam.rank}")
    return is_dominant(lam - mu)


def lt(mu: Weight, lam: Weight) -> bool:
    return mu != lam and leq(mu, lam)


def _maximal(ms: WeightMultiset, le) -> WeightMultiset:
    if not isinstance(ms, WeightMultiset):
        raise InvalidInputError("expected a WeightMultiset")
    ws = ms.distinct()
    keep = tuple(
        (w, m) for w, m in ms.entries if not any(v != w and le(w, v) for v in ws)
    )
    return WeightMultiset(keep)


def maximal_weights(ms: WeightMultiset) -> WeightMultiset:
    """Entries not strictly below another entry; multiplicities are kept."""
    return _maximal(ms, leq)


@functools.lru_cache(maxsize=None)
def _inverse_cartan(cartan) -> tuple[tuple[Fraction, ...], ...]:
    n = len(cartan)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == k)) for k in range(n)]
         for i, row in enumerate(cartan)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def to_simple_root_coords(lam: Weight, rs: RootSystem) -> tuple[Fraction, ...]:
    """Write ``lam`` in the simple-root basis, i.e. solve ``A c = lam`` exactly."""
    if lam.rank != rs.rank:
        raise InvalidInputError(f"rank mismatch: {lam.rank} vs {rs.rank}")
    inv = _inverse_cartan(rs.cartan)
    return tuple(sum(a * x for a, x in zip(row, lam.coords)) for row in inv)


def root_order_leq(mu: Weight, lam: Weight, rs: RootSystem) -> bool:
    """Standard order: ``lam - mu`` is a nonnegative integer sum of simple roots."""
    if mu.rank != lam.rank:
        raise InvalidInputError(f"rank mismatch: {mu.rank} vs {lam.rank}")
    c = to_simple_root_coords(lam - mu, rs)
    return all(x.denominator == 1 and x >= 0 for x in c)


def maximal_weights_root_order(ms: WeightMultiset, rs: RootSystem) -> WeightMultiset:
    return _maximal(ms, lambda a, b: root_order_leq(a, b, rs))
