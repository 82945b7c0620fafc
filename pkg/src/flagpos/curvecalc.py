"""Split bundles on a smooth rational curve and their pullbacks under finite covers.

Everything here is degree bookkeeping: a bundle is its splitting type
(a_1 <= ... <= a_r), a finite cover of degree d multiplies every a_i by d,
and a split bundle is ample iff every summand has positive degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidInputError, SpecParseError

__all__ = [
    "SplitBundle",
    "FiniteCover",
    "pullback",
    "min_line_quotient_degree",
    "min_quotient_degree",
    "is_ample_hartshorne",
    "lemma1_equivalence_check",
    "parse_splitting_type",
]


@dataclass(frozen=True)
class SplitBundle:
    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(self.degrees)
        if not degs:
            raise InvalidInputError("a split bundle needs at least one summand")
        for a in degs:
            if not isinstance(a, int) or isinstance(a, bool):
                raise InvalidInputError(f"degree {a!r} is not an integer")
        object.__setattr__(self, "degrees", tuple(sorted(degs)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.degrees) + ")"


@dataclass(frozen=True)
class FiniteCover:
    degree: int

    def __post_init__(self):
        d = self.degree
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InvalidInputError(f"cover degree must be an integer >= 1, got {d!r}")


def _cover(f) -> FiniteCover:
    return f if isinstance(f, FiniteCover) else FiniteCover(f)


def pullback(E: SplitBundle, f: FiniteCover | int) -> SplitBundle:
    d = _cover(f).degree
    return SplitBundle(tuple(d * a for a in E.degrees))


def min_line_quotient_degree(E: SplitBundle) -> int:
    """Smallest degree of a line-bundle quotient: projection onto the smallest summand."""
    return E.degrees[0]


def min_quotient_degree(E: SplitBundle, quotient_rank: int) -> int:
    """Lower bound for the degree of a rank-q quotient: the q smallest summands."""
    if not 1 <= quotient_rank <= E.rank:
        raise InvalidInputError(f"quotient rank {quotient_rank} out of range 1..{E.rank}")
    return sum(E.degrees[:quotient_rank])


def is_ample_hartshorne(E: SplitBundle) -> bool:
    return min_line_quotient_degree(E) > 0


def lemma1_equivalence_check(E: SplitBundle, max_cover_degree: int) -> bool:
    """Whether ampleness of E agrees with positivity of all quotients of its pullbacks.

    Covers of degree 1..max_cover_degree are tried. Expected to be true always.
    """
    if not isinstance(max_cover_degree, int) or max_cover_degree < 1:
        raise InvalidInputError(f"max cover degree must be >= 1, got {max_cover_degree!r}")
    lhs = is_ample_hartshorne(E)
    rhs = all(
        min_line_quotient_degree(pullback(E, d)) > 0 for d in range(1, max_cover_degree + 1)
    )
    return lhs == rhs


_SPLIT_RE = re.compile(r"^\(\s*(-?\d+(\s*,\s*-?\d+)*)\s*\)$")


def parse_splitting_type(text: str) -> SplitBundle:
    """Parse ``"(1,1,2)"``; a Unicode minus sign is accepted."""
    t = text.strip().replace("−", "-")
    m = _SPLIT_RE.match(t)
    if not m:
        raise SpecParseError(f"malformed splitting type {text!r}, expected e.g. (1,1,2)")
    return SplitBundle(tuple(int(x) for x in m.group(1).split(",")))
