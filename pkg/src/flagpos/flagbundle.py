"""Positivity verdicts for homogeneous bundles on G/P from weight data.

A bundle is identified with the multiset of weights of its defining
P-module. On the test curve C(alpha_j) each weight contributes the line
bundle O(<weight, alpha_j^vee>), i.e. its j-th coordinate. The procedure:

* for j outside the parabolic set I, read off the splitting type on C(alpha_j);
* for j in I, the curve is contracted by G/B -> G/P, so the pulled-back
  bundle must be trivial there (all j-th coordinates zero);
* strictly positive degrees on every test curve plus trivial fibres gives
  all weights dominant, hence global generation, hence ampleness.

Sign convention: weight coordinates are taken to be the test-curve degrees,
so dominant is the same as "every simple-root pairing is nonnegative".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInputError, InvariantViolation
from .rootsys import Root, RootSystem, Weight, pairing, positive_roots
from .weights import (
    WeightMultiset,
    is_dominant,
    maximal_weights,
    maximal_weights_root_order,
)

SIGN_CONVENTION = (
    "weight coordinates are test-curve degrees; dominant <=> all simple-root pairings >= 0"
)


@dataclass(frozen=True)
class ParabolicSpec:
    """P given by the set I of simple roots (1-based) of its Levi factor; I empty means P = B."""

    root_system: RootSystem
    I: frozenset = frozenset()

    def __post_init__(self):
        I = frozenset(self.I)
        n = self.root_system.rank
        for j in I:
            if not isinstance(j, int) or isinstance(j, bool) or not 1 <= j <= n:
                raise InvalidInputError(f"parabolic index {j!r} out of range 1..{n}")
        if len(I) == n:
            raise InvalidInputError("I contains every simple root: G/P is a point")
        object.__setattr__(self, "I", I)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def test_indices(self) -> list[int]:
        """Indices j not in I, i.e. the curves C(alpha_j) that survive in G/P."""
        return [j for j in range(1, self.rank + 1) if j not in self.I]

    def fiber_indices(self) -> list[int]:
        return sorted(self.I)


@dataclass(frozen=True)
class HomogeneousBundle:
    parabolic: ParabolicSpec
    weights: WeightMultiset
    label: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.weights, WeightMultiset):
            object.__setattr__(self, "weights", WeightMultiset.of(self.weights))
        if self.weights.rank != self.parabolic.rank:
            raise InvalidInputError(
                f"weights have rank {self.weights.rank} but "
                f"{self.root_system.simple_type} has rank {self.parabolic.rank}"
            )

    @classmethod
    def build(cls, type_name, I=(), weights=(), label=None) -> "HomogeneousBundle":
        """Convenience constructor: ``build("A2", {1}, [([0, 1], 2)])``.

        ``weights`` items are either coordinate sequences or ``(coords, mult)`` pairs.
        """
        rs = positive_roots(type_name)
        entries = []
        for item in weights:
            if (
                isinstance(item, tuple)
                and len(item) == 2
                and not isinstance(item[0], int)
                and isinstance(item[1], int)
            ):
                w, m = item
            else:
                w, m = item, 1
            entries.append((w if isinstance(w, Weight) else Weight(tuple(w)), m))
        return cls(ParabolicSpec(rs, frozenset(I)), WeightMultiset(tuple(entries)), label)

    @property
    def root_system(self) -> RootSystem:
        return self.parabolic.root_system

    @property
    def rank(self) -> int:
        """Rank of the vector bundle (total multiplicity)."""
        return self.weights.total

    def twist(self, mu: Weight) -> "HomogeneousBundle":
        return HomogeneousBundle(self.parabolic, self.weights.shifted(mu), self.label)


@dataclass(frozen=True)
class SplittingType:
    """Degrees (a_1 <= ... <= a_r) of a bundle split as a sum of O(a_k) on P^1."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.degrees) + ")"

    def __len__(self):
        return len(self.degrees)


class Status(str, enum.Enum):
    NOT_NEF_ON_TEST_CURVES = "NOT_NEF_ON_TEST_CURVES"
    NEF_NOT_STRICT = "NEF_NOT_STRICT"
    STRICTLY_NEF_HENCE_AMPLE = "STRICTLY_NEF_HENCE_AMPLE"


@dataclass(frozen=True)
class Violation:
    """A weight with a forbidden degree on C(alpha_j).

    ``kind`` is ``"test_curve"`` (negative degree, j not in I) or ``"fiber"``
    (nonzero degree on a contracted curve, j in I).
    """

    kind: str
    j: int
    weight: Weight
    degree: int


@dataclass(frozen=True)
class Verdict:
    status: Status
    globally_generated: bool
    fiber_consistent: bool
    splitting: dict = field(default_factory=dict)  # j -> SplittingType, j not in I
    fiber_degrees: dict = field(default_factory=dict)  # j -> SplittingType, j in I
    maximal: Optional[WeightMultiset] = None
    maximal_root_order: Optional[WeightMultiset] = None
    fiber_violations: tuple = ()
    first_violation: Optional[Violation] = None

    @property
    def ample(self) -> bool:
        return self.status is Status.STRICTLY_NEF_HENCE_AMPLE

    @property
    def orders_agree(self) -> bool:
        return self.maximal_root_order is None or self.maximal_root_order == self.maximal

    def check_invariants(self):
        if self.status is Status.STRICTLY_NEF_HENCE_AMPLE and not (
            self.globally_generated and self.fiber_consistent
        ):
            raise InvariantViolation("ample verdict without global generation / trivial fibres")
        if self.status is not Status.NOT_NEF_ON_TEST_CURVES:
            if any(d < 0 for st in self.splitting.values() for d in st.degrees):
                raise InvariantViolation("nef verdict with a negative test-curve degree")


def _check_index(E: HomogeneousBundle, j: int):
    if not isinstance(j, int) or isinstance(j, bool) or not 1 <= j <= E.parabolic.rank:
        raise InvalidInputError(f"simple root index {j!r} out of range 1..{E.parabolic.rank}")


def restrict_to_curve(E: HomogeneousBundle, j: int) -> SplittingType:
    """Splitting type of E on C(alpha_j): the j-th coordinates, with multiplicity."""
    _check_index(E, j)
    alpha = E.root_system.simple_root(j)
    return SplittingType(tuple(pairing(w, alpha) for w in E.weights.expanded()))


def line_degree_on_curve(lam: Weight, alpha: Root) -> int:
    """Degree of the line bundle L(lam) on the curve C(alpha)."""
    return pairing(lam, alpha)


def fiber_violations(E: HomogeneousBundle) -> list[Violation]:
    """All (j, weight) with j in I and a nonzero j-th coordinate."""
    out = []
    for j in E.parabolic.fiber_indices():
        for w in E.weights.distinct():
            if w.coords[j - 1] != 0:
                out.append(Violation("fiber", j, w, w.coords[j - 1]))
    return out


def check_fiber_triviality(E: HomogeneousBundle) -> tuple[bool, list[Violation]]:
    """True iff the pullback to G/B is trivial on every contracted curve C(alpha_j), j in I."""
    bad = fiber_violations(E)
    return not bad, bad


def is_globally_generated_snow(E: HomogeneousBundle) -> bool:
    """Global generation test: every maximal weight is dominant."""
    return all(is_dominant(w) for w in maximal_weights(E.weights).distinct())


def classify(E: HomogeneousBundle) -> Verdict:
    splitting = {j: restrict_to_curve(E, j) for j in E.parabolic.test_indices()}
    fibers = {j: restrict_to_curve(E, j) for j in E.parabolic.fiber_indices()}
    consistent, fviol = check_fiber_triviality(E)

    first = None
    for j in E.parabolic.test_indices():
        for w in E.weights.distinct():
            if w.coords[j - 1] < 0:
                first = Violation("test_curve", j, w, w.coords[j - 1])
                break
        if first:
            break
    if first is None:
        # a negative degree on a contracted curve makes the pullback to G/B non-nef
        first = next((v for v in fviol if v.degree < 0), None)

    if first is not None:
        status = Status.NOT_NEF_ON_TEST_CURVES
    elif consistent and all(d > 0 for st in splitting.values() for d in st.degrees):
        status = Status.STRICTLY_NEF_HENCE_AMPLE
    else:
        status = Status.NEF_NOT_STRICT

    lmax = maximal_weights(E.weights)
    lmax_root = maximal_weights_root_order(E.weights, E.root_system)
    verdict = Verdict(
        status=status,
        globally_generated=all(is_dominant(w) for w in lmax.distinct()),
        fiber_consistent=consistent,
        splitting=splitting,
        fiber_degrees=fibers,
        maximal=lmax,
        maximal_root_order=None if lmax_root == lmax else lmax_root,
        fiber_violations=tuple(fviol),
        first_violation=first,
    )
    verdict.check_invariants()
    return verdict
