"""Simple root systems with exact integer data.

Conventions used throughout the package:

* simple roots, fundamental weights and test curves are indexed from 1,
  as alpha_1, ..., alpha_l;
* the Cartan matrix is ``A[i][j] = <alpha_j, alpha_i^vee>``, so the j-th
  simple root written in the fundamental-weight basis is column j of A;
* a weight is stored by its coordinates in the fundamental-weight basis,
  and ``pairing(weight, root)`` is the coroot pairing ``<weight, root^vee>``.

Coroots are reflected alongside roots during enumeration, so no inner
product (and no root-length normalisation) is ever needed.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInputError, InvariantViolation

__all__ = [
    "SimpleType",
    "Weight",
    "Root",
    "RootSystem",
    "cartan_matrix",
    "positive_roots",
    "root_system",
    "pairing",
    "root_in_weight_coords",
    "supported_types",
]

CartanMatrix = tuple[tuple[int, ...], ...]

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def _count_positive_roots(family: str, n: int) -> int:
    if family == "A":
        return n * (n + 1) // 2
    if family in ("B", "C"):
        return n * n
    if family == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[
        (family, n)
    ]


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam not in ("A", "B", "C", "D", "E", "F", "G"):
            raise InvalidInputError(f"unknown Lie family {self.family!r}")
        n = self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidInputError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise InvalidInputError(f"type {fam}{n} does not exist")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse names such as ``"A2"``, ``"g2"`` or ``"E 8"``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise InvalidInputError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _check_rank(a, b):
    if len(a) != len(b):
        raise InvalidInputError(f"rank mismatch: {len(a)} vs {len(b)}")


@dataclass(frozen=True, order=True)
class Weight:
    """Integer weight in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        for c in coords:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidInputError(f"weight coordinate {c!r} is not an integer")
        if not coords:
            raise InvalidInputError("a weight needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight lambda_i (1-based)."""
        if not 1 <= i <= rank:
            raise InvalidInputError(f"fundamental weight index {i} out of range 1..{rank}")
        return cls(tuple(int(k == i - 1) for k in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self.coords, other.coords)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self.coords, other.coords)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class Root:
    """A root with its coroot, both in simple (co)root coordinates."""

    simple_coords: tuple[int, ...]
    coroot_coords: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_coords)

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords) and any(self.simple_coords)

    def __neg__(self) -> "Root":
        return Root(
            tuple(-c for c in self.simple_coords), tuple(-c for c in self.coroot_coords)
        )

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.simple_coords) + ")"


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(t: SimpleType) -> CartanMatrix:
    """Cartan matrix with ``A[i][j] = <alpha_j, alpha_i^vee>``, Bourbaki numbering.

    For G2 the first simple root is the long one, giving ``[[2,-1],[-3,2]]``.
    """
    if isinstance(t, str):
        t = SimpleType.parse(t)
    f, n = t.family, t.rank
    if f == "A":
        a = _chain(n)
    elif f == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif f == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif f == "D":
        a = _chain(n - 1)
        a = [row + [0] for row in a] + [[0] * n]
        a[n - 1][n - 1] = 2
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
    elif f == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] + [(k, k + 1) for k in range(6, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif f == "F":
        a = _chain(4)
        a[2][1] = -2
    else:  # G2
        a = [[2, -1], [-3, 2]]
    return tuple(tuple(row) for row in a)


def _reflect(vec, i, coeff):
    out = list(vec)
    out[i] -= coeff
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    simple_type: SimpleType
    cartan: CartanMatrix
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    def simple_root(self, j: int) -> Root:
        """alpha_j, 1-based."""
        if not 1 <= j <= self.rank:
            raise InvalidInputError(f"simple root index {j} out of range 1..{self.rank}")
        e = tuple(int(k == j - 1) for k in range(self.rank))
        return Root(e, e)

    def simple_roots(self) -> list[Root]:
        return [self.simple_root(j) for j in range(1, self.rank + 1)]

    def fundamental_weight(self, i: int) -> Weight:
        return Weight.fundamental(self.rank, i)

    def highest_root(self) -> Root:
        top = [
            r
            for r in self.positive_roots
            if all(
                all(a >= b for a, b in zip(r.simple_coords, s.simple_coords))
                for s in self.positive_roots
            )
        ]
        if len(top) != 1:
            raise InvariantViolation(f"{self.simple_type}: no unique highest root")
        return top[0]

    def roots(self) -> list[Root]:
        """All roots: positive ones followed by their negatives."""
        return list(self.positive_roots) + [-r for r in self.positive_roots]

    def root_in_weight_coords(self, alpha: Root) -> Weight:
        return root_in_weight_coords(alpha, self)

    def __str__(self):
        return str(self.simple_type)


def _saturate(cartan: CartanMatrix) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Close {+-alpha_i} under simple reflections, carrying coroots along.

    Returns a map root -> coroot over the whole root system.
    """
    n = len(cartan)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    frontier = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        neg = tuple(-c for c in e)
        frontier += [(e, e), (neg, neg)]
    for r, c in frontier:
        found[r] = c
    while frontier:
        nxt = []
        for root, coroot in frontier:
            for i in range(n):
                # s_i(a) = a - <a, alpha_i^vee> alpha_i ; s_i(a^vee) = a^vee - <alpha_i, a^vee> alpha_i^vee
                r2 = _reflect(root, i, sum(cartan[i][k] * root[k] for k in range(n)))
                c2 = _reflect(coroot, i, sum(cartan[k][i] * coroot[k] for k in range(n)))
                prev = found.get(r2)
                if prev is None:
                    found[r2] = c2
                    nxt.append((r2, c2))
                elif prev != c2:
                    raise InvariantViolation(f"root {r2} reached with coroots {prev} and {c2}")
        frontier = nxt
    return found


@functools.lru_cache(maxsize=None)
def _build(t: SimpleType) -> RootSystem:
    cartan = cartan_matrix(t)
    allroots = _saturate(cartan)
    pos = [Root(r, c) for r, c in allroots.items() if all(x >= 0 for x in r)]
    if 2 * len(pos) != len(allroots):
        raise InvariantViolation(f"{t}: roots are not split into positive and negative")
    if len(pos) != _count_positive_roots(t.family, t.rank):
        raise InvariantViolation(f"{t}: enumerated {len(pos)} positive roots")
    pos.sort(key=lambda r: (r.height, r.simple_coords))
    return RootSystem(t, cartan, tuple(pos))


def positive_roots(t: SimpleType | str) -> RootSystem:
    """Root system of type ``t`` with positive roots sorted by (height, coords)."""
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build(t)


root_system = positive_roots


def pairing(weight: Weight, alpha: Root) -> int:
    """``<weight, alpha^vee>``; for a simple root alpha_j this is ``weight[j]``."""
    if not isinstance(weight, Weight):
        weight = Weight(tuple(weight))
    _check_rank(weight.coords, alpha.coroot_coords)
    return sum(c * w for c, w in zip(alpha.coroot_coords, weight.coords))


def root_in_weight_coords(alpha: Root, t: SimpleType | RootSystem | str) -> Weight:
    """Express a root in the fundamental-weight basis (``A @ simple_coords``)."""
    if isinstance(t, RootSystem):
        cartan = t.cartan
    else:
        cartan = cartan_matrix(SimpleType.parse(t) if isinstance(t, str) else t)
    _check_rank(alpha.simple_coords, cartan)
    n = len(cartan)
    return Weight(
        tuple(sum(cartan[i][j] * alpha.simple_coords[j] for j in range(n)) for i in range(n))
    )


def supported_types(max_rank: int = 8) -> Iterable[SimpleType]:
    """Every simple type of rank at most ``max_rank``."""
    for n in range(1, max_rank + 1):
        yield SimpleType("A", n)
    for n in range(2, max_rank + 1):
        yield SimpleType("B", n)
        yield SimpleType("C", n)
    for n in range(3, max_rank + 1):
        yield SimpleType("D", n)
    for n in (6, 7, 8):
        if n <= max_rank:
            yield SimpleType("E", n)
    if max_rank >= 4:
        yield SimpleType("F", 4)
    if max_rank >= 2:
        yield SimpleType("G", 2)

