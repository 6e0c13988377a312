"""Intuitionistic fuzzy relations on finite labeled sets.

A relation carries two degree matrices over source x target: membership
``mu`` and nonmembership ``nu``, with mu + nu <= 1 cell-wise.  Composition
is max-min for membership and min-max for nonmembership; the three order
properties (reflexivity, perfect antisymmetry, transitivity) are the
building blocks for fuzzy partial orders.

Perfect antisymmetry reads: for x != y, if the relation holds from x to y
to any degree at all (mu > 0, or mu = 0 with nu < 1), then it fully fails
in the reverse direction (mu(y,x) = 0 and nu(y,x) = 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .degrees import EMPTY, FULL, ONE, ZERO, IFPair, degree

Matrix = tuple[tuple[Fraction, ...], ...]


def _check_labels(labels: tuple[str, ...], role: str) -> None:
    if not labels:
        raise ValueError(f"{role} set must not be empty")
    if len(set(labels)) != len(labels):
        raise ValueError(f"{role} labels must be distinct")
    if not all(isinstance(x, str) and x for x in labels):
        raise ValueError(f"{role} labels must be non-empty strings")


@dataclass(frozen=True)
class IFRelation:
    """Degree-matrix pair over ``source`` x ``target``."""

    source: tuple[str, ...]
    target: tuple[str, ...]
    mu: Matrix
    nu: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        _check_labels(self.source, "source")
        _check_labels(self.target, "target")
        mu = tuple(tuple(degree(v) for v in row) for row in self.mu)
        nu = tuple(tuple(degree(v) for v in row) for row in self.nu)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        rows, cols = len(self.source), len(self.target)
        for name, m in (("mu", mu), ("nu", nu)):
            if len(m) != rows or any(len(r) != cols for r in m):
                raise ValueError(f"{name} matrix must be {rows}x{cols}")
        for i in range(rows):
            for j in range(cols):
                if mu[i][j] + nu[i][j] > ONE:
                    raise ValueError(
                        f"mu + nu > 1 at cell ({i}, {j}): "
                        f"{mu[i][j]} + {nu[i][j]} = {mu[i][j] + nu[i][j]}"
                    )

    @property
    def is_square(self) -> bool:
        return self.source == self.target

    def pair(self, i: int, j: int) -> IFPair:
        return IFPair(self.mu[i][j], self.nu[i][j])

    def pair_of(self, x: str, y: str) -> IFPair:
        return self.pair(self.source.index(x), self.target.index(y))

    @classmethod
    def from_pairs(
        cls, source: Sequence[str], target: Sequence[str], cells: Sequence[Sequence[IFPair]]
    ) -> "IFRelation":
        return cls(
            tuple(source),
            tuple(target),
            tuple(tuple(p.mu for p in row) for row in cells),
            tuple(tuple(p.nu for p in row) for row in cells),
        )

    @classmethod
    def from_bool(
        cls, source: Sequence[str], target: Sequence[str], holds: Sequence[Sequence[bool]]
    ) -> "IFRelation":
        """Embed a crisp relation: True becomes (1, 0), False becomes (0, 1)."""
        return cls.from_pairs(
            source, target, [[FULL if v else EMPTY for v in row] for row in holds]
        )

    def _require_square(self, op: str) -> None:
        if not self.is_square:
            raise ValueError(f"{op} requires a square relation on one set")


def identity_relation(labels: Sequence[str]) -> IFRelation:
    """The identity: (1, 0) on the diagonal, (0, 1) elsewhere."""
    labels = tuple(labels)
    n = len(labels)
    return IFRelation(
        labels,
        labels,
        tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)),
        tuple(tuple(ZERO if i == j else ONE for j in range(n)) for i in range(n)),
    )


def compose(r: IFRelation, s: IFRelation) -> IFRelation:
    """Relational composite over X x Z: max-min on mu, min-max on nu.

    The result stays a valid relation: for the membership-maximizing middle
    point y, nu_out <= max(nu_r(x,y), nu_s(y,z)) <= 1 - mu_out.
    """
    if r.target != s.source:
        raise ValueError("relations are not composable: r.target differs from s.source")
    ys = range(len(r.target))
    mu = tuple(
        tuple(
            max(min(r.mu[i][k], s.mu[k][j]) for k in ys)
            for j in range(len(s.target))
        )
        for i in range(len(r.source))
    )
    nu = tuple(
        tuple(
            min(max(r.nu[i][k], s.nu[k][j]) for k in ys)
            for j in range(len(s.target))
        )
        for i in range(len(r.source))
    )
    return IFRelation(r.source, s.target, mu, nu)


def is_reflexive(r: IFRelation) -> bool:
    """Every diagonal cell is exactly (1, 0)."""
    r._require_square("is_reflexive")
    return all(
        r.mu[i][i] == ONE and r.nu[i][i] == ZERO for i in range(len(r.source))
    )


def _holds_somewhat(r: IFRelation, i: int, j: int) -> bool:
    # the relation holds from i to j to some degree
    return r.mu[i][j] > ZERO or (r.mu[i][j] == ZERO and r.nu[i][j] < ONE)


def is_perfectly_antisymmetric(r: IFRelation) -> bool:
    """If the relation holds at all from x to y (x != y), it fully fails from y to x."""
    r._require_square("is_perfectly_antisymmetric")
    n = len(r.source)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if _holds_somewhat(r, i, j):
                if not (r.mu[j][i] == ZERO and r.nu[j][i] == ONE):
                    return False
    return True


def is_transitive(r: IFRelation) -> bool:
    """R o R is contained in R: composite mu never exceeds, nu never falls below."""
    r._require_square("is_transitive")
    rr = compose(r, r)
    n = len(r.source)
    return all(
        rr.mu[i][j] <= r.mu[i][j] and rr.nu[i][j] >= r.nu[i][j]
        for i in range(n)
        for j in range(n)
    )


def is_partial_order(r: IFRelation) -> bool:
    r._require_square("is_partial_order")
    return is_reflexive(r) and is_perfectly_antisymmetric(r) and is_transitive(r)


def transitive_closure(r: IFRelation) -> IFRelation:
    """Least transitive relation containing ``r`` (degree-wise).

    Iterates mu := max(mu, mu of R o R) and nu := min(nu, nu of R o R) to a
    fixpoint.  Useful for repairing randomly sampled orders: the closure
    never extends the support beyond pairs already reachable by chains.
    """
    r._require_square("transitive_closure")
    current = r
    while True:
        comp = compose(current, current)
        n = len(current.source)
        mu = tuple(
            tuple(max(current.mu[i][j], comp.mu[i][j]) for j in range(n)) for i in range(n)
        )
        nu = tuple(
            tuple(min(current.nu[i][j], comp.nu[i][j]) for j in range(n)) for i in range(n)
        )
        nxt = IFRelation(current.source, current.target, mu, nu)
        if nxt == current:
            return nxt
        current = nxt
