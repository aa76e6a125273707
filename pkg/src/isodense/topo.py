"""Generalized topologies on finite carriers and the set operations over them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .caps import resolve
from .errors import CapExceeded, NotAGeneralizedTopology, UndefinedIntersection
from .ground import GroundSet, SetFamily, bits, union_closure

def _as_family(family) -> SetFamily:
    return family if isinstance(family, SetFamily) else SetFamily(family)


def _check_cap(what, n, cap=...):
    cap = resolve(cap, "enumeration")
    if cap is not None and n > cap:
        raise CapExceeded(what, n, cap, "raise the cap explicitly; the sweep visits every subset")


def first_union_failure(family) -> Optional[tuple[int, int]]:
    """The first pair of members (canonical order) whose union is missing."""
    family = _as_family(family)
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if (a | b) not in family:
                return a, b
    return None


def first_intersection_failure(family) -> Optional[tuple[int, int]]:
    family = _as_family(family)
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if (a & b) not in family:
                return a, b
    return None


def is_generalized_topology(family) -> bool:
    family = _as_family(family)
    return 0 in family and first_union_failure(family) is None


def is_strong(family, ground: GroundSet) -> bool:
    family = _as_family(family)
    return is_generalized_topology(family) and ground.full in family


def is_topology(family, ground: GroundSet) -> bool:
    family = _as_family(family)
    return is_strong(family, ground) and first_intersection_failure(family) is None


def is_alexandroff(family, ground: GroundSet) -> bool:
    """A topology in which every point has a smallest open neighbourhood.

    On a finite carrier this coincides with :func:`is_topology`: the smallest
    neighbourhood of ``x`` is a finite intersection of open sets.  The check is
    still carried out literally so that reports can state both flags.
    """
    family = _as_family(family)
    if not is_topology(family, ground):
        return False
    for x in range(ground.size):
        smallest = ground.full
        for u in family.members:
            if u >> x & 1:
                smallest &= u
        if smallest not in family:
            return False
    return True


def is_base_for(base, mu) -> bool:
    """Every member of ``base`` is in ``mu`` and every open set is a union of base members."""
    base = _as_family(base)
    mu = _as_family(mu)
    if not base.issubfamily(mu):
        return False
    for u in mu.members:
        covered = 0
        for b in base.members:
            if b & ~u == 0:
                covered |= b
        if covered != u:
            return False
    return True


@dataclass(frozen=True)
class Classification:
    is_generalized_topology: bool
    is_strong: bool
    is_topology: bool
    is_alexandroff: bool
    is_base_for: Optional[bool] = None


def classify(family, ground: GroundSet | None = None, base_of=None) -> Classification:
    """Classification flags for ``family``; pass ``base_of`` to test the base property."""
    if isinstance(family, GenTopology):
        ground = family.carrier
        family = family.opens
    if ground is None:
        raise TypeError("classify needs a carrier for a bare family")
    family = _as_family(family)
    if isinstance(base_of, GenTopology):
        base_of = base_of.opens
    return Classification(
        is_generalized_topology=is_generalized_topology(family),
        is_strong=is_strong(family, ground),
        is_topology=is_topology(family, ground),
        is_alexandroff=is_alexandroff(family, ground),
        is_base_for=None if base_of is None else is_base_for(family, base_of),
    )


class GenTopology:
    """A carrier together with a family of open sets containing the empty set
    and closed under unions.

    Instances are immutable; derived data (dense sets, isolated points, ...) is
    cached on first use.
    """

    def __init__(self, carrier: GroundSet, opens, *, validate: bool = True):
        opens = _as_family(opens)
        if validate:
            for m in opens.members:
                carrier.check(m)
            if 0 not in opens:
                raise NotAGeneralizedTopology("open sets must contain the empty set")
            bad = first_union_failure(opens)
            if bad is not None:
                a, b = bad
                raise NotAGeneralizedTopology(
                    f"union of {carrier.format(a)} and {carrier.format(b)} is not open", bad
                )
        self.carrier = carrier
        self.opens = opens

    @property
    def n(self) -> int:
        return self.carrier.size

    @property
    def full(self) -> int:
        return self.carrier.full

    @cached_property
    def nonempty_opens(self) -> tuple[int, ...]:
        return self.opens.nonempty()

    @cached_property
    def _minimal_opens(self) -> tuple[int, ...]:
        ne = self.nonempty_opens
        return tuple(u for u in ne if not any(v != u and v & ~u == 0 for v in ne))

    @cached_property
    def isolated(self) -> int:
        return sum(u for u in self.nonempty_opens if u & (u - 1) == 0)

    @cached_property
    def dense_set(self) -> frozenset[int]:
        _check_cap("dense_family", self.n)
        mins = self._minimal_opens
        return frozenset(d for d in range(1 << self.n) if all(u & d for u in mins))

    def is_dense(self, d: int) -> bool:
        return all(u & d for u in self._minimal_opens)

    def interior(self, e: int) -> int:
        out = 0
        for u in self.nonempty_opens:
            if u & ~e == 0:
                out |= u
        return out

    def closure(self, e: int) -> int:
        full = self.full
        return full & ~self.interior(full & ~e)

    def __eq__(self, other):
        return isinstance(other, GenTopology) and self.carrier == other.carrier and self.opens == other.opens

    def __hash__(self):
        return hash((self.carrier, self.opens))

    def __repr__(self):
        return f"GenTopology({list(self.carrier.labels)!r}, {self.opens.format(self.carrier)})"


def mu_of_family(family, ground: GroundSet) -> GenTopology:
    """The generalized topology having ``family`` as a base: all unions of members."""
    return GenTopology(ground, union_closure(_as_family(family)), validate=False)


def mu_by_definition(family, ground: GroundSet, cap=...) -> SetFamily:
    """Sets ``U`` in which every point lies in some member contained in ``U``.

    Brute force over all subsets; kept independent of :func:`mu_of_family`.
    """
    _check_cap("mu_by_definition", ground.size, cap)
    members = _as_family(family).members
    out = []
    for u in range(1 << ground.size):
        covered = 0
        for a in members:
            if a & ~u == 0:
                covered |= a
        if covered == u:
            out.append(u)
    return SetFamily(out)


def _supersets(a: int, full: int):
    free = full & ~a
    s = free
    while True:
        yield a | s
        if s == 0:
            return
        s = (s - 1) & free


def mu_tilde_of_family(family, ground: GroundSet) -> GenTopology:
    """The empty set plus every superset of a non-empty member."""
    full = ground.full
    out = {0}
    for a in _as_family(family).nonempty():
        if a not in out:
            out.update(_supersets(a, full))
    return GenTopology(ground, SetFamily(out), validate=False)


def mu_tilde_by_definition(family, ground: GroundSet, cap=...) -> SetFamily:
    """The base-generated topology joined with all supersets of non-empty members, by brute force."""
    mu = mu_by_definition(family, ground, cap)
    nonempty = _as_family(family).nonempty()
    extra = [v for v in range(1 << ground.size) if any(a & ~v == 0 for a in nonempty)]
    return SetFamily(list(mu) + extra)


def superset_topology(s: int, ground: GroundSet) -> GenTopology:
    """``super(S)``: the empty set and all supersets of ``S``."""
    ground.check(s)
    return GenTopology(ground, SetFamily([0, *_supersets(s, ground.full)]), validate=False)


def cofinite_topology(ground: GroundSet) -> GenTopology:
    """The empty set plus every set with finite complement.

    Every complement is finite on a finite carrier, so this is the discrete
    topology; it exists so that the degenerate finite case can be checked.
    """
    _check_cap("cofinite_topology", ground.size)
    return GenTopology(ground, SetFamily.powerset(ground.size), validate=False)


def discrete_topology(ground: GroundSet) -> GenTopology:
    _check_cap("discrete_topology", ground.size)
    return GenTopology(ground, SetFamily.powerset(ground.size), validate=False)


def indiscrete_topology(ground: GroundSet) -> GenTopology:
    return GenTopology(ground, SetFamily([0, ground.full]), validate=False)


def closure(t: GenTopology, e: int) -> int:
    """Smallest closed superset, via ``X - int(X - e)``."""
    return t.closure(e)


def interior(t: GenTopology, e: int) -> int:
    return t.interior(e)


def is_dense(t: GenTopology, d: int) -> bool:
    """``d`` meets every non-empty open set."""
    return t.is_dense(d)


def dense_family(t: GenTopology) -> SetFamily:
    return SetFamily(t.dense_set)


def is_nowhere_dense(t: GenTopology, e: int) -> bool:
    return t.interior(t.closure(e)) == 0


def nowhere_dense_family(t: GenTopology) -> SetFamily:
    _check_cap("nowhere_dense_family", t.n)
    return SetFamily(e for e in range(1 << t.n) if is_nowhere_dense(t, e))


def non_nowhere_dense_points(t: GenTopology) -> int:
    """Points whose singleton is not nowhere dense."""
    return sum(1 << x for x in range(t.n) if not is_nowhere_dense(t, 1 << x))


def isolated_points(t: GenTopology) -> int:
    return t.isolated


def dense_open_family(t: GenTopology) -> SetFamily:
    return SetFamily(u for u in t.opens.members if t.is_dense(u))


def cap_I(family) -> int:
    """Intersection of the non-empty members.

    Raises :class:`UndefinedIntersection` when there is no non-empty member.
    """
    if isinstance(family, GenTopology):
        family = family.opens
    nonempty = _as_family(family).nonempty()
    if not nonempty:
        raise UndefinedIntersection("the family has no non-empty member, so I is undefined")
    out = nonempty[0]
    for m in nonempty[1:]:
        out &= m
    return out


def try_cap_I(family) -> Optional[int]:
    try:
        return cap_I(family)
    except UndefinedIntersection:
        return None


@dataclass(frozen=True)
class Neighborhoods:
    """Members containing a point and, when there are any, their intersection."""

    members: SetFamily
    intersection: Optional[int]

    @property
    def defined(self) -> bool:
        return self.intersection is not None


def neighborhoods(family, x: int) -> Neighborhoods:
    if isinstance(family, GenTopology):
        family = family.opens
    family = _as_family(family)
    members = [m for m in family.members if m >> x & 1]
    if not members:
        return Neighborhoods(SetFamily(), None)
    inter = members[0]
    for m in members[1:]:
        inter &= m
    return Neighborhoods(SetFamily(members), inter)


def finite_intersections(family: Iterable[int]) -> SetFamily:
    """Intersections of every non-empty subfamily, enumerated by brute force."""
    members = list(_as_family(family).members)
    out = set()
    for code in range(1, 1 << len(members)):
        acc = -1
        for k in bits(code):
            acc &= members[k]
        out.add(acc)
    return SetFamily(out)
