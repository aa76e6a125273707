"""Carriers, bitmask subsets and canonically ordered set families.

A subset of a carrier with ``n`` elements is a plain ``int`` whose bit ``i`` is
set when element ``i`` belongs to it.  Families are immutable and always kept
in canonical order: ascending cardinality, then ascending bitmask value.

Closure lemma used throughout: on a finite carrier every subfamily of a family
is finite, so a family that contains the empty set and is closed under
pairwise unions is closed under the union of every subfamily (the empty
subfamily contributes the empty set, larger ones follow by induction).  The
same argument turns pairwise intersection closure into closure under all
non-empty finite intersections, which on a finite carrier are all of them.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_SIZE = 64


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Yield the element indices present in ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


class GroundSet:
    """The carrier: ``size`` elements with distinct, stable labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(str(label) for label in labels)
        if len(labels) > MAX_SIZE:
            raise ValueError(f"carrier capped at {MAX_SIZE} elements, got {len(labels)}")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            dupes = sorted({lab for lab in labels if labels.count(lab) > 1})
            raise ValueError(f"duplicate element labels: {dupes}")
        self.labels = labels
        self._index = index

    @classmethod
    def of_size(cls, n: int, start: int = 1) -> "GroundSet":
        return cls([str(i) for i in range(start, start + n)])

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown element {label!r}") from None

    def subset(self, labels: Iterable) -> int:
        """Bitmask of the subset named by ``labels``."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: int) -> list[str]:
        self.check(mask)
        return [self.labels[i] for i in bits(mask)]

    def check(self, mask: int) -> int:
        if mask < 0 or mask >> self.size:
            raise ValueError(f"bitmask {mask:#x} has bits outside a {self.size}-element carrier")
        return mask

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)!r})"


class SetFamily:
    """A deduplicated family of bitmask subsets in canonical order."""

    __slots__ = ("members", "_set")

    def __init__(self, members: Iterable[int] = ()):
        unique = frozenset(members)
        self._set = unique
        # stable sort by popcount over value-sorted input gives canonical order
        self.members: tuple[int, ...] = tuple(sorted(sorted(unique), key=int.bit_count))

    @classmethod
    def from_code(cls, code: int, n: int) -> "SetFamily":
        """The family whose members are the subsets ``s`` with bit ``s`` of ``code`` set."""
        return cls(s for s in range(1 << n) if code >> s & 1)

    @classmethod
    def powerset(cls, n: int) -> "SetFamily":
        return cls(range(1 << n))

    def code(self) -> int:
        out = 0
        for m in self._set:
            out |= 1 << m
        return out

    def as_set(self) -> frozenset[int]:
        return self._set

    def nonempty(self) -> tuple[int, ...]:
        return tuple(m for m in self.members if m)

    def issubfamily(self, other: "SetFamily") -> bool:
        return self._set <= other._set

    def __le__(self, other):
        return self._set <= other._set

    def __or__(self, other):
        return SetFamily(self._set | frozenset(other))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, mask):
        return mask in self._set

    def __eq__(self, other):
        return isinstance(other, SetFamily) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        return f"SetFamily({list(self.members)!r})"

    def format(self, ground: GroundSet) -> str:
        return "{" + ", ".join(ground.format(m) for m in self.members) + "}"


def union_closure(family: Iterable[int]) -> SetFamily:
    """Smallest family containing the empty set and ``family``, closed under unions.

    Generators are absorbed one at a time: after absorbing ``m`` the closure is
    the old closure plus every old member joined with ``m``.
    """
    closed = {0}
    for m in family:
        if m not in closed:
            closed |= {c | m for c in closed}
    return SetFamily(closed)


def intersection_closure(family: Iterable[int]) -> SetFamily:
    """Smallest superfamily of ``family`` closed under pairwise intersections."""
    closed: set[int] = set()
    for m in family:
        if m not in closed:
            closed |= {c & m for c in closed}
            closed.add(m)
    return SetFamily(closed)


def generated_topology(family: Iterable[int], ground: GroundSet) -> SetFamily:
    """Coarsest topology on ``ground`` containing every member of ``family``.

    Unions of an intersection-closed family stay intersection-closed by
    distributivity, so one intersection pass followed by one union pass
    suffices.
    """
    base = intersection_closure(list(family) + [ground.full])
    return union_closure(base)


def family_to_json(ground: GroundSet, family: Iterable[int]) -> list[list[str]]:
    if not isinstance(family, SetFamily):
        family = SetFamily(family)
    return [ground.labels_of(m) for m in family.members]


def family_from_json(ground: GroundSet, data) -> SetFamily:
    if not isinstance(data, list):
        raise ValueError("a family must be a JSON array of subsets")
    members = []
    for pos, item in enumerate(data):
        if not isinstance(item, list):
            raise ValueError(f"member {pos} is not an array of labels")
        try:
            members.append(ground.subset(item))
        except KeyError as exc:
            raise ValueError(f"member {pos}: {exc.args[0]}") from None
    return SetFamily(members)
