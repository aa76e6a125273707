"""Quasiorders on a finite carrier as rows of bitmasks.

``rows[x]`` is the up-set of ``x``: bit ``y`` is set exactly when ``x <= y``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .caps import resolve
from .errors import CapExceeded
from .ground import GroundSet, SetFamily, bits, union_closure

def _size(ground) -> int:
    return ground.size if isinstance(ground, GroundSet) else int(ground)


def reflexive_transitive_closure(n: int, rows: Iterable[int]) -> tuple[int, ...]:
    """Warshall's algorithm on bit rows, with the diagonal added first."""
    rows = [r | (1 << i) for i, r in enumerate(rows)]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    for k in range(n):
        kbit = 1 << k
        krow = rows[k]
        for i in range(n):
            if rows[i] & kbit:
                rows[i] |= krow
    return tuple(rows)


def _first_transitivity_failure(rows) -> tuple[int, int, int] | None:
    for x, row in enumerate(rows):
        for y in bits(row):
            missing = rows[y] & ~row
            if missing:
                z = next(bits(missing))
                return x, y, z
    return None


class Quasiorder:
    """A reflexive, transitive relation on ``{0, ..., n-1}``.

    Construction validates both properties; the validation pass is cheap
    (``O(n^2)`` word operations) and guards every constructor, including
    ones that are transitive by construction.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for x, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {x} has bits outside the carrier")
            if not row >> x & 1:
                raise ValueError(f"not reflexive at {x}")
        bad = _first_transitivity_failure(rows)
        if bad is not None:
            x, y, z = bad
            raise ValueError(f"not transitive: {x}<={y} and {y}<={z} but not {x}<={z}")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Quasiorder":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def full(cls, n: int) -> "Quasiorder":
        return cls(n, [(1 << n) - 1] * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Quasiorder":
        """Reflexive-transitive closure of the given ``(x, y)`` pairs."""
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise IndexError(f"pair ({x}, {y}) out of range for n={n}")
            rows[x] |= 1 << y
        return cls(n, reflexive_transitive_closure(n, rows))

    def le(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def equiv(self, x: int, y: int) -> bool:
        return self.le(x, y) and self.le(y, x)

    def columns(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for x, row in enumerate(self.rows):
            for y in bits(row):
                cols[y] |= 1 << x
        return tuple(cols)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rows) for y in bits(row)]

    def matrix(self) -> list[list[bool]]:
        return [[bool(row >> y & 1) for y in range(self.n)] for row in self.rows]

    def issubrelation(self, other: "Quasiorder") -> bool:
        """True when every pair of ``self`` is a pair of ``other``."""
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_partial_order(self) -> bool:
        cols = self.columns()
        return all(row & cols[x] == 1 << x for x, row in enumerate(self.rows))

    def __eq__(self, other):
        return isinstance(other, Quasiorder) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Quasiorder(n={self.n}, rows={list(self.rows)})"


@dataclass(frozen=True)
class QuotientOrder:
    """Equivalence classes of a quasiorder with the induced partial order.

    ``classes`` are listed by their lowest element; ``order[i]`` is a bitmask
    over class indices of the classes above class ``i``.
    """

    classes: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]

    def class_of(self, x: int) -> int:
        for i, members in enumerate(self.classes):
            if x in members:
                return i
        raise IndexError(x)

    def maximal_classes(self) -> list[int]:
        return [i for i, row in enumerate(self.order) if row == 1 << i]

    def minimal_classes(self) -> list[int]:
        below = [0] * len(self.order)
        for i, row in enumerate(self.order):
            for j in bits(row):
                below[j] |= 1 << i
        return [i for i, col in enumerate(below) if col == 1 << i]


def quasiorder_from_family(family: Iterable[int], ground) -> Quasiorder:
    """``x <= y`` iff every member containing ``x`` also contains ``y``.

    The up-set of ``x`` is the intersection of the members containing ``x``
    (the whole carrier when there are none).
    """
    n = _size(ground)
    full = (1 << n) - 1
    rows = [full] * n
    for m in family:
        for x in bits(m):
            rows[x] &= m
    return Quasiorder(n, rows)


def _check_index(q: Quasiorder, x: int):
    if not 0 <= x < q.n:
        raise IndexError(f"element {x} out of range for n={q.n}")


def up_set(q: Quasiorder, x: int) -> int:
    _check_index(q, x)
    return q.rows[x]


def down_set(q: Quasiorder, x: int) -> int:
    _check_index(q, x)
    xbit = 1 << x
    return sum(1 << y for y, row in enumerate(q.rows) if row & xbit)


def is_increasing(q: Quasiorder, s: int) -> bool:
    return all(q.rows[x] & ~s == 0 for x in bits(s))


def is_decreasing(q: Quasiorder, s: int) -> bool:
    return is_increasing(dual(q), s)


def dual(q: Quasiorder) -> Quasiorder:
    return Quasiorder(q.n, q.columns())


def _check_cap(what, n, cap):
    cap = resolve(cap, "enumeration")
    if cap is not None and n > cap:
        raise CapExceeded(what, n, cap, "test individual sets with is_increasing instead")


def specialization_topology(q: Quasiorder, cap=...) -> SetFamily:
    """All increasing sets, built as unions of principal up-sets."""
    _check_cap("specialization_topology", q.n, cap)
    return union_closure(q.rows)


def specialization_topology_bruteforce(q: Quasiorder, cap=...) -> SetFamily:
    """All increasing sets, by testing every subset of the carrier."""
    _check_cap("specialization_topology", q.n, cap)
    return SetFamily(s for s in range(1 << q.n) if is_increasing(q, s))


def maximal_elements(q: Quasiorder) -> int:
    return sum(1 << a for a, row in enumerate(q.rows) if row == 1 << a)


def minimal_elements(q: Quasiorder) -> int:
    return maximal_elements(dual(q))


def weakly_maximal_elements(q: Quasiorder) -> int:
    """Elements ``a`` such that ``a <= x`` forces ``x <= a``."""
    cols = q.columns()
    return sum(1 << a for a, row in enumerate(q.rows) if row & ~cols[a] == 0)


def weakly_minimal_elements(q: Quasiorder) -> int:
    return weakly_maximal_elements(dual(q))


def quotient(q: Quasiorder) -> QuotientOrder:
    cols = q.columns()
    class_index = [-1] * q.n
    classes = []
    for x in range(q.n):
        if class_index[x] >= 0:
            continue
        members = tuple(bits(q.rows[x] & cols[x]))
        for y in members:
            class_index[y] = len(classes)
        classes.append(members)
    reps = [members[0] for members in classes]
    order = tuple(
        sum(1 << j for j, b in enumerate(reps) if q.le(a, b)) for a in reps
    )
    return QuotientOrder(tuple(classes), order)


def enumerate_quasiorders(n: int, cap=...) -> Iterator[Quasiorder]:
    """Every quasiorder on ``n`` points, ordered by the code of its off-diagonal pairs."""
    cap = resolve(cap, "exhaustive")
    if cap is not None and n > cap:
        raise CapExceeded("enumerate_quasiorders", n, cap)
    slots = [(x, y) for x in range(n) for y in range(n) if x != y]
    diag = [1 << x for x in range(n)]
    for code in range(1 << len(slots)):
        rows = list(diag)
        for k in bits(code):
            x, y = slots[k]
            rows[x] |= 1 << y
        if _first_transitivity_failure(rows) is None:
            yield Quasiorder(n, rows)


def random_quasiorder(n: int, rng: random.Random) -> Quasiorder:
    """Closure of a random relation whose edge density is itself random."""
    density = rng.random() * 0.6
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < density]
    return Quasiorder.from_pairs(n, pairs)
