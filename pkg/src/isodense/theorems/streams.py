"""Pure, indexable instance streams.

Every stream position is a raw index; exhaustive modes map it to a family code,
random modes to a sample number seeded as ``f"{seed}/{index}"``.  Positions
whose candidate is filtered out yield nothing, so shards ``index % k == j``
can be processed anywhere and merged by index.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .. import order
from ..caps import resolve
from ..errors import CapExceeded
from ..ground import GroundSet, SetFamily, bits, union_closure
from ..topo import GenTopology
from .instances import FamilyInstance, PairInstance, QuasiorderInstance, SpaceInstance

MODES = (
    "exhaustive-families",
    "exhaustive-gentopos",
    "exhaustive-quasiorders",
    "exhaustive-quasiorder-pairs",
    "random-families",
    "random-gentopos",
    "random-quasiorders",
)

KIND_OF_MODE = {
    "exhaustive-families": "family",
    "exhaustive-gentopos": "space",
    "exhaustive-quasiorders": "quasiorder",
    "exhaustive-quasiorder-pairs": "quasiorder-pair",
    "random-families": "family",
    "random-gentopos": "space",
    "random-quasiorders": "quasiorder",
}

RANDOM_MODE_OF_KIND = {
    "family": "random-families",
    "space": "random-gentopos",
    "quasiorder": "random-quasiorders",
}


def is_union_closed_code(code: int) -> bool:
    """Family code (bit ``s`` set iff subset ``s`` is a member) of a generalized topology."""
    if not code & 1:
        return False
    members = list(bits(code))
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not code >> (a | b) & 1:
                return False
    return True


def random_family(n: int, rng: random.Random) -> SetFamily:
    """Each subset joins with one shared random probability; resampled until admissible."""
    while True:
        p = rng.random()
        fam = [s for s in range(1 << n) if rng.random() < p]
        if fam and fam != [0]:
            return SetFamily(fam)


def random_gentopo(n: int, rng: random.Random) -> SetFamily:
    """Union closure of up to ``2n`` random generators, the carrier added half the time."""
    full = (1 << n) - 1
    gens = [rng.getrandbits(n) if n else 0 for _ in range(rng.randint(0, 2 * n))]
    if rng.random() < 0.5:
        gens.append(full)
    return union_closure(gens)


@dataclass(frozen=True)
class InstanceStream:
    mode: str
    n: int
    seed: Optional[int] = None
    count: Optional[int] = None
    filter: Optional[Callable] = None
    cap: object = ...

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown stream mode {self.mode!r}; expected one of {', '.join(MODES)}")
        if self.n < 0:
            raise ValueError("carrier size must be non-negative")
        if self.mode.startswith("random"):
            if self.count is None:
                raise ValueError("random streams need a count")
            return
        cap = resolve(self.cap, "pairs" if self.mode == "exhaustive-quasiorder-pairs" else "exhaustive")
        if cap is not None and self.n > cap:
            raise CapExceeded(self.mode, self.n, cap, "pass cap=None to override; the sweep is exponential")

    # constructors named after the modes
    @classmethod
    def exhaustive_families(cls, n, **kw):
        return cls("exhaustive-families", n, **kw)

    @classmethod
    def exhaustive_gentopos(cls, n, **kw):
        return cls("exhaustive-gentopos", n, **kw)

    @classmethod
    def exhaustive_quasiorders(cls, n, **kw):
        return cls("exhaustive-quasiorders", n, **kw)

    @classmethod
    def exhaustive_quasiorder_pairs(cls, n, **kw):
        return cls("exhaustive-quasiorder-pairs", n, **kw)

    @classmethod
    def random(cls, n, seed, count, kind="space", **kw):
        return cls(RANDOM_MODE_OF_KIND[kind], n, seed=seed, count=count, **kw)

    @property
    def kind(self) -> str:
        return KIND_OF_MODE[self.mode]

    @property
    def ground(self) -> GroundSet:
        return GroundSet.of_size(self.n)

    def raw_size(self) -> int:
        """Number of raw positions (before filtering)."""
        if self.mode.startswith("random"):
            return self.count
        if self.mode in ("exhaustive-families", "exhaustive-gentopos"):
            return 1 << (1 << self.n)
        if self.mode == "exhaustive-quasiorders":
            return len(self._quasiorders())
        return len(self._quasiorders()) ** 2

    def _quasiorders(self) -> list:
        return list(order.enumerate_quasiorders(self.n, cap=None))

    def _candidates(self, indices) -> Iterator[tuple[int, object]]:
        ground = self.ground
        n = self.n
        mode = self.mode
        if mode == "exhaustive-families":
            for i in indices:
                if i >= 2:
                    yield i, FamilyInstance(ground, SetFamily.from_code(i, n))
        elif mode == "exhaustive-gentopos":
            for i in indices:
                if is_union_closed_code(i):
                    yield i, SpaceInstance(GenTopology(ground, SetFamily.from_code(i, n), validate=False))
        elif mode == "exhaustive-quasiorders":
            qs = self._quasiorders()
            for i in indices:
                yield i, QuasiorderInstance(qs[i], ground)
        elif mode == "exhaustive-quasiorder-pairs":
            qs = self._quasiorders()
            k = len(qs)
            for i in indices:
                yield i, PairInstance(qs[i // k], qs[i % k], ground)
        else:
            for i in indices:
                rng = random.Random(f"{self.seed}/{i}")
                if mode == "random-families":
                    yield i, FamilyInstance(ground, random_family(n, rng))
                elif mode == "random-gentopos":
                    yield i, SpaceInstance(GenTopology(ground, random_gentopo(n, rng), validate=False))
                else:
                    yield i, QuasiorderInstance(order.random_quasiorder(n, rng), ground)

    def items(self, shard: tuple[int, int] = (0, 1)) -> Iterator[tuple[int, object]]:
        """``(index, instance)`` pairs for positions with ``index % k == j``."""
        j, k = shard
        indices = range(j, self.raw_size(), k)
        for i, inst in self._candidates(indices):
            if self.filter is None or self.filter(inst):
                yield i, inst

    def __iter__(self):
        return (inst for _, inst in self.items())

    def __getitem__(self, index: int):
        """The instance at raw position ``index``, or ``None`` when it is filtered out."""
        if not 0 <= index < self.raw_size():
            raise IndexError(index)
        for _, inst in self._candidates([index]):
            if self.filter is None or self.filter(inst):
                return inst
        return None

    def __len__(self) -> int:
        return sum(1 for _ in self.items())

    def take(self, limit: int):
        return list(itertools.islice(iter(self), limit))
