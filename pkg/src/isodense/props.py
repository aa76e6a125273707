"""Whole-space predicates: separation, iso-density, resolvability, F_d and F_d^T."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .caps import resolve
from .errors import CapExceeded
from .ground import canonical_key
from .topo import GenTopology


def is_T0(t: GenTopology) -> bool:
    return t0_witness(t) is None


def t0_witness(t: GenTopology) -> Optional[tuple[int, int]]:
    """A pair of distinct points that no open set separates, if any."""
    opens = t.nonempty_opens
    for x in range(t.n):
        for y in range(x + 1, t.n):
            pair = 1 << x | 1 << y
            if not any((u & pair).bit_count() == 1 for u in opens):
                return x, y
    return None


def is_T1(t: GenTopology) -> bool:
    return t1_witness(t) is None


def t1_witness(t: GenTopology) -> Optional[int]:
    """A point whose singleton is not closed, if any."""
    full = t.full
    for x in range(t.n):
        if (full & ~(1 << x)) not in t.opens:
            return x
    return None


def is_indiscrete(t: GenTopology) -> bool:
    return all(u in (0, t.full) for u in t.opens.members)


def is_discrete(t: GenTopology) -> bool:
    return len(t.opens) == 1 << t.n


def is_iso_dense(t: GenTopology) -> bool:
    return t.is_dense(t.isolated)


def is_dense_in_itself(t: GenTopology) -> bool:
    return t.isolated == 0


def resolving_pair(t: GenTopology, cap=...) -> Optional[tuple[int, int]]:
    """First dense ``D`` (canonical order, element 0 excluded) whose complement is dense.

    Restricting to ``D`` without element 0 loses nothing: of ``D`` and its
    complement one always misses element 0.  An isolated point belongs to every
    dense set, so spaces with one are rejected before the search.
    """
    cap = resolve(cap, "resolvability")
    if cap is not None and t.n > cap:
        raise CapExceeded("is_resolvable", t.n, cap)
    if t.isolated:
        return None
    full = t.full
    candidates = range(0, 1 << t.n, 2) if t.n else [0]
    for d in sorted(candidates, key=canonical_key):
        if t.is_dense(d) and t.is_dense(full & ~d):
            return d, full & ~d
    return None


def is_resolvable(t: GenTopology, cap=...) -> bool:
    return resolving_pair(t, cap) is not None


def _dense_sorted(t: GenTopology, cap):
    cap = resolve(cap, "enumeration")
    if cap is not None and t.n > cap:
        raise CapExceeded("dense pair sweep", t.n, cap)
    return sorted(t.dense_set, key=canonical_key)


def f_d_witness(t: GenTopology, cap=...) -> Optional[tuple[int, int]]:
    """First pair of dense sets whose intersection is not dense."""
    dense = t.dense_set
    ds = _dense_sorted(t, cap)
    for i, a in enumerate(ds):
        for b in ds[i + 1:]:
            if (a & b) not in dense:
                return a, b
    return None


def f_d(t: GenTopology, cap=...) -> bool:
    """Every intersection of two dense sets is dense."""
    return f_d_witness(t, cap) is None


def f_d_T_witness(t: GenTopology, cap=...) -> Optional[tuple[int, int]]:
    """First pair of dense sets meeting in a non-empty, non-dense set."""
    dense = t.dense_set
    ds = _dense_sorted(t, cap)
    for i, a in enumerate(ds):
        for b in ds[i + 1:]:
            c = a & b
            if c and c not in dense:
                return a, b
    return None


def f_d_T(t: GenTopology, cap=...) -> bool:
    """Every intersection of two dense sets is empty or dense."""
    return f_d_T_witness(t, cap) is None


@dataclass
class SpaceProfile:
    is_T0: bool
    is_T1: bool
    is_indiscrete: bool
    is_discrete: bool
    is_iso_dense: bool
    is_dense_in_itself: bool
    is_resolvable: bool
    f_d: bool
    f_d_T: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self, ground) -> dict:
        out = {k: v for k, v in asdict(self).items() if k != "witnesses"}
        wit = {}
        for key, value in self.witnesses.items():
            if isinstance(value, tuple):
                wit[key] = [ground.labels_of(v) for v in value]
            else:
                wit[key] = ground.labels_of(value)
        out["witnesses"] = wit
        return out


def profile(t: GenTopology) -> SpaceProfile:
    """All whole-space flags, each with a witness where one exists.

    Witness conventions (all element sets are bitmasks): ``T0`` a pair of
    inseparable singletons, ``T1`` a non-closed singleton, ``indiscrete`` an
    open set other than the empty set and the carrier, ``discrete`` a
    non-open singleton, ``iso_dense`` a non-empty open set missing every
    isolated point, ``dense_in_itself`` an isolated singleton, ``resolvable``
    the dense/co-dense pair, ``f_d``/``f_d_T`` the offending dense pair.
    """
    wit: dict = {}
    pair = t0_witness(t)
    if pair is not None:
        wit["T0"] = (1 << pair[0], 1 << pair[1])
    x = t1_witness(t)
    if x is not None:
        wit["T1"] = 1 << x
    other = next((u for u in t.opens.members if u not in (0, t.full)), None)
    if other is not None:
        wit["indiscrete"] = other
    missing = next((1 << y for y in range(t.n) if 1 << y not in t.opens), None)
    if missing is not None:
        wit["discrete"] = missing
    iso = t.isolated
    gap = next((u for u in t.nonempty_opens if not u & iso), None)
    if gap is not None:
        wit["iso_dense"] = gap
    if iso:
        wit["dense_in_itself"] = iso & -iso
    res = resolving_pair(t)
    if res is not None:
        wit["resolvable"] = res
    fd = f_d_witness(t)
    if fd is not None:
        wit["f_d"] = fd
    fdt = f_d_T_witness(t)
    if fdt is not None:
        wit["f_d_T"] = fdt
    return SpaceProfile(
        is_T0=pair is None,
        is_T1=x is None,
        is_indiscrete=other is None,
        is_discrete=missing is None,
        is_iso_dense=gap is None,
        is_dense_in_itself=iso == 0,
        is_resolvable=res is not None,
        f_d=fd is None,
        f_d_T=fdt is None,
        witnesses=wit,
    )
