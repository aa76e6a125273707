"""Instances a statement can be checked on, with lazily derived structures.

Each instance caches the constructions its statements talk about, so a sweep
that checks several statements on one instance builds each structure once.
Every cached value is computed by a library primitive; nothing here assumes
a relation between two structures.
"""

from __future__ import annotations

from functools import cached_property
from typing import Optional

from .. import order, props, topo
from ..ground import GroundSet, SetFamily, family_to_json
from ..order import Quasiorder


def _nbhd(family: SetFamily, x: int) -> Optional[int]:
    return topo.neighborhoods(family, x).intersection


class FamilyInstance:
    kind = "family"

    def __init__(self, ground: GroundSet, family):
        self.ground = ground
        self.family = family if isinstance(family, SetFamily) else SetFamily(family)

    def to_json(self) -> dict:
        return {"ground": list(self.ground.labels), "family": family_to_json(self.ground, self.family)}

    def describe(self) -> str:
        return f"A = {self.family.format(self.ground)} on X = {self.ground.format(self.ground.full)}"

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def full(self) -> int:
        return self.ground.full

    @cached_property
    def admissible(self) -> bool:
        """Non-empty and not just the empty set."""
        return len(self.family) > 0 and self.family != SetFamily([0])

    @cached_property
    def mu(self) -> topo.GenTopology:
        return topo.mu_of_family(self.family, self.ground)

    @cached_property
    def mu_def(self) -> SetFamily:
        return topo.mu_by_definition(self.family, self.ground)

    @cached_property
    def mu_tilde(self) -> topo.GenTopology:
        return topo.mu_tilde_of_family(self.family, self.ground)

    @cached_property
    def mu_tilde_def(self) -> SetFamily:
        return topo.mu_tilde_by_definition(self.family, self.ground)

    @cached_property
    def q_A(self) -> Quasiorder:
        return order.quasiorder_from_family(self.family, self.ground)

    @cached_property
    def q_mu(self) -> Quasiorder:
        return order.quasiorder_from_family(self.mu.opens, self.ground)

    @cached_property
    def q_mu_tilde(self) -> Quasiorder:
        return order.quasiorder_from_family(self.mu_tilde.opens, self.ground)

    @cached_property
    def tau_A(self) -> SetFamily:
        return order.specialization_topology(self.q_A)

    @cached_property
    def tau_mu(self) -> SetFamily:
        return order.specialization_topology(self.q_mu)

    @cached_property
    def tau_mu_tilde(self) -> SetFamily:
        return order.specialization_topology(self.q_mu_tilde)

    @cached_property
    def I(self) -> Optional[int]:
        return topo.try_cap_I(self.family)

    @cached_property
    def I_mu(self) -> Optional[int]:
        return topo.try_cap_I(self.mu.opens)

    @cached_property
    def I_mu_tilde(self) -> Optional[int]:
        return topo.try_cap_I(self.mu_tilde.opens)

    def B(self, family: SetFamily, x: int) -> frozenset[int]:
        return frozenset(m for m in family.members if m >> x & 1)

    def I_at(self, family: SetFamily, x: int) -> Optional[int]:
        return _nbhd(family, x)


class SpaceInstance:
    kind = "space"

    def __init__(self, space: topo.GenTopology):
        self.space = space
        self.ground = space.carrier

    def to_json(self) -> dict:
        return {"ground": list(self.ground.labels), "open_sets": family_to_json(self.ground, self.space.opens)}

    def describe(self) -> str:
        return f"mu = {self.space.opens.format(self.ground)} on X = {self.ground.format(self.ground.full)}"

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def full(self) -> int:
        return self.ground.full

    @cached_property
    def opens(self) -> SetFamily:
        return self.space.opens

    @cached_property
    def D(self) -> SetFamily:
        return topo.dense_family(self.space)

    @cached_property
    def DO(self) -> SetFamily:
        return topo.dense_open_family(self.space)

    @cached_property
    def Iso(self) -> int:
        return topo.isolated_points(self.space)

    @cached_property
    def not_nowhere_dense_points(self) -> int:
        return topo.non_nowhere_dense_points(self.space)

    @cached_property
    def all_singletons_nowhere_dense(self) -> bool:
        return all(topo.is_nowhere_dense(self.space, 1 << x) for x in range(self.n))

    @cached_property
    def mu_D(self) -> topo.GenTopology:
        return topo.mu_of_family(self.D, self.ground)

    @cached_property
    def mu_DO(self) -> topo.GenTopology:
        return topo.mu_of_family(self.DO, self.ground)

    @cached_property
    def mu_tilde_DO(self) -> topo.GenTopology:
        return topo.mu_tilde_of_family(self.DO, self.ground)

    @cached_property
    def q_D(self) -> Quasiorder:
        return order.quasiorder_from_family(self.D, self.ground)

    @cached_property
    def tau_D(self) -> SetFamily:
        return order.specialization_topology(self.q_D)

    @cached_property
    def q_mu_tilde_DO(self) -> Quasiorder:
        return order.quasiorder_from_family(self.mu_tilde_DO.opens, self.ground)

    @cached_property
    def tau_mu_tilde_DO(self) -> SetFamily:
        return order.specialization_topology(self.q_mu_tilde_DO)

    @cached_property
    def I_D(self) -> Optional[int]:
        return topo.try_cap_I(self.D)

    @cached_property
    def I_DO(self) -> Optional[int]:
        return topo.try_cap_I(self.DO)

    @cached_property
    def non_indiscrete(self) -> bool:
        return not props.is_indiscrete(self.space)

    @cached_property
    def is_T0(self) -> bool:
        return props.is_T0(self.space)

    @cached_property
    def is_T1(self) -> bool:
        return props.is_T1(self.space)

    @cached_property
    def is_topology(self) -> bool:
        return topo.is_topology(self.opens, self.ground)

    @cached_property
    def is_alexandroff(self) -> bool:
        return topo.is_alexandroff(self.opens, self.ground)

    @cached_property
    def is_strong(self) -> bool:
        return topo.is_strong(self.opens, self.ground)

    @cached_property
    def iso_dense(self) -> bool:
        return props.is_iso_dense(self.space)

    @cached_property
    def dense_in_itself(self) -> bool:
        return props.is_dense_in_itself(self.space)

    @cached_property
    def resolvable(self) -> bool:
        return props.is_resolvable(self.space)

    @cached_property
    def f_d(self) -> bool:
        return props.f_d(self.space)

    @cached_property
    def f_d_T(self) -> bool:
        return props.f_d_T(self.space)


class QuasiorderInstance:
    kind = "quasiorder"

    def __init__(self, q: Quasiorder, ground: GroundSet | None = None):
        self.q = q
        self.ground = ground if ground is not None else GroundSet.of_size(q.n)

    def to_json(self) -> dict:
        labels = self.ground.labels
        return {
            "ground": list(labels),
            "quasiorder": [[labels[x], labels[y]] for x, y in self.q.pairs() if x != y],
        }

    def describe(self) -> str:
        ups = ", ".join(f"up({lab})={self.ground.format(r)}" for lab, r in zip(self.ground.labels, self.q.rows))
        return f"quasiorder with {ups}"

    @cached_property
    def tau(self) -> SetFamily:
        return order.specialization_topology(self.q)

    @cached_property
    def space(self) -> topo.GenTopology:
        return topo.GenTopology(self.ground, self.tau, validate=False)

    @cached_property
    def M(self) -> int:
        return order.maximal_elements(self.q)


class PairInstance:
    """Two quasiorders on one carrier: ``q`` and ``q_star``."""

    kind = "quasiorder-pair"

    def __init__(self, q: Quasiorder, q_star: Quasiorder, ground: GroundSet | None = None):
        if q.n != q_star.n:
            raise ValueError("quasiorders live on different carriers")
        self.q = q
        self.q_star = q_star
        self.ground = ground if ground is not None else GroundSet.of_size(q.n)

    def to_json(self) -> dict:
        return {"ground": list(self.ground.labels), "rows": list(self.q.rows), "rows_star": list(self.q_star.rows)}

    def describe(self) -> str:
        return f"quasiorders rows={list(self.q.rows)} and rows*={list(self.q_star.rows)}"

    @cached_property
    def tau(self) -> SetFamily:
        return order.specialization_topology(self.q)

    @cached_property
    def tau_star(self) -> SetFamily:
        return order.specialization_topology(self.q_star)
