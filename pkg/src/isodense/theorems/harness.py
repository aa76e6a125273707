"""Checking statements on instances and over streams; counterexample search."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..caps import LIMITS
from ..errors import CapExceeded
from ..ground import GroundSet, SetFamily
from ..order import Quasiorder
from ..topo import GenTopology
from .catalog import Statement, get_statement
from .instances import FamilyInstance, PairInstance, QuasiorderInstance, SpaceInstance
from .streams import RANDOM_MODE_OF_KIND, InstanceStream

HOLDS = "holds"
VIOLATED = "violated"
NOT_MET = "hypothesis-not-met"

DEFAULT_RANDOM_BUDGET = 10_000


@dataclass
class ConditionReport:
    statement: str
    instance: dict
    hypothesis_met: bool
    conditions: list  # [(label, bool)]
    verdict: str
    witness: Optional[dict] = None
    description: str = ""
    hypothesis_text: str = ""
    claim: str = ""
    probe: bool = False
    index: Optional[int] = None

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def condition(self, label: str) -> bool:
        for lab, value in self.conditions:
            if lab == label:
                return value
        raise KeyError(label)

    def to_json(self) -> dict:
        out = {
            "statement": self.statement,
            "instance": self.instance,
            "hypothesis_met": self.hypothesis_met,
            "conditions": [{"label": lab, "value": val} for lab, val in self.conditions],
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if self.index is not None:
            out["index"] = self.index
        return out

    def render(self) -> str:
        lines = [f"{self.statement}: {self.description}"]
        lines.append(f"  hypothesis ({self.hypothesis_text}): {'met' if self.hypothesis_met else 'not met'}")
        for lab, val in self.conditions:
            lines.append(f"  {lab}: {'true' if val else 'false'}")
        lines.append(f"  claim: {self.claim}")
        if self.witness:
            for key, val in self.witness.items():
                lines.append(f"  witness {key}: {_fmt_labels(val)}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _fmt_labels(value) -> str:
    if value and isinstance(value[0], list):
        return "/".join(_fmt_labels(v) for v in value)
    return "{" + ",".join(value) + "}"


def _wrap(stmt: Statement, instance, ground: GroundSet | None):
    """Turn raw inputs into the instance kind the statement expects."""
    if isinstance(instance, (FamilyInstance, SpaceInstance, QuasiorderInstance, PairInstance)):
        if instance.kind != stmt.kind:
            raise TypeError(f"{stmt.id} needs a {stmt.kind} instance, got a {instance.kind} instance")
        return instance
    kind = stmt.kind
    if kind == "space":
        if isinstance(instance, GenTopology):
            return SpaceInstance(instance)
        if ground is None:
            raise TypeError(f"{stmt.id} needs a carrier for a bare family of open sets")
        return SpaceInstance(GenTopology(ground, instance))
    if kind == "family":
        if isinstance(instance, GenTopology):
            return FamilyInstance(instance.carrier, instance.opens)
        if ground is None:
            raise TypeError(f"{stmt.id} needs a carrier for a bare family")
        fam = instance if isinstance(instance, SetFamily) else SetFamily(instance)
        for m in fam:
            ground.check(m)
        return FamilyInstance(ground, fam)
    if kind == "quasiorder":
        if isinstance(instance, Quasiorder):
            return QuasiorderInstance(instance, ground)
        raise TypeError(f"{stmt.id} needs a quasiorder")
    if isinstance(instance, tuple) and len(instance) == 2:
        return PairInstance(instance[0], instance[1], ground)
    raise TypeError(f"{stmt.id} needs a pair of quasiorders")


def _labels(ground: GroundSet, value):
    if isinstance(value, tuple):
        return [ground.labels_of(v) for v in value]
    return ground.labels_of(value)


def _report(stmt: Statement, ctx, hyp: bool, values: dict, index=None) -> ConditionReport:
    ok = stmt.relation(values)
    verdict = NOT_MET if not hyp else (HOLDS if ok else VIOLATED)
    witness = None
    if stmt.witness is not None:
        raw = stmt.witness(ctx)
        if raw:
            witness = {k: _labels(ctx.ground, v) for k, v in raw.items()}
    return ConditionReport(
        statement=stmt.id,
        instance=ctx.to_json(),
        hypothesis_met=hyp,
        conditions=[(lab, values[lab]) for lab in stmt.labels],
        verdict=verdict,
        witness=witness,
        description=ctx.describe(),
        hypothesis_text=stmt.hypothesis_text,
        claim=stmt.claim,
        probe=stmt.probe,
        index=index,
    )


def check(statement, instance, ground: GroundSet | None = None) -> ConditionReport:
    """Evaluate every condition of ``statement`` on ``instance``, then the claimed relation.

    Conditions are evaluated even when the hypothesis fails, so reports show
    what the hypothesis protects against.
    """
    stmt = get_statement(statement)
    ctx = _wrap(stmt, instance, ground)
    hyp = bool(stmt.hypothesis(ctx))
    values = {lab: bool(fn(ctx)) for lab, fn in stmt.conditions}
    return _report(stmt, ctx, hyp, values)


def _evaluate(stmt: Statement, ctx, index):
    """Fast path for sweeps: conditions only when the hypothesis holds."""
    if not stmt.hypothesis(ctx):
        return False, None
    values = {lab: bool(fn(ctx)) for lab, fn in stmt.conditions}
    if stmt.relation(values):
        return True, None
    return True, _report(stmt, ctx, True, values, index)


@dataclass
class Summary:
    statement: str
    n: int
    mode: str
    instances: int = 0
    hypothesis_met_count: int = 0
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "n": self.n,
            "instances": self.instances,
            "hypothesis_met": self.hypothesis_met_count,
            "violations": [v.to_json() for v in self.violations],
        }


def _sweep_shard(statement_ids, stream: InstanceStream, shard, stop_at_first=False, budget=None):
    stmts = [get_statement(s) for s in statement_ids]
    counts = {s.id: [0, 0] for s in stmts}
    violations = {s.id: [] for s in stmts}
    seen = 0
    for index, ctx in stream.items(shard):
        if budget is not None and seen >= budget:
            break
        seen += 1
        for stmt in stmts:
            if ctx.kind != stmt.kind:
                raise TypeError(f"{stmt.id} needs {stmt.kind} instances, the stream yields {ctx.kind}")
            met, bad = _evaluate(stmt, ctx, index)
            counts[stmt.id][0] += 1
            counts[stmt.id][1] += met
            if bad is not None:
                violations[stmt.id].append(bad)
                if stop_at_first:
                    return counts, violations, seen
    return counts, violations, seen


def sweep(statements: Iterable, stream: InstanceStream, workers: int = 1) -> dict[str, Summary]:
    """Check several statements over one stream, building each instance once.

    With ``workers > 1`` positions are sharded by ``index % workers`` across
    processes; violations are merged in index order, so the result does not
    depend on scheduling.
    """
    ids = [get_statement(s).id for s in statements]
    if workers <= 1:
        results = [_sweep_shard(ids, stream, (0, 1))]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_shard, ids, stream, (j, workers)) for j in range(workers)]
            results = [f.result() for f in futures]
    out = {}
    for sid in ids:
        summary = Summary(sid, stream.n, stream.mode)
        for counts, violations, _ in results:
            summary.instances += counts[sid][0]
            summary.hypothesis_met_count += counts[sid][1]
            summary.violations.extend(violations[sid])
        summary.violations.sort(key=lambda r: r.index)
        out[sid] = summary
    return out


def check_all(statement, stream: InstanceStream, workers: int = 1) -> Summary:
    stmt = get_statement(statement)
    return sweep([stmt.id], stream, workers)[stmt.id]


def stream_for(statement, n: int, seed: int | None = None, count: int | None = None) -> InstanceStream:
    """Exhaustive stream for the statement's kind when ``n`` is within the caps, else a seeded random one."""
    stmt = get_statement(statement)
    kind = stmt.kind
    exhaustive = LIMITS["exhaustive"]
    if kind == "family" and n <= exhaustive:
        return InstanceStream.exhaustive_families(n)
    if kind == "space" and n <= exhaustive:
        return InstanceStream.exhaustive_gentopos(n)
    if kind == "quasiorder" and n <= exhaustive:
        return InstanceStream.exhaustive_quasiorders(n)
    if kind == "quasiorder-pair":
        if n > LIMITS["pairs"]:
            raise CapExceeded("exhaustive-quasiorder-pairs", n, LIMITS["pairs"], "no random mode for pairs")
        return InstanceStream.exhaustive_quasiorder_pairs(n)
    return InstanceStream(
        RANDOM_MODE_OF_KIND[kind], n, seed=0 if seed is None else seed,
        count=DEFAULT_RANDOM_BUDGET if count is None else count,
    )


@dataclass
class SearchOutcome:
    report: Optional[ConditionReport]
    instances: int
    sizes: list

    @property
    def found(self) -> bool:
        return self.report is not None


def search(statement, n_max: int, budget: int | None = None, n_min: int = 1,
           seed: int | None = None) -> SearchOutcome:
    """First violated report over sizes ``n_min..n_max`` in canonical stream order.

    ``budget`` bounds the total number of instances visited; ``None`` means no bound
    (random streams for sizes beyond the exhaustive caps then draw a default sample).
    """
    stmt = get_statement(statement)
    seen = 0
    sizes = []
    for n in range(n_min, n_max + 1):
        remaining = None if budget is None else budget - seen
        if remaining is not None and remaining <= 0:
            break
        stream = stream_for(stmt, n, seed=seed, count=remaining)
        sizes.append(n)
        _, violations, visited = _sweep_shard([stmt.id], stream, (0, 1), stop_at_first=True, budget=remaining)
        seen += visited
        if violations[stmt.id]:
            return SearchOutcome(violations[stmt.id][0], seen, sizes)
    return SearchOutcome(None, seen, sizes)


def search_counterexample(statement, n_max: int, budget: int | None = None, n_min: int = 1,
                          seed: int | None = None) -> Optional[ConditionReport]:
    return search(statement, n_max, budget, n_min, seed).report


def converse_probe(n: int, statement: str = "C3.11-converse") -> Optional[ConditionReport]:
    """An instance of size exactly ``n`` on which the converse fails, if any."""
    return search(statement, n, n_min=n).report
