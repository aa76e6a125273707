"""Full reports on a space, a family or a quasiorder, keyed by notation names."""

from __future__ import annotations

from . import order, props, topo
from .documents import SpaceDocument
from .ground import GroundSet, SetFamily, family_to_json
from .order import Quasiorder
from .topo import GenTopology


def _set(ground: GroundSet, mask):
    return None if mask is None else ground.labels_of(mask)


def _ups(ground: GroundSet, q: Quasiorder) -> dict:
    return {label: ground.labels_of(row) for label, row in zip(ground.labels, q.rows)}


def _classification(family, ground: GroundSet) -> dict:
    c = topo.classify(family, ground)
    return {
        "generalized_topology": c.is_generalized_topology,
        "strong": c.is_strong,
        "topology": c.is_topology,
        "alexandroff": c.is_alexandroff,
    }


def analyze_space(t: GenTopology) -> dict:
    g = t.carrier
    D = topo.dense_family(t)
    DO = topo.dense_open_family(t)
    q_D = order.quasiorder_from_family(D, g)
    mt_DO = topo.mu_tilde_of_family(DO, g)
    q_mt = order.quasiorder_from_family(mt_DO.opens, g)
    nd_points = [g.labels[x] for x in range(t.n) if topo.is_nowhere_dense(t, 1 << x)]
    return {
        "mu": family_to_json(g, t.opens),
        "classification": _classification(t.opens, g),
        "Iso": _set(g, t.isolated),
        "D": family_to_json(g, D),
        "DO": family_to_json(g, DO),
        "DO+{} is a topology": topo.is_topology(DO | [0], g),
        "ND singletons": nd_points,
        "I(D)": _set(g, topo.try_cap_I(D)),
        "I(DO)": _set(g, topo.try_cap_I(DO)),
        "<=D": _ups(g, q_D),
        "tau[<=D]": family_to_json(g, order.specialization_topology(q_D)),
        "mu_tilde[DO]": family_to_json(g, mt_DO.opens),
        "tau[<=mu_tilde[DO]]": family_to_json(g, order.specialization_topology(q_mt)),
        "profile": props.profile(t).to_json(g),
    }


def analyze_family(family: SetFamily, g: GroundSet) -> dict:
    mu = topo.mu_of_family(family, g)
    mt = topo.mu_tilde_of_family(family, g)
    q_A = order.quasiorder_from_family(family, g)
    q_mt = order.quasiorder_from_family(mt.opens, g)
    tau_A = order.specialization_topology(q_A)
    tau_mt = order.specialization_topology(q_mt)
    structures = {"mu[A]": mu.opens, "mu_tilde[A]": mt.opens, "tau[<=A]": tau_A, "tau[<=mu_tilde[A]]": tau_mt}
    return {
        "A": family_to_json(g, family),
        "mu[A]": family_to_json(g, mu.opens),
        "mu_tilde[A]": family_to_json(g, mt.opens),
        "<=A": _ups(g, q_A),
        "<=mu_tilde[A]": _ups(g, q_mt),
        "tau[<=A]": family_to_json(g, tau_A),
        "tau[<=mu_tilde[A]]": family_to_json(g, tau_mt),
        "I(A)": _set(g, topo.try_cap_I(family)),
        "weakly maximal in <=A": _set(g, order.weakly_maximal_elements(q_A)),
        "classification": {name: _classification(fam, g) for name, fam in structures.items()},
        "resolvable": {
            name: props.is_resolvable(GenTopology(g, fam, validate=False)) for name, fam in structures.items()
        },
    }


def analyze_quasiorder(q: Quasiorder, g: GroundSet) -> dict:
    quo = order.quotient(q)
    return {
        "<=": _ups(g, q),
        "partial order": q.is_partial_order(),
        "M": _set(g, order.maximal_elements(q)),
        "weakly maximal": _set(g, order.weakly_maximal_elements(q)),
        "classes": [[g.labels[x] for x in cls] for cls in quo.classes],
        "tau[<=]": family_to_json(g, order.specialization_topology(q)),
    }


def analyze_document(doc: SpaceDocument) -> dict:
    """The document itself (so the report loads back) plus every derived structure."""
    report = doc.to_json()
    g = doc.ground
    if doc.source == "family":
        report["family report"] = analyze_family(doc.family, g)
    elif doc.source == "quasiorder":
        report["quasiorder report"] = analyze_quasiorder(doc.quasiorder, g)
    report["space"] = analyze_space(doc.space())
    return report


def _fmt_set(labels) -> str:
    return "undefined" if labels is None else "{" + ",".join(labels) + "}"


def _fmt_family(fam) -> str:
    return "{" + ", ".join(_fmt_set(s) for s in fam) + "}"


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "undefined"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return _fmt_family(value)
        if all(isinstance(v, str) for v in value):
            return _fmt_set(value)
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_fmt_value(v)}" for k, v in value.items())
    return str(value)


def _render_section(title: str, section: dict, lines: list):
    lines.append(f"[{title}]")
    for key, value in section.items():
        if key == "profile":
            continue
        if key.startswith("<=") and isinstance(value, dict):
            ups = ", ".join(f"up({k})={_fmt_set(v)}" for k, v in value.items())
            lines.append(f"  {key}: {ups}")
        elif key == "classes":
            lines.append(f"  {key}: " + ", ".join(_fmt_set(c) for c in value))
        elif isinstance(value, dict) and value and isinstance(next(iter(value.values())), dict):
            for name, flags in value.items():
                lines.append(f"  {key} of {name}: {_fmt_value(flags)}")
        else:
            lines.append(f"  {key}: {_fmt_value(value)}")


def render_report(report: dict) -> str:
    lines = []
    if report.get("name"):
        lines.append(f"name: {report['name']}")
    lines.append(f"ground: {_fmt_set(report['ground'])}")
    for section in ("family report", "quasiorder report"):
        if section in report:
            _render_section(section, report[section], lines)
    space = report["space"]
    _render_section("space", space, lines)
    prof = space["profile"]
    wit = prof["witnesses"]
    lines.append("[profile]")
    for key, value in prof.items():
        if key == "witnesses":
            continue
        name = key[3:] if key.startswith("is_") else key
        line = f"  {name}: {_fmt_value(value)}"
        w = wit.get(name)
        if w is not None:
            shown = "/".join(_fmt_set(s) for s in w) if w and isinstance(w[0], list) else _fmt_set(w)
            line += f", witness {shown}"
        lines.append(line)
    return "\n".join(lines)
