"""The statement catalog.

Every entry lists a hypothesis, independently evaluated labelled conditions,
and the relation the conditions are claimed to satisfy.  Conditions only call
library primitives through the instance; a broken primitive therefore shows
up as a violated verdict instead of agreeing with itself.

Conventions:

* A condition that mentions ``I(.)`` of a family without non-empty members is
  false (the intersection is undefined).  Hypotheses of the affected entries
  exclude that case, so the rule only matters for diagnostics.
* Entries with ``probe=True`` are deliberately too strong (hypothesis dropped,
  or a converse).  A violated verdict on them is the expected outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .. import order, props, topo
from ..errors import UnknownStatement
from ..ground import SetFamily, bits, canonical_key

Relation = Callable[[dict], bool]


@dataclass(frozen=True)
class Statement:
    id: str
    kind: str
    title: str
    hypothesis_text: str
    hypothesis: Callable
    conditions: tuple
    relation: Relation
    claim: str
    witness: Optional[Callable] = None
    probe: bool = False

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.conditions]


def equivalent(*labels) -> Relation:
    return lambda c: len({c[label] for label in labels}) == 1


def implies(a, b) -> Relation:
    return lambda c: (not c[a]) or c[b]


def all_true(*labels) -> Relation:
    return lambda c: all(c[label] for label in labels)


def both(*relations: Relation) -> Relation:
    return lambda c: all(rel(c) for rel in relations)


def _first_difference(a: SetFamily, b: SetFamily) -> Optional[int]:
    diff = a.as_set() ^ b.as_set()
    return min(diff, key=canonical_key) if diff else None


def _difference_witness(name_a, get_a, name_b, get_b):
    def witness(ctx):
        a, b = get_a(ctx), get_b(ctx)
        d = _first_difference(a, b)
        if d is None:
            return None
        side = name_a if d in a else name_b
        return {f"set only in {side}": d}
    return witness


def _defined_in(i, family) -> bool:
    return i is not None and i in family


def _union(family: SetFamily) -> int:
    out = 0
    for m in family.members:
        out |= m
    return out


CATALOG: dict[str, Statement] = {}


def _register(stmt: Statement) -> Statement:
    if stmt.id in CATALOG:
        raise ValueError(f"duplicate statement id {stmt.id}")
    CATALOG[stmt.id] = stmt
    return stmt


def get_statement(statement_id) -> Statement:
    if isinstance(statement_id, Statement):
        return statement_id
    try:
        return CATALOG[statement_id]
    except KeyError:
        known = ", ".join(CATALOG)
        raise UnknownStatement(f"unknown statement {statement_id!r}; known: {known}") from None


# Families ---------------------------------------------------------------

ADMISSIBLE = "A is non-empty and A != {{}}"


def _admissible(ctx) -> bool:
    return ctx.admissible


def _I_nonempty(ctx) -> bool:
    return ctx.admissible and bool(ctx.I)


def _I_empty(ctx) -> bool:
    return ctx.admissible and ctx.I == 0


def _p33_mu_tilde_formula(ctx):
    return ctx.mu_tilde.opens == ctx.mu_tilde_def


def _p33_I_equal(ctx):
    return ctx.I is not None and ctx.I == ctx.I_mu == ctx.I_mu_tilde


def _p33_I_membership(ctx):
    return ctx.I is not None and (ctx.I in ctx.mu.opens) == (ctx.I in ctx.mu_tilde.opens)


def _p33_B_nonempty(ctx):
    mu = ctx.mu.opens
    return all(bool(ctx.B(ctx.family, x)) == bool(ctx.B(mu, x)) for x in range(ctx.n))


def _p33_I_at(ctx):
    for x in range(ctx.n):
        if not ctx.B(ctx.family, x):
            continue
        if not ctx.B(ctx.mu_tilde.opens, x):
            return False
        i_a = ctx.I_at(ctx.family, x)
        i_mu = ctx.I_at(ctx.mu.opens, x)
        i_mt = ctx.I_at(ctx.mu_tilde.opens, x)
        if i_a != i_mu or i_mt & ~i_a:
            return False
    return True


_register(Statement(
    id="P3.3",
    kind="family",
    title="Elementary facts about mu[A], mu_tilde[A] and I",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=(
        ("(1) mu_tilde[A] formula", _p33_mu_tilde_formula),
        ("(2) I(A)=I(mu[A])=I(mu_tilde[A])", _p33_I_equal),
        ("(3) I(A) in mu[A] iff I(A) in mu_tilde[A]", _p33_I_membership),
        ("(4) B_A(x) non-empty iff B_mu[A](x) non-empty", _p33_B_nonempty),
        ("(5) I_mu_tilde[A](x) <= I_A(x) = I_mu[A](x)", _p33_I_at),
    ),
    relation=all_true(
        "(1) mu_tilde[A] formula",
        "(2) I(A)=I(mu[A])=I(mu_tilde[A])",
        "(3) I(A) in mu[A] iff I(A) in mu_tilde[A]",
        "(4) B_A(x) non-empty iff B_mu[A](x) non-empty",
        "(5) I_mu_tilde[A](x) <= I_A(x) = I_mu[A](x)",
    ),
    claim="all five items hold",
    witness=_difference_witness("mu_tilde[A]", lambda c: c.mu_tilde.opens, "definition", lambda c: c.mu_tilde_def),
))


def _p34_B_order(ctx):
    n = ctx.n
    bs = [ctx.B(ctx.family, x) for x in range(n)]
    return all(ctx.q_A.le(x, y) == (bs[x] <= bs[y]) for x in range(n) for y in range(n))


def _p34_orders(ctx):
    return ctx.q_mu_tilde.issubrelation(ctx.q_A) and ctx.q_A == ctx.q_mu


def _p34_I_at_is_up(ctx):
    return all(
        ctx.I_at(ctx.family, x) == order.up_set(ctx.q_A, x)
        for x in range(ctx.n)
        if ctx.B(ctx.family, x)
    )


def _p34_I_is_up(ctx):
    i = ctx.I
    if i is None:
        return False
    return all(order.up_set(ctx.q_A, z) == i for z in bits(i)) and i in ctx.tau_A


def _p34_mu_in_tau(ctx):
    return ctx.mu.opens.issubfamily(ctx.tau_A)


_register(Statement(
    id="P3.4",
    kind="family",
    title="The quasiorder determined by A versus neighbourhoods and mu[A]",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=(
        ("(1) x<=_A y iff B_A(x) <= B_A(y)", _p34_B_order),
        ("(2) <=_mu_tilde[A] <= <=_A = <=_mu[A]", _p34_orders),
        ("(3) I_A(x) = up[<=_A, x]", _p34_I_at_is_up),
        ("(4) I(A) = up[<=_A, z] for z in I(A), and I(A) in tau[<=A]", _p34_I_is_up),
        ("(5) mu[A] <= tau[<=A]", _p34_mu_in_tau),
    ),
    relation=all_true(
        "(1) x<=_A y iff B_A(x) <= B_A(y)",
        "(2) <=_mu_tilde[A] <= <=_A = <=_mu[A]",
        "(3) I_A(x) = up[<=_A, x]",
        "(4) I(A) = up[<=_A, z] for z in I(A), and I(A) in tau[<=A]",
        "(5) mu[A] <= tau[<=A]",
    ),
    claim="all five items hold",
))


_register(Statement(
    id="T3.6",
    kind="family",
    title="Comparison of the specialization topologies of A, mu[A], mu_tilde[A]",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=(
        ("(1) tau[<=A] = tau[<=mu[A]] <= tau[<=mu_tilde[A]]",
         lambda c: c.tau_A == c.tau_mu and c.tau_mu.issubfamily(c.tau_mu_tilde)),
        ("(2) tau[<=A] = tau[<=mu_tilde[A]]", lambda c: c.tau_A == c.tau_mu_tilde),
        ("(2) <=_A <= <=_mu_tilde[A]", lambda c: c.q_A.issubrelation(c.q_mu_tilde)),
    ),
    relation=both(
        all_true("(1) tau[<=A] = tau[<=mu[A]] <= tau[<=mu_tilde[A]]"),
        equivalent("(2) tau[<=A] = tau[<=mu_tilde[A]]", "(2) <=_A <= <=_mu_tilde[A]"),
    ),
    claim="(1) holds and the two sides of (2) are equivalent",
    witness=_difference_witness("tau[<=A]", lambda c: c.tau_A, "tau[<=mu_tilde[A]]", lambda c: c.tau_mu_tilde),
))


def _t37_i(ctx):
    if _union(ctx.family) != ctx.full:
        return False
    mu = ctx.mu.opens
    return all(_defined_in(ctx.I_at(ctx.family, x), mu) for x in range(ctx.n))


_register(Statement(
    id="T3.7",
    kind="family",
    title="When mu[A] is the specialization topology of <=_A",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=(
        ("(i) union A = X and I_A(x) in mu[A] for all x", _t37_i),
        ("(ii) tau[<=A] = mu[A]", lambda c: c.tau_A == c.mu.opens),
        ("(iii) mu[A] is an Alexandroff topology", lambda c: topo.is_alexandroff(c.mu.opens, c.ground)),
    ),
    relation=equivalent(
        "(i) union A = X and I_A(x) in mu[A] for all x",
        "(ii) tau[<=A] = mu[A]",
        "(iii) mu[A] is an Alexandroff topology",
    ),
    claim="(i), (ii), (iii) are equivalent",
    witness=_difference_witness("tau[<=A]", lambda c: c.tau_A, "mu[A]", lambda c: c.mu.opens),
))


_register(Statement(
    id="C3.8",
    kind="family",
    title="Finite families: tau[<=A] = mu[A] iff mu[A] is a topology",
    hypothesis_text=ADMISSIBLE + " (every family here is finite)",
    hypothesis=_admissible,
    conditions=(
        ("tau[<=A] = mu[A]", lambda c: c.tau_A == c.mu.opens),
        ("mu[A] is a topology", lambda c: topo.is_topology(c.mu.opens, c.ground)),
    ),
    relation=equivalent("tau[<=A] = mu[A]", "mu[A] is a topology"),
    claim="the two conditions are equivalent",
))


_register(Statement(
    id="T3.9",
    kind="family",
    title="Empty I(A) makes tau[<=mu_tilde[A]] discrete",
    hypothesis_text=ADMISSIBLE + " and I(A) is empty",
    hypothesis=_I_empty,
    conditions=(
        ("tau[<=mu_tilde[A]] is discrete", lambda c: len(c.tau_mu_tilde) == 1 << c.n),
    ),
    relation=all_true("tau[<=mu_tilde[A]] is discrete"),
    claim="the conclusion holds",
))


def _t310_conditions():
    return (
        ("I(A) = weakly <=_A-maximal elements",
         lambda c: c.I is not None and c.I == order.weakly_maximal_elements(c.q_A)),
        ("(i) tau[<=mu_tilde[A]] = mu_tilde[A]", lambda c: c.tau_mu_tilde == c.mu_tilde.opens),
        ("(ii) I(A) in mu[A]", lambda c: _defined_in(c.I, c.mu.opens)),
        ("(iii) mu_tilde[A] = super(I(A))",
         lambda c: c.I is not None and c.mu_tilde.opens == topo.superset_topology(c.I, c.ground).opens),
        ("(iv) mu_tilde[A] is an Alexandroff topology",
         lambda c: topo.is_alexandroff(c.mu_tilde.opens, c.ground)),
        ("I(A) dense in tau[<=mu_tilde[A]]",
         lambda c: c.I is not None
         and topo.is_dense(topo.GenTopology(c.ground, c.tau_mu_tilde, validate=False), c.I)),
    )


_T310_RELATION = both(
    all_true("I(A) = weakly <=_A-maximal elements", "I(A) dense in tau[<=mu_tilde[A]]"),
    equivalent(
        "(i) tau[<=mu_tilde[A]] = mu_tilde[A]",
        "(ii) I(A) in mu[A]",
        "(iii) mu_tilde[A] = super(I(A))",
        "(iv) mu_tilde[A] is an Alexandroff topology",
    ),
)

_register(Statement(
    id="T3.10",
    kind="family",
    title="When mu_tilde[A] is the specialization topology of its own quasiorder",
    hypothesis_text=ADMISSIBLE + " and I(A) is non-empty",
    hypothesis=_I_nonempty,
    conditions=_t310_conditions(),
    relation=_T310_RELATION,
    claim="I(A) is the weakly maximal set, is dense, and (i)-(iv) are equivalent",
    witness=_difference_witness(
        "tau[<=mu_tilde[A]]", lambda c: c.tau_mu_tilde, "mu_tilde[A]", lambda c: c.mu_tilde.opens),
))

_register(Statement(
    id="T3.10-nohyp",
    kind="family",
    title="T3.10 with the requirement that I(A) be non-empty dropped",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=_t310_conditions(),
    relation=_T310_RELATION,
    claim="same as T3.10",
    witness=_difference_witness(
        "tau[<=mu_tilde[A]]", lambda c: c.tau_mu_tilde, "mu_tilde[A]", lambda c: c.mu_tilde.opens),
    probe=True,
))

_register(Statement(
    id="T3.10i-always",
    kind="family",
    title="tau[<=mu_tilde[A]] = mu_tilde[A] claimed for every admissible A",
    hypothesis_text=ADMISSIBLE,
    hypothesis=_admissible,
    conditions=(("tau[<=mu_tilde[A]] = mu_tilde[A]", lambda c: c.tau_mu_tilde == c.mu_tilde.opens),),
    relation=all_true("tau[<=mu_tilde[A]] = mu_tilde[A]"),
    claim="the equality holds",
    witness=_difference_witness(
        "tau[<=mu_tilde[A]]", lambda c: c.tau_mu_tilde, "mu_tilde[A]", lambda c: c.mu_tilde.opens),
    probe=True,
))

_C311_PREMISE = "tau[<=A] = mu[A]"
_C311_CONCLUSION = "tau[<=mu_tilde[A]] = mu_tilde[A]"

_register(Statement(
    id="C3.11",
    kind="family",
    title="tau[<=A] = mu[A] forces tau[<=mu_tilde[A]] = mu_tilde[A] when I(A) is non-empty",
    hypothesis_text=ADMISSIBLE + " and I(A) is non-empty",
    hypothesis=_I_nonempty,
    conditions=(
        (_C311_PREMISE, lambda c: c.tau_A == c.mu.opens),
        (_C311_CONCLUSION, lambda c: c.tau_mu_tilde == c.mu_tilde.opens),
    ),
    relation=implies(_C311_PREMISE, _C311_CONCLUSION),
    claim="premise implies conclusion",
))

_register(Statement(
    id="C3.11-converse",
    kind="family",
    title="Converse of C3.11 (false in general)",
    hypothesis_text=ADMISSIBLE + " and I(A) is non-empty",
    hypothesis=_I_nonempty,
    conditions=(
        (_C311_PREMISE, lambda c: c.tau_A == c.mu.opens),
        (_C311_CONCLUSION, lambda c: c.tau_mu_tilde == c.mu_tilde.opens),
    ),
    relation=implies(_C311_CONCLUSION, _C311_PREMISE),
    claim="conclusion implies premise",
    witness=_difference_witness("tau[<=A]", lambda c: c.tau_A, "mu[A]", lambda c: c.mu.opens),
    probe=True,
))

_register(Statement(
    id="T3.13",
    kind="family",
    title="tau[<=A] = mu_tilde[A] forces <=_A = <=_mu_tilde[A]",
    hypothesis_text=ADMISSIBLE + " and I(A) is non-empty",
    hypothesis=_I_nonempty,
    conditions=(
        ("tau[<=A] = mu_tilde[A]", lambda c: c.tau_A == c.mu_tilde.opens),
        ("<=_A = <=_mu_tilde[A]", lambda c: c.q_A == c.q_mu_tilde),
    ),
    relation=implies("tau[<=A] = mu_tilde[A]", "<=_A = <=_mu_tilde[A]"),
    claim="premise implies conclusion",
))

_register(Statement(
    id="R3.14",
    kind="family",
    title="The family {{}} on a non-empty carrier",
    hypothesis_text="A = {{}} and X is non-empty",
    hypothesis=lambda c: c.family == SetFamily([0]) and c.n > 0,
    conditions=(
        ("I(A) undefined", lambda c: c.I is None),
        ("mu[A] = {{}}", lambda c: c.mu.opens == SetFamily([0])),
        ("mu_tilde[A] = {{}}", lambda c: c.mu_tilde.opens == SetFamily([0])),
        ("<=_mu_tilde[A] = X x X", lambda c: c.q_mu_tilde == order.Quasiorder.full(c.n)),
        ("tau[<=mu_tilde[A]] indiscrete", lambda c: c.tau_mu_tilde == SetFamily([0, c.full])),
    ),
    relation=all_true(
        "I(A) undefined", "mu[A] = {{}}", "mu_tilde[A] = {{}}",
        "<=_mu_tilde[A] = X x X", "tau[<=mu_tilde[A]] indiscrete",
    ),
    claim="all items hold",
))


# Quasiorders -------------------------------------------------------------

_register(Statement(
    id="L3.5",
    kind="quasiorder-pair",
    title="Inclusion of quasiorders reverses inclusion of specialization topologies",
    hypothesis_text="two quasiorders on one carrier",
    hypothesis=lambda c: True,
    conditions=(
        ("<=* <= <=", lambda c: c.q_star.issubrelation(c.q)),
        ("tau[<=] <= tau[<=*]", lambda c: c.tau.issubfamily(c.tau_star)),
    ),
    relation=equivalent("<=* <= <=", "tau[<=] <= tau[<=*]"),
    claim="the two inclusions are equivalent",
))


def _p213_hyp(ctx) -> bool:
    m = ctx.M
    return all(row & m for row in ctx.q.rows)


_register(Statement(
    id="P2.13",
    kind="quasiorder",
    title="Quasiorders with enough maximal elements give iso-dense specialization topologies",
    hypothesis_text="every element lies below some maximal element",
    hypothesis=_p213_hyp,
    conditions=(
        ("M = Iso(tau[<=])", lambda c: c.M == topo.isolated_points(c.space)),
        ("tau[<=] is iso-dense", lambda c: props.is_iso_dense(c.space)),
        ("D(tau[<=]) + {{}} = super(M)",
         lambda c: (topo.dense_family(c.space) | [0]) == topo.superset_topology(c.M, c.ground).opens),
    ),
    relation=all_true("M = Iso(tau[<=])", "tau[<=] is iso-dense", "D(tau[<=]) + {{}} = super(M)"),
    claim="all three conclusions hold",
))


# Spaces ------------------------------------------------------------------

NON_INDISCRETE = "mu is not a subfamily of {{}, X}"


def _non_indiscrete(ctx) -> bool:
    return ctx.non_indiscrete


def _p26_hyp(ctx) -> bool:
    if not ctx.is_strong:
        return False
    opens = ctx.opens
    return all((u & d) in opens for u in opens.members for d in ctx.DO.members)


_register(Statement(
    id="P2.6",
    kind="space",
    title="Dense open sets plus the empty set form a topology",
    hypothesis_text="mu is strong and U & D is open for every open U and dense open D",
    hypothesis=_p26_hyp,
    conditions=(
        ("DO(X) + {{}} is a topology", lambda c: topo.is_topology(c.DO | [0], c.ground)),
    ),
    relation=all_true("DO(X) + {{}} is a topology"),
    claim="the conclusion holds",
))

_register(Statement(
    id="P2.7",
    kind="space",
    title="Dense sets contain the isolated points; iso-density via super(Iso)",
    hypothesis_text="any generalized topology",
    hypothesis=lambda c: True,
    conditions=(
        ("D(X) <= super(Iso(X))",
         lambda c: c.D.issubfamily(topo.superset_topology(c.Iso, c.ground).opens)),
        ("non-indiscrete", _non_indiscrete),
        ("iso-dense", lambda c: c.iso_dense),
        ("super(Iso(X)) = D(X) + {{}}",
         lambda c: topo.superset_topology(c.Iso, c.ground).opens == (c.D | [0])),
    ),
    relation=lambda c: c["D(X) <= super(Iso(X))"] and (
        not c["non-indiscrete"] or c["iso-dense"] == c["super(Iso(X)) = D(X) + {{}}"]
    ),
    claim="first item holds; for non-indiscrete spaces iso-density is equivalent to the equality",
))


def _p44_iv_premise(ctx) -> bool:
    return ctx.is_T1 or (ctx.is_topology and ctx.is_alexandroff and ctx.is_T0)


_register(Statement(
    id="P4.4",
    kind="space",
    title="I(D), I(DO), isolated points and non-nowhere-dense singletons",
    hypothesis_text=NON_INDISCRETE,
    hypothesis=_non_indiscrete,
    conditions=(
        ("(i) I(D) = Iso and I(D) is open", lambda c: c.I_D is not None and c.I_D == c.Iso and c.I_D in c.opens),
        ("(ii) I(DO) = {x : {x} not nowhere dense}",
         lambda c: c.I_DO is not None and c.I_DO == c.not_nowhere_dense_points),
        ("(iii) Iso <= I(DO)", lambda c: c.I_DO is not None and c.Iso & ~c.I_DO == 0),
        ("(iv) T1, or Alexandroff T0 topology", _p44_iv_premise),
        ("(iv) I(DO) = Iso", lambda c: c.I_DO is not None and c.I_DO == c.Iso),
        ("(v) iso-dense", lambda c: c.iso_dense),
        ("(v) mu[D] = super(I(D))",
         lambda c: c.I_D is not None and c.mu_D.opens == topo.superset_topology(c.I_D, c.ground).opens),
    ),
    relation=both(
        all_true("(i) I(D) = Iso and I(D) is open", "(ii) I(DO) = {x : {x} not nowhere dense}",
                 "(iii) Iso <= I(DO)"),
        implies("(iv) T1, or Alexandroff T0 topology", "(iv) I(DO) = Iso"),
        equivalent("(v) iso-dense", "(v) mu[D] = super(I(D))"),
    ),
    claim="(i)-(iii) hold, (iv) premise implies conclusion, (v) sides equivalent",
))

_register(Statement(
    id="T4.7",
    kind="space",
    title="Dense-in-itself spaces make tau[<=D] discrete",
    hypothesis_text=NON_INDISCRETE,
    hypothesis=_non_indiscrete,
    conditions=(
        ("(i) dense-in-itself", lambda c: c.dense_in_itself),
        ("(i) tau[<=D] discrete", lambda c: len(c.tau_D) == 1 << c.n),
        ("(ii) every singleton nowhere dense", lambda c: c.all_singletons_nowhere_dense),
        ("(ii) tau[<=mu_tilde[DO]] discrete", lambda c: len(c.tau_mu_tilde_DO) == 1 << c.n),
    ),
    relation=both(
        implies("(i) dense-in-itself", "(i) tau[<=D] discrete"),
        implies("(ii) every singleton nowhere dense", "(ii) tau[<=mu_tilde[DO]] discrete"),
    ),
    claim="each premise implies its conclusion",
))


def _t48_conditions():
    return (
        ("(i) tau[<=D] = mu[D]", lambda c: c.tau_D == c.mu_D.opens),
        ("(ii) mu[D] is an Alexandroff topology", lambda c: topo.is_alexandroff(c.mu_D.opens, c.ground)),
        ("(iii) iso-dense", lambda c: c.iso_dense),
    )


_T48_RELATION = equivalent("(i) tau[<=D] = mu[D]", "(ii) mu[D] is an Alexandroff topology", "(iii) iso-dense")

_register(Statement(
    id="T4.8",
    kind="space",
    title="Characterization of non-indiscrete iso-dense spaces",
    hypothesis_text=NON_INDISCRETE,
    hypothesis=_non_indiscrete,
    conditions=_t48_conditions(),
    relation=_T48_RELATION,
    claim="(i), (ii), (iii) are equivalent",
    witness=_difference_witness("tau[<=D]", lambda c: c.tau_D, "mu[D]", lambda c: c.mu_D.opens),
))

_register(Statement(
    id="T4.8-nohyp",
    kind="space",
    title="T4.8 with indiscrete spaces allowed",
    hypothesis_text="any generalized topology",
    hypothesis=lambda c: True,
    conditions=_t48_conditions(),
    relation=_T48_RELATION,
    claim="same as T4.8",
    witness=_difference_witness("tau[<=D]", lambda c: c.tau_D, "mu[D]", lambda c: c.mu_D.opens),
    probe=True,
))


def _t49_conditions():
    return (
        ("(i) tau[<=mu_tilde[DO]] = mu_tilde[DO]", lambda c: c.tau_mu_tilde_DO == c.mu_tilde_DO.opens),
        ("(ii) {x : {x} not nowhere dense} in DO", lambda c: c.not_nowhere_dense_points in c.DO),
        ("(iii) mu_tilde[DO] = super({x : {x} not nowhere dense})",
         lambda c: c.mu_tilde_DO.opens == topo.superset_topology(c.not_nowhere_dense_points, c.ground).opens),
        ("(iv) mu_tilde[DO] is an Alexandroff topology",
         lambda c: topo.is_alexandroff(c.mu_tilde_DO.opens, c.ground)),
    )


_T49_LABELS = [label for label, _ in _t49_conditions()]

_register(Statement(
    id="T4.9",
    kind="space",
    title="When the non-nowhere-dense points form a dense open set",
    hypothesis_text=NON_INDISCRETE,
    hypothesis=_non_indiscrete,
    conditions=_t49_conditions(),
    relation=equivalent(*_T49_LABELS),
    claim="(i)-(iv) are equivalent",
))

_register(Statement(
    id="C4.12",
    kind="space",
    title="Iso-density of T1 spaces via dense open sets",
    hypothesis_text="T1 and mu != {{}}",
    hypothesis=lambda c: c.is_T1 and c.opens != SetFamily([0]),
    conditions=(("iso-dense", lambda c: c.iso_dense),) + _t49_conditions(),
    relation=equivalent("iso-dense", *_T49_LABELS),
    claim="iso-density and (i)-(iv) are equivalent",
))

_register(Statement(
    id="P5.3",
    kind="space",
    title="Iso-dense implies F_d implies F_d^T",
    hypothesis_text="any generalized topology",
    hypothesis=lambda c: True,
    conditions=(
        ("iso-dense", lambda c: c.iso_dense),
        ("F_d", lambda c: c.f_d),
        ("F_d^T", lambda c: c.f_d_T),
    ),
    relation=both(implies("iso-dense", "F_d"), implies("F_d", "F_d^T")),
    claim="(i) iso-dense implies F_d; (ii) F_d implies F_d^T",
))


def _p54_conditions():
    return (
        ("F_d", lambda c: c.f_d),
        ("F_d^T", lambda c: c.f_d_T),
        ("resolvable", lambda c: c.resolvable),
        ("non-indiscrete", _non_indiscrete),
    )


def _p54_relation(c) -> bool:
    if c["F_d"] != c["F_d^T"]:
        return False
    return not (c["resolvable"] and c["non-indiscrete"]) or not c["F_d^T"]


_register(Statement(
    id="P5.4",
    kind="space",
    title="Away from {{}, X}, F_d and F_d^T agree; resolvable non-indiscrete spaces fail F_d^T",
    hypothesis_text="mu != {{}, X}",
    hypothesis=lambda c: c.opens != SetFamily([0, c.full]),
    conditions=_p54_conditions(),
    relation=_p54_relation,
    claim="F_d iff F_d^T, and resolvable non-indiscrete implies not F_d^T",
))

_register(Statement(
    id="P5.4-nohyp",
    kind="space",
    title="P5.4 with mu = {{}, X} allowed",
    hypothesis_text="any generalized topology",
    hypothesis=lambda c: True,
    conditions=_p54_conditions(),
    relation=_p54_relation,
    claim="same as P5.4",
    probe=True,
))

_register(Statement(
    id="C5.5",
    kind="space",
    title="F_d and F_d^T agree on T0 spaces",
    hypothesis_text="T0",
    hypothesis=lambda c: c.is_T0,
    conditions=(("F_d", lambda c: c.f_d), ("F_d^T", lambda c: c.f_d_T)),
    relation=equivalent("F_d", "F_d^T"),
    claim="F_d iff F_d^T",
))

_register(Statement(
    id="C5.6",
    kind="space",
    title="F_d^T without F_d only on indiscrete carriers with two or more points",
    hypothesis_text="any generalized topology",
    hypothesis=lambda c: True,
    conditions=(
        ("F_d^T", lambda c: c.f_d_T),
        ("F_d", lambda c: c.f_d),
        ("|X| >= 2", lambda c: c.n >= 2),
        ("mu = {{}, X}", lambda c: c.opens == SetFamily([0, c.full])),
    ),
    relation=lambda c: not (c["F_d^T"] and not c["F_d"]) or (c["|X| >= 2"] and c["mu = {{}, X}"]),
    claim="(F_d^T and not F_d) implies |X| >= 2 and mu = {{}, X}",
))


def statement_ids(include_probes: bool = True) -> list[str]:
    return [sid for sid, st in CATALOG.items() if include_probes or not st.probe]
