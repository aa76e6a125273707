"""Naive reference implementations on frozensets, written straight from the definitions.

Nothing here touches bitmasks or the package, so agreement between the two is
evidence rather than self-consistency.  Everything is exponential; keep n <= 4.
"""

from itertools import chain, combinations


def subsets(xs):
    xs = sorted(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))]


def subfamilies(family):
    return subsets(family)


def union_closure(family):
    """All unions of subfamilies (the empty subfamily gives the empty set)."""
    return {frozenset().union(*sub) for sub in subfamilies(family)}


def intersection_closure(family):
    """All intersections of non-empty subfamilies."""
    return {frozenset.intersection(*sub) for sub in subfamilies(family) if sub}


def mu(family):
    return union_closure(family)


def mu_tilde(family, X):
    out = set(mu(family))
    for a in family:
        if a:
            out |= {s for s in subsets(X) if a <= s}
    return out


def leq_from_family(family, X):
    """x <= y iff every member containing x contains y."""
    return {(x, y) for x in X for y in X if all(y in a for a in family if x in a)}


def up(rel, x):
    return frozenset(y for (a, y) in rel if a == x)


def increasing_sets(rel, X):
    return {s for s in subsets(X) if all(y in s for (x, y) in rel if x in s)}


def is_quasiorder(rel, X):
    refl = all((x, x) in rel for x in X)
    trans = all((x, z) in rel for (x, y) in rel for (w, z) in rel if y == w)
    return refl and trans


def all_quasiorders(X):
    pairs = [(x, y) for x in X for y in X if x != y]
    base = {(x, x) for x in X}
    out = []
    for sub in subsets(pairs):
        rel = base | set(sub)
        if is_quasiorder(rel, X):
            out.append(frozenset(rel))
    return out


def closed_sets(opens, X):
    return {frozenset(X) - u for u in opens}


def closure(opens, X, e):
    """Intersection of every closed superset of e."""
    sups = [c for c in closed_sets(opens, X) if e <= c]
    return frozenset.intersection(frozenset(X), *sups)


def interior(opens, e):
    return frozenset().union(*[u for u in opens if u <= e])


def is_dense(opens, X, d):
    return all(u & d for u in opens if u)


def dense_sets(opens, X):
    return {d for d in subsets(X) if is_dense(opens, X, d)}


def is_nowhere_dense(opens, X, e):
    return not interior(opens, closure(opens, X, e))


def isolated(opens, X):
    return frozenset(x for x in X if frozenset([x]) in opens)


def intersection_of_nonempty(family):
    ne = [a for a in family if a]
    if not ne:
        return None
    return frozenset.intersection(*ne)


def is_resolvable(opens, X):
    return any(is_dense(opens, X, d) and is_dense(opens, X, frozenset(X) - d) for d in subsets(X))


def f_d(opens, X):
    ds = dense_sets(opens, X)
    return all((a & b) in ds for a in ds for b in ds)


def f_d_T(opens, X):
    ds = dense_sets(opens, X)
    return all(not (a & b) or (a & b) in ds for a in ds for b in ds)


def is_T0(opens, X):
    return all(any((x in u) != (y in u) for u in opens) for x in X for y in X if x != y)


def is_T1(opens, X):
    return all(frozenset(X) - {x} in opens for x in X)


def is_union_closed(family):
    return frozenset() in family and all((a | b) in family for a in family for b in family)


def is_topology(family, X):
    return (is_union_closed(family) and frozenset(X) in family
            and all((a & b) in family for a in family for b in family))


# conversions between the package's bitmasks and frozensets of indices

def to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def to_family(masks):
    return {to_set(m) for m in masks}


def to_mask(s):
    return sum(1 << i for i in s)
