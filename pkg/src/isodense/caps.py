"""Size caps on explicit enumerations.

A ``cap`` argument of ``...`` (the default everywhere) means the current limit
from :data:`LIMITS`; ``None`` means no limit.  :func:`raise_caps` lifts every
limit to at least ``n``, which is what the CLI's ``--max-n`` does.
"""

DEFAULTS = {
    "enumeration": 16,  # visiting every subset of the carrier
    "resolvability": 24,  # dense/co-dense pair search
    "exhaustive": 4,  # every family or quasiorder on the carrier
    "pairs": 3,  # every pair of quasiorders
}

LIMITS = dict(DEFAULTS)


def resolve(cap, kind: str):
    return LIMITS[kind] if cap is ... else cap


def raise_caps(n: int) -> None:
    for key in LIMITS:
        LIMITS[key] = max(LIMITS[key], n)


def reset_caps() -> None:
    LIMITS.update(DEFAULTS)
