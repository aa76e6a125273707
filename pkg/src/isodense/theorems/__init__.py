from .catalog import CATALOG, Statement, get_statement, statement_ids
from .harness import (
    HOLDS,
    NOT_MET,
    VIOLATED,
    ConditionReport,
    SearchOutcome,
    Summary,
    check,
    check_all,
    converse_probe,
    search,
    search_counterexample,
    stream_for,
    sweep,
)
from .instances import FamilyInstance, PairInstance, QuasiorderInstance, SpaceInstance
from .streams import InstanceStream

__all__ = [
    "CATALOG", "Statement", "get_statement", "statement_ids",
    "HOLDS", "NOT_MET", "VIOLATED", "ConditionReport", "SearchOutcome", "Summary",
    "check", "check_all", "converse_probe", "search", "search_counterexample", "stream_for", "sweep",
    "FamilyInstance", "PairInstance", "QuasiorderInstance", "SpaceInstance", "InstanceStream",
]
