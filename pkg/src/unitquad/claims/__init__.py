from .context import Budgets, QContext
from .registry import CLAIMS, ClaimVerdict, Status, claim_ids, run_claim
from .report import CSV_COLUMNS, report
from .store import ResultCache, dumps_fixed
from .suite import SuiteResult, parse_q_range, run_suite

__all__ = [
    "Budgets",
    "CLAIMS",
    "CSV_COLUMNS",
    "ClaimVerdict",
    "QContext",
    "ResultCache",
    "Status",
    "SuiteResult",
    "claim_ids",
    "dumps_fixed",
    "parse_q_range",
    "report",
    "run_claim",
    "run_suite",
]
