"""Running claims over ranges of q, with caching."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..ffield import odd_prime_powers
from ..qgraph import MAX_GRAPH_Q
from .context import Budgets, QContext
from .registry import CLAIMS, ClaimVerdict, run_claim
from .store import ResultCache, cache_key

PROFILE_KIND = "profile"


@dataclass
class SuiteResult:
    verdicts: list[ClaimVerdict] = field(default_factory=list)
    profiles: dict[int, dict] = field(default_factory=dict)
    cache_hits: int = 0


def parse_q_range(text: str) -> list[int]:
    """``"3..9"`` -> odd prime powers in [3, 9]; ``"7"`` -> [7]."""
    if ".." in text:
        lo, hi = (int(t) for t in text.split("..", 1))
        return odd_prime_powers(lo, min(hi, MAX_GRAPH_Q))
    return [int(text)]


def _normalize(payload):
    # round-trip through JSON so fresh and cached results compare equal
    return json.loads(json.dumps(payload, default=lambda o: o.item() if hasattr(o, "item") else sorted(o)))


def run_for_q(
    q: int,
    claims: list[str],
    budgets: Budgets,
    seed: int,
    cache_dir: str | None,
) -> tuple[list[ClaimVerdict], dict, int]:
    cache = ResultCache(cache_dir)
    ctx = QContext(q, budgets, seed)
    key = cache_key(q=q, budgets=budgets.to_json(), seed=seed)
    hits = 0
    verdicts = []
    for cid in claims:
        kind = f"verdict-{cid}"
        cached = cache.load(q, kind, key)
        if cached is not None:
            verdicts.append(ClaimVerdict.from_json(cached))
            hits += 1
            continue
        verdict = run_claim(cid, ctx)
        verdict.evidence = _normalize(verdict.evidence)
        if not verdict.reason.startswith("internal error"):
            cache.store(q, kind, key, verdict.to_json())
        verdicts.append(verdict)
    profile = cache.load(q, PROFILE_KIND, key)
    if profile is None:
        profile = _normalize(ctx.profile())
        cache.store(q, PROFILE_KIND, key, profile)
    else:
        hits += 1
    return verdicts, profile, hits


def run_suite(
    q_values: list[int],
    claim_filter: list[str] | None = None,
    budgets: Budgets | None = None,
    seed: int = 0,
    cache_dir: str | None = None,
    workers: int = 1,
) -> SuiteResult:
    """Run the selected claims for every q; results ordered by (q, claim)."""
    budgets = budgets or Budgets()
    claims = [c for c in CLAIMS if claim_filter is None or c in claim_filter]
    unknown = set(claim_filter or ()) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    result = SuiteResult()
    args = [(q, claims, budgets, seed, cache_dir) for q in sorted(set(q_values))]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(run_for_q, *zip(*args)))
    else:
        outputs = [run_for_q(*a) for a in args]
    for (q, *_), (verdicts, profile, hits) in zip(args, outputs):
        result.verdicts.extend(verdicts)
        result.profiles[q] = profile
        result.cache_hits += hits
    return result
