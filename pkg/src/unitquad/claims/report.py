"""Markdown, JSON and CSV reports.  Output is byte-stable: no timings, fixed floats."""
from __future__ import annotations

import csv
import io

from .registry import CLAIMS, ClaimVerdict
from .store import dumps_fixed

CSV_COLUMNS = [
    "q", "p", "n", "delta", "triangles", "omega", "alpha", "chi_lo", "chi_hi", "chi_exact",
    "chi_edge", "lambda_min", "ratio_theta", "hoffman", "lambda_max_nontrivial", "alpha_exact",
]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        text = f"{value:.6f}"
        return "0.000000" if text == "-0.000000" else text
    return str(value)


def _status_grid(verdicts: list[ClaimVerdict]) -> dict[int, dict[str, str]]:
    grid: dict[int, dict[str, str]] = {}
    for v in verdicts:
        grid.setdefault(v.q, {})[v.claim_id] = v.status.value
    return grid


def report(verdicts: list[ClaimVerdict], profiles: dict[int, dict] | None = None, fmt: str = "MARKDOWN") -> bytes:
    fmt = fmt.upper()
    profiles = profiles or {}
    claim_cols = [c for c in CLAIMS if any(v.claim_id == c for v in verdicts)]
    grid = _status_grid(verdicts)
    qs = sorted(set(profiles) | set(grid))
    if fmt == "JSON":
        doc = {
            "profiles": [profiles[q] for q in qs if q in profiles],
            "verdicts": [v.to_json(with_time=False) for v in verdicts],
        }
        return (dumps_fixed(doc) + "\n").encode()
    if fmt == "CSV":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS + claim_cols)
        for q in qs:
            prof = profiles.get(q, {"q": q})
            writer.writerow([_fmt(prof.get(c)) for c in CSV_COLUMNS] + [grid.get(q, {}).get(c, "") for c in claim_cols])
        return buf.getvalue().encode()
    if fmt == "MARKDOWN":
        return _markdown(verdicts, profiles, qs, claim_cols, grid).encode()
    raise ValueError(f"unknown report format {fmt!r}")


def _chi_cell(prof: dict) -> str:
    if prof.get("chi_exact") is not None:
        return str(prof["chi_exact"])
    return f"[{prof.get('chi_lo')}, {prof.get('chi_hi')}]"


def _markdown(verdicts, profiles, qs, claim_cols, grid) -> str:
    out = ["# Unit-quadrance graph claims report", ""]
    if profiles:
        out += [
            "## Invariants",
            "",
            "| q | p^n | Δ | triangles | ω | α | χ | χ′ | λ_min | ratio θ | Hoffman |",
            "|---|-----|---|-----------|---|---|---|----|-------|---------|---------|",
        ]
        for q in qs:
            prof = profiles.get(q)
            if prof is None:
                continue
            alpha = _fmt(prof["alpha"]) + ("" if prof.get("alpha_exact") else " (lower)")
            out.append(
                f"| {q} | {prof['p']}^{prof['n']} | {prof['delta']} | {prof['triangles']} | "
                f"{_fmt(prof['omega'])} | {alpha} | {_chi_cell(prof)} | {_fmt(prof['chi_edge'])} | "
                f"{_fmt(prof['lambda_min'])} | {_fmt(prof['ratio_theta'])} | {_fmt(prof['hoffman'])} |"
            )
        out.append("")
    if claim_cols:
        out += ["## Claim statuses", "", "| q | " + " | ".join(claim_cols) + " |",
                "|---|" + "---|" * len(claim_cols)]
        for q in qs:
            row = grid.get(q, {})
            out.append(f"| {q} | " + " | ".join(row.get(c, "") for c in claim_cols) + " |")
        out += ["", "## Notes", ""]
        for v in verdicts:
            if v.reason:
                out.append(f"- {v.claim_id} at q={v.q} ({v.status.value}): {v.reason}")
        out.append("")
        out += ["## Claims", ""]
        for cid in claim_cols:
            c = CLAIMS[cid]
            out.append(f"- {cid}: {c.title} (scope: {c.exact_scope})")
        out.append("")
    return "\n".join(out)
