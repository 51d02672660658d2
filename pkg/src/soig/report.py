"""Report rendering: JSON/CSV/text serialization and optional figures.

JSON output is stable-ordered (insertion order, no timestamps) so identical
runs produce identical bytes.  Figures are rendered with the Agg backend
and written next to the delimited output files.
"""

from __future__ import annotations

import csv
import io
import json

from .proofcheck import SweepRow, VerificationReport


def report_to_dict(report: VerificationReport) -> dict:
    claims = []
    for r in report.results:
        entry: dict = {
            "id": r.claim_id,
            "kind": r.kind,
            "verdict": r.verdict,
        }
        if r.min_sum is not None:
            entry["min_sum_deg"] = round(r.min_sum, 10)
            entry["margin_deg"] = round(r.margin, 10)
        if r.method:
            entry["method"] = r.method
        if r.composition is not None:
            entry["composition"] = list(r.composition)
        if r.witness:
            entry["witness"] = list(r.witness)
        if r.expected_margin is not None:
            entry["expected_margin_deg"] = r.expected_margin
            entry["margin_discrepancy"] = r.margin_discrepancy
        if r.detail:
            entry["detail"] = r.detail
        if r.notes:
            entry["notes"] = list(r.notes)
        claims.append(entry)
    discrepancies = [
        {
            "id": r.claim_id,
            "expected_margin_deg": r.expected_margin,
            "recomputed_margin_deg": round(r.margin, 10) if r.margin is not None else None,
            "notes": list(r.notes),
        }
        for r in report.discrepancies
    ]
    return {
        "params": {"p": report.p, "q": report.q},
        "paranoid": report.paranoid,
        "epsilon_deg": report.epsilon_deg,
        "overall": report.overall,
        "claims": claims,
        "coverage": {
            "passed": report.coverage.passed,
            "uncovered": list(report.coverage.uncovered) if report.coverage.uncovered else None,
            "weight_minimum": report.coverage.weight_minimum,
            "grid": {"m_max": report.coverage.m_max, "h_max": report.coverage.h_max},
            "pairs": [list(p) for p in report.coverage.pairs],
            "checked": report.coverage.checked,
        },
        "discrepancies": discrepancies,
    }


def report_to_text(report: VerificationReport) -> str:
    lines = []
    lines.append(f"verification at p = {report.p:g} (q = {report.q:.6f})"
                 + ("  [paranoid]" if report.paranoid else ""))
    lines.append(f"certification slack: {report.epsilon_deg:g} deg")
    lines.append("")
    header = f"{'claim':18s} {'kind':11s} {'verdict':9s} {'min sum':>10s} {'margin':>9s}  detail"
    lines.append(header)
    lines.append("-" * len(header))
    for r in report.results:
        min_sum = f"{r.min_sum:.4f}" if r.min_sum is not None else "-"
        margin = f"{r.margin:+.4f}" if r.margin is not None else "-"
        detail = r.detail
        if r.composition is not None:
            comp = f"[{r.composition[0]},{r.composition[1]},{r.composition[2]}]"
            detail = f"min at {comp}" + (f"; {detail}" if detail else "")
        lines.append(
            f"{r.claim_id:18s} {r.kind:11s} {r.verdict:9s} {min_sum:>10s} {margin:>9s}  {detail}"
        )
    lines.append("")
    cov = report.coverage
    if cov.passed:
        lines.append(
            f"coverage: PASS - all {cov.checked} pairs with m + h/2 >= {cov.weight_minimum:g} "
            f"dominate a proven-impossible pair"
        )
    else:
        lines.append(f"coverage: FAIL - uncovered pair (m, h) = {cov.uncovered}")
    lines.append(f"impossible pairs: {', '.join(str(p) for p in cov.pairs)}")
    lines.append("")
    if report.discrepancies:
        lines.append("printed-value discrepancies (verdicts use recomputed values):")
        for r in report.discrepancies:
            lines.append(
                f"  {r.claim_id}: printed margin {r.expected_margin:+.4f}, "
                f"recomputed {r.margin:+.4f}"
            )
            for note in r.notes:
                lines.append(f"    note: {note}")
        lines.append("")
    lines.append(f"overall: {report.overall.upper()}")
    return "\n".join(lines) + "\n"


def sweep_to_rows(rows: list[SweepRow]) -> list[dict]:
    return [
        {
            "p": row.p,
            "overall": row.overall,
            "failing_claims": ";".join(row.failing),
            "worst_margin_deg": round(row.worst_margin, 10) if row.worst_margin is not None else None,
        }
        for row in rows
    ]


def sweep_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["p", "overall", "failing_claims", "worst_margin_deg"],
        lineterminator="\n",
    )
    writer.writeheader()
    for row in sweep_to_rows(rows):
        writer.writerow(row)
    return buf.getvalue()


def sweep_to_text(rows: list[SweepRow]) -> str:
    lines = [f"{'p':>8s} {'overall':10s} {'worst margin':>13s}  failing claims"]
    for row in rows:
        worst = f"{row.worst_margin:+.4f}" if row.worst_margin is not None else "-"
        lines.append(f"{row.p:8.4f} {row.overall:10s} {worst:>13s}  {', '.join(row.failing)}")
    return "\n".join(lines) + "\n"


def to_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# ------------------------------------------------------------------ figures

def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def render_sweep_figure(rows: list[SweepRow], path) -> None:
    plt = _pyplot()
    ps = [r.p for r in rows]
    margins = [r.worst_margin for r in rows]
    ok = [r.overall == "verified" for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.axhline(0.0, color="grey", lw=1, ls="--")
    ax.plot(ps, margins, color="steelblue", lw=1, marker="o", ms=3, label="worst margin")
    for p, m, good in zip(ps, margins, ok):
        if good:
            ax.plot([p], [m], marker="o", ms=7, color="forestgreen")
    ax.set_xlabel("threshold p")
    ax.set_ylabel("worst margin over 360 (deg)")
    ax.set_title("verification margin across thresholds")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_degree_histogram(degrees: list[int], path, title: str = "degree histogram") -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    lo, hi = min(degrees), max(degrees)
    bins = [b - 0.5 for b in range(lo, hi + 2)]
    ax.hist(degrees, bins=bins, color="steelblue", edgecolor="white")
    ax.set_xlabel("degree")
    ax.set_ylabel("vertices")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_outweight_figure(values: list[float], path) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=30, color="steelblue", edgecolor="white")
    ax.axvline(14.5, color="firebrick", lw=1.5, ls="--", label="bound 14.5")
    ax.set_xlabel("max out-weight per trial")
    ax.set_ylabel("trials")
    ax.set_title("maximum out-weight across random trials")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
