"""Evaluation report output: JSON, an aligned text table, and figures.

The JSON schema is column-stable: every row carries the same keys in the
same order, so reports are diffable. Figures are rendered with the Agg
backend straight to files next to the report.
"""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evaluation import EvalRow, GroupRow

METRIC_COLUMNS = ("P_n", "R_n", "F1_n", "P_nc", "R_nc", "F1_nc")


def build_report(
    rows: list[EvalRow],
    groups: list[GroupRow],
    baselines: dict[str, list[GroupRow]] | None = None,
) -> dict:
    report = {
        "rows": [r.to_dict() for r in rows],
        "groups": [g.to_dict() for g in groups],
    }
    if baselines is not None:
        report["baselines"] = {
            name: [g.to_dict() for g in group_rows] for name, group_rows in baselines.items()
        }
    return report


def write_report_json(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report, handle, ensure_ascii=False, indent=2)
        handle.write("\n")


def load_report_json(path) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _format_line(label: str, pos: str, values, widths) -> str:
    cells = [f"{label:<{widths[0]}}", f"{pos:<{widths[1]}}"]
    cells += [f"{v:>{widths[2]}.2f}" for v in values]
    return "  ".join(cells)


def format_table(report: dict) -> str:
    """Aligned plain-text table: one row per word, then group averages and
    any baseline rows."""
    rows = report.get("rows", [])
    groups = report.get("groups", [])
    baselines = report.get("baselines", {})
    labels = (
        [r["word"] for r in rows]
        + [g["group"] for g in groups]
        + [f"{name}:{g['group']}" for name, gs in baselines.items() for g in gs]
    )
    widths = (max([4] + [len(str(l)) for l in labels]), 5, 6)
    header = "  ".join(
        [f"{'word':<{widths[0]}}", f"{'pos':<{widths[1]}}"]
        + [f"{c:>{widths[2]}}" for c in METRIC_COLUMNS]
    )
    rule = "-" * len(header)
    lines = [header, rule]
    for r in rows:
        lines.append(_format_line(r["word"], r["pos"], [r[c] for c in METRIC_COLUMNS], widths))
    if groups:
        lines.append(rule)
        for g in groups:
            lines.append(_format_line(g["group"], "", [g[c] for c in METRIC_COLUMNS], widths))
    for name, gs in baselines.items():
        lines.append(rule)
        for g in gs:
            lines.append(
                _format_line(f"{name}:{g['group']}", "", [g[c] for c in METRIC_COLUMNS], widths)
            )
    return "\n".join(lines) + "\n"


def write_report_text(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_table(report))


def render_report_figures(report: dict, out_dir, stem: str = "report") -> list[Path]:
    """Render per-word and per-group F1 bar charts as PNG files. Returns the
    written paths; empty sections are skipped."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    rows = report.get("rows", [])
    if rows:
        words = [f"{r['word']}/{r['pos']}" for r in rows]
        f1_n = [r["F1_n"] for r in rows]
        f1_nc = [r["F1_nc"] for r in rows]
        height = max(2.5, 0.35 * len(rows) + 1.2)
        fig, ax = plt.subplots(figsize=(7.5, height))
        y = range(len(rows))
        ax.barh([i + 0.2 for i in y], f1_n, height=0.38, label="F1 (1/n)", color="#4878a8")
        ax.barh([i - 0.2 for i in y], f1_nc, height=0.38, label="F1 (1/nc)", color="#d0803c")
        ax.set_yticks(list(y))
        ax.set_yticklabels(words)
        ax.invert_yaxis()
        ax.set_xlim(0.0, 1.0)
        ax.set_xlabel("F1")
        ax.legend(loc="lower right")
        fig.tight_layout()
        path = out_dir / f"{stem}_f1_by_word.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    groups = list(report.get("groups", []))
    for name, gs in report.get("baselines", {}).items():
        groups += [{**g, "group": f"{name}:{g['group']}"} for g in gs]
    if groups:
        labels = [g["group"] for g in groups]
        fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * len(groups) + 1.5), 3.6))
        x = range(len(groups))
        ax.bar([i - 0.2 for i in x], [g["F1_n"] for g in groups], width=0.38, label="F1 (1/n)", color="#4878a8")
        ax.bar([i + 0.2 for i in x], [g["F1_nc"] for g in groups], width=0.38, label="F1 (1/nc)", color="#d0803c")
        ax.set_xticks(list(x))
        ax.set_xticklabels(labels, rotation=30, ha="right")
        ax.set_ylim(0.0, 1.0)
        ax.set_ylabel("F1")
        ax.legend(loc="upper right")
        fig.tight_layout()
        path = out_dir / f"{stem}_f1_by_group.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    return written
