"""Report emission for theorem-suite runs: JSON, delimited CSV, and rendered
figures (PNG) summarizing qualification and counterexample counts."""

from __future__ import annotations

import csv
import json
import pathlib
from typing import Iterable, Optional, Sequence

from .harness import TheoremReport


def write_json_report(
    reports: Sequence[TheoremReport], path, include_timing: bool = False
) -> None:
    payload = {
        "schema": 1,
        "reports": [r.to_jsonable(include_timing) for r in reports],
        "ok": all(r.ok for r in reports),
    }
    pathlib.Path(path).write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


def write_csv_report(reports: Sequence[TheoremReport], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["theorem", "corpus", "scanned", "qualified", "skipped", "counterexamples", "ok"]
        )
        for r in reports:
            w.writerow(
                [
                    r.theorem,
                    r.corpus,
                    r.scanned,
                    r.qualified,
                    len(r.skipped),
                    len(r.counterexamples),
                    r.ok,
                ]
            )


def render_figures(reports: Sequence[TheoremReport], directory) -> list[str]:
    """Render summary PNGs into `directory`; returns the file paths written."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    names = [r.theorem for r in reports]
    qualified = [r.qualified for r in reports]
    skipped = [len(r.skipped) for r in reports]

    fig, ax = plt.subplots(figsize=(max(6, len(names)), 4))
    ax.bar(names, qualified, label="qualified", color="#4477aa")
    ax.bar(names, skipped, bottom=qualified, label="skipped", color="#cccccc")
    ax.set_ylabel("graphs")
    ax.set_title("corpus coverage per theorem")
    ax.legend()
    plt.setp(ax.get_xticklabels(), rotation=45, ha="right")
    fig.tight_layout()
    p = directory / "coverage.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    written.append(str(p))

    fig, ax = plt.subplots(figsize=(max(6, len(names)), 3))
    counts = [len(r.counterexamples) for r in reports]
    colors = ["#aa3333" if c else "#44aa77" for c in counts]
    ax.bar(names, counts, color=colors)
    ax.set_ylabel("counterexamples")
    ax.set_title("counterexamples per theorem (zero expected)")
    plt.setp(ax.get_xticklabels(), rotation=45, ha="right")
    fig.tight_layout()
    p = directory / "counterexamples.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    written.append(str(p))
    return written


def emit_report(
    reports: Sequence[TheoremReport],
    json_path,
    figures_dir=None,
    include_timing: bool = False,
) -> list[str]:
    """Write the JSON report, a CSV next to it, and optional figures."""
    json_path = pathlib.Path(json_path)
    write_json_report(reports, json_path, include_timing)
    csv_path = json_path.with_suffix(".csv")
    write_csv_report(reports, csv_path)
    written = [str(json_path), str(csv_path)]
    if figures_dir is not None:
        written += render_figures(reports, figures_dir)
    return written
