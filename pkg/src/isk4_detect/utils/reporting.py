"""Fuzz and benchmark reports with console, JSON and HTML exports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional

import pandas as pd
from jinja2 import Template
from rich.console import Console
from rich.table import Table
from rich.text import Text

MAX_LISTED_FAILURES = 20


@dataclass(frozen=True)
class TrialOutcome:
    """What one differential trial observed. Every field is a plain value so it pickles."""

    index: int
    seed: int
    n: int
    p: float
    found: bool = False
    oracle_found: bool = False
    verdict_ok: bool = True
    certificate_ok: bool = True
    claws_checked: int = 0
    radar_mismatches: int = 0
    exclusions_checked: int = 0
    error: Optional[str] = None
    notes: tuple[str, ...] = ()

    @property
    def failed(self) -> bool:
        return (
            not self.verdict_ok
            or not self.certificate_ok
            or self.radar_mismatches > 0
            or self.error is not None
        )


@dataclass(frozen=True)
class FuzzReport:
    """Order-independent summary of a differential run."""

    trials: int
    positives: int = 0
    verdict_mismatches: int = 0
    certificate_failures: int = 0
    radar_mismatches: int = 0
    errors: int = 0
    claws_checked: int = 0
    exclusions_checked: int = 0
    first_failing_seed: Optional[int] = None
    failures: tuple[str, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def from_trials(cls, outcomes: Iterable[TrialOutcome], **metadata: Any) -> "FuzzReport":
        ordered = sorted(outcomes, key=lambda o: o.index)
        failed = [o for o in ordered if o.failed]
        messages = []
        for o in sorted(failed, key=lambda o: o.seed)[:MAX_LISTED_FAILURES]:
            detail = o.error or "; ".join(o.notes) or "mismatch"
            messages.append(f"seed={o.seed} n={o.n} p={o.p}: {detail}")
        return cls(
            trials=len(ordered),
            positives=sum(o.found for o in ordered),
            verdict_mismatches=sum(not o.verdict_ok for o in ordered),
            certificate_failures=sum(not o.certificate_ok for o in ordered),
            radar_mismatches=sum(o.radar_mismatches for o in ordered),
            errors=sum(o.error is not None for o in ordered),
            claws_checked=sum(o.claws_checked for o in ordered),
            exclusions_checked=sum(o.exclusions_checked for o in ordered),
            first_failing_seed=min((o.seed for o in failed), default=None),
            failures=tuple(messages),
            metadata=metadata,
        )

    @property
    def mismatches(self) -> int:
        checks = self.verdict_mismatches + self.certificate_failures
        return checks + self.radar_mismatches + self.errors

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def summary_lines(self) -> list[str]:
        seed = "-" if self.first_failing_seed is None else str(self.first_failing_seed)
        return [
            f"trials: {self.trials}",
            f"mismatches: {self.mismatches}",
            f"first failing seed: {seed}",
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "summary": {
                "trials": self.trials,
                "positives": self.positives,
                "mismatches": self.mismatches,
                "verdict_mismatches": self.verdict_mismatches,
                "certificate_failures": self.certificate_failures,
                "radar_mismatches": self.radar_mismatches,
                "errors": self.errors,
                "claws_checked": self.claws_checked,
                "exclusions_checked": self.exclusions_checked,
                "first_failing_seed": self.first_failing_seed,
            },
            "failures": list(self.failures),
            "metadata": dict(self.metadata),
        }


class FuzzReporter:
    """Render a :class:`FuzzReport` for people (console, HTML) and for tools (JSON)."""

    def __init__(self, report: FuzzReport) -> None:
        self.report = report

    def to_console(self, console: Console | None = None) -> None:
        console = console or Console()
        report = self.report

        summary = Table(
            title="Differential Fuzz Summary", show_header=True, header_style="bold magenta"
        )
        summary.add_column("Metric", style="cyan", width=24)
        summary.add_column("Value", style="white", width=30)

        status = (
            Text("AGREE", style="bold green") if report.ok else Text("DISAGREE", style="bold red")
        )
        summary.add_row("Status", status)
        for key, value in report.to_dict()["summary"].items():
            summary.add_row(key.replace("_", " ").title(), "-" if value is None else str(value))
        for key, value in report.metadata.items():
            summary.add_row(key.replace("_", " ").title(), str(value))
        console.print(summary)

        if report.failures:
            failures = Table(title="Failing Trials", show_header=True)
            failures.add_column("Trial", style="red", overflow="fold")
            for line in report.failures:
                failures.add_row(line)
            console.print(failures)

    def to_json(self, filepath: Path | str, indent: int = 2) -> None:
        data = {**self.report.to_dict(), "timestamp": datetime.now().isoformat()}
        Path(filepath).write_text(json.dumps(data, indent=indent), encoding="utf-8")

    def to_html(self, filepath: Path | str, title: str = "ISK4 Differential Fuzz Report") -> None:
        data = self.report.to_dict()
        html_content = Template(HTML_TEMPLATE).render(
            title=title,
            ok=self.report.ok,
            summary=data["summary"],
            failures=data["failures"],
            metadata=data["metadata"],
            timestamp=datetime.now().isoformat(),
        )
        Path(filepath).write_text(html_content, encoding="utf-8")


def bench_table(frame: pd.DataFrame, slope: Optional[float] = None) -> Table:
    """A rich table of a benchmark frame with columns ``family, n, median_ms``."""
    table = Table(title="Detection Timings", show_header=True, header_style="bold magenta")
    table.add_column("Family", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("Median (ms)", justify="right")
    for row in frame.itertuples(index=False):
        table.add_row(str(row.family), str(row.n), f"{row.median_ms:.3f}")
    if slope is not None:
        table.caption = f"log-log slope {slope:.2f}"
    return table


HTML_TEMPLATE = """
<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{{ title }}</title>
    <style>
        body {
            font-family: -apple-system, BlinkMacSystemFont, 'Segoe UI', Roboto, sans-serif;
            background: #f3f4f6;
            padding: 20px;
        }
        .container {
            max-width: 1100px;
            margin: 0 auto;
            background: white;
            border-radius: 12px;
            box-shadow: 0 10px 30px rgba(0,0,0,0.15);
            overflow: hidden;
        }
        .header {
            background: {% if ok %}#10b981{% else %}#ef4444{% endif %};
            color: white;
            padding: 32px;
            text-align: center;
        }
        .section {
            padding: 32px;
            border-top: 1px solid #e5e7eb;
        }
        table {
            width: 100%;
            border-collapse: collapse;
        }
        th, td {
            padding: 12px;
            text-align: left;
            border-bottom: 1px solid #e5e7eb;
        }
        th {
            background: #f9fafb;
            text-transform: uppercase;
            font-size: 0.85em;
        }
        .failure {
            padding: 12px;
            background: #fee2e2;
            border-left: 4px solid #ef4444;
            margin-bottom: 8px;
            font-family: monospace;
        }
        .footer {
            padding: 16px 32px;
            color: #6b7280;
            font-size: 0.9em;
            text-align: center;
        }
    </style>
</head>
<body>
    <div class="container">
        <div class="header">
            <h1>{{ title }}</h1>
            <p>{% if ok %}detector and oracle agree{% else %}{{ summary.mismatches }} mismatches
            {% endif %}</p>
        </div>

        <div class="section">
            <h2>Summary</h2>
            <table>
                <tbody>
                    {% for key, value in summary.items() %}
                    <tr>
                        <th>{{ key | replace("_", " ") }}</th>
                        <td>{{ "-" if value is none else value }}</td>
                    </tr>
                    {% endfor %}
                    {% for key, value in metadata.items() %}
                    <tr>
                        <th>{{ key | replace("_", " ") }}</th>
                        <td>{{ value }}</td>
                    </tr>
                    {% endfor %}
                </tbody>
            </table>
        </div>

        {% if failures %}
        <div class="section">
            <h2>Failing Trials</h2>
            {% for failure in failures %}
            <div class="failure">{{ failure }}</div>
            {% endfor %}
        </div>
        {% endif %}

        <div class="footer">
            <p>Generated by isk4-detect on {{ timestamp }}</p>
        </div>
    </div>
</body>
</html>
"""
