"""Matplotlib figure for conjecture reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def plot_report(report, path, title=None):
    """Bar chart of double squares, primes and couple-free primes per perimeter."""
    rows = report.rows
    perims = [r[0] for r in rows]
    width = 0.28
    fig, ax = plt.subplots(figsize=(7, 4))
    for shift, col, label in ((-width, 1, "double squares"), (0, 2, "prime"),
                              (width, 3, "prime, couple-free")):
        ax.bar([p + shift for p in perims], [r[col] for r in rows], width=width, label=label)
    ax.set_xlabel("perimeter")
    ax.set_ylabel("count")
    ax.set_xticks(perims)
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_title(title or f"double squares up to perimeter {report.max_perimeter}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None} if str(path).endswith((".svg", ".pdf")) else None)
    plt.close(fig)
    return path
