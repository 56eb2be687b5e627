"""Figure rendering for the CLI report path.

Every report-producing subcommand can render its result as a PNG next to
the machine-readable output.  Rendering is presentation only: the data
plotted are the exact integers from the computation.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

plt.rcParams.update({
    "figure.figsize": (5.2, 3.4),
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
})


def _finish(fig, path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def render_mazur(entries: list[tuple[int, int]], path: str) -> str:
    """Realized invariant against the family parameter."""
    ns = [n for n, _ in entries]
    lams = [lam for _, lam in entries]
    fig, ax = plt.subplots()
    ax.axhline(0, color="0.6", lw=0.8)
    ax.plot(ns, lams, "o-", ms=4)
    ax.set_xlabel("family parameter n")
    ax.set_ylabel("Casson invariant of the surgered sphere")
    ax.set_title("Mazur-type realization: every even value is hit")
    return _finish(fig, path)


def render_trace(trace: list[dict], total: int, path: str) -> str:
    """Cumulative variation along the reduction steps."""
    cumulative = [0]
    labels = ["start"]
    for step in trace:
        cumulative.append(cumulative[-1] + step["increment"])
        tgt = ",".join(str(t) for t in step["target"])
        labels.append(f"{step['rule'][:2]}({tgt})")
    fig, ax = plt.subplots()
    ax.step(range(len(cumulative)), cumulative, where="post")
    ax.plot(range(len(cumulative)), cumulative, "o", ms=3)
    ax.axhline(total, color="tab:red", lw=0.8, ls="--",
               label=f"closed form = {total}")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("accumulated variation")
    ax.set_title("Reduction-step trace")
    ax.legend()
    return _finish(fig, path)


def render_verify(properties: list[dict], path: str) -> str:
    """Case counts per verified property, colored by outcome."""
    names = [p["name"] for p in properties]
    cases = [p["cases"] for p in properties]
    colors = ["tab:green" if p["passed"] else "tab:red" for p in properties]
    fig, ax = plt.subplots(figsize=(5.6, 0.5 + 0.4 * len(names)))
    ax.barh(range(len(names)), cases, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("cases checked")
    ax.set_title("Verification sweep")
    return _finish(fig, path)


def render_linking_matrix(matrix: list[list[int]], path: str) -> str:
    """Linking matrix (framings on the diagonal) as an annotated grid."""
    n = len(matrix)
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * n, 1.2 + 0.6 * n))
    vmax = max(1, max(abs(v) for row in matrix for v in row))
    ax.imshow(matrix, cmap="RdBu_r", vmin=-vmax, vmax=vmax)
    for i in range(n):
        for j in range(n):
            ax.text(j, i, str(matrix[i][j]), ha="center", va="center",
                    fontsize=10)
    ax.set_xticks(range(n))
    ax.set_yticks(range(n))
    ax.set_xticklabels([str(k) for k in range(1, n + 1)])
    ax.set_yticklabels([str(k) for k in range(1, n + 1)])
    ax.grid(False)
    ax.set_title("linking matrix (diagonal = framings)")
    return _finish(fig, path)
