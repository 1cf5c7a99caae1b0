"""Matplotlib rendering of verification runs and compatibility lattices.

Figures are written next to the delimited report output when requested; they
are a reporting convenience and play no role in any verdict.
"""

from __future__ import annotations

import os

VERDICT_COLORS = {"pass": "#2e7d32", "fail": "#c62828", "inconclusive": "#ef6c00"}


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_suite_figure(reports, path):
    """One horizontal bar per report (elapsed ms, colored by verdict) plus a
    verdict tally."""
    plt = _plt()
    labels = []
    for r in reports:
        core = ",".join(str(v) for k, v in r.params.items() if k != "entry")
        labels.append(f"{r.check_id}({core})")
    times = [max(r.elapsed_ms, 1) for r in reports]
    colors = [VERDICT_COLORS.get(r.verdict, "gray") for r in reports]
    height = max(3.0, 0.22 * len(reports) + 1.2)
    fig, (ax, ax2) = plt.subplots(
        1, 2, figsize=(11, height), gridspec_kw={"width_ratios": [4, 1]}
    )
    ypos = range(len(reports))
    ax.barh(list(ypos), times, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("elapsed (ms)")
    ax.set_xscale("log")
    ax.set_title("verification suite")
    tally = {}
    for r in reports:
        tally[r.verdict] = tally.get(r.verdict, 0) + 1
    keys = sorted(tally)
    ax2.bar(keys, [tally[k] for k in keys], color=[VERDICT_COLORS.get(k, "gray") for k in keys])
    ax2.set_title("verdicts")
    fig.tight_layout()
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_lattice_figure(lat, path):
    """Layered drawing of the containment order: layers by longest chain from
    the bottom, covers as arrows."""
    plt = _plt()
    nodes = sorted(lat.nodes, key=lambda nd: (len(nd.ideal.groebner()), nd.label()))
    ids = [nd.ident for nd in nodes]
    succ = {i: [] for i in ids}
    pred = {i: [] for i in ids}
    for a, b in lat.edges:
        succ[a].append(b)
        pred[b].append(a)
    level = {}

    def depth(i):
        if i not in level:
            level[i] = 1 + max((depth(a) for a in pred[i]), default=-1)
        return level[i]

    for i in ids:
        depth(i)
    layers = {}
    for nd in nodes:
        layers.setdefault(level[nd.ident], []).append(nd)
    pos = {}
    for ly, members in sorted(layers.items()):
        members.sort(key=lambda nd: nd.label())
        for k, nd in enumerate(members):
            pos[nd.ident] = (k - (len(members) - 1) / 2.0, ly)
    fig, ax = plt.subplots(figsize=(8, 5))
    for a, b in lat.edges:
        (x1, y1), (x2, y2) = pos[a], pos[b]
        ax.annotate(
            "", xy=(x2, y2), xytext=(x1, y1),
            arrowprops={"arrowstyle": "-|>", "color": "#607d8b", "lw": 1.0},
        )
    for nd in nodes:
        x, y = pos[nd.ident]
        ax.plot([x], [y], "o", color="#1565c0", markersize=9)
        ax.annotate(
            nd.label(), (x, y), textcoords="offset points", xytext=(0, 9),
            ha="center", fontsize=7,
        )
    ax.set_axis_off()
    title = "compatible ideals"
    if lat.capped:
        title += " (node cap hit)"
    ax.set_title(title)
    fig.tight_layout()
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
