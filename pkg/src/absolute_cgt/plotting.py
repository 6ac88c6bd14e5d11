"""Matplotlib renderings of Hasse diagrams and LPG game trees."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .lpg import tree  # noqa: E402
from .normal import format_value  # noqa: E402
from .notation import format_game  # noqa: E402


def hasse_layout(poset):
    """Node coordinates: height in the order on y, spread evenly on x."""
    heights = poset.heights()
    layers = {}
    for g in poset.nodes:
        layers.setdefault(heights[g], []).append(g)
    width = max(len(v) for v in layers.values())
    pos = {}
    for y, row in layers.items():
        offset = (width - len(row)) / 2.0
        for i, g in enumerate(row):
            pos[g] = (offset + i, float(y))
    return pos


def plot_hasse(poset, path, title=None):
    pos = hasse_layout(poset)
    fig, ax = plt.subplots(figsize=(9, 6))
    for e in poset.edges:
        (x0, y0), (x1, y1) = pos[e.lower], pos[e.upper]
        ax.plot([x0, x1], [y0, y1], color="0.3", lw=1, zorder=1)
        ax.text((x0 + x1) / 2, (y0 + y1) / 2, format_value(e.label), fontsize=8,
                ha="center", va="center", color="tab:blue",
                bbox=dict(fc="white", ec="none", pad=0.5), zorder=2)
    for g, (x, y) in pos.items():
        ax.scatter([x], [y], s=40, color="black", zorder=3)
        ax.annotate(format_game(g), (x, y), xytext=(6, 6), textcoords="offset points",
                    fontsize=12, zorder=4)
    ax.set_title(title or "Hasse diagram (%s)" % poset.universe.id)
    ax.axis("off")
    ax.margins(0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def tree_layout(t):
    """(position-label, x, y) per node and segments between them; leaves are
    spaced one unit apart and parents centred over their children."""
    nodes, segments = [], []
    next_x = [0.0]

    def place(node, depth):
        p, lefts, rights = node
        kids = [place(c, depth + 1) for c in lefts + rights]
        if kids:
            x = sum(k[0] for k in kids) / len(kids)
        else:
            x = next_x[0]
            next_x[0] += 1.0
        y = -float(depth)
        for i, k in enumerate(kids):
            segments.append(((x, y), k, "L" if i < len(lefts) else "R"))
        nodes.append((str(p), x, y))
        return (x, y)

    place(t, 0)
    return nodes, segments


def plot_lpg_tree(p, path, title=None):
    nodes, segments = tree_layout(tree(p))
    fig, ax = plt.subplots(figsize=(max(4, len(nodes) * 0.6), 4))
    for (x0, y0), (x1, y1), side in segments:
        ax.plot([x0, x1], [y0, y1], color="tab:blue" if side == "L" else "tab:red", lw=1)
    for label, x, y in nodes:
        ax.text(x, y, label, ha="center", va="center", fontsize=10,
                bbox=dict(fc="white", ec="0.6", pad=2))
    ax.set_title(title or "Left Provisional Game %s" % p)
    ax.axis("off")
    ax.margins(0.2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
