"""Matplotlib rendering of element graphs.

Group elements are PL maps, so their graphs are polylines through the
exact breakpoints; figures draw those vertices verbatim (at float display
precision) with no resampling.  SVG output is byte-deterministic: the
hash salt is pinned and date metadata is stripped, so repeated renders of
the same element are identical files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .element import PLElement

__all__ = ["render_element", "render_elements"]

_HASH_SALT = "thompson-fn"


def render_element(element: PLElement, path: str, *, title: str | None = None) -> None:
    """Render one element's graph to `path` (format from the extension)."""
    render_elements([("", element)], path, title=title)


def render_elements(
    items: list[tuple[str, PLElement]], path: str, *, title: str | None = None
) -> None:
    """Render several labelled graphs into one square [0,1] x [0,1] figure."""
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, ax = plt.subplots(figsize=(5, 5))
        ax.plot([0, 1], [0, 1], linestyle=":", color="0.6", linewidth=1)
        for label, element in items:
            xs = [float(x) for x, _ in element.breaks]
            ys = [float(y) for _, y in element.breaks]
            ax.plot(xs, ys, marker="o", markersize=3, label=label or None)
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.grid(True, linewidth=0.3, alpha=0.5)
        if any(label for label, _ in items):
            ax.legend(loc="upper left", fontsize=8)
        if title:
            ax.set_title(title, fontsize=10)
        fig.savefig(path, metadata=_clean_metadata(path))
        plt.close(fig)


def _clean_metadata(path: str) -> dict | None:
    # Strip the timestamps the vector backends would otherwise embed.
    if path.endswith(".svg"):
        return {"Date": None}
    if path.endswith(".pdf"):
        return {"CreationDate": None}
    return None
