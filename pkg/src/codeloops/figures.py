"""Figure rendering for CLI reports.

Each helper writes one PNG next to the textual output.  Matplotlib is
imported lazily with the Agg backend so the library itself never needs a
display; files carry fixed metadata so reruns are reproducible.
"""

from __future__ import annotations

import os

from .codes import weight_distribution

_METADATA = {"Software": "codeloops"}


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def save_weight_distribution(rows, length: int, path: str) -> str:
    """Bar chart of the codeword weight distribution of a row span."""
    plt = _pyplot()
    dist = weight_distribution(rows)
    weights = sorted(dist)
    counts = [dist[w] for w in weights]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(weights, counts, width=0.8, color="#33557a")
    ax.set_xlabel("codeword weight")
    ax.set_ylabel("count")
    ax.set_title(f"weight distribution (length {length})")
    ax.set_xticks(weights)
    fig.tight_layout()
    fig.savefig(path, metadata=_METADATA)
    plt.close(fig)
    return path


def save_cayley_table(loop, path: str) -> str:
    """The loop multiplication table as an index heat map."""
    plt = _pyplot()
    table = loop.cayley()
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.imshow(table, cmap="viridis", interpolation="nearest")
    ax.set_title(f"Cayley table, order {loop.order}")
    ax.set_xlabel("right factor index")
    ax.set_ylabel("left factor index")
    fig.tight_layout()
    fig.savefig(path, metadata=_METADATA)
    plt.close(fig)
    return path


def save_eta_table(eta, path: str) -> str:
    """The factor set as a binary image over codeword index pairs."""
    plt = _pyplot()
    matrix = eta.matrix()
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.imshow(matrix, cmap="Greys", interpolation="nearest")
    ax.set_title("factor set")
    ax.set_xlabel("second argument index")
    ax.set_ylabel("first argument index")
    fig.tight_layout()
    fig.savefig(path, metadata=_METADATA)
    plt.close(fig)
    return path


def ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path
