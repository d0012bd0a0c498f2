"""Benchmark figures rendered to files, for the bench report path."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_bench_figures(records, out_dir: str) -> list[str]:
    """Render run-time and size figures from bench records.

    records is a list of dicts with keys n, algo, wall_ms, max_rows,
    max_cols, basis_size, reduced_basis_size, mutants.  Returns the paths
    of the written PNG files.
    """
    algos = sorted({r["algo"] for r in records})
    by_algo = {a: sorted((r["n"], r) for r in records if r["algo"] == a)
               for a in algos}
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    for a in algos:
        ns = [n for n, _ in by_algo[a]]
        ys = [r["wall_ms"] for _, r in by_algo[a]]
        ax.plot(ns, ys, marker="o", label=a)
    ax.set_xlabel("variables")
    ax.set_ylabel("wall time (ms)")
    ax.set_title("basis computation time")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "bench_time.png")
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for a in algos:
        ns = [n for n, _ in by_algo[a]]
        rows = [r["max_rows"] for _, r in by_algo[a]]
        sizes = [r["reduced_basis_size"] for _, r in by_algo[a]]
        axes[0].plot(ns, rows, marker="o", label=a)
        axes[1].plot(ns, sizes, marker="o", label=a)
    axes[0].set_xlabel("variables")
    axes[0].set_ylabel("max matrix rows")
    axes[0].set_title("largest matrix")
    axes[1].set_xlabel("variables")
    axes[1].set_ylabel("reduced basis size")
    axes[1].set_title("basis size")
    for ax in axes:
        ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "bench_size.png")
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)
    return paths
