"""Delimited tables and figures for polynomials, posets and suite runs.

Every writer emits a TSV next to a PNG of the same stem.  Figures use the
non-interactive Agg backend.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .cyclage import GradedPoset  # noqa: E402
from .lrwords import RectSeq  # noqa: E402
from .poly import kostka_polys  # noqa: E402


def write_tsv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        out = csv.writer(fh, delimiter="\t", lineterminator="\n")
        out.writerow(header)
        out.writerows(rows)
    return path


def _shape_str(lam) -> str:
    return ",".join(str(x) for x in lam)


def kostka_report(R: RectSeq, outdir: Path) -> list[Path]:
    """``kostka.tsv`` (one row per shape) and ``kostka.png`` (coefficients)."""
    outdir = Path(outdir)
    polys = kostka_polys(R)
    shapes = sorted(polys, reverse=True)
    top = max((p.degree for p in polys.values()), default=0)
    rows = [[_shape_str(lam), str(polys[lam]), polys[lam](1)]
            + [polys[lam].coeff(d) for d in range(top + 1)] for lam in shapes]
    tsv = write_tsv(outdir / "kostka.tsv",
                    ["shape", "poly", "at_1"] + [f"q{d}" for d in range(top + 1)], rows)

    fig, ax = plt.subplots(figsize=(6, 0.45 * len(shapes) + 1.5))
    grid = [[polys[lam].coeff(d) for d in range(top + 1)] for lam in shapes]
    im = ax.imshow(grid, cmap="Blues", aspect="auto")
    peak = max((c for r in grid for c in r), default=1)
    for i, r in enumerate(grid):
        for d, c in enumerate(r):
            if c:
                ax.text(d, i, str(c), ha="center", va="center", fontsize=8,
                        color="white" if 2 * c > peak else "black")
    ax.set_yticks(range(len(shapes)), [_shape_str(lam) for lam in shapes], fontsize=8)
    ax.set_xticks(range(top + 1))
    ax.set_xlabel("degree in q")
    ax.set_ylabel("shape")
    ax.set_title(f"K(q) for {R.canonical()}")
    fig.colorbar(im, ax=ax, shrink=0.6)
    fig.tight_layout()
    png = outdir / "kostka.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return [tsv, png]


def _layered_positions(poset: GradedPoset) -> list[tuple[float, float]]:
    by_grade: dict[int, list[int]] = {}
    for i, g in enumerate(poset.grade):
        by_grade.setdefault(g, []).append(i)
    pos = [(0.0, 0.0)] * len(poset.nodes)
    for g, ids in by_grade.items():
        ids.sort(key=lambda i: (poset.nodes[i].shape, poset.nodes[i].rows), reverse=True)
        for k, i in enumerate(ids):
            pos[i] = (k - (len(ids) - 1) / 2, float(g))
    return pos


def poset_report(poset: GradedPoset, outdir: Path, stem: str = "poset") -> list[Path]:
    """Cover list as TSV and a Hasse diagram layered by grade."""
    outdir = Path(outdir)
    rows = [[a, b, kind, poset.grade[a], poset.grade[b],
             poset.nodes[a].to_text().replace("\n", "/"),
             poset.nodes[b].to_text().replace("\n", "/")] for a, b, kind in poset.covers]
    tsv = write_tsv(outdir / f"{stem}.tsv",
                    ["lower", "upper", "kind", "lower_grade", "upper_grade",
                     "lower_tableau", "upper_tableau"], rows)

    pos = _layered_positions(poset)
    width = max((sum(1 for g in poset.grade if g == h) for h in set(poset.grade)), default=1)
    levels = len(set(poset.grade)) or 1
    fig, ax = plt.subplots(figsize=(max(4, 1.3 * width), max(3, 1.2 * levels)))
    for a, b, _ in poset.covers:
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    for i, t in enumerate(poset.nodes):
        x, y = pos[i]
        ax.text(x, y, t.to_text(), ha="center", va="center", multialignment="left", fontsize=6,
                family="monospace",
                bbox=dict(boxstyle="round,pad=0.2", fc="white", ec="0.3", lw=0.5), zorder=2)
    xs = [p[0] for p in pos] or [0]
    ax.set_xlim(min(xs) - 0.8, max(xs) + 0.8)
    ys = sorted(set(poset.grade)) or [0]
    ax.set_ylim(ys[0] - 0.7, ys[-1] + 0.7)
    ax.set_yticks(ys)
    ax.set_xticks([])
    ax.set_ylabel(poset.grade_name)
    ax.set_title(f"{poset.meta.get('order', '')} poset on LRT({poset.meta.get('rects', '')})")
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    png = outdir / f"{stem}.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return [tsv, png]


def suites_report(results, outdir: Path) -> list[Path]:
    """``summary.tsv`` and ``suites.png`` (items checked and time per suite)."""
    outdir = Path(outdir)
    rows = [[r.name, "PASS" if r.ok else "FAIL", r.checked, f"{r.seconds:.3f}"] for r in results]
    tsv = write_tsv(outdir / "summary.tsv", ["suite", "status", "checked", "seconds"], rows)

    names = [r.name for r in results]
    colors = ["tab:green" if r.ok else "tab:red" for r in results]
    fig, (a1, a2) = plt.subplots(1, 2, figsize=(9, 0.4 * len(results) + 1.5), sharey=True)
    a1.barh(names, [max(r.checked, 1) for r in results], color=colors)
    a1.set_xscale("log")
    a1.set_xlabel("items checked")
    a2.barh(names, [r.seconds for r in results], color=colors)
    a2.set_xlabel("seconds")
    a1.invert_yaxis()
    fig.tight_layout()
    png = outdir / "suites.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return [tsv, png]

