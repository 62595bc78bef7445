"""Batch evidence reports: delimited tables plus rendered figures.

Each writer emits a CSV next to a PNG derived from the same rows, so the
figure never shows data the table does not contain. All writers create the
output directory if needed and return the paths they wrote.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .primelang import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_K_BUDGET,
    Language,
    compute_fb,
    nerode_lower_bound,
)
from .refuter import PumpingRefutation, pumping_refutation

_LANG_LABEL = {Language.PB: "prime numerals", Language.PB_STAR: "star closure"}


def _ensure_dir(out_dir: str | Path) -> Path:
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def write_fb_scan(
    b: int,
    n_max: int,
    out_dir: str | Path,
    *,
    k_budget: int = DEFAULT_K_BUDGET,
) -> tuple[Path, Path]:
    """Scan f_b(1..n_max); write fb_scan CSV and a matching figure."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    out = _ensure_dir(out_dir)
    results = [compute_fb(b, n, k_budget) for n in range(1, n_max + 1)]

    csv_path = out / f"fb_scan_b{b}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "k_star", "prime_found", "composites_below"])
        for r in results:
            writer.writerow(
                [r.exponent, r.k_star, r.prime_found, r.composite_prefix_checked]
            )

    png_path = out / f"fb_scan_b{b}.png"
    ns = [r.exponent for r in results]
    ks = [r.k_star for r in results]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, ks, "o-")
    ax.set_xlabel("exponent n")
    ax.set_ylabel("smallest k with k*b^n + 1 prime")
    ax.set_title(f"First prime multiplier, base {b}")
    ax.set_xticks(ns)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path


def write_nerode_growth(
    b: int,
    l_max: int,
    out_dir: str | Path,
    *,
    languages: tuple[Language, ...] = (Language.PB, Language.PB_STAR),
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> tuple[Path, Path]:
    """Bounded distinguishability growth; CSV plus step plot per language."""
    if l_max < 1:
        raise ValueError(f"l_max must be >= 1, got {l_max}")
    out = _ensure_dir(out_dir)
    lengths = list(range(1, l_max + 1))
    series = {
        lang: [
            nerode_lower_bound(b, lang, L, enumeration_budget=enumeration_budget)
            for L in lengths
        ]
        for lang in languages
    }

    csv_path = out / f"nerode_growth_b{b}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["length_bound"] + [lang.value for lang in languages])
        for i, L in enumerate(lengths):
            writer.writerow([L] + [series[lang][i] for lang in languages])

    png_path = out / f"nerode_growth_b{b}.png"
    fig, ax = plt.subplots(figsize=(7, 4))
    for lang in languages:
        ax.step(lengths, series[lang], where="post", marker="o",
                label=_LANG_LABEL[lang])
    ax.set_xlabel("length bound L")
    ax.set_ylabel("state lower bound")
    ax.set_title(f"Distinguishable-prefix growth, base {b}")
    ax.set_xticks(lengths)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path


def write_pump_rows(refutation: PumpingRefutation, out_dir: str | Path) -> Path:
    """One CSV row per xyz decomposition of the pumping witness."""
    out = _ensure_dir(out_dir)
    csv_path = out / f"pump_rows_b{refutation.base}_p{refutation.pumping_length}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "z", "xz", "xz_in_star", "xyyz", "xyyz_in_star"])
        for row in refutation.rows:
            writer.writerow(
                [
                    row.x,
                    row.y,
                    row.z,
                    row.pumped_down,
                    row.pumped_down_in_star,
                    row.pumped_up,
                    row.pumped_up_in_star,
                ]
            )
    return csv_path


def generate_report(
    b: int,
    out_dir: str | Path,
    *,
    n_max: int = 12,
    pumping_length: int = 2,
    l_max: int = 10,
    k_budget: int = DEFAULT_K_BUDGET,
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> dict[str, str]:
    """Run the full evidence sweep for one base; returns a path manifest.

    Writes the f_b scan, the distinguishability growth curves, and the
    pumping row table, then a manifest.json listing everything produced.
    """
    out = _ensure_dir(out_dir)
    fb_csv, fb_png = write_fb_scan(b, n_max, out, k_budget=k_budget)
    nerode_csv, nerode_png = write_nerode_growth(
        b, l_max, out, enumeration_budget=enumeration_budget
    )
    refutation = pumping_refutation(b, pumping_length, k_budget=k_budget)
    pump_csv = write_pump_rows(refutation, out)

    manifest = {
        "base": str(b),
        "fb_scan_csv": str(fb_csv),
        "fb_scan_png": str(fb_png),
        "nerode_growth_csv": str(nerode_csv),
        "nerode_growth_png": str(nerode_png),
        "pump_rows_csv": str(pump_csv),
        "pumping_witness": refutation.witness,
        "pumping_refutes": str(refutation.refutes).lower(),
    }
    manifest_path = out / f"manifest_b{b}.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    manifest["manifest"] = str(manifest_path)
    return manifest
