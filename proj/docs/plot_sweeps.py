#!/usr/bin/env python3
"""Plot sweep CSVs produced by the gfnoma CLI.

Usage:
    python3 docs/plot_sweeps.py out/desk/sweep_snr.csv out/desk/sweep_activity.csv

Writes a PNG next to each input CSV: AER vs SNR for the SNR sweep, BER vs
activity rate for the activity sweep, one line per detector with the Wilson
interval as a shaded band.
"""
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path) as f:
        rows = [r for r in csv.DictReader(line for line in f if not line.startswith("#"))]
    return rows


def plot(path):
    rows = load(path)
    if not rows:
        print(f"{path}: empty")
        return
    activity_sweep = len({r["gamma_db"] for r in rows}) == 1
    x_key = "pa" if activity_sweep else "gamma_db"
    y_key, lo_key, hi_key = (
        ("ber", "ber_ci_low", "ber_ci_high") if activity_sweep
        else ("aer", "aer_ci_low", "aer_ci_high")
    )

    fig, ax = plt.subplots(figsize=(6, 4))
    for detector in sorted({r["detector"] for r in rows}):
        pts = sorted((float(r[x_key]), float(r[y_key]), float(r[lo_key]), float(r[hi_key]))
                     for r in rows
                     if r["detector"] == detector and r.get("ber_defined", "1") != "0")
        if not pts:
            continue
        x, y, lo, hi = zip(*pts)
        ax.plot(x, y, marker="o", label=detector)
        ax.fill_between(x, lo, hi, alpha=0.15)
    ax.set_xlabel("activity rate" if activity_sweep else "SNR [dB]")
    ax.set_ylabel("BER" if activity_sweep else "AER")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    out = Path(path).with_suffix(".png")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    for p in sys.argv[1:]:
        plot(p)
