#!/usr/bin/env python3
"""Plot a `clarke run` output directory.

One figure row per segment with four columns: desired vs. open-loop
measurement, desired vs. closed-loop measurement, desired velocity, and
desired acceleration.

Usage:
    python3 scripts/plot_run.py RUN_DIR [-o OUT.png]
"""

import argparse
import csv
import glob
import os

import matplotlib.pyplot as plt


def read_segment(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    cols = {}
    for key in rows[0]:
        cols[key] = [float(r[key]) for r in rows]
    return cols


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("run_dir")
    parser.add_argument("-o", "--output", default=None, help="save instead of showing")
    args = parser.parse_args()

    paths = sorted(glob.glob(os.path.join(args.run_dir, "segment_*.csv")))
    if not paths:
        raise SystemExit(f"no segment_*.csv in {args.run_dir}")

    fig, axes = plt.subplots(len(paths), 4, figsize=(16, 2.6 * len(paths)), squeeze=False)
    for row, path in enumerate(paths):
        seg = read_segment(path)
        t = seg["t"]
        mm = 1e3

        ax = axes[row][0]
        ax.plot(t, [v * mm for v in seg["des_re"]], "k-", lw=1, label="desired re")
        ax.plot(t, [v * mm for v in seg["des_im"]], "k--", lw=1, label="desired im")
        ax.plot(t, [v * mm for v in seg["ol_meas_re"]], "C0-", lw=0.8, label="open loop re")
        ax.plot(t, [v * mm for v in seg["ol_meas_im"]], "C0--", lw=0.8, label="open loop im")
        ax.set_ylabel(f"segment {row + 1}\nmm")
        if row == 0:
            ax.set_title("desired vs open loop")
            ax.legend(fontsize=6)

        ax = axes[row][1]
        ax.plot(t, [v * mm for v in seg["des_re"]], "k-", lw=1)
        ax.plot(t, [v * mm for v in seg["des_im"]], "k--", lw=1)
        ax.plot(t, [v * mm for v in seg["meas_re"]], "C1-", lw=0.8)
        ax.plot(t, [v * mm for v in seg["meas_im"]], "C1--", lw=0.8)
        if row == 0:
            ax.set_title("desired vs closed loop")

        ax = axes[row][2]
        ax.plot(t, [v * mm for v in seg["des_re_dot"]], "C2-", lw=1)
        ax.plot(t, [v * mm for v in seg["des_im_dot"]], "C2--", lw=1)
        if row == 0:
            ax.set_title("desired velocity (mm/s)")

        ax = axes[row][3]
        ax.plot(t, [v * mm for v in seg["des_re_ddot"]], "C3-", lw=1)
        ax.plot(t, [v * mm for v in seg["des_im_ddot"]], "C3--", lw=1)
        if row == 0:
            ax.set_title("desired acceleration (mm/s$^2$)")

    for ax in axes[-1]:
        ax.set_xlabel("t (s)")
    fig.tight_layout()
    if args.output:
        fig.savefig(args.output, dpi=150)
        print(f"wrote {args.output}")
    else:
        plt.show()


if __name__ == "__main__":
    main()
