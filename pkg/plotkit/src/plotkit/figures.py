"""Figure rendering from spraysim telemetry CSVs.

This package deliberately knows nothing about the simulator: the documented
CSV schemas (docs/csv_schemas.md in the simulator repo) are the whole
contract. Each function takes CSV paths and writes one image file whose
format follows the output extension.
"""

import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

PS_PER_US = 1_000_000
PS_PER_MS = 1_000_000_000


class SchemaError(ValueError):
    pass


def _read_rows(path, required):
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        cols = reader.fieldnames or []
        missing = [c for c in required if c not in cols]
        if missing:
            raise SchemaError(f"{path}: missing columns {missing}")
        return list(reader)


def _size_label(nbytes):
    for unit, div in (("GB", 10**9), ("MB", 10**6), ("KB", 10**3)):
        if nbytes >= div:
            val = nbytes / div
            return f"{val:g}{unit}"
    return f"{nbytes}B"


def load_fct_summary(path):
    """fct_summary.csv -> {bucket_bytes: max_ps} preserving exact values."""
    rows = _read_rows(path, ["bucket_bytes", "max_ps"])
    if not rows:
        raise SchemaError(f"{path}: no summary rows")
    return {int(r["bucket_bytes"]): int(r["max_ps"]) for r in rows}


def plot_fct_bars(summary_paths, labels, out_path, title="max FCT"):
    """Grouped bars of max FCT by message size, one group color per arm."""
    if len(summary_paths) != len(labels):
        raise ValueError("need one label per summary file")
    series = [load_fct_summary(p) for p in summary_paths]
    buckets = sorted(series[0])
    for label, s in zip(labels[1:], series[1:]):
        if sorted(s) != buckets:
            raise SchemaError(
                f"bucket mismatch: {labels[0]} has {buckets}, "
                f"{label} has {sorted(s)}")
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.8 / len(series)
    for i, (label, s) in enumerate(zip(labels, series)):
        xs = [j + i * width for j in range(len(buckets))]
        ax.bar(xs, [s[b] / PS_PER_MS for b in buckets], width, label=label)
    ax.set_xticks([j + 0.4 - width / 2 for j in range(len(buckets))])
    ax.set_xticklabels([_size_label(b) for b in buckets])
    ax.set_yscale("log")
    ax.set_xlabel("message size")
    ax.set_ylabel("max FCT (ms)")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path


def plot_qdelay_scatter(qdelay_paths, labels, out_path, threshold_us=None,
                        title="switch queuing delay"):
    """Queue-delay samples over time, one series per run."""
    fig, ax = plt.subplots(figsize=(7, 4))
    plotted = False
    for path, label in zip(qdelay_paths, labels):
        rows = _read_rows(path, ["time_ps", "qdelay_ps"])
        xs = [int(r["time_ps"]) / PS_PER_MS for r in rows]
        ys = [int(r["qdelay_ps"]) / PS_PER_US for r in rows]
        if xs:
            plotted = True
        ax.plot(xs, ys, ".", markersize=2, label=label, alpha=0.6)
    ax.set_xlabel("time (ms)")
    ax.set_ylabel("queuing delay (us)")
    if threshold_us is not None:
        ax.axhline(threshold_us, linestyle="--", linewidth=0.8, color="grey")
        ax.annotate(f"log threshold {threshold_us:g}us",
                    xy=(0.02, threshold_us), xycoords=("axes fraction", "data"),
                    fontsize=8, color="grey")
    if not plotted:
        ax.annotate("no samples above log threshold", xy=(0.5, 0.5),
                    xycoords="axes fraction", ha="center")
    ax.set_title(title)
    if labels:
        ax.legend(markerscale=4)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path


def plot_tput_timeseries(tput_path, out_path, flows=None, window_us=100,
                         title="per-flow throughput"):
    rows = _read_rows(tput_path, ["flow_id", "window_start_ps", "gbps"])
    series = defaultdict(list)
    for r in rows:
        fid = int(r["flow_id"])
        if flows is None or fid in flows:
            series[fid].append((int(r["window_start_ps"]), float(r["gbps"])))
    fig, ax = plt.subplots(figsize=(7, 4))
    for fid in sorted(series):
        pts = sorted(series[fid])
        ax.plot([t / PS_PER_MS for t, _ in pts], [g for _, g in pts],
                linewidth=0.9, label=f"flow {fid}")
    ax.set_xlabel("time (ms)")
    ax.set_ylabel(f"throughput (Gbps, {window_us}us windows)")
    ax.set_title(title)
    if len(series) <= 12:
        ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path


def empirical_cdf(values):
    """Sorted (x, F(x)) steps; monotone, ending at 1.0."""
    xs = sorted(values)
    n = len(xs)
    return [(x, (i + 1) / n) for i, x in enumerate(xs)]


def plot_cdf(cct_paths, labels, out_path, column="cct_ps",
             title="collective completion time CDF"):
    fig, ax = plt.subplots(figsize=(6, 4))
    for path, label in zip(cct_paths, labels):
        rows = _read_rows(path, [column])
        vals = [int(r[column]) / PS_PER_MS for r in rows]
        if not vals:
            raise SchemaError(f"{path}: no completion times")
        steps = empirical_cdf(vals)
        xs = [x for x, _ in steps]
        ys = [y for _, y in steps]
        ax.step(xs, ys, where="post", label=label)
    ax.set_xlabel("CCT (ms)")
    ax.set_ylabel("fraction of collectives")
    ax.set_ylim(0.0, 1.05)
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path
