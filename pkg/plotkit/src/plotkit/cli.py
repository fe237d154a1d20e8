"""CLI: one subcommand per figure type; image format follows the extension."""

import argparse
import sys

from .figures import (SchemaError, plot_cdf, plot_fct_bars,
                      plot_qdelay_scatter, plot_tput_timeseries)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="plotkit",
                                 description="render figures from spraysim CSVs")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("fct-bars", help="grouped max-FCT bars by message size")
    p.add_argument("summaries", nargs="+", help="fct_summary.csv, one per arm")
    p.add_argument("--labels", required=True, help="comma list, one per file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--title", default="max FCT")

    p = sub.add_parser("qdelay", help="queue-delay scatter over time")
    p.add_argument("qdelays", nargs="+", help="qdelay.csv, one per arm")
    p.add_argument("--labels", required=True)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--threshold-us", type=float, default=None)
    p.add_argument("--title", default="switch queuing delay")

    p = sub.add_parser("tput", help="per-flow throughput timeseries")
    p.add_argument("tput", help="tput.csv")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--flows", default=None,
                   help="comma list of flow ids (default: all)")
    p.add_argument("--title", default="per-flow throughput")

    p = sub.add_parser("cdf", help="completion-time CDF")
    p.add_argument("ccts", nargs="+", help="cct.csv (or fct.csv), one per arm")
    p.add_argument("--labels", required=True)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--column", default="cct_ps")
    p.add_argument("--title", default="completion time CDF")

    args = ap.parse_args(argv)
    labels = args.labels.split(",") if hasattr(args, "labels") else []

    try:
        if args.cmd == "fct-bars":
            out = plot_fct_bars(args.summaries, labels, args.out, args.title)
        elif args.cmd == "qdelay":
            out = plot_qdelay_scatter(args.qdelays, labels, args.out,
                                      args.threshold_us, args.title)
        elif args.cmd == "tput":
            flows = None
            if args.flows:
                flows = {int(x) for x in args.flows.split(",")}
            out = plot_tput_timeseries(args.tput, args.out, flows,
                                       title=args.title)
        else:
            out = plot_cdf(args.ccts, labels, args.out, args.column, args.title)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"plotkit: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
