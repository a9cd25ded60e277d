"""
Peak grammar size on Fibonacci words.

Recompresses the direct Fibonacci SLP for each k and prints
n, m, Max, sum |G_h|, sum n_h and R. Max stays flat while N grows.

Usage:
    python -m scripts.fibonacci_max_sweep --ks 20 25 30 35
"""

import argparse
import json
import sys
import time
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from grc.core.logging_config import configure_logging
from grc.engines.registry import compress_slp
from grc.grammar.builder import fibonacci_slp
from grc.grammar.slp import slp_lengths

MAX_THRESHOLD = 5000


def main() -> int:
    parser = argparse.ArgumentParser(description="Max |G_h| of recompression on Fibonacci SLPs")
    parser.add_argument("--ks", type=int, nargs="+", default=[20, 25, 30, 35])
    parser.add_argument("--engine", choices=["scan", "fast"], default="scan")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()
    configure_logging(args.log_level)

    status = 0
    for k in args.ks:
        slp = fibonacci_slp(k)
        started = time.perf_counter()
        _, stats = compress_slp(slp, args.engine)
        record = {"k": k, "N": slp_lengths(slp)[-1]}
        record.update(stats.summary().to_record())
        record["seconds"] = round(time.perf_counter() - started, 2)
        print(json.dumps(record))
        if record["Max"] >= MAX_THRESHOLD:
            print(f"Max={record['Max']} reached the threshold {MAX_THRESHOLD} at k={k}", file=sys.stderr)
            status = 3
    return status


if __name__ == "__main__":
    sys.exit(main())
