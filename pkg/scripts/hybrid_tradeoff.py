"""
Peak working size against time for the hybrid shrink factor t.

Runs the hybrid engine for t = 1..5 and t = inf on one input and prints one
summary line per t.

Usage:
    python -m scripts.hybrid_tradeoff --family fib --param 24
    python -m scripts.hybrid_tradeoff -i corpus.slp
"""

import argparse
import json
import sys
import time
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from grc.core.logging_config import configure_logging
from grc.engines.hybrid import run_hybrid
from grc.grammar.builder import build_slp, fibonacci_slp
from grc.models.run_config import HybridConfig
from grc.services import corpus
from grc.services.toolkit import ToolkitService

SHRINK_FACTORS = (1, 2, 3, 4, 5, None)


def main() -> int:
    parser = argparse.ArgumentParser(description="Hybrid peak size vs. time per t")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("-i", "--input", help="SLP or text file")
    source.add_argument("--family", choices=sorted(corpus.FAMILIES))
    parser.add_argument("--param", type=int, default=20)
    parser.add_argument("--phase1", choices=["scan", "fast"], default="scan")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()
    configure_logging(args.log_level)

    if args.input:
        slp = ToolkitService().load_slp(args.input)
    elif args.family == "fib":
        slp = fibonacci_slp(args.param)
    else:
        slp = build_slp(corpus.generate(args.family, args.param))

    for t in SHRINK_FACTORS:
        started = time.perf_counter()
        _, stats = run_hybrid(slp, HybridConfig(t=t, phase1=args.phase1))
        record = stats.hybrid.to_record()
        record["seconds"] = round(time.perf_counter() - started, 3)
        print(json.dumps(record))
    return 0


if __name__ == "__main__":
    sys.exit(main())
