"""
Engine equivalence sweep over random and structured texts.

For every text: scan recompression on build_slp(T) must equal naive RePair
on T, the fast engine must equal scan, and hybrid runs for t = 1..5 must
equal scan with the switch length below N/t.

Usage:
    python -m scripts.oracle_sweep --cases 1000
"""

import argparse
import random
import sys
import time
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from grc.core.exceptions import GrcError, VerificationError
from grc.core.logging_config import configure_logging, get_logger
from grc.engines.fast import run_fast
from grc.engines.hybrid import run_hybrid
from grc.engines.scan import run as run_scan
from grc.engines.text_repair import repair_naive
from grc.grammar.builder import build_slp
from grc.models.run_config import HybridConfig
from grc.services import corpus

logger = get_logger("scripts.oracle_sweep")

SIGMAS = (2, 4, 16)
HYBRID_TS = (1, 2, 3, 4, 5)


def corpus_texts(cases: int, seed: int):
    rng = random.Random(seed)
    for i in range(cases):
        length = rng.randint(2, 512)
        sigma = SIGMAS[i % len(SIGMAS)]
        yield f"random#{i}(N={length},sigma={sigma})", corpus.random_text(length, sigma, seed=rng.randrange(1 << 30))
    for k in range(3, 21):
        yield f"fib({k})", corpus.fibonacci_word(k)
    for k in range(2, 13):
        yield f"thue-morse({k})", corpus.thue_morse(k)
    for n in range(2, 65):
        yield f"unary({n})", corpus.unary(n)


def check_text(name: str, text: bytes, debug_verify: bool) -> None:
    expected, _ = repair_naive(text)
    slp = build_slp(text)
    scanned, _ = run_scan(slp, debug_verify=debug_verify)
    if scanned != expected:
        raise VerificationError(f"{name}: scan differs from naive RePair")
    fast, _ = run_fast(slp, debug_verify=debug_verify)
    if fast != scanned:
        raise VerificationError(f"{name}: fast differs from scan")
    for t in HYBRID_TS:
        grammar, stats = run_hybrid(slp, HybridConfig(t=t))
        if grammar != scanned:
            raise VerificationError(f"{name}: hybrid t={t} differs from scan")
        summary = stats.hybrid
        if t >= 2 and summary.switch_len is not None and summary.switch_len * t >= len(text):
            raise VerificationError(f"{name}: hybrid t={t} switched at |T|={summary.switch_len}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--cases", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--debug-verify", action="store_true")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()
    configure_logging(args.log_level)

    started = time.perf_counter()
    checked = 0
    try:
        for name, text in corpus_texts(args.cases, args.seed):
            check_text(name, text, args.debug_verify)
            checked += 1
    except GrcError as exc:
        print(exc.one_line(), file=sys.stderr)
        return exc.exit_code
    print(f"{checked} texts agree across all engines in {time.perf_counter() - started:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
