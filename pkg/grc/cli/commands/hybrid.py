"""grc hybrid: recompress until the text is short, then finish on the text"""

from grc.cli.commands import emit
from grc.common.utils import parse_shrink_factor
from grc.models.run_config import HybridConfig


def register(subparsers) -> None:
    parser = subparsers.add_parser("hybrid", help="Recompression followed by text RePair")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("-o", "--output", required=True)
    parser.add_argument("-t", default=None, help="Shrink factor (positive integer or 'inf')")
    parser.add_argument("--phase1", choices=["scan", "fast"], default="scan")
    parser.add_argument("--phase2", choices=["fast", "naive"], default="fast")
    parser.add_argument("--stats", default=None)
    parser.add_argument("--debug-verify", action="store_true", default=None)
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    t = service.settings.default_hybrid_t if args.t is None else parse_shrink_factor(args.t)
    cfg = HybridConfig(
        t=t,
        phase1=args.phase1,
        phase2=args.phase2,
        stats_path=args.stats,
        debug_verify=args.debug_verify,
    )
    _, stats = service.hybrid(args.input, args.output, cfg)
    emit(stats.summary().to_record())
    emit(stats.hybrid.to_record())
    return 0
