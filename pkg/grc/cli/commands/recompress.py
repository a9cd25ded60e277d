"""grc recompress: RePair grammar of an SLP without decompressing it"""

from grc.cli.commands import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("recompress", help="RePair from an SLP by recompression")
    parser.add_argument("-i", "--input", required=True, help="SLP file (raw text is paired first)")
    parser.add_argument("-o", "--output", required=True)
    parser.add_argument("--engine", choices=["scan", "fast"], default="scan")
    parser.add_argument("--stats", default=None, help="Write per-level stats records here")
    parser.add_argument(
        "--debug-verify",
        action="store_true",
        default=None,
        help="Re-verify every level against the expanded text",
    )
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    _, stats = service.recompress(
        args.input,
        args.output,
        engine=args.engine,
        stats_path=args.stats,
        debug_verify=args.debug_verify,
    )
    emit(stats.summary().to_record())
    return 0
