"""grc repair: RePair on an explicit text"""

from grc.cli.commands import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("repair", help="RePair on a text file")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("-o", "--output", required=True)
    parser.add_argument("--engine", choices=["naive", "fast"], default="fast")
    parser.add_argument("--stats", default=None)
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    _, stats = service.repair(args.input, args.output, engine=args.engine, stats_path=args.stats)
    emit(stats.summary().to_record())
    return 0
