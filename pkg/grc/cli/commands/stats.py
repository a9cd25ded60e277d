"""grc stats: run aggregates, grammar shape, or a stats file's aggregates"""

from grc.cli.commands import emit
from grc.engines.registry import ENGINE_NAMES


def register(subparsers) -> None:
    parser = subparsers.add_parser("stats", help="Print aggregates {n, m, Max, Σ|G_h|, Σn_h, R}")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("-i", "--input", help="SLP, RePair grammar or text file")
    source.add_argument("--records", help="Recompute aggregates from a stats file")
    parser.add_argument("--engine", choices=ENGINE_NAMES, default="scan")
    parser.add_argument("--stats", default=None, help="Also write the per-level records here")
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    if args.records is not None:
        parsed, recomputed = service.read_records(args.records)
        record = recomputed.to_record()
        record["consistent"] = parsed.is_consistent()
        emit(record)
        if parsed.hybrid is not None:
            emit(parsed.hybrid.to_record())
        return 0
    emit(service.stats(args.input, engine=args.engine, stats_path=args.stats))
    return 0
