"""grc verify: compare the texts behind two files"""

from grc.cli.commands import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify", help="Check that two files (texts or grammars) describe the same text"
    )
    parser.add_argument("-a", required=True)
    parser.add_argument("-b", required=True)
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    length = service.verify(args.a, args.b)
    emit({"status": "ok", "length": length})
    return 0
