"""grc decompress: expand an SLP or RePair grammar to its text"""


def register(subparsers) -> None:
    parser = subparsers.add_parser("decompress", help="Expand a grammar file")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("-o", "--output", required=True)
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    service.decompress(args.input, args.output)
    return 0
