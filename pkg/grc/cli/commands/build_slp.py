"""grc build-slp: pair a text into an SLP"""


def register(subparsers) -> None:
    parser = subparsers.add_parser("build-slp", help="Build an SLP from a text file")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("-o", "--output", required=True)
    parser.add_argument("--text", action="store_true", help="Write the SLPv1 text variant")
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    service.build_slp(args.input, args.output, text_format=args.text)
    return 0
