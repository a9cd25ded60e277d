"""grc gen: write a deterministic corpus text"""

from grc.cli.commands import emit
from grc.services.corpus import FAMILIES


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Generate a corpus text")
    parser.add_argument(
        "--family",
        required=True,
        choices=sorted(FAMILIES) + ["file-copy-mutate"],
        help="Corpus family",
    )
    parser.add_argument(
        "--param",
        required=True,
        type=int,
        help="k for fib and thue-morse, n for unary, length for random and copy-mutate",
    )
    parser.add_argument("--sigma", type=int, default=4, help="Alphabet size of random texts")
    parser.add_argument("--seed", type=int, default=None, help="Random seed (default from settings)")
    parser.add_argument("--base", default=None, help="Base file for copy-mutate")
    parser.add_argument("--as-slp", action="store_true", help="Write an SLP instead of the text")
    parser.add_argument("-o", "--output", required=True)
    parser.set_defaults(handler=handle)


def handle(args, service) -> int:
    length = service.generate(
        args.family,
        args.param,
        args.output,
        sigma=args.sigma,
        seed=args.seed,
        as_slp=args.as_slp,
        base_file=args.base,
    )
    emit({"family": args.family, "param": args.param, "length": length, "output": args.output})
    return 0
