"""Command-line driver.

Exit codes: 0 success, 1 a verified property failed, 2 usage or input
error, 3 a capacity guard or census budget was hit.
"""

import argparse
import sys

from . import census, letters
from .errors import CapacityError, WordRepError
from .geometry import decode_model, encode_model, family_for_language, get_family
from .geometry.io import format_model, parse_model
from .graphs import decode_graph, format_graph
from .languages import format_language, get_language, read_language
from .words import deletion_op, format_vertex_word, parse_vertex_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


class _Usage(Exception):
    pass


def _load_language(args):
    if getattr(args, "language_file", None):
        return read_language(args.language_file, close=args.close)
    return get_language(args.language)


def cmd_language_show(args, out):
    L = get_language(args.name)
    out.write(format_language(L))


def cmd_decode(args, out):
    L = _load_language(args)
    out.write(format_graph(decode_graph(L, parse_vertex_word(args.word))))


def cmd_encode(args, out):
    get_family(args.family)
    with open(args.input) as fh:
        model = parse_model(fh.read(), family=args.family)
    out.write(format_vertex_word(encode_model(model)) + "\n")


def cmd_model(args, out):
    fam, p = (args.family, args.param) if args.family else family_for_language(args.language)
    out.write(format_model(decode_model(parse_vertex_word(args.word), fam, p)))


def cmd_delta(args, out):
    out.write(deletion_op(args.word, args.k, args.m, args.d) + "\n")


def cmd_speed(args, out):
    L = get_language(args.language)
    rep = census.speed(L, args.n, budget=args.budget, method=args.method,
                       unlabeled=args.unlabeled, workers=args.threads)
    out.write((rep.line() if args.line else rep.table()) + "\n")


def cmd_letters_speed(args, out):
    count = len(letters.enumerate_letter_masks(args.k, args.n))
    bound = 2 ** (args.k * args.k) * args.k ** args.n
    out.write(f"k={args.k} n={args.n} labeled={count} bound={bound}\n")


def cmd_letters_decode(args, out):
    with open(args.spec) as fh:
        spec = letters.parse_letter_spec(fh.read())
    out.write(format_graph(letters.decode_letter_graph(spec)))


def cmd_verify(args, out):
    from .verify import verify_suite

    report = verify_suite(args.seed, args.trials)
    for line in report.lines():
        out.write(line + "\n")
    out.write(("all properties passed" if report.ok else "some properties FAILED") + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser():
    p = _Parser(prog="wordrep", description="Finite-language word representations of graph classes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lang = sub.add_parser("language", help="inspect languages")
    lsub = lang.add_subparsers(dest="action", required=True, parser_class=_Parser)
    show = lsub.add_parser("show", help="print the sorted word set")
    show.add_argument("name")
    show.set_defaults(func=cmd_language_show)

    dec = sub.add_parser("decode", help="decode a vertex word into a graph")
    src = dec.add_mutually_exclusive_group(required=True)
    src.add_argument("--language")
    src.add_argument("--language-file", help="one binary word per line")
    dec.add_argument("--close", action="store_true", help="apply symmetric closure to --language-file")
    dec.add_argument("--word", required=True)
    dec.set_defaults(func=cmd_decode)

    enc = sub.add_parser("encode", help="encode a geometry file as a vertex word")
    enc.add_argument("--family", required=True)
    enc.add_argument("--in", dest="input", required=True)
    enc.set_defaults(func=cmd_encode)

    mod = sub.add_parser("model", help="rebuild geometry from a vertex word")
    grp = mod.add_mutually_exclusive_group(required=True)
    grp.add_argument("--language")
    grp.add_argument("--family")
    mod.add_argument("--param", type=int)
    mod.add_argument("--word", required=True)
    mod.set_defaults(func=cmd_model)

    dl = sub.add_parser("delta", help="apply the deletion operator to a binary word")
    dl.add_argument("--word", required=True)
    dl.add_argument("--k", type=int, required=True)
    dl.add_argument("--m", type=int, required=True)
    dl.add_argument("--d", type=int, default=1)
    dl.set_defaults(func=cmd_delta)

    sp = sub.add_parser("speed", help="count labeled graphs on n vertices")
    sp.add_argument("--language", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--unlabeled", action="store_true")
    sp.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    sp.add_argument("--threads", type=int)
    sp.add_argument("--method", choices=("auto", "words", "automaton"), default="auto")
    sp.add_argument("--line", action="store_true", help="machine-readable single line")
    sp.set_defaults(func=cmd_speed)

    let = sub.add_parser("letters", help="k-letter graphs")
    lt = let.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ls = lt.add_parser("speed", help="count labeled k-letter graphs on n vertices")
    ls.add_argument("--k", type=int, required=True)
    ls.add_argument("--n", type=int, required=True)
    ls.set_defaults(func=cmd_letters_speed)
    ld = lt.add_parser("decode", help="decode a letter spec file")
    ld.add_argument("--spec", required=True)
    ld.set_defaults(func=cmd_letters_decode)

    ver = sub.add_parser("verify", help="run the property suite")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=100)
    ver.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _Usage as e:
        err.write(str(e) + "\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        code = args.func(args, out)
    except CapacityError as e:
        err.write(f"capacity: {e}\n")
        return EXIT_CAPACITY
    except (WordRepError, ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())
