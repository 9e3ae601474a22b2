"""Command-line front end.

Exit codes: 0 success, 1 invalid word or library error, 2 bad usage,
3 counterexample found by ``verify-conjecture``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import catalog as cat
from .bn import as_double_square, find_hexagon_factorizations, find_square_factorizations
from .errors import NotADoubleSquare, TileError
from .morphism import reduction
from .polyomino import tiling_patch, validate
from .render import RenderSpec, render_patch, render_svg

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


def _fmt(w: str) -> str:
    return w or "ε"


def cmd_validate(word, args, out):
    P = validate(word)
    print(f"valid, perimeter={P.perimeter}, area={P.area}", file=out)
    if P.word != word:
        print(f"oriented counterclockwise as {P.word}", file=out)


def cmd_factorize(word, args, out):
    P = validate(word)
    print(f"word {P.word}", file=out)
    for f in sorted(find_square_factorizations(P), key=lambda f: f.cuts):
        cuts = ",".join(map(str, f.cuts))
        print(f"square\tcuts={cuts}\tA={f.A}\tB={f.B}", file=out)
    if args.hexagon:
        for f in sorted(find_hexagon_factorizations(P), key=lambda f: f.cuts):
            cuts = ",".join(map(str, f.cuts))
            x1, x2, x3 = f.factors
            print(f"hexagon\tcuts={cuts}\tX1={x1}\tX2={x2}\tX3={x3}", file=out)


def cmd_double_square(word, args, out):
    P = validate(word)
    s = as_double_square(P)
    if s is None:
        n = len(find_square_factorizations(P))
        raise NotADoubleSquare(f"{P.word} has {n} square factorization(s), not 2")
    print(f"word {P.word}", file=out)
    for i in range(8):
        print(f"w{i + 1}={_fmt(s.w[i])}\tu{i + 1}={_fmt(s.u[i])}\t"
              f"v{i + 1}={_fmt(s.v[i])}\tn{i + 1}={s.n[i]}", file=out)
    if s.form is None:
        print("form -", file=out)
    else:
        p = s.params
        print(f"form {s.form}\tu1={_fmt(p.u1)}\tu3={_fmt(p.u3)}\tk={_fmt(p.k)}\tp={_fmt(p.p)}\t"
              f"n=" + ",".join(map(str, p.n)), file=out)


def cmd_prime(word, args, out):
    P = validate(word)
    red = reduction(P)
    if red is None:
        print("prime double square", file=out)
    else:
        print(f"not prime: phi(0)={red.phi.img0} phi(1)={red.phi.img1} source={red.source}",
              file=out)


def cmd_render(word, args, out):
    P = validate(word)
    spec = RenderSpec(cell_size=args.cell_size, annotate_cuts=args.cuts)
    cut_sets = [f.cuts for f in sorted(find_square_factorizations(P), key=lambda f: f.cuts)]
    Path(args.output).write_text(render_svg(P, spec, cut_sets=cut_sets), encoding="utf-8")
    print(f"wrote {args.output}", file=out)


def cmd_tile(word, args, out):
    P = validate(word)
    facs = sorted(find_square_factorizations(P), key=lambda f: f.cuts)
    if not facs:
        raise TileError(f"{P.word} has no square factorization")
    if not 1 <= args.factorization <= len(facs):
        raise TileError(f"--factorization must be between 1 and {len(facs)}")
    patch = tiling_patch(P, facs[args.factorization - 1], args.rows, args.cols)
    spec = RenderSpec(cell_size=args.cell_size)
    Path(args.output).write_text(render_patch(P, patch, spec), encoding="utf-8")
    print(f"wrote {args.output} ({len(patch)} copies)", file=out)


def cmd_enumerate(args, out):
    build = cat.enumerate_parametric if args.parametric else cat.enumerate_bruteforce
    c = build(args.max_perimeter, dedup=args.dedup, workers=args.workers)
    if args.prime_only:
        c = cat.Catalog(c.primes(), c.max_perimeter, c.dedup)
    text = cat.dumps(c)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {len(c.entries)} entries to {args.output}", file=out)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    report = cat.verify_conjecture(args.max_perimeter, workers=args.workers)
    print(report.tsv(), file=out)
    for e in report.counterexamples:
        print(f"counterexample\t{e.canonical_word}", file=out)
    if args.plot:
        from .plotting import plot_report

        plot_report(report, args.plot)
    n_prime = sum(r[2] for r in report.rows)
    print(f"# {len(report.counterexamples)} counterexamples among {n_prime} prime double squares",
          file=out)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


WORD_COMMANDS = {
    "validate": cmd_validate,
    "factorize": cmd_factorize,
    "double-square": cmd_double_square,
    "prime": cmd_prime,
    "render": cmd_render,
    "tile": cmd_tile,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tileforge", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("word", nargs="?", help="boundary word over 0123")
        p.add_argument("--from-file", metavar="PATH", help="read one word per line")
        return p

    word_cmd("validate", "check a boundary word")
    p = word_cmd("factorize", "list BN factorizations")
    p.add_argument("--hexagon", action="store_true", help="also list hexagon factorizations")
    word_cmd("double-square", "print the eight-segment structure and form")
    word_cmd("prime", "test primality of a double square")
    p = word_cmd("render", "draw the polyomino as SVG")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--cuts", action="store_true", help="mark factorization cuts with dots")
    p.add_argument("--cell-size", type=int, default=24)
    p = word_cmd("tile", "draw a tiling patch as SVG")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--factorization", type=int, default=1, help="which square factorization (1-based)")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--cell-size", type=int, default=24)

    p = sub.add_parser("enumerate", help="catalog all double squares up to a perimeter")
    p.add_argument("--max-perimeter", type=int, required=True)
    p.add_argument("--prime-only", action="store_true")
    p.add_argument("--parametric", action="store_true", help="generate from the seven forms")
    p.add_argument("--dedup", choices=cat.DEDUP_MODES, default="rotation")
    p.add_argument("-o", "--output")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify-conjecture", help="check that prime double squares are couple-free")
    p.add_argument("--max-perimeter", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--plot", metavar="FILE", help="also save a bar chart of the counts")
    return parser


def _words(args, parser):
    if args.from_file:
        if args.word:
            parser.error("give either a word or --from-file, not both")
        text = Path(args.from_file).read_text(encoding="utf-8")
        return [line.strip() for line in text.splitlines() if line.strip()]
    if not args.word:
        parser.error("a word is required")
    return [args.word]


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.command in WORD_COMMANDS:
            try:
                words = _words(args, parser)
            except SystemExit:
                return EXIT_USAGE
            status = EXIT_OK
            for word in words:
                try:
                    WORD_COMMANDS[args.command](word, args, out)
                except TileError as exc:
                    print(f"error: {exc}", file=err)
                    status = EXIT_INVALID
            return status
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        return cmd_verify(args, out)
    except (TileError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
