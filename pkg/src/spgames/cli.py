"""Command-line entry point (``spgames``)."""
from __future__ import annotations

import argparse
import os
import sys

from . import engine as E, values as V
from .census import CensusTooLarge, absent_in_top, run_census
from .complex import ComplexError, LegalComplex, SimplicialComplex
from .constructions import CONSTRUCTIONS, birthday2_catalog, switch_symmetric
from .impartial import grundy, predict_structural
from .rulesets import parse_board, ruleset_complex
from .verify import FixtureError, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_complex(path: str, impartial: bool) -> SimplicialComplex:
    cls = SimplicialComplex if impartial else LegalComplex
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return cls.from_text(text)


def cmd_eval(args) -> int:
    c = _read_complex(args.file, args.impartial)
    if args.impartial:
        g = V.make_nimber(grundy(c))
        literal = None
    else:
        g = E.evaluate(c)
        literal = E.game_from_complex(c) if args.birthdays or args.outcome else None
    print(f"value: {V.describe(g)}")
    print(f"canonical: {V.bracket(g, pretty=args.pretty)}")
    if args.outcome:
        print(f"outcome: {E.outcome(g).value}")
    if args.birthdays:
        formal = c.dimension + 1 if literal is None else E.formal_birthday(literal)
        print(f"birthdays: formal={formal} birthday={E.birthday(g)}")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "catalog":
        if args.params != ["birthday2"]:
            raise UsageError("usage: construct catalog birthday2")
        entries = birthday2_catalog(with_negatives=args.negatives)
        if args.index is not None:
            if not 1 <= args.index <= len(entries):
                raise UsageError(f"--index must be in 1..{len(entries)}")
            entries = [entries[args.index - 1]]
        blocks = [f"# expect: {e.label}\n" + e.complex.to_text() for e in entries]
        sys.stdout.write("\n".join(blocks))
        return EXIT_OK
    if args.kind not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.kind!r}; choose from {', '.join(CONSTRUCTIONS)}, catalog")
    fn, arity = CONSTRUCTIONS[args.kind]
    if len(args.params) != arity:
        raise UsageError(f"{args.kind} takes {arity} integer parameter(s)")
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise UsageError("construction parameters must be integers") from None
    if args.connected:
        if args.kind != "switch-sym":
            raise UsageError("--connected only applies to switch-sym")
        c = switch_symmetric(*params, connected=True)
    else:
        c = fn(*params)
    sys.stdout.write(c.to_text())
    return EXIT_OK


def cmd_ruleset(args) -> int:
    c = ruleset_complex(args.name, parse_board(args.board))
    sys.stdout.write(c.to_text())
    return EXIT_OK


def cmd_census(args) -> int:
    report = run_census(args.max_vertices, args.max_dim, workers=args.workers)
    for line in report.lines():
        if line.startswith("time:") and not args.timing:
            continue
        print(line)
    status = EXIT_OK
    for value in args.assert_absent or []:
        try:
            absent = absent_in_top(report, value)
        except ValueError as exc:
            raise UsageError(f"bad value {value!r}: {exc}") from None
        print(f"assert-absent {value} in dim {args.max_dim}: {'ok' if absent else 'FAILED'}")
        if not absent:
            status = EXIT_FAIL
    return status


def cmd_grundy(args) -> int:
    if not args.impartial:
        raise UsageError("grundy needs --impartial")
    c = _read_complex(args.file, True)
    n = grundy(c)
    print(f"*{n}")
    if args.explain:
        value, rule = predict_structural(c, explain=True)
        if value is None:
            print("structural: none applies")
        else:
            print(f"structural: {rule} -> *{value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    rows = run_all(args.fixtures)
    for r in rows:
        print(r.line())
    failed = [r for r in rows if not r.ok]
    print(f"{len(rows) - len(failed)}/{len(rows)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sp_check(args) -> int:
    target = args.target
    if os.path.exists(target):
        g = E.game_from_complex(_read_complex(target, False))
        kind = "complex"
    else:
        g = E.canonical_form(V.parse_game(target))
        kind = "canonical form"
    ok = E.sp_tree_check(g)
    print(f"{kind}: {V.bracket(g)}")
    print(f"sp-tree: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spgames", description="Values of strong placement games via legal complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a complex file")
    e.add_argument("file")
    e.add_argument("--impartial", action="store_true", help="read unlabelled vertices; value is a nimber")
    e.add_argument("--outcome", action="store_true")
    e.add_argument("--birthdays", action="store_true")
    e.add_argument("--pretty", action="store_true", help="name numbers and nimbers inside the canonical form")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("construct", help="print a witness complex")
    c.add_argument("kind", help=", ".join([*CONSTRUCTIONS, "catalog"]))
    c.add_argument("params", nargs="*")
    c.add_argument("--connected", action="store_true", help="switch-sym: add the connecting face")
    c.add_argument("--index", type=int, help="catalog: print only entry k (1-based)")
    c.add_argument("--negatives", action="store_true", help="catalog: include label-negated twins")
    c.set_defaults(func=cmd_construct)

    r = sub.add_parser("ruleset", help="print the legal complex of a ruleset on a board")
    r.add_argument("name", choices=["snort", "col", "domineering", "nim"])
    r.add_argument("--board", required=True, help="path:N, cycle:N, complete:N, grid:RxC[:mask=r,c;...], graph:FILE")
    r.set_defaults(func=cmd_ruleset)

    s = sub.add_parser("census", help="evaluate every small labelled complex")
    s.add_argument("--max-vertices", type=int, required=True)
    s.add_argument("--max-dim", type=int, required=True)
    s.add_argument("--assert-absent", action="append", metavar="VALUE",
                   help="fail if VALUE occurs at dimension exactly --max-dim (repeatable)")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="print wall time")
    s.set_defaults(func=cmd_census)

    g = sub.add_parser("grundy", help="nim value of an impartial complex")
    g.add_argument("file")
    g.add_argument("--impartial", action="store_true")
    g.add_argument("--explain", action="store_true")
    g.set_defaults(func=cmd_grundy)

    v = sub.add_parser("verify-paper", help="run the regression checks and golden fixtures")
    v.add_argument("--fixtures", help="fixture directory (default: the packaged one)")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("sp-check", help="commutation check on a complex file or a value expression")
    k.add_argument("target")
    k.set_defaults(func=cmd_sp_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if len(argv) == 2 and argv[0] == "sp-check" and argv[1].startswith("-") and argv[1] not in ("-h", "--help"):
        argv.insert(1, "--")  # negative value expressions such as -1/2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ComplexError, FixtureError, CensusTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
