"""Command-line interface.

Exit status: 0 on success, 1 when a game is not a member of the chosen
universe, 2 on a parse or usage error.
"""

import argparse
import sys

from . import category, compare, lattice, lpg
from .game import outcome
from .normal import canonical_form, format_value
from .notation import SCORING_MODE, TRIVIAL_MODE, ParseError, format_game, parse_game
from .universes import UNIVERSES, NotAMember, get_universe, require_members

EXIT_OK, EXIT_MEMBER, EXIT_PARSE = 0, 1, 2


def _mode(u):
    return SCORING_MODE if u.group == "rational" else TRIVIAL_MODE


def _parse(u, text):
    return parse_game(text, _mode(u))


def _games(u, args, *names):
    gs = [_parse(u, getattr(args, n)) for n in names]
    require_members(u, **dict(zip([n.upper() for n in names], gs)))
    return gs


def cmd_compare(args, out):
    u = args.universe
    if args.batch:
        return _batch(u, args, out)
    g, h = _games(u, args, "g", "h")
    out.write("%s\n" % compare.relation(u, g, h))
    if args.explain:
        for name, (a, b) in (("G>=H", (g, h)), ("H>=G", (h, g))):
            info = compare.explain(u, a, b)
            out.write("%s: %s\n" % (name, "yes" if info["geq"] else "no"))
            out.write("  o(G)=%s  o(H)=%s  proviso=%s  maintain=%s\n"
                      % (info["outcome_g"], info["outcome_h"], info["proviso"],
                         info["maintain"]))
            out.write("  LPG value: %s\n" % info["lpg_value"])
            out.write("  %s\n" % info["reason"])
    if args.oracle:
        cnp = (compare.geq_cnp_oracle(u, g, h), compare.geq_cnp_oracle(u, h, g))
        lpgv = (compare.geq(u, g, h), compare.geq(u, h, g))
        out.write("oracle: %s\n" % ("agrees" if cnp == lpgv else "DISAGREES %s vs %s"
                                    % (cnp, lpgv)))
        for name, (a, b) in (("G>=H", (g, h)), ("H>=G", (h, g))):
            x = compare.distinguish(u, a, b, args.max_rank, args.subset_cap)
            verdict = compare.geq(u, a, b)
            if x is None:
                out.write("distinguish %s: no witness up to rank %d\n" % (name, args.max_rank))
            else:
                note = "" if not verdict else "  (CONTRADICTS geq)"
                out.write("distinguish %s: X = %s%s\n" % (name, format_game(x), note))
    return EXIT_OK


def _batch(u, args, out):
    status = EXIT_OK
    for lineno, line in enumerate(sys.stdin, 1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        try:
            gtext, htext = line.split("\t")
            g, h = _parse(u, gtext), _parse(u, htext)
            out.write("%s\n" % compare.relation(u, g, h))
        except (ParseError, ValueError) as e:
            kind = "not a member" if isinstance(e, NotAMember) else "parse error"
            sys.stderr.write("line %d: %s: %s\n" % (lineno, kind, e))
            out.write("error\n")
            status = max(status, EXIT_MEMBER if isinstance(e, NotAMember) else EXIT_PARSE)
    return status


def cmd_outcome(args, out):
    u = args.universe
    (g,) = _games(u, args, "g")
    out.write("%s\n" % outcome(g, u))
    return EXIT_OK


def cmd_lpg(args, out):
    u = args.universe
    g, h = _games(u, args, "g", "h")
    p = lpg.LpgPosition(g, h, u)
    if args.tree == "dot":
        out.write(lpg.to_dot(p))
    else:
        value = lpg.unfold(p)
        if args.canonical:
            value = canonical_form(value)
        out.write("%s\n" % format_value(value))
    if args.plot:
        from .plotting import plot_lpg_tree

        plot_lpg_tree(p, args.plot)
        sys.stderr.write("wrote %s\n" % args.plot)
    return EXIT_OK


def cmd_hasse(args, out):
    u = args.universe
    forms = lattice.enumerate_forms(u, args.max_rank, subset_cap=args.subset_cap)
    poset = lattice.hasse(u, lattice.quotient(u, forms))
    out.write(lattice.dumps_poset(poset, args.format))
    if args.plot:
        from .plotting import plot_hasse

        plot_hasse(poset, args.plot)
        sys.stderr.write("wrote %s\n" % args.plot)
    return EXIT_OK


def cmd_category(args, out):
    u = args.universe
    if args.witness:
        g, j, h = (_parse(u, t) for t in args.witness)
        require_members(u, G=g, J=j, H=h)
        left = category.extract_strategy(u, g, j)
        right = category.extract_strategy(u, j, h)
        if left is None or right is None or not (compare.geq(u, g, j) and compare.geq(u, j, h)):
            out.write("no witness: need G >= J and J >= H\n")
            return EXIT_MEMBER
        s = category.compose(left, right)
        out.write("strategy on %s (valid: %s)\n" % (s.root, category.validate_strategy(s)))
        out.write(category.format_table(s) + "\n")
        return EXIT_OK
    if not args.verify_laws:
        out.write("nothing to do: pass --verify-laws or --witness G J H\n")
        return EXIT_PARSE
    forms = lattice.enumerate_forms(u, args.max_rank, subset_cap=args.subset_cap)
    reps = [c.representative for c in lattice.quotient(u, forms)]
    report = category.verify_laws(u, reps)
    out.write(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_MEMBER


def build_parser():
    parser = argparse.ArgumentParser(
        prog="abscgt",
        description="Game comparison in absolute universes via the Left Provisional Game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def universe_arg(p):
        p.add_argument("-u", "--universe", required=True, choices=sorted(UNIVERSES),
                       type=str)

    p = sub.add_parser("compare", help="print G=H, G>H, G<H or G<>H")
    universe_arg(p)
    p.add_argument("g", nargs="?")
    p.add_argument("h", nargs="?")
    p.add_argument("--explain", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="also run the Common Normal Part oracle and a bounded refutation search")
    p.add_argument("--batch", action="store_true",
                   help="read tab-separated G, H pairs from stdin")
    p.add_argument("--max-rank", type=int, default=2)
    p.add_argument("--subset-cap", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("outcome", help="outcome class or score pair")
    universe_arg(p)
    p.add_argument("g")
    p.set_defaults(func=cmd_outcome)

    p = sub.add_parser("lpg", help="the Left Provisional Game [G,H]")
    universe_arg(p)
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--tree", choices=["dot"])
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="render the game tree to an image file")
    p.set_defaults(func=cmd_lpg)

    p = sub.add_parser("hasse", help="partial order of members up to a rank")
    universe_arg(p)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--subset-cap", type=int, default=None)
    p.add_argument("--plot", metavar="FILE", help="render the diagram to an image file")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("category", help="check the category laws on maintenance strategies")
    universe_arg(p)
    p.add_argument("--verify-laws", action="store_true")
    p.add_argument("--max-rank", type=int, default=2)
    p.add_argument("--subset-cap", type=int, default=None)
    p.add_argument("--witness", nargs=3, metavar=("G", "J", "H"))
    p.set_defaults(func=cmd_category)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.universe = get_universe(args.universe)
    if args.command == "compare" and not args.batch and (args.g is None or args.h is None):
        parser.error("compare needs G and H (or --batch)")
    try:
        return args.func(args, out)
    except ParseError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return EXIT_PARSE
    except NotAMember as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_MEMBER
    except lattice.RankCapExceeded as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
