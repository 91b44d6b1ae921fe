"""Command line frontend.

Every operation is exposed as a subcommand printing canonical JSON on stdout.
Exit status: 0 on success, 1 on usage errors or a failed verify-paper run,
2 on domain errors (reported as {"error": {"code", "message"}}).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import SCHEMA_VERSION, __version__
from .branch import (
    PRESET_NAMES,
    admissible,
    branch_irrep,
    ds_h_mult,
    h_mult,
    subgroup_from_dict,
    subgroup_preset,
)
from .errors import DomainError
from .hermitian import build_pair, kirwan_cone
from .mult import blattner_mult, holo_k_mult, schmid_degree
from .params import blattner_param, chamber_of, chambers, condition_hc
from .serialize import (
    chamber_json,
    decomposition_json,
    dumps,
    pair_json,
    parse_weight,
    verdict_json,
    weight_json,
)
from .verify import ITEMS, run_items


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the error contract reserves 2 for
    domain errors, so usage problems are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    top = _Parser(prog="dsbranch", description=__doc__)
    top.add_argument("--version", action="store_true", help="print version and schema info")

    group = _Parser(add_help=False)
    group.add_argument("--group", choices=("su", "sp"), required=True)
    group.add_argument("--p", type=int)
    group.add_argument("--q", type=int)
    group.add_argument("--n", type=int)

    out = _Parser(add_help=False)
    out.add_argument("--json", action="store_true", help="JSON output (the default)")
    out.add_argument("--pretty", action="store_true", help="indent the JSON output")

    sub_src = _Parser(add_help=False)
    sub_src.add_argument("--subgroup", choices=PRESET_NAMES)
    sub_src.add_argument("--subgroup-file", help="subgroup JSON file, - for stdin")

    cmds = top.add_subparsers(dest="command", metavar="command")

    def cmd(name, *parents, **kw):
        return cmds.add_parser(name, parents=[group, out, *parents], **kw)

    cmd("pair", help="cascade, cone, rho and z0 data of a pair")
    cmd("cascade", help="strongly orthogonal cascade")
    cmd("cone", help="asymptotic cone generators")
    cmd("chambers", help="coherent chambers with their rho_n shifts")

    c = cmd("blattner-param", help="lowest K-type parameter of a discrete series")
    c.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")
    c = cmd("condition", help="sign condition linking lambda to its lowest K-type")
    c.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")

    c = cmd("schmid", help="highest weights of a symmetric power of p+")
    c.add_argument("--degree", type=int, required=True)

    c = cmd("kmult", help="K-type multiplicity in a holomorphic discrete series")
    c.add_argument("--Lambda", dest="big", required=True, metavar="COORDS")
    c.add_argument("--mu", required=True, metavar="COORDS")
    c = cmd("blattner", help="K-type multiplicity from the alternating Weyl sum")
    c.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")
    c.add_argument("--mu", required=True, metavar="COORDS")

    c = cmd("branch", sub_src, help="restrict a K-irreducible to a subgroup")
    c.add_argument("--weight", required=True, metavar="COORDS")

    c = cmd("admissible", sub_src, help="decide admissibility of a restriction")
    c.add_argument("--truncate", type=int, default=6, metavar="N")

    c = cmd("hmult", sub_src, help="H-multiplicity in a holomorphic discrete series")
    c.add_argument("--Lambda", dest="big", required=True, metavar="COORDS")
    c.add_argument("--mu", required=True, metavar="COORDS")
    c.add_argument("--cutoff", type=int, default=8, metavar="D")

    c = cmd("ds-hmult", sub_src, help="H-multiplicity in a general discrete series")
    c.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")
    c.add_argument("--mu", required=True, metavar="COORDS")
    c.add_argument("--cutoff", type=int, default=8, metavar="D")

    c = cmds.add_parser("verify-paper", parents=[out], help="run the golden example suite")
    c.add_argument(
        "--item",
        action="append",
        metavar="NAME",
        choices=[name for name, _ in ITEMS],
    )
    return top


def _pair_of(parser: _Parser, args):
    if args.group == "su":
        if args.p is None or args.q is None:
            parser.error("--group su requires --p and --q")
        if args.n is not None:
            parser.error("--n does not apply to --group su")
        return build_pair("su", p=args.p, q=args.q)
    if args.n is None:
        parser.error("--group sp requires --n")
    if args.p is not None or args.q is not None:
        parser.error("--p/--q do not apply to --group sp")
    return build_pair("sp", n=args.n)


def _t_weight(pair, text: str):
    return parse_weight(text, pair.root_datum.ambient_dim, pair.root_datum.quotient)


def _subgroup_of(parser: _Parser, pair, args):
    if (args.subgroup is None) == (args.subgroup_file is None):
        parser.error("exactly one of --subgroup / --subgroup-file is required")
    if args.subgroup is not None:
        return subgroup_preset(pair, args.subgroup)
    try:
        if args.subgroup_file == "-":
            text = sys.stdin.read()
        else:
            with open(args.subgroup_file, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DomainError("bad-input", f"cannot read subgroup file: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError("bad-input", f"subgroup file is not valid JSON: {exc}")
    return subgroup_from_dict(pair, data)


def _dispatch(parser: _Parser, args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "verify-paper":
        report = run_items(args.item)
        return report, 0 if report["ok"] else 1

    pair = _pair_of(parser, args)
    if cmd == "pair":
        return pair_json(pair), 0
    if cmd == "cascade":
        return {"cascade": [weight_json(g) for g in pair.cascade]}, 0
    if cmd == "cone":
        return {"generators": [weight_json(g) for g in kirwan_cone(pair)]}, 0
    if cmd == "chambers":
        return {"chambers": [chamber_json(c) for c in chambers(pair)]}, 0
    if cmd == "blattner-param":
        lam = _t_weight(pair, args.lam)
        big = blattner_param(pair, lam)
        return {"Lambda": weight_json(big), "condition_1_2": condition_hc(pair, lam)}, 0
    if cmd == "condition":
        lam = _t_weight(pair, args.lam)
        return {
            "chamber": chamber_of(pair, lam).id,
            "condition_1_2": condition_hc(pair, lam),
        }, 0
    if cmd == "schmid":
        if args.degree < 0:
            raise DomainError("bad-input", "--degree must be nonnegative")
        return decomposition_json(schmid_degree(pair, args.degree)), 0
    if cmd == "kmult":
        big = _t_weight(pair, args.big)
        mu = _t_weight(pair, args.mu)
        return {"mult": holo_k_mult(pair, big, mu)}, 0
    if cmd == "blattner":
        lam = _t_weight(pair, args.lam)
        mu = _t_weight(pair, args.mu)
        return {"mult": blattner_mult(pair, lam, mu)}, 0

    sub = _subgroup_of(parser, pair, args)
    if cmd == "branch":
        w = _t_weight(pair, args.weight)
        return decomposition_json(branch_irrep(pair, sub, w)), 0
    if cmd == "admissible":
        if args.truncate < 0:
            raise DomainError("bad-input", "--truncate must be nonnegative")
        return verdict_json(admissible(pair, sub, args.truncate)), 0
    mu = parse_weight(args.mu, sub.h_dim, sub.h_quotient)
    if args.cutoff < 0:
        raise DomainError("bad-input", "--cutoff must be nonnegative")
    if cmd == "hmult":
        big = _t_weight(pair, args.big)
        value, complete = h_mult(pair, big, sub, mu, cutoff_D=args.cutoff)
    else:
        lam = _t_weight(pair, args.lam)
        value, complete = ds_h_mult(pair, lam, sub, mu, cutoff_D=args.cutoff)
    return {"complete": complete, "mult": value}, 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(sys.argv[1:] if argv is None else list(argv))
    pretty = getattr(args, "pretty", False)
    if args.version:
        print(dumps({"schema_version": SCHEMA_VERSION, "version": __version__}, pretty))
        return 0
    if args.command is None:
        parser.error("a command is required")
    try:
        payload, code = _dispatch(parser, args)
    except DomainError as exc:
        print(dumps({"error": {"code": exc.code, "message": exc.message}}, pretty))
        return 2
    print(dumps(payload, pretty))
    return code
