"""
Command-line front end.

Exit codes: 0 success / positive or unconditional verdict, 1 negative or
undetermined verdict, 2 verdict that holds only under a named hypothesis,
64 unparsable input, 65 input outside an operation's domain.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .arith import Frac, PreconditionError, frac_to_cf
from .montesinos import MontesinosLink, double_branched_cover, m_normalize
from .parse import ParseError, parse_montesinos, parse_seifert, parse_slope
from .seifert import (
    SeifertInvariants,
    cable_surgery_slope,
    fiber_multiplicities,
    homology_order,
    torus_knot_surgery,
)
from .tangle import (
    connectivity,
    is_proper_rtr,
    slope_distance,
    twist_word_from_slope,
    unknotting_sequence,
)
from .uq import TorusFormWitness, classify_uq

EX_OK, EX_NEGATIVE, EX_CONDITIONAL = 0, 1, 2
EX_USAGE, EX_DATAERR = 64, 65

FORMAT_ENV = "RTRKIT_FORMAT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # negative slopes such as -1/1 are positionals, not options
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")

    def error(self, message):
        raise UsageError(message)


def _slope(text: str) -> Frac:
    return parse_slope(text)


def _montesinos(text: str) -> MontesinosLink:
    if text.lstrip().startswith("{"):
        return MontesinosLink.from_json(json.loads(text))
    return parse_montesinos(text)


def _seifert(text: str) -> SeifertInvariants:
    if text.lstrip().startswith("{"):
        return SeifertInvariants.from_json(json.loads(text))
    return parse_seifert(text)


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload))
    elif text:
        print(text)


def cmd_tangle_cf(args):
    x = _slope(args.slope)
    cf = frac_to_cf(x)
    w = twist_word_from_slope(x)
    payload = {
        "slope": str(x),
        "cf": list(cf),
        "twist_word": {"base": str(w.base), "moves": [[a.value, n] for a, n in w.moves]},
    }
    _emit(args, "[" + ", ".join(map(str, cf)) + "]", payload)
    return EX_OK


def cmd_tangle_conn(args):
    x = _slope(args.slope)
    c = connectivity(x).value
    _emit(args, c, {"slope": str(x), "connectivity": c})
    return EX_OK


def cmd_tangle_proper(args):
    old, new = _slope(args.old), _slope(args.new)
    ok = is_proper_rtr(old, new)
    dist = slope_distance(old, new)
    word = "proper" if ok else "improper"
    _emit(args, f"{word} (distance {dist})",
          {"old": str(old), "new": str(new), "proper": ok, "distance": dist})
    return EX_OK if ok else EX_NEGATIVE


def cmd_tangle_dist(args):
    a, b = _slope(args.a), _slope(args.b)
    d = slope_distance(a, b)
    _emit(args, str(d), {"alpha": str(a), "beta": str(b), "distance": d})
    return EX_OK


def cmd_tangle_unknot(args):
    steps = unknotting_sequence(_slope(args.slope))
    lines = []
    for s in steps:
        flag = "  reflected" if s.reflected else ""
        lines.append(f"{s.before} -> {s.after}  n={s.n} r={s.r}{flag}")
    _emit(args, "\n".join(lines), [s.to_json() for s in steps])
    return EX_OK


def cmd_mont_normalize(args):
    K = m_normalize(_montesinos(args.link))
    _emit(args, str(K), K.to_json())
    return EX_OK


def cmd_mont_cover(args):
    S = double_branched_cover(_montesinos(args.link))
    _emit(args, str(S), S.to_json())
    return EX_OK


def _verdict_text(v) -> str:
    head = f"u_q = {v.lower}" if v.exact else f"u_q in [{v.lower}, {v.upper}]"
    lines = [head]
    for h in v.hypotheses:
        lines.append(f"  assuming: {h}")
    for c in v.certificates:
        if isinstance(c, TorusFormWitness):
            lines.append(
                f"  torus form: {c.presentation()}  (b*c + a*d = {c.sign:+d})"
            )
        else:
            for m in c:
                lines.append(f"  move: {m.link} [{m.index}] {m.old} -> {m.new}")
    return "\n".join(lines)


def cmd_mont_classify(args):
    K = _montesinos(args.link)
    v = classify_uq(K, args.u_lower, args.assume_conjecture)
    _emit(args, _verdict_text(v), v.to_json())
    if not v.exact:
        return EX_NEGATIVE
    return EX_CONDITIONAL if v.hypotheses else EX_OK


def cmd_sfs_homology(args):
    S = _seifert(args.space)
    h = homology_order(S)
    _emit(args, str(h), {"seifert": S.to_json(), "h1": h})
    return EX_OK


def cmd_sfs_torus(args):
    S = torus_knot_surgery(_int(args.a), _int(args.c), _slope(args.slope))
    h = homology_order(S)
    mult = fiber_multiplicities(S)
    _emit(args, f"{S}  h1={h}", {"seifert": S.to_json(), "fibers": mult, "h1": h})
    return EX_OK


def cmd_sfs_cable(args):
    x = cable_surgery_slope(_int(args.alpha), _int(args.beta), _slope(args.slope))
    _emit(args, str(x), {"slope": str(x)})
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    default_json = os.environ.get(FORMAT_ENV, "").lower() == "json"
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=default_json,
                        help=f"JSON output (default from ${FORMAT_ENV})")

    parser = _Parser(prog="rtrkit", description="Proper rational tangle replacement calculator")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, func, *positionals, help=None):
        p = group.add_parser(name, parents=[common], help=help)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(func=func)
        return p

    tangle = groups.add_parser("tangle", help="rational tangle operations").add_subparsers(
        dest="cmd", required=True)
    sub(tangle, "cf", cmd_tangle_cf, "slope", help="continued fraction and twist word")
    sub(tangle, "conn", cmd_tangle_conn, "slope", help="endpoint connectivity")
    sub(tangle, "proper", cmd_tangle_proper, "old", "new", help="is R(old) -> R(new) proper")
    sub(tangle, "dist", cmd_tangle_dist, "a", "b", help="slope distance")
    sub(tangle, "unknot", cmd_tangle_unknot, "slope", help="crossing changes to R(1/0)")

    mont = groups.add_parser("mont", help="Montesinos links").add_subparsers(dest="cmd", required=True)
    sub(mont, "normalize", cmd_mont_normalize, "link")
    sub(mont, "cover", cmd_mont_cover, "link", help="double branched cover")
    p = sub(mont, "classify", cmd_mont_classify, "link", help="bounds on u_q")
    p.add_argument("--u-lower", type=int, default=None,
                   help="known lower bound on the classical unknotting number")
    p.add_argument("--assume-conjecture", action="store_true",
                   help="assume the three-tangle torus-form criterion is exact")

    sfs = groups.add_parser("sfs", help="Seifert fibred spaces").add_subparsers(dest="cmd", required=True)
    sub(sfs, "homology", cmd_sfs_homology, "space", help="|H_1|, 0 if infinite")
    sub(sfs, "torus-surgery", cmd_sfs_torus, "a", "c", "slope",
        help="surgery on T(a, c); a < 0 for negative torus knots")
    sub(sfs, "cable-slope", cmd_sfs_cable, "alpha", "beta", "slope",
        help="cable surgery slope on the companion")
    return parser


def run(argv=None, stdout=None) -> int:
    """Run one command; returns the exit code."""
    if stdout is not None:
        old, sys.stdout = sys.stdout, stdout
    try:
        try:
            args = build_parser().parse_args(argv)
            return args.func(args)
        except ParseError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EX_USAGE
        except (UsageError, json.JSONDecodeError, KeyError) as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return EX_USAGE
        except PreconditionError as exc:
            print(f"precondition violated: {exc}", file=sys.stderr)
            return EX_DATAERR
    finally:
        if stdout is not None:
            sys.stdout = old


def main() -> None:
    sys.exit(run())
