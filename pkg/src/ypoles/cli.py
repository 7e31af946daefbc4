"""Command-line front end with machine-readable output.

Each invocation prints either plain text or a single JSON document.
Rationals serialize as [num, den] pairs, spectral points as
[orbit, num, den], multiset entries with a fourth multiplicity field.
Exit codes: 0 success/certified, 1 internal assertion failure,
2 usage error, 3 inconclusive criterion.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ypoles.cartan import InvalidType, build_cartan
from ypoles.coxeter import verify_fuj_her
from ypoles.criteria import cyclic_sufficient, double_admissible, irreducible_sufficient
from ypoles.poles import (
    DrinfeldTuple,
    baxter_fundamental,
    baxter_general,
    kr_sigma,
    sigma_full,
    sigma_irreducible,
    sigma_fundamental,
)
from ypoles.qcartan import qcartan_for
from ypoles.reps import (
    ExplicitModule,
    baxter_from_chain,
    build_sl2_eval,
    build_sln_fundamental,
    maximal_chain,
    poles_of_module,
    verify_relations,
)
from ypoles.selftest import run_all

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _points_json(points) -> list:
    return [p.to_json() for p in sorted(points)]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(text)


def _qc(args):
    return qcartan_for(args.type, args.rank)


def _load_tuple(path: str, rank: int) -> DrinfeldTuple:
    return DrinfeldTuple.load(path, rank)


def _cmd_cartan(args) -> int:
    datum = build_cartan(args.type, args.rank)
    _emit(args, datum.to_json(), "\n".join(
        [f"{datum.family}_{datum.rank}: 2k = {datum.two_kappa}, h_dual = {datum.dual_coxeter}",
         f"d = {list(datum.d)}",
         f"star = {list(datum.star)}",
         "cartan = " + "; ".join(" ".join(f"{x:2d}" for x in row) for row in datum.cartan)]))
    return EXIT_OK


def _cmd_qcartan(args) -> int:
    qc = _qc(args)
    payload = {
        "B": [[e.to_json() for e in row] for row in qc.B],
        "C": [[e.to_json() for e in row] for row in qc.C],
        "v": {f"{i},{j}": qc.vij(i, j).to_json()
              for i in qc.datum.nodes for j in qc.datum.nodes},
    }
    lines = []
    for i in qc.datum.nodes:
        for j in qc.datum.nodes:
            lines.append(f"c_{i}{j} = {qc.C[i-1][j-1].text()}")
            lines.append(f"v_{i}{j}[0..4k] = {list(qc.vij(i, j).coeffs)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_baxter(args) -> int:
    qc = _qc(args)
    if (args.j is None) == (args.drinfeld is None):
        raise InvalidUsage("pass exactly one of --j or --drinfeld")
    if args.j is not None:
        roots = baxter_fundamental(qc, args.i, args.j)
    else:
        roots = baxter_general(qc, _load_tuple(args.drinfeld, args.rank), args.i)
    _emit(args, {"roots": roots.to_json()},
          "Q roots: " + ", ".join(f"{p.orbit}:{p.offset} (x{m})" for p, m in roots.items()))
    return EXIT_OK


def _cmd_poles(args) -> int:
    qc = _qc(args)
    sigma = sigma_fundamental(qc, args.i, args.j)
    _emit(args, {"sigma": _points_json(sigma)},
          "sigma = {" + ", ".join(f"{p.orbit}:{p.offset}" for p in sorted(sigma)) + "}")
    return EXIT_OK


def _cmd_sigma(args) -> int:
    qc = _qc(args)
    tup = _load_tuple(args.drinfeld, args.rank)
    sigma = sigma_irreducible(qc, tup, args.node) if args.node else sigma_full(qc, tup)
    _emit(args, {"sigma": _points_json(sigma)},
          "sigma = {" + ", ".join(f"{p.orbit}:{p.offset}" for p in sorted(sigma)) + "}")
    return EXIT_OK


def _cmd_kr(args) -> int:
    qc = _qc(args)
    sigma = kr_sigma(qc, args.i, args.j, args.ell)
    _emit(args, {"sigma": _points_json(sigma)},
          "sigma = {" + ", ".join(f"{p.orbit}:{p.offset}" for p in sorted(sigma)) + "}")
    return EXIT_OK


def _criterion_result(args, certified: bool, yes: str, no: str) -> int:
    _emit(args, {"result": yes if certified else no, "certified": certified},
          yes if certified else no)
    return EXIT_OK if certified else EXIT_INCONCLUSIVE


def _cmd_cyclic(args) -> int:
    qc = _qc(args)
    ok = cyclic_sufficient(qc, _load_tuple(args.P, args.rank), _load_tuple(args.Q, args.rank))
    return _criterion_result(args, ok, "certified-highest-weight", "inconclusive")


def _cmd_irreducible(args) -> int:
    qc = _qc(args)
    ok = irreducible_sufficient(qc, _load_tuple(args.P, args.rank), _load_tuple(args.Q, args.rank))
    return _criterion_result(args, ok, "certified-irreducible", "inconclusive")


def _cmd_double_admissible(args) -> int:
    qc = _qc(args)
    ok = double_admissible(qc, _load_tuple(args.P, args.rank))
    return _criterion_result(args, ok, "admissible", "not-admissible")


def _module_payload(args, mod: ExplicitModule) -> int:
    payload: dict = {
        "dim": mod.dim,
        "labels": [list(lab) if isinstance(lab, tuple) else lab for lab in mod.labels],
        "currents": {
            which: {str(i): mod.current(i, w).to_json() for i in mod.datum.nodes}
            for which, w in (("xi", "xi"), ("x+", "+"), ("x-", "-"))
        },
    }
    lines = [f"dim = {mod.dim} ({mod.source})"]
    failures = 0
    if args.verify is not None:
        bad = verify_relations(mod, args.verify)
        payload["violations"] = [list(v) for v in bad]
        lines.append(f"relation violations at R={args.verify}: {len(bad)}")
        failures += len(bad)
    if args.chain:
        chain = maximal_chain(mod)
        payload["chain"] = [[k, b.to_json(), n] for k, b, n in chain.steps]
        lines.append("chain: " + " -> ".join(f"(k={k}, b={b.offset}, n={n})"
                                             for k, b, n in chain.steps))
        if args.poles is not None:
            bx = baxter_from_chain(chain, args.poles)
            payload["chain_baxter"] = bx.to_json()
    if args.poles is not None:
        pm = poles_of_module(mod, args.poles)
        payload["poles"] = {"node": args.poles, "orders": pm.to_json()}
        lines.append(f"sigma_{args.poles} = " +
                     ", ".join(f"{p.offset} (order {m})" for p, m in pm.items()))
    _emit(args, payload, "\n".join(lines))
    return EXIT_INTERNAL if failures else EXIT_OK


def _cmd_slnrep(args) -> int:
    mod = build_sln_fundamental(args.n, args.m, args.a)
    return _module_payload(args, mod)


def _cmd_sl2(args) -> int:
    mod = build_sl2_eval(args.r, args.a)
    return _module_payload(args, mod)


def _cmd_coxeter(args) -> int:
    datum = build_cartan(args.type, args.rank)
    if not datum.simply_laced:
        raise InvalidUsage(f"{args.type}_{args.rank} is not simply laced")
    ok = verify_fuj_her(datum)
    _emit(args, {"verified": ok}, "verified" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_INTERNAL


def _cmd_selftest(args) -> int:
    return EXIT_OK if run_all(verbose=True) else EXIT_INTERNAL


class InvalidUsage(ValueError):
    pass


def _add_type_rank(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ypoles", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def new(name: str, fn, help_: str, type_rank: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        if type_rank:
            _add_type_rank(p)
        p.set_defaults(fn=fn)
        return p

    new("cartan", _cmd_cartan, "print the Cartan datum")
    new("qcartan", _cmd_qcartan, "print B(q), C(q) and the v-windows")

    p = new("baxter", _cmd_baxter, "Baxter polynomial roots at one node")
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--drinfeld", help="Drinfeld tuple JSON file")

    p = new("poles", _cmd_poles, "pole set of a fundamental representation")
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--j", required=True, type=int)

    p = new("sigma", _cmd_sigma, "pole set of an irreducible from its Drinfeld tuple")
    p.add_argument("--drinfeld", required=True)
    p.add_argument("--node", type=int)

    p = new("kr", _cmd_kr, "pole set of a Kirillov-Reshetikhin module")
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--j", required=True, type=int)
    p.add_argument("--ell", required=True, type=int)

    p = new("cyclic", _cmd_cyclic, "sufficient cyclicity of L(P) (x) L(Q)")
    p.add_argument("--P", required=True)
    p.add_argument("--Q", required=True)

    p = new("irreducible", _cmd_irreducible, "sufficient irreducibility of L(P) (x) L(Q)")
    p.add_argument("--P", required=True)
    p.add_argument("--Q", required=True)

    p = new("double-admissible", _cmd_double_admissible, "Yangian-double admissibility of L(P)")
    p.add_argument("--P", required=True)

    for name, fn in (("slnrep", _cmd_slnrep), ("sl2", _cmd_sl2)):
        p = sub.add_parser(name, help=f"build explicit {name} modules")
        action = p.add_subparsers(dest="action", required=True)
        b = action.add_parser("build")
        b.add_argument("--json", action="store_true")
        if name == "slnrep":
            b.add_argument("--n", required=True, type=int)
            b.add_argument("--m", required=True, type=int)
        else:
            b.add_argument("--r", required=True, type=int)
        b.add_argument("--a", required=True, type=_fraction)
        b.add_argument("--verify", type=int, metavar="R")
        b.add_argument("--chain", action="store_true")
        b.add_argument("--poles", type=int, metavar="I")
        b.set_defaults(fn=fn)

    p = sub.add_parser("coxeter", help="Coxeter-element verification")
    action = p.add_subparsers(dest="action", required=True)
    v = action.add_parser("verify")
    v.add_argument("--json", action="store_true")
    _add_type_rank(v)
    v.set_defaults(fn=_cmd_coxeter)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_selftest)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidUsage, InvalidType, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
