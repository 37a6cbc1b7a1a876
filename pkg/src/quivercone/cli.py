"""Command-line interface.

Plain deterministic text output, no terminal styling.  Exit codes: 0 on
success (for the membership commands: member), 1 for a negative membership
or selftest disagreement, 2 for any parse or validation failure, 3 when an
enumeration or LP cap is exceeded.  Every error path prints a single line
``ERROR <code>: <message>`` to stderr.  Randomized subcommands require an
explicit --seed; there is no wall-clock default.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import cone as cone_mod
from . import horn as horn_mod
from . import lr as lr_mod
from . import oracle as oracle_mod
from . import sweeps
from .errors import CapExceededError, QuiverConeError
from .euler import eul
from .model import format_subfamily, parse_quiver, parse_subfamily, subquotient

EXIT_NOT_MEMBER = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise QuiverConeError(f"cannot read {path}: {exc.strerror}") from None


def _load(path):
    return parse_quiver(_read(path))


def _parse_sigma(text, quiver):
    sigma = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise QuiverConeError(f"bad sigma chunk {chunk!r}, expected name=value")
        name, _, val = chunk.partition("=")
        name = name.strip()
        if name in sigma:
            raise QuiverConeError(f"duplicate vertex {name!r} in sigma")
        try:
            sigma[name] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise QuiverConeError(f"bad sigma value {val!r}") from None
    for v in quiver.vertices:
        if v not in sigma:
            raise QuiverConeError(f"sigma misses vertex {v!r}")
    return sigma


def _cmd_horn(args):
    quiver, family = _load(args.file)
    pairs = horn_mod.horn_families(
        quiver, family, memo=not args.no_memo, cap=args.cap
    )
    for sub, e in pairs:
        if args.essential and e != 0:
            continue
        print(f"K\t{format_subfamily(sub)}\teul={e}")
    return 0


def _cmd_inequalities(args):
    quiver, family = _load(args.file)
    equality, records = cone_mod.cone_inequalities(
        quiver, family, essential_only=args.essential, cap=args.cap
    )
    if args.prune:
        records = cone_mod.prune_redundant(equality, records)
    print(equality.render())
    for rec in records:
        print(rec.render())
    return 0


def _cmd_check(args):
    quiver, family = _load(args.file)
    weight = cone_mod.parse_weight_file(_read(args.weights), family)
    ok, reason = cone_mod.cone_membership(quiver, family, weight, cap=args.cap)
    if ok:
        print("MEMBER")
        return 0
    print(f"NOT-MEMBER\t{reason}")
    return EXIT_NOT_MEMBER


def _cmd_sigma(args):
    quiver, family = _load(args.file)
    equality, records = cone_mod.sigma_inequalities(quiver, family, cap=args.cap)
    print(equality.render())
    for rec in records:
        print(rec.render())
    return 0


def _cmd_sigma_check(args):
    quiver, family = _load(args.file)
    sigma = _parse_sigma(args.sigma, quiver)
    ok = cone_mod.sigma_contains(quiver, family, sigma, cap=args.cap)
    print("MEMBER" if ok else "NOT-MEMBER")
    return 0 if ok else EXIT_NOT_MEMBER


def _cmd_classify(args):
    quiver, family = _load(args.file)
    sub = parse_subfamily(args.K, family)
    fv, fw = subquotient(family, sub)
    report = cone_mod.classify_element(quiver, family, sub, cap=args.cap)
    print(f"K\t{format_subfamily(sub)}")
    print(f"eul\t{eul(quiver, fv, fw)}")
    print(f"admissible\t{int(report.admissible)}")
    print(f"covering\t{int(report.covering)}")
    print(f"ressayre\t{int(report.ressayre)}")
    print(f"horn_element\t{int(report.horn_element)}")
    return 0


def _cmd_oracle(args):
    quiver, family = _load(args.file)
    sub = parse_subfamily(args.K, family)
    fv, fw = subquotient(family, sub)
    report = oracle_mod.delta_report(
        quiver, fv, fw, args.trials, args.seed, p=args.prime
    )
    print(f"K\t{format_subfamily(sub)}")
    print(f"rows\t{report.rows}")
    print(f"cols\t{report.cols}")
    print(f"eul\t{report.eul}")
    print(f"rank\t{report.rank}")
    print(f"hom_min\t{report.hom_min}")
    print(f"ext_min\t{report.ext_min}")
    if report.det_nonzero is not None:
        print(f"det_nonzero\t{int(report.det_nonzero)}")
    return 0


def _cmd_selftest(args):
    if args.file is None and args.sweep is None:
        raise QuiverConeError("selftest needs a quiver file or --sweep")
    if args.file is not None:
        quiver, family = _load(args.file)
        report = oracle_mod.theorem_harness(
            quiver,
            family,
            args.mode,
            trials=args.trials,
            seed=args.seed,
            p=args.prime,
            cap=args.cap,
        )
        for line in report.lines:
            print(line)
        print(report.summary())
        return 0 if report.ok else EXIT_NOT_MEMBER

    try:
        max_v, max_a, max_n = (int(t) for t in args.sweep.split(","))
    except ValueError:
        raise QuiverConeError(
            f"bad --sweep {args.sweep!r}, expected V,A,N"
        ) from None
    agreements = 0
    total = 0
    for qi, quiver in enumerate(sweeps.iter_quivers(max_v, max_a)):
        table = horn_mod.HornTable(quiver, cap=args.cap)
        for family in sweeps.iter_canonical_families(quiver, max_n):
            report = oracle_mod.theorem_harness(
                quiver,
                family,
                args.mode,
                trials=args.trials,
                seed=args.seed,
                p=args.prime,
                table=table,
                cap=args.cap,
            )
            agreements += report.agreements
            total += report.total
            if not report.ok:
                dims = ",".join(str(len(family[v])) for v in quiver.vertices)
                for line in report.lines:
                    if line.endswith("agree=0"):
                        print(f"DISAGREE q={qi} dims={dims} {line}")
    print(f"AGREEMENTS {agreements}/{total}")
    return 0 if agreements == total else EXIT_NOT_MEMBER


def _cmd_lr(args):
    lam = lr_mod.Partition.parse(args.lam)
    mu = lr_mod.Partition.parse(args.mu)
    if args.nu is not None:
        nu = lr_mod.Partition.parse(args.nu)
        print(lr_mod.lr_coefficient(lam, mu, nu))
        return 0
    for nu, c in lr_mod.lr_expansion(lam, mu):
        print(f"NU\t{nu}\t{c}")
    return 0


def _cmd_star_check(args):
    if len(args.lam) != args.s:
        raise QuiverConeError(
            f"star-check needs exactly --s lam options ({args.s}), got {len(args.lam)}"
        )
    lams = [lr_mod.Partition.parse(t) for t in args.lam]
    mu = lr_mod.Partition.parse(args.mu)
    result = lr_mod.star_cone_check(args.n, args.s, lams, mu)
    print(f"LR\t{int(result.lr_positive)}")
    print(f"CONE\t{int(result.cone_member)}")
    print(f"AGREE\t{int(result.agree)}")
    return 0 if result.agree else EXIT_NOT_MEMBER


def _add_cap(parser):
    parser.add_argument(
        "--cap",
        type=int,
        default=horn_mod.DEFAULT_CAP,
        help="subfamily enumeration cap (default 2**24)",
    )


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose errors carry the machine-parsable ERROR prefix."""

    def error(self, message):
        self.exit(EXIT_INPUT, f"ERROR {EXIT_INPUT}: {message}\n")


def build_parser():
    parser = _Parser(
        prog="quivercone",
        description=(
            "Exact Horn-set and cone computations for acyclic quivers, with "
            "randomized rank and Littlewood-Richardson cross-checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("horn", help="list Horn subfamilies with eul values")
    p.add_argument("file")
    p.add_argument("--essential", action="store_true")
    p.add_argument("--no-memo", action="store_true", help="reference recursion (slow)")
    _add_cap(p)
    p.set_defaults(func=_cmd_horn)

    p = sub.add_parser("inequalities", help="emit the cone equality and inequalities")
    p.add_argument("file")
    p.add_argument("--essential", action="store_true")
    p.add_argument("--prune", action="store_true")
    _add_cap(p)
    p.set_defaults(func=_cmd_inequalities)

    p = sub.add_parser("check", help="cone membership of a weight file")
    p.add_argument("file")
    p.add_argument("--weights", required=True)
    _add_cap(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("sigma", help="emit the cardinality-projected system")
    p.add_argument("file")
    _add_cap(p)
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("sigma-check", help="membership in the projected subcone")
    p.add_argument("file")
    p.add_argument("--sigma", required=True, help="per-vertex values, e.g. x=1,y=-1")
    _add_cap(p)
    p.set_defaults(func=_cmd_sigma_check)

    p = sub.add_parser("classify", help="covering/ressayre/horn-element report")
    p.add_argument("file")
    p.add_argument("--K", required=True, help="subfamily literal, e.g. x:1,3;y:2")
    _add_cap(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("oracle", help="rank/ext/det report for a subfamily")
    p.add_argument("file")
    p.add_argument("--K", required=True)
    p.add_argument("--trials", type=int, default=oracle_mod.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--prime", type=int, default=oracle_mod.DEFAULT_PRIME)
    _add_cap(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("selftest", help="recursion-vs-oracle agreement report")
    p.add_argument("file", nargs="?")
    p.add_argument("--sweep", help="V,A,N: sweep all quivers/families up to bounds")
    p.add_argument("--mode", choices=("theo1", "theo2", "theo3"), default="theo1")
    p.add_argument("--trials", type=int, default=oracle_mod.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--prime", type=int, default=oracle_mod.DEFAULT_PRIME)
    _add_cap(p)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu")
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("star-check", help="tensor multiplicity vs cone membership")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--lam", action="append", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=_cmd_star_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"ERROR {EXIT_CAP}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except QuiverConeError as exc:
        print(f"ERROR {EXIT_INPUT}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
