"""Command-line front end.

    ahl kostka --level 2 --p 2 --depth 4 --format csv
    ahl string --level 2 --p 1 --order 20
    ahl verify --id THM2 --order 20
    ahl verify-all --order 10
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .affine import DominantWeight, orbit_sum
from .formal import mu_kernel
from .hall import hl_pi_route, kostka_table, t_string
from .identities import CATALOG, verify_all, verify_identity
from .qseries import QSeries

COMMANDS = ["kostka", "string", "hl", "ct", "specialize", "verify", "verify-all"]
DEFAULT_SIZE = 10


class UsageError(Exception):
    pass


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--out", default=None, help="output path (default: standard output)")

    weight = _Parser(add_help=False)
    weight.add_argument("--level", type=_nonneg, required=True)
    weight.add_argument("--p", type=_nonneg, required=True)

    mu = _Parser(add_help=False)
    mu.add_argument("--mu-m", type=_nonneg, default=0)
    mu.add_argument("--mu-n", type=_nonneg, default=0)

    order = _Parser(add_help=False)
    order.add_argument("--order", type=_nonneg, default=DEFAULT_SIZE)

    parser = _Parser(prog="ahl", description="Affine Hall-Littlewood computations for A_1^(1).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("kostka", parents=[common, weight], help="Kostka-Foulkes table")
    p.add_argument("--depth", type=_nonneg, default=DEFAULT_SIZE)
    p.add_argument("--box", type=_nonneg, default=None)
    sub.add_parser("string", parents=[common, weight, mu, order], help="t-string function")
    p = sub.add_parser("hl", parents=[common, weight], help="e^{-lambda} P_lambda on a box")
    p.add_argument("--box", type=_nonneg, default=DEFAULT_SIZE)
    sub.add_parser("ct", parents=[common, weight, mu, order], help="ct of the real-root kernel times an orbit sum")
    sub.add_parser("specialize", parents=[common, weight, order], help="principal specialization of P_lambda")
    p = sub.add_parser("verify", parents=[common, order], help="check one identity")
    p.add_argument("--id", required=True)
    sub.add_parser("verify-all", parents=[common, order], help="check the whole catalog")
    return parser


def _weight(args):
    if args.p > args.level:
        raise UsageError(f"(level={args.level}, p={args.p}) is not dominant: need 0 <= p <= level")
    return DominantWeight(args.level, args.p)


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj):
    return json.dumps(obj, sort_keys=False) + "\n"


def _series_doc(s: QSeries, fmt):
    if fmt == "json":
        return _json(s.to_dict())
    if fmt == "csv":
        return _csv(["exp2", "coeff"], [[e, str(c)] for e, c in sorted(s.terms.items())])
    lines = [f"{s.var}^({e}/2): {c}" if e % 2 else f"{s.var}^{e // 2}: {c}" for e, c in sorted(s.terms.items())]
    tr = f"{s.trunc // 2}" if s.trunc % 2 == 0 else f"({s.trunc}/2)"
    lines.append(f"known through {s.var}^{tr}")
    return "\n".join(lines) + "\n"


def _cone_doc(c, fmt):
    if fmt == "json":
        return _json(c.to_dict())
    rows = [[m, n, str(c.terms[(m, n)])] for (m, n) in sorted(c.terms)]
    if fmt == "csv":
        return _csv(["m", "n", "coeff"], rows)
    return "".join(f"x0^{m} x1^{n}: {v}\n" for m, n, v in rows) + f"box {c.box}\n"


def _reports_doc(reports, fmt):
    if fmt == "json":
        if len(reports) == 1:
            return _json(reports[0].to_dict())
        return _json([r.to_dict() for r in reports])
    if fmt == "csv":
        rows = []
        for r in reports:
            d = r.to_dict()
            mm = "" if d["first_mismatch"] is None else json.dumps(d["first_mismatch"])
            rows.append([d["id"], d["order"], d["status"], mm, d["elapsed_ms"]])
        return _csv(["id", "order", "status", "first_mismatch", "elapsed_ms"], rows)
    width = max(len(r.id) for r in reports)
    lines = []
    for r in reports:
        extra = "" if r.passed else f"  first mismatch at {r.first_mismatch}"
        lines.append(f"{r.id:<{width}}  {r.status}  order {r.order}{extra}")
    npass = sum(r.passed for r in reports)
    if len(reports) > 1:
        lines.append(f"{npass}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def _threads():
    raw = os.environ.get("AHL_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"AHL_THREADS must be a positive integer, got {raw!r}") from None
    return max(1, n)


def _execute(args):
    """Return ``(document, exit_code)``."""
    fmt = args.format
    cmd = args.command
    if cmd == "kostka":
        lam = _weight(args)
        if lam.level == 0:
            raise UsageError("kostka needs level >= 1")
        tab = kostka_table(lam, args.depth, args.box)
        rows = [[off.m, off.n, str(k)] for off, _, k in tab.rows()]
        if fmt == "csv":
            return _csv(["mu_m", "mu_n", "K"], rows), 0
        if fmt == "json":
            return _json({"lambda": {"level": lam.level, "p": lam.p}, "depth": args.depth,
                          "entries": [{"mu_m": m, "mu_n": n, "K": k} for m, n, k in rows]}), 0
        return "".join(f"mu = lambda - {m}a0 - {n}a1: {k}\n" for m, n, k in rows), 0
    if cmd == "string":
        lam = _weight(args)
        try:
            s = t_string(lam, (args.mu_m, args.mu_n), args.order)
        except ValueError as e:
            raise UsageError(str(e)) from None
        return _series_doc(s, fmt), 0
    if cmd == "hl":
        lam = _weight(args)
        if lam.level == 0:
            raise UsageError("level-0 Hall-Littlewood not supported; use ct/specialization routes")
        return _cone_doc(hl_pi_route(lam, args.box), fmt), 0
    if cmd == "ct":
        lam = _weight(args)
        n = args.order
        box = n + max(args.mu_m, args.mu_n)
        th = orbit_sum(lam, box).shift(args.mu_m, args.mu_n)
        d = (mu_kernel(box) * th)
        s = QSeries({2 * k: d[(k, k)] for k in range(n + 1)}, 2 * n, "q")
        return _series_doc(s, fmt), 0
    if cmd == "specialize":
        lam = _weight(args)
        if lam.level == 0:
            from .identities import ps_from_sum

            s = ps_from_sum(0, 0, args.order, t_order=args.order)
        else:
            s = hl_pi_route(lam, args.order).principal_spec()
        return _series_doc(s, fmt), 0
    if cmd == "verify":
        if args.id not in CATALOG:
            raise UsageError(f"unknown identity {args.id!r}; valid: {', '.join(CATALOG)}")
        r = verify_identity(args.id, args.order)
        return _reports_doc([r], fmt), 0 if r.passed else 1
    if cmd == "verify-all":
        reports = verify_all(args.order, threads=_threads())
        return _reports_doc(reports, fmt), 0 if all(r.passed for r in reports) else 1
    raise UsageError(f"unknown command {cmd!r}; valid: {', '.join(COMMANDS)}")


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
            raise UsageError(f"unknown command {argv[0]!r}; valid: {', '.join(COMMANDS)}")
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as e:  # --help
            return int(e.code or 0)
        doc, code = _execute(args)
    except UsageError as e:
        print(str(e), file=stderr)
        return 2
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(doc)
    else:
        stdout.write(doc)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
