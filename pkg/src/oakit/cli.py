"""Command-line interface: verify, bounds, audit, and search as batch runs.

Every command prints a machine-readable report headed by `#REPORT v1`.
Exit codes: 0 = success / all checks hold, 1 = a check failed or nothing
exists, 2 = usage or input-format error, 3 = a search budget ran out.
Search output doubles as a valid array file (metadata on `#` comment
lines), so a printed witness feeds straight back into `verify`.

The environment variable OAKIT_CEILING overrides the default row ceiling
of the search commands.
"""

import argparse
import os
import sys
from fractions import Fraction

from .arrays import (
    format_oa,
    normalize_to_row,
    parse_oa,
    row_multiplicities,
    strength_lambda,
)
from .bounds import (
    DesignParameters,
    OAParameters,
    bibd_bounds,
    equality_abar,
    max_multiplicity,
    mqw_min_rows,
    pb_min_lambda,
    rao_min_rows,
    rr_min_lambda,
)
from .certificates import (
    cwc_certificate,
    gram_certificate,
    incidence_matrix,
    orthogonality_certificate,
    rank_bound_certificate,
    root_vector_family,
    shortened_family_certificate,
    to_transversal_design,
    variance_audit,
)
from .errors import (
    AuditFailure,
    BudgetExceeded,
    CeilingExceeded,
    FormatError,
    NonintegralIndex,
    NotAnOA,
    OakitError,
)
from .search import (
    BUDGET_EXCEEDED,
    DEFAULT_CEILING,
    EXHAUSTED,
    FOUND,
    SearchProblem,
    search_oa,
)

REPORT_HEADER = "#REPORT v1"

AUDIT_METHODS = ("variance", "td-rank", "gram", "roots", "shortened", "cwc")


class _UsageError(Exception):
    pass


def _fmt(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x)) if isinstance(x, Fraction) else str(x)


def _verdict(result):
    if not result.applicable:
        return "INAPPLICABLE"
    if result.satisfied is None:
        return None
    if result.tight:
        return "TIGHT"
    return "SATISFIED" if result.satisfied else "VIOLATED"


def _bound_line(result):
    parts = ["bound", result.formula, _fmt(result.value), str(result.integer_form)]
    verdict = _verdict(result)
    if verdict is not None:
        parts.append(verdict)
    return " ".join(parts)


def _emit(lines):
    print("\n".join([REPORT_HEADER] + list(lines)))


def _read_array(path):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_oa(text)


def _ceiling():
    raw = os.environ.get("OAKIT_CEILING")
    if raw is None:
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"OAKIT_CEILING must be an integer, got {raw!r}") from None
    if value < 1:
        raise _UsageError("OAKIT_CEILING must be positive")
    return value


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args):
    array = _read_array(args.file)
    if not 2 <= args.strength <= array.k:
        raise _UsageError(f"strength must be in 2..{array.k} for this file")
    lines = [f"n {array.n}", f"k {array.k}", f"N {array.N}", f"strength {args.strength}"]
    try:
        lam = strength_lambda(array, args.strength)
    except NonintegralIndex as exc:
        lines.append("error non-integral-index")
        lines.append(f"detail {array.N} rows not divisible by {array.n}^{args.strength}")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    except NotAnOA as exc:
        lines.append("error not-an-oa")
        lines.append(f"columns {','.join(map(str, exc.columns))}")
        lines.append(f"tuple {','.join(map(str, exc.tup))}")
        lines.append(f"count {exc.count}")
        lines.append(f"expected {exc.expected}")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    census = row_multiplicities(array)
    lines.append(f"lambda {lam}")
    lines.append(f"distinct-rows {len(census.counts)}")
    lines.append(f"max-multiplicity {census.max_multiplicity}")
    lines.append(f"witness-row {census.witness_index}")
    lam2 = array.N // (array.n * array.n)
    bound = max_multiplicity(array.k, array.n, lam2, m=census.max_multiplicity)
    lines.append(_bound_line(bound))
    _emit(lines)
    return 0 if bound.satisfied else 1


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def _parse_design(text):
    parts = text.split(",")
    if len(parts) != 7:
        raise _UsageError("--design expects v,k,lambda,b,t,s,m")
    try:
        v, k, lam, b, t, s, m = (int(p) for p in parts)
    except ValueError:
        raise _UsageError("--design fields must be integers") from None
    try:
        return DesignParameters(v, k, lam, b=b, t=t, s=s, m=m)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def cmd_bounds(args):
    if args.design is not None:
        if any(x is not None for x in (args.t, args.k, args.n, args.lam, args.m)):
            raise _UsageError("--design cannot be combined with array parameters")
        params = _parse_design(args.design)
        results = bibd_bounds(params)
        lines = [
            f"design v={params.v} k={params.k} lambda={params.lam} b={params.b} "
            f"t={params.t} s={params.s} m={params.m}"
        ]
        lines.extend(_bound_line(r) for r in results)
        _emit(lines)
        violated = any(r.applicable and r.satisfied is False for r in results)
        return 1 if violated else 0

    if args.t is None or args.k is None or args.n is None:
        raise _UsageError("need --t, --k and --n (or --design)")
    t, k, n, lam, m = args.t, args.k, args.n, args.lam, args.m
    try:
        if lam is not None:
            OAParameters(t, k, n, lam, m if m is not None else 1)
        else:
            if t < 2 or not t <= k or n < 2:
                raise ValueError("need t >= 2, t <= k, n >= 2")
            if m is not None and m < 1:
                raise ValueError("multiplicity m must be at least 1")
    except ValueError as exc:
        raise _UsageError(str(exc)) from None

    results = [pb_min_lambda(k, n, lam)]
    if m is not None:
        results.append(rr_min_lambda(k, n, m, lam))
    if lam is not None:
        results.append(max_multiplicity(k, n, lam, m))
    results.append(rao_min_rows(t, k, n, lam))
    if m is not None:
        results.append(mqw_min_rows(t, k, n, m, lam))

    lines = [_bound_line(r) for r in results]
    if lam is not None and m is not None and lam * n * n > m:
        lines.append(f"abar {_fmt(equality_abar(k, n, lam, m))}")
    _emit(lines)
    violated = any(r.applicable and r.satisfied is False for r in results)
    return 1 if violated else 0


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


def _audit_report(array, method, m):
    if method == "variance":
        audit = variance_audit(array, m)
        extra = [
            f"m {audit.m}",
            f"abar {_fmt(audit.abar)}",
            f"ssd {_fmt(audit.ssd)}",
            f"equality-case {'yes' if audit.equality_case else 'no'}",
        ]
        return extra, audit.report
    if method == "td-rank":
        td = to_transversal_design(array)
        return [], rank_bound_certificate(incidence_matrix(td))
    if method == "gram":
        return [], gram_certificate(array)
    if method == "roots":
        return [], orthogonality_certificate(root_vector_family(array))
    if method == "shortened":
        return [f"m {m}"], shortened_family_certificate(array, m)
    if method == "cwc":
        census = row_multiplicities(array)
        target = next(
            (i for i, row in enumerate(array.rows) if census.counts[row] >= m), None
        )
        if target is None:
            raise AuditFailure(f"no row has multiplicity >= {m}")
        normalized = normalize_to_row(array, target)
        return [f"m {m}"], cwc_certificate(normalized, m)
    raise _UsageError(f"unknown method {method!r}")


def cmd_audit(args):
    array = _read_array(args.file)
    lines = [f"method {args.method}"]
    try:
        extra, report = _audit_report(array, args.method, args.m)
    except AuditFailure as exc:
        if exc.report is not None:
            lines.extend(exc.report.lines())
        if exc.check_id is not None:
            lines.append(f"failing-check {exc.check_id}")
        lines.append("error audit-failed")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    except NonintegralIndex as exc:
        lines.append("error non-integral-index")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    except NotAnOA as exc:
        lines.append("error not-an-oa")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    except ValueError as exc:
        lines.append("error invalid-claim")
        _emit(lines)
        print(str(exc), file=sys.stderr)
        return 1
    lines.extend(extra)
    lines.extend(report.lines())
    _emit(lines)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def _search_exit(status):
    return {FOUND: 0, EXHAUSTED: 1, BUDGET_EXCEEDED: 3}[status]


def cmd_search(args):
    if args.maximize and args.m is not None:
        raise _UsageError("--maximize cannot be combined with --m")
    ceiling = _ceiling()
    n, k, lam = args.n, args.k, args.lam
    lines = []

    def problem(m):
        return SearchProblem(
            n, k, lam, m=m, mode="exists", node_budget=args.budget, ceiling=ceiling
        )

    try:
        if args.maximize:
            floor = max_multiplicity(k, n, lam).integer_form
            lines.append(f"# maximize n={n} k={k} lambda={lam} bound-floor={floor}")
            total = 0
            m_star, witness = 0, None
            status = EXHAUSTED
            for m in range(floor, 0, -1):
                result = search_oa(problem(m), workers=args.workers)
                total += result.nodes_explored
                lines.append(f"# stage m={m} status {result.status} nodes {result.nodes_explored}")
                if result.status == BUDGET_EXCEEDED:
                    status = BUDGET_EXCEEDED
                    break
                if result.status == FOUND:
                    m_star, witness = m, result.witness
                    status = FOUND
                    break
            lines.append(f"# nodes {total}")
            if status == BUDGET_EXCEEDED:
                lines.append(f"# status {BUDGET_EXCEEDED}")
                _emit(lines)
                return 3
            lines.append(f"# m-star {m_star}")
            lines.append(f"# status {status}")
            if witness is not None:
                lines.append(format_oa(witness).rstrip("\n"))
            _emit(lines)
            return 0 if status == FOUND else 1

        result = search_oa(problem(args.m if args.m is not None else 0), workers=args.workers)
    except CeilingExceeded as exc:
        raise _UsageError(str(exc)) from None
    lines.append(f"# search n={n} k={k} lambda={lam} m={args.m if args.m is not None else 0}")
    lines.append(f"# status {result.status}")
    lines.append(f"# nodes {result.nodes_explored}")
    lines.append(f"# achieved-multiplicity {result.achieved_multiplicity}")
    if result.witness is not None:
        lines.append(format_oa(result.witness).rstrip("\n"))
    _emit(lines)
    return _search_exit(result.status)


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="oakit",
        description="Exact verification, existence bounds, proof audits, and "
        "exhaustive search for orthogonal arrays and block designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify an array file and report its parameters")
    p.add_argument("file")
    p.add_argument("--strength", type=int, default=2)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate existence bounds for given parameters")
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--design", help="v,k,lambda,b,t,s,m for block-design bounds")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("audit", help="re-run a proof technique on an array file")
    p.add_argument("file")
    p.add_argument("--method", required=True, choices=AUDIT_METHODS)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("search", help="exhaustive canonical search for small arrays")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--maximize", action="store_true")
    p.add_argument("--budget", type=int, help="node budget")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_search)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"oakit: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"oakit: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"oakit: {exc}", file=sys.stderr)
        return 3
    except OakitError as exc:
        print(f"oakit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
