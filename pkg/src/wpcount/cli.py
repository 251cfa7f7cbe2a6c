"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from math import gcd

from . import _kernels, counting, hypersurface, oracle, zeta
from .counting import PrimePower
from .errors import ConsistencyError, FieldTooLarge, InputError, WPSError
from .weighted_space import WeightVector

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3


class Mismatch(Exception):
    """Raised after output is written when a verdict failed."""


# -- rendering -------------------------------------------------------------------

def render_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def render_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [["-" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    return "\n".join(lines) + "\n"


def render_csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(["" if c is None else c for c in row] for row in rows)
    return buf.getvalue()


def emit(args, data, headers, rows, text=None):
    if args.format == "json":
        out = render_json(data)
    elif args.format == "csv":
        out = render_csv(headers, rows)
    else:
        out = (text + "\n" if text else "") + render_table(headers, rows) if headers else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# -- argument helpers ------------------------------------------------------------

def _weights(args) -> WeightVector:
    if not args.weights:
        raise InputError("--weights is required")
    return WeightVector.parse(args.weights)


def _prime_power(args) -> PrimePower:
    if getattr(args, "q", None) is not None:
        if args.p is not None and PrimePower.from_q(args.q).p != args.p:
            raise InputError("--q and --p disagree")
        return PrimePower.from_q(args.q)
    if args.p is None:
        raise InputError("give --q, or --p with --a")
    return PrimePower(args.p, args.a or 1)


# -- commands --------------------------------------------------------------------

def cmd_count(args):
    w, q = _weights(args), _prime_power(args)
    methods = ["subset", "burnside", "bruteforce"] if args.method == "all" else [args.method]
    results = {}
    notes = []
    for m in methods:
        if m == "subset":
            rep = counting.count_strata(w, q)
            results[m] = {"total": rep.total, "singular": rep.singular, "smooth": rep.smooth}
        elif m == "burnside":
            results[m] = {"total": counting.count_burnside(w, q), "singular": None, "smooth": None}
        elif m == "bruteforce":
            try:
                s = oracle.orbit_count(w, q, limit=args.enum_limit)
            except FieldTooLarge as exc:
                if args.method != "all":
                    raise
                notes.append(f"bruteforce skipped: {exc}")
                continue
            results[m] = {"total": s.total_orbits, "singular": s.singular_orbits, "smooth": s.smooth_orbits}
    verdict = None
    if len(results) > 1:
        ok = len({r["total"] for r in results.values()}) == 1
        strata = [(r["singular"], r["smooth"]) for r in results.values() if r["singular"] is not None]
        ok = ok and len(set(strata)) <= 1
        verdict = "MATCH" if ok else "MISMATCH"
    data = {"weights": list(w), "q": q.q, "results": results, "notes": notes}
    if verdict:
        data["verdict"] = verdict
    headers = ["method", "total", "singular", "smooth"]
    rows = [[m, r["total"], r["singular"], r["smooth"]] for m, r in results.items()]
    text = f"P_w^{w.n}(F_{q.q}), w = ({w})"
    tail = "\n".join(notes + ([f"verdict: {verdict}"] if verdict else []))
    emit(args, data, headers, rows, text)
    if tail and args.format == "table":
        _print_extra(args, tail)
    if verdict == "MISMATCH":
        raise Mismatch


def _print_extra(args, text):
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_tower(args):
    w = _weights(args)
    if args.p is None:
        raise InputError("--p is required")
    if args.max_exp < 1:
        raise InputError("--max-exp must be >= 1")
    if args.max_exp > 6 and not args.force:
        raise InputError("--max-exp above 6 needs --force")
    rows = []
    for a in range(1, args.max_exp + 1):
        rep = counting.count_strata(w, PrimePower(args.p, a))
        if args.method == "all" and counting.count_burnside(w, rep.q) != rep.total:
            raise ConsistencyError(f"subset and Burnside disagree at q={rep.q.q}")
        rows.append([a, rep.q.q, rep.singular, rep.smooth, rep.total])
    headers = ["a", "q", "singular", "smooth", "total"]
    data = {"weights": list(w), "p": args.p, "rows": [dict(zip(headers, r)) for r in rows]}
    emit(args, data, headers, rows, f"P_w^{w.n}(F_q), w = ({w}), q = {args.p}^a")


def _stratum_count(w, q: PrimePower, stratum, r):
    rep = counting.count_strata(w, q.extension(r))
    return {"total": rep.total, "smooth": rep.smooth, "singular": rep.singular}[stratum]


def cmd_zeta(args):
    w, q = _weights(args), _prime_power(args)
    strata = zeta.STRATA if args.stratum == "all" else (args.stratum,)
    R = args.series
    out, lines, failed = {}, [], False
    sum_degree = -sum(w)
    for s in strata:
        Z = zeta.build_zeta(w, q, s)
        deg = zeta.zeta_degree(Z)
        series = zeta.expand_series(Z, R)
        recovery = []
        for r in range(1, R + 1):
            got, want = zeta.recover_counts(Z, r), _stratum_count(w, q, s, r)
            recovery.append({"r": r, "recovered": got, "direct": want, "status": "PASS" if got == want else "FAIL"})
            failed |= got != want
        entry = {
            "factorization": Z.to_json(),
            "degree": deg,
            "poles_zeros": [pz.to_json() for pz in zeta.poles_zeros(Z)],
            "series": {"coeffs": series},
            "recovery": recovery,
        }
        if s == "total":
            entry["degree_minus_sum_w"] = sum_degree
            entry["degree_coprime_parts"] = -sum(zeta.arith.coprime_part(x, q.q) for x in w)
        out[s] = entry
        lines.append(f"[{s}] Z(t) = {zeta.format_factorization(Z)}")
        if s == "total":
            lines.append(f"  degree {deg}; -sum(w) = {sum_degree}")
            if deg != sum_degree:
                lines.append(
                    "  NOTE: degree differs from -sum(w) because q shares a prime with some weight;"
                    f" it equals -sum(coprime parts) = {entry['degree_coprime_parts']}"
                )
        else:
            lines.append(f"  degree {deg}")
        for pz in zeta.poles_zeros(Z):
            lines.append(
                f"  {pz.kind} x{abs(pz.multiplicity)}: (1 - (q^{pz.j} t)^{pz.o}), |1/t| = {pz.magnitude_of_reciprocal}"
            )
        lines.append(f"  series: {series}")
        for rec in recovery:
            lines.append(f"  N_{rec['r']} = {rec['recovered']}  {rec['status']}")
    data = {"weights": list(w), "q": q.q, "strata": out}
    rows = [
        [s, e["degree"], rec["r"], rec["recovered"], rec["direct"], rec["status"]]
        for s, e in out.items()
        for rec in e["recovery"]
    ]
    headers = ["stratum", "degree", "r", "recovered", "direct", "status"]
    if args.format == "table":
        emit(args, data, None, None, "\n".join(lines))
    else:
        emit(args, data, headers, rows)
    if failed:
        raise Mismatch


def cmd_normalize(args):
    w, q = _weights(args), _prime_power(args)
    rep = counting.normalization_relation(w, q)
    data = {"weights": list(w), "q": q.q, **rep.to_json()}
    headers = ["d", "d_prime", "count_w", "count_w_norm", "error_term", "relation"]
    rows = [[rep.d, rep.d_prime, rep.count_w, rep.count_w_norm, rep.error_term, "HOLDS" if rep.relation_holds else "FAILS"]]
    extra = None
    if args.series:
        zr = zeta.normalization_zeta_compare(w, q, args.series)
        data["zerr"] = zr.to_json()
        extra = "\n".join(
            [f"E_r (r=1..{args.series}): {zr.errors}", f"d'_r: {zr.d_primes}",
             f"Z_err: {data['zerr']['zerr']['coeffs']}", f"zeta functions equal: {zr.equal}"]
        )
    emit(args, data, headers, rows, f"w = ({w}), w' = w/{rep.d}, q = {q.q}")
    if extra and args.format == "table":
        _print_extra(args, extra)


def cmd_scale(args):
    w, q = _weights(args), _prime_power(args)
    diff = counting.scaling_difference(w, args.gamma, q)
    scaled = counting.scaled_weights(w, args.gamma)
    c0, c1 = counting.count_subset(w, q), counting.count_subset(scaled, q)
    data = {"weights": list(w), "scaled": list(scaled), "gamma": args.gamma, "q": q.q,
            "count": c0, "count_scaled": c1, "difference": diff, "verdict": "AGREE"}
    headers = ["q", "count_scaled", "count", "difference", "verdict"]
    emit(args, data, headers, [[q.q, c1, c0, diff, "AGREE"]], f"w = ({w}), w' = ({scaled})")


def cmd_hypersurface(args):
    w, q = _weights(args), _prime_power(args)
    if not args.poly:
        raise InputError("--poly is required")
    f = hypersurface.parse_polynomial(args.poly, w, q.p)
    results = {
        "burnside": hypersurface.count_hypersurface_burnside(f, q),
        "stratified": hypersurface.count_hypersurface_stratified(f, q),
    }
    try:
        results["bruteforce"] = oracle.hypersurface_orbit_count(f, q, limit=args.enum_limit)
    except FieldTooLarge:
        pass
    verdict = "MATCH" if len(set(results.values())) == 1 else "MISMATCH"
    data = {"weights": list(w), "q": q.q, "poly": str(f), "degree": f.degree, "results": results, "verdict": verdict}
    rows = [[m, v] for m, v in results.items()]
    text = f"X: {args.poly} = 0 in P({w}) over F_{q.q} (w-degree {f.degree})"
    if args.check_pch1:
        rep = hypersurface.pch1_check(f, q)
        data["pch1"] = rep.to_json()
        rows.append(["normalized", rep.count_norm])
    emit(args, data, ["method", "count"], rows, text)
    if args.format == "table":
        extra = [f"verdict: {verdict}"]
        if args.check_pch1:
            extra.append(
                f"normalization: {rep.count} = {rep.d_prime}*{rep.count_norm} - {rep.deficiency}: "
                + ("HOLDS" if rep.holds else "FAILS")
            )
        _print_extra(args, "\n".join(extra))
    if verdict != "MATCH":
        raise Mismatch


# -- verify ------------------------------------------------------------------------

def sweep_weights(max_n: int, max_weight: int):
    for n in range(1, max_n + 1):
        for w in itertools.product(range(1, max_weight + 1), repeat=n + 1):
            yield WeightVector(w)


def verify_pair(w: WeightVector, q: PrimePower, rmax: int, tally: dict, failures: list, limit=None):
    def check(name, ok, detail=""):
        tally.setdefault(name, [0, 0])[0 if ok else 1] += 1
        if not ok:
            failures.append(f"{name}: w=({w}) q={q.q} {detail}")

    rep = counting.count_strata(w, q)
    check("subset=burnside", rep.total == counting.count_burnside(w, q))
    try:
        s = oracle.orbit_count(w, q, limit=limit)
        check("formula=oracle", (s.total_orbits, s.singular_orbits, s.smooth_orbits) == (rep.total, rep.singular, rep.smooth))
    except FieldTooLarge:
        pass
    direct = {r: counting.count_strata(w, q.extension(r)) for r in range(1, rmax + 1)}
    for s_name in zeta.STRATA:
        Z = zeta.build_zeta(w, q, s_name)
        ok = all(
            zeta.recover_counts(Z, r) == getattr(direct[r], s_name) for r in range(1, rmax + 1)
        ) and all(0 <= j <= w.n for (j, _o), _e in Z.factors)
        check("zeta-recovery", ok, s_name)
    check("decomposition", zeta.decomposition_check(w, q))
    try:
        counting.normalization_relation(w, q)
        check("normalization", True)
    except ConsistencyError as exc:
        check("normalization", False, str(exc))
    for gamma in (2, 3):
        if gcd(w[0], gamma) != 1:
            continue
        try:
            diff = counting.scaling_difference(w, gamma, q)
            check("scaling", gcd(gamma, q.q - 1) != 1 or diff == 0)
        except ConsistencyError as exc:
            check("scaling", False, str(exc))


def cmd_verify(args):
    qs = [PrimePower.from_q(int(x)) for x in args.qs.split(",")]
    vectors = list(sweep_weights(args.max_n, args.max_weight))
    for extra in args.extra or []:
        vectors.append(WeightVector.parse(extra))
    tally, failures = {}, []
    start = time.perf_counter()
    for w in vectors:
        for q in qs:
            verify_pair(w, q, args.rmax, tally, failures, args.enum_limit)
    elapsed = time.perf_counter() - start
    rows = [[name, p, f, "PASS" if f == 0 else "FAIL"] for name, (p, f) in tally.items()]
    data = {
        "vectors": len(vectors),
        "qs": [q.q for q in qs],
        "rmax": args.rmax,
        "checks": {name: {"pass": p, "fail": f} for name, (p, f) in tally.items()},
        "failures": failures[:50],
        "backend": _kernels.BACKEND,
    }
    text = f"{len(vectors)} weight vectors x q in {[q.q for q in qs]}, r <= {args.rmax}, backend {_kernels.BACKEND}, {elapsed:.1f}s"
    emit(args, data, ["check", "pass", "fail", "status"], rows, text)
    if failures:
        if args.format == "table":
            _print_extra(args, "\n".join(failures[:50]))
        raise Mismatch


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--enum-limit", type=int, help="bound on q^(n+1) for enumeration (default: $WPS_ENUM_LIMIT or 2^24)")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--weights", help="comma-separated positive weights, e.g. 1,2,3,5")
    space.add_argument("--q", type=int)
    space.add_argument("--p", type=int)
    space.add_argument("--a", "--alpha", dest="a", type=int)

    parser = argparse.ArgumentParser(prog="wpcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, space], help="point counts over F_q")
    p.add_argument("--method", choices=["subset", "burnside", "bruteforce", "all"], default="subset")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("tower", parents=[common, space], help="counts over F_{p^a}, a = 1..A")
    p.add_argument("--max-exp", type=int, default=5)
    p.add_argument("--force", action="store_true", help="allow --max-exp above 6")
    p.add_argument("--method", choices=["subset", "all"], default="subset")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("zeta", parents=[common, space], help="zeta factorization, series, poles/zeros")
    p.add_argument("--stratum", choices=["all", *zeta.STRATA], default="all")
    p.add_argument("--series", type=int, default=8, metavar="R")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("normalize", parents=[common, space], help="compare w with w/gcd(w)")
    p.add_argument("--series", type=int, default=0, metavar="R")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("scale", parents=[common, space], help="scale w_1..w_n by gamma")
    p.add_argument("--gamma", type=int, required=True)
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("hypersurface", parents=[common, space], help="count points of f = 0")
    p.add_argument("--poly", required=True)
    p.add_argument("--check-pch1", action="store_true", help="also check the normalization relation")
    p.set_defaults(func=cmd_hypersurface)

    p = sub.add_parser("verify", parents=[common], help="cross-validation sweep")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--qs", default="2,3,4,5,7,8,9")
    p.add_argument("--rmax", type=int, default=8)
    p.add_argument("--extra", action="append", metavar="WEIGHTS",
                   help="additional weight vector (repeatable); default adds 1,6,14,21")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.extra is None:
        args.extra = ["1,6,14,21"]
    try:
        args.func(args)
    except Mismatch:
        return EXIT_MISMATCH
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, WPSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
