"""Command-line front end.

Exit codes: 0 success, 2 usage, 3 precondition violation, 4 verification
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any

from . import acceptance
from .codes import (ConstructionError, DefiningSet, EnumerationCapError, Family,
                    InconsistencyError, build, kernel_size, lee_spectrum_bruteforce,
                    lee_spectrum_charsum, ENUM_MAX_M)
from .counting import (BRUTE_MAX_M, CountingParams, s_sizes, s_sizes_bruteforce,
                       t_sizes, t_sizes_bruteforce, t_total)
from .distribution import WeightDistribution
from .optimality import certify
from .simplicial import SimplicialComplex
from .spectra import (PreconditionError, SpectrumParams, closed_forms,
                      nominal_weight_count, table1_thm32, table2_cor34, table3_cor35,
                      table4_thm36, table5_thm38, table6_cor39)
from .subsets import DimensionError, MAX_M, SubsetMask

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4
TABLES_MAX_M = 6


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, payload: dict):
        super().__init__("verification mismatch")
        self.payload = payload


# ---------------------------------------------------------------- input

def _complex_arg(text: str) -> dict:
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"cannot parse complex description: {e}") from None


def _resolve_complexes(args) -> tuple[int, SimplicialComplex, SimplicialComplex | None]:
    family = Family(args.family)
    specs = {}
    for key in ("delta1", "delta2"):
        raw = getattr(args, key, None)
        if raw is not None:
            specs[key] = SimplicialComplex.from_dict(_complex_arg(raw))
    m = args.m
    if m is None:
        ms = {c.m for c in specs.values()}
        if len(ms) != 1:
            raise UsageError("--m is required")
        m = ms.pop()
    for c in specs.values():
        if c.m != m:
            raise DimensionError(f"complex given for m={c.m}, but --m {m}")

    def facet(text: str | None, name: str) -> SimplicialComplex:
        if text is None:
            raise UsageError(f"--{name} (or --delta{1 if name == 'A' else 2}) is required")
        return SimplicialComplex.generated_by(SubsetMask.parse(m, text))

    d1 = specs.get("delta1") or facet(args.A, "A")
    if family is Family.L2PLAIN:
        if args.B is not None or "delta2" in specs:
            raise UsageError("L2plain takes a single complex; drop --B/--delta2")
        return m, d1, None
    d2 = specs.get("delta2") or facet(args.B, "B")
    return m, d1, d2


def _job_echo(m: int, family: Family, d1, d2) -> dict:
    out: dict[str, Any] = {"m": m, "family": family.value, "delta1": d1.to_dict()}
    if d2 is not None:
        out["delta2"] = d2.to_dict()
    return out


# ---------------------------------------------------------------- core

def _spectrum(L: DefiningSet, d1, d2, verify: bool, workers: int) -> dict:
    forms = closed_forms(L.family, d1, d2)
    if not forms or verify:
        if L.m > ENUM_MAX_M:
            why = "no closed form applies" if not forms else "--verify was requested"
            raise EnumerationCapError(
                f"{why}; brute-force enumeration is capped at m <= {ENUM_MAX_M} (got m={L.m})"
            )
    result: dict[str, Any] = {}
    if forms:
        source = next(iter(forms))
        dist = forms[source]
    else:
        source = "bruteforce"
        dist = lee_spectrum_bruteforce(L, workers=workers)
    result["source"] = source
    result["dist"] = dist
    if verify:
        brute = dist if source == "bruteforce" else lee_spectrum_bruteforce(L, workers=workers)
        chars = lee_spectrum_charsum(L)
        agree = brute == chars and all(f == brute for f in forms.values())
        result["verification"] = {
            "bruteforce": brute.to_poly(),
            "charsum": chars.to_poly(),
            "closed_forms": {k: v.to_poly() for k, v in forms.items()},
            "agree": agree,
        }
    return result


def cmd_spectrum(args) -> dict:
    family = Family(args.family)
    m, d1, d2 = _resolve_complexes(args)
    L = build(family, d1, d2)
    res = _spectrum(L, d1, d2, args.verify, args.workers)
    dist: WeightDistribution = res["dist"]
    kernel = dist[0]
    if args.verify and m <= ENUM_MAX_M:
        kernel_enum = kernel_size(L)
        res["verification"]["kernel_size_enumerated"] = kernel_enum
        res["verification"]["agree"] &= kernel_enum == kernel
    shown = dist if args.mode == "message" else dist.divided(kernel)
    out = _job_echo(m, family, d1, d2)
    out.update({
        "command": "spectrum",
        "length": len(L),
        "size": dist.total // kernel,
        "kernel_size": kernel,
        "mode": args.mode,
        "source": res["source"],
        "distribution": shown.to_records(),
        "enumerator": shown.to_poly(),
        "nonzero_weight_count": len(shown.nonzero_weights()),
    })
    if d2 is not None and d1.single_facet is not None and d2.single_facet is not None:
        p = SpectrumParams.from_masks(m, d1.single_facet, d2.single_facet)
        nominal = nominal_weight_count(p, family)
        if nominal is not None:
            out["nominal_weight_count"] = nominal
    if "verification" in res:
        out["verification"] = res["verification"]
        if not res["verification"]["agree"]:
            raise VerificationFailure(out)
    return out


def _realize(m: int, a: int, b: int, u: int) -> tuple[SubsetMask, SubsetMask]:
    """Concrete A = {1..a} and B with |B| = b, |A ∪ B| = u."""
    overlap = a + b - u
    start = a - overlap
    A = SubsetMask.from_elements(m, range(1, a + 1))
    B = SubsetMask.from_elements(m, range(start + 1, start + b + 1))
    return A, B


def _table_points(m: int):
    """(table name, family, A, B, closed form) for every valid size triple."""
    full = SubsetMask.full(m)
    empty = SubsetMask.empty(m)
    for a in range(m + 1):
        for b in range(1, m):
            for u in range(max(a, b), min(m, a + b) + 1):
                A, B = _realize(m, a, b, u)
                yield "table1_thm32", Family.L1, A, B, table1_thm32(SpectrumParams(m, a, b, u))
    for b in range(1, m):
        A, B = _realize(m, 0, b, b)
        yield "table2_cor34", Family.L1, empty, B, table2_cor34(m, b)
        yield "table3_cor35", Family.L1, full, B, table3_cor35(m, b)
    for a in range(1, m):
        for b in range(1, m):
            for u in range(max(a, b), min(m, a + b) + 1):
                A, B = _realize(m, a, b, u)
                yield "table4_thm36", Family.L2, A, B, table4_thm36(SpectrumParams(m, a, b, u))
    for a in range(1, m):
        A, _ = _realize(m, a, 0, a)
        yield "table5_thm38", Family.L2PLAIN, A, None, table5_thm38(m, a)
    if m >= 2:
        A, _ = _realize(m, m - 1, 0, m - 1)
        yield "table6_cor39", Family.L2PLAIN, A, None, table6_cor39(m)


def cmd_tables(args) -> dict:
    lo, hi = args.m_min, args.m_max
    if not 1 <= lo <= hi <= TABLES_MAX_M:
        raise PreconditionError(f"tables needs 1 <= m-min <= m-max <= {TABLES_MAX_M}")
    rows = []
    all_ok = True
    for m in range(lo, hi + 1):
        for name, family, A, B, dist in _table_points(m):
            row: dict[str, Any] = {
                "table": name, "m": m, "family": family.value,
                "A": str(A), "B": str(B) if B is not None else None,
                "size_a": len(A), "size_b": len(B) if B is not None else None,
                "size_union": len(A | B) if B is not None else None,
                "enumerator": dist.to_poly(),
                "distribution": dist.to_records(),
            }
            if args.verify:
                d1 = SimplicialComplex.generated_by(A)
                d2 = SimplicialComplex.generated_by(B) if B is not None else None
                L = build(family, d1, d2)
                ok = (lee_spectrum_bruteforce(L, workers=args.workers) == dist
                      and lee_spectrum_charsum(L) == dist)
                row["verified"] = ok
                all_ok &= ok
            rows.append(row)
    out = {"command": "tables", "m_min": lo, "m_max": hi, "rows": rows}
    if args.verify:
        out["all_verified"] = all_ok
        if not all_ok:
            raise VerificationFailure(out)
    return out


def cmd_certify(args) -> dict:
    family = Family(args.family)
    m, d1, d2 = _resolve_complexes(args)
    L = build(family, d1, d2)
    res = _spectrum(L, d1, d2, args.verify, args.workers)
    dist = res["dist"]
    report = certify(dist, len(L), dist[0])
    out = _job_echo(m, family, d1, d2)
    out.update({
        "command": "certify",
        "length": len(L),
        "source": res["source"],
        "enumerator": dist.divided(dist[0]).to_poly(),
        "report": report.to_dict(),
    })
    if "verification" in res:
        out["verification"] = res["verification"]
        if not res["verification"]["agree"]:
            raise VerificationFailure(out)
    return out


def cmd_counting(args) -> dict:
    if args.m is None or args.A is None or args.B is None:
        raise UsageError("counting needs --m, --A and --B")
    p = CountingParams(args.m, SubsetMask.parse(args.m, args.A),
                       SubsetMask.parse(args.m, args.B))
    s1, s0 = s_sizes(p)
    t2, t1, t0 = t_sizes(p)
    a, b, u = p.sizes
    out: dict[str, Any] = {
        "command": "counting", "m": p.m, "A": str(p.A), "B": str(p.B),
        "size_a": a, "size_b": b, "size_union": u,
        "s1": s1, "s0": s0, "t2": t2, "t1": t1, "t0": t0, "t_total": t_total(p),
    }
    if args.verify:
        if p.m > BRUTE_MAX_M:
            raise EnumerationCapError(
                f"brute-force counting is capped at m <= {BRUTE_MAX_M} (got m={p.m})"
            )
        bs1, bs0 = s_sizes_bruteforce(p)
        bt2, bt1, bt0 = t_sizes_bruteforce(p, workers=args.workers)
        brute = {"s1": bs1, "s0": bs0, "t2": bt2, "t1": bt1, "t0": bt0}
        agree = all(out[k] == v for k, v in brute.items())
        out["bruteforce"] = brute
        out["agree"] = agree
        if not agree:
            raise VerificationFailure(out)
    return out


def cmd_selftest(args) -> dict:
    picked = args.criterion or sorted(acceptance.CRITERIA)
    results = []
    for c in picked:
        if c not in acceptance.CRITERIA:
            raise UsageError(f"unknown criterion {c}")
        results.extend(acceptance.CRITERIA[c]())
    out = {
        "command": "selftest",
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                   for r in results],
        "passed": all(r.passed for r in results),
    }
    if not out["passed"]:
        raise VerificationFailure(out)
    return out


# ---------------------------------------------------------------- output

def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _dist_records(payload: dict) -> list[dict] | None:
    return payload.get("distribution")


def render_csv(payload: dict) -> str:
    buf = io.StringIO()
    echo = {k: v for k, v in payload.items()
            if not isinstance(v, (list, dict)) and v is not None}
    buf.write("# " + " ".join(f"{k}={echo[k]}" for k in sorted(echo)) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    cmd = payload.get("command")
    if cmd == "tables":
        writer.writerow(["table", "m", "A", "B", "weight", "frequency", "verified"])
        for row in payload["rows"]:
            for rec in row["distribution"]:
                writer.writerow([row["table"], row["m"], row["A"], row["B"] or "",
                                 rec["weight"], rec["frequency"], row.get("verified", "")])
    elif cmd == "certify":
        writer.writerow(["key", "value"])
        for k, v in sorted(payload["report"].items()):
            if k != "annotations":
                writer.writerow([k, v])
        for note in payload["report"]["annotations"]:
            writer.writerow(["annotation", f"{note['claim']} [{note['verdict']}]"])
    elif cmd == "selftest":
        writer.writerow(["check", "passed", "detail"])
        for c in payload["checks"]:
            writer.writerow([c["name"], c["passed"], c["detail"]])
    elif _dist_records(payload) is not None:
        writer.writerow(["weight", "frequency"])
        for rec in payload["distribution"]:
            writer.writerow([rec["weight"], rec["frequency"]])
    return buf.getvalue()


def render_text(payload: dict) -> str:
    lines = []
    cmd = payload["command"]
    if cmd == "selftest":
        for c in payload["checks"]:
            flag = "PASS" if c["passed"] else "FAIL"
            lines.append(f"[{flag}] {c['name']}" + (f" -- {c['detail']}" if c["detail"] else ""))
        lines.append("all passed" if payload["passed"] else "FAILURES present")
        return "\n".join(lines) + "\n"
    if cmd == "tables":
        for row in payload["rows"]:
            verdict = {True: "verified", False: "MISMATCH", None: ""}[row.get("verified")]
            b = f" B={row['B']}" if row["B"] is not None else ""
            lines.append(f"{row['table']:<13} m={row['m']} A={row['A']}{b}  "
                         f"{row['enumerator']}  {verdict}".rstrip())
        return "\n".join(lines) + "\n"
    for key in sorted(payload):
        val = payload[key]
        if key in ("distribution", "command"):
            continue
        if isinstance(val, dict):
            lines.append(f"{key}:")
            for k in sorted(val):
                lines.append(f"  {k}: {json.dumps(val[k], sort_keys=True)}")
        else:
            lines.append(f"{key}: {val}")
    if "distribution" in payload:
        lines.append("weight  frequency")
        for rec in payload["distribution"]:
            lines.append(f"{rec['weight']:>6}  {rec['frequency']}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": dump_json, "csv": render_csv, "text": render_text}


# ---------------------------------------------------------------- parser

def _add_job_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help=f"ambient dimension (1..{MAX_M})")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--A", help="elements of A, e.g. 1,2 ('' for the empty set)")
    p.add_argument("--B", help="elements of B")
    p.add_argument("--delta1", help="complex as JSON {m, maximal} or @file")
    p.add_argument("--delta2", help="complex as JSON {m, maximal} or @file")
    p.add_argument("--verify", action="store_true",
                   help="cross-check closed form, brute force and character sums")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=sorted(RENDERERS), default="text")
    p.add_argument("--workers", type=int, default=1,
                   help="processes for brute-force enumeration (0 = all CPUs)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplicial-codes",
        description="Few-Lee-weight codes over F2+uF2 from simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="Lee weight distribution of one construction")
    _add_job_args(p)
    p.add_argument("--mode", choices=["message", "distinct"], default="message")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tables", help="evaluate and verify every closed form over a range of m")
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--no-verify", dest="verify", action="store_false")
    _add_common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("certify", help="Griesmer report for the Gray image")
    _add_job_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("counting", help="sizes of the S and T sets for given A, B")
    p.add_argument("--m", type=int)
    p.add_argument("--A")
    p.add_argument("--B")
    p.add_argument("--verify", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_counting)

    p = sub.add_parser("selftest", help="run the acceptance sweep")
    p.add_argument("--criterion", type=int, action="append",
                   help="run only this criterion (repeatable)")
    _add_common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    render = RENDERERS[args.format]
    try:
        payload = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as e:
        sys.stdout.write(render(e.payload))
        print("error: verification mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    except InconsistencyError as e:
        print(f"error: internal inconsistency: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ConstructionError, PreconditionError, EnumerationCapError,
            DimensionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(render(payload))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
