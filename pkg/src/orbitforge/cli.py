"""Batch command-line front end and deterministic JSON/CSV reporting.

Commands: analyze, sweep, lpr, verify, group-demo.  Field specs follow
the grammar `p` | `p^k` | `p^k/c0,c1,...,ck` (modulus coefficients
low-degree first, monic).  Elements on the wire are canonical integer
encodings; `--poly` switches element arguments to coefficient lists.
Identical invocations produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass

from . import orders
from .errors import FieldSpecParseError, OrbitforgeError
from .fields import (
    DistinctSplit,
    FieldDescriptor,
    FieldElement,
    Irreducible,
    Repeated,
    is_prime,
    is_prime_power,
    make_field,
    multiplicative_order,
)
from .lucas import enumerate_lpr_as, lpr_status
from .orbits import (
    Companion,
    classify,
    enumerate_spectrum,
    predict_spectrum,
    root_orders,
    verify,
)

SCHEMA_VERSION = 1
CSV_HEADER = ("q,p,k,a,b,class,lengths,counts,root_orders,"
              "order_neg_b,neg_b_prime_power,verified")
LPR_CSV_HEADER = "gamma,conjugate,a,order_gamma,order_conjugate,lpr_count"

_CLASS_TAGS = {DistinctSplit: "distinct", Repeated: "repeated",
               Irreducible: "irreducible"}


def default_workers() -> int:
    env = os.environ.get("ORBITFORGE_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# field spec grammar
# ---------------------------------------------------------------------------

def parse_field_spec(text: str) -> FieldDescriptor:
    """`p` | `p^k` | `p^k/c0,c1,...,ck` -> validated FieldDescriptor."""
    text = text.strip()
    modulus = None
    if "/" in text:
        head, _, tail = text.partition("/")
        try:
            modulus = [int(c) for c in tail.split(",")]
        except ValueError:
            raise FieldSpecParseError(f"bad modulus coefficients in {text!r}")
    else:
        head = text
    try:
        if "^" in head:
            p_str, _, k_str = head.partition("^")
            p, k = int(p_str), int(k_str)
        else:
            p, k = int(head), 1
    except ValueError:
        raise FieldSpecParseError(f"cannot parse field spec {text!r}")
    return make_field(p, k, modulus)


def format_field_spec(F: FieldDescriptor) -> str:
    if F.k == 1:
        return str(F.p)
    return f"{F.p}^{F.k}/" + ",".join(str(c) for c in F.modulus)


def parse_element(F: FieldDescriptor, text: str, poly: bool = False) -> FieldElement:
    if poly:
        try:
            return F.element([int(c) for c in text.split(",")])
        except ValueError:
            raise FieldSpecParseError(f"bad coefficient list {text!r}")
    try:
        return F.from_index(int(text))
    except ValueError:
        raise FieldSpecParseError(f"bad element encoding {text!r}")


# ---------------------------------------------------------------------------
# analysis records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisRecord:
    """One analyzed companion, fully serialized with plain integers."""

    q: int
    p: int
    k: int
    a: int
    b: int
    classification: str
    lengths: tuple[int, ...]
    counts: tuple[int, ...]
    root_orders: tuple[int, ...]
    order_neg_b: int
    neg_b_prime_power: bool
    verified: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q, "p": self.p, "k": self.k, "a": self.a, "b": self.b,
            "class": self.classification,
            "lengths": list(self.lengths), "counts": list(self.counts),
            "root_orders": list(self.root_orders),
            "order_neg_b": self.order_neg_b,
            "neg_b_prime_power": self.neg_b_prime_power,
            "verified": self.verified,
        }

    def to_csv_row(self) -> str:
        return ",".join([
            str(self.q), str(self.p), str(self.k), str(self.a), str(self.b),
            self.classification,
            ";".join(map(str, self.lengths)),
            ";".join(map(str, self.counts)),
            ";".join(map(str, self.root_orders)),
            str(self.order_neg_b),
            "true" if self.neg_b_prime_power else "false",
            "true" if self.verified else "false",
        ])

    @classmethod
    def from_csv_row(cls, row: str) -> "AnalysisRecord":
        f = row.split(",")
        return cls(
            q=int(f[0]), p=int(f[1]), k=int(f[2]), a=int(f[3]), b=int(f[4]),
            classification=f[5],
            lengths=tuple(int(x) for x in f[6].split(";") if x),
            counts=tuple(int(x) for x in f[7].split(";") if x),
            root_orders=tuple(int(x) for x in f[8].split(";") if x),
            order_neg_b=int(f[9]),
            neg_b_prime_power=f[10] == "true",
            verified=f[11] == "true",
        )

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisRecord":
        return cls(
            q=d["q"], p=d["p"], k=d["k"], a=d["a"], b=d["b"],
            classification=d["class"],
            lengths=tuple(d["lengths"]), counts=tuple(d["counts"]),
            root_orders=tuple(d["root_orders"]),
            order_neg_b=d["order_neg_b"],
            neg_b_prime_power=d["neg_b_prime_power"],
            verified=d["verified"],
        )


def run_analyze(F: FieldDescriptor, a: FieldElement, b: FieldElement,
                check: bool = False) -> AnalysisRecord:
    """Analyze one companion; with check=True the brute-force enumerator
    confirms the prediction (and verified reflects the outcome)."""
    Q = Companion(F, a, b)
    cls = classify(Q)
    spectrum = predict_spectrum(Q)
    verified = False
    if check:
        report = verify(Q)
        verified = report.ok
        spectrum = report.enumerated
    return AnalysisRecord(
        q=F.q, p=F.p, k=F.k, a=a.index, b=b.index,
        classification=_CLASS_TAGS[type(cls)],
        lengths=tuple(spectrum.lengths()),
        counts=tuple(spectrum.counts()),
        root_orders=tuple(root_orders(cls)),
        order_neg_b=multiplicative_order(-b),
        neg_b_prime_power=is_prime_power(multiplicative_order(-b)),
        verified=verified,
    )


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepJob:
    field_spec: str
    a_values: tuple[int, ...] | None = None  # None: all of F_q
    b_values: tuple[int, ...] | None = None  # None: all units
    check: bool = False
    out: str | None = None
    fmt: str = "json"
    workers: int | None = None


def _sweep_task(args) -> list[dict]:
    field_spec, b_idx, a_values, check = args
    F = parse_field_spec(field_spec)
    b = F.from_index(b_idx)
    out = []
    for a_idx in a_values:
        rec = run_analyze(F, F.from_index(a_idx), b, check=check)
        out.append(rec.to_dict())
    return out


def run_sweep(job: SweepJob) -> tuple[list[AnalysisRecord], dict]:
    """All (a, b) analyses for one field, in canonical (a, b) order.

    Work fans out per-b across processes; results are buffered and
    emitted sorted regardless of execution order.
    """
    F = parse_field_spec(job.field_spec)
    a_values = tuple(job.a_values if job.a_values is not None else range(F.q))
    b_values = tuple(job.b_values if job.b_values is not None
                     else range(1, F.q))
    for v in a_values:
        F.from_index(v)  # range check
    for v in b_values:
        if v == 0:
            raise OrbitforgeError("b = 0 is not a unit")
        F.from_index(v)

    tasks = [(job.field_spec, b_idx, a_values, job.check) for b_idx in b_values]
    workers = job.workers if job.workers is not None else default_workers()
    if workers > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_sweep_task, tasks))
    else:
        chunks = [_sweep_task(t) for t in tasks]

    records = [AnalysisRecord.from_dict(d) for chunk in chunks for d in chunk]
    records.sort(key=lambda r: (r.a, r.b))
    tally: dict[str, int] = {"distinct": 0, "repeated": 0, "irreducible": 0}
    for r in records:
        tally[r.classification] += 1
    summary = {"records": len(records), "classes": tally}
    return records, summary


def _atomic_write(path: str, text: str) -> None:
    # partial output must never be left behind on error
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def sweep_to_json(field_spec: str, records: list[AnalysisRecord],
                  summary: dict) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "field": field_spec,
        "records": [r.to_dict() for r in records],
        "summary": summary,
    }
    return json.dumps(doc, indent=2) + "\n"


def sweep_to_csv(records: list[AnalysisRecord], summary: dict) -> str:
    lines = [CSV_HEADER]
    lines.extend(r.to_csv_row() for r in records)
    tally = summary["classes"]
    lines.append("# summary: " + " ".join(
        f"{k}={tally[k]}" for k in ("distinct", "repeated", "irreducible")))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# LPR tables
# ---------------------------------------------------------------------------

def _lpr_row(gamma, conjugate, a, order_gamma, order_conjugate, count) -> dict:
    return {
        "gamma": gamma, "conjugate": conjugate, "a": a,
        "order_gamma": order_gamma, "order_conjugate": order_conjugate,
        "lpr_count": count,
    }


def run_lpr(F: FieldDescriptor, mode: str,
            a: FieldElement | None = None) -> list[dict]:
    """table mode: all a values with LPRs; check mode: status of one a."""
    if mode == "check":
        if a is None:
            raise OrbitforgeError("check mode requires an element a")
        rep = lpr_status(F, a)
        roots = list(rep.roots)
        if len(roots) == 2:
            (g1, o1, _), (g2, o2, _) = roots
            return [_lpr_row(g1.index, g2.index, a.index, o1, o2, rep.lpr_count)]
        if len(roots) == 1:
            g, o, _ = roots[0]
            return [_lpr_row(g.index, g.index, a.index, o, o, rep.lpr_count)]
        return [_lpr_row(None, None, a.index, None, None, 0)]

    if mode != "table":
        raise OrbitforgeError(f"unknown lpr mode {mode!r}")
    rows = []
    if F.q % 4 == 3:
        for gamma, conj, av in enumerate_lpr_as(F):
            rows.append(_lpr_row(gamma.index, conj.index, av.index,
                                 multiplicative_order(gamma),
                                 multiplicative_order(conj), 1))
    else:
        # q = 1 mod 4: exhaustive two-or-none scan over a
        for a_el in F.elements():
            rep = lpr_status(F, a_el)
            if rep.lpr_count == 2:
                (g1, o1, _), (g2, o2, _) = rep.roots
                rows.append(_lpr_row(g1.index, g2.index, a_el.index, o1, o2, 2))
    rows.sort(key=lambda r: r["a"])
    return rows


def lpr_to_csv(rows: list[dict]) -> str:
    lines = [LPR_CSV_HEADER]
    for r in rows:
        lines.append(",".join(
            "" if r[k] is None else str(r[k])
            for k in ("gamma", "conjugate", "a",
                      "order_gamma", "order_conjugate", "lpr_count")))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exhaustive verification sweep
# ---------------------------------------------------------------------------

def prime_powers_upto(n: int) -> list[tuple[int, int]]:
    """(p, k) for every prime power p^k <= n, ascending by p^k."""
    out = []
    for p in range(2, n + 1):
        if not is_prime(p):
            continue
        k, q = 1, p
        while q <= n:
            out.append((p, k))
            k += 1
            q *= p
    out.sort(key=lambda pk: pk[0] ** pk[1])
    return out


def _verify_task(args) -> tuple[int, dict, list[str]]:
    p, k, b_idx = args
    F = make_field(p, k)
    b = F.from_index(b_idx)
    tally = {"distinct": 0, "repeated": 0, "irreducible": 0}
    mismatches = []
    for a_idx in range(F.q):
        Q = Companion(F, F.from_index(a_idx), b)
        cls = classify(Q)
        tally[_CLASS_TAGS[type(cls)]] += 1
        pred = predict_spectrum(Q, cls)
        enum = enumerate_spectrum(Q)
        if pred != enum:
            mismatches.append(
                f"q={F.q} a={a_idx} b={b_idx}: predicted {pred.as_dict()} "
                f"!= enumerated {enum.as_dict()}")
    return F.q, tally, mismatches


def run_verify(max_q: int = 64, workers: int | None = None) -> tuple[bool, dict]:
    """Predict-vs-enumerate over every field q <= max_q (default moduli)
    and every (a, unit b).  Discrepancies are findings, not errors."""
    tasks = [(p, k, b_idx)
             for p, k in prime_powers_upto(max_q)
             for b_idx in range(1, p ** k)]
    workers = workers if workers is not None else default_workers()
    if workers > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_verify_task, tasks, chunksize=8))
    else:
        results = [_verify_task(t) for t in tasks]

    tally = {"distinct": 0, "repeated": 0, "irreducible": 0}
    mismatches: list[str] = []
    companions = 0
    for q, t, mm in results:
        for key, val in t.items():
            tally[key] += val
        companions += sum(t.values())
        mismatches.extend(mm)
    summary = {
        "max_q": max_q,
        "fields": len(prime_powers_upto(max_q)),
        "companions": companions,
        "classes": tally,
        "mismatches": sorted(mismatches),
    }
    return not mismatches, summary


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orbitforge",
        description="Orbit structure of companion-matrix actions on F_q x F_q")
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one companion (a, b)")
    pa.add_argument("--field", required=True, help="field spec: p | p^k | p^k/c0,..,ck")
    pa.add_argument("--a", required=True)
    pa.add_argument("--b", required=True)
    pa.add_argument("--poly", action="store_true",
                    help="read --a/--b as comma-separated coefficient lists")
    pa.add_argument("--verify", action="store_true",
                    help="confirm the prediction by brute-force enumeration")
    pa.add_argument("--out")

    ps = sub.add_parser("sweep", help="analyze all (a, b) over a field")
    ps.add_argument("--field", required=True)
    ps.add_argument("--verify", action="store_true")
    ps.add_argument("--out", required=True)
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--workers", type=int)

    pl = sub.add_parser("lpr", help="Lucas primitive root tables and checks")
    pl.add_argument("--field", required=True)
    pl.add_argument("--mode", choices=("table", "check"), default="table")
    pl.add_argument("--a")
    pl.add_argument("--poly", action="store_true")
    pl.add_argument("--format", choices=("json", "csv"), default="csv")
    pl.add_argument("--out")

    pv = sub.add_parser("verify", help="exhaustive predict-vs-enumerate sweep")
    pv.add_argument("--max-q", type=int, default=64)
    pv.add_argument("--workers", type=int)

    pg = sub.add_parser("group-demo",
                        help="CRT exponent split witness in a cyclic group")
    pg.add_argument("--r", type=int, required=True)
    pg.add_argument("--m", type=int, required=True)
    pg.add_argument("--n", type=int, required=True)

    return ap


def _emit(text: str, out: str | None) -> None:
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            F = parse_field_spec(args.field)
            a = parse_element(F, args.a, args.poly)
            b = parse_element(F, args.b, args.poly)
            rec = run_analyze(F, a, b, check=args.verify)
            doc = {"schema": SCHEMA_VERSION, "record": rec.to_dict()}
            _emit(json.dumps(doc, indent=2) + "\n", args.out)
            return 0 if (not args.verify or rec.verified) else 1

        if args.command == "sweep":
            job = SweepJob(field_spec=args.field, check=args.verify,
                           out=args.out, fmt=args.format, workers=args.workers)
            records, summary = run_sweep(job)
            if job.fmt == "csv":
                text = sweep_to_csv(records, summary)
            else:
                text = sweep_to_json(job.field_spec, records, summary)
            _atomic_write(job.out, text)
            if job.check and not all(r.verified for r in records):
                return 1
            return 0

        if args.command == "lpr":
            F = parse_field_spec(args.field)
            a = parse_element(F, args.a, args.poly) if args.a else None
            rows = run_lpr(F, args.mode, a)
            if args.format == "json":
                text = json.dumps({"schema": SCHEMA_VERSION, "rows": rows},
                                  indent=2) + "\n"
            else:
                text = lpr_to_csv(rows)
            _emit(text, args.out)
            return 0

        if args.command == "verify":
            ok, summary = run_verify(args.max_q, args.workers)
            doc = {"schema": SCHEMA_VERSION, "ok": ok, "summary": summary}
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
            return 0 if ok else 1

        if args.command == "group-demo":
            k1, k2 = orders.crt_exponent_split(args.r, args.m, args.n)
            doc = {
                "schema": SCHEMA_VERSION,
                "r": args.r, "m": args.m, "n": args.n,
                "k1": k1, "k2": k2,
                "order_g_k1": orders.order_of_power(args.r, k1),
                "order_g_k2": orders.order_of_power(args.r, k2),
            }
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
            return 0
    except OrbitforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
