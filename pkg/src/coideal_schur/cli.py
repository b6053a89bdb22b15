"""Command-line front end: ``coideal-schur --task <name> --n N --d D ...``.

Every run prints (or writes) one JSON report with ``"schema": 1``.  The exit
status is 0 exactly when every check in the report passed, 1 on a failed
check, and 2 on usage errors or skipped jobs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence

from .scalars import ScalarField, parse_gaussian, parse_rational

SCHEMA = 1
TASKS = ("dim", "centralizer", "verify-iso", "verify-dj", "qcoord-check", "cell-check", "reptype", "conditions")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class JobConfig:
    task: str
    n: Optional[int]
    d: Optional[int]
    field: str = "rational"
    q: str = "2"
    Q: str = "3"
    force: bool = False
    p: int = 0
    l: str = "generic"
    kind: str = "B"

    def scalar_field(self) -> ScalarField:
        if self.field == "symbolic" or "symbolic" in (self.q, self.Q):
            return ScalarField.symbolic()
        try:
            if self.field == "gaussian":
                return ScalarField.gaussian(parse_gaussian(self.q), parse_gaussian(self.Q))
            if self.field == "rational":
                return ScalarField.rational(parse_rational(self.q), parse_rational(self.Q))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad parameter values q={self.q!r}, Q={self.Q!r}: {exc}") from None
        raise UsageError(f"unknown field {self.field!r}")

    @property
    def l_value(self):
        return self.l if self.l == "generic" else int(self.l)

    def params(self) -> dict:
        out = {"n": self.n, "d": self.d}
        if self.task == "reptype":
            out.update({"kind": self.kind, "p": self.p, "l": self.l_value})
        elif self.task != "dim":
            out.update(self.scalar_field().describe())
        return out


def _need(cfg: JobConfig, *names: str) -> None:
    missing = [k for k in names if getattr(cfg, k) is None]
    if missing:
        raise UsageError(f"task {cfg.task} needs --{' --'.join(missing)}")


def _records_report(records) -> dict:
    status = "pass" if all(r.ok for r in records) else "fail"
    return {"status": status, "details": {"checks": [r.to_dict() for r in records]}}


def _task_dim(cfg: JobConfig) -> dict:
    from .schur import _dimA0, dim_formula

    n, d = cfg.n, cfg.d
    hi, lo = (n + 1) // 2, n // 2
    dimB = dim_formula(n, d, "B")
    dimA_sum = sum(_dimA0(hi, i) * _dimA0(lo, d - i) for i in range(d + 1))
    return {"status": "pass" if dimB == dimA_sum else "fail", "dimB": dimB, "dimA_sum": dimA_sum, "details": {}}


def _task_centralizer(cfg: JobConfig) -> dict:
    from .schur import TooLarge, _record, centralizer_basis, dim_formula

    field = cfg.scalar_field()
    try:
        basis = centralizer_basis(cfg.n, cfg.d, "B", field, force=cfg.force)
    except TooLarge as exc:
        return {"status": "skipped", "details": {"reason": str(exc)}}
    expect = dim_formula(cfg.n, cfg.d, "B")
    rec = _record("centralizer.dimension", cfg.params(), len(basis) == expect, {"computed": len(basis), "formula": expect})
    return _records_report([rec])


def _task_iso(cfg: JobConfig) -> dict:
    from .schur import InvertibilityFailure, iso_Phi

    try:
        return _records_report(iso_Phi(cfg.n, cfg.d, cfg.scalar_field()))
    except InvertibilityFailure as exc:
        return {"status": "skipped", "details": {"reason": str(exc)}}


def _task_dj(cfg: JobConfig) -> dict:
    from .schur import verify_dj

    ns = (cfg.n,) if cfg.n is not None else (2, 3, 4)
    return _records_report(verify_dj(cfg.d, cfg.scalar_field(), ns=ns))


def _task_qcoord(cfg: JobConfig) -> dict:
    from .qcoord import coideal_check, pairing_check, tcomm_check

    field = cfg.scalar_field()
    recs = pairing_check(cfg.n, cfg.d, field) + [coideal_check(cfg.n, cfg.d, field), tcomm_check(cfg.n, cfg.d, field)]
    return _records_report(recs)


def _gram_rows(report) -> List[dict]:
    return [{"cell": str(g.lam), "matrix": [[str(x) for x in row] for row in g.matrix]} for g in report.grams]


def _task_cell(cfg: JobConfig) -> dict:
    from .cellular import counterexample_datum, gram_factorization_check, product_datum, verify_cell_axioms
    from .schur import InvertibilityFailure

    field = cfg.scalar_field()
    try:
        datum = product_datum(cfg.n, cfg.d, field)
    except InvertibilityFailure as exc:
        if (cfg.n, cfg.d) != (2, 1):
            return {"status": "skipped", "details": {"reason": str(exc)}}
        rep = verify_cell_axioms(counterexample_datum(field), strict=False)
        out = _records_report(rep.records)
        out["details"].update({"datum": "two-cell datum on S^B(2,1)", "grams": _gram_rows(rep), "quasi_hereditary": rep.quasi_hereditary})
        return out
    rep = verify_cell_axioms(datum, strict=False)
    recs = list(rep.records)
    if rep.ok:
        recs.append(gram_factorization_check(cfg.n, cfg.d, field))
    out = _records_report(recs)
    out["details"].update({"cells": len(datum.poset), "grams": _gram_rows(rep), "quasi_hereditary": rep.quasi_hereditary})
    return out


def _task_reptype(cfg: JobConfig) -> dict:
    from .reptype import FieldParams, UnsupportedRegime, classify_detail

    try:
        res = classify_detail(cfg.kind, cfg.n, cfg.d, FieldParams(cfg.p, cfg.l_value))
    except UnsupportedRegime as exc:
        return {"status": "skipped", "details": {"reason": str(exc)}}
    return {"status": "pass", "type": res.rep_type.value, "details": {"clauses": res.clauses, "notes": res.notes}}


def _task_conditions(cfg: JobConfig) -> dict:
    from .reptype import condition_report

    return {"status": "pass", "details": condition_report(cfg.n, cfg.d, cfg.scalar_field())}


HANDLERS = {
    "dim": (_task_dim, ("n", "d")),
    "centralizer": (_task_centralizer, ("n", "d")),
    "verify-iso": (_task_iso, ("n", "d")),
    "verify-dj": (_task_dj, ("d",)),
    "qcoord-check": (_task_qcoord, ("n", "d")),
    "cell-check": (_task_cell, ("n", "d")),
    "reptype": (_task_reptype, ("n", "d")),
    "conditions": (_task_conditions, ("n", "d")),
}


def run(cfg: JobConfig) -> dict:
    """Run one job; the report always carries ``schema``, ``task``, ``params`` and ``status``."""
    if cfg.task not in HANDLERS:
        raise UsageError(f"unknown task {cfg.task!r}")
    handler, required = HANDLERS[cfg.task]
    _need(cfg, *required)
    body = handler(cfg)
    return {"schema": SCHEMA, "task": cfg.task, "params": cfg.params(), **body}


def _int_list(text: Optional[str]) -> List[Optional[int]]:
    if text is None:
        return [None]
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coideal-schur", description="Exact verification jobs for coideal q-Schur algebras.")
    ap.add_argument("--task", required=True, choices=TASKS)
    ap.add_argument("--n", help="rank parameter; a comma list runs one job per value")
    ap.add_argument("--d", help="degree; a comma list runs one job per value")
    ap.add_argument("--field", default="rational", choices=("rational", "gaussian", "symbolic"))
    ap.add_argument("--q", default="2", help="value of q (rational, gaussian such as 1+2*i, or 'symbolic')")
    ap.add_argument("--Q", default="3", help="value of Q")
    ap.add_argument("--p", type=int, default=0, help="characteristic for --task reptype")
    ap.add_argument("--l", default="generic", help="order of q^-2 for --task reptype")
    ap.add_argument("--kind", default="B", choices=("A", "B"), help="Schur algebra type for --task reptype")
    ap.add_argument("--json", metavar="PATH", help="write the report here instead of standard output")
    ap.add_argument("--parallel", type=int, default=1, metavar="K", help="run up to K jobs concurrently")
    ap.add_argument("--force", action="store_true", help="lift the size guard")
    return ap


def _exit_code(reports: Sequence[dict]) -> int:
    if any(r["status"] == "skipped" for r in reports):
        return 2
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.parallel < 1:
            raise UsageError("--parallel must be at least 1")
        if args.task == "reptype" and args.l != "generic" and not args.l.isdigit():
            raise UsageError(f"--l must be a positive integer or 'generic', got {args.l!r}")
        jobs = [
            JobConfig(args.task, n, d, args.field, args.q, args.Q, args.force, args.p, args.l, args.kind)
            for n, d in product(_int_list(args.n), _int_list(args.d))
        ]
        for cfg in jobs:
            handler, required = HANDLERS[cfg.task]
            _need(cfg, *required)
            if cfg.task not in ("dim", "reptype"):
                cfg.scalar_field()
        if args.parallel > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=args.parallel) as pool:
                reports = list(pool.map(run, jobs))
        else:
            reports = [run(cfg) for cfg in jobs]
    except (UsageError, ValueError) as exc:
        print(f"coideal-schur: error: {exc}", file=sys.stderr)
        return 2
    doc = reports[0] if len(reports) == 1 else {"schema": SCHEMA, "jobs": reports, "status": "pass" if _exit_code(reports) == 0 else "fail"}
    text = json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return _exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
