"""Command line front end.

Subcommands:

* ``verify``        run the verification suite over a grid of spaces
* ``logconcavity``  chain and log-concavity checks per target family
* ``schur``         structure-constant checks: nonneg | pieri | line
* ``dump``          byte-stable JSON dump of one space's basis and matrices

Exit codes: 0 all requested checks behave as documented, 1 a verification
failed, 2 parameter or cap errors.  Reports are deterministic for a fixed
configuration; the only varying field is ``meta.generated_at``, which
golden comparisons must exclude.  Dumps carry no timestamp at all.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from fractions import Fraction

from .combinatorics import SizeMismatchError, partitions_of
from .kahler import run_package, usual_grading_signature_report
from .ratlin import RatMatrix, signature
from .schur import (
    NotDominantError,
    OddPartsError,
    verify_line_logconcavity,
    verify_pieri,
    verify_schur_nonneg,
)
from .snrep import (
    NotACharacterError,
    coinvariant_graded_character,
    graded_character,
    length_refined_characters,
    multiplicity_table_csv,
    verify_flag_conjecture,
    verify_novak_conjecture,
    verify_strong_chain,
)
from .spaces import (
    SCHEMA_VERSION,
    Case,
    DimCaps,
    DimensionCapError,
    OutOfRangeError,
    build_space,
    space_dump_dict,
)

PRECONDITION_ERRORS = (
    OutOfRangeError,
    DimensionCapError,
    OddPartsError,
    NotDominantError,
    NotACharacterError,
    SizeMismatchError,
    ValueError,
)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
        if not values:
            raise ValueError(f"empty range {text!r}")
        return values
    return [int(text)]


def _parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _compact(value: dict) -> str:
    """One-cell rendering that carries the same numbers as the JSON output."""
    return "`" + json.dumps(value, sort_keys=True, separators=(",", ":")) + "`"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _congruence_selfcheck(seed: int, trials: int = 3, size: int = 4) -> bool:
    """Signature invariance under random rational congruence, seeded."""
    rng = random.Random(seed)
    for _ in range(trials):
        sym = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                v = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                sym[i][j] = v
                sym[j][i] = v
        m = RatMatrix(sym)
        # random unimodular: product of elementary operations
        p = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        for _ in range(2 * size):
            i, j = rng.sample(range(size), 2)
            c = rng.randint(-2, 2)
            for t in range(size):
                p[i][t] += c * p[j][t]
        pm = RatMatrix(p)
        if signature(pm.transpose() @ m @ pm) != signature(m):
            return False
    return True


def _verify_job(job: tuple[str, int, int | None]) -> dict:
    case, n, m = job
    return run_package(case, n, m).to_dict()


def _job_grid(cases: list[Case], ns: list[int], ms: list[int] | None,
              explicit_case: bool) -> list[tuple[str, int, int | None]]:
    jobs: list[tuple[str, int, int | None]] = []
    for case in cases:
        for n in ns:
            if case is Case.EXT_USUAL:
                jobs.append((case.value, n, None))
                continue
            if ms is None:
                raise OutOfRangeError(f"case {case.value} needs --m")
            for m in ms:
                if case is Case.EXT and m > 2 * n:
                    if explicit_case and len(ms) == 1:
                        raise OutOfRangeError(f"ext case needs m <= 2n, got n={n}, m={m}")
                    continue  # silently clamp grids
                jobs.append((case.value, n, m))
    return jobs


def cmd_verify(args: argparse.Namespace) -> int:
    caps = DimCaps.from_env()
    if args.case == "all":
        cases = [Case.POLY, Case.EXT, Case.EXT_USUAL]
    else:
        cases = [Case(args.case)]
    ns = _parse_range(args.n)
    ms = _parse_range(args.m) if args.m is not None else None
    jobs = _job_grid(cases, ns, ms, explicit_case=args.case != "all")
    for case, n, m in jobs:
        build_space(case, n, m, caps=caps)  # caps enforced up front, exit 2 on violation
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_job, jobs))
    else:
        reports = [_verify_job(job) for job in jobs]
    selfcheck = _congruence_selfcheck(args.seed)
    passed = selfcheck and all(r["pass"] for r in reports)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "config": {
            "case": args.case,
            "n": args.n,
            "m": args.m,
            "jobs": args.jobs,
            "seed": args.seed,
            "caps": {"total": caps.total, "per_degree": caps.per_degree},
        },
        "congruence_selfcheck": selfcheck,
        "reports": reports,
        "pass": passed,
        "meta": {"generated_at": _now()},
    }
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        lines = ["# verification report", ""]
        for r in reports:
            title = f"case={r['case']} n={r['n']}" + (f" m={r['m']}" if r["m"] is not None else "")
            lines += [f"### {title}", "", "| check | verdict | details |", "| --- | --- | --- |"]
            for c in r["checks"]:
                verdict = "pass" if c["pass"] else "FAIL"
                lines.append(f"| {c['name']} | {verdict} | {_compact(c['details'])} |")
            lines += ["", f"overall: {'pass' if r['pass'] else 'FAIL'}", ""]
        lines.append(f"suite: {'pass' if passed else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed else 1


def cmd_logconcavity(args: argparse.Namespace) -> int:
    caps = DimCaps.from_env()
    target = args.target
    payload: dict = {
        "schema_version": SCHEMA_VERSION,
        "command": "logconcavity",
        "target": target,
        "n": args.n,
    }
    csv_text = None
    if target in ("poly", "ext"):
        if args.cap is not None:
            raise OutOfRangeError("--cap applies to the coinvariant and novak targets")
        if args.m is None:
            raise OutOfRangeError(f"target {target} needs --m")
        space = build_space(Case(target), args.n, args.m, caps=caps)
        verdict = verify_strong_chain(space)
        payload["m"] = args.m
        payload["chain"] = verdict.to_dict()
        passed = verdict.passed
        csv_text = multiplicity_table_csv(graded_character(space))
    elif target == "coinvariant":
        kw = {} if args.cap is None else {"cap": args.cap}
        gc = coinvariant_graded_character(args.n, **kw)
        verdict = verify_flag_conjecture(args.n, **kw)
        payload["dims"] = [gc[d].dim for d in sorted(gc)]
        payload["logconcavity"] = verdict.to_dict()
        passed = verdict.passed
        csv_text = multiplicity_table_csv(gc)
    elif target == "novak":
        kw = {} if args.cap is None else {"cap": args.cap}
        gc = length_refined_characters(args.n, **kw)
        verdict = verify_novak_conjecture(args.n, **kw)
        payload["dims"] = [gc[d].dim for d in sorted(gc)]
        payload["logconcavity"] = verdict.to_dict()
        passed = verdict.passed
        csv_text = multiplicity_table_csv(gc)
    else:
        raise OutOfRangeError(f"unknown target {target!r}")
    payload["pass"] = passed
    payload["meta"] = {"generated_at": _now()}
    if args.format == "csv":
        _emit(csv_text, args.out)
    elif args.format == "markdown":
        lines = [f"# log-concavity: {target} n={args.n}", ""]
        key = "chain" if "chain" in payload else "logconcavity"
        for step in payload[key]["steps"]:
            body = dict(step)
            deg = body.pop("degree")
            ok = body.pop("pass", None)
            if ok is None:
                ok = body["multiplicities_nested"] and body["raising_injective"]
            lines.append(f"- degree {deg}: {'pass' if ok else 'FAIL'} {_compact(body)}")
        lines += ["", f"overall: {'pass' if passed else 'FAIL'}"]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text(payload), args.out)
    return 0 if passed else 1


def _nonneg_pairs(max_size: int, max_rows: int = 4):
    """Every pair of shapes of size up to max_size whose padded sum is even."""
    shapes = [p for k in range(max_size + 1) for p in partitions_of(k) if len(p) <= max_rows]
    for lam in shapes:
        for mu in shapes:
            width = max(len(lam), len(mu), 1)
            a = list(lam) + [0] * (width - len(lam))
            b = list(mu) + [0] * (width - len(mu))
            if all((x + y) % 2 == 0 for x, y in zip(a, b)):
                yield lam, mu


def cmd_schur(args: argparse.Namespace) -> int:
    if args.schur_mode == "nonneg" and args.max_size is not None:
        if args.lam is not None or args.mu is not None:
            raise ValueError("--max-size runs a grid; drop --lam/--mu")
        pairs = list(_nonneg_pairs(args.max_size))
        failures = []
        for lam, mu in pairs:
            v = verify_schur_nonneg(lam, mu)
            if not v.passed:
                failures.append(v.to_dict())
        passed = not failures
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "schur nonneg",
            "result": {"max_size": args.max_size, "pairs": len(pairs), "failures": failures},
            "pass": passed,
            "meta": {"generated_at": _now()},
        }
        if args.format == "markdown":
            line = (
                f"schur nonneg grid max_size={args.max_size}: "
                f"{'pass' if passed else 'FAIL'} ({len(pairs)} pairs, "
                f"{len(failures)} failures)\n"
            )
            _emit(line, args.out)
        else:
            _emit(_json_text(payload), args.out)
        return 0 if passed else 1
    if args.schur_mode == "nonneg":
        if args.lam is None or args.mu is None:
            raise ValueError("nonneg needs --lam and --mu, or --max-size for a grid")
        verdict = verify_schur_nonneg(_parse_partition(args.lam), _parse_partition(args.mu))
    elif args.schur_mode == "pieri":
        verdict = verify_pieri(_parse_partition(args.lam), args.k, args.mode)
    else:
        verdict = verify_line_logconcavity(
            _parse_partition(args.start), _parse_partition(args.step), args.count
        )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": f"schur {args.schur_mode}",
        "result": verdict.to_dict(),
        "pass": verdict.passed,
        "meta": {"generated_at": _now()},
    }
    if args.format == "markdown":
        line = f"schur {args.schur_mode}: {'pass' if verdict.passed else 'FAIL'} "
        _emit(line + _compact(verdict.to_dict()) + "\n", args.out)
    else:
        _emit(_json_text(payload), args.out)
    return 0 if verdict.passed else 1


def cmd_dump(args: argparse.Namespace) -> int:
    caps = DimCaps.from_env()
    m = args.m if args.case != Case.EXT_USUAL.value else None
    space = build_space(args.case, args.n, m, caps=caps)
    _emit(_json_text(space_dump_dict(space)), args.out)
    return 0


def cmd_usual_report(args: argparse.Namespace) -> int:
    report = usual_grading_signature_report(args.n)
    payload = report.to_dict()
    payload["meta"] = {"generated_at": _now()}
    _emit(_json_text(payload), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kahlercheck",
        description="exact verification of duality, Lefschetz, definiteness, "
        "and equivariant log-concavity on graded spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite on a grid of spaces")
    p.add_argument("--case", default="all", choices=["poly", "ext", "ext-usual", "all"])
    p.add_argument("--n", required=True, help="value or inclusive range lo..hi")
    p.add_argument("--m", default=None, help="value or inclusive range lo..hi")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=0, help="seed for the congruence selfcheck")
    p.add_argument("--format", default="json", choices=["json", "markdown"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("logconcavity", help="chain or log-concavity checks per target")
    p.add_argument("--target", required=True, choices=["poly", "ext", "coinvariant", "novak"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--cap", type=int, default=None,
                   help="size cap override for the coinvariant and novak targets")
    p.add_argument("--format", default="json", choices=["json", "markdown", "csv"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_logconcavity)

    p = sub.add_parser("schur", help="structure constant checks")
    ssub = p.add_subparsers(dest="schur_mode", required=True)
    q = ssub.add_parser("nonneg")
    q.add_argument("--lam", default=None, help="partition, comma separated")
    q.add_argument("--mu", default=None, help="partition, comma separated")
    q.add_argument("--max-size", type=int, default=None, dest="max_size",
                   help="run every even-sum pair of shapes up to this size instead")
    q.add_argument("--format", default="json", choices=["json", "markdown"])
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_schur)
    q = ssub.add_parser("pieri")
    q.add_argument("--lam", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--mode", default="row", choices=["row", "column"])
    q.add_argument("--format", default="json", choices=["json", "markdown"])
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_schur)
    q = ssub.add_parser("line")
    q.add_argument("--start", required=True)
    q.add_argument("--step", required=True)
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--format", default="json", choices=["json", "markdown"])
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_schur)

    p = sub.add_parser("dump", help="byte-stable JSON dump of one space")
    p.add_argument("--case", required=True, choices=["poly", "ext", "ext-usual"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("usual-report", help="Lefschetz signatures of the singly graded space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_usual_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
