"""Command-line surface.

Commands: hull, reduce, chain, onedim, purelcd, family, scan2t, eaqecc,
verify.  Every constructive command writes replayable witness files;
`verify` replays one against a code file and re-checks its claims.

Exit codes: 0 success, 1 honest negative outcomes (no witness exists,
already LCD, -1 is a square, ...), 2 parse/validation problems, 3 work
budget exceeded.

The default seed is the documented constant hullforge.DEFAULT_SEED; the
HULLFORGE_SEED environment variable overrides it, and --seed overrides
both.  Identical inputs, seed and budgets give byte-identical
--format=structured output (schema_version 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .code import LinearCode, MonomialTransform
from .errors import (AlreadyLcd, BudgetExceeded, DimensionMismatch,
                     DivisionByZero, HullforgeError, HullTooSmall,
                     IndexOutOfRange, MinusOneIsSquare, NonPowerCount,
                     NotASquare, NotLcd, NotSquareMatrix, NoWitness,
                     ParseError, SearchExhausted, SmallFieldUnsupported,
                     SpecMismatch, WrongCharacteristic, ZeroCode, ZeroScale)
from .formats import (format_code, format_witness, load_code, load_witness,
                      save_code, save_witness)
from .gf import FieldSpec
from .hulltune import (DEFAULT_MAX_TRIALS, DEFAULT_SEED, eaqecc_params,
                       hull_chain, make_one_dim_hull, reduce_hull_once)
from .purelcd import conjecture_scan, is_pure_lcd, pure_family

SCHEMA_VERSION = 1

_EXIT1 = (NoWitness, SearchExhausted, AlreadyLcd, NotLcd, MinusOneIsSquare,
          HullTooSmall)
_EXIT2 = (ParseError, SpecMismatch, DimensionMismatch, ZeroCode, ZeroScale,
          IndexOutOfRange, NotASquare, NotSquareMatrix, DivisionByZero,
          SmallFieldUnsupported, WrongCharacteristic, NonPowerCount,
          ValueError)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("HULLFORGE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"HULLFORGE_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ParseError(f"q={q} is not a prime power")
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ParseError(f"q={q} is not a prime power")
    return p, m


def _code_summary(code: LinearCode) -> dict:
    return {"q": code.spec.q, "p": code.spec.p, "m": code.spec.m,
            "n": code.n, "k": code.k}


def _transform_payload(t, claims=None) -> dict:
    return {"sigma": list(t.sigma), "a": list(t.a),
            "claims": dict(claims or {})}


def _write(out_dir: Path, name: str, text: str) -> str:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# -- command handlers ---------------------------------------------------------

def cmd_hull(args, out_dir):
    code = load_code(args.file)
    rep = code.hull()
    payload = {
        **_code_summary(code),
        "h": rep.h,
        "rank_gram": rep.rank_gram,
        "rank_dual_gram": rep.rank_dual_gram,
        "lcd": code.is_lcd(),
        "self_orthogonal": code.is_self_orthogonal(),
        "self_dual": code.is_self_dual(),
    }
    human = [
        f"[{code.n},{code.k}] code over {code.spec}",
        f"  hull dimension   {rep.h}",
        f"  rank(G G^T)      {rep.rank_gram}",
        f"  rank(H H^T)      {rep.rank_dual_gram}",
        f"  LCD              {'yes' if payload['lcd'] else 'no'}",
        f"  self-orthogonal  {'yes' if payload['self_orthogonal'] else 'no'}",
        f"  self-dual        {'yes' if payload['self_dual'] else 'no'}",
    ]
    return 0, payload, human


def cmd_reduce(args, out_dir):
    code = load_code(args.file)
    seed = _resolve_seed(args)
    reduced, witness = reduce_hull_once(code, seed, args.budget_trials)
    h_new = reduced.hull().h
    stem = Path(args.file).stem
    claims = {"h": h_new, "n": reduced.n, "k": reduced.k}
    wfile = _write(out_dir, f"{stem}.reduce.witness", format_witness(witness, claims))
    cfile = _write(out_dir, f"{stem}.reduce.code", format_code(reduced))
    payload = {
        **_code_summary(code),
        "seed": seed,
        "h_before": h_new + 1,
        "h_after": h_new,
        "witness": _transform_payload(witness, claims),
        "files": {"witness": wfile, "code": cfile},
    }
    human = [
        f"hull dimension {h_new + 1} -> {h_new}",
        f"  a     = {' '.join(str(v) for v in witness.a)}",
        f"  sigma = {' '.join(str(v) for v in witness.sigma)}",
        f"  wrote {wfile}",
        f"  wrote {cfile}",
    ]
    return 0, payload, human


def cmd_chain(args, out_dir):
    code = load_code(args.file)
    seed = _resolve_seed(args)
    report = hull_chain(code, seed, args.budget_distance, args.budget_trials)
    stem = Path(args.file).stem
    entries = []
    human = [f"hull chain for [{code.n},{code.k}] over {code.spec}: "
             f"dims {', '.join(str(d) for d in report.dims)}",
             f"{'h':>3} {'d':>4}  a / sigma"]
    for e in report.entries:
        claims = {"h": e.h, "n": e.n, "k": e.k}
        if e.d_verified:
            claims["d"] = e.d
        wfile = _write(out_dir, f"{stem}.chain.h{e.h}.witness",
                       format_witness(e.transform, claims))
        cfile = _write(out_dir, f"{stem}.chain.h{e.h}.code", format_code(e.code))
        entries.append({
            "h": e.h,
            "n": e.n,
            "k": e.k,
            "d": e.d,
            "d_verified": e.d_verified,
            "witness": _transform_payload(e.transform, claims),
            "steps": [list(s) for s in e.steps],
            "files": {"witness": wfile, "code": cfile},
        })
        dtxt = str(e.d) if e.d_verified else "?"
        human.append(f"{e.h:>3} {dtxt:>4}  a={' '.join(str(v) for v in e.transform.a)}"
                     f"  sigma={' '.join(str(v) for v in e.transform.sigma)}")
    payload = {**_code_summary(code), "seed": seed,
               "dims": list(report.dims), "entries": entries}
    return 0, payload, human


def cmd_onedim(args, out_dir):
    code = load_code(args.file)
    result, witness, index = make_one_dim_hull(code)
    stem = Path(args.file).stem
    claims = {"h": 1, "n": result.n, "k": result.k}
    wfile = _write(out_dir, f"{stem}.onedim.witness", format_witness(witness, claims))
    cfile = _write(out_dir, f"{stem}.onedim.code", format_code(result))
    payload = {
        **_code_summary(code),
        "index": index,
        "h_after": 1,
        "witness": _transform_payload(witness, claims),
        "files": {"witness": wfile, "code": cfile},
    }
    human = [
        f"one-dimensional hull via standard-form coordinate {index}",
        f"  a     = {' '.join(str(v) for v in witness.a)}",
        f"  sigma = {' '.join(str(v) for v in witness.sigma)}",
        f"  wrote {wfile}",
        f"  wrote {cfile}",
    ]
    return 0, payload, human


def cmd_purelcd(args, out_dir):
    code = load_code(args.file)
    report = is_pure_lcd(code, args.budget_scan)
    payload = {
        **_code_summary(code),
        "verdict": report.verdict,
        "checked": report.checked,
        "classes_total": report.classes_total,
        "work_units": report.work_units,
        "witness": None,
    }
    human = [f"[{code.n},{code.k}] over {code.spec}: {report.verdict} "
             f"({report.checked} of {report.classes_total} square-class "
             f"vectors checked)"]
    if report.witness is not None:
        w = report.witness
        t = MonomialTransform.scaling(w.a)
        claims = {"h": w.h}
        stem = Path(args.file).stem
        wfile = _write(out_dir, f"{stem}.purelcd.witness",
                       format_witness(t, claims))
        payload["witness"] = {"u": list(w.u), "a": list(w.a), "h": w.h,
                              "file": wfile}
        human.append(f"  witness u = {' '.join(str(v) for v in w.u)}"
                     f"  (a = {' '.join(str(v) for v in w.a)}, hull {w.h})")
        human.append(f"  wrote {wfile}")
    return 0, payload, human


def cmd_family(args, out_dir):
    p, m = _prime_power(args.q)
    spec = FieldSpec(p, m)
    code = pure_family(spec, args.k, verify_budget=0)
    report = is_pure_lcd(code, args.budget_scan)
    cfile = _write(out_dir, f"family.q{spec.q}.k{args.k}.code", format_code(code))
    payload = {
        **_code_summary(code),
        "verdict": report.verdict,
        "checked": report.checked,
        "files": {"code": cfile},
    }
    human = [
        f"pure LCD family member [I_k : I_k]: [{code.n},{code.k}] over {spec}",
        f"  purity scan: {report.verdict} over {report.checked} classes",
        f"  wrote {cfile}",
    ]
    return 0, payload, human


def cmd_scan2t(args, out_dir):
    p, m = _prime_power(args.q)
    if p != 2 or m == 1:
        raise WrongCharacteristic(f"scan2t needs q = 2^t with t > 1, got q={args.q}")
    spec = FieldSpec(p, m)
    seed = _resolve_seed(args)
    report = conjecture_scan(spec, args.n, args.k, mode=args.mode, seed=seed,
                             samples=args.samples, budget=args.budget_scan)

    def specimen_payload(sp, name):
        entry = {
            "index": sp.index,
            "tags": list(sp.tags),
            "code_file": format_code(sp.code),
            "verdict": sp.purity.verdict,
            "checked": sp.purity.checked,
            "witness_lines": None,
        }
        if sp.purity.witness is not None:
            t = MonomialTransform.scaling(sp.purity.witness.a)
            entry["witness_lines"] = format_witness(
                t, {"h": sp.purity.witness.h})
        path = _write(out_dir, name, entry["code_file"])
        entry["file"] = path
        return entry

    def escapee_payload(sp):
        lines = None
        if sp.purity.witness is not None:
            lines = format_witness(
                MonomialTransform.scaling(sp.purity.witness.a),
                {"h": sp.purity.witness.h})
        return {"index": sp.index, "tags": list(sp.tags),
                "code_file": format_code(sp.code),
                "verdict": sp.purity.verdict, "witness_lines": lines}

    specimens = [specimen_payload(sp, f"scan.q{spec.q}.n{args.n}.k{args.k}."
                                      f"specimen{i}.code")
                 for i, sp in enumerate(report.specimens)]
    escapees = [escapee_payload(sp) for sp in report.escapees]
    payload = {
        "q": report.q, "n": report.n, "k": report.k,
        "mode": report.mode, "seed": report.seed,
        "codes_scanned": report.codes_scanned,
        "classes_per_code": report.classes_per_code,
        "pure_count": report.pure_count,
        "specimens": specimens,
        "escapees": escapees,
    }
    human = [
        f"scan of {report.codes_scanned} standard-form [{args.n},{args.k}] "
        f"codes over GF({report.q}) ({report.classes_per_code} classes each)",
        f"  pure LCD found: {report.pure_count}",
        f"  escape both determinant hypotheses: {len(report.escapees)}",
    ]
    for s in specimens:
        human.append(f"  specimen index {s['index']} archived -> {s['file']}")
    return 0, payload, human


def cmd_eaqecc(args, out_dir):
    code = load_code(args.file)
    params = eaqecc_params(code, args.l, budget_distance=args.budget_distance)
    payload = {
        **_code_summary(code),
        "l": params.l,
        "eaqecc": {"n": params.n, "k": params.k_logical, "d": params.d,
                   "c": params.c},
        "mds": params.mds,
    }
    human = [f"[[{params.n},{params.k_logical},{params.d};{params.c}]]_"
             f"{code.spec.q}" + ("  (MDS)" if params.mds else "")]
    return 0, payload, human


def cmd_verify(args, out_dir):
    code = load_code(args.code_file)
    transform, claims = load_witness(args.witness_file)
    result = code.apply(transform)
    checks = []

    def check(name, expected, actual):
        checks.append({"claim": name, "expected": expected, "actual": actual,
                       "ok": expected == actual})

    if "h" in claims:
        check("h", claims["h"], result.hull().h)
    if "n" in claims:
        check("n", claims["n"], result.n)
    if "k" in claims:
        check("k", claims["k"], result.k)
    if "d" in claims:
        check("d", claims["d"], result.min_distance(args.budget_distance))
    ok = all(c["ok"] for c in checks)
    payload = {
        **_code_summary(code),
        "claims_checked": len(checks),
        "checks": checks,
        "verified": ok,
    }
    human = []
    for c in checks:
        mark = "ok" if c["ok"] else "MISMATCH"
        human.append(f"  claim {c['claim']}={c['expected']}: actual "
                     f"{c['actual']} ({mark})")
    human.insert(0, "witness verifies" if ok else "witness FAILED verification")
    return (0 if ok else 1), payload, human


# -- parser / dispatch ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullforge",
        description="hull dimensions of linear codes and their monomial "
                    "re-engineering")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"search seed (default {DEFAULT_SEED}, or "
                             "HULLFORGE_SEED)")
    common.add_argument("--budget-distance", type=int, default=10 ** 7,
                        help="max codeword enumerations for min distance")
    common.add_argument("--budget-scan", type=int, default=10 ** 7,
                        help="max square-class checks for purity scans")
    common.add_argument("--budget-trials", type=int, default=DEFAULT_MAX_TRIALS,
                        help="randomized draws before the deterministic sweep")
    common.add_argument("--format", choices=("human", "structured"),
                        default="human", help="output format")
    common.add_argument("--out", default=".", help="directory for emitted files")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", parents=[common],
                       help="hull dimension, ranks and flags of a code file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_hull)

    p = sub.add_parser("reduce", parents=[common],
                       help="equivalent code with hull dimension one lower")
    p.add_argument("file")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("chain", parents=[common],
                       help="equivalent codes for every hull dimension h..0")
    p.add_argument("file")
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("onedim", parents=[common],
                       help="one-dimensional-hull equivalent of an LCD code")
    p.add_argument("file")
    p.set_defaults(handler=cmd_onedim)

    p = sub.add_parser("purelcd", parents=[common],
                       help="exhaustive pure-LCD scan over square classes")
    p.add_argument("file")
    p.set_defaults(handler=cmd_purelcd)

    p = sub.add_parser("family", parents=[common],
                       help="pure LCD family member [I_k : I_k] over GF(q)")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("scan2t", parents=[common],
                       help="conjecture scan over standard-form codes, q=2^t")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mode", choices=("exhaustive", "sampled"),
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=100,
                   help="codes to draw in sampled mode")
    p.set_defaults(handler=cmd_scan2t)

    p = sub.add_parser("eaqecc", parents=[common],
                       help="entanglement-assisted parameters [[n,k-l,d;n-k-l]]")
    p.add_argument("file")
    p.add_argument("l", type=int)
    p.set_defaults(handler=cmd_eaqecc)

    p = sub.add_parser("verify", parents=[common],
                       help="replay a witness file and re-check its claims")
    p.add_argument("code_file")
    p.add_argument("witness_file")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        exit_code, payload, human = args.handler(args, Path(args.out))
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except _EXIT1 as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except _EXIT2 as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    envelope = {"schema_version": SCHEMA_VERSION, "command": args.command,
                **payload}
    if args.format == "structured":
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        print("\n".join(human))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
