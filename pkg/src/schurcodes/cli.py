"""Command-line front end.

All results go to stdout as JSON (one document, or JSON lines for
search-pmds); diagnostics go to stderr.  Exit codes: 0 success, 1 a queried
property is false, 2 input or validation error, 3 enumeration budget
exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

import numpy as np

from . import classify, generate, rs, stab
from .code import LinearCode
from .errors import BudgetExceededError, NotPmdsError, SchurCodesError
from .gf import GF, proj_points

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as f:
        return LinearCode.from_json(json.load(f))


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")


def _field_from_args(args) -> GF:
    modulus = None
    if args.modulus:
        modulus = [int(x) for x in args.modulus.split(",")]
    return GF(args.p, args.m, modulus)


@dataclasses.dataclass
class SearchConfig:
    """Mirrors the search-pmds JSON config field-for-field."""

    field: dict
    n: List[int]  # [lo, hi]
    dim_c: List[int]
    dim_d: List[int]
    mode: str = "random"
    samples: int = 1000
    seed: int = 0
    jobs: int = 1
    budget: Optional[int] = None
    max_instances: int = 100000

    @staticmethod
    def from_json(doc: dict) -> "SearchConfig":
        def as_range(v):
            return [int(v), int(v)] if isinstance(v, int) else [int(v[0]), int(v[1])]

        cfg = SearchConfig(
            field=doc["field"],
            n=as_range(doc["n"]),
            dim_c=as_range(doc.get("dim_c", [1, as_range(doc["n"])[1]])),
            dim_d=as_range(doc.get("dim_d", [1, as_range(doc["n"])[1]])),
            mode=doc.get("mode", "random"),
            samples=int(doc.get("samples", 1000)),
            seed=int(doc.get("seed", 0)),
            jobs=int(doc.get("jobs", 1)),
            budget=doc.get("budget"),
            max_instances=int(doc.get("max_instances", 100000)),
        )
        if cfg.mode not in ("random", "exhaustive"):
            raise ValueError(f"unknown search mode {cfg.mode!r}")
        return cfg


def _examine_pair(c: LinearCode, d: LinearCode, budget) -> Optional[dict]:
    try:
        if not classify.is_pmds(c, d, budget):
            return None
    except (SchurCodesError, ValueError):
        return None
    cd = c.schur_product(d)
    rec = {
        "n": c.n,
        "dims": [c.k, d.k],
        "d_min_product": cd.min_distance(budget),
        "c": c.to_json(),
        "d": d.to_json(),
    }
    try:
        cert = classify.classify_pmds(c, d, budget)
        rec["certificate"] = cert.to_json()
        rec["verified"] = classify.verify_certificate(cert, c, d)
    except NotPmdsError as e:  # PMDS by the bound but degenerate support
        rec["certificate"] = None
        rec["verified"] = None
        rec["diagnostic"] = str(e)
    return rec


def _random_candidate(cfg: SearchConfig, index: int) -> Optional[dict]:
    field = GF.from_json(cfg.field)
    rng = random.Random(cfg.seed * 1_000_003 + index)
    n = rng.randint(cfg.n[0], cfg.n[1])
    kc = rng.randint(cfg.dim_c[0], min(cfg.dim_c[1], n))
    kd = rng.randint(cfg.dim_d[0], min(cfg.dim_d[1], n))
    try:
        c = generate.random_code(field, n, kc, rng)
        d = generate.random_code(field, n, kd, rng)
        rec = _examine_pair(c, d, cfg.budget)
    except (SchurCodesError, ValueError):
        return None
    if rec is not None:
        rec["index"] = index
    return rec


def _search_random(cfg: SearchConfig, out) -> None:
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = pool.map(
                _random_candidate, [cfg] * cfg.samples, range(cfg.samples), chunksize=64
            )
            for rec in results:
                if rec is not None:
                    out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    else:
        for i in range(cfg.samples):
            rec = _random_candidate(cfg, i)
            if rec is not None:
                out.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _search_exhaustive(cfg: SearchConfig, out) -> None:
    field = GF.from_json(cfg.field)
    count = 0
    index = 0
    for n in range(cfg.n[0], cfg.n[1] + 1):
        for kc in range(cfg.dim_c[0], min(cfg.dim_c[1], n) + 1):
            for kd in range(cfg.dim_d[0], min(cfg.dim_d[1], n) + 1):
                for c in generate.enumerate_codes(field, n, kc):
                    for d in generate.enumerate_codes(field, n, kd):
                        if count >= cfg.max_instances:
                            return
                        count += 1
                        rec = _examine_pair(c, d, cfg.budget)
                        if rec is not None:
                            rec["index"] = index
                            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
                            index += 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurcodes", description=__doc__)
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    ap.add_argument("--budget", type=int, default=None, help="enumeration budget override")
    ap.add_argument("--jobs", type=int, default=1, help="parallel workers for search")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name):
        return sub.add_parser(name, parents=[common])

    add("product").add_argument("codes", nargs=2)
    add("mindist").add_argument("code")
    add("stabilizer").add_argument("code")
    add("decompose").add_argument("code")
    add("is-mds").add_argument("code")
    add("is-rs").add_argument("code")
    add("recover-rs").add_argument("code")
    add("classify-pmds").add_argument("codes", nargs=2)
    add("check-bounds").add_argument("codes", nargs="+")

    mk_rs = add("make-rs")
    mk_rs.add_argument("--p", type=int, required=True)
    mk_rs.add_argument("--m", type=int, default=1)
    mk_rs.add_argument("--modulus", default=None)
    mk_rs.add_argument("--n", type=int, required=True)
    mk_rs.add_argument("--k", type=int, required=True)
    mk_rs.add_argument("--alpha", default=None, help='comma list, e.g. "0,1,2,inf"')
    mk_rs.add_argument("--g", default=None, help="comma list of multipliers")
    mk_rs.add_argument("--random-g", action="store_true")

    mk_dp = add("make-dual-pair")
    mk_dp.add_argument("code", help="JSON document for D")
    mk_dp.add_argument("--g", default=None)
    mk_dp.add_argument("--random-g", action="store_true")

    mk_sd = add("make-selfdual")
    mk_sd.add_argument("--p", type=int, required=True)
    mk_sd.add_argument("--m", type=int, default=1)
    mk_sd.add_argument("--modulus", default=None)
    mk_sd.add_argument("--nhalf", type=int, required=True)

    add("make-direct-sum").add_argument("codes", nargs=2)

    sp = add("search-pmds")
    sp.add_argument("--config", required=True)
    return ap


def cli_main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    budget = args.budget
    try:
        if args.command == "product":
            a, b = map(_load_code, args.codes)
            _emit(a.schur_product(b).to_json())
        elif args.command == "mindist":
            _emit(_load_code(args.code).min_distance(budget))
        elif args.command == "stabilizer":
            st = stab.stabilizer(_load_code(args.code))
            _emit({"n": st.n, "dim": st.dim, "basis": st.basis.to_lists()})
        elif args.command == "decompose":
            _emit(stab.decompose(_load_code(args.code)).to_json())
        elif args.command == "is-mds":
            verdict = _load_code(args.code).is_mds(budget)
            _emit(verdict)
            return EXIT_OK if verdict else EXIT_FALSE
        elif args.command == "is-rs":
            cert = rs.recover_rs(_load_code(args.code), budget)
            _emit(cert is not None)
            return EXIT_OK if cert is not None else EXIT_FALSE
        elif args.command == "recover-rs":
            cert = rs.recover_rs(_load_code(args.code), budget)
            _emit(None if cert is None else cert.to_json())
            return EXIT_OK if cert is not None else EXIT_FALSE
        elif args.command == "classify-pmds":
            c, d = map(_load_code, args.codes)
            try:
                cert = classify.classify_pmds(c, d, budget)
            except NotPmdsError as e:
                print(f"not PMDS: {e}", file=sys.stderr)
                _emit(None)
                return EXIT_FALSE
            _emit(cert.to_json())
        elif args.command == "check-bounds":
            codes = [_load_code(p) for p in args.codes]
            reports = []
            for c in codes:
                reports.append(classify.singleton_check(c, budget))
                reports.append(_refined_report(c, budget))
            if len(codes) == 2:
                reports.append(classify.kneser_check(codes[0], codes[1]))
            if len(codes) >= 2:
                reports.append(classify.psb_check(codes, budget))
            _emit([r.to_json() for r in reports])
            return EXIT_OK if all(r.holds for r in reports) else EXIT_FALSE
        elif args.command == "make-rs":
            field = _field_from_args(args)
            rng = random.Random(args.seed)
            if args.alpha:
                alpha = proj_points(field, args.alpha.split(","))
            else:
                alpha = generate.random_points(field, args.n, rng)
            if args.g:
                g = np.array([int(x) for x in args.g.split(",")], dtype=np.int64)
            elif args.random_g:
                g = generate.random_invertible_vector(field, args.n, rng)
            else:
                g = np.ones(args.n, dtype=np.int64)
            _emit(rs.rs_code(field, g, alpha, args.k).to_json())
        elif args.command == "make-dual-pair":
            d = _load_code(args.code)
            rng = random.Random(args.seed)
            if args.g:
                g = np.array([int(x) for x in args.g.split(",")], dtype=np.int64)
            elif args.random_g:
                g = generate.random_invertible_vector(d.field, d.n, rng)
            else:
                g = np.ones(d.n, dtype=np.int64)
            c, d = classify.make_dual_pair(d, g)
            _emit({"c": c.to_json(), "d": d.to_json(), "g": g.tolist()})
        elif args.command == "make-selfdual":
            field = _field_from_args(args)
            _emit(classify.make_selfdual(field, args.nhalf, args.seed).to_json())
        elif args.command == "make-direct-sum":
            a, b = map(_load_code, args.codes)
            _emit(a.direct_sum(b).to_json())
        elif args.command == "search-pmds":
            with open(args.config, "r", encoding="utf-8") as f:
                cfg = SearchConfig.from_json(json.load(f))
            if args.budget is not None:
                cfg.budget = args.budget
            if args.jobs != 1:
                cfg.jobs = args.jobs
            if cfg.mode == "random":
                _search_random(cfg, sys.stdout)
            else:
                _search_exhaustive(cfg, sys.stdout)
        else:  # pragma: no cover
            raise AssertionError(args.command)
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (SchurCodesError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _refined_report(c, budget) -> classify.BoundReport:
    rep = stab.singleton_refined_check(c, budget)
    holds = (rep.bound1_holds in (True, None)) and (rep.bound2_holds in (True, None))
    return classify.BoundReport(
        "refined_singleton",
        rep.d,
        rep.n - rep.k + 1 - (rep.h - 1),
        holds,
        rep.to_json(),
    )


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
