"""Command-line front end.

    unequal-lrc bound info -n 15 -k 11 --profile 0,4,3,4
    unequal-lrc construct pyramid --profile 0,4,3,4 -d 2 -q 16 -o code.json
    unequal-lrc analyze code.json
    unequal-lrc optimize-profile --requirement 0,3,3 --certify
    unequal-lrc simulate code.json --trials 1000 --erasures 2 --seed 7

Exit codes: 0 success, 2 invalid input or failed precondition, 3 oracle
budget exceeded.  ``--json`` switches any command to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path

from unequal_lrc import bounds, code_core, constructions, profile_opt
from unequal_lrc.code_core import (
    ErasurePattern,
    LinearCode,
    OracleBudgetExceeded,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


class _Usage(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_counts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.strip().strip("{}[]").split(",") if x.strip()]
    except ValueError:
        raise _Usage(f"malformed profile {text!r}; expected comma-separated integers") from None


# ---------------------------------------------------------------------- bound


def cmd_bound(args) -> int:
    if args.kind == "gopalan":
        if args.r is None:
            raise _Usage("gopalan bound needs -r")
        report = bounds.gopalan_report(args.n, args.k, args.r)
    else:
        if args.profile is None:
            raise _Usage(f"{args.kind} bound needs --profile")
        counts = _parse_counts(args.profile)
        if args.kind == "info":
            report = bounds.unequal_info_bound(args.n, args.k, counts)
        else:
            report = bounds.unequal_all_symbol_bound(args.n, args.k, counts)
    _emit(args, report.to_dict(), report.trace())
    return EXIT_OK


# ------------------------------------------------------------------ construct


def code_file_payload(construction) -> dict:
    d = construction.code.to_dict()
    d["construction"] = construction.descriptor()
    return d


def cmd_construct(args) -> int:
    counts = _parse_counts(args.profile)
    if args.kind == "pyramid":
        if args.d is None:
            raise _Usage("pyramid construction needs -d")
        built = constructions.pyramid_unequal(counts, args.d, args.q)
        summary = {
            "n": built.code.n,
            "k": built.code.k,
            "d_design": built.d_design,
            "intended_info_profile": list(built.intended_profile.counts),
        }
    else:
        if args.k is None or args.q is None:
            raise _Usage("gabidulin construction needs -k and -q")
        built = constructions.gabidulin_lrc(args.k, counts, args.q, args.m)
        d = bounds.unequal_all_symbol_bound(built.code.n, built.code.k, built.intended_profile).bound
        summary = {
            "n": built.code.n,
            "k": built.code.k,
            "d_design": d,
            "intended_all_symbol_profile": list(built.intended_profile.counts),
        }
    payload = code_file_payload(built)
    if args.output:
        Path(args.output).write_text(json.dumps(payload, indent=1))
        summary["output"] = args.output
    elif not args.json:
        print(json.dumps(payload))
    text = "\n".join(f"{k}: {v}" for k, v in summary.items())
    _emit(args, summary if args.output else {**summary, "code": payload}, text)
    return EXIT_OK


# -------------------------------------------------------------------- analyze


def load_code(path: str) -> tuple[LinearCode, dict]:
    data = json.loads(Path(path).read_text())
    return LinearCode.from_dict(data), data.get("construction") or {}


def analyze(code: LinearCode) -> dict:
    """Everything the oracles can say about a code; omissions are listed."""
    out: dict = {"n": code.n, "k": code.k, "field": code.field.to_dict(), "omitted": {}}

    def attempt(name, fn):
        try:
            out[name] = fn()
        except OracleBudgetExceeded as exc:
            out["omitted"][name] = f"budget exceeded: {exc}"
        except (ValueError, ArithmeticError) as exc:
            out["omitted"][name] = str(exc)

    attempt("min_distance", lambda: code_core.min_distance(code))
    attempt("all_symbol_profile", lambda: list(code_core.all_symbol_profile(code).counts))
    attempt("info_profile", lambda: list(code_core.info_profile(code).counts))
    if "info_profile" in out:
        attempt("info_bound", lambda: bounds.unequal_info_bound(code.n, code.k, out["info_profile"]).to_dict())
    if "all_symbol_profile" in out:
        attempt(
            "all_symbol_bound",
            lambda: bounds.unequal_all_symbol_bound(code.n, code.k, out["all_symbol_profile"]).to_dict(),
        )
    if "info_profile" in out:

        def _witness():
            w = bounds.witness_set(code)
            return {
                "size": len(w),
                "rank": w.rank,
                "coordinates": sorted(w.coordinates),
                "log": [asdict(s) for s in w.iteration_log],
            }

        attempt("witness_set", _witness)
    if "min_distance" in out:
        d = out["min_distance"]
        for key in ("info_bound", "all_symbol_bound"):
            if key in out:
                out[key.replace("bound", "gap")] = out[key]["bound"] - d
        if "witness_set" in out:
            size = out["witness_set"]["size"]
            out["witness_check"] = {"witness_size": size, "n_minus_d": code.n - d, "holds": size <= code.n - d}
    return out


def _render_analysis(rep: dict, construction: dict) -> str:
    lines = [f"(n, k) = ({rep['n']}, {rep['k']}) over GF({rep['field']['p']}^{rep['field']['w'] * rep['field']['m']})"]
    if "min_distance" in rep:
        lines.append(f"minimum distance: {rep['min_distance']}")
    if "all_symbol_profile" in rep:
        lines.append(f"all-symbol locality profile: {rep['all_symbol_profile']}")
    if "info_profile" in rep:
        lines.append(f"information locality profile: {rep['info_profile']}")
    if "info_bound" in rep:
        lines.append(f"information-locality bound: {rep['info_bound']['bound']} (gap {rep.get('info_gap', '?')})")
    if "all_symbol_bound" in rep:
        lines.append(
            f"all-symbol-locality bound: {rep['all_symbol_bound']['bound']} (gap {rep.get('all_symbol_gap', '?')})"
        )
    if "witness_set" in rep:
        lines.append(f"witness set: |S| = {rep['witness_set']['size']}, rank {rep['witness_set']['rank']}")
    if "witness_check" in rep:
        f = rep["witness_check"]
        lines.append(f"|S| <= n - d: {f['witness_size']} <= {f['n_minus_d']} -> {'ok' if f['holds'] else 'VIOLATED'}")
    if construction:
        intended = construction.get("profile") or construction.get("nprofile")
        lines.append(f"construction: {construction.get('kind')} with intended profile {intended}")
    for name, why in rep["omitted"].items():
        lines.append(f"omitted {name}: {why}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    code, construction = load_code(args.code_file)
    rep = analyze(code)
    if construction:
        rep["construction"] = construction
    _emit(args, rep, _render_analysis(rep, construction))
    return EXIT_BUDGET if any("budget" in v for v in rep["omitted"].values()) else EXIT_OK


# ------------------------------------------------------------------- optimize


def cmd_optimize(args) -> int:
    req = profile_opt.LocalityRequirement(_parse_counts(args.requirement))
    k_star, trace = profile_opt.greedy_optimal_profile(req)
    obj = profile_opt.objective(k_star)
    payload = {
        "requirement": list(req.counts),
        "k": req.k,
        "profile": list(k_star.counts),
        "objective": obj,
        "trace": [asdict(s) for s in trace.steps],
    }
    lines = [f"requirement {req} (k = {req.k})", "greedy trace:"]
    for s in trace.steps:
        lines.append(f"  j={s.j}: {req.counts[s.j - 1]} + {s.carry_in} = {s.j}*{s.b} + {s.g} -> k*_{s.j} = {s.k_star}")
    lines.append(f"optimal profile {k_star}, objective {obj}")
    if args.certify:
        best = profile_opt.exhaustive_optimal_objective(req)
        payload["exhaustive_objective"] = best
        payload["certified"] = best == obj
        lines.append(f"exhaustive minimum {best}: {'certified' if best == obj else 'MISMATCH'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ------------------------------------------------------------------- simulate


@dataclass
class SimReport:
    trials: int
    erasures: int
    seed: int
    successes: int = 0
    erasure_sizes: dict = field(default_factory=dict)
    repair_cost: dict = field(default_factory=dict)
    global_repairs: int = 0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["success_rate"] = self.success_rate
        return d


def simulate(code: LinearCode, trials: int, erasures: int, seed: int) -> SimReport:
    """Random-erasure decoding trials driven by ``random.Random(seed)``.

    Each trial draws a uniform message and a uniform erasure set of the given
    size.  Success means the message is recovered exactly.  Each erased
    symbol whose minimum repair group survives counts as a local repair of
    cost equal to its locality; the rest count as global repairs.
    """
    if not 0 <= erasures <= code.n:
        raise ValueError(f"erasures must lie in [0, n = {code.n}]")
    rng = random.Random(seed)
    F = code.field
    report = SimReport(trials, erasures, seed)
    sizes: Counter = Counter()
    costs: Counter = Counter()
    locs: dict[int, code_core.Locality | None] = {}
    for i in range(code.n):
        try:
            locs[i] = code_core.coordinate_locality(code, i)
        except code_core.UnrecoverableCoordinate:
            locs[i] = None
    for _ in range(trials):
        msg = [rng.randrange(F.order) for _ in range(code.k)]
        cw = code_core.encode(code, msg)
        erased = rng.sample(range(code.n), erasures)
        pattern = ErasurePattern(erased, code.n)
        sizes[len(erased)] += 1
        received = [None if i in pattern.erased else x for i, x in enumerate(cw)]
        if code_core.erasure_decode(code, received, pattern) == msg:
            report.successes += 1
        for i in sorted(erased):
            loc = locs[i]
            if loc is not None and not pattern.erased.intersection(loc.repair_group):
                costs[loc.locality] += 1
            else:
                report.global_repairs += 1
    report.erasure_sizes = {str(k): v for k, v in sorted(sizes.items())}
    report.repair_cost = {str(k): v for k, v in sorted(costs.items())}
    return report


def cmd_simulate(args) -> int:
    code, _ = load_code(args.code_file)
    if args.erasures > code.n:
        raise _Usage(f"erasures = {args.erasures} exceeds n = {code.n}")
    rep = simulate(code, args.trials, args.erasures, args.seed)
    text = "\n".join(
        [
            f"trials {rep.trials}, erasures {rep.erasures}, seed {rep.seed}",
            f"decoded {rep.successes}/{rep.trials} ({100 * rep.success_rate:.1f}%)",
            f"local repairs by locality: {rep.repair_cost}",
            f"repairs needing global decoding: {rep.global_repairs}",
        ]
    )
    _emit(args, rep.to_dict(), text)
    return EXIT_OK


# ----------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="unequal-lrc", description=__doc__.split("\n")[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[common], help="evaluate a distance bound")
    b.add_argument("kind", choices=["info", "all-symbol", "gopalan"])
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-k", type=int, required=True)
    b.add_argument("-r", type=int)
    b.add_argument("--profile")
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("construct", parents=[common], help="build an optimal code")
    c.add_argument("kind", choices=["pyramid", "gabidulin"])
    c.add_argument("--profile", required=True, help="info profile (pyramid) or all-symbol profile (gabidulin)")
    c.add_argument("-d", type=int, help="design distance (pyramid)")
    c.add_argument("-k", type=int, help="dimension (gabidulin)")
    c.add_argument("-q", type=int, help="field size (pyramid) or base field size (gabidulin)")
    c.add_argument("-m", type=int, help="extension degree (gabidulin, default N)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", parents=[common], help="run every oracle on a code file")
    a.add_argument("code_file")
    a.set_defaults(func=cmd_analyze)

    o = sub.add_parser("optimize-profile", parents=[common], help="optimal profile for a requirement")
    o.add_argument("--requirement", required=True)
    o.add_argument("--certify", action="store_true", help="confirm by exhaustive search")
    o.set_defaults(func=cmd_optimize)

    s = sub.add_parser("simulate", parents=[common], help="random erasure trials")
    s.add_argument("code_file")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--erasures", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_simulate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_Usage, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
