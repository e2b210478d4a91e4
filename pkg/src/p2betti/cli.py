"""Command-line entry point: ``p2betti <command> --weights a,b,c,...``.

Exit status is 0 on success, 2 on invalid input and 1 when an internal
consistency check (or the ``verify`` oracle comparison) fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .core import AdmissibilityError, ConeKind, ConsistencyError, Polarization, Subset, normalize
from .crossing import epsilon, q_poly
from .p1 import p1_ip
from .paths import chamber_poincare, find_crossings, ip, reference
from .sampling import count_chambers, verify_six_point_oracle
from .six import (
    closed_form_case,
    count_excluded_collinear_triples,
    ip_closed_form,
    singularity_report,
)
from .smallres import find_small_resolution, is_small, satisfies_definition
from .stability import (
    StratumKind,
    cone_position,
    gamma_c,
    gamma_l,
    subset_state,
    z_strata,
)

SCHEMA_VERSION = "1"


class InputError(ValueError):
    pass


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"malformed weight list {text!r}: expected comma-separated integers")
    if any(w <= 0 for w in ws):
        raise InputError("weights must be positive integers")
    return ws


def _parse_subset(text: str, n: int) -> Subset:
    try:
        return Subset.of((int(x) for x in text.split(",")), n)
    except ValueError as exc:
        raise InputError(f"malformed subset {text!r}: {exc}")


def _poly(p) -> list[int]:
    return p.to_list()


# --------------------------------------------------------------------------
# commands: each returns (payload, human-readable lines)
# --------------------------------------------------------------------------

def cmd_gamma(args, m):
    if args.subset:
        subsets = [_parse_subset(args.subset, m.n)]
    else:
        subsets = sorted((Subset(k, m.n) for k in range(1, (1 << m.n) - 1)), key=Subset.sort_key)
    rows = [{"subset": list(S.indices), "gamma_c": str(gamma_c(m, S)), "gamma_l": str(gamma_l(m, S))}
            for S in subsets]
    lines = [f"{S}: gamma_c = {r['gamma_c']}, gamma_l = {r['gamma_l']}" for S, r in zip(subsets, rows)]
    return {"subsets": rows}, lines


def cmd_stability(args, m):
    rows, lines = [], []
    for k in range(1, 1 << m.n):
        S = Subset(k, m.n)
        for kind, low in ((StratumKind.COINCIDENCE, 2), (StratumKind.COLLINEARITY, 3)):
            if S.size < low:
                continue
            st = subset_state(m, kind, S)
            rows.append({"kind": kind.value, "subset": list(S.indices),
                         "state": st.state.value, "gamma": str(st.gamma)})
    rows.sort(key=lambda r: (r["kind"], len(r["subset"]), r["subset"]))
    for r in rows:
        tag = "C" if r["kind"] == "coincidence" else "L"
        lines.append(f"{tag} {set(r['subset'])}: {r['state']} (gamma={r['gamma']})")
    return {"strata": rows}, lines


def cmd_position(args, m):
    pos = cone_position(m)
    return pos.to_dict(), [str(pos)]


def cmd_zlocus(args, m):
    rows, lines = [], []
    for z in z_strata(m):
        poly = p1_ip(z.reduced_weights)
        rows.append({
            "coincident": list(z.coincident.indices),
            "collinear": list(z.collinear.indices),
            "dim": z.dim,
            "reduced_weights": [int(w) for w in z.reduced_weights],
            "ip": _poly(poly),
        })
        lines.append(f"K={z.coincident} K'={z.collinear} dim={z.dim} m'={z.reduced_weights} IP(Z)={poly}")
    if not rows:
        lines.append("Z(m) is empty")
    return {"strata": rows}, lines


def cmd_poincare(args, m):
    if cone_position(m).kind is not ConeKind.CHAMBER:
        raise InputError(f"{m} is not in a chamber; use `ip` for walls and faces")
    ref, ref_poly = reference(m.n)
    poly = chamber_poincare(m, seed=args.seed)
    payload = {"poincare": _poly(poly), "reference": [int(w) for w in ref],
               "reference_poincare": _poly(ref_poly)}
    lines = [f"P = {poly}", f"reference {ref}: {ref_poly}"]
    try:
        plan = find_crossings(ref, m)
    except core.DegeneratePathError:
        payload["crossings"] = None
        lines.append("straight path degenerate; perturbed path used")
    else:
        payload["crossings"] = [c.to_dict() for c in plan.crossings]
        for c in plan.crossings:
            eq = epsilon(m.n, c.subset) * q_poly(m.n, c.subset)
            lines.append(f"  s={c.s} K={c.subset} dir={c.direction:+d} eps*Q={eq}")
    return payload, lines


def cmd_ip(args, m):
    pos = cone_position(m)
    poly = ip(m, seed=args.seed)
    payload = {"ip": _poly(poly), "position": pos.to_dict()}
    lines = [f"IP = {poly}", f"position: {pos}"]
    if pos.kind is ConeKind.WALL:
        cand = find_small_resolution(m)
        payload["small_resolution"] = [int(w) for w in cand]
        lines.append(f"small resolution: {cand}")
    return payload, lines


def cmd_smallres(args, m):
    if cone_position(m).kind is not ConeKind.WALL:
        raise InputError(f"{m} is not on a wall")
    cand = find_small_resolution(m)
    report = is_small(m, cand)
    payload = {"candidate": [int(w) for w in cand], "report": report.to_dict(),
               "definition_ok": satisfies_definition(report)}
    lines = [f"candidate {cand}: verdict={report.verdict}"]
    for c in report.per_wall:
        lines.append(f"  K={c.subset} side={c.side:+d} fibre=P^{c.fiber_dim} "
                     f"required={list(c.required_dims)} ({c.required}) ok={c.ok}")
    lines.append(f"  sandwich={report.sandwich_ok} chamber={report.chamber_ok}")
    return payload, lines


def cmd_n6_formula(args, m):
    case = closed_form_case(m)
    poly = ip_closed_form(m)
    k = count_excluded_collinear_triples(m)
    return ({"case": case, "ip": _poly(poly), "excluded_collinear_triples": k},
            [f"case {case}: IP = {poly}", f"excluded collinear triples: {k}"])


def cmd_n6_singular(args, m):
    rep = singularity_report(m)
    lines = [f"curve C_{i}{j} ({rep.curve_model})" for i, j in rep.curves]
    lines += ["point O_" + ",".join(f"{i}{j}" for i, j in part) + f" ({rep.triple_model})"
              for part in rep.triple_points]
    lines += [f"point O_{h}{i}{j} (nonsingular)" for h, i, j in rep.smooth_points]
    return rep.to_dict(), lines or ["no special points"]


def cmd_chambers(args, _m):
    res = count_chambers(args.n, args.samples, args.max_weight, args.seed)
    payload = {"n": res.n, "sampled": res.sampled, "admissible": res.admissible,
               "in_chambers": res.in_chambers, "distinct_chambers": res.distinct,
               "bound": res.bound, "within_bound": res.within_bound}
    lines = [f"{res.distinct} distinct chambers from {res.sampled} sorted samples "
             f"({res.in_chambers} in chambers)"]
    if res.bound is not None:
        lines.append(f"bound {res.bound}: {'ok' if res.within_bound else 'EXCEEDED'}")
    if not res.within_bound:
        raise _Failure(payload, lines)
    return payload, lines


def cmd_verify(args, _m):
    if args.n != 6:
        raise InputError("the closed-form oracle exists only for n = 6")
    res = verify_six_point_oracle(args.samples, args.max_weight, args.seed, workers=args.workers)
    payload = {"samples": res.samples, "matches": res.matches, "walls": res.walls,
               "mismatches": res.mismatches}
    status = "ok" if res.ok else "FAIL"
    lines = [f"{status}: {res.matches}/{res.samples} oracle matches ({res.walls} on walls)"]
    lines += [f"  mismatch {r['weights']}: {r['pipeline']} vs {r['closed_form']}" for r in res.mismatches[:20]]
    if not res.ok:
        raise _Failure(payload, lines)
    return payload, lines


class _Failure(Exception):
    def __init__(self, payload, lines):
        super().__init__("\n".join(lines))
        self.payload, self.lines = payload, lines


COMMANDS = {
    "gamma": (cmd_gamma, "gamma_c / gamma_l values of subsets"),
    "stability": (cmd_stability, "stability state of every coincidence/collinearity stratum"),
    "position": (cmd_position, "position of m in the G-ample cone"),
    "zlocus": (cmd_zlocus, "strictly semistable strata Z(m) and their IP"),
    "poincare": (cmd_poincare, "Poincaré polynomial of a chamber quotient with its crossing plan"),
    "ip": (cmd_ip, "intersection Poincaré polynomial of any quotient"),
    "smallres": (cmd_smallres, "small resolution of a quotient on a wall"),
    "n6-formula": (cmd_n6_formula, "six-point closed-form intersection Betti numbers"),
    "n6-singular": (cmd_n6_singular, "six-point special points and local models"),
    "chambers": (cmd_chambers, "count chambers met by seeded sampling"),
    "verify": (cmd_verify, "compare the pipeline with the six-point closed form"),
}
NEEDS_WEIGHTS = {k for k in COMMANDS if k not in ("chambers", "verify")}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--out", type=Path, help="also write the JSON report to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for path perturbation / sampling")
    common.add_argument("--max-n", type=int, default=None, help="raise the subset-scan cap (default 16)")

    parser = argparse.ArgumentParser(prog="p2betti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in NEEDS_WEIGHTS:
            p.add_argument("--weights", required=True, help="comma-separated positive integers")
        if name == "gamma":
            p.add_argument("--subset", help="comma-separated 1-based indices")
        if name in ("chambers", "verify"):
            p.add_argument("--n", type=int, default=6)
            p.add_argument("--samples", type=int, default=10_000)
            p.add_argument("--max-weight", type=int, default=30)
        if name == "verify":
            p.add_argument("--workers", type=int, default=1)
    return parser


def _emit(args, m, payload, lines):
    report = {"schema_version": SCHEMA_VERSION, "command": args.command}
    if m is not None:
        report["input_weights"] = [int(w) for w in m]
        report["normalized_weights"] = [int(w) for w in normalize(m)[0]]
    report["result"] = payload
    text = json.dumps(report, indent=2)
    if args.out:
        args.out.write_text(text + "\n", encoding="utf-8")
    if args.json:
        print(text)
    else:
        for line in lines:
            print(line)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is not None:
        core.set_max_n(args.max_n)
    func = COMMANDS[args.command][0]
    m = None
    try:
        if args.command in NEEDS_WEIGHTS:
            m = Polarization(_parse_weights(args.weights))
            if m.n > core.get_max_n():
                raise InputError(f"n={m.n} exceeds the cap {core.get_max_n()}; pass --max-n")
        elif args.n > core.get_max_n():
            raise InputError(f"n={args.n} exceeds the cap {core.get_max_n()}; pass --max-n")
        payload, lines = func(args, m)
    except _Failure as fail:
        _emit(args, m, fail.payload, fail.lines)
        return 1
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except (InputError, AdmissibilityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, m, payload, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
