"""Command-line entry point: ``paramodular <group> <command> ...``.

Every command prints one report. ``--format json`` output is byte-identical
across runs on identical inputs.

Exit codes: 0 success, 1 domain error (or failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import dimensions, local_reps, picard_lefschetz, ss_locus, wd_core


class DomainError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs_digest: str
    results: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    exit_code: int = 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "results": self.results,
            "warnings": self.warnings,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"
        lines = [f"command: {self.command}", f"inputs_digest: {self.inputs_digest}"]
        for key, value in _flatten(self.results):
            lines.append(f"{key}: {value}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj, key=str):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        if isinstance(obj, bool):
            obj = str(obj).lower()
        yield prefix, obj


def _digest(command: str, params: dict, files: Sequence[str | Path] = ()) -> str:
    h = hashlib.sha256()
    h.update(json.dumps({"command": command, "params": params}, sort_keys=True).encode())
    for f in files:
        h.update(hashlib.sha256(Path(f).read_bytes()).digest())
    return h.hexdigest()[:16]


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DomainError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})") from None


# -- handlers -------------------------------------------------------------------


def cmd_wd_check_purity(args) -> Report:
    rep = wd_core.rep_from_dict(_read_json(args.file))
    cert = wd_core.is_pure(rep)
    results = {
        "pure": cert.pure,
        "n_rank": wd_core.n_rank(rep),
        "weights": list(rep.weights),
        "certificate": cert.to_dict(),
    }
    return Report("wd check-purity", _digest("wd check-purity", {}, [args.file]), results)


def cmd_wd_filtration(args) -> Report:
    rep = wd_core.rep_from_dict(_read_json(args.file))
    center = rep.base_weight if args.center is None else args.center
    filt = wd_core.monodromy_filtration(rep.monodromy_N, center)
    results = {
        "center": center,
        "graded_dims": {str(k): v for k, v in sorted(filt.graded_dims().items())},
        "violations": wd_core.filtration_violations(rep.monodromy_N, filt),
    }
    return Report("wd filtration", _digest("wd filtration", {"center": center}, [args.file]), results)


def cmd_wd_iia(args) -> Report:
    chi = wd_core.Monomial.symbol(args.chi)
    sigma = wd_core.Monomial.symbol(args.sigma)
    local = local_reps.ParamodularLocalRep(local_reps.LocalRepType.IIa, chi, sigma, args.prime)
    rep = local_reps.wd_of_IIa(local)
    if args.out:
        Path(args.out).write_text(wd_core.dumps_rep(rep), encoding="utf-8")
    results = {
        "rep": wd_core.rep_to_dict(rep),
        "atkin_lehner_eigenvalue": str(local_reps.atkin_lehner_eigenvalue(local)),
        "frobenius_on_vanishing_cycles": str(local_reps.frobenius_on_vanishing_cycles(local)),
        "central_character": str(local_reps.central_character(local)),
        "pure": wd_core.is_pure(rep).pure,
    }
    params = {"chi": args.chi, "sigma": args.sigma, "prime": args.prime}
    return Report("wd iia", _digest("wd iia", params), results)


def cmd_wd_catalog(args) -> Report:
    return Report("wd catalog", _digest("wd catalog", {}), {"catalog": local_reps.catalog()})


def cmd_tree_build(args) -> Report:
    tree = ss_locus.build_tree(args.prime, args.root_kind, args.radius)
    model = ss_locus.incidence_from_tree(tree)
    sing = ss_locus.contract_E(model)
    if args.dot:
        Path(args.dot).write_text(tree.to_dot(), encoding="utf-8")
    if args.json:
        Path(args.json).write_text(json.dumps(tree.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    from_components, from_points = model.handshake()
    results = {
        "p": tree.p,
        "radius": tree.radius,
        "root_kind": args.root_kind,
        "vertices": tree.n_vertices,
        "edges": len(tree.edges),
        "first_kind": sum(k == ss_locus.FIRST for k in tree.kinds),
        "second_kind": sum(k == ss_locus.SECOND for k in tree.kinds),
        "boundary_vertices": sum(tree.is_boundary(v) for v in range(tree.n_vertices)),
        "bipartite": tree.is_bipartite(),
        "valency_violations": len(tree.valency_violations()),
        "incidence_violations": len(model.invariant_violations()),
        "handshake": {"from_components": from_components, "from_points": from_points},
        "sigma_size": sing.size,
        "components": len(model.components),
        "superspecial_points": len(model.superspecial_points),
    }
    params = {"prime": args.prime, "radius": args.radius, "root_kind": args.root_kind}
    return Report("tree build", _digest("tree build", params), results)


def cmd_tree_fibers(args) -> Report:
    p = args.prime
    a = {s.value: str(ss_locus.fiber_card_a(s, p)) for s in ss_locus.StratumA}
    b = {s.value: str(ss_locus.fiber_card_b(s, p)) for s in ss_locus.KernelType}
    results = {
        "fibers_a": a,
        "fibers_b": b,
        "degree_a": ss_locus.generic_degree("a", p),
        "degree_b": ss_locus.generic_degree("b", p),
    }
    return Report("tree fibers", _digest("tree fibers", {"prime": p}), results)


def cmd_ledger_run(args) -> Report:
    scenario = picard_lefschetz.scenario_from_dict(_read_json(args.file))
    results, warnings = picard_lefschetz.run_scenario(scenario)
    return Report("ledger run", _digest("ledger run", {}, [args.file]), results, warnings)


def _bool(text: str) -> bool:
    t = text.lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def cmd_mazur(args) -> Report:
    res = picard_lefschetz.mazur_check(
        args.n_distinct, args.irreducible, args.unramified_mod_ell, args.component_group_trivial
    )
    params = {
        "n_distinct": args.n_distinct,
        "irreducible": args.irreducible,
        "unramified_mod_ell": args.unramified_mod_ell,
        "component_group_trivial": args.component_group_trivial,
    }
    return Report("mazur", _digest("mazur", params), res.to_dict())


def cmd_dims_classical(args) -> Report:
    k, p = args.weight, args.prime
    results: dict[str, Any] = {"weight": k, "level1": dimensions.dim_cusp_level1(k)}
    if p is not None:
        results.update(
            prime=p,
            gamma0p=dimensions.dim_cusp_gamma0p(k, p),
            gamma0p_new=dimensions.dim_cusp_gamma0p_new(k, p),
            gamma0p_invariants=dimensions.gamma0p_invariants(p),
        )
    return Report("dims classical", _digest("dims classical", {"weight": k, "prime": p}), results)


def _table(path: str | None) -> tuple[dimensions.DimTable, list[str]]:
    if path is None:
        return dimensions.shipped_table(), []
    try:
        return dimensions.ingest_csv(path), [path]
    except FileNotFoundError:
        raise DomainError(f"no such file: {path}") from None


def cmd_dims_ibukiyama(args) -> Report:
    table, files = _table(args.table)
    k, j, p = args.k, args.j, args.prime
    terms = dimensions.ibukiyama_terms(k, j, p, table, args.final_delta)
    results = {
        "k": k,
        "j": j,
        "p": p,
        "final_delta": args.final_delta,
        "dim": sum(terms.values()),
        "terms": terms,
        "yoshida_count": dimensions.yoshida_count(k, j, p),
        "paramodular_new_dim": dimensions.paramodular_new_dim(k, j, p, table),
        "alpha_cokernel_dim": dimensions.alpha_cokernel_dim(k, j),
    }
    warnings = []
    if k == 0 and j % 2 == 1:
        warnings.append(f"k=0, j odd: alpha is not surjective; cokernel has dimension dim S_{2 * j - 2} = "
                        f"{dimensions.alpha_cokernel_dim(k, j)}" + (" plus the constant forms" if j == 3 else ""))
    params = {"k": k, "j": j, "p": p, "final_delta": args.final_delta}
    return Report("dims ibukiyama", _digest("dims ibukiyama", params, files), results, warnings)


def cmd_dims_verify(args) -> Report:
    table, files = _table(args.table)
    checks = dimensions.verify_table(table, args.final_delta)
    failed = [c for c in checks if not c.ok]
    results = {
        "checks_run": len(checks),
        "failed": len(failed),
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
    }
    digest = _digest("dims verify", {"final_delta": args.final_delta}, files)
    return Report("dims verify", digest, results, exit_code=1 if failed else 0)


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="paramodular", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("json", "table"), default="table")
    groups = ap.add_subparsers(dest="group", required=True)

    wd = groups.add_parser("wd", help="Weil-Deligne representations").add_subparsers(dest="cmd", required=True)
    p = wd.add_parser("check-purity", parents=[fmt], help="weight-monodromy test of a WD JSON document")
    p.add_argument("file")
    p.set_defaults(func=cmd_wd_check_purity)
    p = wd.add_parser("filtration", parents=[fmt], help="monodromy filtration of a WD JSON document")
    p.add_argument("file")
    p.add_argument("--center", type=int, default=None)
    p.set_defaults(func=cmd_wd_filtration)
    p = wd.add_parser("iia", parents=[fmt], help="Weil-Deligne parameter of a type IIa representation")
    p.add_argument("--chi", default="chi")
    p.add_argument("--sigma", default="sigma")
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--out", default=None, help="also write the WD JSON document here")
    p.set_defaults(func=cmd_wd_iia)
    p = wd.add_parser("catalog", parents=[fmt], help="the five K(p)-spherical types")
    p.set_defaults(func=cmd_wd_catalog)

    tree = groups.add_parser("tree", help="supersingular locus combinatorics").add_subparsers(dest="cmd", required=True)
    p = tree.add_parser("build", parents=[fmt], help="truncated biregular tree and its incidence model")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--root-kind", choices=(ss_locus.FIRST, ss_locus.SECOND), default=ss_locus.FIRST)
    p.add_argument("--dot", default=None, help="write GraphViz DOT here")
    p.add_argument("--json", default=None, help="write the tree as JSON here")
    p.set_defaults(func=cmd_tree_build)
    p = tree.add_parser("fibers", parents=[fmt], help="fiber cardinalities of the Hecke correspondences")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_tree_fibers)

    ledger = groups.add_parser("ledger", help="Picard-Lefschetz ledger").add_subparsers(dest="cmd", required=True)
    p = ledger.add_parser("run", parents=[fmt], help="evaluate a scenario JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_ledger_run)

    p = groups.add_parser("mazur", parents=[fmt], help="Mazur's principle decision procedure")
    p.add_argument("--n-distinct", type=int, required=True, help="distinct Frob_p eigenvalues (1..4)")
    p.add_argument("--irreducible", type=_bool, required=True)
    p.add_argument("--unramified-mod-ell", type=_bool, required=True)
    p.add_argument("--component-group-trivial", type=_bool, required=True)
    p.set_defaults(func=cmd_mazur)

    dims = groups.add_parser("dims", help="dimension formulas").add_subparsers(dest="cmd", required=True)
    p = dims.add_parser("classical", parents=[fmt], help="elliptic cusp form dimensions")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_dims_classical)
    for name, func, hlp in (
        ("ibukiyama", cmd_dims_ibukiyama, "dimension of algebraic modular forms at K_2(p)"),
        ("verify", cmd_dims_verify, "check every identity on a dimension table"),
    ):
        p = dims.add_parser(name, parents=[fmt], help=hlp)
        if name == "ibukiyama":
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--j", type=int, required=True)
            p.add_argument("--prime", type=int, required=True)
        p.add_argument("--table", default=None, help="CSV table (default: the shipped one)")
        p.add_argument("--final-delta", choices=[m.value for m in dimensions.FinalDelta], default="j3")
        p.set_defaults(func=func)
    return ap


DOMAIN_ERRORS = (
    DomainError,
    wd_core.WDError,
    picard_lefschetz.LedgerError,
    dimensions.DimTableError,
    dimensions.MissingDimension,
    ValueError,
)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out.write(report.render(args.format))
    return report.exit_code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
