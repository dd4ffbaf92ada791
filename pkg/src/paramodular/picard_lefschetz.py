"""Bookkeeping for the nearby-cycles sequence of the paramodular threefold.

A scenario is a list of abstract contributions to inner H^3 (one per Hecke
eigensystem), the size of the singular locus and the coefficient weight.
From that we read off the rank of the specialization map alpha, the weight
profile of H^3_!, the component group (cokernel of the integral monodromy
map gamma), the weight-monodromy verdict and Mazur's-principle verdict.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import ss_locus
from .local_reps import LocalRepType, ParamodularLocalRep, expected_pure, wd_of_IIa
from .smith import smith_diagonal
from .wd_core import is_pure, n_rank, shift_weight


class LedgerError(ValueError):
    pass


class ArthurType(str, enum.Enum):
    General = "General"
    Yoshida = "Yoshida"
    SaitoKurokawa = "SaitoKurokawa"


class PiInfty(str, enum.Enum):
    H = "H"
    W = "W"
    other = "other"


UNRAMIFIED = "unramified"


@dataclass(frozen=True)
class LedgerContribution:
    id: str
    arthur_type: ArthurType
    pi_infty: PiInfty
    local_rep_at_p: ParamodularLocalRep | None
    galois_dim: int
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "arthur_type", ArthurType(self.arthur_type))
        object.__setattr__(self, "pi_infty", PiInfty(self.pi_infty))
        if self.multiplicity < 1:
            raise LedgerError(f"{self.id}: multiplicity must be >= 1")
        expected = None
        if self.arthur_type in (ArthurType.Yoshida, ArthurType.SaitoKurokawa):
            expected = 2
        elif self.pi_infty is PiInfty.H:
            expected = 4
        elif self.pi_infty is PiInfty.W:
            expected = 0
        if expected is not None and self.galois_dim != expected:
            raise LedgerError(
                f"{self.id}: {self.arthur_type.value}/{self.pi_infty.value} has galois_dim {expected}, "
                f"got {self.galois_dim}"
            )
        if self.galois_dim not in (0, 2, 4):
            raise LedgerError(f"{self.id}: galois_dim must be 0, 2 or 4")

    @property
    def ramified(self) -> bool:
        return self.local_rep_at_p is not None and self.galois_dim > 0

    def monodromy_rank(self) -> int:
        """Rank of N on one copy of the Galois piece."""
        if not self.ramified:
            return 0
        rep = self.local_rep_at_p
        if rep.rep_type is LocalRepType.IIa:
            return n_rank(wd_of_IIa(rep))
        # conductor exponent one: N has rank one whatever the type
        return 1

    def is_pure_at(self, weight: int) -> bool:
        if not self.ramified:
            return True
        rep = self.local_rep_at_p
        if rep.rep_type is not LocalRepType.IIa:
            return expected_pure(rep.rep_type)
        wd = wd_of_IIa(rep)
        return is_pure(shift_weight(wd, weight - wd.base_weight)).pure


@dataclass(frozen=True)
class LedgerScenario:
    contributions: tuple[LedgerContribution, ...]
    sigma_size: int
    coefficient_weight: int
    prime_p: int
    prime_ell: int
    coefficient_dim: int = 1
    gamma: tuple[tuple[int, ...], ...] | None = None
    mazur: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "contributions", tuple(self.contributions))
        if self.sigma_size < 0:
            raise LedgerError("sigma_size must be nonnegative")
        if self.prime_p == self.prime_ell:
            raise LedgerError("p and ell must be distinct")
        if self.coefficient_dim < 1:
            raise LedgerError("coefficient_dim must be positive")

    def localize(self, eigensystem: str) -> "LedgerScenario":
        """Keep only the contributions with the given label (localization at m)."""
        kept = tuple(c for c in self.contributions if c.id == eigensystem)
        if not kept:
            raise LedgerError(f"no contribution labelled {eigensystem!r}")
        return LedgerScenario(
            kept, self.sigma_size, self.coefficient_weight, self.prime_p, self.prime_ell, self.coefficient_dim
        )

    def with_contribution(self, c: LedgerContribution) -> "LedgerScenario":
        return LedgerScenario(
            self.contributions + (c,),
            self.sigma_size,
            self.coefficient_weight,
            self.prime_p,
            self.prime_ell,
            self.coefficient_dim,
            self.gamma,
            self.mazur,
        )


# -- quantities ---------------------------------------------------------------


def vanishing_cycle_dim(scenario: LedgerScenario) -> int:
    return scenario.sigma_size * scenario.coefficient_dim


def alpha_rank(scenario: LedgerScenario) -> int:
    return sum(c.multiplicity * c.monodromy_rank() for c in scenario.contributions)


def total_dim(scenario: LedgerScenario) -> int:
    return sum(c.multiplicity * c.galois_dim for c in scenario.contributions)


def weight_filtration_profile(scenario: LedgerScenario) -> dict[int, int]:
    """Dimensions of the graded pieces of weights k+2, k+3, k+4 (zeros omitted)."""
    k = scenario.coefficient_weight
    r = alpha_rank(scenario)
    total = total_dim(scenario)
    if total < 2 * r:
        raise LedgerError(f"total dimension {total} is smaller than 2 * rank(alpha) = {2 * r}")
    profile = {k + 2: r, k + 3: total - 2 * r, k + 4: r}
    return {w: d for w, d in profile.items() if d}


def is_weight_monodromy_ok(scenario: LedgerScenario) -> bool:
    w = scenario.coefficient_weight + 3
    return all(c.is_pure_at(w) for c in scenario.contributions)


def assemble_gamma(scenario: LedgerScenario) -> list[list[int]]:
    """Block-diagonal gamma: a unit for each pure ramified line, 0 otherwise."""
    w = scenario.coefficient_weight + 3
    diag = []
    for c in scenario.contributions:
        block = 1 if c.is_pure_at(w) else 0
        diag.extend([block] * (c.multiplicity * c.monodromy_rank()))
    return [[diag[i] if i == j else 0 for j in range(len(diag))] for i in range(len(diag))]


# -- component group ----------------------------------------------------------


@dataclass(frozen=True)
class ComponentGroup:
    invariant_factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        f = self.invariant_factors
        if any(d <= 1 for d in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not an invariant factor chain: {f}")

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def ell_part(self, ell: int) -> "ComponentGroup":
        parts = []
        for d in self.invariant_factors:
            q = 1
            while d % ell == 0:
                d //= ell
                q *= ell
            if q > 1:
                parts.append(q)
        return ComponentGroup(tuple(parts), self.free_rank)

    def to_dict(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) or "0"


def component_group(matrix: Sequence[Sequence[int]], target_dim: int | None = None) -> ComponentGroup:
    """Cokernel of the integer matrix (columns = images of source basis vectors)."""
    rows = [list(r) for r in matrix]
    m = len(rows) if target_dim is None else target_dim
    if rows and len(rows) != m:
        raise LedgerError("target_dim disagrees with the number of rows")
    if not rows or not rows[0]:
        return ComponentGroup((), m)
    diag = smith_diagonal(rows)
    return ComponentGroup(tuple(d for d in diag if d > 1), m - len(diag))


# -- Mazur's principle --------------------------------------------------------


class MazurVerdict(str, enum.Enum):
    LevelLoweringForced = "LevelLoweringForced"
    Inconclusive = "Inconclusive"
    HypothesisFail = "HypothesisFail"


@dataclass(frozen=True)
class MazurResult:
    verdict: MazurVerdict
    failed: tuple[str, ...] = ()
    reason: str = ""

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "failed": list(self.failed), "reason": self.reason}


_HYPOTHESES = (
    ("irreducible", "irreducibility"),
    ("unramified_mod_ell", "unramified_mod_ell"),
    ("component_group_trivial", "component_group_trivial"),
)


def mazur_check(
    n_distinct_frobenius_eigenvalues: int,
    irreducible: bool,
    unramified_mod_ell: bool,
    component_group_trivial: bool,
) -> MazurResult:
    """Counting argument behind level lowering at a paramodular prime.

    With ``Theta = 0`` the kernels of ``N ⊗ F`` and ``alpha ⊗ F`` agree, and
    the latter sees at most three Frobenius eigenvalues. An unramified
    irreducible residual piece sits in that kernel, so four distinct
    eigenvalues are impossible unless a congruence to level prime to p exists.
    """
    n = n_distinct_frobenius_eigenvalues
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= 4:
        raise LedgerError(f"n_distinct_frobenius_eigenvalues must be in 1..4, got {n!r}")
    flags = {
        "irreducible": irreducible,
        "unramified_mod_ell": unramified_mod_ell,
        "component_group_trivial": component_group_trivial,
    }
    failed = tuple(name for key, name in _HYPOTHESES if not flags[key])
    if failed:
        return MazurResult(MazurVerdict.HypothesisFail, failed, "hypothesis not satisfied: " + ", ".join(failed))
    if n < 4:
        return MazurResult(
            MazurVerdict.Inconclusive,
            (),
            f"{n} distinct Frobenius eigenvalues fit inside ker(alpha ⊗ F); no contradiction",
        )
    return MazurResult(
        MazurVerdict.LevelLoweringForced,
        (),
        "ker(N ⊗ F) = ker(alpha ⊗ F) carries at most 3 eigenvalues, contradicting 4",
    )


# -- scenario I/O and the full report ------------------------------------------


def contribution_from_dict(d: dict, prime_p: int) -> LedgerContribution:
    try:
        lr = d.get("local_rep_at_p", UNRAMIFIED)
        if lr in (None, UNRAMIFIED):
            local = None
        else:
            local = ParamodularLocalRep.from_dict({"p": prime_p, **lr})
        return LedgerContribution(
            str(d["id"]),
            ArthurType(d["arthur_type"]),
            PiInfty(d.get("pi_infty", "H")),
            local,
            int(d["galois_dim"]),
            int(d.get("multiplicity", 1)),
        )
    except (KeyError, ValueError) as exc:
        if isinstance(exc, LedgerError):
            raise
        raise LedgerError(f"malformed contribution {d!r}: {exc}") from exc


def scenario_from_dict(d: dict) -> LedgerScenario:
    try:
        p = int(d["prime_p"])
        ell = int(d["prime_ell"])
        if "sigma_size" in d:
            sigma = int(d["sigma_size"])
        elif "tree" in d:
            t = d["tree"]
            tree = ss_locus.build_tree(int(t.get("p", p)), t.get("root_kind", "first"), int(t["radius"]))
            sigma = ss_locus.contract_E(ss_locus.incidence_from_tree(tree)).size
        else:
            raise LedgerError("scenario needs sigma_size or tree")
        gamma = d.get("gamma")
        return LedgerScenario(
            tuple(contribution_from_dict(c, p) for c in d.get("contributions", [])),
            sigma,
            int(d.get("coefficient_weight", 0)),
            p,
            ell,
            int(d.get("coefficient_dim", 1)),
            None if gamma is None else tuple(tuple(int(x) for x in r) for r in gamma),
            d.get("mazur"),
        )
    except KeyError as exc:
        raise LedgerError(f"scenario missing field {exc}") from exc


def load_scenario(path: str | Path) -> LedgerScenario:
    return scenario_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def run_scenario(scenario: LedgerScenario) -> tuple[dict[str, Any], list[str]]:
    warnings: list[str] = []
    a_rank = alpha_rank(scenario)
    vdim = vanishing_cycle_dim(scenario)
    if a_rank > vdim:
        warnings.append(f"rank(alpha)={a_rank} exceeds the vanishing-cycle dimension {vdim}")
    gamma = [list(r) for r in scenario.gamma] if scenario.gamma is not None else assemble_gamma(scenario)
    theta = component_group(gamma, len(gamma))
    results: dict[str, Any] = {
        "vanishing_cycle_dim": vdim,
        "alpha_rank": a_rank,
        "total_dim": total_dim(scenario),
        "weight_profile": {str(w): d for w, d in sorted(weight_filtration_profile(scenario).items())},
        "component_group": theta.to_dict(),
        "component_group_ell_part": theta.ell_part(scenario.prime_ell).to_dict(),
        "weight_monodromy_ok": is_weight_monodromy_ok(scenario),
    }
    if scenario.mazur is not None:
        md = dict(scenario.mazur)
        label = md.pop("eigensystem", None)
        local = scenario.localize(label) if label else scenario
        if "component_group_trivial" not in md:
            if label or scenario.gamma is None:
                g = component_group(assemble_gamma(local))
            else:
                g = theta
            md["component_group_trivial"] = g.ell_part(scenario.prime_ell).is_trivial
        try:
            res = mazur_check(
                md["n_distinct_frobenius_eigenvalues"],
                bool(md["irreducible"]),
                bool(md["unramified_mod_ell"]),
                bool(md["component_group_trivial"]),
            )
        except KeyError as exc:
            raise LedgerError(f"mazur block missing {exc}") from exc
        results["mazur"] = {**res.to_dict(), "eigensystem": label}
    return results, warnings
