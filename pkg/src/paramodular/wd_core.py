"""Weil-Deligne representations with diagonal, symbolically graded Frobenius.

Frobenius eigenvalues are never numbers here. Each one is an
:class:`EigenvalueSymbol`: a formal unitary part times ``q^{w/2}``, where only
the integer weight ``w`` matters for purity. The monodromy operator is an
integer matrix ``N`` with ``N: V(1) -> V``, so it lowers weights by two.

All linear algebra is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from . import linalg


class WDError(ValueError):
    """Malformed Weil-Deligne data."""


@dataclass(frozen=True)
class Monomial:
    """``coefficient * prod(gen ** exp)``: a value of an unramified character.

    Generators are abstract names (``"chi"``, ``"sigma"``). Zero exponents are
    dropped so equality is structural.
    """

    exponents: tuple[tuple[str, int], ...] = ()
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        cleaned = tuple(sorted((g, int(e)) for g, e in dict(self.exponents).items() if e != 0))
        object.__setattr__(self, "exponents", cleaned)
        coeff = Fraction(self.coefficient)
        if coeff == 0:
            raise WDError("character values are nonzero")
        object.__setattr__(self, "coefficient", coeff)

    @classmethod
    def of(cls, gens: Mapping[str, int] | None = None, coefficient=1) -> "Monomial":
        return cls(tuple((gens or {}).items()), Fraction(coefficient))

    @classmethod
    def symbol(cls, name: str) -> "Monomial":
        return cls(((name, 1),))

    @classmethod
    def scalar(cls, value) -> "Monomial":
        return cls((), Fraction(value))

    @property
    def gens(self) -> dict[str, int]:
        return dict(self.exponents)

    def is_one(self) -> bool:
        return not self.exponents and self.coefficient == 1

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            other = Monomial.scalar(other)
        exps = self.gens
        for g, e in other.exponents:
            exps[g] = exps.get(g, 0) + e
        return Monomial.of(exps, self.coefficient * other.coefficient)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Monomial":
        return Monomial.of({g: e * n for g, e in self.exponents}, self.coefficient ** n)

    def inverse(self) -> "Monomial":
        return self ** -1

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            other = Monomial.scalar(other)
        return self * other.inverse()

    def __str__(self) -> str:
        parts = [] if self.coefficient == 1 else [str(self.coefficient)]
        for g, e in self.exponents:
            parts.append(g if e == 1 else f"{g}^{e}")
        return "*".join(parts) or "1"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"monomial": {g: e for g, e in self.exponents}}
        if self.coefficient != 1:
            out["coefficient"] = str(self.coefficient)
        return out

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "Monomial":
        gens = d.get("monomial", {})
        if not isinstance(gens, Mapping) or not all(isinstance(e, int) for e in gens.values()):
            raise WDError(f"bad monomial: {gens!r}")
        return cls.of(gens, Fraction(d.get("coefficient", "1")))


ONE = Monomial()


@dataclass(frozen=True)
class EigenvalueSymbol:
    unitary_part: Monomial
    weight: int

    def __post_init__(self):
        if isinstance(self.weight, bool) or int(self.weight) != self.weight:
            raise WDError(f"weight must be an integer, got {self.weight!r}")
        object.__setattr__(self, "weight", int(self.weight))

    def __mul__(self, other: "EigenvalueSymbol") -> "EigenvalueSymbol":
        return EigenvalueSymbol(self.unitary_part * other.unitary_part, self.weight + other.weight)

    def dual(self) -> "EigenvalueSymbol":
        return EigenvalueSymbol(self.unitary_part.inverse(), -self.weight)

    def __str__(self) -> str:
        return f"{self.unitary_part}|q^{self.weight}/2"


@dataclass(frozen=True)
class WeilDeligneRep:
    dimension: int
    basis_labels: tuple[str, ...]
    frobenius: tuple[EigenvalueSymbol, ...]
    monodromy_N: tuple[tuple[int, ...], ...]
    base_weight: int = 0

    def __post_init__(self):
        n = self.dimension
        if not isinstance(n, int) or n < 1:
            raise WDError("dimension must be a positive integer")
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        object.__setattr__(self, "frobenius", tuple(self.frobenius))
        try:
            mat = tuple(tuple(int(x) for x in row) for row in self.monodromy_N)
        except (TypeError, ValueError) as exc:
            raise WDError("N must be an integer matrix") from exc
        if any(Fraction(x) != int(x) for row in self.monodromy_N for x in row):
            raise WDError("N must be an integer matrix")
        object.__setattr__(self, "monodromy_N", mat)
        if len(self.basis_labels) != n or len(self.frobenius) != n:
            raise WDError("basis and frobenius must have one entry per dimension")
        if len(mat) != n or any(len(row) != n for row in mat):
            raise WDError(f"N must be {n}x{n}")
        if not is_nilpotent(mat):
            raise WDError("N is not nilpotent")
        for i in range(n):
            for j in range(n):
                if mat[i][j] and self.frobenius[i].weight != self.frobenius[j].weight - 2:
                    raise WDError(
                        f"N[{i}][{j}] != 0 but weight({i})={self.frobenius[i].weight} "
                        f"is not weight({j})-2={self.frobenius[j].weight - 2}"
                    )

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(f.weight for f in self.frobenius)

    def N_matrix(self) -> list[list[Fraction]]:
        return linalg.as_matrix(self.monodromy_N)


def _int_powers(mat: Sequence[Sequence[int]], limit: int) -> list[list[list[int]]]:
    """``[I, N, N^2, ...]``, stopping after the first zero power or at ``N^limit``."""
    n = len(mat)
    powers = [[[int(i == j) for j in range(n)] for i in range(n)]]
    while len(powers) <= limit and any(x for row in powers[-1] for x in row):
        prev = powers[-1]
        powers.append([[sum(prev[i][t] * mat[t][j] for t in range(n)) for j in range(n)] for i in range(n)])
    return powers


def is_nilpotent(mat: Sequence[Sequence]) -> bool:
    n = len(mat)
    if n == 0:
        return True
    if all(type(x) is int for row in mat for x in row):
        return not any(x for row in _int_powers(mat, n)[-1] for x in row)
    return linalg.is_zero_matrix(linalg.matpow(linalg.as_matrix(mat), n))


# -- monodromy filtration ---------------------------------------------------


@dataclass(frozen=True)
class MonodromyFiltration:
    """Increasing filtration ``M_m``; ``steps`` covers ``lo..hi``, 0 below, V above."""

    center: int
    dim: int
    lo: int
    hi: int
    steps: tuple[tuple[linalg.Vector, ...], ...]

    def step(self, m: int) -> tuple[linalg.Vector, ...]:
        if m < self.lo:
            return ()
        if m > self.hi:
            return self.steps[-1]
        return self.steps[m - self.lo]

    def graded_dims(self) -> dict[int, int]:
        out = {}
        for m in range(self.lo, self.hi + 1):
            d = len(self.step(m)) - len(self.step(m - 1))
            if d:
                out[m] = d
        return out


def _validate_square_int(N) -> list[list[Fraction]]:
    rows = [list(r) for r in N]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise WDError("N must be square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or Fraction(x).denominator != 1:
                raise WDError("N must have integer entries")
    return linalg.as_matrix(rows)


def monodromy_filtration(N, center: int = 0) -> MonodromyFiltration:
    """Monodromy filtration of a nilpotent ``N`` centred at ``center``.

    Uses ``M_{c+k} = sum_{j >= max(0,-k)} ker N^(k+j+1) ∩ im N^j``.
    """
    mat = _validate_square_int(N)
    n = len(mat)
    if n == 0:
        raise WDError("empty space")
    if not is_nilpotent(mat):
        raise WDError("N is not nilpotent")
    # integer powers until N^e = 0; past that kernels are everything, images nothing
    powers = _int_powers([[int(x) for x in row] for row in mat], n)
    nil = len(powers) - 1
    kers = [linalg.kernel(p, n) for p in powers]
    ims = [linalg.image(p) for p in powers[:nil]]
    full = linalg.rref(linalg.identity(n))
    steps = []
    for k in range(-n, n):
        # weights live in [-(nil-1), nil-1]
        if k <= -nil or k >= nil - 1:
            steps.append(() if k <= -nil else full)
            continue
        acc: tuple = ()
        for j in range(max(0, -k), nil):
            e = k + j + 1
            ker = full if e >= nil else kers[e]
            acc = linalg.subspace_sum(acc, linalg.intersect(ker, ims[j], n), n)
        steps.append(acc)
    steps.append(full)
    return MonodromyFiltration(center, n, center - n, center + n, tuple(steps))


def filtration_violations(N, filt: MonodromyFiltration) -> list[str]:
    """Check the two defining properties directly; returns a list of failures."""
    mat = linalg.as_matrix(N)
    n = filt.dim
    c = filt.center
    bad = []
    for m in range(filt.lo - 1, filt.hi + 2):
        if not linalg.contains(filt.step(m), filt.step(m - 1)):
            bad.append(f"M_{m - 1} not inside M_{m}")
        if not linalg.contains(filt.step(m - 2), linalg.apply(mat, filt.step(m), n)):
            bad.append(f"N M_{m} not inside M_{m - 2}")
    if len(filt.step(filt.lo - 1)) != 0 or len(filt.step(filt.hi + 1)) != n:
        bad.append("filtration does not exhaust")
    gr = filt.graded_dims()
    for i in range(1, n + 1):
        top, bottom = gr.get(c + i, 0), gr.get(c - i, 0)
        if top != bottom:
            bad.append(f"dim gr_{c + i}={top} but dim gr_{c - i}={bottom}")
            continue
        Ni = linalg.matmul(Ni, mat) if i > 1 else mat
        pushed = linalg.apply(Ni, filt.step(c + i), n)
        target = linalg.subspace_sum(pushed, filt.step(c - i - 1), n)
        if len(target) != len(filt.step(c - i)) or not linalg.contains(filt.step(c - i), pushed):
            bad.append(f"N^{i}: gr_{c + i} -> gr_{c - i} is not onto")
    return bad


# -- purity -----------------------------------------------------------------


@dataclass(frozen=True)
class RankCheck:
    power: int
    source_weight: int
    target_weight: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.rank == self.source_dim == self.target_dim


@dataclass(frozen=True)
class PurityCertificate:
    pure: bool
    base_weight: int
    checks: tuple[RankCheck, ...]
    filtration_matches_weights: bool
    monodromy_graded_dims: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.pure

    def to_dict(self) -> dict:
        return {
            "pure": self.pure,
            "base_weight": self.base_weight,
            "filtration_matches_weights": self.filtration_matches_weights,
            "monodromy_graded_dims": {str(k): v for k, v in sorted(self.monodromy_graded_dims.items())},
            "rank_checks": [
                {
                    "power": c.power,
                    "source_weight": c.source_weight,
                    "target_weight": c.target_weight,
                    "rank": c.rank,
                    "max_rank": min(c.source_dim, c.target_dim),
                    "source_dim": c.source_dim,
                    "target_dim": c.target_dim,
                    "ok": c.ok,
                }
                for c in self.checks
            ],
        }


def is_pure(rep: WeilDeligneRep) -> PurityCertificate:
    """Weight-monodromy test: is the monodromy filtration the weight grading?"""
    if not isinstance(rep, WeilDeligneRep):
        raise WDError("expected a WeilDeligneRep")
    k = rep.base_weight
    w = rep.weights
    n = rep.dimension
    spread = max(abs(x - k) for x in w)
    powers = _int_powers(rep.monodromy_N, spread)
    checks = []
    for i in range(1, spread + 1):
        src = [j for j in range(n) if w[j] == k + i]
        tgt = [j for j in range(n) if w[j] == k - i]
        Ni = powers[i] if i < len(powers) else [[0] * n for _ in range(n)]
        sub = [[Ni[r][c] for c in src] for r in tgt]
        r = linalg.rank(sub) if src and tgt else 0
        checks.append(RankCheck(i, k + i, k - i, len(src), len(tgt), r))
    filt = monodromy_filtration(rep.monodromy_N, k)
    matches = True
    for m in range(min(filt.lo, min(w)) - 1, max(filt.hi, max(w)) + 1):
        weight_step = linalg.span(
            [tuple(Fraction(int(a == j)) for a in range(n)) for j in range(n) if w[j] <= m], n
        )
        if weight_step != filt.step(m):
            matches = False
            break
    pure = matches and all(c.ok for c in checks)
    return PurityCertificate(pure, k, tuple(checks), matches, filt.graded_dims())


def n_rank(rep: WeilDeligneRep) -> int:
    return linalg.rank(rep.N_matrix())


# -- constructions ----------------------------------------------------------


def shift_weight(rep: WeilDeligneRep, s: int) -> WeilDeligneRep:
    """Raise every weight, and the centre, by ``s``."""
    return WeilDeligneRep(
        rep.dimension,
        rep.basis_labels,
        tuple(EigenvalueSymbol(f.unitary_part, f.weight + s) for f in rep.frobenius),
        rep.monodromy_N,
        rep.base_weight + s,
    )


def tate_twist(rep: WeilDeligneRep, n: int) -> WeilDeligneRep:
    """``rep(n)``: weights drop by ``2n``."""
    return shift_weight(rep, -2 * n)


def dual(rep: WeilDeligneRep) -> WeilDeligneRep:
    # plain transpose: purity and ranks do not see the sign
    nt = tuple(zip(*rep.monodromy_N))
    return WeilDeligneRep(
        rep.dimension,
        rep.basis_labels,
        tuple(f.dual() for f in rep.frobenius),
        nt,
        -rep.base_weight,
    )


def direct_sum(a: WeilDeligneRep, b: WeilDeligneRep) -> WeilDeligneRep:
    if a.base_weight != b.base_weight:
        raise WDError(f"base weights differ: {a.base_weight} vs {b.base_weight}")
    n, m = a.dimension, b.dimension
    mat = [list(row) + [0] * m for row in a.monodromy_N] + [[0] * n + list(row) for row in b.monodromy_N]
    return WeilDeligneRep(
        n + m,
        a.basis_labels + b.basis_labels,
        a.frobenius + b.frobenius,
        tuple(tuple(r) for r in mat),
        a.base_weight,
    )


def direct_sum_all(reps: Iterable[WeilDeligneRep]) -> WeilDeligneRep:
    reps = list(reps)
    out = reps[0]
    for r in reps[1:]:
        out = direct_sum(out, r)
    return out


def line(weight: int, unitary: Monomial = ONE, label: str = "e", base_weight: int | None = None) -> WeilDeligneRep:
    """One-dimensional unramified character."""
    bw = weight if base_weight is None else base_weight
    return WeilDeligneRep(1, (label,), (EigenvalueSymbol(unitary, weight),), ((0,),), bw)


# -- JSON -------------------------------------------------------------------


def rep_to_dict(rep: WeilDeligneRep) -> dict:
    return {
        "dimension": rep.dimension,
        "basis": list(rep.basis_labels),
        "frobenius": [{**f.unitary_part.to_dict(), "weight": f.weight} for f in rep.frobenius],
        "N": [list(r) for r in rep.monodromy_N],
        "base_weight": rep.base_weight,
    }


def rep_from_dict(d: Mapping[str, Any]) -> WeilDeligneRep:
    try:
        frob = tuple(EigenvalueSymbol(Monomial.from_dict(f), f["weight"]) for f in d["frobenius"])
        n = d["dimension"]
        labels = d.get("basis") or [f"e{i + 1}" for i in range(n)]
        return WeilDeligneRep(n, tuple(labels), frob, tuple(tuple(r) for r in d["N"]), d.get("base_weight", 0))
    except (KeyError, TypeError) as exc:
        raise WDError(f"malformed Weil-Deligne document: {exc}") from exc


def dumps_rep(rep: WeilDeligneRep) -> str:
    return json.dumps(rep_to_dict(rep), indent=2) + "\n"


def loads_rep(text: str) -> WeilDeligneRep:
    return rep_from_dict(json.loads(text))
