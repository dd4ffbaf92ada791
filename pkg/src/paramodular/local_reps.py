"""Ramified K(p)-spherical representations of GSp4(Q_p).

Only type IIa carries an explicit Weil-Deligne realization. The four
non-generic types are catalogued by their flags alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .wd_core import EigenvalueSymbol, Monomial, WeilDeligneRep, WDError


class LocalRepType(str, enum.Enum):
    IIa = "IIa"
    IVc = "IVc"
    Vb = "Vb"
    Vc = "Vc"
    VIc = "VIc"


def is_generic(t: LocalRepType | str) -> bool:
    return LocalRepType(t) is LocalRepType.IIa


def expected_pure(t: LocalRepType | str) -> bool:
    # non-generic types fail weight-monodromy
    return is_generic(t)


def has_wd_realization(t: LocalRepType | str) -> bool:
    return LocalRepType(t) is LocalRepType.IIa


def catalog() -> list[dict]:
    return [
        {
            "tag": t.value,
            "generic": is_generic(t),
            "expected_pure": expected_pure(t),
            "has_wd_realization": has_wd_realization(t),
        }
        for t in LocalRepType
    ]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class ParamodularLocalRep:
    """``chi St_GL2 ⋊ sigma`` and friends at a prime ``p``.

    ``chi`` and ``sigma`` are the unitary parts of the character values at
    ``p``; ``chi_weight`` / ``sigma_weight`` record a ``q``-power if known
    (``v^{1/2}`` has weight -1).
    """

    rep_type: LocalRepType
    chi: Monomial = Monomial.symbol("chi")
    sigma: Monomial = Monomial.symbol("sigma")
    prime_p: int = 2
    chi_weight: int = 0
    sigma_weight: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rep_type", LocalRepType(self.rep_type))
        if not is_prime(self.prime_p):
            raise WDError(f"{self.prime_p} is not prime")
        for name in ("chi", "sigma"):
            v = getattr(self, name)
            if not isinstance(v, Monomial):
                object.__setattr__(self, name, Monomial.scalar(v))

    @property
    def iia_constraints_ok(self) -> bool:
        """``chi^2 != v^{±1}`` and ``chi != v^{±3/2}``."""
        sq = self.chi ** 2
        if sq.is_one() and abs(2 * self.chi_weight) == 2:
            return False
        if self.chi.is_one() and abs(self.chi_weight) == 3:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "type": self.rep_type.value,
            "chi": self.chi.to_dict(),
            "sigma": self.sigma.to_dict(),
            "p": self.prime_p,
            "chi_weight": self.chi_weight,
            "sigma_weight": self.sigma_weight,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ParamodularLocalRep":
        def char(v, default):
            if v is None:
                return Monomial.symbol(default)
            if isinstance(v, str):
                return Monomial.symbol(v)
            if isinstance(v, dict):
                return Monomial.from_dict(v)
            return Monomial.scalar(v)

        try:
            return cls(
                LocalRepType(d["type"]),
                char(d.get("chi"), "chi"),
                char(d.get("sigma"), "sigma"),
                int(d["p"]),
                int(d.get("chi_weight", 0)),
                int(d.get("sigma_weight", 0)),
            )
        except (KeyError, ValueError) as exc:
            raise WDError(f"malformed local representation: {exc}") from exc


def _require_iia(rep: ParamodularLocalRep) -> None:
    if rep.rep_type is not LocalRepType.IIa:
        raise WDError(f"type {rep.rep_type.value} has no modelled Weil-Deligne data")


def wd_of_IIa(rep: ParamodularLocalRep) -> WeilDeligneRep:
    """Weil-Deligne parameter of ``chi St ⋊ sigma``: N sends the weight +1 line to the weight -1 line."""
    _require_iia(rep)
    chi, sigma = rep.chi, rep.sigma
    wc, ws = rep.chi_weight, rep.sigma_weight
    frob = (
        EigenvalueSymbol(chi * chi * sigma, 2 * wc + ws),
        EigenvalueSymbol(chi * sigma, wc + ws - 1),
        EigenvalueSymbol(chi * sigma, wc + ws + 1),
        EigenvalueSymbol(sigma, ws),
    )
    N1 = ((0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0), (0, 0, 0, 0))
    labels = ("chi^2 sigma", "v^1/2 chi sigma", "v^-1/2 chi sigma", "sigma")
    return WeilDeligneRep(4, labels, frob, N1, wc + ws)


def central_character(rep: ParamodularLocalRep) -> Monomial:
    return rep.chi ** 2 * rep.sigma ** 2


def similitude_character(wd: WeilDeligneRep) -> EigenvalueSymbol:
    """Product over the symplectic pairs (e1,e4), (e2,e3); raises if they disagree."""
    f = wd.frobenius
    if wd.dimension != 4:
        raise WDError("similitude is defined here for 4-dimensional parameters")
    a, b = f[0] * f[3], f[1] * f[2]
    if a != b:
        raise WDError(f"pairs disagree: {a} vs {b}")
    return a


def atkin_lehner_eigenvalue(rep: ParamodularLocalRep) -> Monomial:
    """Scalar by which ``u`` acts on the (one-dimensional) K(p)-invariants: ``(chi sigma)(p)``."""
    _require_iia(rep)
    return rep.chi * rep.sigma


def paramodular_invariants_dim(rep: ParamodularLocalRep) -> int:
    _require_iia(rep)
    return 1


def frobenius_on_vanishing_cycles(rep: ParamodularLocalRep, p: int | None = None) -> Monomial:
    p = rep.prime_p if p is None else p
    return atkin_lehner_eigenvalue(rep) * p
