import pytest
from hypothesis import given
from hypothesis import strategies as st

from paramodular import local_reps as lr
from paramodular.local_reps import LocalRepType, ParamodularLocalRep
from paramodular.wd_core import EigenvalueSymbol, Monomial, WDError, is_pure, n_rank, rep_from_dict, rep_to_dict

from strategies import monomials

chi, sigma = Monomial.symbol("chi"), Monomial.symbol("sigma")


def iia(c=chi, s=sigma, p=2, **kw):
    return ParamodularLocalRep(LocalRepType.IIa, c, s, p, **kw)


def test_catalog_flags():
    rows = {r["tag"]: r for r in lr.catalog()}
    assert set(rows) == {"IIa", "IVc", "Vb", "Vc", "VIc"}
    for tag, row in rows.items():
        assert row["generic"] == row["expected_pure"] == row["has_wd_realization"] == (tag == "IIa")


def test_iia_parameter_shape():
    wd = lr.wd_of_IIa(iia())
    assert wd.weights == (0, -1, 1, 0)
    assert wd.monodromy_N[1][2] == 1 and n_rank(wd) == 1
    assert wd.frobenius[0].unitary_part == chi ** 2 * sigma
    assert wd.frobenius[1].unitary_part == wd.frobenius[2].unitary_part == chi * sigma
    assert wd.frobenius[3].unitary_part == sigma


@given(monomials(), monomials())
def test_iia_pure_and_zero_monodromy_impure(c, s):
    wd = lr.wd_of_IIa(iia(c, s))
    assert is_pure(wd)
    flat = rep_from_dict({**rep_to_dict(wd), "N": [[0] * 4 for _ in range(4)]})
    assert not is_pure(flat)


@given(monomials(), monomials(), st.sampled_from([2, 3, 5, 7, 11]))
def test_atkin_lehner_identities(c, s, p):
    rep = iia(c, s, p)
    u = lr.atkin_lehner_eigenvalue(rep)
    assert u == c * s
    assert u ** 2 == lr.central_character(rep) == c ** 2 * s ** 2
    assert lr.frobenius_on_vanishing_cycles(rep) == u * Monomial.scalar(p)
    assert lr.paramodular_invariants_dim(rep) == 1


@given(monomials(), monomials(), st.integers(-2, 2), st.integers(-2, 2))
def test_similitude_is_central_character(c, s, wc, ws):
    wd = lr.wd_of_IIa(iia(c, s, chi_weight=wc, sigma_weight=ws))
    sim = lr.similitude_character(wd)
    assert sim == EigenvalueSymbol(c ** 2 * s ** 2, 2 * (wc + ws))


def test_symbolic_strings():
    rep = iia()
    assert str(lr.atkin_lehner_eigenvalue(rep)) == "chi*sigma"
    assert str(lr.frobenius_on_vanishing_cycles(rep, 5)) == "5*chi*sigma"


def test_similitude_rejects_mismatched_pairs():
    wd = lr.wd_of_IIa(iia())
    d = rep_to_dict(wd)
    d["frobenius"][0] = {"monomial": {"chi": 3}, "weight": 0}
    with pytest.raises(WDError):
        lr.similitude_character(rep_from_dict(d))


@pytest.mark.parametrize("t", ["IVc", "Vb", "Vc", "VIc"])
def test_other_types_have_no_parameter(t):
    rep = ParamodularLocalRep(t)
    with pytest.raises(WDError):
        lr.wd_of_IIa(rep)
    with pytest.raises(WDError):
        lr.atkin_lehner_eigenvalue(rep)


def test_iia_constraints():
    assert iia().iia_constraints_ok
    assert not iia(Monomial(), chi_weight=1).iia_constraints_ok
    assert not iia(Monomial(), chi_weight=-3).iia_constraints_ok
    assert iia(Monomial(), chi_weight=2).iia_constraints_ok


def test_rejects_composite_prime():
    with pytest.raises(WDError):
        iia(p=4)


def test_dict_round_trip():
    rep = iia(chi ** 2, Monomial.scalar("-1/3"), p=7, chi_weight=1)
    assert ParamodularLocalRep.from_dict(rep.to_dict()) == rep
    assert ParamodularLocalRep.from_dict({"type": "IIa", "p": 3, "chi": "x", "sigma": -1}).sigma == Monomial.scalar(-1)
    with pytest.raises(WDError):
        ParamodularLocalRep.from_dict({"type": "IX", "p": 3})


@pytest.mark.parametrize("n,expect", [(1, False), (2, True), (9, False), (97, True), (91, False)])
def test_is_prime(n, expect):
    assert lr.is_prime(n) is expect
