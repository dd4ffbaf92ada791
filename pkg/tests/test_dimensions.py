import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paramodular import dimensions as dm
from paramodular.dimensions import DimRecord, DimTable, DimTableError, FinalDelta, Kind, MissingDimension

HEADER = "kind,k,j,level,p,value,source\n"

# genus of X_0(p), frozen from the standard tables
GENUS = {2: 0, 3: 0, 5: 0, 7: 0, 11: 1, 13: 0, 17: 1, 19: 1, 23: 2, 29: 2, 31: 2, 37: 2, 41: 3, 43: 3, 47: 4}


def level1_oracle(k):
    """S_k = Delta * M_{k-12}, and M_w has the monomial basis E4^a E6^b with 4a + 6b = w."""
    w = k - 12
    if w < 0 or k % 2:
        return 0
    return sum(1 for b in range(w // 6 + 1) if (w - 6 * b) % 4 == 0)


def elliptic_oracle(p):
    """nu_2, nu_3 of Gamma_0(p) as roots of x^2+1 and x^2+x+1 mod p."""
    nu2 = sum(1 for x in range(p) if (x * x + 1) % p == 0)
    nu3 = sum(1 for x in range(p) if (x * x + x + 1) % p == 0)
    return nu2, nu3


@pytest.mark.parametrize("k", range(0, 61, 2))
def test_level1_against_monomial_oracle(k):
    assert dm.dim_cusp_level1(k) == level1_oracle(k)


@pytest.mark.parametrize("k,expect", [(2, 0), (12, 1), (24, 2), (26, 1), (14, 0)])
def test_level1_spot_values(k, expect):
    assert dm.dim_cusp_level1(k) == expect


def test_level1_odd_and_negative():
    assert dm.dim_cusp_level1(13) == 0
    with pytest.raises(ValueError):
        dm.dim_cusp_level1(-2)


@pytest.mark.parametrize("p", sorted(GENUS))
def test_gamma0p_invariants(p):
    inv = dm.gamma0p_invariants(p)
    assert (inv["nu2"], inv["nu3"]) == elliptic_oracle(p)
    assert inv["genus"] == GENUS[p] == dm.dim_cusp_gamma0p(2, p)


@pytest.mark.parametrize("k,p,expect", [(4, 5, 1), (4, 7, 1), (4, 11, 2), (4, 13, 3), (12, 11, 10)])
def test_gamma0p_spot_values(k, p, expect):
    assert dm.dim_cusp_gamma0p(k, p) == expect


@given(st.sampled_from(sorted(GENUS)), st.integers(1, 20))
def test_newforms_nonnegative(p, half_k):
    assert dm.dim_cusp_gamma0p_new(2 * half_k, p) >= 0


def test_newform_weight_errors():
    assert dm.dim_cusp_gamma0p_new(3, 5) == 0
    with pytest.raises(ValueError):
        dm.dim_cusp_gamma0p_new(0, 5)
    with pytest.raises(ValueError):
        dm.gamma0p_invariants(9)


# -- ingestion -------------------------------------------------------------------


def load(text):
    return dm.ingest_rows(io.StringIO(text))


def test_shipped_table_loads_and_verifies():
    table = dm.shipped_table()
    assert len(table) > 0
    checks = dm.verify_table(table)
    assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]
    assert any(c.name.startswith("substitution identity") for c in checks)


def test_shipped_level_one_values():
    table = dm.shipped_table()
    assert table.siegel(0, 10, "K(1)") == 1
    assert table.siegel(0, 3, "K(1)") == 0


@pytest.mark.parametrize(
    "text,lineno",
    [
        (HEADER + "siegel,0,3,K(p),4,0,x\n", 2),
        (HEADER + "siegel,0,3,K(1),,-1,x\n", 2),
        (HEADER + "classical,12,,Gamma0(1),,1,x\nclassical,13,,Gamma0(1),,0,x\n", 3),
        (HEADER + "siegel,0,two,K(1),,0,x\n", 2),
        (HEADER + "modular,0,3,K(1),,0,x\n", 2),
        (HEADER + "siegel,0,3,K(1),,0\n", 2),
        (HEADER + "classical,12,3,Gamma0(1),,1,x\n", 2),
        (HEADER + "siegel,0,2,K(1),,0,x\n", 2),
    ],
)
def test_bad_rows_report_line(text, lineno):
    with pytest.raises(DimTableError, match=f"line {lineno}"):
        load(text)


def test_bad_header_and_empty():
    with pytest.raises(DimTableError, match="line 1"):
        load("")
    with pytest.raises(DimTableError, match="header"):
        load("k,j\n")


def test_duplicates_and_conflicts():
    row = "siegel,0,3,K(1),,0,A\n"
    assert len(load(HEADER + row + row.replace(",A", ",B"))) == 1
    with pytest.raises(DimTableError, match="A.*B"):
        load(HEADER + row + "siegel,0,3,K(1),,1,B\n")


def test_header_only_table(data_dir):
    table = dm.ingest_csv(data_dir / "empty.csv")
    assert len(table) == 0 and dm.verify_table(table) == []
    with pytest.raises(MissingDimension):
        table.siegel(0, 3, "K(1)")


def test_missing_level_one_entry():
    table = load(HEADER + "siegel,0,3,K(p),5,0,x\n")
    with pytest.raises(MissingDimension):
        dm.ibukiyama_dim(0, 3, 5, table)


def test_negative_newform_count_fails_verify():
    table = load(HEADER + "siegel,1,20,K(1),,3,x\nsiegel,1,20,K(p),5,1,x\n")
    checks = dm.verify_table(table)
    assert len(checks) == 1 and not checks[0].ok


# -- identities ----------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_constant_forms_at_weight_three(p):
    table = dm.shipped_table()
    terms = dm.ibukiyama_terms(0, 3, p, table)
    assert terms["final_delta"] == 1
    assert dm.ibukiyama_dim(0, 3, p, table) == 1
    assert dm.ibukiyama_dim(0, 3, p, table, FinalDelta.literal) == 0


def test_final_delta_modes():
    assert dm.final_delta_term(0, 3) == 1
    assert dm.final_delta_term(0, 4) == 0
    assert dm.final_delta_term(1, 3) == 0
    assert dm.final_delta_term(0, 3, "literal") == 0


@pytest.mark.parametrize("j,expect", [(3, 0), (10, 0), (11, 1), (12, 0), (15, 2)])
def test_alpha_cokernel_only_for_odd_j(j, expect):
    assert dm.alpha_cokernel_dim(0, j) == expect
    assert dm.alpha_cokernel_dim(2, j) == 0


def test_saito_kurokawa_correction_only_for_even_j():
    assert dm.saito_kurokawa_correction(0, 10) == dm.dim_cusp_level1(18) == 1
    assert dm.saito_kurokawa_correction(0, 11) == 0
    assert dm.saito_kurokawa_correction(2, 10) == 0


def test_yoshida_count():
    # S_22(1) has dim 1 and S_4(Gamma0(5))^new has dim 1
    assert dm.yoshida_count(2, 10, 5) == dm.dim_cusp_level1(22) * dm.dim_cusp_gamma0p_new(4, 5) == 1


@given(
    st.integers(0, 4),
    st.integers(3, 24),
    st.sampled_from([2, 3, 5, 7]),
    st.integers(0, 5),
    st.integers(0, 12),
    st.sampled_from(list(FinalDelta)),
)
def test_substitution_identity(k, j, p, level1, extra, mode):
    table = DimTable()
    table.add(DimRecord(Kind.siegel, k, j, "K(1)", None, level1))
    table.add(DimRecord(Kind.siegel, k, j, "K(p)", p, 2 * level1 + extra))
    assert dm.ibukiyama_dim(k, j, p, table, mode) == dm.substituted_dim(k, j, p, table, mode)


def test_weight_range_enforced():
    with pytest.raises(ValueError):
        dm.yoshida_count(0, 2, 5)
