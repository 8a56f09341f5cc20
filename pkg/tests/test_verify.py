import json

import pytest

from rabiops.params import ModelParams
from rabiops.verify import (
    CheckReport, cross_check, flip_ajc_interaction, flipped_ajc_env, report_json,
    run_numeric_suite, run_symbolic_suite,
)

# frozen manifest: renaming or dropping a check must be a deliberate edit here
NUMERIC_IDS = [
    "eq1a_rabi_hermitian", "eq1b_rabi_split", "eq1c_jc_hermitian", "eq1d_ajc_hermitian",
    "eq1e_r_minus1", "eq1e_r_plus1", "eq1e_r_zero", "eq2a_jc_rearranged", "eq2b_ajc_rearranged",
    "eq2c_excitation_numbers", "eq2d_ajc_form", "eq2d_jc_form", "eq3a_aad", "eq3a_comm_n_a",
    "eq3a_comm_n_ad", "eq3a_comm_smsp_sm", "eq3a_comm_smsp_sp", "eq3a_comm_sp_sm",
    "eq3a_comm_spsm_sm", "eq3a_comm_spsm_sp", "eq3a_comm_sz_sm", "eq3a_comm_sz_sp", "eq3a_smsp",
    "eq3a_spsm", "eq3b_ajc_commutator", "eq3b_jc_commutator", "eq3c_A_hermitian",
    "eq3c_Abar_hermitian", "eq3d_anticomm_sp_sm", "eq3d_anticomm_sz_sm", "eq3d_anticomm_sz_sp",
    "eq3d_sm_sq", "eq3d_sp_sq", "eq3d_sz_sq", "eq3e_ajc", "eq3e_jc", "eq3f_ajc_chain",
    "eq3f_jc_chain", "eq3g_N_Hbar_nonzero", "eq3g_Nbar_H_nonzero", "eq3g_bar_closed_form",
    "eq3g_closed_form", "eq3h_A_H", "eq3h_A_Hbar_nonzero", "eq3h_Abar_H_nonzero", "eq3h_Abar_Hbar",
    "eq4a_U0_unitary", "eq4b_a", "eq4b_ad", "eq4b_sm", "eq4b_sp", "eq4c_U0_H_symmetry",
    "eq4c_U0_Hbar_nonsymmetry", "eq4c_U0_Hbar_phases", "eq4d_U0bar_unitary", "eq4e_a", "eq4e_ad",
    "eq4e_sm", "eq4e_sp", "eq4f_U0bar_H_nonsymmetry", "eq4f_U0bar_H_phases",
    "eq4f_U0bar_Hbar_symmetry", "eq5a_U0_Hbar_period", "eq5a_U0bar_H_period", "eq5b_parity_powers",
    "eq5c_parity_power_product", "eq5d_parity_N_Nbar", "eq5d_parity_involution",
    "eq5e_Nbar_minus_N", "eq5e_smsp", "eq5f_spin_phase", "eq5g_parity_H", "eq5g_parity_HR_r+0.0",
    "eq5g_parity_HR_r+0.7", "eq5g_parity_HR_r+1.0", "eq5g_parity_HR_r-0.4", "eq5g_parity_HR_r-1.0",
    "eq5g_parity_Hbar", "eq6a_phase_relation", "eq6b_beta_sq", "eq6c_phase_relation_beta",
    "eq6d_critical_beta", "eq6e_parity_critical",
]
NONZERO_IDS = {
    "eq3g_N_Hbar_nonzero", "eq3g_Nbar_H_nonzero", "eq3h_A_Hbar_nonzero", "eq3h_Abar_H_nonzero",
    "eq4c_U0_Hbar_nonsymmetry", "eq4f_U0bar_H_nonsymmetry",
}


@pytest.fixture(scope="module")
def numeric():
    return run_numeric_suite()


@pytest.fixture(scope="module")
def symbolic():
    return run_symbolic_suite()


def test_manifest(numeric):
    assert [r.check_id for r in numeric] == NUMERIC_IDS
    prefixes = {cid[:4] for cid in NUMERIC_IDS}
    for tag in ("1a", "1b", "1c", "1d", "1e", "2a", "2b", "2c", "2d", "3a", "3b", "3c", "3d", "3e",
                "3f", "3g", "3h", "4a", "4b", "4c", "4d", "4e", "4f", "5a", "5b", "5c", "5d", "5e",
                "5f", "5g", "6a", "6b", "6c", "6d", "6e"):
        assert "eq" + tag in prefixes


def test_symbolic_ids_are_shared(numeric, symbolic):
    assert {r.check_id for r in symbolic} <= set(NUMERIC_IDS)
    assert len(symbolic) == 43


def test_all_pass_at_defaults(numeric, symbolic):
    assert [r.check_id for r in numeric if not r.passed] == []
    assert [r.check_id for r in symbolic if not r.passed] == []
    assert all(r.residual == 0 for r in symbolic if r.check_id not in NONZERO_IDS)


def test_kinds_and_nonzero_scale(numeric):
    for r in numeric:
        if r.check_id in NONZERO_IDS:
            assert r.kind == "nonzero" and r.residual >= 1e-3
        assert r.engine == "numeric" and r.n_max == 20 and r.margin == 2


def test_perturbation_detected_by_equality_checks(numeric):
    eq = [r for r in numeric if r.kind == "equal"]
    assert eq and all(r.perturbation_detected for r in eq)


def test_deterministic():
    a = json.dumps(report_json(ModelParams(), run_numeric_suite()), sort_keys=True)
    b = json.dumps(report_json(ModelParams(), run_numeric_suite()), sort_keys=True)
    assert a == b


def test_report_json_shape(numeric):
    doc = report_json(ModelParams(), numeric)
    assert set(doc) == {"params", "checks"}
    first = doc["checks"][0]
    for key in ("check_id", "engine", "paper_eq", "residual", "tol", "pass", "params_used", "n_max", "margin"):
        assert key in first
    json.dumps(doc, allow_nan=False)


@pytest.mark.parametrize("p", [
    ModelParams(omega=1.3, omega0=0.7, g=0.25),
    # cross commutators scale with g, so very weak coupling falls under the nonzero threshold
    ModelParams(omega=0.8, omega0=1.9, g=0.2),
    ModelParams(omega=1.0, omega0=1.0, g=0.5),
])
def test_passes_off_resonance(p):
    assert [r.check_id for r in run_numeric_suite(p) if not r.passed] == []


def test_engines_agree(numeric, symbolic):
    cc = cross_check(numeric, symbolic)
    assert cc.consistent
    assert {e["status"] for e in cc.entries} == {"agree"}


def test_mutation_caught_by_both_engines():
    num = {r.check_id for r in run_numeric_suite(overrides=flip_ajc_interaction) if not r.passed}
    sym = {r.check_id for r in run_symbolic_suite(env=flipped_ajc_env()) if not r.passed}
    both = num & sym
    assert len(both) >= 3
    assert {"eq2d_ajc_form", "eq3f_ajc_chain", "eq3h_Abar_Hbar"} <= both


def test_margin_zero_is_truncation_artifact(symbolic):
    num = run_numeric_suite(margin=0)
    failed = {r.check_id for r in num if not r.passed}
    assert {"eq3b_ajc_commutator", "eq5d_parity_N_Nbar"} <= failed
    cc = cross_check(num, symbolic)
    assert cc.consistent
    assert "eq3b_ajc_commutator" in cc.flagged("truncation_artifact")


def test_cross_check_flags_divergence():
    sym = [CheckReport("x", "symbolic", "", 0.0, 0.0, True)]
    num = [CheckReport("x", "numeric", "", 1.0, 1e-12, False, n_max=20, margin=2)]
    cc = cross_check(num, sym)
    assert not cc.consistent and cc.flagged("divergent") == ["x"]


def test_overrides_dict():
    from rabiops.hilbert import make_space
    from rabiops.operators import excitation_number
    bad = {"N": excitation_number(make_space(20), "Nbar")}
    failed = {r.check_id for r in run_numeric_suite(overrides=bad) if not r.passed}
    assert "eq3b_jc_commutator" in failed


def test_weak_coupling_nonzero_ratio_scales_with_g():
    ratio = {g: {r.check_id: r.residual for r in run_numeric_suite(ModelParams(g=g))}["eq3g_N_Hbar_nonzero"]
             for g in (0.05, 0.1)}
    assert ratio[0.05] < 1e-3 < ratio[0.1]
