import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternwb.exactfield import I
from ternwb.spectral import (
    NotSelfAdjoint, QuadratureError, ResolutionWarning, action_constant, action_integral,
    build_matrix, central_weights, cube_root_r2, energy_levels, fd_oracle, gamma_closed_form,
    gamma_recurrence_residuals, harmonic_bs_sanity, harmonic_operator, hypergeom_eval,
    khat_eigen_check, level_coefficient, loglog_slope, match_series_to_F,
    ode_residual, quantization_csv, semiclassical_comparison, series_solution, sextic_spectrum,
    spectrum, spectrum_csv, tanh_sinh,
)
from ternwb.weylops import D, X, build_hamiltonian_z3

# reference values at M = 120 basis functions cross-checked against M = 800
SEXTIC_LOW = [2.953045396258152, 21.812687105708065, 79.79115298653613,
              202.8555099394366, 416.76589126985556, 747.5271837026102]


@pytest.fixture(scope="module")
def sextic400():
    return sextic_spectrum(400)


# -- number basis -----------------------------------------------------------

def test_harmonic_matrix_is_diagonal():
    m = build_matrix(harmonic_operator(), 12).dense()
    assert np.allclose(m, np.diag(2 * np.arange(12) + 1.0), atol=1e-13)


def test_position_matrix_elements():
    m = build_matrix(X, 3).dense()
    want = np.array([[0, math.sqrt(0.5), 0], [math.sqrt(0.5), 0, 1.0], [0, 1.0, 0]])
    assert np.allclose(m, want, atol=1e-15)


def test_sextic_matrix_structure():
    hop = build_matrix(build_hamiltonian_z3(), 40)
    m = hop.dense()
    assert hop.bandwidth == 6
    assert np.allclose(m, m.T, rtol=1e-12)
    assert np.count_nonzero(np.abs(np.triu(m, 7)) > 1e-9) == 0


def test_rejects_non_self_adjoint():
    with pytest.raises(NotSelfAdjoint):
        build_matrix(D, 10)
    with pytest.raises(NotSelfAdjoint):
        build_matrix(X * D, 10)


def test_momentum_is_hermitian_complex():
    p = D * -I
    hop = build_matrix(p * p, 20)
    assert np.allclose(hop.dense(), build_matrix(-(D * D), 20).dense())
    assert build_matrix(p, 20).dense().dtype.kind == "c"


def test_sextic_reference_values(sextic400):
    assert np.allclose(sextic400.eigenvalues[:6], SEXTIC_LOW, rtol=1e-10)


def test_self_convergence(sextic400):
    assert sextic400.converged_count >= 40
    assert np.all(sextic400.errors[:6] <= 1e-8 * sextic400.eigenvalues[:6])
    assert np.all(np.diff(sextic400.eigenvalues) > 0)


def test_small_truncation_warns():
    with pytest.warns(RuntimeWarning):
        s = sextic_spectrum(16)
    assert s.converged_count < 10
    with pytest.raises(ValueError):
        sextic_spectrum(4)


def test_spectrum_csv(sextic400):
    text = spectrum_csv(sextic400, 3)
    rows = text.strip().splitlines()
    assert rows[0] == "n,eigenvalue,error_estimate,M"
    assert len(rows) == 4
    assert rows[1].startswith("0,2.95304539")


def test_harmonic_spectrum():
    s = spectrum(harmonic_operator(), 64, n_eig=10)
    assert np.allclose(s.eigenvalues, 2 * np.arange(10) + 1, atol=1e-10)
    assert abs(s.eigenvalues[1] - 3) < 1e-12


# -- finite differences ------------------------------------------------------

def test_stencil_weights_are_exact():
    w = central_weights(2, 1)
    assert [str(v) for v in w] == ["1", "-2", "1"]
    w6 = central_weights(6, 5)
    assert sum(w6) == 0
    assert w6 == tuple(reversed(w6))
    with pytest.raises(ValueError):
        central_weights(6, 2)


def test_fd_harmonic():
    vals = fd_oracle(harmonic_operator(), n_eig=3)
    assert np.allclose(vals, [1, 3, 5], atol=1e-6)


def test_fd_agrees_with_number_basis():
    vals = fd_oracle(build_hamiltonian_z3())
    assert np.all(np.abs(vals / SEXTIC_LOW - 1) <= 1e-6)


def test_fd_convergence_order():
    op = build_hamiltonian_z3()
    e1 = abs(fd_oracle(op, h=0.2, n_eig=1)[0] - SEXTIC_LOW[0])
    e2 = abs(fd_oracle(op, h=0.1, n_eig=1)[0] - SEXTIC_LOW[0])
    assert math.log2(e1 / e2) >= 4


def test_fd_small_box_warns():
    with pytest.warns(ResolutionWarning):
        fd_oracle(build_hamiltonian_z3(), L=2.5)


def test_fd_rejects_mixed_terms():
    with pytest.raises(ValueError):
        fd_oracle(X * D * D + D * D * X)


# -- series -----------------------------------------------------------------

def test_first_recurrence_ratio():
    s = series_solution(0)
    assert s.coefficient(6) == (I * -1) / 240
    assert s.coefficient(0) == 1 and s.coefficient(3) == 0


@pytest.mark.parametrize("b", [0, 1, 2])
def test_series_solve_ode(b):
    s = series_solution(b, terms=60)
    xs = np.linspace(-1, 1, 64)
    assert np.abs(ode_residual(s, xs)).max() <= 1e-10
    assert khat_eigen_check(s) <= 1e-10
    # behaves as x^b at the origin
    assert abs(s.evaluate(1e-3) / 1e-3 ** b - 1) < 1e-9


def test_series_general_eigenvalue():
    s = series_solution(1, K=3, terms=30)
    xs = np.linspace(-1, 1, 64)
    assert np.abs(ode_residual(s, xs)).max() <= 1e-10
    with pytest.raises(ValueError):
        khat_eigen_check(s)


def test_series_rejects_bad_branch():
    with pytest.raises(ValueError):
        series_solution(3)


def test_match_parameters():
    got = {b: match_series_to_F(series_solution(b)) for b in (0, 1, 2)}
    assert (got[0].p, got[0].q) == (pytest.approx(2 / 3), pytest.approx(5 / 6))
    assert str(got[1].p) == "5/6" and str(got[1].q) == "7/6"
    assert str(got[2].p) == "7/6" and str(got[2].q) == "4/3"
    assert got[0].matches_printed_parameters and got[1].matches_printed_parameters
    assert not got[2].matches_printed_parameters
    for m in got.values():
        assert m.convention == "standard"
        assert m.argument_sign == "-i"
        assert m.max_deviation < 1e-12


def test_hypergeom_conventions():
    assert hypergeom_eval(0.5, 0.25, 0) == 1
    x = 0.7
    printed = hypergeom_eval(2 / 3, 5 / 6, x, 40)
    standard = hypergeom_eval(2 / 3, 5 / 6, x, 40, convention="standard")
    assert abs(standard - complex(mpmath.hyper([], [2 / 3, 5 / 6], x))) < 1e-14
    assert abs(printed - standard) > 1e-3
    with pytest.raises(ValueError):
        hypergeom_eval(-1, 0.5, 0.1)
    with pytest.raises(ValueError):
        hypergeom_eval(0.5, 0.5, 0.1, convention="other")


@settings(max_examples=30)
@given(st.floats(0.1, 5), st.floats(0.1, 5), st.floats(-2, 2), st.integers(1, 12))
def test_hypergeom_partial_sums(p, q, xi, k):
    # printed convention: terms xi^n / ((p)_n (q)_n), no factorial
    want = mpmath.fsum(mpmath.mpf(xi) ** n / (mpmath.rf(p, n) * mpmath.rf(q, n)) for n in range(k))
    assert hypergeom_eval(p, q, xi, k) == pytest.approx(float(want), rel=1e-12, abs=1e-14)
    std = mpmath.fsum(mpmath.mpf(xi) ** n / (mpmath.rf(p, n) * mpmath.rf(q, n) * mpmath.factorial(n))
                      for n in range(k))
    assert hypergeom_eval(p, q, xi, k, convention="standard") == pytest.approx(float(std), rel=1e-12, abs=1e-14)


# -- quadrature and Bohr-Sommerfeld ------------------------------------------

def test_tanh_sinh_endpoint_singularity():
    # x (1 - x) = delta (1 - delta) on [0, 1]; the integral of its inverse root is pi
    r = tanh_sinh(lambda x, dlt: 1 / math.sqrt(dlt * (1 - dlt)), 0.0, 1.0, tol=1e-12)
    assert r.value == pytest.approx(math.pi, rel=1e-10)
    with pytest.raises(ValueError):
        tanh_sinh(lambda x, d: 1.0, 1.0, 0.0)


def test_tanh_sinh_reports_failure():
    with pytest.raises(QuadratureError):
        tanh_sinh(lambda x, d: math.cos(500 * x), -1.0, 1.0, max_level=4)


def test_action_constant_against_mpmath():
    exact = 4 * mpmath.cbrt(6) * mpmath.gamma(mpmath.mpf(7) / 6) ** 2 / mpmath.gamma(mpmath.mpf(4) / 3)
    assert action_constant() == pytest.approx(float(exact), rel=1e-13)
    assert level_coefficient() == pytest.approx(float(1 / exact), rel=1e-13)
    assert max(gamma_recurrence_residuals()) < 1e-14


def test_action_matches_gamma_over_three_decades():
    for E in np.geomspace(0.1, 100, 25):
        assert action_integral(E) == pytest.approx(gamma_closed_form(E), rel=1e-8)


def test_action_scalings():
    assert action_integral(2.0) / action_integral(1.0) == pytest.approx(2, rel=1e-10)
    assert action_integral(1.0, 4.0, 1.0) / action_integral(1.0) == pytest.approx(2, rel=1e-10)
    # E/k * sqrt(mk) gives k^(-1/2) at fixed E, m
    assert gamma_closed_form(1.0, 1.0, 2.0) / gamma_closed_form(1.0) == pytest.approx(2 ** -0.5)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.1, 100), st.floats(0.1, 10), st.floats(0.1, 10))
def test_action_vs_gamma_random(E, m, k):
    assert action_integral(E, m, k) == pytest.approx(gamma_closed_form(E, m, k), rel=1e-8)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        action_integral(0.0)
    with pytest.raises(ValueError):
        energy_levels(0)


def test_energy_levels_paper():
    lv = energy_levels(5, "paper")
    assert [r.n for r in lv] == [1, 2, 3, 4, 5]
    assert lv[0].E_n == pytest.approx(0.1427461942609, abs=1e-12)
    for r in lv:
        assert r.E_n == pytest.approx(r.n * lv[0].E_n, rel=1e-15)
        assert r.action == pytest.approx(r.n, rel=1e-10)
    assert all(a.action < b.action for a, b in zip(lv, lv[1:]))


def test_energy_levels_standard():
    lv = energy_levels(3, "standard", hbar=0.5)
    assert lv[0].n == 0
    assert lv[0].action == pytest.approx(2 * math.pi * 0.5 * 0.5, rel=1e-10)
    assert lv[0].convention == "standard_2pi_half"


def test_quantization_csv():
    rows = quantization_csv(energy_levels(2)).strip().splitlines()
    assert rows[0] == "n,E_n,action,convention"
    assert rows[1].startswith("1,0.1427")


def test_harmonic_action():
    assert harmonic_bs_sanity() == pytest.approx(2 * math.pi, rel=1e-10)
    assert harmonic_bs_sanity(2.0) == pytest.approx(4 * math.pi, rel=1e-10)
    assert harmonic_bs_sanity(1.0, 1.0, 4.0) == pytest.approx(math.pi, rel=1e-10)


def test_semiclassical_scaling():
    lam = sextic_spectrum(400, n_eig=61).eigenvalues
    assert loglog_slope(lam) == pytest.approx(3.0, abs=0.05)
    assert cube_root_r2(lam) > 0.9999
    rows = semiclassical_comparison(lam / 6)
    assert max(r.rel_deviation for r in rows) <= 0.03
    with pytest.raises(ValueError):
        semiclassical_comparison(lam[:30])
