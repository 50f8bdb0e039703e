"""Verification suites: each returns a list of :class:`CheckRecord`.

Reference keys (``paper_ref``) are resolved in ``docs/equation_index.md``.
"""
from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import numpy as np

from . import gradedalg as ga
from . import gradedforms as gf
from . import matrixternary as mt
from . import weylops as wo
from .exactfield import I, ONE, J, J2
from .report import CheckRecord, record
from . import spectral as spc

__all__ = ["RunConfig", "ConfigError", "SUITES", "run_suite", "run"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    Ns: Tuple[int, ...] = (2, 3, 4)
    M: int = 400
    seed: int = 0
    n_similarity: int = 100
    n_forms: int = 200
    n_hquad: int = 20
    rtol: float = 1e-8
    fd_rtol: float = 1e-6
    jobs: int = 1
    out: str = "ternwb_out"
    extra: Dict[str, str] = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if not self.Ns:
            raise ConfigError("N range is empty")
        for n in self.Ns:
            if not 1 <= n <= 4:
                raise ConfigError(f"N must lie in 1..4, got {n}")
        if self.M < 64:
            raise ConfigError("M must be at least 64 for the spectral suite")
        if self.jobs < 1:
            raise ConfigError("jobs must be positive")
        for name in ("n_similarity", "n_forms", "n_hquad"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if not (0 < self.rtol < 1 and 0 < self.fd_rtol < 1):
            raise ConfigError("tolerances must lie in (0, 1)")
        return self

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

_SURJECTIONS_TRUE = [
    ("S", "S1"), ("Sbar", "S1"), ("S1", "S0"), ("S", "S0"),
    ("Lam0", "Lam1"), ("Lam1", "Lam"), ("Lam1", "LamBar"), ("Lam0", "Lam"),
]
_SURJECTIONS_FALSE = [("Lam", "Lam1"), ("LamBar", "Lam1"), ("Lam", "Lam0"), ("S1", "S")]


def algebra_suite(cfg: RunConfig) -> List[CheckRecord]:
    out = []
    for N in cfg.Ns:
        rep = ga.hilbert_check(N)
        for name, dims in rep.computed.items():
            for d, (got, want) in enumerate(zip(dims, rep.expected)):
                ref = "grassmann-quartic" if d == 4 else "grassmann-hilbert-series"
                out.append(record("algebra", f"algebra.dim.{name}.N{N}.d{d}", ref, got == want,
                                  got, want, abs(got - want)))
    n_surj = max(cfg.Ns) if max(cfg.Ns) >= 2 else 2
    n_surj = min(n_surj, 3)
    for src, dst in _SURJECTIONS_TRUE:
        ok = ga.surjection_check(src, dst, n_surj)
        out.append(record("algebra", f"algebra.surj.{src}_to_{dst}", "surjection-diagrams",
                          ok, ok, True))
    for src, dst in _SURJECTIONS_FALSE:
        ok = ga.surjection_check(src, dst, n_surj)
        out.append(record("algebra", f"algebra.nosurj.{src}_to_{dst}", "surjection-diagrams",
                          not ok, ok, False))
    f = ga.pauli_structure_constants()
    defects = ga.jacobi_defects(f)
    out.append(record("algebra", "algebra.jacobi.pauli", "structure-constants-jacobi",
                      not defects, f"{len(defects)} defects", "0 defects"))
    # negative control: antisymmetric constants that break Jacobi
    bad = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    bad[0][0][1], bad[0][1][0] = 1, -1
    bad[1][0][1], bad[1][1][0] = 1, -1
    bad[2][1][2], bad[2][2][1] = 1, -1
    bad_defects = ga.jacobi_defects(bad)
    out.append(record("algebra", "algebra.jacobi.negative_control", "structure-constants-jacobi",
                      bool(bad_defects), f"{len(bad_defects)} defects", "> 0 defects"))
    c1, c2, c3 = (ga.NCPoly.word((ga.gen("x", k),)) for k in (1, 2, 3))
    unit = ga.NCPoly.one()
    ok = ga.ternary_j_commutator(c1, unit, c2) == ga.commutator(c1, c2)
    out.append(record("algebra", "algebra.unital_reduction", "cubic-commutator-unit", ok,
                      "{X,1,Y}", "[X,Y]"))
    return out


# ---------------------------------------------------------------------------
# clifford
# ---------------------------------------------------------------------------


def _sl2_sample(rng: random.Random) -> mt.MatC:
    m = mt.MatC.identity(2)
    for _ in range(4):
        a = J * rng.randint(-2, 2) + rng.randint(-2, 2)
        if rng.random() < 0.5:
            m = m @ mt.MatC([[1, a], [0, 1]])
        else:
            m = m @ mt.MatC([[1, 0], [a, 1]])
    return m


def clifford_suite(cfg: RunConfig) -> List[CheckRecord]:
    out = []
    rep = mt.eta_verify()
    for name, got_t, want_t in (("eta", rep.undotted, rep.expected_undotted),
                                ("eta_dot", rep.dotted, rep.expected_dotted)):
        for t in sorted(got_t):
            got, want = got_t[t], want_t[t]
            key = "".join(map(str, t))
            ref = "clifford-eta-table" if name == "eta" else "clifford-dotted-eta"
            out.append(record("clifford", f"clifford.{name}.{key}", ref, got == want,
                              got, want, documented=got is not None))
    out.append(record("clifford", "clifford.eta.all_scalar", "clifford-eta-table",
                      rep.all_scalar, rep.all_scalar, True))
    out.append(record("clifford", "clifford.eta_dot.conjugate_relation", "clifford-dotted-eta",
                      rep.dotted_is_conjugate, rep.dotted_is_conjugate, True))
    for key, m in mt.skew_vanish_check().items():
        out.append(record("clifford", f"clifford.skew.{key}", "clifford-skew-vanish",
                          m.is_zero(), m, 0))
    rng = cfg.rng("similarity")
    good = sum(mt.similarity_invariance(mt.random_invertible(rng)) for _ in range(cfg.n_similarity))
    out.append(record("clifford", "clifford.similarity", "clifford-similarity", good == cfg.n_similarity,
                      f"{good}/{cfg.n_similarity}", f"{cfg.n_similarity}/{cfg.n_similarity}"))
    s1, s2, s3 = mt.pauli()
    for idx, want, label in (((1, 2, 1), s2 * -2, "-2 sigma2"), ((2, 1, 2), s1 * -2, "-2 sigma1"),
                             ((1, 2, 3), mt.MatC.zeros(2), "0")):
        got = mt.pauli_cubic(*idx)
        out.append(record("clifford", "clifford.pauli." + "".join(map(str, idx)), "pauli-cubic",
                          got == want, got, label))
    rng = cfg.rng("sl2")
    good = sum(mt.epsilon_invariance_check(_sl2_sample(rng)) for _ in range(20))
    out.append(record("clifford", "clifford.epsilon.sl2", "epsilon-invariance", good == 20,
                      f"{good}/20", "20/20"))
    scaled = mt.MatC([[2, 0], [0, 1]])
    bad = mt.epsilon_invariance_check(scaled)
    out.append(record("clifford", "clifford.epsilon.det2_rejected", "epsilon-invariance", not bad,
                      bad, False))
    return out


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------


def forms_suite(cfg: RunConfig) -> List[CheckRecord]:
    out = []
    N = 3
    f = gf.CoordPoly.var(N, 1) * gf.CoordPoly.var(N, 2)
    lhs = gf.normal_form(gf.d(gf.d(gf.GradedForm.function(f))))
    rhs = gf.normal_form(gf.display_d2(f))
    out.append(record("forms", "forms.d2_display", "forms-d2-display", lhs == rhs, lhs, rhs))
    w = gf.GradedForm.basis(N, gf.dx(2), gf.dx(3), gf.dx(1))
    want = gf.GradedForm.basis(N, gf.dx(1), gf.dx(2), gf.dx(3), coeff=J2)
    got = gf.normal_form(w)
    out.append(record("forms", "forms.rule.cyclic_triple", "forms-rules", got == want, got, want))
    w = gf.GradedForm.basis(N, gf.d2x(1), gf.dx(2))
    want = gf.GradedForm.basis(N, gf.dx(2), gf.d2x(1), coeff=J2)
    got = gf.normal_form(w)
    out.append(record("forms", "forms.rule.d2x_dx", "forms-rules", got == want, got, want))
    for factors, label in (((gf.dx(1), gf.d2x(2), gf.dx(3)), "dx d2x dx"),
                           ((gf.d2x(1), gf.d2x(2)), "d2x d2x"),
                           ((gf.dx(1), gf.dx(1), gf.dx(1)), "dx1^3")):
        got = gf.normal_form(gf.GradedForm.basis(N, *factors))
        key = label.replace(" ", "_").replace("^", "")
        out.append(record("forms", f"forms.rule.vanish.{key}", "forms-rules", got.is_zero(), got, 0))
    for n in (1, 2, 3):
        monos = list(gf.all_monomials(n, 4))
        bad = [m for m in monos if not gf.d3_check(m)]
        out.append(record("forms", f"forms.d3.monomials.N{n}", "forms-d3", not bad,
                          f"{len(monos) - len(bad)}/{len(monos)}", f"{len(monos)}/{len(monos)}"))
    rng = cfg.rng("forms")
    polys = [gf.random_coordpoly(rng) for _ in range(cfg.n_forms)]
    good = sum(gf.d3_check(p) for p in polys)
    out.append(record("forms", "forms.d3.random", "forms-d3", good == len(polys),
                      f"{good}/{len(polys)}", f"{len(polys)}/{len(polys)}"))
    good = sum(gf.normal_form(gf.mixed_bracket(p)).is_zero() for p in polys[:50])
    out.append(record("forms", "forms.mixed_bracket", "forms-d3", good == 50, f"{good}/50", "50/50"))
    return out


# ---------------------------------------------------------------------------
# heisenberg
# ---------------------------------------------------------------------------


def heisenberg_suite(cfg: RunConfig) -> List[CheckRecord]:
    out = []
    for r in wo.heisenberg_identity_suite():
        ref = "ternary-heisenberg-linear" if r.check_id.startswith("linear") else "ternary-heisenberg"
        out.append(record("heisenberg", f"heisenberg.{r.check_id}", ref, r.ok, r.lhs, r.rhs))
    r = wo.normalized_six_term()
    out.append(record("heisenberg", "heisenberg.normalized_six_term", "ternary-heisenberg-normalization",
                      r.ok, r.lhs, r.rhs, documented=True))
    rng = cfg.rng("hquad")
    good = sum(wo.hquad_identity(wo.random_operator(rng)) for _ in range(cfg.n_hquad))
    out.append(record("heisenberg", "heisenberg.hquad.random", "z2-hquad", good == cfg.n_hquad,
                      f"{good}/{cfg.n_hquad}", f"{cfg.n_hquad}/{cfg.n_hquad}"))
    a = wo.X + wo.D
    ad = a.adjoint()
    s = a * ad + ad * a
    h2 = wo.X * wo.X - wo.D * wo.D
    out.append(record("heisenberg", "heisenberg.hquad.factor", "z2-hquad", s == h2 * 2, s, h2 * 2))
    out.append(record("heisenberg", "heisenberg.hquad.printed_normalization", "z2-hquad",
                      s == h2, s, h2, documented=True))
    phi0 = wo.GaussPoly((1,))
    phi1 = wo.GaussPoly((0, 1))
    got = wo.apply(a, phi0)
    out.append(record("heisenberg", "heisenberg.z2.ground_state", "z2-eigenstates", got.is_zero(), got, 0))
    got = wo.apply(h2, phi1)
    out.append(record("heisenberg", "heisenberg.z2.first_excited", "z2-eigenstates",
                      got == phi1.scale(3), got, phi1.scale(3)))
    kh = wo.build_khat()
    want = wo.D ** 3 * (wo.LAM ** 3 * 2) - wo.X ** 3 - wo.UNIT
    out.append(record("heisenberg", "heisenberg.khat", "khat-z3", kh == want, kh, want))
    ks = kh.specialize(lam=-I)
    out.append(record("heisenberg", "heisenberg.khat.selfadjoint", "khat-z3", ks.adjoint() == ks,
                      ks.adjoint(), ks))
    k1, k2 = wo.build_k_pair()
    out.append(record("heisenberg", "heisenberg.k_pair_adjoint", "k-pair", k1.adjoint() == k2,
                      k1.adjoint(), k2))
    h = wo.build_hamiltonian_z3()
    want = -(wo.D ** 6) + wo.X ** 6
    out.append(record("heisenberg", "heisenberg.h6", "h6", h == want, h, want))
    printed = wo.D ** 6 + wo.X ** 6
    out.append(record("heisenberg", "heisenberg.h6.printed_sign", "h6", h == printed, h, printed,
                      documented=True))
    rep = wo.cyclic_h_check()
    out.append(record("heisenberg", "heisenberg.cyclic_h.even", "cyclic-h", rep.even_remainder.is_zero(),
                      rep.even, rep.printed, documented=True))
    out.append(record("heisenberg", "heisenberg.cyclic_h.even_is_3h", "cyclic-h", rep.even == h * 3,
                      rep.even, h * 3))
    out.append(record("heisenberg", "heisenberg.cyclic_h.odd_equals_even", "cyclic-h",
                      rep.odd_minus_even.is_zero(), rep.odd, rep.even))
    return out


# ---------------------------------------------------------------------------
# spectral
# ---------------------------------------------------------------------------


def _rel(a, b):
    return abs(a - b) / abs(b)


def spectral_suite(cfg: RunConfig) -> List[CheckRecord]:
    out = []
    spec = spc.sextic_spectrum(cfg.M, rtol=cfg.rtol)
    fd = spc.fd_oracle(wo.build_hamiltonian_z3())
    for n in range(6):
        lam, err = spec.eigenvalues[n], spec.errors[n]
        out.append(record("spectral", f"spectral.sextic.convergence.{n}", "h6-spectrum",
                          err <= cfg.rtol * lam, repr(float(lam)), f"M={2 * cfg.M}", err / lam))
        rel = _rel(fd[n], lam)
        out.append(record("spectral", f"spectral.sextic.fd_agreement.{n}", "h6-spectrum",
                          rel <= cfg.fd_rtol, repr(float(fd[n])), repr(float(lam)), rel))
    harm = spc.spectrum(spc.harmonic_operator(), 64, n_eig=10)
    dev = float(np.abs(harm.eigenvalues - (2 * np.arange(10) + 1)).max())
    out.append(record("spectral", "spectral.harmonic.ladder", "z2-eigenstates", dev <= 1e-8,
                      list(np.round(harm.eigenvalues[:4], 10)), "1, 3, 5, 7", dev))
    out.append(record("spectral", "spectral.harmonic.lambda1", "z2-eigenstates",
                      abs(harm.eigenvalues[1] - 3) <= 1e-8, repr(float(harm.eigenvalues[1])), 3,
                      abs(harm.eigenvalues[1] - 3)))
    fdh = spc.fd_oracle(spc.harmonic_operator(), n_eig=3)
    dev = float(np.abs(fdh - np.array([1, 3, 5])).max())
    out.append(record("spectral", "spectral.harmonic.fd", "z2-eigenstates", dev <= 1e-6,
                      list(np.round(fdh, 8)), "1, 3, 5", dev))

    xs = np.linspace(-1, 1, 64)
    for b in (0, 1, 2):
        sol = spc.series_solution(b, terms=60)
        res = float(np.abs(spc.ode_residual(sol, xs)).max())
        out.append(record("spectral", f"spectral.series.residual.{b}", "third-order-ode",
                          res <= 1e-10, f"{res:.2e}", "<= 1e-10", res))
        kres = spc.khat_eigen_check(sol)
        out.append(record("spectral", f"spectral.series.khat.{b}", "third-order-ode",
                          kres <= 1e-10, f"{kres:.2e}", "<= 1e-10", kres))
        m = spc.match_series_to_F(sol)
        out.append(record("spectral", f"spectral.series.parameters.{b}", "series-closed-form",
                          m.matches_printed_parameters, f"({m.p}, {m.q})",
                          "({}, {})".format(*m.printed_p_q), documented=m.matched))
        out.append(record("spectral", f"spectral.series.convention.{b}", "series-convention",
                          m.convention == "printed", m.convention, "printed", documented=m.matched))
        out.append(record("spectral", f"spectral.series.argument.{b}", "series-convention",
                          m.matches_printed_argument, f"{m.argument} x^6",
                          f"{spc.series.PRINTED_ARGUMENT} x^6", documented=m.matched))
        out.append(record("spectral", f"spectral.series.closed_form.{b}", "series-closed-form",
                          m.max_deviation <= 1e-12, f"{m.max_deviation:.2e}", "<= 1e-12", m.max_deviation))

    Es = np.geomspace(0.1, 100, 13)
    rel = max(_rel(spc.action_integral(E), spc.gamma_closed_form(E)) for E in Es)
    out.append(record("spectral", "spectral.bs.action_vs_gamma", "bs-gamma-form", rel <= 1e-8,
                      f"{rel:.2e}", "<= 1e-8", rel))
    r1, r2 = spc.gamma_recurrence_residuals()
    out.append(record("spectral", "spectral.bs.gamma_recurrence", "bs-gamma-form",
                      max(r1, r2) <= 1e-12, f"{max(r1, r2):.2e}", "<= 1e-12", max(r1, r2)))
    ratio = spc.action_integral(2.0) / spc.action_integral(1.0)
    out.append(record("spectral", "spectral.bs.linear_in_E", "bs-gamma-form", abs(ratio - 2) <= 1e-10,
                      repr(ratio), 2, abs(ratio - 2)))
    levels = spc.energy_levels(5, "paper")
    worst = max(abs(lv.action - lv.n) for lv in levels)
    coef = spc.level_coefficient()
    out.append(record("spectral", "spectral.bs.paper_levels", "bs-levels", worst <= 1e-10,
                      f"E_1 = {levels[0].E_n!r}", f"action n, E_n = {coef!r} n", worst))
    ha = spc.harmonic_bs_sanity()
    out.append(record("spectral", "spectral.bs.harmonic", "bs-harmonic",
                      _rel(ha, 2 * math.pi) <= 1e-10, repr(ha), "2 pi", _rel(ha, 2 * math.pi)))

    big = spc.sextic_spectrum(max(cfg.M, 400), n_eig=61, rtol=cfg.rtol).eigenvalues
    slope = spc.loglog_slope(big)
    out.append(record("spectral", "spectral.semiclassical.slope", "lambda-scaling",
                      abs(slope - 3) <= 0.05, f"{slope:.4f}", "3 +- 0.05", abs(slope - 3)))
    r2 = spc.cube_root_r2(big)
    out.append(record("spectral", "spectral.semiclassical.cube_root_r2", "lambda-scaling", r2 > 0.9999,
                      f"{r2:.10f}", "> 0.9999", 1 - r2))
    rows = spc.semiclassical_comparison(big / 6)
    worst = max(r.rel_deviation for r in rows)
    out.append(record("spectral", "spectral.semiclassical.e_cubed", "lambda-scaling", worst <= 0.03,
                      f"{worst:.4f}", "<= 0.03", worst))
    out.append(record("spectral", "spectral.semiclassical.printed_rule", "lambda-scaling",
                      abs(slope - 1) <= 0.05, f"slope {slope:.4f}", "slope 1 (lambda_n ~ n)",
                      abs(slope - 1), documented=True))
    return out


SUITES: Dict[str, Callable[[RunConfig], List[CheckRecord]]] = {
    "algebra": algebra_suite,
    "clifford": clifford_suite,
    "forms": forms_suite,
    "heisenberg": heisenberg_suite,
    "spectral": spectral_suite,
}


def run_suite(name: str, cfg: RunConfig) -> List[CheckRecord]:
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}")
    return SUITES[name](cfg)


def run(name: str, cfg: RunConfig) -> List[CheckRecord]:
    """Run one suite or ``"all"``; records come back sorted by check_id."""
    cfg.validate()
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise ConfigError(f"unknown suite {n!r}")
    if cfg.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as ex:
            chunks = list(ex.map(lambda n: run_suite(n, cfg), names))
    else:
        chunks = [run_suite(n, cfg) for n in names]
    records = list(itertools.chain.from_iterable(chunks))
    return sorted(records, key=lambda r: r.check_id)
