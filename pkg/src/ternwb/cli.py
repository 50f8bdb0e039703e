"""``ternwb`` command-line interface."""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import gradedalg as ga
from . import spectral as spc
from .report import exit_code, summary_markdown, to_json
from .suites import SUITES, ConfigError, RunConfig, run

__all__ = ["main", "parse_n_range", "load_config"]

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def parse_n_range(text: str) -> tuple:
    """``"3"``, ``"2..4"`` or ``"2,4"`` to a tuple of ints."""
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            vals = tuple(range(int(lo), int(hi) + 1))
        else:
            vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse N range {text!r}") from None
    if not vals:
        raise ConfigError(f"empty N range {text!r}")
    return vals


_INT_KEYS = {"M", "seed", "n_similarity", "n_forms", "n_hquad", "jobs"}
_FLOAT_KEYS = {"rtol", "fd_rtol"}


def load_config(path: Optional[str], cfg: RunConfig) -> RunConfig:
    """Apply ``key=value`` lines (``#`` comments allowed) to ``cfg``."""
    if path is None:
        return cfg
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    for num, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{num}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key == "N":
                cfg.Ns = parse_n_range(value)
            elif key in _INT_KEYS:
                setattr(cfg, key, int(value))
            elif key in _FLOAT_KEYS:
                setattr(cfg, key, float(value))
            elif key == "out":
                cfg.out = value
            else:
                raise ConfigError(f"{path}:{num}: unknown key {key!r}")
        except ValueError:
            raise ConfigError(f"{path}:{num}: bad value for {key}") from None
    return cfg


def _config_from_args(args) -> RunConfig:
    cfg = load_config(args.config, RunConfig())
    if args.N is not None:
        cfg.Ns = parse_n_range(args.N)
    for name in ("M", "seed", "jobs"):
        v = getattr(args, name, None)
        if v is not None:
            setattr(cfg, name, v)
    if args.out is not None:
        cfg.out = args.out
    return cfg.validate()


def _write_reports(records, out: str) -> None:
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    (d / "report.json").write_text(to_json(records))
    (d / "summary.md").write_text(summary_markdown(records))


def _cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    records = run(args.suite, cfg)
    _write_reports(records, cfg.out)
    code = exit_code(records)
    counts = {s: sum(r.status == s for r in records) for s in ("pass", "fail", "discrepancy_documented")}
    print(f"{len(records)} checks: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['discrepancy_documented']} documented discrepancies -> {cfg.out}")
    return code


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_spectrum(args) -> int:
    if args.M < 8:
        raise ConfigError("M must be at least 8")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.harmonic:
            spec = spc.spectrum(spc.harmonic_operator(), args.M)
        else:
            spec = spc.sextic_spectrum(args.M)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if spec.converged_count < 10:
        print(f"warning: only {spec.converged_count} converged rows at M={args.M}", file=sys.stderr)
    n_show = args.n_show if args.n_show is not None else spec.converged_count
    _emit(spc.spectrum_csv(spec, n_show), args.out)
    print(f"# converged: {spec.converged_count} of {len(spec.eigenvalues)} (rtol {spec.rtol:g})",
          file=sys.stderr)
    return EXIT_OK


def _cmd_series(args) -> int:
    if args.terms < 8:
        raise ConfigError("terms must be at least 8 for parameter matching")
    sol = spc.series_solution(args.branch, terms=args.terms)
    xs = np.linspace(-1, 1, 64)
    payload = spc.match_series_to_F(sol).to_dict()
    payload["ode_residual"] = float(np.abs(spc.ode_residual(sol, xs)).max())
    payload["khat_residual"] = spc.khat_eigen_check(sol)
    payload["terms"] = args.terms
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_bohr_sommerfeld(args) -> int:
    for name in ("m", "k", "hbar"):
        if not getattr(args, name) > 0:
            raise ConfigError(f"{name} must be positive")
    if args.n_max < 1:
        raise ConfigError("n-max must be at least 1")
    levels = spc.energy_levels(args.n_max, args.convention, args.m, args.k, args.hbar)
    _emit(spc.quantization_csv(levels), args.out)
    if args.compare_M is not None:
        if args.compare_M < 64:
            raise ConfigError("compare-M must be at least 64")
        eig = spc.sextic_spectrum(args.compare_M, n_eig=41).eigenvalues
        rows = spc.semiclassical_comparison(eig / 6)
        lines = ["n,E_cubed,eigenvalue,rel_deviation"]
        lines += [f"{r.n},{r.E_cubed!r},{r.eigenvalue!r},{r.rel_deviation:.6e}" for r in rows]
        text = "\n".join(lines) + "\n"
        if args.comparison_out:
            Path(args.comparison_out).write_text(text)
        else:
            sys.stderr.write(text)
        worst = max(r.rel_deviation for r in rows)
        print(f"# max relative deviation n in [20, 40]: {worst:.4%}", file=sys.stderr)
        return EXIT_OK if worst <= 0.03 else EXIT_FAIL
    return EXIT_OK


def _cmd_report(args) -> int:
    cfg = _config_from_args(args)
    records = run("all", cfg)
    out = Path(cfg.out)
    _write_reports(records, out)
    (out / "spectrum.csv").write_text(spc.spectrum_csv(spc.sextic_spectrum(cfg.M)))
    for conv in ("paper", "standard"):
        (out / f"quantization_{conv}.csv").write_text(spc.quantization_csv(spc.energy_levels(10, conv)))
    matches = [spc.match_series_to_F(spc.series_solution(b, terms=60)).to_dict() for b in (0, 1, 2)]
    (out / "series_match.json").write_text(json.dumps(matches, indent=2, sort_keys=True) + "\n")
    (out / "dimensions.csv").write_text(ga.dimension_csv(ga.dimension_table(Ns=cfg.Ns)))
    print(f"{len(records)} checks written to {out}")
    return exit_code(records)


def _add_run_options(p):
    p.add_argument("--N", default=None, help="generator counts, e.g. 3 or 2..4")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--M", type=int, default=None, help="spectral truncation size")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--config", default=None, help="key=value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ternwb", description="Verification workbench for ternary algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _add_run_options(p)
    p.add_argument("--out", default=None, help="directory for report.json and summary.md")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="sextic oscillator eigenvalues as CSV")
    p.add_argument("--M", type=int, default=400)
    p.add_argument("--n-show", type=int, default=None)
    p.add_argument("--harmonic", action="store_true", help="use p^2 + x^2 instead")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("series", help="series solution and closed-form match as JSON")
    p.add_argument("--branch", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--terms", type=int, default=60)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("bohr-sommerfeld", help="quantized energies as CSV")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--convention", choices=("paper", "standard"), default="paper")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--compare-M", type=int, default=None,
                   help="also compare E_n^3 (standard, unit constants) with the spectrum at this M")
    p.add_argument("--comparison-out", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bohr_sommerfeld)

    p = sub.add_parser("report", help="run everything and write all artifacts")
    _add_run_options(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"ternwb: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (spc.QuadratureError, spc.EigensolverError) as exc:
        print(f"ternwb: numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
