"""Command-line front end.

Every subcommand writes one or more tables into ``--out`` (CSV by default,
JSON with ``--format json``) and, with ``--svg``, a matching plot. Exit
status is 0 on success, 2 on usage or config errors (nothing is written)
and 3 on physics-domain errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from . import eigenstates, plasmons, scattering, thermal, wellbands
from .coupling import CouplingParams, critical_angle, gamma_theta
from .errors import PhysicsError
from .io import ConfigError, columns_to_rows, load_well_config, profile_from_config, write_svg, write_table


def _positive(text):
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {text!r}")
    return value


def _nonneg(text):
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _count(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2: {text!r}")
    return value


class Job:
    """Tables and plots produced by one command, written only after success."""

    def __init__(self, params: dict):
        self.params = params
        self.tables = []
        self.plots = []

    def table(self, name, columns, rows):
        self.tables.append((name, columns, rows))

    def plot(self, name, draw):
        self.plots.append((name, draw))


def _bright(cfg):
    profile = profile_from_config(cfg)
    tr = wellbands.well_transitions(profile, cfg["n_states"])
    modes = plasmons.plasmon_modes(tr)
    return tr, modes


def cmd_subbands(args, cfg, job):
    profile = profile_from_config(cfg)
    bands = wellbands.solve_subbands(profile, cfg["n_states"])
    bands = wellbands.fill_subbands(bands, profile.sheet_density, profile.well_mass,
                                    profile.temperature)
    tr = wellbands.build_transitions(bands, eps_s=profile.eps_s)
    job.params["fermi_level_meV"] = f"{bands.fermi_level:.12g}"
    cols = ["z_nm"] + [f"psi_{n + 1}" for n in range(bands.n_states)]
    job.table("subbands", cols, columns_to_rows(bands.z_grid, *bands.wavefunctions))
    job.table("transitions", ["i", "f", "w_meV", "dN_cm2", "intJ"],
              [(i + 1, f + 1, w, dn, ij) for (i, f), w, dn, ij in
               zip(tr.pairs, tr.frequencies, tr.delta_pop, tr.integrated_currents)])

    def draw(ax):
        ax.plot(profile.z_grid, profile.potential, "k-", lw=1)
        for e, psi in zip(bands.energies, bands.wavefunctions):
            ax.plot(bands.z_grid, e + 20 * psi, lw=1)
        ax.axhline(bands.fermi_level, ls="--", color="grey")
        ax.set_xlabel("z (nm)")
        ax.set_ylabel("energy (meV)")
    job.plot("subbands", draw)


def cmd_plasmons(args, cfg, job):
    tr, modes = _bright(cfg)
    g0 = plasmons.mode_gamma0(modes)
    job.params["bright_index"] = modes.bright_index + 1
    job.table("modes", ["n", "omega_meV", "weight", "gamma0_meV"],
              [(n + 1, w, wt, g) for n, (w, wt, g) in
               enumerate(zip(modes.frequencies, modes.weights, g0))])
    top = 1.5 * max(modes.frequencies.max(), tr.frequencies.max())
    omega = np.linspace(top / args.points, top, args.points)
    a_sp = plasmons.absorption_spectrum(tr, args.linewidth, omega)
    a_msp = plasmons.absorption_spectrum(modes, args.linewidth, omega, reference=tr)
    job.table("absorption", ["omega_meV", "A_sp", "A_msp"], columns_to_rows(omega, a_sp, a_msp))

    def draw(ax):
        ax.plot(omega, a_sp, label="single particle")
        ax.plot(omega, a_msp, label="plasmons")
        ax.set_xlabel("energy (meV)")
        ax.set_ylabel("absorption (1/meV)")
        ax.legend()
    job.plot("absorption", draw)


def cmd_gamma(args, cfg, job):
    tr, modes = _bright(cfg)
    p = CouplingParams(modes.omega0, plasmons.bright_gamma0(modes), cfg["gamma_meV"],
                       modes.eps_s)
    theta = np.linspace(0.0, args.theta_max, args.points)
    rate = gamma_theta(p, theta, p.omega0)
    job.params.update(omega0_meV=f"{p.omega0:.12g}", gamma0_meV=f"{p.gamma0:.12g}")
    job.table("gamma", ["theta_deg", "gamma_meV"], columns_to_rows(theta, rate))

    def draw(ax):
        ax.semilogy(theta[1:], rate[1:])
        ax.axhline(p.gamma_nr, ls="--", color="grey")
        ax.set_xlabel("angle (deg)")
        ax.set_ylabel("radiative rate (meV)")
    job.plot("gamma", draw)


def cmd_critical_angle(args, cfg, job):
    rows = []
    for ns in args.Ns:
        sub = dict(cfg, Ns_cm2=ns)
        _, modes = _bright(sub)
        p = CouplingParams(modes.omega0, plasmons.bright_gamma0(modes), cfg["gamma_meV"],
                           modes.eps_s)
        rows.append((ns, critical_angle(p)))
    job.table("critical_angle", ["Ns_cm2", "theta_c_deg"], rows)

    def draw(ax):
        ax.semilogx([r[0] for r in rows], [r[1] for r in rows], "o-")
        ax.set_xlabel("N_s (cm^-2)")
        ax.set_ylabel("critical angle (deg)")
    job.plot("critical_angle", draw)


def _abstract_params(args):
    return CouplingParams.from_gQ(args.g, args.Q, args.theta_deg)


def cmd_spectrum(args, cfg, job):
    p = _abstract_params(args)
    grid = scattering.default_grid(1.0, args.points)
    tab = scattering.optical_coefficients(p, args.theta_deg, grid, args.variant)
    job.table("spectrum", ["omega_norm", "re_t", "im_t", "re_r", "im_r", "alpha"],
              columns_to_rows(grid, tab.t.real, tab.t.imag, tab.r.real, tab.r.imag, tab.alpha))

    def draw(ax):
        ax.semilogx(grid, tab.alpha, label="absorptivity")
        ax.semilogx(grid, tab.reflectivity, label="reflectivity")
        ax.semilogx(grid, tab.transmissivity, label="transmissivity")
        ax.set_xlabel("omega / omega0")
        ax.legend()
    job.plot("spectrum", draw)


def cmd_peaks(args, cfg, job):
    g = np.geomspace(args.g_min, args.g_max, args.points)
    res = scattering.peak_curves(g, args.Q, args.theta_deg)
    job.table("peaks", ["g", "peak_alpha", "peak_r2", "perturbative_alpha", "perturbative_r2"],
              columns_to_rows(res["g"], res["peak_alpha"], res["peak_r2"],
                              res["perturbative_alpha"], res["perturbative_r2"]))

    def draw(ax):
        ax.loglog(g, res["peak_alpha"], "r-", label="peak absorptivity")
        ax.loglog(g, res["peak_r2"], "b-", label="peak reflectivity")
        ax.loglog(g, res["perturbative_alpha"], "r--")
        ax.loglog(g, res["perturbative_r2"], "b--")
        ax.set_ylim(1e-6, 2)
        ax.set_xlabel("g")
        ax.legend()
    job.plot("peaks", draw)


def cmd_halfmax(args, cfg, job):
    ratio = np.linspace(args.ratio_max / args.points, args.ratio_max, args.points)
    res = scattering.half_max_frequencies(ratio, args.Q, args.variant, args.which,
                                          args.theta_deg, strict=False)
    job.table("halfmax", ["ratio", "omega_minus", "omega_plus", "markov_minus", "markov_plus"],
              columns_to_rows(res["ratio"], res["omega_minus"], res["omega_plus"],
                              res["markov_minus"], res["markov_plus"]))

    def draw(ax):
        ax.plot(ratio, res["omega_minus"], "k-")
        ax.plot(ratio, res["omega_plus"], "k-")
        ax.plot(ratio, res["markov_minus"], "k--")
        ax.plot(ratio, res["markov_plus"], "k--")
        ax.set_xlabel("Gamma(theta, omega0) / omega0")
        ax.set_ylabel("omega / omega0")
    job.plot("halfmax", draw)


def cmd_thermal(args, cfg, job):
    p = CouplingParams.from_gQ(args.g, args.Q, args.theta_deg, omega0=args.omega0)
    variant = scattering.ModelVariant.MIRROR if args.mirror else scattering.ModelVariant.FULL
    grid = scattering.default_grid(p.omega0, args.points)
    s = thermal.ThermalScenario(p, args.Tel, args.Tph, args.theta_deg, variant, grid)
    emission = thermal.emitted_spectrum(s)
    job.params["integrated_power_meV2"] = f"{thermal.integrated_power(s):.12g}"
    job.table("thermal", ["omega_meV", "n_out", "planck_Tel", "planck_Tph", "alpha"],
              columns_to_rows(grid, emission.photons_out, emission.planck_el, emission.planck_ph,
                              emission.alpha_used))

    def draw(ax):
        ax.plot(grid, emission.power_density)
        ax.set_xlim(0, 3 * p.omega0)
        ax.set_xlabel("energy (meV)")
        ax.set_ylabel("hbar omega n_out (meV)")
    job.plot("thermal", draw)


def cmd_dispersion(args, cfg, job):
    p = CouplingParams(1.0, args.gamma0, args.gamma)
    k, om = eigenstates.default_axes(args.points, args.k_max, args.omega_max)
    m = eigenstates.dispersion_map(p, k, om)
    w = m.normalized()
    kk, oo = np.meshgrid(k, om)
    job.params["ridges"] = eigenstates.count_ridges(m)[0]
    job.table("dispersion", ["k_norm", "omega_norm", "weight"],
              columns_to_rows(kk.ravel(), oo.ravel(), w.ravel()))

    def draw(ax):
        ax.pcolormesh(k, om, w, shading="nearest", cmap="magma")
        edge = min(args.k_max, args.omega_max)
        ax.plot([0, edge], [0, edge], "w--", lw=1)
        ax.set_xlabel("c k / (sqrt(eps_s) omega0)")
        ax.set_ylabel("Omega / omega0")
    job.plot("dispersion", draw)


COMMANDS = {
    "subbands": (cmd_subbands, True),
    "plasmons": (cmd_plasmons, True),
    "gamma": (cmd_gamma, True),
    "critical-angle": (cmd_critical_angle, True),
    "spectrum": (cmd_spectrum, False),
    "peaks": (cmd_peaks, False),
    "halfmax": (cmd_halfmax, False),
    "thermal": (cmd_thermal, False),
    "dispersion": (cmd_dispersion, False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plasmonio", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"plasmonio {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON well description")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--svg", action="store_true", help="also write SVG plots")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    add("subbands", "Subband energies, wavefunctions and transitions of a well.")
    sp = add("plasmons", "Plasmon modes and absorption spectra of a well.")
    sp.add_argument("--linewidth", type=_positive, default=10.0, help="FWHM (meV)")
    sp.add_argument("--points", type=_count, default=2000)
    sp = add("gamma", "Radiative rate of the bright plasmon versus angle.")
    sp.add_argument("--theta-max", type=_positive, default=89.0)
    sp.add_argument("--points", type=_count, default=90)
    sp = add("critical-angle", "Angle where radiative and non-radiative rates match.")
    sp.add_argument("--Ns", type=_positive, nargs="+", required=True, help="densities (cm^-2)")

    for name, help_text in [("spectrum", "Transmission, reflection and absorption spectra."),
                            ("peaks", "Peak absorptivity and reflectivity versus g."),
                            ("halfmax", "Half-maximum frequencies versus radiative rate."),
                            ("thermal", "Thermal emission spectrum.")]:
        sp = add(name, help_text)
        sp.add_argument("--Q", type=_positive, default=15.0, help="omega0 / gamma")
        sp.add_argument("--theta-deg", type=_positive, default=45.0)
        if name in ("spectrum", "thermal"):
            sp.add_argument("--g", type=_positive, default=1.0, help="Gamma(theta, omega0) / gamma")
        if name in ("spectrum", "halfmax"):
            sp.add_argument("--variant", choices=[v.value for v in scattering.ModelVariant],
                            default="full")
        if name == "spectrum":
            sp.add_argument("--points", type=_count, default=4001)
        if name == "peaks":
            sp.add_argument("--g-min", type=_positive, default=1e-3)
            sp.add_argument("--g-max", type=_positive, default=1e3)
            sp.add_argument("--points", type=_count, default=61)
        if name == "halfmax":
            sp.add_argument("--which", choices=["alpha", "r"], default="alpha")
            sp.add_argument("--ratio-max", type=_positive, default=2.0)
            sp.add_argument("--points", type=_count, default=40)
        if name == "thermal":
            sp.add_argument("--omega0", type=_positive, default=100.0, help="plasmon energy (meV)")
            sp.add_argument("--Tel", type=_nonneg, default=300.0, help="electron temperature (K)")
            sp.add_argument("--Tph", type=_nonneg, default=0.0, help="photon temperature (K)")
            sp.add_argument("--mirror", action="store_true")
            sp.add_argument("--points", type=_count, default=4001)

    sp = add("dispersion", "Plasmon weight over wavevector and frequency.")
    sp.add_argument("--gamma0", type=_positive, default=1 / 30, help="Gamma0 / omega0, e.g. 1/30")
    sp.add_argument("--gamma", type=_positive, default=1 / 15, help="gamma / omega0, e.g. 1/15")
    sp.add_argument("--k-max", type=_positive, default=2.0)
    sp.add_argument("--omega-max", type=_positive, default=2.0)
    sp.add_argument("--points", type=_count, default=512)
    return parser


def _resolved(args, cfg) -> dict:
    params = {k: v for k, v in vars(args).items()
              if k not in ("config", "out", "format", "svg") and v is not None}
    params = {k: (v if not isinstance(v, list) else " ".join(map(str, v))) for k, v in params.items()}
    if cfg is not None:
        params.update({f"well.{k}": v for k, v in cfg.items()})
    return params


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func, needs_config = COMMANDS[args.command]
    cfg = None
    try:
        if args.config is not None:
            cfg = load_well_config(args.config)
        elif needs_config:
            raise ConfigError(f"{args.command} requires --config")
        if args.command in ("spectrum", "thermal", "peaks", "halfmax") and not args.theta_deg < 90:
            raise ConfigError("--theta-deg must be < 90")
        if args.command == "peaks" and args.g_max <= args.g_min:
            raise ConfigError("--g-max must exceed --g-min")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    job = Job(_resolved(args, cfg))
    try:
        func(args, cfg, job)
    except PhysicsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3

    args.out.mkdir(parents=True, exist_ok=True)
    for name, columns, rows in job.tables:
        path = write_table(args.out / name, columns, rows, job.params, args.format)
        print(path)
    if args.svg:
        for name, draw in job.plots:
            print(write_svg(args.out / name, draw))
    return 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
