"""Command-line front end.

    schrodlab [--config FILE] [--out DIR] [--units au|lab] COMMAND [options]

Commands: solve, decompose, energetics, scatter, propagate, verify.

A config file holds flat ``key = value`` lines (``#`` comments). Keys are
the long option names with dashes or underscores. Command-line flags
override the file.  Exit status: 0 success, 1 failed checks, 2 usage or
configuration error.
"""

import argparse
import dataclasses
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .report import (
    emit_field_csv,
    ledger_rows,
    scattering_rows,
    write_csv,
    write_json,
)

COMMANDS = ("solve", "decompose", "energetics", "scatter", "propagate", "verify")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str = "verify"
    out: str = "schrodlab-out"
    units: str = "au"
    # potential
    potential: str = "coulomb"
    strength: float = 1.0
    mu: float = 1.0
    omega: float = 1.0
    table: str = ""
    # radial grid and solver
    r_max: float = 40.0
    n: int = 4000
    l: int = 0
    k: int = 1
    state: int = 0
    # momentum grid
    p_max: float = 20.0
    n_p: int = 2000
    # scattering
    p: float = 1.0
    theta: str = "15,30,45,60,90,120,150,180"
    method: str = "analytic"
    # propagation
    x_min: float = -100.0
    x_max: float = 100.0
    n_x: int = 4096
    x0: float = -25.0
    p0: float = 2.0
    sigma: float = 3.0
    dt: float = 0.005
    steps: int = 6000
    stride: int = 100
    softening: float = 1.0
    absorbing: bool = True


_FIELDS = {f.name: f for f in dataclasses.fields(RunConfig)}


def _convert(name, raw):
    kind = _FIELDS[name].type
    try:
        if kind in ("bool", bool):
            low = str(raw).strip().lower()
            if low in ("1", "true", "yes", "on"):
                return True
            if low in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
        if kind in ("int", int):
            return int(raw)
        if kind in ("float", float):
            return float(raw)
        return str(raw).strip()
    except ValueError:
        raise ConfigError(f"{name}: cannot parse {raw!r} as {kind}") from None


def parse_config_text(text, origin="<config>"):
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected key = value")
        key, raw = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELDS:
            raise ConfigError(f"{origin}:{lineno}: unknown key {key!r}")
        values[key] = _convert(key, raw)
    return values


def build_parser():
    ap = argparse.ArgumentParser(prog="schrodlab", description=__doc__.split("\n\n")[0])
    ap.add_argument("command", nargs="?", choices=COMMANDS)
    ap.add_argument("--config", help="key = value file; flags override it")
    ap.add_argument("--version", action="version", version=f"schrodlab {__version__}")
    for name, f in _FIELDS.items():
        if name == "command":
            continue
        flag = "--" + name.replace("_", "-")
        if f.type in ("bool", bool):
            ap.add_argument(flag, dest=name, default=None, action=argparse.BooleanOptionalAction)
        else:
            ap.add_argument(flag, dest=name, default=None, help=f"default: {f.default}")
    return ap


def resolve_config(argv):
    ap = build_parser()
    args = ap.parse_args(argv)
    values = {}
    if args.config:
        try:
            text = Path(args.config).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        values.update(parse_config_text(text, args.config))
    for name in _FIELDS:
        v = getattr(args, name, None)
        if v is not None:
            values[name] = _convert(name, v)
    cfg = RunConfig(**values)
    if cfg.command not in COMMANDS:
        raise ConfigError(f"unknown command {cfg.command!r}")
    if cfg.units not in ("au", "lab"):
        raise ConfigError("units must be 'au' or 'lab'")
    return cfg


def make_potential(cfg):
    from . import potentials as P

    if cfg.potential == "coulomb":
        return P.coulomb(cfg.strength)
    if cfg.potential == "yukawa":
        return P.yukawa(cfg.mu, cfg.strength)
    if cfg.potential == "harmonic":
        return P.harmonic(cfg.omega)
    if cfg.potential == "free":
        return P.free()
    if cfg.potential == "tabulated":
        if not cfg.table:
            raise ConfigError("tabulated potential needs --table FILE")
        try:
            return P.load_tabulated(cfg.table)
        except OSError as exc:
            raise ConfigError(f"cannot read table {cfg.table}: {exc}") from None
    raise ConfigError(f"unknown potential {cfg.potential!r}")


def _solve(cfg, k=None):
    from .bound_states import solve_radial
    from .numerics import radial_grid

    return solve_radial(make_potential(cfg), cfg.l, k or cfg.k, radial_grid(cfg.r_max, cfg.n))


def _selected_state(cfg):
    return _solve(cfg, max(cfg.k, cfg.state + 1))[cfg.state]


def cmd_solve(cfg, out):
    from .units import bohr_to_meters, hartree_to_ev

    states = _solve(cfg)
    payload = {
        "schema": 1,
        "potential": cfg.potential,
        "l": cfg.l,
        "energy": states[0].energy,
        "energy_ev": hartree_to_ev(states[0].energy),
        "states": [
            {
                "index": s.index,
                "energy": s.energy,
                "energy_ev": hartree_to_ev(s.energy),
                "nodes": s.nodes,
                "method": s.method,
                "residual_sup": s.residual_sup,
            }
            for s in states
        ],
    }
    write_json(out / "solve.json", payload)
    r = states[0].psi.grid.nodes
    header = ["r"] + [f"psi_{s.index}" for s in states]
    cols = [r] + [s.psi.values.real for s in states]
    if cfg.units == "lab":
        header.append("r_m")
        cols.append(bohr_to_meters(r))
    write_csv(out / "states.csv", header, zip(*cols))
    return 0


def cmd_decompose(cfg, out):
    from .momentum import decompose

    amp = decompose(_selected_state(cfg).psi, cfg.p_max, cfg.n_p)
    emit_field_csv(amp, out / "momentum.csv", cfg.units)
    write_json(
        out / "momentum.json",
        {
            "schema": 1,
            "a_at_zero": amp.origin_value,
            "parseval": amp.norm_squared(),
            "truncated": amp.truncated,
            "warnings": list(amp.warnings),
        },
    )
    return 0


def cmd_energetics(cfg, out):
    from .energetics import crossing_radii, energy_densities, virial_report

    dens = energy_densities(_selected_state(cfg).psi, make_potential(cfg))
    emit_field_csv(dens, out / "energetics.csv", cfg.units)
    write_json(
        out / "energetics.json",
        {
            "schema": 1,
            "totals": {
                "KE": dens.ke_total,
                "C": dens.c_total,
                "PE": dens.pe_total,
                "E": dens.e_total,
            },
            "surface_equivalent": dens.surface_equivalent,
            "surface_term_gap": dens.surface_term_gap,
            "origin": dens.origin,
            "crossings": crossing_radii(dens),
            "virial": [
                {"name": c.name, "computed": c.computed, "expected": c.expected, "pass": c.passed}
                for c in virial_report(dens)
            ],
        },
    )
    return 0


def cmd_scatter(cfg, out):
    from .born import born_amplitude

    pot = make_potential(cfg)
    try:
        thetas = [float(t) for t in str(cfg.theta).split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"theta must be a comma-separated list of degrees, got {cfg.theta!r}") from None
    results = [born_amplitude(pot, cfg.p, math.radians(t), cfg.method) for t in thetas]
    write_csv(out / "scattering.csv", *scattering_rows(results))
    return 0


def cmd_propagate(cfg, out):
    from .numerics import uniform_grid
    from .tdse import (
        PropagationRun,
        gaussian_packet,
        line_potential,
        propagate,
        scattering_energy_audit,
    )

    g = uniform_grid(cfg.x_min, cfg.x_max, cfg.n_x)
    pot = make_potential(cfg)
    soft = cfg.softening if pot.singular else 0.0
    run = PropagationRun(
        gaussian_packet(g, cfg.x0, cfg.p0, cfg.sigma),
        line_potential(pot, g, softening=soft),
        cfg.dt,
        cfg.steps,
        cfg.stride,
        cfg.absorbing,
    )
    propagate(run)
    write_csv(out / "tdse_ledger.csv", *ledger_rows(run, cfg.units))
    emit_field_csv(run, out / "tdse_snapshots.csv")
    ledger = scattering_energy_audit(run)
    write_json(
        out / "tdse_audit.json",
        {
            "schema": 1,
            "e_in": ledger.e_in,
            "max_rel_drift": ledger.max_rel_drift,
            "tol": ledger.tol,
            "constant": ledger.constant,
            "ke_pe_exchanged": ledger.exchanged,
        },
    )
    return 0 if ledger.constant else 1


def cmd_verify(cfg, out):
    from .acceptance import run_all

    report, elapsed = run_all()
    write_json(out / "verdict.json", report)
    for c in report["checks"]:
        mark = "PASS" if c["pass"] else "FAIL"
        print(f"[{mark}] {c['name']}  computed={c['computed']:.6g}")
    print(f"overall: {'PASS' if report['pass'] else 'FAIL'} ({elapsed:.1f} s)")
    return 0 if report["pass"] else 1


HANDLERS = {
    "solve": cmd_solve,
    "decompose": cmd_decompose,
    "energetics": cmd_energetics,
    "scatter": cmd_scatter,
    "propagate": cmd_propagate,
    "verify": cmd_verify,
}


def run(cfg):
    out = Path(cfg.out)
    status = HANDLERS[cfg.command](cfg, out)
    # the output path is left out so relocated runs stay byte-identical
    config = {k: v for k, v in dataclasses.asdict(cfg).items() if k != "out"}
    meta = {"schema": 1, "version": __version__, "config": config}
    write_json(out / f"{cfg.command}.meta.json", meta)
    return status


def main(argv=None):
    try:
        cfg = resolve_config(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except ConfigError as exc:
        print(f"schrodlab: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"schrodlab: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"schrodlab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
