"""CSV and JSON emission with fixed formatting and atomic writes.

Column layouts:

* energetics: ``r, psi2, KE, C, PE, E``
* momentum:   ``p, a, a_sq_times_4pi_p2`` (first row is p = 0)
* scattering: ``theta_deg, q, f, dcs``
* tdse ledger: ``t, norm, KE, PE, E``
* tdse snapshots: ``t, node, re_psi, im_psi``

``units="lab"`` appends columns converted to metres / eV. Energy densities
are then in eV per bohr^3.
"""

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .energetics import EnergyDensities
from .momentum import MomentumAmplitude
from .tdse import PropagationRun
from .units import bohr_to_meters, hartree_to_ev

FLOAT_FORMAT = "{:.12g}"


def _fmt(v):
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return FLOAT_FORMAT.format(float(v))


def atomic_write(path, text):
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise OSError(f"could not write {path}: {exc}") from exc
    return path


def write_csv(path, header, rows):
    rows = list(rows)
    if not rows:
        raise ValueError(f"refusing to write {path}: no rows")
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    return atomic_write(path, "\n".join(lines) + "\n")


def _json_default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _clean(o):
    """Replace non-finite floats (invalid in strict JSON) by strings."""
    if isinstance(o, dict):
        return {k: _clean(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_clean(v) for v in o]
    if isinstance(o, (float, np.floating)) and not math.isfinite(o):
        return str(float(o))
    return o


def write_json(path, obj):
    text = json.dumps(_clean(obj), indent=2, sort_keys=True, default=_json_default)
    return atomic_write(path, text + "\n")


def energetics_rows(dens, units="au"):
    header = ["r", "psi2", "KE", "C", "PE", "E"]
    cols = [dens.grid.nodes, dens.psi2, dens.ke, dens.c, dens.pe, dens.e_field]
    if units == "lab":
        header += ["r_m", "KE_ev", "C_ev", "PE_ev", "E_ev"]
        cols += [bohr_to_meters(dens.grid.nodes)] + [hartree_to_ev(c) for c in cols[2:6]]
    return header, zip(*cols)


def momentum_rows(amp, units="au"):
    p = np.concatenate([[0.0], amp.p])
    a = np.concatenate([[amp.origin_value], amp.values])
    header = ["p", "a", "a_sq_times_4pi_p2"]
    return header, zip(p, np.real(a), np.abs(a) ** 2 * 4.0 * np.pi * p**2)


def snapshot_rows(run):
    header = ["t", "node", "re_psi", "im_psi"]

    def gen():
        for t, psi in zip(run.times, run.snapshots):
            for i, v in enumerate(psi):
                yield t, i, v.real, v.imag

    return header, gen()


def ledger_rows(run, units="au"):
    header = ["t", "norm", "KE", "PE", "E"]
    cols = [run.table(c) for c in ("t", "norm", "KE", "PE", "E")]
    if units == "lab":
        header += ["KE_ev", "PE_ev", "E_ev"]
        cols += [hartree_to_ev(c) for c in cols[2:]]
    return header, zip(*cols)


def scattering_rows(results):
    """``results`` is an iterable of :class:`schrodlab.born.ScatteringResult`."""
    header = ["theta_deg", "q", "f", "dcs"]
    rows = [
        (math.degrees(r.transfer.theta), r.transfer.q, r.amplitude, r.dcs) for r in results
    ]
    return header, rows


def emit_field_csv(fields, path, units="au"):
    """Write energy densities, a momentum amplitude or run snapshots as CSV."""
    if isinstance(fields, EnergyDensities):
        header, rows = energetics_rows(fields, units)
    elif isinstance(fields, MomentumAmplitude):
        header, rows = momentum_rows(fields, units)
    elif isinstance(fields, PropagationRun):
        if not fields.snapshots:
            raise ValueError("run has no snapshots to write")
        header, rows = snapshot_rows(fields)
    else:
        raise TypeError(f"no CSV layout for {type(fields).__name__}")
    return write_csv(path, header, rows)


def read_csv(path):
    """Read one of this module's CSV files into a dict of float columns."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return {name: data[:, i] for i, name in enumerate(header)}
