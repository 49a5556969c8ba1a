"""Config loading and artifact writers.

All numbers crossing this boundary are in meV, nm, K, cm^-2 and degrees.
Writers are deterministic: fixed column order, fixed float format, no
timestamps.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from . import __version__
from .wellbands import ALINAS_OFFSET_MEV, GAINAS_EPS, GAINAS_MASS, WellProfile

WELL_DEFAULTS = {
    "barrier_meV": ALINAS_OFFSET_MEV,
    "eff_mass": GAINAS_MASS,
    "eps_s": GAINAS_EPS,
    "grid_points": 1024,
    "barrier_pad_nm": 20.0,
    "T_K": 0.0,
    "n_states": 40,
    "gamma_meV": 10.0,
}

FLOAT_FMT = "{:.12g}"


class ConfigError(ValueError):
    """Malformed or schema-violating configuration."""


def well_schema() -> dict:
    text = resources.files("plasmonio").joinpath("data/well_config.schema.json").read_text()
    return json.loads(text)


def parse_well_config(text: str, source: str = "<config>") -> dict:
    """Validate a JSON well document and fill in defaults."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    validator = jsonschema.Draft202012Validator(well_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = "/".join(str(x) for x in err.absolute_path) or "(root)"
        raise ConfigError(f"{source}: field {where}: {err.message}")
    return {**WELL_DEFAULTS, **doc}


def load_well_config(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    return parse_well_config(text, str(path))


def profile_from_config(cfg: dict) -> WellProfile:
    return WellProfile.square_well(
        cfg["well_nm"], cfg["barrier_meV"], cfg["eff_mass"], cfg["eps_s"], cfg["Ns_cm2"],
        grid_points=cfg["grid_points"], barrier_pad_nm=cfg["barrier_pad_nm"],
        temperature=cfg["T_K"])


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return FLOAT_FMT.format(float(v))


def _header(params: dict) -> list[str]:
    lines = [f"# plasmonio {__version__}"]
    for key in sorted(params):
        lines.append(f"# {key} = {params[key]}")
    return lines


def format_csv(columns: list[str], rows, params: dict) -> str:
    """CSV text with a comment header of the resolved parameters."""
    out = _header(params)
    out.append(",".join(columns))
    for row in rows:
        out.append(",".join(_fmt(v) for v in row))
    return "\n".join(out) + "\n"


def format_json(columns: list[str], rows, params: dict) -> str:
    doc = {
        "tool": f"plasmonio {__version__}",
        "parameters": {k: params[k] for k in sorted(params)},
        "columns": columns,
        "rows": [[float(v) if not isinstance(v, (int, np.integer)) else int(v) for v in row]
                 for row in rows],
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def columns_to_rows(*cols):
    return list(zip(*cols))


def write_table(path, columns, rows, params, fmt: str = "csv") -> Path:
    path = Path(path).with_suffix("." + fmt)
    text = format_csv(columns, rows, params) if fmt == "csv" else format_json(columns, rows, params)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
    return path


def write_svg(path, draw) -> Path:
    """Render ``draw(ax)`` into a reproducible SVG file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path).with_suffix(".svg")
    with matplotlib.rc_context({"svg.hashsalt": "plasmonio", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        draw(ax)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
