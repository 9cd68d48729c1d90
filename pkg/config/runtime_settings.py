"""Runtime settings: tolerances, dimension gates, seeds, and paths.

All user-editable settings are loaded from settings_user.toml in the project root.
Key globals: VERDICT_TOL, PRUNE_THRESHOLD, SINGULAR_THRESHOLD, ROUNDTRIP_TOL,
UNIT_FASTPATH_TOL, PHI1_MAX_DIM, DOUBLE_PENTAGON_MAX_DIM, SECOND_LEVEL_MAX_DIM,
FORCE_DEEP_CHECKS, SEED, TWIST_SAMPLES, SPOT_CHECK_PAIRS, TWIST_SCALE,
FIXTURES_DIR, OUTPUT_DIR, EMIT_PASSING, VERBOSE
Key functions: override, deep_checks_allowed
"""
from bootstrap.primary_imports import os

# Resolved relative to this config module so it works regardless of cwd.
_SCRIPT_DIR = os.path.dirname(os.path.abspath(__file__))
_PROJECT_ROOT = os.path.dirname(_SCRIPT_DIR)  # config -> project root

# TOML parser: use built-in tomllib (Python 3.11+) or tomli for older Python
try:
    import tomllib
except ImportError:
    try:
        import tomli as tomllib
    except ImportError:
        tomllib = None


def _resolve_path(path_str, base):
    """Resolve path: if relative, join with base; if absolute, use as-is."""
    if not path_str or not isinstance(path_str, str):
        return None
    path_str = path_str.strip()
    if os.path.isabs(path_str):
        return path_str
    return os.path.join(base, path_str)


def _positive_float(section, key, value):
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"Invalid {section}.{key}: '{value}'. Must be a number.") from None
    if v <= 0:
        raise ValueError(f"Invalid {section}.{key}: {v}. Must be greater than zero.")
    return v


def _positive_int(section, key, value):
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise ValueError(f"Invalid {section}.{key}: '{value}'. Must be a positive integer.")
    return value


def _load_user_settings():
    """Load and validate settings from settings_user.toml. Returns merged config dict."""
    defaults = _get_default_settings()

    settings_path = os.path.join(_PROJECT_ROOT, "settings_user.toml")
    if not os.path.isfile(settings_path):
        return defaults

    if tomllib is None:
        raise ImportError(
            "Cannot load settings_user.toml: no TOML parser available. "
            "Use Python 3.11+ or install: pip install tomli"
        )

    try:
        with open(settings_path, "rb") as f:
            raw = tomllib.load(f)
    except Exception as e:
        raise ValueError(
            f"Error reading settings_user.toml: {e}\n"
            f"Check the file for syntax errors (e.g. missing quotes, wrong brackets)."
        ) from e

    tolerances = raw.get("tolerances") or {}
    if isinstance(tolerances, dict):
        for k in defaults["tolerances"]:
            if tolerances.get(k) is not None:
                defaults["tolerances"][k] = _positive_float("tolerances", k, tolerances[k])
    if defaults["tolerances"]["prune_threshold"] >= defaults["tolerances"]["verdict_tol"]:
        raise ValueError(
            "Invalid tolerances: prune_threshold must be much smaller than verdict_tol "
            f"(got {defaults['tolerances']['prune_threshold']} >= {defaults['tolerances']['verdict_tol']})."
        )

    gates = raw.get("gates") or {}
    if isinstance(gates, dict):
        for k in ("phi1_max_dim", "double_pentagon_max_dim", "second_level_max_dim"):
            if gates.get(k) is not None:
                defaults["gates"][k] = _positive_int("gates", k, gates[k])
        if gates.get("force_deep_checks") is not None:
            defaults["gates"]["force_deep_checks"] = bool(gates["force_deep_checks"])

    rnd = raw.get("random") or {}
    if isinstance(rnd, dict):
        if rnd.get("seed") is not None:
            if isinstance(rnd["seed"], bool) or not isinstance(rnd["seed"], int) or rnd["seed"] < 0:
                raise ValueError(f"Invalid random.seed: '{rnd['seed']}'. Must be a non-negative integer.")
            defaults["random"]["seed"] = rnd["seed"]
        for k in ("twist_samples", "spot_check_pairs"):
            if rnd.get(k) is not None:
                defaults["random"][k] = _positive_int("random", k, rnd[k])
        if rnd.get("twist_scale") is not None:
            defaults["random"]["twist_scale"] = _positive_float("random", "twist_scale", rnd["twist_scale"])

    paths = raw.get("paths") or {}
    if isinstance(paths, dict):
        for k, v in paths.items():
            if v is not None:
                defaults["paths"][k] = str(v)

    output = raw.get("output") or {}
    if isinstance(output, dict):
        for flag_key in ("emit_passing", "verbose"):
            if output.get(flag_key) is not None:
                defaults["output"][flag_key] = bool(output[flag_key])

    return defaults


def _get_default_settings():
    """Return default settings."""
    return {
        "tolerances": {
            "verdict_tol": 1e-9,
            "prune_threshold": 1e-14,
            "singular_threshold": 1e-10,
            "roundtrip_tol": 1e-12,
            "unit_fastpath_tol": 1e-13,
        },
        "gates": {
            "phi1_max_dim": 8,
            "double_pentagon_max_dim": 6,
            "second_level_max_dim": 4,
            "force_deep_checks": False,
        },
        "random": {
            "seed": 20240611,
            "twist_samples": 10,
            "spot_check_pairs": 50,
            "twist_scale": 0.5,
        },
        "paths": {
            "fixtures_dir": "fixtures",
            "output_dir": "_qha_outputs",
        },
        "output": {
            "emit_passing": True,
            "verbose": False,
        },
    }


def _apply_settings(cfg):
    """Apply merged config to module globals."""
    tol = cfg["tolerances"]
    gates = cfg["gates"]
    rnd = cfg["random"]
    paths = cfg["paths"]
    output = cfg["output"]

    fixtures_dir = _resolve_path(paths.get("fixtures_dir"), _PROJECT_ROOT) or os.path.join(_PROJECT_ROOT, "fixtures")
    output_dir = _resolve_path(paths.get("output_dir"), _PROJECT_ROOT) or os.path.join(_PROJECT_ROOT, "_qha_outputs")

    g = globals()
    g["VERDICT_TOL"] = tol["verdict_tol"]
    g["PRUNE_THRESHOLD"] = tol["prune_threshold"]
    g["SINGULAR_THRESHOLD"] = tol["singular_threshold"]
    g["ROUNDTRIP_TOL"] = tol["roundtrip_tol"]
    g["UNIT_FASTPATH_TOL"] = tol["unit_fastpath_tol"]
    g["PHI1_MAX_DIM"] = gates["phi1_max_dim"]
    g["DOUBLE_PENTAGON_MAX_DIM"] = gates["double_pentagon_max_dim"]
    g["SECOND_LEVEL_MAX_DIM"] = gates["second_level_max_dim"]
    g["FORCE_DEEP_CHECKS"] = gates["force_deep_checks"]
    g["SEED"] = rnd["seed"]
    g["TWIST_SAMPLES"] = rnd["twist_samples"]
    g["SPOT_CHECK_PAIRS"] = rnd["spot_check_pairs"]
    g["TWIST_SCALE"] = rnd["twist_scale"]
    g["FIXTURES_DIR"] = fixtures_dir
    g["OUTPUT_DIR"] = output_dir
    g["EMIT_PASSING"] = output["emit_passing"]
    g["VERBOSE"] = output["verbose"]


def override(tol=None, seed=None, force_deep_checks=None):
    """Apply command-line overrides on top of the loaded settings."""
    g = globals()
    if tol is not None:
        g["VERDICT_TOL"] = _positive_float("cli", "tol", tol)
    if seed is not None:
        g["SEED"] = int(seed)
    if force_deep_checks:
        g["FORCE_DEEP_CHECKS"] = True


def deep_checks_allowed(dim, limit):
    """True when a gated check should run for an algebra of this dimension."""
    return FORCE_DEEP_CHECKS or dim <= limit


# Load settings on import (single source of truth: settings_user.toml)
_cfg = _load_user_settings()
_apply_settings(_cfg)


if __name__ == "__main__":
    # Self-check: print effective settings
    print("Runtime settings self-check")
    print(f"  verdict_tol:        {VERDICT_TOL}")
    print(f"  prune_threshold:    {PRUNE_THRESHOLD}")
    print(f"  singular_threshold: {SINGULAR_THRESHOLD}")
    print(f"  roundtrip_tol:      {ROUNDTRIP_TOL}")
    print(f"  gates:              phi1<={PHI1_MAX_DIM}, pentagon<={DOUBLE_PENTAGON_MAX_DIM}, "
          f"second-level<={SECOND_LEVEL_MAX_DIM}, force={FORCE_DEEP_CHECKS}")
    print(f"  seed:               {SEED}")
    print(f"  fixtures_dir:       {FIXTURES_DIR}")
    print(f"  output_dir:         {OUTPUT_DIR}")
