"""
QHA-Doubles — Verify quasi-Hopf algebras, quantum doubles, twisted doubles and monodromy.

Pipeline: spec file (fixtures/) → structure constants → checks → JSON-lines report (stdout).
Tolerances, gates and paths live in settings_user.toml; --tol, --seed and
--force-deep-checks override them for one run.

Usage:
    python QHA-Doubles.py verify cz2
    python QHA-Doubles.py double cs3 --export
    python QHA-Doubles.py twisted-double z2_group z2_omega_nontrivial
    python QHA-Doubles.py monodromy cz2
    python QHA-Doubles.py export double:cz2 --format sc-json
"""
from bootstrap.primary_imports import sys
from bootstrap.dependencies import run_runtime_checks

# --- Bootstrap: fail fast if numpy (or tomli) is missing ---
run_runtime_checks()

# --- Configuration and commands (edit settings_user.toml) ---
from cli_io import run

# %%  --- Main execution ---

if __name__ == "__main__":
    # --- Step 1: Parse arguments, run the command, emit the report ---
    code = run(sys.argv[1:])

    # --- Step 2: Exit with 0 (all checks pass), 1 (a check failed) or 2 (bad input) ---
    sys.exit(code)
