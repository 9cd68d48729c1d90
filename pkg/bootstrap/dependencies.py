"""Dependency checks for the numeric stack.

Key functions: ensure_module, run_runtime_checks
"""
from .primary_imports import importlib, subprocess, sys


def ensure_module(module_name, package_name=None):
    """Check if a module is installed; install it via pip if not. Returns True if available."""
    if package_name is None:
        package_name = module_name

    try:
        importlib.import_module(module_name)
        return True
    except ImportError:
        print(f"Module {module_name} not found. Installing {package_name}...", file=sys.stderr)
        try:
            subprocess.check_call([sys.executable, "-m", "pip", "install", package_name])
            print(f"Successfully installed {package_name}.", file=sys.stderr)
            try:
                importlib.import_module(module_name)
                return True
            except ImportError:
                print(f"ERROR: Module {module_name} still not available after installation.", file=sys.stderr)
                return False
        except subprocess.CalledProcessError:
            print(f"ERROR: Failed to install {package_name}.", file=sys.stderr)
            return False


def run_runtime_checks():
    """Verify numpy (and tomli on Python < 3.11) are available. Exit with status 2 if not."""
    checks = [ensure_module("numpy")]
    if sys.version_info < (3, 11):
        checks.append(ensure_module("tomli"))

    if not all(checks):
        print("ERROR: Not all required modules could be installed. Please install them manually.", file=sys.stderr)
        print("Required packages: numpy (and tomli on Python < 3.11)", file=sys.stderr)
        sys.exit(2)
