"""Primary imports: standard library modules shared across packages.

Loaded before runtime checks. Use delayed_imports for numpy (checked by
run_runtime_checks).
"""
# ruff: noqa: F401 - re-exports for other modules
import os
import sys
import json
import math
import cmath
import itertools
import importlib
import subprocess
import argparse
import random
