"""Bootstrap: dependency checks and staged imports.

Execution order: primary_imports -> run_runtime_checks -> delayed_imports
"""
