"""Runtime caches for algebra structure data and built constructions.

Key globals: algebra_registry, unit_tensor_cache, double_cache, spec_file_cache
"""
# Structure constants of every algebra a tensor leg can live in
# Keys: space_id strings, Values: tensor_core.algebra.AlgebraData
algebra_registry = {}

# Unit elements of product algebras, built on first use
# Keys: SpaceSignature, Values: Tensor
unit_tensor_cache = {}

# Quantum doubles already assembled in this process
# Keys: (algebra name, space_id), Values: (double_construction.DoubleAlgebra, build report)
double_cache = {}

# Input files already loaded and validated
# Keys: absolute file paths, Values: FiniteGroup, ThreeCocycle, quasi-Hopf algebras or StructureFile
spec_file_cache = {}


def clear_caches():
    """Empty every cache (tests use this between independent builds)."""
    unit_tensor_cache.clear()
    double_cache.clear()
    spec_file_cache.clear()
