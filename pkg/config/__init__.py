"""Configuration: tolerances, dimension gates, random seeds and paths."""
