"""Text helpers for report details and diagnostics.

Key functions: format_scalar
"""


def format_scalar(z):
    """Short human-readable rendering of a complex coefficient."""
    z = complex(z)
    if abs(z.imag) < 1e-12:
        return f"{z.real:.12g}"
    if abs(z.real) < 1e-12:
        return f"{z.imag:.12g}i"
    return f"{z.real:.12g}{z.imag:+.12g}i"
