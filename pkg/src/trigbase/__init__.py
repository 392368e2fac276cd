"""Exact trigonometric base changes, Chebyshev and spread polynomials."""

try:
    from importlib.metadata import version
    __version__ = version("trigbase")
except Exception:
    __version__ = "0.0.0"
