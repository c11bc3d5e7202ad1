"""Exact-arithmetic engine for geometric construction tools and maps."""

from .realalg import RealAlg, IntPoly, sqrt, cbrt, real_roots, minimal_degree

__version__ = "0.1.0"

__all__ = ["RealAlg", "IntPoly", "sqrt", "cbrt", "real_roots", "minimal_degree", "__version__"]
