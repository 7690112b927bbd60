"""Exact secondary elements of Pythagorean triangles.

Thin wrapper over the compiled ``_ptri`` extension module: exact triple
generation, the seventeen secondary elements, the five rational-bisector
families, quartic square searches, and the claim verifier.
"""

try:
    from ptri._ptri import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - build-tree layout
    from _ptri import *  # noqa: F401,F403
