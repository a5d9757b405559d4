"""Exact arithmetic for binary codes of nodal curves on surfaces.

Subpackages
-----------
gf2       binary linear codes as bitmask ints, canonical forms, enumeration
lattices  integral lattices from codes, root systems, discriminants
covers    numerical invariants of iterated double covers and node bounds
classify  involution and fibration case analysis built on the above
cli       JSON-report command line front end
"""

from . import classify, covers, gf2, lattices

__version__ = "0.1.0"

__all__ = ["gf2", "lattices", "covers", "classify", "__version__"]
