"""Workbench for braid subgroups, Hurwitz stabilizers and bifurcation braid monodromy.

The package has three legs that cross-check each other:

* exact braid algebra (``braid``) with Garside normal forms, plus the
  Hurwitz action machinery (``hurwitz``, ``groups``) and the catalog of
  braid subgroups it stabilizes (``catalog``),
* exact polynomial elimination (``polynomials``): resultants,
  discriminants and the squared/cubed-factor splitting of Weierstrass
  coefficient data,
* a numerical root tracker (``families``, ``tracker``) that extracts
  braid words from closed loops in the parameter space of explicit
  cubic-in-y plane-curve families and compares them with the catalog.
"""

__version__ = "0.1.0"

from .braid import BraidWord, NormalForm, band_generator, compose, equal, normal_form

__all__ = [
    "BraidWord",
    "NormalForm",
    "band_generator",
    "compose",
    "equal",
    "normal_form",
    "__version__",
]
