"""Verification workbench for Bessel-operator models of minimal representations
on Jordan-algebra orbits."""

__version__ = "0.1.0"
