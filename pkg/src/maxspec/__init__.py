"""Executable order theory for maximal spectra, Wallman bases and coverages on finite instances."""
__version__ = "0.1.0"
