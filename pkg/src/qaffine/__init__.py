"""Exact construction and verification of quantum-affine R-matrices and
q-oscillator L-operators over Q(t) with q = t^6."""

__version__ = "0.1.0"
