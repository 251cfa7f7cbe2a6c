"""Exact point counting and zeta functions for weighted projective spaces."""
