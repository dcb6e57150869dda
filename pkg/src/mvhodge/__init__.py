"""Exact generating series for Hurwitz numbers and Hodge integrals."""
