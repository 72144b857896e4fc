"""Symmetric pseudorandomness measures for binary sequences."""
