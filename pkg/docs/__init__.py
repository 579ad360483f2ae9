"""Sphinx documentation tree (not an importable application package)."""
