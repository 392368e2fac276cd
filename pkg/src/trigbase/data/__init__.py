"""Data shipped with trigbase."""
