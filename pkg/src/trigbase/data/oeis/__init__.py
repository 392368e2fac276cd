"""Bundled OEIS b-files used as offline fixtures."""
