"""Weighted enumeration and local substitution moves."""
