"""Counting engines: Kasteleyn determinant, Pfaffian, permanent and brute force."""
