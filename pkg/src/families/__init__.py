"""Generators for the parameterized region and graph families."""
