"""Exact linear algebra kernel."""
