"""Shared contracts and policies used across engines and the CLI."""
