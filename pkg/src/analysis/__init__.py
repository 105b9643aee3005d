"""Exploratory instruments over exact counts."""
