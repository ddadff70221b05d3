"""Approximation in finite quantale-enriched categories."""
