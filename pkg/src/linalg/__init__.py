"""Exact linear algebra over prime fields."""
