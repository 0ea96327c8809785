"""Unit tests for the toolkit services."""
