"""Integration tests for gradedargs."""
