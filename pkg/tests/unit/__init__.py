"""Unit tests for gradedargs."""
