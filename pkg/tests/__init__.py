"""Tests for the gradedargs package."""
