"""Benchmark scripts for gradedargs."""
