"""Graph, query and distribution fixtures, plus the seeded random corpus."""
