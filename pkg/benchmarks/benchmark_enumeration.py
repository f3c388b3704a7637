"""Benchmark script comparing the labelling search with brute force.

Run with: uv run python benchmarks/benchmark_enumeration.py
Larger graphs: uv run python benchmarks/benchmark_enumeration.py --arguments 6 --resolution 4
Worker pool: uv run python benchmarks/benchmark_enumeration.py --workers 4

Times, per semantics, over one seeded corpus of random graphs:
- enumerate_labellings (backtracking search, optionally over a process pool)
- brute_force (filters every assignment through the semantics predicate)

Both must return the same Σ; a mismatch is reported and the script exits 1.
"""

import argparse
import platform
import random
import statistics
import string
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from gradedargs import (
    LabellingSet,
    SemanticsChoice,
    WeightedGraph,
    __version__,
    brute_force,
    build_graph,
    enumerate_labellings,
)

# Number of timed runs per method
RUNS = 5
# Number of warmup runs (discarded)
WARMUP = 1

SEED = 20_240_917
WEIGHTS = tuple(step / 4 for step in range(-8, 9) if step != 0)
SEMANTICS = {
    "coherent": SemanticsChoice.coherent(),
    "faithful": SemanticsChoice.faithful(),
    "phi": SemanticsChoice.phi_coherent(),
}


@dataclass
class BenchmarkResult:
    """Timing samples of one method under one semantics."""

    method: str
    semantics: str
    times: list[int] = field(default_factory=list)
    labellings: int = 0

    def _filtered_times(self) -> list[int]:
        """Timed samples with outliers beyond 2 standard deviations discarded."""
        if len(self.times) <= 1:
            return list(self.times)
        mean = statistics.mean(self.times)
        stdev = statistics.stdev(self.times)
        if stdev == 0:
            return list(self.times)
        return [t for t in self.times if abs(t - mean) <= 2 * stdev] or list(self.times)

    @property
    def mean(self) -> float:
        """Mean execution time in nanoseconds, with outliers discarded."""
        filtered = self._filtered_times()
        return statistics.mean(filtered) if filtered else 0.0

    @property
    def std(self) -> float:
        """Standard deviation in nanoseconds, with outliers discarded."""
        filtered = self._filtered_times()
        return statistics.stdev(filtered) if len(filtered) > 1 else 0.0


def random_corpus(size: int, arguments: int, edges: int) -> list[WeightedGraph]:
    """Return ``size`` seeded random graphs with exactly ``arguments`` arguments."""
    rng = random.Random(SEED)
    names = list(string.ascii_uppercase[:arguments])
    pairs = [(source, target) for source in names for target in names]
    return [
        build_graph(names, [(s, t, rng.choice(WEIGHTS)) for s, t in rng.sample(pairs, min(edges, len(pairs)))])
        for _ in range(size)
    ]


def run_benchmark(
    method: str,
    semantics: str,
    enumerate_all: Callable[[], list[LabellingSet]],
    runs: int = RUNS,
    warmup: int = WARMUP,
) -> tuple[BenchmarkResult, list[LabellingSet]]:
    """Time ``enumerate_all`` and return the result of the last run."""
    for _ in range(warmup):
        enumerate_all()
    result = BenchmarkResult(method, semantics)
    found: list[LabellingSet] = []
    for _ in range(runs):
        start = time.perf_counter_ns()
        found = enumerate_all()
        result.times.append(time.perf_counter_ns() - start)
    result.labellings = sum(len(sigma) for sigma in found)
    return result, found


def format_time(ns: float) -> str:
    """Format time in appropriate units from nanoseconds."""
    if ns < 1_000:
        return f"{ns:.0f}ns"
    if ns < 1_000_000:
        return f"{ns / 1_000:.0f}µs"
    if ns < 1_000_000_000:
        return f"{ns / 1_000_000:.0f}ms"
    return f"{ns / 1_000_000_000:.2f}s"


def print_summary(results: list[BenchmarkResult], args: argparse.Namespace) -> None:
    """Print a results table."""
    print("\n" + "=" * 72)
    print(
        f"gradedargs {__version__} on {platform.python_implementation()} {platform.python_version()}, "
        f"{args.graphs} graphs, {args.arguments} arguments, {args.edges} edges, n={args.resolution}"
    )
    print("=" * 72)
    print(f"{'Semantics':<12}{'Method':<14}{'Mean':>12}{'Std':>12}{'|Σ| total':>14}")
    print("-" * 72)
    for result in results:
        print(
            f"{result.semantics:<12}{result.method:<14}{format_time(result.mean):>12}"
            f"{format_time(result.std):>12}{result.labellings:>14}"
        )


def main() -> None:
    """Run all benchmarks and print results."""
    parser = argparse.ArgumentParser(description="Benchmark labelling enumeration")
    parser.add_argument("--graphs", type=int, default=50, help="Corpus size.")
    parser.add_argument("--arguments", type=int, default=4, help="Arguments per graph.")
    parser.add_argument("--edges", type=int, default=6, help="Edges per graph.")
    parser.add_argument("--resolution", type=int, default=3, help="Resolution n of C_n.")
    parser.add_argument("--workers", type=int, default=1, help="Processes for the search.")
    parser.add_argument("--runs", type=int, default=RUNS, help="Timed runs per method.")
    args = parser.parse_args()

    graphs = random_corpus(args.graphs, args.arguments, args.edges)
    results: list[BenchmarkResult] = []
    mismatched = False
    for label, semantics in SEMANTICS.items():
        print(f"Benchmarking {label}...", flush=True)
        searched, by_search = run_benchmark(
            "search",
            label,
            lambda s=semantics: [
                enumerate_labellings(g, args.resolution, s, workers=args.workers) for g in graphs
            ],
            runs=args.runs,
        )
        filtered, by_filter = run_benchmark(
            "brute force",
            label,
            lambda s=semantics: [brute_force(g, args.resolution, s) for g in graphs],
            runs=args.runs,
        )
        results.extend((searched, filtered))
        if [sigma.labellings for sigma in by_search] != [sigma.labellings for sigma in by_filter]:
            print(f"✗ {label}: search and brute force disagree")
            mismatched = True

    print_summary(results, args)
    if mismatched:
        sys.exit(1)


if __name__ == "__main__":
    main()
