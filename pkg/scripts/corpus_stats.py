"""Tabulate predicate counts over the lattice and space corpora.

Useful as a sanity check that the sweeps are not vacuous: how many corpus
lattices are conjunctive, normal, co-atomistic, and how many spaces are Wallman objects.
"""
import argparse
import json
from collections import Counter
from dataclasses import dataclass

from maxspec import duality, topology, wallman
from maxspec.theorems import lattice_corpus, space_corpus


@dataclass(frozen=True)
class StatsConfig:
    max_size: int = 8
    max_points: int = 4


def lattice_stats(cfg: StatsConfig) -> dict:
    counts: Counter = Counter()
    by_size: Counter = Counter()
    for c in lattice_corpus(cfg.max_size):
        D = c.lattice
        by_size[len(D)] += 1
        counts["total"] += 1
        counts["conjunctive"] += wallman.is_conjunctive(D)
        counts["normal"] += wallman.is_normal(D)
        counts["coatomistic"] += wallman.is_coatomistic(D)
        counts["completely_regular"] += wallman.is_completely_regular(D)
        counts["alexandrov"] += wallman.is_alexandrov_algebra(D)
    return {"counts": dict(counts), "by_size": dict(sorted(by_size.items()))}


def space_stats(cfg: StatsConfig) -> dict:
    counts: Counter = Counter()
    for X in space_corpus(cfg.max_points):
        counts["total"] += 1
        counts["T0"] += topology.is_T0(X)
        counts["T1"] += topology.is_T1(X)
        counts["wallman_object"] += duality.in_TopDLatW(duality.TopDLatObject(X, X.open_lattice))
    return dict(counts)


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description="corpus predicate counts")
    p.add_argument("--max-size", type=int, default=StatsConfig.max_size)
    p.add_argument("--max-points", type=int, default=StatsConfig.max_points)
    a = p.parse_args(argv)
    cfg = StatsConfig(a.max_size, a.max_points)
    print(json.dumps({"lattices": lattice_stats(cfg), "spaces": space_stats(cfg)}, indent=2))


if __name__ == "__main__":
    main()
