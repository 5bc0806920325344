#!/usr/bin/env python3
"""Bounded search over random rank-2 tensors: which quiddity cycles show up.

Exploratory harness for the question whether every finite rank-2 Weyl
groupoid arises from some tensor; this samples aggregate profiles over
a range of moduli and degrees, generates the reflection closure where it
exists, and tabulates the realized quiddity cycles up to rotation and
reflection.  Output is a report, not an assertion.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from weylg.errors import (
    AxiomViolation,
    NotAQuiddityCycle,
    ObjectLimitExceeded,
    UndefinedCartanEntry,
)
from weylg.groupoid import generate_cartan_graph
from weylg.lattice import SqrtBraidingTensor
from weylg.rank2 import quiddity_cycle, triangulate


@dataclass
class SearchConfig:
    samples: int = 2000
    moduli: tuple = (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 22)
    degrees: tuple = (2, 4, 6)
    m_max: int = 60
    max_objects: int = 400
    seed: int = 0


def canonical_cycle(entries):
    """Representative of the cycle class up to rotation and reflection."""
    best = None
    for seq in (entries, entries[::-1]):
        for shift in range(len(seq)):
            rotated = seq[shift:] + seq[:shift]
            if best is None or rotated < best:
                best = rotated
    return best


def search(config: SearchConfig):
    rng = random.Random(config.seed)
    realized = Counter()
    outcomes = Counter()
    for _ in range(config.samples):
        modulus = rng.choice(config.moduli)
        degree = rng.choice(config.degrees)
        profile = [rng.randrange(modulus) for _ in range(degree + 1)]
        tensor = SqrtBraidingTensor.from_rank2_profile(modulus, degree, profile)
        try:
            graph = generate_cartan_graph(
                tensor, config.m_max, config.max_objects
            )
            cycle = quiddity_cycle(graph)
            triangulate(cycle)
        except UndefinedCartanEntry:
            outcomes["undefined entry"] += 1
            continue
        except ObjectLimitExceeded:
            outcomes["orbit too large"] += 1
            continue
        except AxiomViolation:
            outcomes["axiom violation"] += 1
            continue
        except NotAQuiddityCycle:
            outcomes["no triangulation (affine/hyperbolic)"] += 1
            continue
        outcomes["finite type"] += 1
        realized[canonical_cycle(cycle.entries)] += 1
    return realized, outcomes


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--degrees", default="2,4,6")
    args = parser.parse_args()
    config = SearchConfig(
        samples=args.samples,
        seed=args.seed,
        degrees=tuple(int(d) for d in args.degrees.split(",")),
    )
    realized, outcomes = search(config)
    print(f"samples: {config.samples} (seed {config.seed}, degrees "
          f"{config.degrees})")
    for outcome, count in sorted(outcomes.items()):
        print(f"  {outcome}: {count}")
    print(f"distinct quiddity cycles realized: {len(realized)}")
    for cycle, count in sorted(realized.items(), key=lambda kv: (len(kv[0]), kv[0])):
        print(f"  N={len(cycle):2d}  {cycle}  ({count} hits)")


if __name__ == "__main__":
    main()
