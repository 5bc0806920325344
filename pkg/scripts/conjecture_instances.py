#!/usr/bin/env python3
"""Instance checks of the inclusion-exclusion identity for symmetrized
cycles over small finite groups.

For each composition and argument choice within the enumeration bounds,
the alternating combination over subproducts in one slot is tested for
boundary membership by exact integer normal forms, together with the
inverse-argument identity.  Output is a report of holds / fails /
out-of-bounds; nothing is asserted.
"""

import argparse
import itertools
import random

from weylg.groups import AbGroup, parse_group
from weylg.homology import check_conjecture_instance


def compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def run(groups, max_d, cases_per_shape, seed):
    rng = random.Random(seed)
    rows = []
    for group_name in groups:
        group = parse_group(group_name)
        elements = [g for g in group.elements()]
        for d in range(1, max_d + 1):
            for lam in compositions(d):
                for slot in range(len(lam)):
                    for _ in range(cases_per_shape):
                        args = tuple(rng.choice(elements) for _ in lam)
                        betas = tuple(
                            rng.choice(elements) for _ in range(lam[slot] + 1)
                        )
                        inst = check_conjecture_instance(
                            group, lam, slot, args, betas
                        )
                        rows.append((group_name, lam, slot, inst))
    return rows


def cocycle_probe(rank, degree, modulus, trials, seed):
    """Exploratory: is the zero-extended diagonal cochain a cocycle?

    Evaluates the cochain (extended by exponent zero on non-pure cells)
    on boundaries of random level-1 cells of degree 2d.  Reports the
    counts only; no invariant is asserted anywhere.
    """
    from weylg.cells import boundary, random_cell
    from weylg.cycles import DiagonalCochain

    rng = random.Random(seed)
    tensor_entries = {}
    for idx in itertools.product(range(1, rank + 1), repeat=degree):
        tensor_entries[idx] = rng.randrange(modulus)
    from weylg.lattice import SqrtBraidingTensor

    tensor = SqrtBraidingTensor.from_entries(
        modulus, rank, degree, tensor_entries
    )
    cochain = DiagonalCochain(tensor)
    group = AbGroup(rank)
    zero = nonzero = 0
    for _ in range(trials):
        cell = random_cell(rng, group, 1, 2 * degree)
        value = cochain.eval_chain_zero_extended(boundary(cell))
        if value == 0:
            zero += 1
        else:
            nonzero += 1
    return zero, nonzero


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--groups", default="Z/2,Z/3")
    parser.add_argument("--max-d", type=int, default=3)
    parser.add_argument("--cases", type=int, default=2,
                        help="random argument choices per shape")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cocycle-probe", action="store_true",
                        help="also probe the zero-extended cochain on "
                        "random boundaries (report only)")
    args = parser.parse_args()
    rows = run(args.groups.split(","), args.max_d, args.cases, args.seed)
    tally = {"holds": 0, "fails": 0, "out-of-bounds": 0}
    for group_name, lam, slot, inst in rows:
        tally[inst.status] = tally.get(inst.status, 0) + 1
        marker = "" if inst.status == "holds" else "  <--"
        print(
            f"{group_name:6s} lambda={lam} slot={slot} "
            f"identity={inst.status:12s} inverse={inst.inverse_status}{marker}"
        )
    print(f"\nsummary: {tally}")
    if args.cocycle_probe:
        for d in (2, 3):
            zero, nonzero = cocycle_probe(2, d, 12, 60, args.seed)
            print(
                f"cocycle probe d={d}: theta(boundary) = 0 on {zero} of "
                f"{zero + nonzero} random cells (zero-extension, report only)"
            )


if __name__ == "__main__":
    main()
