#!/usr/bin/env python3
"""Recompute the two degree-4 rank-2 examples and the rank-3 example
end to end: diagnostics tables, Cartan matrices, orbits, quiddity
cycles, friezes, and triangulations."""

import argparse

from weylg.cli import mu_str
from weylg.fixtures import load_example
from weylg.groupoid import (
    dynkin_diagram,
    generate_cartan_graph,
    reflect,
    validate_axioms,
)
from weylg.rank2 import quiddity_cycle, render_frieze, triangulate
from weylg.roots import real_roots, validate_root_axioms
from weylg.rosso import cartan_matrix, rosso_diagnostics


def print_table(tensor, l, j, m_range, title):
    print(f"  {title} (pair {l},{j}):")
    print("    m | chi(v) | chi(w) | chi(s)")
    for row in rosso_diagnostics(tensor, l, j, m_range):
        M = tensor.modulus
        print(
            f"    {row.m} | {mu_str(row.chi_v, M)} | "
            f"{mu_str(row.chi_w, M)} | {mu_str(row.chi_s, M)}"
        )


def rank2_example(name):
    tensor = load_example(name)
    print(f"== {name}: modulus {tensor.modulus}, degree {tensor.degree}")
    print_table(tensor, 1, 2, range(4), "initial diagnostics")
    cartan = cartan_matrix(tensor)
    print(f"  cartan matrix: {cartan.rows}")
    image = reflect(tensor, 1, cartan.row(1))
    print_table(image, 2, 1, range(2), "after reflecting at 1")
    graph = generate_cartan_graph(tensor)
    print(f"  orbit objects: {len(graph)}; axioms: "
          f"{'pass' if validate_axioms(graph).ok else 'FAIL'}")
    cycle = quiddity_cycle(graph)
    print(f"  quiddity cycle: {cycle.entries}  (sum {cycle.total()} = "
          f"3*{len(cycle)}-6)")
    tri = triangulate(cycle)
    print(f"  triangulation diagonals: {tri.diagonals}")
    roots = real_roots(graph)
    ok = validate_root_axioms(graph, roots).ok
    counts = sorted({len(r.positive()) for r in roots.values()})
    print(f"  positive roots per object: {counts}; root axioms: "
          f"{'pass' if ok else 'FAIL'}")
    print("  frieze of the quiddity cycle:")
    for line in render_frieze(cycle).splitlines():
        print("    " + line)
    print()


def rank3_example():
    tensor = load_example("zeta3")
    print(f"== zeta3: modulus {tensor.modulus}, rank 3, degree 2")
    print(f"  cartan matrix: {cartan_matrix(tensor).rows}")
    graph = generate_cartan_graph(tensor)
    print(f"  orbit objects: {len(graph)}; axioms: "
          f"{'pass' if validate_axioms(graph).ok else 'FAIL'}")
    labels = set()
    for obj in graph.object_list():
        diagram = dynkin_diagram(obj.tensor)
        labels.update(diagram.vertex_labels)
        labels.update(e for _, _, e in diagram.edges)
    pretty = ", ".join(mu_str(e, tensor.modulus) for e in sorted(labels))
    print(f"  diagram labels across the orbit: {pretty}")
    roots = real_roots(graph)
    ok = validate_root_axioms(graph, roots).ok
    print(f"  root axioms: {'pass' if ok else 'FAIL'}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args()
    rank2_example("zeta11")
    rank2_example("zeta7")
    rank3_example()


if __name__ == "__main__":
    main()
