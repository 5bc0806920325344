"""Real roots of a Cartan graph and the root-system axioms.

Roots at an object are the images of simple roots under compositions of
reflections along the graph's morphisms; the closure is computed as a
least fixed point, propagating each object's set through every edge
until nothing changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DepthExceeded
from .groupoid import AxiomReport, CartanGraph

DEFAULT_DEPTH_MAX = 64


def _sigma_apply(c_row, i, vec):
    """sigma_i on coordinates: only coordinate i changes, by the pairing."""
    pairing = sum(c * x for c, x in zip(c_row, vec))
    out = list(vec)
    out[i - 1] = vec[i - 1] - pairing
    return tuple(out)


@dataclass
class RootSet:
    roots: set = field(default_factory=set)

    def positive(self):
        return {r for r in self.roots if all(x >= 0 for x in r)}

    def negative(self):
        return {r for r in self.roots if all(x <= 0 for x in r)}


def real_roots(graph: CartanGraph, depth_max: int = DEFAULT_DEPTH_MAX) -> dict:
    """Closure of the simple roots under composed reflections.

    Returns {object key: RootSet}.  Raises DepthExceeded if the closure
    fails to stabilize within depth_max propagation rounds (each round
    applies one more reflection to everything reachable).
    """
    n = graph.rank
    simple = []
    for i in range(n):
        vec = [0] * n
        vec[i] = 1
        simple.append(tuple(vec))
    sets = {key: set(simple) for key in graph.objects}
    for _ in range(depth_max):
        changed = False
        for key, obj in graph.objects.items():
            for i in range(1, n + 1):
                target = graph.neighbor(key, i)
                row = obj.cartan.row(i)
                image = {_sigma_apply(row, i, v) for v in sets[key]}
                before = len(sets[target])
                sets[target] |= image
                if len(sets[target]) != before:
                    changed = True
        if not changed:
            return {key: RootSet(v) for key, v in sets.items()}
    raise DepthExceeded(
        f"root closure did not stabilize within {depth_max} rounds"
    )


def validate_root_axioms(graph: CartanGraph, roots: dict) -> AxiomReport:
    """Check R1-R4 on a computed root assignment.

    R1: every set splits as positives union negated positives.  R2: the
    only multiples of a simple root are that root and its negative.
    R3: each reflection maps the source set onto the target set.  R4:
    with m = #(roots in the i,j quadrant), alternating i/j reflections
    applied 2m times return to the starting object.
    """
    report = AxiomReport()
    n = graph.rank
    index = {key: pos for pos, key in enumerate(graph.objects)}
    for key, rs in roots.items():
        pos = index[key]
        positive = rs.positive()
        r1 = rs.roots == positive | {tuple(-x for x in r) for r in positive}
        report.record(f"R1 object {pos}", r1)
        r2 = True
        for r in rs.roots:
            support = [abs(x) for x in r if x != 0]
            if len([x for x in r if x != 0]) == 1 and support[0] != 1:
                r2 = False
        report.record(f"R2 object {pos}", r2)
    for (key, i), target in graph.edges.items():
        row = graph.objects[key].cartan.row(i)
        image = {_sigma_apply(row, i, v) for v in roots[key].roots}
        report.record(
            f"R3 object {index[key]} index {i}",
            image == roots[target].roots,
        )
    for key in graph.objects:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                quadrant = {
                    r
                    for r in roots[key].roots
                    if all(x >= 0 for x in r)
                    and all(
                        x == 0
                        for pos_, x in enumerate(r)
                        if pos_ not in (i - 1, j - 1)
                    )
                }
                m = len(quadrant)
                current = key
                for _ in range(m):
                    current = graph.neighbor(graph.neighbor(current, j), i)
                report.record(
                    f"R4 object {index[key]} pair ({i},{j})",
                    current == key,
                    detail=f"(rho_{i} rho_{j})^{m} moved the object",
                )
    return report
