import random

import pytest

from conftest import random_rank2_profile_tensor
from weylg.errors import (
    AxiomViolation,
    NotAQuiddityCycle,
    ObjectLimitExceeded,
    UndefinedCartanEntry,
)
from weylg.groupoid import generate_cartan_graph
from weylg.rank2 import (
    QuiddityCycle,
    continuant_product,
    frieze_rows,
    quiddity_cycle,
    render_frieze,
    triangulate,
)

REFERENCE_FRIEZE_ROWS = [
    (0, 1, 1, 3, 2, 1, 0),
    (0, 1, 4, 3, 2, 1, 0),
    (0, 1, 1, 1, 1, 1, 0),
    (0, 1, 2, 3, 4, 1, 0),
    (0, 1, 2, 3, 1, 1, 0),
    (0, 1, 2, 1, 2, 1, 0),
]


class TestQuiddity:
    def test_reference_examples(self, zeta11, zeta7):
        assert quiddity_cycle(generate_cartan_graph(zeta11)).entries == (
            3, 1, 2, 3, 2, 1, 3,
        )
        assert quiddity_cycle(generate_cartan_graph(zeta7)).entries == (
            2, 1, 5, 1, 3, 1, 5, 1, 2, 3,
        )

    def test_a2_triangle(self, a2):
        assert quiddity_cycle(generate_cartan_graph(a2)).entries == (1, 1, 1)

    def test_total_is_triangle_count(self, zeta7):
        cycle = quiddity_cycle(generate_cartan_graph(zeta7))
        assert cycle.total() == 3 * len(cycle) - 6


class TestFrieze:
    def test_reference_rows_and_stagger(self):
        cycle = QuiddityCycle((1, 4, 1, 2, 2, 2))
        assert frieze_rows(cycle) == [tuple(r) for r in REFERENCE_FRIEZE_ROWS]
        rendered = render_frieze(cycle).splitlines()
        for offset, (line, row) in enumerate(zip(rendered, REFERENCE_FRIEZE_ROWS)):
            assert line == " " * (2 * offset) + " ".join(str(e) for e in row)

    def test_triangle_frieze(self):
        rows = frieze_rows(QuiddityCycle((1, 1, 1)))
        assert all(row == (0, 1, 1, 0) for row in rows)

    def test_interior_positivity_and_continuant_sign(self, zeta11, zeta7, a2):
        cycles = [
            quiddity_cycle(generate_cartan_graph(t)) for t in (zeta11, zeta7, a2)
        ]
        cycles.append(QuiddityCycle((1, 4, 1, 2, 2, 2)))
        for cycle in cycles:
            for row in frieze_rows(cycle):
                assert row[0] == 0 and row[-1] == 0
                assert all(e > 0 for e in row[1:-1])
            # the fold over one full period is minus the identity
            assert continuant_product(cycle) == ((-1, 0), (0, -1))


class TestTriangulate:
    def test_triangle(self):
        tri = triangulate(QuiddityCycle((1, 1, 1)))
        assert tri.diagonals == ()
        assert tri.triangles == ((0, 1, 2),)

    def test_heptagon(self):
        tri = triangulate(QuiddityCycle((3, 1, 2, 3, 2, 1, 3)))
        assert len(tri.diagonals) == 4
        assert tri.quiddity().entries == (3, 1, 2, 3, 2, 1, 3)

    def test_square(self):
        tri = triangulate(QuiddityCycle((1, 2, 1, 2)))
        assert tri.diagonals == ((1, 3),)

    def test_invalid_cycles(self):
        with pytest.raises(NotAQuiddityCycle):
            triangulate(QuiddityCycle((2, 2, 2, 2)))
        with pytest.raises(NotAQuiddityCycle):
            triangulate(QuiddityCycle((1, 1)))


class TestGeneratedCyclesAreTriangulations:
    def test_random_terminating_profiles(self):
        rng = random.Random(2024)
        produced = 0
        while produced < 12:
            t = random_rank2_profile_tensor(rng, rng.randint(2, 14), 4)
            try:
                graph = generate_cartan_graph(t, m_max=40, max_objects=400)
                cycle = quiddity_cycle(graph)
                tri = triangulate(cycle)
            except (UndefinedCartanEntry, ObjectLimitExceeded,
                    NotAQuiddityCycle, AxiomViolation):
                # affine or hyperbolic profiles have no triangulation, and
                # degree-4 closures may fail the graph axioms; only
                # finite-type walks produce quiddity cycles
                continue
            assert cycle.total() == 3 * len(cycle) - 6
            assert len(tri.diagonals) == len(cycle) - 3
            produced += 1
