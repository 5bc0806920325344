import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_rank2_profile_tensor, random_tensor
from weylg.errors import OddDegreeError, UndefinedCartanEntry
from weylg.groupoid import reflect
from weylg.lattice import SqrtBraidingTensor
from weylg.rosso import (
    cartan_entry,
    cartan_matrix,
    ef_coeffs,
    rosso_condition,
    rosso_diagnostics,
    rosso_vectors,
)


def classical_entry(q_ii, q_mixed, modulus, m_max=200):
    """Independent oracle for degree 2 on mu-exponents: smallest m with
    1 + q + .. + q^m = 0 or q^m * q_mixed = 1, via direct enumeration."""
    for m in range(m_max + 1):
        power_sum_zero = (
            (m + 1) * q_ii % modulus == 0 and q_ii % modulus != 0
        )
        if power_sum_zero or (m * q_ii + q_mixed) % modulus == 0:
            return -m
    raise AssertionError("no classical entry found")


class TestEfCoeffs:
    def test_e_at_m_zero(self):
        assert ef_coeffs(0, 4)[0] == 1
        assert ef_coeffs(0, 3)[0] == 0

    def test_sum_identity(self):
        for m in range(6):
            for k in range(8):
                e, f = ef_coeffs(m, k)
                assert e + f == (m + 1) ** k - m**k

    def test_f_at_k_two_is_classical_factor(self):
        for m in range(8):
            assert ef_coeffs(m, 2)[1] == 2 * m


class TestRossoVectors:
    def test_degree_four_coordinates(self):
        # doubled coordinates of (2m^3+3m^2+2m+1, 1.5m^2+1.5m, m+1, 0, 0)
        for m in range(6):
            rv = rosso_vectors(4, m)
            expected = (
                4 * m**3 + 6 * m**2 + 4 * m + 2,
                3 * m**2 + 3 * m,
                2 * m + 2,
                0,
                0,
            )
            assert rv.v.doubled == expected

    def test_degree_three_exponent_pattern(self):
        # chi(v_m) = q0^(3m(m+1)/2) q1^(m+1); doubled exponents double that
        for m in range(6):
            rv = rosso_vectors(3, m)
            assert rv.v.doubled == (3 * m * (m + 1), 2 * (m + 1), 0, 0)
            assert rv.w.doubled == (3 * m * (m + 1) + 2, 2 * m, 2, 0)

    def test_degree_two_is_classical(self):
        for m in range(6):
            rv = rosso_vectors(2, m)
            assert rv.v.doubled == (2 * (m + 1), 0, 0)
            assert rv.w.doubled == (2 * m, 2, 0)

    def test_sum_and_scaling_invariants(self):
        for d in range(2, 7):
            for m in range(5):
                rv = rosso_vectors(d, m)
                assert rv.u.doubled == (rv.v + rv.w).doubled
                assert rv.v.doubled == rv.s.scale(m + 1).doubled


class TestRossoCondition:
    def test_eleventh_root_smallest_m_is_three(self, zeta11):
        results = [rosso_condition(zeta11, 1, 2, m) for m in range(4)]
        assert results == [False, False, False, True]

    def test_trivial_mixed_part_vanishes_at_zero(self):
        t = SqrtBraidingTensor.from_entries(6, 2, 2, {(1, 1): 2, (2, 2): 1})
        assert rosso_condition(t, 1, 2, 0)

    def test_reflected_tensor_condition_via_w(self, zeta11):
        c = cartan_matrix(zeta11)
        image = reflect(zeta11, 1, c.row(1))
        rows = rosso_diagnostics(image, 2, 1, range(2))
        assert not rosso_condition(image, 2, 1, 0)
        assert rosso_condition(image, 2, 1, 1)
        assert rows[1].chi_w == 0

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10 ** 9))
    def test_degree_two_matches_classical_condition(self, seed):
        rng = random.Random(seed)
        M = rng.randint(2, 24)
        t = random_tensor(rng, modulus=M, rank=2, degree=2)
        q_ii = 2 * t.entry((1, 1))
        q_mixed = 2 * (t.entry((1, 2)) + t.entry((2, 1)))
        for m in range(6):
            classical = (
                (m + 1) * q_ii % M == 0 and q_ii % M != 0
            ) or (m * q_ii + q_mixed) % M == 0
            assert rosso_condition(t, 1, 2, m) == classical


class TestCartanEntries:
    def test_eleventh_root_entry(self, zeta11):
        assert cartan_entry(zeta11, 1, 2) == -3

    def test_zeta3_entries_match_classical_oracle(self, zeta3):
        M = zeta3.modulus
        for l in range(1, 4):
            for j in range(1, 4):
                if l == j:
                    continue
                q_ii = 2 * zeta3.entry((l, l))
                q_mixed = 2 * (zeta3.entry((l, j)) + zeta3.entry((j, l)))
                assert cartan_entry(zeta3, l, j) == classical_entry(
                    q_ii, q_mixed, M
                )

    def test_trivial_aggregates_give_zero(self):
        t = SqrtBraidingTensor.from_entries(8, 2, 2, {(1, 1): 3, (2, 2): 5})
        assert cartan_entry(t, 1, 2) == 0

    def test_undefined_entry_raises_with_pair(self):
        t = SqrtBraidingTensor.from_entries(
            14, 2, 2, {(1, 1): 1, (2, 2): 1, (1, 2): 4}
        )
        with pytest.raises(UndefinedCartanEntry) as err:
            cartan_entry(t, 1, 2, m_max=2)
        assert err.value.pair == (1, 2)
        assert err.value.m_max == 2

    def test_zero_pattern_is_symmetric_at_m_zero(self):
        rng = random.Random(23)
        for _ in range(40):
            t = random_rank2_profile_tensor(rng, rng.randint(2, 16), 4)
            try:
                c12 = cartan_entry(t, 1, 2, m_max=60)
                c21 = cartan_entry(t, 2, 1, m_max=60)
            except UndefinedCartanEntry:
                continue
            assert (c12 == 0) == (c21 == 0)


class TestCartanMatrix:
    def test_zeta3_matrix(self, zeta3):
        assert cartan_matrix(zeta3).rows == (
            (2, -1, -1),
            (-1, 2, -1),
            (-1, -1, 2),
        )

    def test_zeta11_matrix(self, zeta11):
        assert cartan_matrix(zeta11).rows == ((2, -3), (-3, 2))

    def test_diagonal_only_tensor(self):
        t = SqrtBraidingTensor.from_entries(
            10, 3, 2, {(1, 1): 1, (2, 2): 3, (3, 3): 7}
        )
        c = cartan_matrix(t)
        assert all(
            c.entry(i, j) == (2 if i == j else 0)
            for i in range(1, 4)
            for j in range(1, 4)
        )

    def test_odd_degree_rejected(self):
        t = SqrtBraidingTensor.from_entries(6, 2, 3, {(1, 1, 1): 1})
        with pytest.raises(OddDegreeError):
            cartan_matrix(t)


class TestDiagnostics:
    def test_eleventh_root_first_table(self, zeta11):
        rows = rosso_diagnostics(zeta11, 1, 2, range(4))
        assert [(r.chi_v, r.chi_w, r.chi_s) for r in rows] == [
            (4, 4, 4),
            (4, 4, 13),
            (2, 2, 8),
            (0, 0, 11),
        ]

    def test_eleventh_root_second_table(self, zeta11):
        image = reflect(zeta11, 1, cartan_matrix(zeta11).row(1))
        rows = rosso_diagnostics(image, 2, 1, range(2))
        assert [(r.chi_v, r.chi_w, r.chi_s) for r in rows] == [
            (18, 20, 18),
            (20, 0, 10),
        ]

    def test_zero_tensor_all_exponents_zero(self):
        t = SqrtBraidingTensor.from_entries(9, 2, 4, {})
        rows = rosso_diagnostics(t, 1, 2, range(3))
        assert all((r.chi_v, r.chi_w, r.chi_s) == (0, 0, 0) for r in rows)
