import itertools
import math
import random

import pytest

from conftest import random_tensor
from weylg.cells import BarCell, Chain, boundary, join
from weylg.cellexpr import SymbolTable, format_chain
from weylg.cycles import (
    DiagonalCochain,
    dcharacter_eval,
    multiset_permutations,
    symmetrized_cycle,
    theta_lambda,
)
from weylg.errors import CellShapeError, InvalidArguments
from weylg.groups import AbGroup
from weylg.lattice import gamma_aggregate


def compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


class TestMultisetPermutations:
    def test_counts(self):
        for lam in [(2, 2), (3, 1), (1, 1, 1), (2, 1, 1)]:
            items = []
            for pos, mult in enumerate(lam):
                items.extend([pos] * mult)
            perms = multiset_permutations(tuple(items))
            expected = math.factorial(len(items))
            for mult in lam:
                expected //= math.factorial(mult)
            assert len(perms) == expected
            assert len(set(perms)) == len(perms)


class TestSymmetrizedCycles:
    def test_reference_expansion_lambda_22(self):
        table = SymbolTable.free("ab")
        group = table.group
        a, b = group.basis()[:2]
        chain = symmetrized_cycle((a, b), (2, 2))
        assert format_chain(chain, table) == (
            "[a|a|b|b] + [a|b|a|b] + [a|b|b|a]"
            " + [b|a|a|b] + [b|a|b|a] + [b|b|a|a]"
        )

    def test_single_part_is_one_cell(self):
        group = AbGroup(1)
        (a,) = group.basis()
        chain = symmetrized_cycle((a,), (4,))
        assert len(chain.terms) == 1
        (cell,) = chain.terms
        assert cell.degree == 7

    def test_boundaries_vanish_for_all_compositions(self):
        rng = random.Random(77)
        groups = [AbGroup(0, (2,)), AbGroup(0, (3,)), AbGroup(2)]
        for d in range(1, 5):
            for lam in compositions(d):
                group = rng.choice(groups)
                args = tuple(
                    group.element(
                        [rng.randint(-2, 2) if not group.torsion else
                         rng.randrange(m) for m in (group.torsion or [5] * group.ncoords)]
                    )
                    for _ in lam
                )
                assert boundary(symmetrized_cycle(args, lam)).is_zero()

    def test_argument_count_guard(self):
        group = AbGroup(2)
        a, b = group.basis()
        with pytest.raises(InvalidArguments):
            symmetrized_cycle((a, b), (2,))

    def test_coincident_arguments_accumulate_multiplicity(self):
        # slots stay distinguishable: equal elements in different slots
        # produce multinomially many summands as coefficients
        group = AbGroup(1)
        (a,) = group.basis()
        chain = symmetrized_cycle((a, a), (1, 1))
        assert list(chain.terms.values()) == [2]
        chain = symmetrized_cycle((a, a), (2, 2))
        assert sum(chain.terms.values()) == 6

    def test_theta_stays_a_form_on_the_diagonal(self):
        rng = random.Random(53)
        for _ in range(10):
            t = random_tensor(rng, degree=2)
            group = AbGroup(t.rank)
            basis = group.basis()
            l = rng.randrange(t.rank)
            # bilinear form evaluated at (g, g) is q(g,g)^2
            assert theta_lambda(t, (1, 1), (basis[l], basis[l])) == (
                4 * t.entry((l + 1, l + 1))
            ) % t.modulus


class TestDiagonalCochain:
    def test_identity_argument_gives_zero(self, zeta11):
        group = AbGroup(2)
        a = group.basis()[0]
        e = group.identity()
        cell = join(1, tuple(BarCell((x,)) for x in (a, e, a, a)))
        assert dcharacter_eval(zeta11, cell) == 0

    def test_eleventh_root_bridge_values(self, zeta11):
        group = AbGroup(2)
        a1, a2 = group.basis()
        for k in range(5):
            # theta on the (4-k, k) cycle equals the aggregate exponent
            # of q_k, which is mu^2 for every k in this example
            args = (a1, a2)
            lam = (4 - k, k)
            if k == 0:
                args, lam = (a1,), (4,)
            elif k == 4:
                args, lam = (a2,), (4,)
            assert theta_lambda(zeta11, lam, args) == 2

    def test_matches_enumeration_oracle_degree_three(self):
        rng = random.Random(5)
        for _ in range(10):
            t = random_tensor(rng, degree=3)
            group = AbGroup(t.rank)
            xs = tuple(
                group.element([rng.randint(-2, 2) for _ in range(t.rank)])
                for _ in range(3)
            )
            cell = join(1, tuple(BarCell((x,)) for x in xs))
            expected = 0
            for idx in itertools.product(range(1, t.rank + 1), repeat=3):
                prod = 1
                for x, i in zip(xs, idx):
                    prod *= x.vec[i - 1]
                expected += 2 * t.entry(idx) * prod
            assert dcharacter_eval(t, cell) == expected % t.modulus

    def test_non_pure_cell_rejected(self, zeta11):
        group = AbGroup(2)
        a, b = group.basis()
        with pytest.raises(CellShapeError):
            dcharacter_eval(zeta11, join(1, (BarCell((a, b)), BarCell((a,)),
                                             BarCell((a,)))))

    def test_chain_evaluation_is_additive(self, zeta11):
        group = AbGroup(2)
        a, b = group.basis()
        cochain = DiagonalCochain(zeta11)
        c1 = join(1, tuple(BarCell((x,)) for x in (a, b, a, b)))
        c2 = join(1, tuple(BarCell((x,)) for x in (b, a, b, a)))
        chain = Chain({c1: 2, c2: -1})
        expected = (2 * cochain.eval_cell(c1) - cochain.eval_cell(c2)) % 22
        assert cochain.eval_chain(chain) == expected


class TestThetaLambda:
    def test_bridge_identity_random(self):
        rng = random.Random(13)
        for _ in range(30):
            t = random_tensor(rng, degree=rng.randint(2, 5))
            group = AbGroup(t.rank)
            basis = group.basis()
            l, j = rng.sample(range(t.rank), 2)
            k = rng.randint(0, t.degree)
            args, lam = (basis[l], basis[j]), (t.degree - k, k)
            if k == 0:
                args, lam = (basis[l],), (t.degree,)
            elif k == t.degree:
                args, lam = (basis[j],), (t.degree,)
            assert theta_lambda(t, lam, args) == (
                2 * gamma_aggregate(t, l + 1, j + 1, k)
            ) % t.modulus

    def test_invariant_under_simultaneous_permutation(self):
        rng = random.Random(29)
        for _ in range(10):
            t = random_tensor(rng, degree=3)
            group = AbGroup(t.rank)
            args = tuple(
                group.element([rng.randint(-1, 1) for _ in range(t.rank)])
                for _ in range(3)
            )
            lam = (1, 1, 1)
            base = theta_lambda(t, lam, args)
            for perm in itertools.permutations(range(3)):
                permuted_args = tuple(args[i] for i in perm)
                assert theta_lambda(t, lam, permuted_args) == base

    def test_degree_two_classical_forms(self):
        rng = random.Random(37)
        for _ in range(10):
            t = random_tensor(rng, degree=2)
            group = AbGroup(t.rank)
            basis = group.basis()
            g, h = rng.sample(range(t.rank), 2)
            assert theta_lambda(t, (2,), (basis[g],)) == (
                2 * t.entry((g + 1, g + 1))
            ) % t.modulus
            assert theta_lambda(t, (1, 1), (basis[g], basis[h])) == (
                2 * (t.entry((g + 1, h + 1)) + t.entry((h + 1, g + 1)))
            ) % t.modulus
