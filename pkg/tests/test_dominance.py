"""Dominance decision procedures and certificate verification."""

import random
from fractions import Fraction as F

import pytest

import helpers
import oracles
from divcert import (
    JointDist,
    PermutationCertificate,
    SimpleDist,
    UniformGrid,
    check_fsd,
    check_majorization,
    check_ssd,
    common_refinement,
    dirac,
    fsd_violation,
    verify_div1_certificate,
    verify_div2_instance,
)

COIN = SimpleDist.from_pairs([(-1, F(1, 2)), (1, F(1, 2))])


class TestFsd:
    def test_higher_constant_dominates(self):
        assert check_fsd(dirac(1), dirac(0))
        assert not check_fsd(dirac(0), dirac(1))

    def test_coin_vs_zero(self):
        assert not check_fsd(COIN, dirac(0))
        assert fsd_violation(COIN, dirac(0)) == -1

    def test_reflexive(self):
        rng = random.Random(1)
        for _ in range(30):
            d = helpers.rand_dist(rng)
            assert check_fsd(d, d)

    def test_shift_up_dominates(self):
        rng = random.Random(2)
        for _ in range(50):
            d = helpers.rand_dist(rng)
            c = F(rng.randint(0, 8), 4)
            assert check_fsd(d.shift(c), d)
            if c > 0:
                assert not check_fsd(d, d.shift(c))

    def test_implies_ssd(self):
        rng = random.Random(3)
        seen = 0
        for _ in range(400):
            a = helpers.rand_dist(rng, max_atoms=4)
            b = helpers.rand_dist(rng, max_atoms=4)
            if check_fsd(a, b):
                seen += 1
                assert check_ssd(a, b)
        assert seen > 5


class TestSsd:
    def test_known_pairs(self):
        assert check_ssd(dirac(0), COIN)
        assert not check_ssd(COIN, dirac(0))
        wide = SimpleDist.from_pairs([(0, F(1, 2)), (2, F(1, 2))])
        assert check_ssd(wide, COIN.shift(0))

    def test_reflexive(self):
        rng = random.Random(4)
        for _ in range(30):
            d = helpers.rand_dist(rng)
            assert check_ssd(d, d)

    def test_transitive_on_spread_chains(self):
        rng = random.Random(5)
        for _ in range(100):
            a, b = helpers.mps_pair(rng, base_atoms=4, max_doublings=2)
            b2, c = helpers.mps_pair(rng, base_atoms=1, max_doublings=1)
            # chain a >= b and b >= (b + spread of b): respread b itself
            gb, _ = common_refinement(b, b)
            spread = []
            for v in gb.values:
                s = F(rng.randint(0, 8), 4)
                spread.extend([v - s, v + s])
            c = UniformGrid.from_values(sorted(spread)).to_dist()
            assert check_ssd(a, b) and check_ssd(b, c)
            assert check_ssd(a, c)

    def test_antisymmetry_with_equal_means(self):
        rng = random.Random(6)
        for _ in range(300):
            a, b = helpers.equal_mean_pair(rng)
            if check_ssd(a, b) and check_ssd(b, a):
                assert a == b

    def test_agrees_with_cdf_integral_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            a = helpers.rand_dist(rng)
            b = helpers.rand_dist(rng)
            assert check_ssd(a, b) == oracles.ssd_by_cdf_integral(a, b)

    def test_agrees_with_utility_family_oracle(self):
        rng = random.Random(8)
        for _ in range(300):
            a, b = helpers.equal_mean_pair(rng)
            assert check_ssd(a, b) == oracles.ssd_by_utility(a, b)


class TestMajorization:
    def test_basic(self):
        a = UniformGrid.from_values([2, 2])
        b = UniformGrid.from_values([1, 3])
        assert check_majorization(a, b)
        failed = check_majorization(b, a)
        assert not failed and failed.witness == 1
        assert check_majorization(a, a)

    def test_unequal_totals_witness_is_last_index(self):
        a = UniformGrid.from_values([2, 3])
        b = UniformGrid.from_values([1, 3])
        failed = check_majorization(a, b)
        assert not failed and failed.witness == 2

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            check_majorization(
                UniformGrid.from_values([1]), UniformGrid.from_values([1, 1])
            )

    def test_equivalent_to_ssd_on_refinements(self):
        rng = random.Random(9)
        for _ in range(300):
            a, b = helpers.equal_mean_pair(rng)
            ga, gb = common_refinement(a, b)
            assert bool(check_majorization(ga, gb)) == check_ssd(a, b)


class TestVerifiers:
    def test_identity_certificate(self):
        rng = random.Random(10)
        d = helpers.rand_dist(rng, max_den=4)
        n = common_refinement(d, d)[0].n
        cert = PermutationCertificate(n=n, terms=((tuple(range(n)), F(1)),))
        assert verify_div1_certificate(d, d, cert)

    def test_two_term_certificate(self):
        eta = SimpleDist.from_pairs([(1, F(1, 2)), (3, F(1, 2))])
        cert = PermutationCertificate(
            n=2, terms=(((0, 1), F(1, 2)), ((1, 0), F(1, 2)))
        )
        assert verify_div1_certificate(dirac(2), eta, cert)
        assert not verify_div1_certificate(dirac(3), eta, cert)

    def test_incompatible_grid_raises(self):
        eta = SimpleDist.from_pairs([(0, F(1, 3)), (1, F(2, 3))])
        cert = PermutationCertificate(n=2, terms=(((0, 1), F(1)),))
        with pytest.raises(ValueError):
            verify_div1_certificate(dirac(0), eta, cert)

    def test_div2_instances(self):
        j = JointDist.from_pairs([((1, 3), F(1, 2)), ((3, 1), F(1, 2))])
        eta = SimpleDist.from_pairs([(1, F(1, 2)), (3, F(1, 2))])
        assert verify_div2_instance(dirac(2), eta, j, [F(1, 2), F(1, 2)])
        # degenerate weights: the combination is just the first coordinate
        assert verify_div2_instance(eta, eta, j, [1, 0])
        assert not verify_div2_instance(dirac(2), eta, j, [1, 0])

    def test_div2_all_equal_coordinates(self):
        rng = random.Random(11)
        d = helpers.rand_dist(rng, max_atoms=4)
        j = JointDist.from_pairs(((v, v, v), p) for v, p in d.atoms)
        w = helpers.rand_simplex_weights(rng, 3)
        assert verify_div2_instance(d, d, j, w)

    def test_div2_dimension_mismatch(self):
        j = JointDist.from_pairs([((1, 3), F(1, 2)), ((3, 1), F(1, 2))])
        with pytest.raises(ValueError):
            verify_div2_instance(dirac(2), dirac(2), j, [1])

    def test_any_verified_certificate_implies_dominance(self):
        # build certificates directly from random weights and permutations;
        # whatever they reconstruct must be second-order dominated by it
        rng = random.Random(12)
        for _ in range(100):
            n = rng.randint(1, 8)
            eta = helpers.rand_grid(rng, n).to_dist()
            b = common_refinement(eta, eta)[0]
            m = rng.randint(1, 4)
            perms = []
            for _ in range(m):
                p = list(range(b.n))
                rng.shuffle(p)
                perms.append(tuple(p))
            weights = helpers.rand_simplex_weights(rng, m)
            merged: dict[tuple, F] = {}
            for p, w in zip(perms, weights):
                if w > 0:
                    merged[p] = merged.get(p, F(0)) + w
            cert = PermutationCertificate(n=b.n, terms=tuple(sorted(merged.items())))
            combined = cert.combine(b.values)
            xi = SimpleDist.from_pairs((v, F(1, b.n)) for v in combined)
            assert verify_div1_certificate(xi, eta, cert)
            assert check_ssd(xi, eta)
            assert xi.mean() == eta.mean()
