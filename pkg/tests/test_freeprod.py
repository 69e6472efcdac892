import random

import pytest

from invword.errors import BudgetExceeded, ParseError
from invword.freeprod import (
    FiniteGroup,
    FreeGroupOracle,
    FreeProduct,
    PresentedGroupOracle,
    fp_length,
    fp_multiply,
    ideal_complement_check,
    key_claim_check,
    submonoid_member_bounded,
    theta_kernel_intersection_agrees,
    theta_to_fgt,
)
from invword.stephen import Verdict
from invword.words import alphabet, parse_word


@pytest.fixture(scope="module")
def z2():
    return FiniteGroup.cyclic(2)


@pytest.fixture(scope="module")
def z3():
    return FiniteGroup.cyclic(3)


@pytest.fixture(scope="module")
def s3():
    return FiniteGroup.symmetric(3)


class TestFiniteGroup:
    def test_cyclic_shape(self, z3):
        assert z3.order == 3
        assert z3.multiply(1, 2) == 0
        assert z3.invert(1) == 2

    def test_symmetric_order(self, s3):
        assert s3.order == 6
        assert s3.identity == 0

    def test_identity_must_be_zero(self):
        with pytest.raises(ValueError):
            FiniteGroup([[1, 0], [0, 1]])

    def test_associativity_checked(self):
        with pytest.raises(ValueError):
            FiniteGroup([[0, 1, 2], [1, 0, 0], [2, 0, 1]])

    def test_json_roundtrip(self, z3):
        again = FiniteGroup.from_json(z3.to_json())
        assert again.table == z3.table and again.names == z3.names

    def test_csv(self):
        g = FiniteGroup.from_csv("0,1\n1,0\n")
        assert g.order == 2 and g.multiply(1, 1) == 0
        with pytest.raises(ParseError):
            FiniteGroup.from_csv("0,x\n1,0\n")


class TestReducedSequences:
    def test_t_cancels(self, z2):
        fp = FreeProduct.over(z2)
        assert fp_length(fp.t(1) * fp.t(-1)) == 0

    def test_conjugate_has_length_three(self, z2):
        fp = FreeProduct.over(z2)
        assert fp_length(fp.conjugated(1)) == 3

    def test_group_factors_merge(self, z2):
        fp = FreeProduct.over(z2)
        assert (fp.from_group(1) * fp.from_group(1)).is_identity

    def test_t_run_is_one_syllable(self, z2):
        fp = FreeProduct.over(z2)
        assert fp_length(fp.t(1) * fp.t(1)) == 1
        assert (fp.t(1) * fp.t(1)).syllables == (("t", 2),)

    def test_identity_neutral_and_inverse(self, s3):
        fp = FreeProduct.over(s3)
        rng = random.Random(3)
        pool = [fp.t(1), fp.t(-2)] + [fp.from_group(x) for x in s3.elements()]
        for _ in range(30):
            x = fp.product(rng.choice(pool) for _ in range(rng.randint(0, 5)))
            assert x * fp.identity() == x
            assert (x * x.inverse()).is_identity

    def test_associativity_random(self, s3):
        fp = FreeProduct.over(s3)
        rng = random.Random(4)
        pool = [fp.t(1), fp.t(-1)] + [fp.from_group(x) for x in s3.elements()]
        for _ in range(40):
            x, y, z = (
                fp.product(rng.choice(pool) for _ in range(rng.randint(0, 4)))
                for _ in range(3)
            )
            assert (x * y) * z == x * (y * z)

    def test_cross_product_elements_rejected(self, z2, z3):
        fp2, fp3 = FreeProduct.over(z2), FreeProduct.over(z3)
        with pytest.raises(ValueError):
            fp_multiply(fp2.t(1), fp3.t(1))


class TestThetaRetraction:
    def test_examples(self, z2):
        fp = FreeProduct.over(z2)
        assert theta_to_fgt(fp.conjugated(1)) == 0
        assert theta_to_fgt(fp.t(1)) == 1
        assert theta_to_fgt(fp.from_group(1)) == 0

    def test_homomorphism(self, s3):
        fp = FreeProduct.over(s3)
        rng = random.Random(5)
        pool = [fp.t(1), fp.t(-1)] + [fp.from_group(x) for x in s3.elements()]
        for _ in range(40):
            x = fp.product(rng.choice(pool) for _ in range(rng.randint(0, 5)))
            y = fp.product(rng.choice(pool) for _ in range(rng.randint(0, 5)))
            assert theta_to_fgt(x * y) == theta_to_fgt(x) + theta_to_fgt(y)


class TestBoundedMembership:
    def test_identity_is_empty_product(self, z2):
        fp = FreeProduct.over(z2)
        assert submonoid_member_bounded([fp.t(1)], fp.identity(), 3) is Verdict.YES

    def test_power_of_t(self, z2):
        fp = FreeProduct.over(z2)
        assert submonoid_member_bounded([fp.t(1)], fp.t(3), 3) is Verdict.YES
        assert submonoid_member_bounded([fp.t(1)], fp.t(4), 3) is Verdict.UNKNOWN

    def test_generator_found_at_one_factor(self, z2):
        fp = FreeProduct.over(z2)
        gens = [fp.t(1), fp.from_group(0), fp.from_group(1), fp.conjugated(1)]
        assert submonoid_member_bounded(gens, fp.conjugated(1), 1) is Verdict.YES

    def test_guard(self, s3):
        fp = FreeProduct.over(s3)
        gens = [fp.t(1)] + [fp.from_group(x) for x in s3.elements()]
        with pytest.raises(BudgetExceeded):
            submonoid_member_bounded(gens, fp.t(50), 12, guard=100)

    def test_no_generators(self, z2):
        fp = FreeProduct.over(z2)
        assert submonoid_member_bounded([], fp.identity(), 1) is Verdict.YES
        assert submonoid_member_bounded([], fp.t(1), 5) is Verdict.UNKNOWN


class TestKeyClaim:
    def test_generator_itself(self, z2):
        rep = key_claim_check(z2, [1], 1, max_factors=2)
        assert rep.agree and rep.h_in_base_submonoid and rep.probe_in_extension_submonoid

    def test_empty_generating_set(self, z3):
        rep = key_claim_check(z3, [], 1, max_factors=3)
        assert rep.agree and not rep.h_in_base_submonoid

    def test_identity_always_agrees(self, s3):
        rep = key_claim_check(s3, [], 0, max_factors=6)
        assert rep.agree and rep.h_in_base_submonoid and rep.base_depth == 0

    def test_factorisation_depth_reported(self, z3):
        rep = key_claim_check(z3, [1], 2, max_factors=3)
        assert rep.h_in_base_submonoid and rep.base_depth == 2


class TestIdealComplement:
    def test_cyclic_groups(self, z2, z3):
        for H in (z2, z3):
            rep = ideal_complement_check(H, sample_size=10, max_factors=4)
            assert rep.passed
            assert rep.v_size < rep.u_size

    def test_intersection_lemma_instances(self, z3):
        fp = FreeProduct.over(z3)
        xs = [fp.t(1), fp.from_group(1), fp.conjugated(2), fp.from_group(2)]
        assert theta_kernel_intersection_agrees(xs, max_factors=4)
        assert theta_kernel_intersection_agrees([fp.t(1)], max_factors=4)


class TestOtherOracles:
    def test_free_group_oracle(self):
        H = FreeGroupOracle(alphabet("x y"))
        fp = FreeProduct.over(H)
        g = fp.from_group(parse_word("x y"))
        assert fp_length(g * g.inverse()) == 0
        words = H.elements_up_to(2)
        assert len(words) == 1 + 4 + 12

    def test_presented_oracle_is_not_enumerable(self):
        from invword.hnn import one_relator_wp

        H = PresentedGroupOracle(alphabet("a z"), one_relator_wp)
        fp = FreeProduct.over(H)
        relator = fp.from_group(parse_word("a z a Z A z A Z"))
        assert relator.is_identity
        g = fp.t(1) * fp.from_group(parse_word("a")) * fp.t(-1)
        assert fp_length(g) == 3
        with pytest.raises(ValueError):
            submonoid_member_bounded([g], g, 2)
