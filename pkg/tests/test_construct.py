import json

import pytest

from invword.construct import (
    ConstructionInstance,
    build_presentation,
    equivalent_presentations,
    forward_certificate,
    free_group_wp,
    free_instance,
    group_triviality_oracle,
    headline_instance,
    idempotent_prefix,
    max_group_consistency,
    membership_query,
)
from invword.errors import NotConstructionShape, OracleMissing, StableLetterClash
from invword.stephen import Budget, GroupPresentation, InvPresentation, prefix_generators
from invword.words import EPSILON, Alphabet, alphabet, parse_word, reduce


@pytest.fixture
def toy_free():
    return free_instance(alphabet("a z"), [parse_word("a")])


@pytest.fixture
def toy_headline():
    return headline_instance([parse_word("a")])


class TestInstance:
    def test_stable_letter_clash(self):
        gp = GroupPresentation(alphabet("a t"), (EPSILON,))
        with pytest.raises(StableLetterClash):
            ConstructionInstance(gp, (), "t")

    def test_needs_a_relator(self):
        gp = GroupPresentation(alphabet("a"), ())
        with pytest.raises(ValueError):
            ConstructionInstance(gp, ())

    def test_json_roundtrip(self, toy_headline):
        again = ConstructionInstance.from_json(toy_headline.to_json())
        assert again == toy_headline


class TestBuildPresentation:
    def test_headline_relation_shape(self, toy_headline):
        pres = build_presentation(toy_headline)
        assert pres.alphabet.names == ("a", "z", "t")
        assert len(pres.relations) == 1
        lhs, rhs = pres.relations[0]
        assert rhs == EPSILON
        assert str(lhs) == "a A z Z t a T t A T A a Z z a z a Z A z A Z"

    def test_factor_order_in_idempotent_prefix(self, toy_headline):
        # base letters, then conjugated W-words, then inverse base letters
        e = idempotent_prefix(toy_headline)
        assert str(e) == "a A z Z t a T t A T A a Z z"

    def test_degenerate_instance(self):
        ci = free_instance(alphabet("a"), [])
        pres = build_presentation(ci)
        assert str(pres.relations[0][0]) == "a A A a"

    def test_conjugated_factor_present(self, toy_free):
        e = idempotent_prefix(toy_free)
        assert "t a T t A T" in str(e)

    def test_single_relation_when_m_is_one(self, toy_free):
        assert len(build_presentation(toy_free).relations) == 1


class TestEquivalentPresentations:
    def test_split_form_leads_with_idempotent(self, toy_headline):
        split, _ = equivalent_presentations(toy_headline)
        assert split.relations[0][0] == idempotent_prefix(toy_headline)
        assert split.relations[1][0] == toy_headline.group.relators[0]

    def test_expanded_form_contents(self, toy_headline):
        _, expanded = equivalent_presentations(toy_headline)
        texts = [str(l) for l, _ in expanded.relations]
        assert "a A" in texts and "A a" in texts
        assert "z Z" in texts and "Z z" in texts
        assert "t a T t A T" in texts

    def test_mismatched_presentation_rejected(self, toy_headline, toy_free):
        with pytest.raises(NotConstructionShape):
            equivalent_presentations(toy_headline, build_presentation(toy_free))

    def test_matching_presentation_accepted(self, toy_headline):
        equivalent_presentations(toy_headline, build_presentation(toy_headline))


class TestMembershipQuery:
    def test_empty_word_probe(self, toy_free):
        bundle = membership_query(toy_free, EPSILON)
        assert str(bundle.probe) == "t T"

    def test_generator_probe_is_idempotent_factor(self, toy_free):
        bundle = membership_query(toy_free, parse_word("a"))
        assert str(bundle.probe) == "t a T"
        assert str(bundle.probe) in str(idempotent_prefix(toy_free))

    def test_wp_instance_shape(self, toy_headline):
        bundle = membership_query(toy_headline, parse_word("a a a"))
        lhs, rhs = bundle.wp_instance
        assert rhs == EPSILON
        assert lhs == bundle.probe * bundle.probe.inverse()

    def test_json_is_canonical(self, toy_headline):
        payload = membership_query(toy_headline, parse_word("a")).to_json()
        assert set(payload) == {
            "instance",
            "u",
            "probe",
            "presentation",
            "wp_instance",
            "semantics",
        }
        json.dumps(payload)


class TestForwardCertificate:
    def test_valid_power(self, toy_free):
        assert forward_certificate(toy_free, parse_word("a a a"), [1, 1, 1], free_group_wp)

    def test_relator_padding_is_valid_in_headline_group(self, toy_headline):
        wp = group_triviality_oracle(toy_headline.group)
        u = parse_word("a z a Z A z A Z") * parse_word("a")
        assert forward_certificate(toy_headline, u, [1], wp)

    def test_invalid_certificate(self, toy_free):
        assert not forward_certificate(toy_free, parse_word("A"), [1], free_group_wp)

    def test_missing_oracle(self, toy_free):
        with pytest.raises(OracleMissing):
            forward_certificate(toy_free, parse_word("a"), [1], None)

    def test_bad_index(self, toy_free):
        with pytest.raises(ValueError):
            forward_certificate(toy_free, parse_word("a"), [2], free_group_wp)


class TestOracles:
    def test_free_shapes_recognised(self, toy_free):
        wp = group_triviality_oracle(toy_free.group)
        assert wp is free_group_wp

    def test_headline_shape_recognised(self, toy_headline):
        wp = group_triviality_oracle(toy_headline.group)
        assert wp(parse_word("a z a Z A z A Z"))
        assert not wp(parse_word("a"))

    def test_extended_headline_alphabet(self, toy_headline):
        from invword.stephen import max_group_image

        gp = max_group_image(build_presentation(toy_headline))
        wp = group_triviality_oracle(gp)
        assert wp is not None
        assert wp(parse_word("t T"))
        assert wp(parse_word("t a z a Z A z A Z T"))
        assert not wp(parse_word("t a T"))
        assert not wp(parse_word("t"))

    def test_unrecognised_shape(self):
        gp = GroupPresentation(alphabet("a z"), (parse_word("a a z"),))
        assert group_triviality_oracle(gp) is None

    def test_headline_relator_is_trivial_in_its_group(self, toy_headline):
        from invword.hnn import one_relator_wp

        assert one_relator_wp(toy_headline.group.relators[0])


class TestPrefixGeneratorImages:
    def test_key_images_appear_among_reduced_prefixes(self, toy_headline):
        pres = build_presentation(toy_headline)
        reduced = {str(reduce(p)) for p in prefix_generators(pres)}
        # the images generating the right units: base letters, the stable
        # letter, and the conjugated W-words
        for needed in ("a", "z", "t", "t a T"):
            assert needed in reduced


class TestConsistency:
    def test_toy_pairs_consistent(self, toy_headline):
        pres = build_presentation(toy_headline)
        pairs = [
            (parse_word("a A"), EPSILON),
            (parse_word("A a"), EPSILON),
            (parse_word("z Z"), EPSILON),
            (parse_word("a"), parse_word("z")),
        ]
        report = max_group_consistency(pres, pairs, Budget(4, 50_000))
        assert report.consistent
        assert report.equal_pairs >= 3

    def test_missing_oracle_raises(self):
        pres = InvPresentation(
            alphabet("a z"), ((parse_word("a a z"), EPSILON),)
        )
        with pytest.raises(OracleMissing):
            max_group_consistency(pres, [], Budget(2, 100))
