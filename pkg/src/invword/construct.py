"""Compiler from submonoid membership in a group to right-invertibility
in an inverse monoid.

Given a group presentation on alphabet A with relators r_1, ..., r_m
and a finite word list W = w_1, ..., w_k, the compiled inverse monoid
presentation adjoins a fresh stable letter t and replaces the first
relation by ``e r_1 = 1``, where e is the idempotent word built from
the factors

    a_1, ..., a_n, t w_1 t^-1, ..., t w_k t^-1, a_1^-1, ..., a_n^-1

in exactly that order.  In the compiled monoid every base letter is
invertible and every conjugate ``t w_j t^-1`` is right invertible, and
a word u over A lies in the submonoid of the group generated by W
exactly when ``t u t^-1`` is right invertible.  The reduction is
exposed as data (a :class:`QueryBundle`): the underlying membership
problem may be arbitrarily hard, so callers choose their own budgets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotConstructionShape, OracleMissing, ParseError, StableLetterClash
from .freeprod import FreeProduct, PresentedGroupOracle
from .hnn import one_relator_wp
from .stephen import (
    Budget,
    GroupPresentation,
    InvPresentation,
    Verdict,
    stephen_equal,
)
from .words import (
    EPSILON,
    Alphabet,
    Letter,
    Word,
    formal_inverse,
    idempotent_word,
    parse_word,
    reduce,
)

__all__ = [
    "ConstructionInstance",
    "QueryBundle",
    "build_presentation",
    "equivalent_presentations",
    "forward_certificate",
    "free_group_wp",
    "free_instance",
    "group_triviality_oracle",
    "headline_instance",
    "max_group_consistency",
    "membership_query",
    "ConsistencyReport",
]

HEADLINE_RELATOR = parse_word("a z a Z A z A Z")


@dataclass(frozen=True)
class ConstructionInstance:
    """A group presentation, a word list W generating the target
    submonoid, and a fresh stable letter."""

    group: GroupPresentation
    wset: tuple[Word, ...]
    stable: str = "t"

    def __post_init__(self) -> None:
        object.__setattr__(self, "wset", tuple(self.wset))
        if not self.group.relators:
            raise ValueError(
                "need at least one relator; use an empty relator word for a free group"
            )
        if self.stable in self.group.alphabet:
            raise StableLetterClash(
                f"stable letter {self.stable!r} already names a generator"
            )
        for w in self.wset:
            self.group.alphabet.check_word(w)

    @property
    def extended_alphabet(self) -> Alphabet:
        return Alphabet(self.group.alphabet.names + (self.stable,))

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "wset": [str(w) for w in self.wset],
            "stable": self.stable,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionInstance":
        try:
            group = GroupPresentation.from_json(data["group"])
            wset = tuple(
                parse_word(w, group.alphabet) if isinstance(w, str) else Word.from_json(w)
                for w in data.get("wset", ())
            )
            return cls(group, wset, data.get("stable", "t"))
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad construction JSON: {exc}") from exc


def _conjugate(ci: ConstructionInstance, w: Word) -> Word:
    t = Word((Letter(ci.stable),))
    return t * w * t.inverse()


def idempotent_prefix(ci: ConstructionInstance) -> Word:
    """The idempotent word e for the instance, factors in the fixed
    order: base letters, conjugated W-words, inverse base letters."""
    factors = [Word((Letter(a),)) for a in ci.group.alphabet.names]
    factors += [_conjugate(ci, w) for w in ci.wset]
    factors += [Word((Letter(a, -1),)) for a in ci.group.alphabet.names]
    return idempotent_word(factors)


def build_presentation(ci: ConstructionInstance) -> InvPresentation:
    """The compiled presentation: ``e r_1 = 1`` and ``r_i = 1`` for the
    remaining relators, over the extended alphabet (a single relation
    when m = 1)."""
    e = idempotent_prefix(ci)
    relators = ci.group.relators
    relations = [(e * relators[0], EPSILON)]
    relations += [(r, EPSILON) for r in relators[1:]]
    return InvPresentation(ci.extended_alphabet, tuple(relations))


def equivalent_presentations(
    ci: ConstructionInstance, p: InvPresentation | None = None
) -> list[InvPresentation]:
    """Two presentations of the same monoid as the compiled one.

    The split form separates ``e = 1`` from ``r_1 = 1``; the expanded
    form makes every base letter invertible and every conjugate
    ``t w_j t^-1`` right invertible explicitly.  The equivalences are
    exercised behaviourally by the test suite rather than re-derived.
    """
    built = build_presentation(ci)
    if p is not None and p != built:
        raise NotConstructionShape("presentation does not match the instance")
    e = idempotent_prefix(ci)
    alpha = ci.extended_alphabet
    relators = ci.group.relators
    split = InvPresentation(
        alpha,
        ((e, EPSILON),) + tuple((r, EPSILON) for r in relators),
    )
    expanded_rels = [(r, EPSILON) for r in relators]
    for a in ci.group.alphabet.names:
        la = Word((Letter(a),))
        expanded_rels.append((la * la.inverse(), EPSILON))
        expanded_rels.append((la.inverse() * la, EPSILON))
    for w in ci.wset:
        c = _conjugate(ci, w)
        expanded_rels.append((c * _conjugate(ci, formal_inverse(w)), EPSILON))
    expanded = InvPresentation(alpha, tuple(expanded_rels))
    return [split, expanded]


@dataclass(frozen=True)
class QueryBundle:
    """One compiled membership query: the probe word and the word
    problem instance whose answer decides it."""

    instance: ConstructionInstance
    u: Word
    probe: Word
    presentation: InvPresentation

    @property
    def wp_instance(self) -> tuple[Word, Word]:
        return (self.probe * formal_inverse(self.probe), EPSILON)

    @property
    def semantics(self) -> str:
        return (
            "u lies in the submonoid of the group generated by W "
            "iff the probe t u t^-1 is right invertible in the compiled monoid"
        )

    def to_json(self) -> dict:
        lhs, rhs = self.wp_instance
        return {
            "instance": self.instance.to_json(),
            "u": str(self.u),
            "probe": str(self.probe),
            "presentation": self.presentation.to_json(),
            "wp_instance": [str(lhs), str(rhs)],
            "semantics": self.semantics,
        }


def membership_query(ci: ConstructionInstance, u: Word) -> QueryBundle:
    """Compile the membership question for *u* into a word-problem
    instance over the compiled presentation."""
    ci.group.alphabet.check_word(u)
    return QueryBundle(
        instance=ci,
        u=u,
        probe=_conjugate(ci, u),
        presentation=build_presentation(ci),
    )


def free_group_wp(w: Word) -> bool:
    """Triviality in a free group: the word freely reduces to nothing."""
    return reduce(w).is_empty


def free_instance(alpha: Alphabet, wset, stable: str = "t") -> ConstructionInstance:
    """Instance over a free group, encoded with a single empty relator."""
    return ConstructionInstance(
        GroupPresentation(alpha, (EPSILON,)), tuple(wset), stable
    )


def headline_instance(wset) -> ConstructionInstance:
    """Instance over the two-generator one-relator group on a, z whose
    relator makes a commute with its z-conjugate.  For suitable W the
    compiled monoid's word problem is as hard as membership in the
    submonoid W generates, which this package only ever approaches with
    budgeted, sound-only checks."""
    alpha = Alphabet(("a", "z"))
    wset = tuple(
        parse_word(w, alpha) if isinstance(w, str) else w for w in wset
    )
    return ConstructionInstance(
        GroupPresentation(alpha, (HEADLINE_RELATOR,)), wset, "t"
    )


def forward_certificate(
    ci: ConstructionInstance,
    u: Word,
    factorization,
    group_wp,
) -> bool:
    """Validate a claimed factorisation of *u* over W.

    The certificate is a list of 1-based indices j_1, ..., j_l; it is
    valid when ``u (w_j1 ... w_jl)^-1`` is trivial in the group, and a
    valid certificate witnesses right invertibility of the probe
    ``t u t^-1`` as the product of the right invertible conjugates
    ``t w_j t^-1``."""
    if group_wp is None:
        raise OracleMissing("no triviality oracle supplied for the group")
    product = EPSILON
    for j in factorization:
        if not 1 <= j <= len(ci.wset):
            raise ValueError(f"factor index {j} out of range 1..{len(ci.wset)}")
        product = product * ci.wset[j - 1]
    return bool(group_wp(u * formal_inverse(product)))


def group_triviality_oracle(gp: GroupPresentation):
    """A triviality decision procedure for the supported group shapes:
    free presentations (every relator freely reduces away) and the
    headline one-relator group, possibly with an extra free generator
    adjoined (the free-product normal form then decides triviality
    factorwise).  Returns None when the shape is not recognised."""
    nontrivial = [reduce(r) for r in gp.relators]
    nontrivial = [r for r in nontrivial if not r.is_empty]
    if not nontrivial:
        return free_group_wp
    if len(nontrivial) == 1 and nontrivial[0] == HEADLINE_RELATOR:
        base_names = ("a", "z")
        extra = [n for n in gp.alphabet.names if n not in base_names]
        if not extra:
            return one_relator_wp
        if len(extra) == 1:
            stable = extra[0]
            H = PresentedGroupOracle(Alphabet(base_names), one_relator_wp)
            fp = FreeProduct.over(H)

            def wp(w: Word) -> bool:
                acc = fp.identity()
                seg: list[Letter] = []
                for l in w:
                    if l.name == stable:
                        if seg:
                            acc = acc * fp.from_group(Word(tuple(seg)))
                            seg = []
                        acc = acc * fp.t(l.sign)
                    else:
                        seg.append(l)
                if seg:
                    acc = acc * fp.from_group(Word(tuple(seg)))
                return acc.is_identity

            return wp
    return None


@dataclass
class ConsistencyReport:
    """Every pair certified equal in the monoid must have equal images
    in the maximal group image; a violation is an implementation bug."""

    pairs_checked: int
    equal_pairs: int
    violations: list[tuple[str, str]]

    @property
    def consistent(self) -> bool:
        return not self.violations


def max_group_consistency(
    p: InvPresentation, pairs, budget: Budget
) -> ConsistencyReport:
    """Run the equality semi-decision on each pair and check every EQUAL
    verdict against the group triviality oracle for the same relations
    read as a group presentation."""
    from .stephen import max_group_image

    oracle = group_triviality_oracle(max_group_image(p))
    if oracle is None:
        raise OracleMissing("no triviality oracle for this maximal group image")
    checked = 0
    equal = 0
    violations: list[tuple[str, str]] = []
    for u, v in pairs:
        checked += 1
        if stephen_equal(p, u, v, budget) is Verdict.EQUAL:
            equal += 1
            if not oracle(u * formal_inverse(v)):
                violations.append((str(u), str(v)))
    return ConsistencyReport(checked, equal, violations)


def query_bundle_to_json_str(bundle: QueryBundle) -> str:
    """Canonical JSON serialisation (stable key order, no whitespace
    variance) for reproducible artifacts."""
    return json.dumps(bundle.to_json(), sort_keys=True, indent=2) + "\n"
