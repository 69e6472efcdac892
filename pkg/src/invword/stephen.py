"""Budgeted semi-decision for the word problem in finitely presented
inverse monoids.

Starting from the birooted tree of a word, each round sews, for every
relation in both orientations and every vertex pair joined by a path
labeled by one side, a fresh path labeled by the other side, then folds
back to a deterministic graph.  Every round maps morphically into the
next, so once a word labels a path between the roots it does so
forever; reading both words across the two towers therefore gives a
*sound* equality certificate, while exhausting the budget says nothing.

The expansion schedule here is full rounds with deterministic job
order.  Relations of the form ``w = 1`` sew a ``w``-loop at every
vertex each round (or at the two roots only in frugal mode, which is
still sound but may converge more slowly).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BudgetExceeded, NotSpecialPresentation, ParseError
from .wordgraph import GraphBuilder, WordGraph, fold, fold_graph, linear_graph_builder, name_order
from .words import EPSILON, Alphabet, Word, formal_inverse, parse_word, prefixes

__all__ = [
    "Approximant",
    "Budget",
    "GroupPresentation",
    "InvPresentation",
    "Verdict",
    "expand_round",
    "fold",
    "fold_graph",
    "initial_approximant",
    "is_right_invertible",
    "max_group_image",
    "prefix_generators",
    "stephen_equal",
]


class Verdict(enum.Enum):
    """Tri-state outcome of a budgeted check; UNKNOWN carries no
    information."""

    EQUAL = "equal"
    YES = "yes"
    UNKNOWN = "unknown"

    @property
    def conclusive(self) -> bool:
        return self is not Verdict.UNKNOWN


@dataclass(frozen=True)
class InvPresentation:
    """An inverse monoid presentation: alphabet plus relation pairs.

    An empty relation list presents the free inverse monoid; a relation
    ``w = 1`` is encoded with an empty right-hand side.
    """

    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "relations", tuple((l, r) for l, r in self.relations))
        for lhs, rhs in self.relations:
            self.alphabet.check_word(lhs)
            self.alphabet.check_word(rhs)

    @property
    def is_special(self) -> bool:
        """True when every relation reads ``r = 1``."""
        return all(rhs.is_empty for _, rhs in self.relations)

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "relations": [[str(l), str(r)] for l, r in self.relations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "InvPresentation":
        try:
            alpha = Alphabet.from_json(data["alphabet"])
            rels = []
            for pair in data.get("relations", ()):
                lhs, rhs = pair
                rels.append(
                    (
                        parse_word(lhs, alpha) if isinstance(lhs, str) else Word.from_json(lhs),
                        parse_word(rhs, alpha) if isinstance(rhs, str) else Word.from_json(rhs),
                    )
                )
            return cls(alpha, tuple(rels))
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad presentation JSON: {exc}") from exc


@dataclass(frozen=True)
class GroupPresentation:
    """A group presentation: alphabet plus relator words (each ``r = 1``)."""

    alphabet: Alphabet
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            self.alphabet.check_word(r)

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "relators": [str(r) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupPresentation":
        try:
            alpha = Alphabet.from_json(data["alphabet"])
            rels = tuple(
                parse_word(r, alpha) if isinstance(r, str) else Word.from_json(r)
                for r in data.get("relators", ())
            )
            return cls(alpha, rels)
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad group presentation JSON: {exc}") from exc


@dataclass(frozen=True)
class Budget:
    """Caps for one semi-decision run.

    ``max_vertices`` bounds the number of vertices a single expansion
    round may allocate before folding; a round that would overrun is
    discarded whole and the run reports UNKNOWN.
    """

    max_rounds: int = 10
    max_vertices: int = 10_000

    def __post_init__(self) -> None:
        if self.max_rounds < 0:
            raise ValueError("max_rounds must be >= 0")
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")


@dataclass(frozen=True)
class Approximant:
    """A folded stage of the expansion tower."""

    graph: WordGraph
    round: int = 0


def initial_approximant(w: Word, pres: InvPresentation) -> Approximant:
    """Round zero: the birooted tree of *w*, numbered with the
    presentation's letter order."""
    pres.alphabet.check_word(w)
    builder, start, end = linear_graph_builder(w)
    g = builder.finish(start, end, name_order(pres.alphabet.names))
    return Approximant(g, 0)


def expand_round(
    appr: Approximant,
    pres: InvPresentation,
    max_vertices: int | None = None,
    frugal: bool = False,
) -> Approximant:
    """Apply every expansion visible in the current graph, then fold.

    For each relation side labeling a path from x to y, a fresh path
    labeled by the other side is sewn from x to y, unless that side
    already labels such a path (sewing it would fold away again).
    Raises :class:`BudgetExceeded` if more than *max_vertices* vertices
    would be held before folding.
    """
    g = appr.graph
    jobs: list[tuple[int, int, Word]] = []
    seen: set[tuple[int, int, tuple]] = set()
    for lhs, rhs in pres.relations:
        for src_word, dst_word in ((lhs, rhs), (rhs, lhs)):
            if src_word.is_empty:
                anchors = (g.start, g.end) if frugal else range(g.n_vertices)
                pairs = [(x, x) for x in dict.fromkeys(anchors)]
            else:
                pairs = []
                for x in range(g.n_vertices):
                    y = g.read(src_word, x)
                    if y is not None:
                        pairs.append((x, y))
            for x, y in pairs:
                if g.read(dst_word, x) == y:
                    continue
                key = (x, y, dst_word.letters)
                if key not in seen:
                    seen.add(key)
                    jobs.append((x, y, dst_word))
    if not jobs:
        return Approximant(g, appr.round + 1)
    if max_vertices is not None:
        projected = g.n_vertices + sum(max(0, len(w) - 1) for _, _, w in jobs)
        if projected > max_vertices:
            raise BudgetExceeded(
                f"round {appr.round + 1} needs {projected} vertices; cap is {max_vertices}"
            )
    builder = GraphBuilder.from_graph(g, max_vertices=max_vertices)
    for x, y, w in jobs:
        builder.sew_path(builder.find(x), w, builder.find(y))
    new_graph = builder.finish(g.start, g.end, name_order(pres.alphabet.names))
    return Approximant(new_graph, appr.round + 1)


def _trace_entry(round_: int, towers: list[tuple[str, Approximant, bool]]) -> dict:
    return {
        "round": round_,
        "towers": [
            {
                "word": label,
                "vertices": appr.graph.n_vertices,
                "edges": appr.graph.n_edges,
                "readable": readable,
            }
            for label, appr, readable in towers
        ],
    }


def stephen_equal(
    pres: InvPresentation,
    u: Word,
    v: Word,
    budget: Budget,
    frugal: bool = False,
    trace: list | None = None,
) -> Verdict:
    """Budgeted equality check for ``[u] = [v]`` in the presented monoid.

    EQUAL is returned as soon as *v* labels a start-to-end path in the
    tower over *u* and vice versa, and is always correct.  UNKNOWN is
    returned when the round or vertex budget runs out and says nothing.
    """
    au = initial_approximant(u, pres)
    av = initial_approximant(v, pres)
    read_v_in_u = au.graph.accepts(v)
    read_u_in_v = av.graph.accepts(u)
    if trace is not None:
        trace.append(
            _trace_entry(0, [(str(u), au, read_v_in_u), (str(v), av, read_u_in_v)])
        )
    rounds = 0
    while not (read_v_in_u and read_u_in_v) and rounds < budget.max_rounds:
        rounds += 1
        try:
            if not read_v_in_u:
                au = expand_round(au, pres, budget.max_vertices, frugal)
                read_v_in_u = au.graph.accepts(v)
            if not read_u_in_v:
                av = expand_round(av, pres, budget.max_vertices, frugal)
                read_u_in_v = av.graph.accepts(u)
        except BudgetExceeded:
            return Verdict.UNKNOWN
        if trace is not None:
            trace.append(
                _trace_entry(
                    rounds, [(str(u), au, read_v_in_u), (str(v), av, read_u_in_v)]
                )
            )
    return Verdict.EQUAL if read_v_in_u and read_u_in_v else Verdict.UNKNOWN


def is_right_invertible(
    pres: InvPresentation,
    w: Word,
    budget: Budget,
    frugal: bool = False,
    trace: list | None = None,
) -> Verdict:
    """YES when ``[w w^-1] = 1`` is certified within the budget, which
    holds exactly when ``[w]`` has a right inverse."""
    verdict = stephen_equal(
        pres, w * formal_inverse(w), EPSILON, budget, frugal=frugal, trace=trace
    )
    return Verdict.YES if verdict is Verdict.EQUAL else Verdict.UNKNOWN


def prefix_generators(pres: InvPresentation) -> tuple[Word, ...]:
    """The nonempty prefixes of the relators of a presentation whose
    relations all read ``r = 1``; their classes generate the submonoid
    of right units.  Deduplicated, in canonical order.
    """
    if not pres.is_special:
        raise NotSpecialPresentation(
            "prefix generators need every relation in the form r = 1"
        )
    out: dict[tuple, Word] = {}
    for lhs, _ in pres.relations:
        for p in prefixes(lhs):
            if not p.is_empty:
                out.setdefault(p.letters, p)
    return tuple(sorted(out.values(), key=pres.alphabet.word_key))


def max_group_image(pres: InvPresentation) -> GroupPresentation:
    """Read the same relations as a group presentation (relators
    ``lhs rhs^-1``)."""
    return GroupPresentation(
        pres.alphabet,
        tuple(lhs * formal_inverse(rhs) for lhs, rhs in pres.relations),
    )
