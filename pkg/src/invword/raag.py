"""Right-angled Artin groups over finite simplicial graphs.

Generators are the vertices; two generators commute exactly when they
are joined by an edge.  Elements are put into a canonical form: the
lexicographically least fully-cancelled representative under the
shuffle moves, with letters ordered by vertex declaration order
(positive sign before negative).  Equality, parabolic membership and
induced subgraphs all reduce to this normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import UnknownVertex
from .words import Alphabet, Letter, Word

_ASCII = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class SimpGraph:
    """A finite simplicial graph: vertex alphabet plus undirected edges,
    no loops."""

    vertices: Alphabet
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        canon = set()
        for pair in self.edges:
            u, v = pair
            if u not in self.vertices or v not in self.vertices:
                raise UnknownVertex(f"edge {pair!r} uses an unknown vertex")
            if u == v:
                raise ValueError(f"loop edge {pair!r} not allowed")
            iu, iv = self.vertices.index(u), self.vertices.index(v)
            canon.add((u, v) if iu < iv else (v, u))
        object.__setattr__(
            self,
            "edges",
            tuple(sorted(canon, key=lambda p: (self.vertices.index(p[0]), self.vertices.index(p[1])))),
        )

    @cached_property
    def _adjacent(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges) | frozenset((v, u) for u, v in self.edges)

    def adjacent(self, u: str, v: str) -> bool:
        return (u, v) in self._adjacent

    def commutes(self, u: str, v: str) -> bool:
        """Whether the generators *u* and *v* commute as group elements."""
        return u == v or (u, v) in self._adjacent

    def check_word(self, w: Word) -> None:
        for l in w:
            if l.name not in self.vertices:
                raise UnknownVertex(f"letter {l.name!r} is not a vertex")

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices.to_json(),
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimpGraph":
        return cls(Alphabet.from_json(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


def path_graph(n: int, names: Iterable[str] | None = None) -> SimpGraph:
    """The path with *n* vertices; default names a, b, c, ...

    >>> path_graph(3).edges
    (('a', 'b'), ('b', 'c'))
    """
    if names is None:
        if n > len(_ASCII):
            raise ValueError("supply names for paths with more than 26 vertices")
        names = _ASCII[:n]
    names = tuple(names)
    if len(names) != n:
        raise ValueError("need exactly n vertex names")
    return SimpGraph(Alphabet(names), tuple(zip(names, names[1:])))


P4 = path_graph(4)


@dataclass(frozen=True)
class NormalForm:
    """The canonical representative of a group element, tied to its
    defining graph."""

    word: Word
    graph: SimpGraph

    @property
    def is_trivial(self) -> bool:
        return self.word.is_empty

    def support(self) -> set[str]:
        return self.word.names()

    def __str__(self) -> str:
        return str(self.word)


# -- internal signed-integer encoding ---------------------------------------


def _encode(g: SimpGraph, w: Word) -> list[int]:
    idx = g.vertices.index
    out = []
    for l in w:
        if l.name not in g.vertices:
            raise UnknownVertex(f"letter {l.name!r} is not a vertex")
        out.append((idx(l.name) + 1) * l.sign)
    return out


def _decode(g: SimpGraph, seq: list[int]) -> Word:
    names = g.vertices.names
    return Word(tuple(Letter(names[abs(x) - 1], 1 if x > 0 else -1) for x in seq))


def _comm_table(g: SimpGraph) -> list[list[bool]]:
    n = len(g.vertices)
    names = g.vertices.names
    table = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[i][j] = g.commutes(names[i - 1], names[j - 1])
    return table


def _cancel(seq: list[int], comm: list[list[bool]]) -> list[int]:
    """Delete pairs x ... x^-1 whose gap commutes with x, to exhaustion."""
    seq = list(seq)
    changed = True
    while changed:
        changed = False
        n = len(seq)
        for i in range(n):
            x = seq[i]
            ax = abs(x)
            row = comm[ax]
            for j in range(i + 1, n):
                y = seq[j]
                if y == -x:
                    del seq[j]
                    del seq[i]
                    changed = True
                    break
                if not row[abs(y)]:
                    break
            if changed:
                break
    return seq


def _extract(seq: list[int], comm: list[list[bool]]) -> list[int]:
    """Greedy front extraction of the least movable letter; *seq* must be
    fully cancelled."""
    rest = list(seq)
    out: list[int] = []
    while rest:
        best = None
        best_pos = -1
        for pos, x in enumerate(rest):
            row_ok = True
            ax = abs(x)
            row = comm[ax]
            for p in rest[:pos]:
                if not row[abs(p)]:
                    row_ok = False
                    break
            if row_ok:
                key = (ax, 0 if x > 0 else 1)
                if best is None or key < best:
                    best = key
                    best_pos = pos
        out.append(rest[best_pos])
        del rest[best_pos]
    return out


def raag_normal_form(g: SimpGraph, w: Word) -> NormalForm:
    """Canonical form: shuffle-cancel to exhaustion, then emit letters
    greedily in declaration order.

    >>> from .words import parse_word
    >>> str(raag_normal_form(P4, parse_word("b a")).word)
    'a b'
    >>> str(raag_normal_form(P4, parse_word("d a")).word)
    'd a'
    >>> str(raag_normal_form(P4, parse_word("a b A")).word)
    'b'
    """
    comm = _comm_table(g)
    seq = _extract(_cancel(_encode(g, w), comm), comm)
    return NormalForm(_decode(g, seq), g)


def raag_equal(g: SimpGraph, u: Word, v: Word) -> bool:
    """Equality in the group presented by *g*."""
    return raag_normal_form(g, u).word == raag_normal_form(g, v).word


def induced_subgraph(g: SimpGraph, delta: Iterable[str]) -> SimpGraph:
    """Restrict to a vertex subset, keeping declaration order."""
    delta = set(delta)
    for d in delta:
        if d not in g.vertices:
            raise UnknownVertex(f"{d!r} is not a vertex")
    names = tuple(n for n in g.vertices.names if n in delta)
    edges = tuple(e for e in g.edges if e[0] in delta and e[1] in delta)
    return SimpGraph(Alphabet(names), edges)


def parabolic_membership(g: SimpGraph, delta: Iterable[str], w: Word) -> Optional[Word]:
    """Membership in the subgroup generated by the vertex subset *delta*.

    The normal form of *w* lies in that subgroup exactly when its
    support is contained in *delta*; in that case the normal form (a
    word over *delta*) is returned, otherwise None.
    """
    delta = set(delta)
    for d in delta:
        if d not in g.vertices:
            raise UnknownVertex(f"{d!r} is not a vertex")
    nf = raag_normal_form(g, w)
    return nf.word if nf.support() <= delta else None


def vertex_map_is_homomorphism(
    src: SimpGraph, dst: SimpGraph, mapping: dict[str, str]
) -> bool:
    """Whether a vertex-to-vertex map sends edges to edges, so that the
    letterwise extension is a group homomorphism."""
    for v in src.vertices:
        img = mapping.get(v)
        if img is None or img not in dst.vertices:
            return False
    return all(dst.adjacent(mapping[u], mapping[v]) for u, v in src.edges)


def apply_vertex_map(mapping: dict[str, str], w: Word) -> Word:
    """Letterwise image of *w* under a vertex map."""
    return Word(tuple(Letter(mapping[l.name], l.sign) for l in w))
