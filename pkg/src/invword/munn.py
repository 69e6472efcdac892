"""Word problem for free inverse monoids.

A word is represented by the folded graph of its letter path in the
ambient free group: a finite birooted subtree of the Cayley tree.  Two
words are equal in the free inverse monoid exactly when these trees
coincide as birooted labeled graphs, which the canonical numbering
turns into a structural equality check.

``vagner_oracle`` is an independent brute-force check: it searches the
rewriting closure generated by the defining pairs
``(w w^-1 w, w)`` and ``(w w^-1 u u^-1, u u^-1 w w^-1)`` directly,
without ever building a tree, and is used to cross-validate the tree
route at desk scale.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
import heapq

from .errors import BudgetExceeded
from .wordgraph import WordGraph, linear_graph_builder, name_order
from .words import Alphabet, Letter, Word


@dataclass(frozen=True)
class MunnTree(WordGraph):
    """A word graph whose underlying undirected graph is a tree."""

    def __post_init__(self) -> None:
        if not self.is_tree():
            raise ValueError("graph is not a tree")


def _label_order_for(*ws: Word, alpha: Alphabet | None):
    if alpha is not None:
        return name_order(alpha.names)
    names = sorted({l.name for w in ws for l in w})
    return name_order(names)


def munn_tree(w: Word, alpha: Alphabet | None = None) -> MunnTree:
    """Fold the letter path of *w* into its birooted tree.

    The start root is the path origin, the end root the vertex reached
    by *w*.  Vertices are in bijection with the distinct free
    reductions of the prefixes of *w*.
    """
    builder, start, end = linear_graph_builder(w)
    g = builder.finish(start, end, _label_order_for(w, alpha=alpha))
    return MunnTree(g.n_vertices, g.edges, g.start, g.end)


def fim_equal(u: Word, v: Word, alpha: Alphabet | None = None) -> bool:
    """Equality in the free inverse monoid: the birooted trees coincide.

    >>> from .words import parse_word
    >>> fim_equal(parse_word("a A a"), parse_word("a"))
    True
    >>> fim_equal(parse_word("a A"), parse_word("A a"))
    False
    """
    order = _label_order_for(u, v, alpha=alpha)
    gu = munn_tree(u, alpha) if alpha else MunnTree(*_refold(u, order))
    gv = munn_tree(v, alpha) if alpha else MunnTree(*_refold(v, order))
    return (gu.n_vertices, gu.edges, gu.start, gu.end) == (
        gv.n_vertices,
        gv.edges,
        gv.start,
        gv.end,
    )


def _refold(w: Word, order) -> tuple:
    builder, start, end = linear_graph_builder(w)
    g = builder.finish(start, end, order)
    return (g.n_vertices, g.edges, g.start, g.end)


def fim_leq(u: Word, v: Word, alpha: Alphabet | None = None) -> bool:
    """Natural partial order: true when the class of *u* lies below the
    class of *v*, i.e. the tree of *v* maps into the tree of *u* by a
    root- and label-preserving morphism.

    >>> from .words import parse_word
    >>> fim_leq(parse_word("a A z"), parse_word("z"))
    True
    >>> fim_leq(parse_word("z"), parse_word("a A z"))
    False
    """
    order = _label_order_for(u, v, alpha=alpha)
    gu = MunnTree(*_refold(u, order))
    gv = MunnTree(*_refold(v, order))
    phi = {gv.start: gu.start}
    queue = [gv.start]
    adjacency: dict[int, list[tuple[str, int, int]]] = {}
    for x, name, y in gv.edges:
        adjacency.setdefault(x, []).append((name, 1, y))
        adjacency.setdefault(y, []).append((name, -1, x))
    while queue:
        x = queue.pop()
        for name, sign, y in adjacency.get(x, ()):
            t = gu.step(phi[x], Letter(name, sign))
            if t is None:
                return False
            if y in phi:
                if phi[y] != t:
                    return False
            else:
                phi[y] = t
                queue.append(y)
    return phi[gv.end] == gu.end


# -- brute-force rewriting oracle -------------------------------------------
#
# Words are packed into bytes: letter with index i becomes byte 2i when
# positive and 2i+1 when negative, so slicing, reversal and sign
# flipping all run at C speed.

_CACHE: OrderedDict = OrderedDict()
_CACHE_SLOTS = 8


def _encode(w: Word, index: dict[str, int]) -> bytes:
    return bytes(2 * index[l.name] + (0 if l.sign == 1 else 1) for l in w)


def _flip_table(n_names: int) -> bytes:
    table = bytearray(range(256))
    for i in range(n_names):
        table[2 * i], table[2 * i + 1] = 2 * i + 1, 2 * i
    return bytes(table)


def _inv(s: bytes, flip: bytes) -> bytes:
    return s.translate(flip)[::-1]


def _neighbours(s: bytes, flip: bytes, radius: int):
    """All words one defining-pair rewrite away from *s*, no longer
    than *radius*."""
    n = len(s)
    out = []
    # contraction: replace a factor x x^-1 x by x
    for piece in range(1, n // 3 + 1):
        step = 3 * piece
        for i in range(n - step + 1):
            x = s[i : i + piece]
            if s[i + 2 * piece : i + step] == x and s[i + piece : i + 2 * piece] == _inv(
                x, flip
            ):
                out.append(s[:i] + x + s[i + step :])
    # expansion: replace a factor x by x x^-1 x
    room = (radius - n) // 2
    for piece in range(1, room + 1):
        for i in range(n - piece + 1):
            x = s[i : i + piece]
            out.append(s[: i + piece] + _inv(x, flip) + x + s[i + piece :])
    # idempotent swap: x x^-1 u u^-1 -> u u^-1 x x^-1
    # _pal[i][j] == True when s[i:j] has the shape x x^-1
    half_spans: list[list[int]] = []
    pal: dict[tuple[int, int], bool] = {}
    for span in range(2, n + 1, 2):
        for i in range(n - span + 1):
            j = i + span
            if s[i] == flip[s[j - 1]] and (span == 2 or pal[(i + 1, j - 1)]):
                pal[(i, j)] = True
            else:
                pal[(i, j)] = False
    starts: dict[int, list[int]] = {}
    for (i, j), ok in pal.items():
        if ok:
            starts.setdefault(i, []).append(j)
    for i, mids in starts.items():
        for k in mids:
            for j in starts.get(k, ()):
                out.append(s[:i] + s[k:j] + s[i:k] + s[j:])
    return out


def _heights(u: bytes, flip: bytes, radius: int, guard: int) -> dict[bytes, int]:
    """Minimax chain heights: ``h[w]`` is the least R such that some
    rewrite chain joins *u* to *w* with every word of length <= R."""
    heights = {u: len(u)}
    heap = [(len(u), u)]
    while heap:
        h, s = heapq.heappop(heap)
        if h > heights.get(s, -1):
            continue
        for t in _neighbours(s, flip, radius):
            if len(t) > radius:
                continue
            ht = h if h >= len(t) else len(t)
            old = heights.get(t)
            if old is None or ht < old:
                heights[t] = ht
                if len(heights) > guard:
                    raise BudgetExceeded(
                        f"rewriting closure exceeded {guard} words"
                    )
                heapq.heappush(heap, (ht, t))
    return heights


def vagner_oracle(
    u: Word, v: Word, radius: int, guard: int = 10**6
) -> bool:
    """Search for a chain of defining-pair rewrites joining *u* and *v*.

    A factor may be replaced by the other side of ``(w w^-1 w, w)`` or
    ``(w w^-1 u u^-1, u u^-1 w w^-1)`` in either direction; every word
    along the chain, endpoints included, must have length at most
    *radius*.  The answer is exact for the restricted relation, hence
    sound for monoid equality, and complete once *radius* is large
    enough.  Raises :class:`BudgetExceeded` when the closure grows past
    *guard* words.
    """
    if u.letters == v.letters:
        return True
    names = tuple(sorted(u.names() | v.names()))
    index = {n: i for i, n in enumerate(names)}
    ub, vb = _encode(u, index), _encode(v, index)
    if len(ub) > radius or len(vb) > radius:
        return False
    for key in ((names, ub), (names, vb)):
        cached = _CACHE.get(key)
        if cached is not None and cached[0] >= radius:
            _CACHE.move_to_end(key)
            other = vb if key[1] == ub else ub
            h = cached[1].get(other)
            return h is not None and h <= radius
    flip = _flip_table(len(names))
    heights = _heights(ub, flip, radius, guard)
    _CACHE[(names, ub)] = (radius, heights)
    _CACHE.move_to_end((names, ub))
    while len(_CACHE) > _CACHE_SLOTS:
        _CACHE.popitem(last=False)
    h = heights.get(vb)
    return h is not None and h <= radius
