"""Birooted, involutive, edge-labeled word graphs.

Edges are stored with positive sign only; an edge ``x --a--> y`` is
traversed backwards as ``a^-1``.  After folding a graph is
deterministic: no vertex has two distinct outgoing transitions with the
same signed label (equivalently, at most one outgoing and one incoming
edge per plain label).  Folded graphs are canonicalised by renumbering
vertices in breadth-first order from the start root, neighbours visited
in signed-label order, which turns isomorphism of birooted labeled
graphs into structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded
from .words import Letter, Word

Edge = tuple[int, str, int]


@dataclass(frozen=True)
class WordGraph:
    """A folded, canonicalised word graph with two roots."""

    n_vertices: int
    edges: tuple[Edge, ...]
    start: int
    end: int

    @cached_property
    def _out(self) -> dict[tuple[str, int], dict[int, int]]:
        """transition tables: (name, sign) -> {source: target}"""
        table: dict[tuple[str, int], dict[int, int]] = {}
        for u, name, v in self.edges:
            table.setdefault((name, 1), {})[u] = v
            table.setdefault((name, -1), {})[v] = u
        return table

    def step(self, vertex: int, letter: Letter) -> int | None:
        """Follow one signed letter from *vertex*; None if undefined."""
        row = self._out.get((letter.name, letter.sign))
        return None if row is None else row.get(vertex)

    def read(self, w: Word, source: int | None = None) -> int | None:
        """Walk *w* from *source* (default: start).  None if the path
        leaves the graph."""
        v = self.start if source is None else source
        for letter in w:
            v = self.step(v, letter)
            if v is None:
                return None
        return v

    def accepts(self, w: Word) -> bool:
        """True when *w* labels a path from the start root to the end root."""
        return self.read(w) == self.end

    def degree_labels(self, vertex: int) -> list[tuple[str, int]]:
        return sorted(k for k, row in self._out.items() if vertex in row)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_tree(self) -> bool:
        """True when the underlying undirected graph is a tree."""
        if self.n_edges != self.n_vertices - 1:
            return False
        seen = {self.start}
        stack = [self.start]
        adj: dict[int, list[int]] = {}
        for u, _, v in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n_vertices

    # -- export ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "start": self.start,
            "end": self.end,
            "edges": [[u, name, v] for u, name, v in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WordGraph":
        edges = tuple((int(u), str(name), int(v)) for u, name, v in data["edges"])
        return cls(int(data["vertices"]), edges, int(data["start"]), int(data["end"]))

    def to_dot(self) -> str:
        """Deterministic DOT rendering: the start vertex is drawn with a
        double circle, the end vertex shaded."""
        lines = ["digraph wordgraph {", "  rankdir=LR;"]
        for v in range(self.n_vertices):
            attrs = []
            if v == self.start:
                attrs.append("shape=doublecircle")
            if v == self.end:
                attrs.append('style=filled fillcolor="gray85"')
            suffix = f" [{' '.join(attrs)}]" if attrs else ""
            lines.append(f"  {v}{suffix};")
        for u, name, v in sorted(self.edges):
            lines.append(f'  {u} -> {v} [label="{name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class GraphBuilder:
    """Mutable graph that folds incrementally as edges are added.

    Folding identifies the targets of equally-labeled edges leaving a
    common vertex (and dually the sources of equally-labeled edges
    entering one), via union-find, until the graph is deterministic.
    The merge order does not affect the folded result.
    """

    def __init__(self, n_vertices: int = 0, max_vertices: int | None = None):
        self.parent: list[int] = list(range(n_vertices))
        self.out: list[dict[str, int]] = [dict() for _ in range(n_vertices)]
        self.inc: list[dict[str, int]] = [dict() for _ in range(n_vertices)]
        self.max_vertices = max_vertices

    @classmethod
    def from_graph(cls, g: WordGraph, max_vertices: int | None = None) -> "GraphBuilder":
        b = cls(g.n_vertices, max_vertices)
        for u, name, v in g.edges:
            b.add_edge(u, name, v)
        return b

    def new_vertex(self) -> int:
        if self.max_vertices is not None and len(self.parent) >= self.max_vertices:
            raise BudgetExceeded(
                f"vertex budget of {self.max_vertices} exhausted"
            )
        v = len(self.parent)
        self.parent.append(v)
        self.out.append(dict())
        self.inc.append(dict())
        return v

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def add_edge(self, u: int, name: str, v: int) -> None:
        pending = [(u, name, v)]
        while pending:
            u, name, v = pending.pop()
            ru, rv = self.find(u), self.find(v)
            old = self.out[ru].get(name)
            if old is not None and self.find(old) != rv:
                self._merge(self.find(old), rv, pending)
                ru, rv = self.find(ru), self.find(rv)
            self.out[ru][name] = rv
            old = self.inc[rv].get(name)
            if old is not None and self.find(old) != ru:
                self._merge(self.find(old), ru, pending)
                ru, rv = self.find(ru), self.find(rv)
            self.inc[rv][name] = ru

    def _merge(self, a: int, b: int, pending: list[tuple[int, str, int]]) -> None:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if len(self.out[a]) + len(self.inc[a]) < len(self.out[b]) + len(self.inc[b]):
                a, b = b, a
            self.parent[b] = a
            for name, tgt in self.out[b].items():
                tgt = self.find(tgt)
                old = self.out[a].get(name)
                if old is None:
                    self.out[a][name] = tgt
                elif self.find(old) != tgt:
                    stack.append((old, tgt))
            for name, src in self.inc[b].items():
                src = self.find(src)
                old = self.inc[a].get(name)
                if old is None:
                    self.inc[a][name] = src
                elif self.find(old) != src:
                    stack.append((old, src))
            self.out[b] = dict()
            self.inc[b] = dict()

    def identify(self, u: int, v: int) -> None:
        """Merge two vertices (sewing an empty path between them)."""
        pending: list[tuple[int, str, int]] = []
        self._merge(self.find(u), self.find(v), pending)
        while pending:
            u2, name, v2 = pending.pop()
            self.add_edge(u2, name, v2)

    def sew_path(self, x: int, w: Word, y: int) -> None:
        """Sew a fresh path labeled *w* from *x* to *y* (interior
        vertices are new); an empty *w* identifies *x* and *y*."""
        if w.is_empty:
            self.identify(x, y)
            return
        cur = x
        n = len(w)
        for i, letter in enumerate(w):
            nxt = y if i == n - 1 else self.new_vertex()
            if letter.sign == 1:
                self.add_edge(cur, letter.name, nxt)
            else:
                self.add_edge(nxt, letter.name, cur)
            cur = nxt

    def live_vertex_count(self) -> int:
        return sum(1 for v in range(len(self.parent)) if self.find(v) == v)

    def finish(
        self,
        start: int,
        end: int,
        label_order: Callable[[str], object] | None = None,
    ) -> WordGraph:
        """Canonicalise: BFS renumbering from the start root, neighbours
        in signed-label order."""
        key = label_order if label_order is not None else (lambda name: name)
        rs, re_ = self.find(start), self.find(end)
        # collect signed adjacency on root vertices
        adjacency: dict[int, list[tuple[object, int, int]]] = {}
        for v in range(len(self.parent)):
            if self.find(v) != v:
                continue
            items: list[tuple[object, int, int]] = []
            for name, tgt in self.out[v].items():
                items.append(((key(name), 0), 0, self.find(tgt)))
            for name, src in self.inc[v].items():
                items.append(((key(name), 1), 1, self.find(src)))
            items.sort(key=lambda t: t[0])
            adjacency[v] = items
        numbering = {rs: 0}
        order = [rs]
        qi = 0
        while qi < len(order):
            v = order[qi]
            qi += 1
            for _, _, w in adjacency[v]:
                if w not in numbering:
                    numbering[w] = len(order)
                    order.append(w)
        edges = set()
        for v in order:
            for name, tgt in self.out[v].items():
                edges.add((numbering[v], name, numbering[self.find(tgt)]))
        return WordGraph(
            n_vertices=len(order),
            edges=tuple(sorted(edges, key=lambda e: (e[0], key(e[1]), e[2]))),
            start=numbering[rs],
            end=numbering[re_],
        )


def linear_graph_builder(w: Word) -> tuple[GraphBuilder, int, int]:
    """The (folding) builder seeded with the letter path of *w*."""
    b = GraphBuilder(1)
    cur = 0
    for letter in w:
        nxt = b.new_vertex()
        if letter.sign == 1:
            b.add_edge(cur, letter.name, nxt)
        else:
            b.add_edge(nxt, letter.name, cur)
        cur = nxt
    return b, 0, cur


def fold(
    n_vertices: int,
    edges: Iterable[Edge],
    start: int,
    end: int,
    label_order: Callable[[str], object] | None = None,
) -> WordGraph:
    """Fold an arbitrary edge list to its deterministic quotient and
    canonicalise.  The result is independent of edge order."""
    b = GraphBuilder(n_vertices)
    for u, name, v in edges:
        b.add_edge(u, name, v)
    return b.finish(start, end, label_order)


def fold_graph(g: WordGraph, label_order: Callable[[str], object] | None = None) -> WordGraph:
    """Fold an existing graph (idempotent on already-folded graphs)."""
    return fold(g.n_vertices, g.edges, g.start, g.end, label_order)


def name_order(names: Sequence[str]) -> Callable[[str], object]:
    """Label-order key that follows alphabet declaration order, with
    unknown names sorted after all declared ones."""
    index = {n: i for i, n in enumerate(names)}
    big = len(index)
    return lambda name: (index.get(name, big), name)
