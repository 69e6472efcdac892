"""Free products of a group with one infinite cyclic generator, in
reduced-sequence normal form.

The group factor is supplied behaviourally through a
:class:`GroupOracle` (finite multiplication tables, free groups on
reduced words, or presented groups backed by a triviality oracle).  An
element of the free product is an alternating sequence of nonidentity
syllables, each either a group element or a nonzero power of the fresh
generator; multiplication merges syllables across the seam and drops
identities, so the reduced-sequence shape is an invariant.

The module also houses bounded submonoid searches used to exercise the
structural facts about the submonoids generated by ``{t} | H | tWt^-1``
inside such free products.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, ParseError
from .stephen import Verdict
from .words import Alphabet, Word, reduce as free_reduce

__all__ = [
    "FiniteGroup",
    "FreeGroupOracle",
    "FreeProdElement",
    "FreeProduct",
    "GroupOracle",
    "IdealComplementReport",
    "KeyClaimReport",
    "PresentedGroupOracle",
    "fp_length",
    "fp_multiply",
    "ideal_complement_check",
    "key_claim_check",
    "submonoid_member_bounded",
    "theta_kernel_intersection_agrees",
    "theta_to_fgt",
]


class GroupOracle:
    """Behavioural group interface: identity, multiply, invert,
    identity test.  Elements must be hashable; ``canonical`` says
    whether equal group elements are always equal as Python values."""

    identity: object = None
    canonical: bool = True

    def multiply(self, x, y):
        raise NotImplementedError

    def invert(self, x):
        raise NotImplementedError

    def is_identity(self, x) -> bool:
        return x == self.identity

    def elements(self):
        """Bounded enumeration of all elements, when available."""
        raise NotImplementedError(f"{type(self).__name__} has no full enumeration")

    def name_of(self, x) -> str:
        return str(x)


class FiniteGroup(GroupOracle):
    """A finite group given by its multiplication table.

    Element ids are row indices and the identity must be id 0.  The
    table is checked on construction: identity row and column, existence
    of inverses, and full associativity.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        if self.order == 0:
            raise ValueError("empty multiplication table")
        for row in self.table:
            if len(row) != self.order or any(not 0 <= x < self.order for x in row):
                raise ValueError("table is not a square array of element ids")
        if names is None:
            names = ["e"] + [f"g{i}" for i in range(1, self.order)]
        self.names = tuple(str(n) for n in names)
        if len(self.names) != self.order:
            raise ValueError("need one name per element")
        self.identity = 0
        for i in range(self.order):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("id 0 is not an identity element")
        self._inverse = [None] * self.order
        for i in range(self.order):
            for j in range(self.order):
                if self.table[i][j] == 0:
                    self._inverse[i] = j
        if any(v is None for v in self._inverse):
            raise ValueError("some element has no inverse")
        for a, b, c in itertools.product(range(self.order), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError("table is not associative")

    def multiply(self, x, y):
        return self.table[x][y]

    def invert(self, x):
        return self._inverse[x]

    def elements(self):
        return range(self.order)

    def name_of(self, x) -> str:
        return self.names[x]

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    # -- constructors --------------------------------------------------
    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        names = ["e"] + [f"g{'^' + str(i) if i > 1 else ''}" for i in range(1, n)]
        return cls(table, names)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        """The symmetric group on n points; elements are permutations in
        lexicographic order (the identity comes first)."""
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms
        ]
        names = ["".join(str(x) for x in p) for p in perms]
        return cls(table, names)

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroup":
        try:
            return cls(data["table"], data.get("names"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad multiplication table JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "names": list(self.names),
        }

    @classmethod
    def from_csv(cls, text: str) -> "FiniteGroup":
        """Rows of comma-separated element ids, one row per element."""
        try:
            rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
            return cls(rows)
        except ValueError as exc:
            raise ParseError(f"bad multiplication table CSV: {exc}") from exc


class FreeGroupOracle(GroupOracle):
    """The free group on an alphabet; elements are freely reduced words."""

    def __init__(self, alpha: Alphabet):
        self.alphabet = alpha
        self.identity = Word(())

    def multiply(self, x: Word, y: Word) -> Word:
        return free_reduce(x * y)

    def invert(self, x: Word) -> Word:
        return x.inverse()

    def is_identity(self, x: Word) -> bool:
        return x.is_empty

    def elements_up_to(self, max_len: int):
        """All reduced words of length at most max_len."""
        from .words import Letter

        letters = [Letter(n, s) for n in self.alphabet.names for s in (1, -1)]
        out = [self.identity]
        layer = [self.identity]
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for l in letters:
                    if w.letters and w.letters[-1] == l.inverse():
                        continue
                    nxt.append(w * l)
            out.extend(nxt)
            layer = nxt
        return out


class PresentedGroupOracle(GroupOracle):
    """A quotient group known only through a triviality decision
    procedure.  Elements are representative words (not canonical), so
    this oracle supports triviality pipelines but not hashed
    enumeration."""

    canonical = False

    def __init__(self, alpha: Alphabet, is_trivial):
        self.alphabet = alpha
        self.identity = Word(())
        self._is_trivial = is_trivial

    def multiply(self, x: Word, y: Word) -> Word:
        return free_reduce(x * y)

    def invert(self, x: Word) -> Word:
        return x.inverse()

    def is_identity(self, x: Word) -> bool:
        return self._is_trivial(x)


class FreeProduct:
    """The free product of a group oracle with the free group on one
    fresh generator (default name t)."""

    def __init__(self, group: GroupOracle, stable: str = "t"):
        self.group = group
        self.stable = stable

    _instances: dict[int, "FreeProduct"] = {}

    @classmethod
    def over(cls, group: GroupOracle, stable: str = "t") -> "FreeProduct":
        """Shared instance per oracle, so elements from repeated calls
        compose and hash together."""
        key = id(group)
        fp = cls._instances.get(key)
        if fp is None or fp.stable != stable:
            fp = cls(group, stable)
            cls._instances[key] = fp
        return fp

    def identity(self) -> "FreeProdElement":
        return FreeProdElement(self, ())

    def t(self, n: int = 1) -> "FreeProdElement":
        if n == 0:
            return self.identity()
        return FreeProdElement(self, (("t", n),))

    def from_group(self, h) -> "FreeProdElement":
        if self.group.is_identity(h):
            return self.identity()
        return FreeProdElement(self, (("h", h),))

    def conjugated(self, h) -> "FreeProdElement":
        """t h t^-1 as an element (length three for nonidentity h)."""
        return self.multiply(self.multiply(self.t(1), self.from_group(h)), self.t(-1))

    def multiply(self, x: "FreeProdElement", y: "FreeProdElement") -> "FreeProdElement":
        if x.fp is not self or y.fp is not self:
            raise ValueError("elements belong to different free products")
        syl = list(x.syllables)
        for s in y.syllables:
            if not syl or syl[-1][0] != s[0]:
                syl.append(s)
                continue
            kind, value = syl.pop()
            if kind == "t":
                n = value + s[1]
                if n != 0:
                    syl.append(("t", n))
            else:
                prod = self.group.multiply(value, s[1])
                if not self.group.is_identity(prod):
                    syl.append(("h", prod))
        return FreeProdElement(self, tuple(syl))

    def invert(self, x: "FreeProdElement") -> "FreeProdElement":
        out = []
        for kind, value in reversed(x.syllables):
            if kind == "t":
                out.append(("t", -value))
            else:
                out.append(("h", self.group.invert(value)))
        return FreeProdElement(self, tuple(out))

    def product(self, items: Iterable["FreeProdElement"]) -> "FreeProdElement":
        acc = self.identity()
        for x in items:
            acc = self.multiply(acc, x)
        return acc


@dataclass(frozen=True)
class FreeProdElement:
    """A reduced sequence: alternating nonidentity syllables, each a
    group element ('h', h) or a stable-letter power ('t', n).  Elements
    compare equal only within one FreeProduct instance."""

    fp: FreeProduct
    syllables: tuple = ()

    def __mul__(self, other: "FreeProdElement") -> "FreeProdElement":
        return self.fp.multiply(self, other)

    def inverse(self) -> "FreeProdElement":
        return self.fp.invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for kind, value in self.syllables:
            if kind == "t":
                parts.append(self.fp.stable if value == 1 else f"{self.fp.stable}^{value}")
            else:
                parts.append(self.fp.group.name_of(value))
        return " ".join(parts)


def fp_multiply(x: FreeProdElement, y: FreeProdElement) -> FreeProdElement:
    """Concatenate and re-reduce at the seam."""
    return x * y


def fp_length(x: FreeProdElement) -> int:
    """Syllable count of the reduced sequence (0 for the identity)."""
    return len(x.syllables)


def theta_to_fgt(x: FreeProdElement) -> int:
    """Image under the retraction killing the group factor and fixing
    the stable letter; the free group on one generator is the integers,
    so the image is the total stable-letter exponent."""
    return sum(value for kind, value in x.syllables if kind == "t")


# -- bounded submonoid searches ---------------------------------------------

_CLOSURE_CACHE: OrderedDict = OrderedDict()
_CLOSURE_SLOTS = 8


def _closure_with_depths(
    gens: tuple[FreeProdElement, ...], max_factors: int, guard: int
) -> dict[FreeProdElement, int]:
    """Every product of at most max_factors generators, mapped to the
    least number of factors producing it."""
    if not gens:
        raise ValueError("need the ambient free product; pass at least one generator")
    key = (gens, max_factors)
    cached = _CLOSURE_CACHE.get(key)
    if cached is not None:
        _CLOSURE_CACHE.move_to_end(key)
        return cached
    if any(not g.fp.group.canonical for g in gens):
        raise ValueError("closure enumeration needs a canonical-element oracle")
    fp = gens[0].fp
    depth: dict[FreeProdElement, int] = {fp.identity(): 0}
    layer = [fp.identity()]
    for d in range(1, max_factors + 1):
        nxt = []
        for x in layer:
            for g in gens:
                y = x * g
                if y not in depth:
                    depth[y] = d
                    nxt.append(y)
                    if len(depth) > guard:
                        raise BudgetExceeded(
                            f"submonoid closure exceeded {guard} elements"
                        )
        layer = nxt
        if not layer:
            break
    _CLOSURE_CACHE[key] = depth
    _CLOSURE_CACHE.move_to_end(key)
    while len(_CLOSURE_CACHE) > _CLOSURE_SLOTS:
        _CLOSURE_CACHE.popitem(last=False)
    return depth


def submonoid_member_bounded(
    gens: Sequence[FreeProdElement],
    g: FreeProdElement,
    max_factors: int,
    guard: int = 10**6,
) -> Verdict:
    """YES when *g* is a product of at most *max_factors* generators
    (the empty product is the identity).  UNKNOWN means the bounded
    search did not find it, which is inconclusive in general."""
    if not gens:
        return Verdict.YES if g.is_identity else Verdict.UNKNOWN
    depth = _closure_with_depths(tuple(gens), max_factors, guard)
    return Verdict.YES if g in depth else Verdict.UNKNOWN


def _group_closure(H: GroupOracle, gens: Sequence, max_steps: int | None = None):
    """Submonoid closure inside a finite group, with factor depths."""
    depth = {H.identity: 0}
    layer = [H.identity]
    step = 0
    while layer and (max_steps is None or step < max_steps):
        step += 1
        nxt = []
        for x in layer:
            for g in gens:
                y = H.multiply(x, g)
                if y not in depth:
                    depth[y] = step
                    nxt.append(y)
        layer = nxt
    return depth


@dataclass
class KeyClaimReport:
    """Both sides of the conjugation membership equivalence for one
    group element, and whether they agree."""

    h_name: str
    h_in_base_submonoid: bool
    probe_in_extension_submonoid: bool
    base_depth: int | None
    max_factors: int

    @property
    def agree(self) -> bool:
        return self.h_in_base_submonoid == self.probe_in_extension_submonoid


def key_claim_check(
    H: FiniteGroup, W: Sequence, h, max_factors: int, guard: int = 10**6
) -> KeyClaimReport:
    """Test, for a finite group H and generating subset W: the
    conjugate ``t h t^-1`` lies in the submonoid of the free product
    generated by ``{t} | H | tWt^-1`` exactly when h lies in the
    submonoid of H generated by W.

    The forward direction must surface within the factor budget
    whenever max_factors is at least the factorisation length of h over
    W; the reverse direction can never surface at any budget, so a
    bounded search is conclusive evidence in agreement terms.
    """
    T = _group_closure(H, tuple(W))
    fp = FreeProduct.over(H)
    gens = (
        (fp.t(1),)
        + tuple(fp.from_group(x) for x in H.elements())
        + tuple(fp.conjugated(w) for w in W)
    )
    target = fp.conjugated(h)
    found = submonoid_member_bounded(gens, target, max_factors, guard)
    return KeyClaimReport(
        h_name=H.name_of(h),
        h_in_base_submonoid=h in T,
        probe_in_extension_submonoid=found is Verdict.YES,
        base_depth=T.get(h),
        max_factors=max_factors,
    )


@dataclass
class IdealComplementReport:
    """Checks that the non-kernel part of the big submonoid is an ideal,
    via the stable-letter exponent characterisation."""

    group_name: str
    max_factors: int
    u_size: int
    v_size: int
    kernel_elements_in_v: bool
    complement_has_positive_exponent: bool
    t_in_complement: bool
    ideal_samples_ok: bool
    samples: int

    @property
    def passed(self) -> bool:
        return (
            self.kernel_elements_in_v
            and self.complement_has_positive_exponent
            and self.t_in_complement
            and self.ideal_samples_ok
        )


def ideal_complement_check(
    H: FiniteGroup,
    sample_size: int = 25,
    max_factors: int = 5,
    guard: int = 10**6,
    seed: int = 7,
) -> IdealComplementReport:
    """Enumerate U = <{t} | H | tHt^-1> and V = <H | tHt^-1> up to the
    factor budget and verify: V sits inside the kernel of the exponent
    retraction, every enumerated U-element outside V has strictly
    positive exponent (and conversely kernel elements of U are found in
    V at the same budget), t itself lies outside V, and sampled products
    x*u*y with u outside V stay outside V."""
    fp = FreeProduct.over(H)
    hs = tuple(fp.from_group(x) for x in H.elements())
    conj = tuple(fp.conjugated(x) for x in H.elements())
    u_gens = (fp.t(1),) + hs + conj
    v_gens = hs + conj
    U = _closure_with_depths(u_gens, max_factors, guard)
    V = _closure_with_depths(v_gens, max_factors, guard)
    kernel_ok = all(theta_to_fgt(v) == 0 for v in V)
    complement_ok = True
    for u in U:
        if theta_to_fgt(u) == 0:
            if u not in V:
                complement_ok = False
        elif theta_to_fgt(u) < 0:
            complement_ok = False
    t_ok = theta_to_fgt(fp.t(1)) > 0 and fp.t(1) not in V
    rng = random.Random(seed)
    complement = sorted(
        (u for u in U if theta_to_fgt(u) > 0), key=lambda x: str(x)
    )
    pool = sorted(U, key=lambda x: str(x))
    samples_ok = True
    n_samples = 0
    if complement:
        for _ in range(sample_size):
            x = rng.choice(pool)
            u = rng.choice(complement)
            y = rng.choice(pool)
            n_samples += 1
            if theta_to_fgt(x * u * y) <= 0:
                samples_ok = False
    return IdealComplementReport(
        group_name=repr(H),
        max_factors=max_factors,
        u_size=len(U),
        v_size=len(V),
        kernel_elements_in_v=kernel_ok,
        complement_has_positive_exponent=complement_ok,
        t_in_complement=t_ok,
        ideal_samples_ok=samples_ok,
        samples=n_samples,
    )


def theta_kernel_intersection_agrees(
    X: Sequence[FreeProdElement], max_factors: int, guard: int = 10**6
) -> bool:
    """For a sample X: the kernel part of the submonoid generated by X
    equals the submonoid generated by the kernel part of X, budget for
    budget.  (The complement of the kernel is an ideal, so products fall
    in the kernel only when every factor does.)"""
    X = tuple(X)
    lhs = {
        g for g in _closure_with_depths(X, max_factors, guard) if theta_to_fgt(g) == 0
    }
    kernel_gens = tuple(x for x in X if theta_to_fgt(x) == 0)
    if kernel_gens:
        rhs = set(_closure_with_depths(kernel_gens, max_factors, guard))
    else:
        rhs = {X[0].fp.identity()} if X else set()
    return lhs == rhs
