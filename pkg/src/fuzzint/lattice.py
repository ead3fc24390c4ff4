"""Finite complete lattices.

Elements are opaque string identifiers; internally everything runs on dense
integer indices so that order tests and binary join/meet are O(1) table
lookups.  A lattice is immutable once validated and safe to share.

Distributivity is recorded as a flag with a witness triple rather than
enforced: plain quasi-monoidal ground lattices do not need it, but GL-monoid
construction does and rejects non-distributive carriers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    CarrierTooLarge,
    MissingBound,
    NotAPartialOrder,
    TopEqualsBottom,
    UnknownElement,
)

#: Carriers above this size are refused by default; exhaustive suites assume
#: desk scale.  Pass ``max_size`` to :func:`validate_lattice` to override.
DEFAULT_MAX_SIZE = 64


@dataclass(frozen=True)
class FiniteLattice:
    """A validated finite complete lattice.

    ``leq``, ``join2`` and ``meet2`` are index-based tables; ``elements``
    maps indices back to the user's identifiers.  ``distributive`` reports
    whether the (finite) frame laws hold, with a witness triple when not.
    """

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    join2: tuple[tuple[int, ...], ...]
    meet2: tuple[tuple[int, ...], ...]
    top: int
    bottom: int
    distributive: bool
    distributivity_witness: tuple[str, str, str] | None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})
        object.__setattr__(self, "_hash", hash((self.elements, self.leq)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self.leq == other.leq

    # -- element access ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(name) from None

    def name(self, i: int) -> str:
        return self.elements[i]

    def leq_names(self, a: str, b: str) -> bool:
        return self.leq[self.index(a)][self.index(b)]

    # -- joins and meets ---------------------------------------------------

    def join_i(self, indices) -> int:
        """Join of a family of indices; empty join is bottom."""
        acc = self.bottom
        for i in indices:
            acc = self.join2[acc][i]
        return acc

    def meet_i(self, indices) -> int:
        """Meet of a family of indices; empty meet is top."""
        acc = self.top
        for i in indices:
            acc = self.meet2[acc][i]
        return acc

    def join(self, subset) -> str:
        """Least upper bound of a subset of element names."""
        return self.name(self.join_i(self.index(a) for a in subset))

    def meet(self, subset) -> str:
        """Greatest lower bound of a subset of element names."""
        return self.name(self.meet_i(self.index(a) for a in subset))

    def upset(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(len(self.elements)) if self.leq[i][j])

    def downset(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(len(self.elements)) if self.leq[j][i])

    def frame_law_witness(self) -> tuple[str, str, str] | None:
        """First triple violating binary distributivity, if any.

        On a finite lattice the frame laws over arbitrary subsets reduce to
        the binary law by induction, so a triple scan decides them.
        """
        n = len(self.elements)
        for a, b, c in product(range(n), repeat=3):
            if self.meet2[self.join2[a][b]][c] != self.join2[self.meet2[a][c]][self.meet2[b][c]]:
                return (self.elements[a], self.elements[b], self.elements[c])
        return None

    def check_frame_laws_subsets(self) -> tuple | None:
        """Direct subset-by-subset frame law check (both laws).

        Exponential in the carrier; used to cross-validate the triple scan
        on small instances.  Returns a (subset, element, law) witness or None.
        """
        n = len(self.elements)
        idx = range(n)
        for mask in range(1 << n):
            members = [i for i in idx if mask >> i & 1]
            j = self.join_i(members)
            m = self.meet_i(members)
            for a in idx:
                if self.meet2[j][a] != self.join_i(self.meet2[i][a] for i in members):
                    return (tuple(self.elements[i] for i in members), self.elements[a], "meet-over-join")
                if self.join2[m][a] != self.meet_i(self.join2[i][a] for i in members):
                    return (tuple(self.elements[i] for i in members), self.elements[a], "join-over-meet")
        return None


def _lub(leq, candidates, i, j):
    """Least upper bound of i and j given the order table, or None."""
    ubs = [k for k in candidates if leq[i][k] and leq[j][k]]
    for u in ubs:
        if all(leq[u][v] for v in ubs):
            return u
    return None


def validate_lattice(
    elements,
    leq_pairs,
    *,
    closure: bool = False,
    max_size: int = DEFAULT_MAX_SIZE,
) -> FiniteLattice:
    """Validate a raw order relation and derive all lattice tables.

    ``leq_pairs`` lists related pairs (a, b) meaning a <= b.  With
    ``closure=True`` the reflexive-transitive closure is taken first, so a
    covering relation suffices.  Raises the first failing axiom with a
    witness; a distributivity failure is recorded on the result instead of
    raised.
    """
    elements = tuple(elements)
    if not elements:
        raise NotAPartialOrder("nonempty carrier", ())
    if len(set(elements)) != len(elements):
        raise NotAPartialOrder("distinct element names", (elements,))
    if len(elements) > max_size:
        raise CarrierTooLarge(len(elements), max_size)
    n = len(elements)
    index = {e: i for i, e in enumerate(elements)}

    rel = [[False] * n for _ in range(n)]
    for a, b in leq_pairs:
        if a not in index:
            raise UnknownElement(a)
        if b not in index:
            raise UnknownElement(b)
        rel[index[a]][index[b]] = True

    if closure:
        for i in range(n):
            rel[i][i] = True
        for k in range(n):  # Floyd-Warshall transitive closure
            for i in range(n):
                if rel[i][k]:
                    row_i, row_k = rel[i], rel[k]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True

    for i in range(n):
        if not rel[i][i]:
            raise NotAPartialOrder("reflexivity", (elements[i],))
    for i in range(n):
        for j in range(n):
            if i != j and rel[i][j] and rel[j][i]:
                raise NotAPartialOrder("antisymmetry", (elements[i], elements[j]))
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        raise NotAPartialOrder("transitivity", (elements[i], elements[j], elements[k]))

    rng = range(n)
    join2 = [[0] * n for _ in range(n)]
    meet2 = [[0] * n for _ in range(n)]
    for i in rng:
        for j in rng:
            u = _lub(rel, rng, i, j)
            if u is None:
                raise MissingBound("least upper bound", (elements[i], elements[j]))
            join2[i][j] = u
            # glb is the lub in the reversed order
            lbs = [k for k in rng if rel[k][i] and rel[k][j]]
            glb = None
            for l in lbs:
                if all(rel[v][l] for v in lbs):
                    glb = l
                    break
            if glb is None:
                raise MissingBound("greatest lower bound", (elements[i], elements[j]))
            meet2[i][j] = glb

    top = 0
    bottom = 0
    for i in rng:
        top = join2[top][i]
        bottom = meet2[bottom][i]
    if top == bottom:
        raise TopEqualsBottom()

    lat = FiniteLattice(
        elements=elements,
        leq=tuple(tuple(row) for row in rel),
        join2=tuple(tuple(row) for row in join2),
        meet2=tuple(tuple(row) for row in meet2),
        top=top,
        bottom=bottom,
        distributive=True,
        distributivity_witness=None,
    )
    witness = lat.frame_law_witness()
    if witness is not None:
        lat = FiniteLattice(
            elements=lat.elements,
            leq=lat.leq,
            join2=lat.join2,
            meet2=lat.meet2,
            top=lat.top,
            bottom=lat.bottom,
            distributive=False,
            distributivity_witness=witness,
        )
    return lat


# -- stock carriers used throughout the test and example suites ------------

def chain_lattice(names) -> FiniteLattice:
    """Chain in the listed order (first element is bottom)."""
    names = tuple(names)
    pairs = [(names[i], names[j]) for i in range(len(names)) for j in range(i, len(names))]
    return validate_lattice(names, pairs)


def diamond_lattice() -> FiniteLattice:
    """Four-element Boolean lattice: bot < a, b < top with a, b incomparable."""
    pairs = [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")]
    return validate_lattice(("bot", "a", "b", "top"), pairs, closure=True)


def pentagon_lattice() -> FiniteLattice:
    """N5: bot < a < c < top and bot < b < top, b incomparable to a and c."""
    pairs = [("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")]
    return validate_lattice(("bot", "a", "c", "b", "top"), pairs, closure=True)


def m3_lattice() -> FiniteLattice:
    """M3: three incomparable atoms between bot and top."""
    pairs = [("bot", x) for x in "abc"] + [(x, "top") for x in "abc"]
    return validate_lattice(("bot", "a", "b", "c", "top"), pairs, closure=True)
