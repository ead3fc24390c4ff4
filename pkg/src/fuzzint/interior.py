"""Interior maps on fuzzy powersets.

An interior map sends each fuzzy set to one below it (contraction), is
monotone and fixes the constant-top set.  The maps on a fixed ground form a
complete lattice under the pointwise order; the identity is the largest
element and the corrected least element sends everything except top to
bottom.

The least operator deliberately deviates from the traditional display that
maps every nonzero set to top: that version is not contractive (witness any
u strictly between the bounds), and a regression test keeps the corrected
form honest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GroundMismatch,
    GroundTooLarge,
    NotGLGround,
    TopMissingFromTopology,
)
from .monoid import GLMonoid
from .powerset import FuzzySet, Ground, Verdict, powerset

#: Tables are materialized below this powerset size; above it, maps stay
#: rule-backed and exhaustive predicates refuse to run.
MATERIALIZATION_LIMIT = 4096

#: Full subset enumeration limit for the fully-productive predicate.
FULL_SUBSET_LIMIT = 4096


class InteriorMap:
    """A total map L^X -> L^X satisfying contraction, monotonicity and
    preservation of the constant-top set.

    Backed by a materialized table when the powerset is small enough,
    otherwise by the defining rule.
    """

    __slots__ = ("ground", "_table", "_rule", "_sig")

    def __init__(self, ground: Ground, table=None, rule=None):
        self.ground = ground
        self._table = table
        self._rule = rule
        self._sig = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_table(cls, ground: Ground, mapping, *, validate: bool = True) -> "InteriorMap":
        table = {}
        for u, iu in mapping.items() if hasattr(mapping, "items") else mapping:
            uv = u.values if isinstance(u, FuzzySet) else tuple(u)
            iv = iu.values if isinstance(iu, FuzzySet) else tuple(iu)
            table[uv] = iv
        imap = cls(ground, table=table)
        if validate:
            verdict = check_interior_axioms(ground, imap)
            if not verdict:
                raise ValueError(f"not an interior map: {verdict.witness}")
        return imap

    @classmethod
    def from_rule(
        cls,
        ground: Ground,
        rule,
        *,
        validate: bool = True,
        limit: int = MATERIALIZATION_LIMIT,
    ) -> "InteriorMap":
        if ground.set_count() <= limit:
            table = {u: tuple(rule(u)) for u in ground.all_value_tuples()}
            return cls.from_table(ground, table.items(), validate=validate)
        return cls(ground, rule=rule)

    # -- evaluation ---------------------------------------------------------

    def apply_values(self, values: tuple) -> tuple:
        if self._table is not None:
            return self._table[values]
        return tuple(self._rule(values))

    def apply(self, u: FuzzySet) -> FuzzySet:
        if u.ground != self.ground:
            raise GroundMismatch("fuzzy set belongs to a different ground")
        return FuzzySet(self.ground, self.apply_values(u.values))

    __call__ = apply

    def table(self) -> dict:
        if self._table is None:
            if self.ground.set_count() > MATERIALIZATION_LIMIT:
                raise GroundTooLarge(self.ground.set_count(), MATERIALIZATION_LIMIT)
            self._table = {u: tuple(self._rule(u)) for u in self.ground.all_value_tuples()}
        return self._table

    def signature(self) -> tuple:
        """Images in lexicographic input order; canonical identity."""
        if self._sig is None:
            self._sig = tuple(self.apply_values(u) for u in self.ground.all_value_tuples())
        return self._sig

    def __eq__(self, other):
        if not isinstance(other, InteriorMap):
            return NotImplemented
        return self.ground == other.ground and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f"InteriorMap(ground={len(self.ground.points)} points, {len(self.ground.lattice)} values)"


# -- axiom checking ----------------------------------------------------------

def _as_rule(ground: Ground, candidate):
    if isinstance(candidate, InteriorMap):
        return candidate.apply_values
    if callable(candidate):
        return lambda u: tuple(candidate(u))
    table = {}
    for u, iu in candidate.items() if hasattr(candidate, "items") else candidate:
        uv = u.values if isinstance(u, FuzzySet) else tuple(u)
        iv = iu.values if isinstance(iu, FuzzySet) else tuple(iu)
        table[uv] = iv
    return table.__getitem__


def check_interior_axioms(ground: Ground, candidate) -> Verdict:
    """First violated axiom with witness, scanning contraction, then the
    top condition, then monotonicity over all pairs."""
    rule = _as_rule(ground, candidate)
    lat = ground.lattice
    checked = 0
    images = {}
    for u in ground.all_value_tuples():
        images[u] = rule(u)
        checked += 1
        if not ground.leq_values(images[u], u):
            return Verdict(
                ok=False,
                prop="interior-axioms",
                witness={"axiom": "I1", "u": _name_values(ground, u), "image": _name_values(ground, images[u])},
                checked=checked,
            )
    top = (lat.top,) * len(ground.points)
    if images[top] != top:
        return Verdict(
            ok=False,
            prop="interior-axioms",
            witness={"axiom": "I3", "image": _name_values(ground, images[top])},
            checked=checked,
        )
    for u, iu in images.items():
        for v, iv in images.items():
            checked += 1
            if ground.leq_values(u, v) and not ground.leq_values(iu, iv):
                return Verdict(
                    ok=False,
                    prop="interior-axioms",
                    witness={
                        "axiom": "I2",
                        "u": _name_values(ground, u),
                        "v": _name_values(ground, v),
                    },
                    checked=checked,
                )
    return Verdict(ok=True, prop="interior-axioms", witness=None, checked=checked)


def _name_values(ground: Ground, values: tuple) -> dict:
    lat = ground.lattice
    return {x: lat.name(v) for x, v in zip(ground.points, values)}


# -- the operator lattice ----------------------------------------------------

def discrete(ground: Ground) -> InteriorMap:
    """The identity: the largest interior map on the ground."""
    return InteriorMap.from_rule(ground, lambda u: u, validate=False)


def least(ground: Ground) -> InteriorMap:
    """The smallest interior map: top stays top, everything else drops to
    bottom.  (Sending every nonzero set to top instead would break
    contraction.)"""
    lat = ground.lattice
    top = (lat.top,) * len(ground.points)
    bot = (lat.bottom,) * len(ground.points)
    return InteriorMap.from_rule(ground, lambda u: top if u == top else bot, validate=False)


def literal_trivial_rule(ground: Ground):
    """The uncorrected trivial operator: nonzero sets to top, zero to zero.

    Kept as a rule (not an InteriorMap) because it fails contraction on any
    carrier with an element strictly between the bounds; the regression
    suite checks exactly that.
    """
    lat = ground.lattice
    top = (lat.top,) * len(ground.points)
    bot = (lat.bottom,) * len(ground.points)

    def rule(u):
        return bot if u == bot else top

    return rule


def join_interiors(family) -> InteriorMap:
    """Pointwise join of a nonempty family over one ground."""
    return _combine(family, "join")


def meet_interiors(family) -> InteriorMap:
    """Pointwise meet of a nonempty family over one ground."""
    return _combine(family, "meet")


def _combine(family, how: str) -> InteriorMap:
    family = list(family)
    if not family:
        raise GroundMismatch("empty family has no ground; use discrete/least explicitly")
    ground = family[0].ground
    for i in family[1:]:
        if i.ground != ground:
            raise GroundMismatch("family members live on different grounds")
    fold = ground.join_values if how == "join" else ground.meet_values

    def rule(u):
        return fold(i.apply_values(u) for i in family)

    return InteriorMap.from_rule(ground, rule, validate=True)


# -- derived predicates -------------------------------------------------------

def _require_bounded(i: InteriorMap) -> None:
    if i.ground.set_count() > MATERIALIZATION_LIMIT:
        raise GroundTooLarge(i.ground.set_count(), MATERIALIZATION_LIMIT)


def is_idempotent(i: InteriorMap) -> Verdict:
    _require_bounded(i)
    checked = 0
    for u in i.ground.all_value_tuples():
        checked += 1
        iu = i.apply_values(u)
        if i.apply_values(iu) != iu:
            return Verdict(
                ok=False,
                prop="idempotent",
                witness={"u": _name_values(i.ground, u)},
                checked=checked,
            )
    return Verdict(ok=True, prop="idempotent", witness=None, checked=checked)


def is_productive(i: InteriorMap) -> Verdict:
    """Binary meets pass through the map."""
    _require_bounded(i)
    ground = i.ground
    checked = 0
    tuples = list(ground.all_value_tuples())
    for u in tuples:
        iu = i.apply_values(u)
        for v in tuples:
            checked += 1
            m = ground.meet_values((u, v))
            if i.apply_values(m) != ground.meet_values((iu, i.apply_values(v))):
                return Verdict(
                    ok=False,
                    prop="productive",
                    witness={"u": _name_values(ground, u), "v": _name_values(ground, v)},
                    checked=checked,
                )
    return Verdict(ok=True, prop="productive", witness=None, checked=checked)


def is_fully_productive(i: InteriorMap) -> Verdict:
    """Arbitrary meets pass through the map.

    Every subset of the powerset is enumerated while 2^|L^X| stays below
    ``FULL_SUBSET_LIMIT``; beyond that the binary predicate plus the empty
    family decide the property (finite meets fold from binary ones, and the
    empty meet is the top condition).
    """
    _require_bounded(i)
    ground = i.ground
    tuples = list(ground.all_value_tuples())
    if 2 ** len(tuples) > FULL_SUBSET_LIMIT:
        binary = is_productive(i)
        if not binary:
            return Verdict(False, "fully-productive", binary.witness, binary.checked)
        return Verdict(True, "fully-productive", None, binary.checked)
    checked = 0
    for family in powerset(tuples):
        checked += 1
        m = ground.meet_values(family)
        if i.apply_values(m) != ground.meet_values(i.apply_values(u) for u in family):
            return Verdict(
                ok=False,
                prop="fully-productive",
                witness={"family": [_name_values(ground, u) for u in family]},
                checked=checked,
            )
    return Verdict(ok=True, prop="fully-productive", witness=None, checked=checked)


def open_sets(i: InteriorMap) -> frozenset:
    """Fixed points of the map; always contains both constants."""
    _require_bounded(i)
    return frozenset(
        FuzzySet(i.ground, u) for u in i.ground.all_value_tuples() if i.apply_values(u) == u
    )


# -- topologies ---------------------------------------------------------------

@dataclass(frozen=True)
class LTopology:
    """A designated family of open fuzzy sets over one ground.

    Only the constant-top set is required to be open (so the derived
    interior fixes top); closure under joins is reported, not required.
    """

    ground: Ground
    opens: tuple[tuple[int, ...], ...]
    join_closed: bool

    def open_sets(self):
        return tuple(FuzzySet(self.ground, v) for v in self.opens)


def ltopology(ground: Ground, opens) -> LTopology:
    vals = set()
    for v in opens:
        vals.add(v.values if isinstance(v, FuzzySet) else tuple(v))
    top = (ground.lattice.top,) * len(ground.points)
    if top not in vals:
        raise TopMissingFromTopology()
    join_closed = all(
        ground.join_values((a, b)) in vals for a in vals for b in vals
    ) and ground.join_values(()) in vals
    return LTopology(ground=ground, opens=tuple(sorted(vals)), join_closed=join_closed)


def interior_from_topology(t: LTopology) -> InteriorMap:
    """Join of all opens below the argument."""
    ground = t.ground

    def rule(u):
        return ground.join_values(v for v in t.opens if ground.leq_values(v, u))

    return InteriorMap.from_rule(ground, rule, validate=True)


def closure_from_topology(t: LTopology, m: GLMonoid, mode: str = "extensional") -> dict:
    """The closure candidate derived from a topology over a GL-monoid.

    Each open v contributes its pointwise pseudo-complement v -> 0.  In
    "literal" mode the meet ranges over opens above u; in "extensional"
    mode over opens whose pseudo-complement is above u, which makes
    u <= c(u) hold by construction.  Both readings are provided because
    neither is canonically "the" closure; callers pick via ``mode``.
    """
    if not isinstance(m, GLMonoid):
        raise NotGLGround("a GL-monoid with a residuum table is required")
    ground = t.ground
    if m.lattice != ground.lattice:
        raise NotGLGround("monoid lattice differs from the ground lattice")
    if mode not in ("literal", "extensional"):
        raise ValueError(f"unknown closure mode {mode!r}")
    bot = ground.lattice.bottom
    res = m.residuum
    pseudo = {v: tuple(res[a][bot] for a in v) for v in t.opens}
    table = {}
    for u in ground.all_value_tuples():
        if mode == "literal":
            qualifying = (pseudo[v] for v in t.opens if ground.leq_values(u, v))
        else:
            qualifying = (pseudo[v] for v in t.opens if ground.leq_values(u, pseudo[v]))
        table[FuzzySet(ground, u)] = FuzzySet(ground, ground.meet_values(qualifying))
    return table
