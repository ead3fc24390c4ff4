"""Continuity, openness, and initial structures for ground morphisms.

A morphism into a structured space is continuous when the backward image of
every interior sits below the interior of the backward image; it is open
under the reverse inequality.  Both notions compose.

For a single morphism the initial interior is backward after the target
interior after the right adjoint of backward; it is the least interior map
on the domain making the morphism continuous (any smaller one breaks
continuity, any other candidate dominates it).  For a structured source the
joint initial structure is therefore the pointwise JOIN of the per-morphism
initial maps: the least structure above all of them.  A pointwise meet --
which the traditional display suggests -- fails to keep the source
morphisms continuous as soon as two targets disagree (take two identity
morphisms onto the discrete and the least space: the meet is the least
operator, which is not continuous into the discrete target).  A regression
property keeps that corrected polarity honest, mirroring the corrected
least operator.

``verify_initiality`` checks the defining universal property extensionally:
a morphism from any bounded test space is continuous into the lift exactly
when all composites are continuous.  The quantifier over test interiors is
discharged exactly by a least-constrained-operator argument (see
``_least_dominating``), and can also be run by literal enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import GroundMismatch, NotContinuous, PropertyPreconditionFailed
from .interior import InteriorMap, discrete, is_fully_productive, is_idempotent, least
from .powerset import FuzzySet, Ground, GroundMorphism, Verdict, vb_backward, vb_right_adjoint


@dataclass(frozen=True)
class VBSpace:
    """A ground together with an interior map on it."""

    ground: Ground
    interior: InteriorMap

    def __post_init__(self):
        if self.interior.ground != self.ground:
            raise GroundMismatch("interior map lives on a different ground")


@dataclass(frozen=True)
class StructuredSource:
    """A domain ground with a family of morphisms into structured spaces."""

    domain: Ground
    arms: tuple  # of (GroundMorphism, VBSpace)

    def __post_init__(self):
        for g, space in self.arms:
            if g.dom != self.domain:
                raise GroundMismatch("arm morphism does not start at the source domain")
            if g.cod != space.ground:
                raise GroundMismatch("arm morphism does not end at its space")


# -- continuity and openness --------------------------------------------------

def is_continuous(g: GroundMorphism, src: VBSpace, dst: VBSpace) -> Verdict:
    """Backward of the target interior below the source interior of backward,
    for every fuzzy set on the codomain."""
    _check_ends(g, src, dst)
    checked = 0
    for v in dst.ground.all_sets():
        checked += 1
        lhs = vb_backward(g, dst.interior.apply(v))
        rhs = src.interior.apply(vb_backward(g, v))
        if not lhs.leq(rhs):
            return Verdict(
                ok=False,
                prop="continuity",
                witness={"v": v.as_dict(), "lhs": lhs.as_dict(), "rhs": rhs.as_dict()},
                checked=checked,
            )
    return Verdict(ok=True, prop="continuity", witness=None, checked=checked)


def is_open_morphism(g: GroundMorphism, src: VBSpace, dst: VBSpace) -> Verdict:
    """The reverse inequality: source interior of backward below backward of
    the target interior."""
    _check_ends(g, src, dst)
    checked = 0
    for v in dst.ground.all_sets():
        checked += 1
        lhs = src.interior.apply(vb_backward(g, v))
        rhs = vb_backward(g, dst.interior.apply(v))
        if not lhs.leq(rhs):
            return Verdict(
                ok=False,
                prop="openness",
                witness={"v": v.as_dict(), "lhs": lhs.as_dict(), "rhs": rhs.as_dict()},
                checked=checked,
            )
    return Verdict(ok=True, prop="openness", witness=None, checked=checked)


def _check_ends(g: GroundMorphism, src: VBSpace, dst: VBSpace) -> None:
    if g.dom != src.ground:
        raise GroundMismatch("morphism domain differs from the source space")
    if g.cod != dst.ground:
        raise GroundMismatch("morphism codomain differs from the target space")


def compose(g2: GroundMorphism, g1: GroundMorphism) -> GroundMorphism:
    """g2 after g1; backward of the composite is backward(g1) after
    backward(g2)."""
    if g1.cod != g2.dom:
        raise GroundMismatch("codomain of the first leg differs from the domain of the second")
    return GroundMorphism(
        dom=g1.dom,
        cod=g2.cod,
        f=tuple(g2.f[y] for y in g1.f),
        phi_op=tuple(g1.phi_op[g2.phi_op[c]] for c in range(len(g2.cod.lattice))),
    )


# -- initial structures ---------------------------------------------------------

def initial_interior(g: GroundMorphism, target: VBSpace) -> InteriorMap:
    """Backward after the target interior after the right adjoint.

    This is the least interior map on the domain of ``g`` making ``g``
    continuous into the target.
    """
    if g.cod != target.ground:
        raise GroundMismatch("morphism codomain differs from the target space")
    ground = g.dom

    def rule(u):
        lifted = vb_right_adjoint(g, FuzzySet(ground, u))
        return vb_backward(g, target.interior.apply(lifted)).values

    return InteriorMap.from_rule(ground, rule, validate=True)


def initial_from_source(s: StructuredSource) -> InteriorMap:
    """The joint initial structure: pointwise join of the per-arm initial
    interiors; the empty source yields the least operator (empty join)."""
    per_arm = [initial_interior(g, space) for g, space in s.arms]
    if not per_arm:
        return least(s.domain)
    ground = s.domain

    def rule(u):
        return ground.join_values(i.apply_values(u) for i in per_arm)

    return InteriorMap.from_rule(ground, rule, validate=True)


def literal_meet_source_rule(s: StructuredSource):
    """The uncorrected pointwise-meet lift, kept as a rule for the polarity
    regression: it passes the interior axioms but loses continuity of the
    source morphisms on heterogeneous targets."""
    per_arm = [initial_interior(g, space) for g, space in s.arms]
    ground = s.domain
    if not per_arm:
        return discrete(ground).apply_values

    def rule(u):
        return ground.meet_values(i.apply_values(u) for i in per_arm)

    return rule


# -- initiality verification ----------------------------------------------------

def _least_dominating(ground: Ground, constraints) -> dict:
    """Table of the least interior map i with i(w) >= c for all (w, c).

    Requires c <= w for each pair (true for every constraint produced by a
    continuity condition).  The map sends w to the join of the qualifying
    lower bounds plus the least operator's value; it is contractive,
    monotone and fixes top, and every interior map satisfying the
    constraints dominates it pointwise.
    """
    lat = ground.lattice
    top = (lat.top,) * len(ground.points)
    bot = (lat.bottom,) * len(ground.points)
    table = {}
    for w in ground.all_value_tuples():
        lower = [c for wc, c in constraints if ground.leq_values(wc, w)]
        if w == top:
            table[w] = top
        else:
            table[w] = ground.join_values(lower) if lower else bot
    return table


def continuity_constraints(g: GroundMorphism, target: VBSpace):
    """(backward(v), backward(interior(v))) pairs; an interior i on the
    domain makes g continuous into the target iff i dominates them all."""
    pairs = []
    for v in target.ground.all_sets():
        w = vb_backward(g, v)
        c = vb_backward(g, target.interior.apply(v))
        pairs.append((w.values, c.values))
    return pairs


def verify_initiality(
    s: StructuredSource,
    lift: InteriorMap,
    *,
    test_grounds,
    operator_mode: str = "reduced",
    max_operators: int | None = None,
) -> Verdict:
    """Check the universal property of ``lift`` extensionally.

    For every test ground in ``test_grounds``, every morphism (g, psi) from
    it into the source domain, and every interior on the test ground, the
    morphism must be continuous into (domain, lift) exactly when all the
    composites through the source arms are continuous.

    ``operator_mode`` "reduced" discharges the quantifier over test
    interiors exactly: the interiors making a fixed family of morphisms
    continuous form a principal filter, so each direction of the
    equivalence needs checking only at the least element of the opposite
    filter.  Mode "enumerate" runs the literal stream of interior maps
    instead (optionally capped at ``max_operators``).
    """
    from .powerset import all_morphisms  # local import to avoid cycle at load
    from .search import enumerate_interior_maps

    if lift.ground != s.domain:
        raise GroundMismatch("lift lives on a different ground")
    lift_pairs = [(uv, lift.apply_values(uv)) for uv in s.domain.all_value_tuples()]
    arm_pairs = [continuity_constraints(g, space) for g, space in s.arms]
    checked = 0
    for z_ground in test_grounds:
        for g in all_morphisms(z_ground, s.domain):
            # transport the constraint pairs along backward of (g, psi)
            bw = lambda vals: vb_backward(g, FuzzySet(s.domain, vals)).values
            lift_c = [(bw(w), bw(c)) for w, c in lift_pairs]
            arms_c = [(bw(w), bw(c)) for pairs in arm_pairs for w, c in pairs]
            if operator_mode == "reduced":
                candidates = [
                    ("hard", _least_dominating(z_ground, arms_c)),
                    ("easy", _least_dominating(z_ground, lift_c)),
                ]
                for direction, table in candidates:
                    checked += 1
                    if direction == "hard":
                        # composites continuous at this interior; is g continuous?
                        bad = _first_violation(z_ground, table, lift_c)
                        if bad is not None:
                            return _initiality_witness(z_ground, g, "only-if", bad, checked)
                    else:
                        bad = _first_violation(z_ground, table, arms_c)
                        if bad is not None:
                            return _initiality_witness(z_ground, g, "if", bad, checked)
            elif operator_mode == "enumerate":
                stream = enumerate_interior_maps(z_ground)
                for k, i_z in enumerate(stream):
                    if max_operators is not None and k >= max_operators:
                        break
                    checked += 1
                    table = i_z.table()
                    g_cont = _first_violation(z_ground, table, lift_c) is None
                    comp_cont = _first_violation(z_ground, table, arms_c) is None
                    if g_cont != comp_cont:
                        direction = "if" if g_cont else "only-if"
                        bad = {"interior_signature": list(i_z.signature())}
                        return _initiality_witness(z_ground, g, direction, bad, checked)
            else:
                raise ValueError(f"unknown operator mode {operator_mode!r}")
    return Verdict(ok=True, prop="initiality", witness=None, checked=checked)


def _first_violation(ground: Ground, interior_table: dict, pairs) -> dict | None:
    lat = ground.lattice
    for w, c in pairs:
        if not ground.leq_values(c, interior_table[w]):
            name = lambda vals: {x: lat.name(v) for x, v in zip(ground.points, vals)}
            return {
                "w": name(w),
                "required": name(c),
                "interior_at_w": name(interior_table[w]),
            }
    return None


def _initiality_witness(z_ground, g, direction, bad, checked) -> Verdict:
    return Verdict(
        ok=False,
        prop="initiality",
        witness={
            "test_points": list(z_ground.points),
            "morphism": g.describe(),
            "direction": direction,
            "violation": bad,
        },
        checked=checked,
    )


def meet_interchange_report(g: GroundMorphism, max_family: int = 3) -> Verdict:
    """Does backward commute with pointwise meets for this morphism?

    Join preservation of phi_op is an axiom, meet preservation is not; this
    probe reports the first failing family of fuzzy sets, if any.
    """
    cod_sets = list(g.cod.all_sets())
    checked = 0
    for size in range(max_family + 1):
        for family in product(cod_sets, repeat=size):
            checked += 1
            lhs = vb_backward(g, FuzzySet(g.cod, g.cod.meet_values(b.values for b in family)))
            rhs_vals = g.dom.meet_values(vb_backward(g, b).values for b in family)
            if lhs.values != rhs_vals:
                return Verdict(
                    ok=False,
                    prop="meet-interchange",
                    witness={
                        "family": [b.as_dict() for b in family],
                        "backward_of_meet": lhs.as_dict(),
                        "meet_of_backwards": dict(zip(g.dom.points, rhs_vals)),
                    },
                    checked=checked,
                )
    return Verdict(ok=True, prop="meet-interchange", witness=None, checked=checked)


# -- preservation of operator properties -------------------------------------

def preserves_idempotency_check(g: GroundMorphism, target: VBSpace) -> Verdict:
    """Initial interiors of idempotent targets are idempotent."""
    precondition = is_idempotent(target.interior)
    if not precondition:
        raise PropertyPreconditionFailed("idempotency", precondition.witness)
    lifted = initial_interior(g, target)
    verdict = is_idempotent(lifted)
    return Verdict(verdict.ok, "preserves-idempotency", verdict.witness, verdict.checked)


def preserves_full_productivity_check(g: GroundMorphism, target: VBSpace) -> Verdict:
    """Initial interiors of fully productive targets are fully productive."""
    precondition = is_fully_productive(target.interior)
    if not precondition:
        raise PropertyPreconditionFailed("full productivity", precondition.witness)
    lifted = initial_interior(g, target)
    verdict = is_fully_productive(lifted)
    return Verdict(verdict.ok, "preserves-full-productivity", verdict.witness, verdict.checked)


def preimage_of_open_is_open(g: GroundMorphism, src: VBSpace, dst: VBSpace, v: FuzzySet) -> Verdict:
    """Backward images of open sets along continuous morphisms are open."""
    cont = is_continuous(g, src, dst)
    if not cont:
        raise NotContinuous(cont.witness)
    if dst.interior.apply(v).values != v.values:
        raise PropertyPreconditionFailed("openness of v", v.as_dict())
    w = vb_backward(g, v)
    ok = src.interior.apply(w).values == w.values
    return Verdict(
        ok=ok,
        prop="open-preimage",
        witness=None if ok else {"v": v.as_dict(), "preimage": w.as_dict()},
        checked=1,
    )
