"""Connected components and the reflection-property deciders.

Each decidable property comes in two flavours: a theorem-based shortcut on
connected components, and a definitional brute-force oracle quantifying over
an enumerated corpus of test objects.  The two must always agree; the oracles
exist to validate the shortcuts.

"Image is trivial" is decided as image.order == 1 throughout; the empty
semigroup has an empty image and therefore is never connected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import FiniteSemigroup, Homomorphism, enumerate_homomorphisms
from .errors import CorpusMissing, NotSurjective
from .limits import ConeResult, product, pullback
from .reflection import (
    VarietyConfig,
    factor_through_unit,
    reflect,
    reflect_morphism,
    variety_congruence,
)

PROPERTY_NAMES = (
    "simple",
    "semi_left_exact",
    "stable_units",
    "localization_sufficient",
    "left_exact_oracle",
)


@dataclass
class PropertyReport:
    """Verdict for one property with replayable counterexample witnesses."""

    variety: str
    property: str
    verdict: bool
    witnesses: list[dict] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.property not in PROPERTY_NAMES:
            raise ValueError(f"unknown property {self.property!r}")
        if not self.verdict and not self.witnesses:
            raise ValueError("a false verdict must carry a witness")

    def as_dict(self) -> dict:
        return {
            "variety": self.variety,
            "property": self.property,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "bounds": self.bounds,
        }


@dataclass(frozen=True)
class ConnectedComponent:
    """Fiber of the unit over one point of the image, as a sub-semigroup."""

    parent: FiniteSemigroup
    point: int
    carrier: FiniteSemigroup
    inclusion: Homomorphism


def connected_component(C: FiniteSemigroup, V: VarietyConfig, m: int) -> ConnectedComponent:
    """The fiber of the unit of C over point m of the image.

    Matches pullback(unit, point m) after the canonical renumbering; closure
    of the fiber uses idempotency of the image, which holds for every
    idempotent subvariety.
    """
    r = reflect(C, V)
    if not 0 <= m < r.image.order:
        raise ValueError(f"point {m} not in image of order {r.image.order}")
    fiber = [c for c in C.elements if r.unit.map[c] == m]
    index = {e: x for x, e in enumerate(fiber)}
    for a in fiber:
        for b in fiber:
            if C.table[a][b] not in index:
                raise ValueError("fiber is not closed; subvariety not idempotent?")
    table = tuple(tuple(index[C.table[a][b]] for b in fiber) for a in fiber)
    carrier = FiniteSemigroup(len(fiber), table)
    return ConnectedComponent(C, m, carrier, Homomorphism(carrier, C, tuple(fiber)))


def connected_components(C: FiniteSemigroup, V: VarietyConfig) -> list[ConnectedComponent]:
    return [connected_component(C, V, m) for m in reflect(C, V).image.elements]


def is_connected(A: FiniteSemigroup, V: VarietyConfig) -> bool:
    """True iff the image of A is trivial; false for the empty semigroup."""
    # Equivalent to reflect(A, V).image.order == 1 but skips the quotient
    # build, keeping corpus-product sweeps out of the reflection cache.
    return variety_congruence(A, V).class_count == 1


def _component_witness(comp: ConnectedComponent, V: VarietyConfig) -> dict:
    return {
        "table": comp.parent.rows(),
        "point": comp.point,
        "fiber": list(comp.inclusion.map),
        "component_table": comp.carrier.rows(),
        "component_image_order": reflect(comp.carrier, V).image.order,
    }


def check_semi_left_exact(C: FiniteSemigroup, V: VarietyConfig) -> PropertyReport:
    """Theorem shortcut: every connected component of C is connected."""
    witnesses = [
        _component_witness(comp, V)
        for comp in connected_components(C, V)
        if not is_connected(comp.carrier, V)
    ]
    return PropertyReport(V.name, "semi_left_exact", not witnesses, witnesses)


def _member_corpus(V: VarietyConfig, max_order: int, subvariety: bool) -> list[FiniteSemigroup]:
    from .enumeration import HARD_ORDER_BOUND, cached_corpus

    if max_order > HARD_ORDER_BOUND:
        raise CorpusMissing(
            f"no corpus beyond order {HARD_ORDER_BOUND} (requested {max_order})")
    ids = V.subvariety_identities if subvariety else V.domain_identities
    out = []
    for n in range(max_order + 1):
        corpus = cached_corpus(n, ids if ids else None)
        out.extend(FiniteSemigroup(n, t) for t in corpus.tables)
    return out


def _unit_square_preserved(C: FiniteSemigroup, V: VarietyConfig,
                           g: Homomorphism) -> tuple[bool, ConeResult, Homomorphism]:
    """Does the reflector preserve the pullback of g along the unit of C?

    Because the reflector inverts units, preservation reduces to the induced
    map image(pullback) -> image(g's source) being a bijection.
    """
    r = reflect(C, V)
    cone = pullback(r.unit, g)
    rd = reflect(g.source, V)
    comparison = factor_through_unit(rd.unit.compose(cone.legs[1]), V)
    return comparison.is_bijective, cone, comparison


def oracle_semi_left_exact(
    C: FiniteSemigroup,
    V: VarietyConfig,
    max_m_order: int = 3,
    mode: str = "unit",
) -> PropertyReport:
    """Definitional oracle: the reflector preserves every pullback of a
    subvariety member along the unit of C, for members up to max_m_order.

    mode "right_edge" instead quantifies all cospans C -> N <- M with both
    N and M subvariety members, checking full pullback preservation.
    """
    bounds = {"max_m_order": max_m_order, "mode": mode}
    witnesses = []
    ms = _member_corpus(V, max_m_order, subvariety=True)
    if mode == "unit":
        r = reflect(C, V)
        for M in ms:
            for g in enumerate_homomorphisms(M, r.image):
                ok, cone, comparison = _unit_square_preserved(C, V, g)
                if not ok:
                    witnesses.append({
                        "table": C.rows(),
                        "m_table": M.rows(),
                        "g": list(g.map),
                        "pullback_order": cone.apex.order,
                        "comparison": list(comparison.map),
                    })
    elif mode == "right_edge":
        for N in ms:
            for f in enumerate_homomorphisms(C, N):
                for M in ms:
                    for g in enumerate_homomorphisms(M, N):
                        rep = oracle_pullback_preserved(f, g, V)
                        if not rep.verdict:
                            witnesses.append(rep.witnesses[0])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return PropertyReport(V.name, "semi_left_exact", not witnesses, witnesses, bounds)


def check_stable_units_pair(
    C: FiniteSemigroup, D: FiniteSemigroup, V: VarietyConfig
) -> PropertyReport:
    """Theorem shortcut: every product of a component of C with a component
    of D is connected."""
    witnesses = []
    for cm in connected_components(C, V):
        for dn in connected_components(D, V):
            cone = product(cm.carrier, dn.carrier)
            if not is_connected(cone.apex, V):
                witnesses.append({
                    "left_table": C.rows(),
                    "right_table": D.rows(),
                    "left_point": cm.point,
                    "right_point": dn.point,
                    "product_table": cone.apex.rows(),
                    "product_image_order": reflect(cone.apex, V).image.order,
                })
    return PropertyReport(V.name, "stable_units", not witnesses, witnesses)


def oracle_stable_units(
    C: FiniteSemigroup,
    V: VarietyConfig,
    max_d_order: int = 3,
    mode: str = "unit",
) -> PropertyReport:
    """Definitional oracle: the reflector preserves every pullback along the
    unit of C, quantifying the opposite leg over all domain members up to
    max_d_order.

    mode "m_base" quantifies cospans C -> N <- D whose base N is a
    subvariety member, checking full pullback preservation.
    """
    bounds = {"max_d_order": max_d_order, "mode": mode}
    witnesses = []
    if mode == "unit":
        ds = _member_corpus(V, max_d_order, subvariety=False)
        r = reflect(C, V)
        for D in ds:
            for g in enumerate_homomorphisms(D, r.image):
                ok, cone, comparison = _unit_square_preserved(C, V, g)
                if not ok:
                    witnesses.append({
                        "table": C.rows(),
                        "d_table": D.rows(),
                        "g": list(g.map),
                        "pullback_order": cone.apex.order,
                        "comparison": list(comparison.map),
                    })
    elif mode == "m_base":
        ns = _member_corpus(V, max_d_order, subvariety=True)
        ds = _member_corpus(V, max_d_order, subvariety=False)
        for N in ns:
            for f in enumerate_homomorphisms(C, N):
                for D in ds:
                    for g in enumerate_homomorphisms(D, N):
                        rep = oracle_pullback_preserved(f, g, V)
                        if not rep.verdict:
                            witnesses.append(rep.witnesses[0])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return PropertyReport(V.name, "stable_units", not witnesses, witnesses, bounds)


def check_simple(f: Homomorphism, V: VarietyConfig) -> PropertyReport:
    """Is the comparison map of f's unit-pullback diagram inverted by the
    reflector?

    Builds the pullback of the target's unit along the induced image
    morphism, the canonical map from the source into it, and decides whether
    its reflection is a bijection.
    """
    ra = reflect(f.source, V)
    rb = reflect(f.target, V)
    hif = reflect_morphism(f, V)
    cone = pullback(rb.unit, hif)
    index = {lab: i for i, lab in enumerate(cone.element_labels)}
    w = Homomorphism(
        f.source, cone.apex,
        tuple(index[(f.map[a], ra.unit.map[a])] for a in f.source.elements),
    )
    rp = reflect(cone.apex, V)
    iw = factor_through_unit(rp.unit.compose(w), V)
    witnesses = []
    if not iw.is_bijective:
        witnesses.append({
            "source_table": f.source.rows(),
            "target_table": f.target.rows(),
            "map": list(f.map),
            "pullback_table": cone.apex.rows(),
            "w": list(w.map),
            "iw": list(iw.map),
            "iw_source_order": ra.image.order,
            "iw_target_order": rp.image.order,
        })
    return PropertyReport(V.name, "simple", not witnesses, witnesses)


def check_localization_condition(
    f: Homomorphism, g: Homomorphism, V: VarietyConfig
) -> PropertyReport:
    """Sufficient condition for left-exactness on one cospan: every pullback
    of a component of f's source with a component of g's source (over the
    shared codomain) is connected.  Empty pullbacks are recorded explicitly;
    the empty semigroup is not connected."""
    if f.target != g.target:
        raise ValueError("cospan legs must share a codomain")
    witnesses = []
    for am in connected_components(f.source, V):
        for bn in connected_components(g.source, V):
            cone = pullback(f.compose(am.inclusion), g.compose(bn.inclusion))
            if not is_connected(cone.apex, V):
                witnesses.append({
                    "left_table": f.source.rows(),
                    "right_table": g.source.rows(),
                    "base_table": f.target.rows(),
                    "f": list(f.map),
                    "g": list(g.map),
                    "left_point": am.point,
                    "right_point": bn.point,
                    "pullback_table": cone.apex.rows(),
                    "empty": cone.apex.order == 0,
                })
    return PropertyReport(V.name, "localization_sufficient", not witnesses, witnesses)


def oracle_pullback_preserved(
    f: Homomorphism, g: Homomorphism, V: VarietyConfig
) -> PropertyReport:
    """Left-exactness oracle on one cospan: compare the reflection of the
    pullback with the pullback of the reflected cospan via the canonical
    comparison map."""
    if f.target != g.target:
        raise ValueError("cospan legs must share a codomain")
    cone = pullback(f, g)
    ra = reflect(f.source, V)
    rb = reflect(g.source, V)
    image_cone = pullback(reflect_morphism(f, V), reflect_morphism(g, V))
    index = {lab: i for i, lab in enumerate(image_cone.element_labels)}
    into_image = Homomorphism(
        cone.apex, image_cone.apex,
        tuple(index[(ra.unit.map[a], rb.unit.map[b])] for a, b in cone.element_labels),
    )
    comparison = factor_through_unit(into_image, V)
    witnesses = []
    if not comparison.is_bijective:
        witnesses.append({
            "left_table": f.source.rows(),
            "right_table": g.source.rows(),
            "base_table": f.target.rows(),
            "f": list(f.map),
            "g": list(g.map),
            "pullback_table": cone.apex.rows(),
            "pullback_image_order": reflect(cone.apex, V).image.order,
            "image_pullback_order": image_cone.apex.order,
            "comparison": list(comparison.map),
        })
    return PropertyReport(V.name, "left_exact_oracle", not witnesses, witnesses)


def check_products_preserved(
    C: FiniteSemigroup, D: FiniteSemigroup, V: VarietyConfig
) -> bool:
    """Does the canonical map image(C x D) -> image(C) x image(D) biject?"""
    cone = product(C, D)
    rc = reflect(C, V)
    rd = reflect(D, V)
    image_cone = product(rc.image, rd.image)
    index = {lab: i for i, lab in enumerate(image_cone.element_labels)}
    into_image = Homomorphism(
        cone.apex, image_cone.apex,
        tuple(index[(rc.unit.map[a], rd.unit.map[b])] for a, b in cone.element_labels),
    )
    return factor_through_unit(into_image, V).is_bijective


def fiber_injectivity_lemma(f: Sequence[int], g: Sequence[int], c_size: int) -> bool:
    """Self-test of the set-level proof device.

    f: A -> B and g: B -> C are surjections given as value sequences, with
    B = {0..len(g)-1} and C = {0..c_size-1}.  Returns True iff
    [g is injective] agrees with [for every c, f maps the fiber of g o f
    over c to a single point].  Expected to hold always.
    """
    b_size = len(g)
    if any(not 0 <= v < b_size for v in f):
        raise ValueError("f entry out of range")
    if any(not 0 <= v < c_size for v in g):
        raise ValueError("g entry out of range")
    if len(set(f)) != b_size:
        raise NotSurjective("f is not surjective")
    if len(set(g)) != c_size:
        raise NotSurjective("g is not surjective")
    g_injective = len(set(g)) == b_size
    collapsed = all(
        len({f[a] for a in range(len(f)) if g[f[a]] == c}) == 1
        for c in range(c_size)
    )
    return g_injective == collapsed
