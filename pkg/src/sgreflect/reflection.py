"""Variety-defined reflections of finite semigroups.

A variety config is a pair (domain identities, subvariety identities).  The
reflector sends a semigroup to its quotient by the least congruence forcing
the subvariety identities; the unit is the projection.  Because the
reflection is a literal quotient, re-reflecting an image is the identity and
"image is trivial" reduces to an order check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import product as iter_product
from typing import Iterable, Sequence

from .congruence import Partition, congruence_closure, quotient
from .core import (
    FiniteSemigroup,
    Homomorphism,
    enumerate_homomorphisms,
    idempotents,
    is_homomorphism,
)
from .errors import NotInDomain, NotInSubvariety
from . import limits

Word = tuple[int, ...]
Identity = tuple[Word, Word]

_VARIABLE_NAMES = "xyzuvw"


def parse_identity(text: str) -> Identity:
    """Parse an identity like "xx=x" or "xy=yx" into variable-index words."""
    lhs, sep, rhs = text.partition("=")
    if not sep:
        raise ValueError(f"identity needs '=': {text!r}")
    variables: dict[str, int] = {}

    def word(s: str) -> Word:
        s = s.strip()
        if not s or not s.isalpha():
            raise ValueError(f"bad word in identity: {s!r}")
        return tuple(variables.setdefault(ch, len(variables)) for ch in s)

    return word(lhs), word(rhs)


def format_identity(ident: Identity) -> str:
    u, v = ident
    return "".join(_VARIABLE_NAMES[i] for i in u) + "=" + "".join(
        _VARIABLE_NAMES[i] for i in v
    )


def _sorted_identities(ids: Iterable[Identity]) -> list[Identity]:
    return sorted(ids)


@dataclass(frozen=True)
class VarietyConfig:
    """Domain variety plus the subvariety reflected into."""

    name: str
    domain_identities: frozenset[Identity]
    subvariety_identities: frozenset[Identity]

    def __post_init__(self):
        object.__setattr__(self, "domain_identities", frozenset(self.domain_identities))
        object.__setattr__(self, "subvariety_identities",
                           frozenset(self.subvariety_identities))
        if not self.subvariety_identities >= self.domain_identities:
            raise ValueError("subvariety identities must contain domain identities")

    def identity_strings(self) -> dict[str, list[str]]:
        return {
            "domain": [format_identity(i) for i in _sorted_identities(self.domain_identities)],
            "subvariety": [format_identity(i) for i in _sorted_identities(self.subvariety_identities)],
        }


IDEMPOTENT = parse_identity("xx=x")
COMMUTATIVE = parse_identity("xy=yx")

SGR_TO_SLAT = VarietyConfig("slat", frozenset(), frozenset({IDEMPOTENT, COMMUTATIVE}))
SGR_TO_BAND = VarietyConfig("band", frozenset(), frozenset({IDEMPOTENT}))
BAND_TO_SLAT = VarietyConfig(
    "band-slat", frozenset({IDEMPOTENT}), frozenset({IDEMPOTENT, COMMUTATIVE})
)

BUILTIN_VARIETIES = {v.name: v for v in (SGR_TO_SLAT, SGR_TO_BAND, BAND_TO_SLAT)}


def eval_word(A: FiniteSemigroup, word: Word, assignment: Sequence[int]) -> int:
    value = assignment[word[0]]
    for s in word[1:]:
        value = A.table[value][assignment[s]]
    return value


def satisfies_identities(A: FiniteSemigroup, ids: Iterable[Identity]) -> bool:
    """True iff every identity holds under every variable assignment."""
    for u, v in ids:
        nvars = max(max(u), max(v)) + 1
        for assignment in iter_product(A.elements, repeat=nvars):
            if eval_word(A, u, assignment) != eval_word(A, v, assignment):
                return False
    return True


def variety_congruence(A: FiniteSemigroup, V: VarietyConfig) -> Partition:
    """Least congruence whose quotient satisfies the subvariety identities."""
    if not satisfies_identities(A, V.domain_identities):
        raise NotInDomain(f"semigroup is not in the domain of {V.name}")
    pairs = []
    for u, v in _sorted_identities(V.subvariety_identities):
        nvars = max(max(u), max(v)) + 1
        for assignment in iter_product(A.elements, repeat=nvars):
            pairs.append((eval_word(A, u, assignment), eval_word(A, v, assignment)))
    return congruence_closure(A, pairs)


@dataclass(frozen=True)
class ReflectionResult:
    source: FiniteSemigroup
    image: FiniteSemigroup
    unit: Homomorphism


@cache
def reflect(A: FiniteSemigroup, V: VarietyConfig) -> ReflectionResult:
    """Reflect A into the subvariety: image = quotient, unit = projection."""
    image, unit = quotient(A, variety_congruence(A, V))
    assert unit.is_surjective
    assert satisfies_identities(image, V.subvariety_identities)
    return ReflectionResult(A, image, unit)


def reflect_morphism(f: Homomorphism, V: VarietyConfig) -> Homomorphism:
    """The unique induced morphism between images commuting with the units."""
    ra = reflect(f.source, V)
    rb = reflect(f.target, V)
    out = [-1] * ra.image.order
    for a in f.source.elements:
        block = ra.unit.map[a]
        target = rb.unit.map[f.map[a]]
        assert out[block] in (-1, target), "induced map not well defined"
        out[block] = target
    return Homomorphism(ra.image, rb.image, tuple(out))


def factor_through_unit(h: Homomorphism, V: VarietyConfig) -> Homomorphism:
    """Unique hbar with hbar o unit == h, for h into a subvariety member."""
    if not satisfies_identities(h.target, V.subvariety_identities):
        raise NotInSubvariety(f"codomain does not satisfy {V.name} identities")
    r = reflect(h.source, V)
    out = [-1] * r.image.order
    for c in h.source.elements:
        block = r.unit.map[c]
        assert out[block] in (-1, h.map[c]), "factorization not well defined"
        out[block] = h.map[c]
    return Homomorphism(r.image, h.target, tuple(out))


@dataclass
class ConditionReport:
    condition: str
    verdict: bool
    witnesses: list[dict] = field(default_factory=list)


def check_condition_e(C: FiniteSemigroup, V: VarietyConfig) -> bool:
    """Every point of the image is the unit image of an idempotent of C."""
    r = reflect(C, V)
    hit = {r.unit.map[e] for e in idempotents(C)}
    return len(hit) == r.image.order


def check_ground_conditions(
    V: VarietyConfig, corpus: Sequence[FiniteSemigroup]
) -> dict[str, ConditionReport]:
    """Desk-scale checks of the four ground-structure conditions.

    (a) underlying sets of products and of pullbacks along units equal the
        set-theoretic product / fiber product (regression assertion: they are
        such by construction);
    (b) bijective homomorphisms between subvariety members have
        homomorphic inverses;
    (c) every unit over the corpus is surjective;
    (d) every element of every subvariety member is idempotent.
    """
    reports = {c: ConditionReport(c, True) for c in "abcd"}

    members = list(corpus)
    subvariety = [A for A in members
                  if satisfies_identities(A, V.subvariety_identities)]

    # (a) products of all corpus pairs, and unit fibers as pullbacks.
    for A in members:
        for B in members:
            cone = limits.product(A, B)
            expected = tuple((a, b) for a in A.elements for b in B.elements)
            if cone.element_labels != expected:
                reports["a"].witnesses.append(
                    {"kind": "product", "left": A.rows(), "right": B.rows()})
    for A in members:
        r = reflect(A, V)
        for m in r.image.elements:
            if r.image.table[m][m] != m:
                continue  # no morphism from the terminal picks a non-idempotent
            cone = limits.pullback(r.unit, limits.point_map(r.image, m))
            expected = tuple((c, 0) for c in A.elements if r.unit.map[c] == m)
            if cone.element_labels != expected:
                reports["a"].witnesses.append(
                    {"kind": "unit_fiber", "table": A.rows(), "point": m})

    # (b) inverses of bijective homs within the subvariety.
    for M in subvariety:
        for N in subvariety:
            if M.order != N.order:
                continue
            for f in enumerate_homomorphisms(M, N):
                if not f.is_bijective:
                    continue
                inv = [0] * N.order
                for x, v in enumerate(f.map):
                    inv[v] = x
                if not is_homomorphism(inv, N, M):
                    reports["b"].witnesses.append(
                        {"source": M.rows(), "target": N.rows(), "map": list(f.map)})

    # (c) surjectivity of units.
    for A in members:
        r = reflect(A, V)
        if not r.unit.is_surjective:
            reports["c"].witnesses.append(
                {"table": A.rows(), "unit": list(r.unit.map)})

    # (d) idempotency of subvariety members.
    for M in subvariety:
        for e in M.elements:
            if M.table[e][e] != e:
                reports["d"].witnesses.append(
                    {"table": M.rows(), "element": e})

    for rep in reports.values():
        rep.verdict = not rep.witnesses
    return reports
