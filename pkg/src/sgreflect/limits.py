"""Finite limits in the category of finite semigroups.

Terminal object, binary products and pullbacks; every diagram used by the
property deciders reduces to these.  Underlying sets are literal set
products / fiber products, so the forgetful functor preserves them by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, Homomorphism


@dataclass(frozen=True)
class ConeResult:
    """Apex plus legs; element_labels[i] gives apex element i's coordinate pair."""

    apex: FiniteSemigroup
    legs: tuple[Homomorphism, ...]
    element_labels: tuple[tuple[int, int], ...]


def terminal() -> FiniteSemigroup:
    return FiniteSemigroup(1, ((0,),))


def is_terminal(A: FiniteSemigroup) -> bool:
    # The empty semigroup is not terminal: it admits no map from anything
    # nonempty.
    return A.order == 1


def point_map(M: FiniteSemigroup, e: int) -> Homomorphism:
    """The morphism T -> M picking element e (e must be idempotent)."""
    return Homomorphism(terminal(), M, (e,))


def _pair_semigroup(
    A: FiniteSemigroup, B: FiniteSemigroup, labels: list[tuple[int, int]]
) -> tuple[FiniteSemigroup, Homomorphism, Homomorphism]:
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    ta, tb = A.table, B.table
    table = tuple(
        tuple(index[(ta[labels[i][0]][labels[j][0]], tb[labels[i][1]][labels[j][1]])]
              for j in range(n))
        for i in range(n)
    )
    apex = FiniteSemigroup(n, table)
    p1 = Homomorphism(apex, A, tuple(a for a, _ in labels))
    p2 = Homomorphism(apex, B, tuple(b for _, b in labels))
    return apex, p1, p2


def product(A: FiniteSemigroup, B: FiniteSemigroup) -> ConeResult:
    """Componentwise product on pairs (a, b) in lexicographic order."""
    labels = [(a, b) for a in A.elements for b in B.elements]
    apex, p1, p2 = _pair_semigroup(A, B, labels)
    return ConeResult(apex, (p1, p2), tuple(labels))


def pullback(f: Homomorphism, g: Homomorphism) -> ConeResult:
    """Pullback of f: A -> C and g: B -> C, as a sub-semigroup of A x B.

    Apex elements are the pairs (a, b) with f(a) == g(b), in lexicographic
    order; the empty apex is legal.
    """
    if f.target != g.target:
        raise ValueError("pullback legs must share a codomain")
    labels = [
        (a, b) for a in f.source.elements for b in g.source.elements
        if f.map[a] == g.map[b]
    ]
    # Closed under multiplication: f(aa') = f(a)f(a') = g(b)g(b') = g(bb').
    apex, p1, p2 = _pair_semigroup(f.source, g.source, labels)
    return ConeResult(apex, (p1, p2), tuple(labels))
