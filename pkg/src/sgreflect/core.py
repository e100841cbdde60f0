"""Finite semigroups as validated multiplication tables.

Elements are always 0..n-1; a semigroup is just its n x n table with
table[i][j] = i*j.  The empty semigroup (n = 0) is first-class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .errors import EntryOutOfRange, NotAssociative, OrderTooLarge

Table = tuple[tuple[int, ...], ...]

# Full-permutation canonicalization is only intended for desk-scale orders.
CANONICAL_ORDER_BOUND = 6


@dataclass(frozen=True)
class FiniteSemigroup:
    order: int
    table: Table

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def elements(self) -> range:
        return range(self.order)

    def rows(self) -> list[list[int]]:
        """Table as nested lists (JSON-friendly)."""
        return [list(row) for row in self.table]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "FiniteSemigroup":
        return validate_table(len(rows), rows)


def validate_table(order: int, table: Sequence[Sequence[int]]) -> FiniteSemigroup:
    """Build a semigroup, rejecting bad entries and non-associative tables.

    Reports the first failing associativity triple in lexicographic order.
    """
    rows = tuple(tuple(int(x) for x in row) for row in table)
    if len(rows) != order or any(len(row) != order for row in rows):
        raise ValueError(f"expected a {order}x{order} table")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < order:
                raise EntryOutOfRange(i, j, v, order)
    for i in range(order):
        for j in range(order):
            ij = rows[i][j]
            for k in range(order):
                if rows[ij][k] != rows[i][rows[j][k]]:
                    raise NotAssociative(i, j, k)
    return FiniteSemigroup(order, rows)


def is_homomorphism(map: Sequence[int], A: FiniteSemigroup, B: FiniteSemigroup) -> bool:
    """True iff map[i*j] == map[i]*map[j] for all i, j in A."""
    ta, tb = A.table, B.table
    for i in A.elements:
        for j in A.elements:
            if map[ta[i][j]] != tb[map[i]][map[j]]:
                return False
    return True


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.source.order:
            raise ValueError("map length must equal source order")
        if any(not 0 <= v < self.target.order for v in self.map):
            raise ValueError("map entry out of range")
        if not is_homomorphism(self.map, self.source, self.target):
            raise ValueError(f"not a homomorphism: {self.map}")

    def __call__(self, i: int) -> int:
        return self.map[i]

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """self o other (apply other first)."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        return Homomorphism(other.source, self.target,
                            tuple(self.map[v] for v in other.map))

    @classmethod
    def identity(cls, A: FiniteSemigroup) -> "Homomorphism":
        return cls(A, A, tuple(A.elements))

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.order

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def inverse(self) -> "Homomorphism":
        if not self.is_bijective:
            raise ValueError("only bijections invert")
        inv = [0] * self.target.order
        for i, v in enumerate(self.map):
            inv[v] = i
        return Homomorphism(self.target, self.source, tuple(inv))


def enumerate_homomorphisms(A: FiniteSemigroup, B: FiniteSemigroup) -> list[Homomorphism]:
    """All homomorphisms A -> B, in lexicographic order of their map tuples.

    Backtracking assigns images in element order; after assigning position k
    it checks every product constraint that has just become fully determined
    (i, j, i*j all <= k with one of them equal to k).
    """
    if A.order == 0:
        return [Homomorphism(A, B, ())]
    if B.order == 0:
        return []
    ta, tb = A.table, B.table
    n = A.order
    m = [0] * n
    out: list[Homomorphism] = []

    def consistent(k: int) -> bool:
        for i in range(k + 1):
            for j in range(k + 1):
                p = ta[i][j]
                if p <= k and (i == k or j == k or p == k):
                    if tb[m[i]][m[j]] != m[p]:
                        return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(Homomorphism(A, B, tuple(m)))
            return
        for v in range(B.order):
            m[k] = v
            if consistent(k):
                extend(k + 1)

    extend(0)
    return out


def _relabel(table: Table, perm: Sequence[int]) -> Table:
    """Table with new element i standing for old element perm[i]."""
    inv = [0] * len(perm)
    for i, g in enumerate(perm):
        inv[g] = i
    return tuple(tuple(inv[table[gi][gj]] for gj in perm) for gi in perm)


def canonical_form(A: FiniteSemigroup, max_order: int = CANONICAL_ORDER_BOUND) -> Table:
    """Lexicographically least table among all relabelings of A.

    Two semigroups are isomorphic iff their canonical forms are equal.
    Full permutation scan; refuses orders beyond max_order.
    """
    if A.order > max_order:
        raise OrderTooLarge(f"order {A.order} exceeds canonicalization bound {max_order}")
    if A.order <= 1:
        return A.table
    return min(_relabel(A.table, g) for g in permutations(range(A.order)))


def are_isomorphic(A: FiniteSemigroup, B: FiniteSemigroup) -> bool:
    return A.order == B.order and canonical_form(A) == canonical_form(B)


def isomorphisms(A: FiniteSemigroup, B: FiniteSemigroup) -> Iterator[Homomorphism]:
    """All isomorphisms A -> B (brute force over bijective homs)."""
    if A.order != B.order:
        return
    for f in enumerate_homomorphisms(A, B):
        if f.is_bijective:
            yield f


def idempotents(A: FiniteSemigroup) -> list[int]:
    """Ascending list of all e with e*e == e."""
    return [e for e in A.elements if A.table[e][e] == e]
