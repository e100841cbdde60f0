"""Equivalence relations on {0..n-1}, congruence closure, quotients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import FiniteSemigroup, Homomorphism
from .errors import NotACongruence


class Partition:
    """Union-find forest with union by size and path compression.

    Blocks are numbered by ascending least element, so quotient tables are
    reproducible across runs.
    """

    def __init__(self, size: int):
        self.size = size
        self.parent = list(range(size))
        self._weight = [1] * size
        self.class_count = size

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._weight[ra] < self._weight[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self._weight[ra] += self._weight[rb]
        self.class_count -= 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def block_index(self) -> list[int]:
        """Block number of each element; block k's least element increases with k."""
        number: dict[int, int] = {}
        out = []
        for i in range(self.size):
            r = self.find(i)
            if r not in number:
                number[r] = len(number)
            out.append(number[r])
        return out

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for i, b in enumerate(self.block_index()):
            out[b].append(i)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.size == other.size and self.block_index() == other.block_index()

    __hash__ = None  # mutable while being built

    def __repr__(self) -> str:
        return f"Partition({self.blocks()})"


def discrete(size: int) -> Partition:
    return Partition(size)


def is_congruence(p: Partition, A: FiniteSemigroup) -> bool:
    """i = j implies i*k = j*k and k*i = k*j, for all k."""
    bi = p.block_index()
    t = A.table
    for i in A.elements:
        for j in range(i + 1, A.order):
            if bi[i] != bi[j]:
                continue
            for k in A.elements:
                if bi[t[i][k]] != bi[t[j][k]] or bi[t[k][i]] != bi[t[k][j]]:
                    return False
    return True


def congruence_closure(A: FiniteSemigroup, pairs: Iterable[Sequence[int]]) -> Partition:
    """Least congruence on A containing all the given pairs.

    Worklist: whenever (a, b) actually merges, enqueue (a*k, b*k) and
    (k*a, k*b) for every k; already-equal pairs are dropped before enqueueing.
    """
    p = Partition(A.order)
    t = A.table
    work = [(a, b) for a, b in pairs]
    while work:
        a, b = work.pop()
        if not p.union(a, b):
            continue
        for k in A.elements:
            l, r = t[a][k], t[b][k]
            if p.find(l) != p.find(r):
                work.append((l, r))
            l, r = t[k][a], t[k][b]
            if p.find(l) != p.find(r):
                work.append((l, r))
    return p


def quotient(A: FiniteSemigroup, p: Partition) -> tuple[FiniteSemigroup, Homomorphism]:
    """Quotient semigroup on the blocks of p, plus the projection onto it."""
    if p.size != A.order:
        raise NotACongruence("partition size does not match semigroup order")
    if not is_congruence(p, A):
        raise NotACongruence(f"incompatible partition {p.blocks()}")
    bi = p.block_index()
    k = p.class_count
    reps: list[int] = [-1] * k
    for i, b in enumerate(bi):
        if reps[b] < 0:
            reps[b] = i
    table = tuple(
        tuple(bi[A.table[reps[x]][reps[y]]] for y in range(k)) for x in range(k)
    )
    Q = FiniteSemigroup(k, table)
    return Q, Homomorphism(A, Q, tuple(bi))


def kernel(f: Homomorphism) -> Partition:
    """Partition of the source by equal images; always a congruence."""
    p = Partition(f.source.order)
    first: dict[int, int] = {}
    for i, v in enumerate(f.map):
        if v in first:
            p.union(first[v], i)
        else:
            first[v] = i
    return p
