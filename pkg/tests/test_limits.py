from itertools import product as iproduct

import pytest

from sgreflect import (
    are_isomorphic,
    enumerate_homomorphisms,
    idempotents,
    is_terminal,
    point_map,
    product,
    pullback,
    terminal,
)
from sgreflect.core import FiniteSemigroup, Homomorphism

from conftest import EMPTY, L2, S2, T, Z2


class TestTerminal:
    def test_order_one(self):
        assert terminal().order == 1

    def test_unique_map_from_anything(self, corpus3):
        for A in corpus3:
            assert len(enumerate_homomorphisms(A, terminal())) == 1

    def test_satisfies_identities(self):
        from sgreflect import SGR_TO_SLAT, satisfies_identities

        assert satisfies_identities(terminal(), SGR_TO_SLAT.subvariety_identities)

    def test_is_terminal(self):
        assert is_terminal(T)
        assert not is_terminal(EMPTY)
        assert not is_terminal(S2)


class TestProduct:
    def test_with_terminal_is_isomorphic(self, corpus2):
        for A in corpus2:
            cone = product(A, terminal())
            assert are_isomorphic(cone.apex, A)
            assert cone.legs[0].is_bijective or A.order == 0

    def test_group_square(self):
        cone = product(Z2, Z2)
        assert cone.apex.order == 4
        # Componentwise addition, checked against an independent build.
        labels = list(cone.element_labels)
        assert labels == [(0, 0), (0, 1), (1, 0), (1, 1)]
        for i, (a, b) in enumerate(labels):
            for j, (c, d) in enumerate(labels):
                expected = labels.index(((a + c) % 2, (b + d) % 2))
                assert cone.apex.table[i][j] == expected

    def test_band_product_idempotents(self):
        cone = product(L2, S2)
        assert cone.apex.order == 4
        assert idempotents(cone.apex) == [0, 1, 2, 3]

    def test_labels_are_lexicographic(self, corpus2):
        for A in corpus2:
            for B in corpus2:
                cone = product(A, B)
                assert list(cone.element_labels) == [
                    (a, b) for a in A.elements for b in B.elements]

    def test_universal_property(self, corpus2):
        small = [X for X in corpus2 if X.order <= 2]
        for A, B in ((Z2, S2), (L2, L2)):
            cone = product(A, B)
            for X in small:
                for x1 in enumerate_homomorphisms(X, A):
                    for x2 in enumerate_homomorphisms(X, B):
                        mediators = [
                            h for h in enumerate_homomorphisms(X, cone.apex)
                            if cone.legs[0].compose(h) == x1
                            and cone.legs[1].compose(h) == x2
                        ]
                        assert len(mediators) == 1


class TestPullback:
    def test_of_identity_pair_is_diagonal(self):
        ident = Homomorphism.identity(S2)
        cone = pullback(ident, ident)
        assert are_isomorphic(cone.apex, S2)
        assert list(cone.element_labels) == [(0, 0), (1, 1)]

    def test_disjoint_points_give_empty(self):
        cone = pullback(point_map(S2, 0), point_map(S2, 1))
        assert cone.apex.order == 0

    def test_underlying_set_is_fiber_product(self, corpus2):
        for C in corpus2:
            for A in corpus2:
                for f in enumerate_homomorphisms(A, C):
                    for B in corpus2:
                        for g in enumerate_homomorphisms(B, C):
                            cone = pullback(f, g)
                            expected = tuple(
                                (a, b)
                                for a in A.elements for b in B.elements
                                if f.map[a] == g.map[b]
                            )
                            assert cone.element_labels == expected

    def test_apex_closed_under_multiplication(self):
        f = Homomorphism(Z2, T, (0, 0))
        cone = pullback(f, f)
        labels = set(cone.element_labels)
        for i, (a, b) in enumerate(cone.element_labels):
            for j, (c, d) in enumerate(cone.element_labels):
                assert (Z2.table[a][c], Z2.table[b][d]) in labels

    def test_mismatched_codomains_rejected(self):
        with pytest.raises(ValueError):
            pullback(Homomorphism.identity(S2), Homomorphism.identity(Z2))

    def test_universal_property(self, corpus2):
        small = [X for X in corpus2 if 0 < X.order <= 2]
        cospans = []
        for A in (Z2, S2, L2):
            for g_target in (S2, T):
                for f in enumerate_homomorphisms(A, g_target):
                    for g in enumerate_homomorphisms(S2, g_target):
                        cospans.append((f, g))
        for f, g in cospans[:20]:
            cone = pullback(f, g)
            for X in small:
                for x1 in enumerate_homomorphisms(X, f.source):
                    for x2 in enumerate_homomorphisms(X, g.source):
                        if f.compose(x1) != g.compose(x2):
                            continue
                        mediators = [
                            h for h in enumerate_homomorphisms(X, cone.apex)
                            if cone.legs[0].compose(h) == x1
                            and cone.legs[1].compose(h) == x2
                        ]
                        assert len(mediators) == 1
