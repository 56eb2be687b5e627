"""Seifert matrices via braid form, including the reduction moves."""

import random

import pytest

from conftest import units_equal
from cassurg import fixtures
from cassurg.algebra import LaurentPoly, poly_det
from cassurg.alexander import alexander_knot, alexander_link
from cassurg.braidform import (braid_closure_diagram, braid_seifert_matrix,
                               pd_to_braid_word, seifert_matrix)
from cassurg.diagram import DiagramError, add_clasp, add_kink


def alex_of_matrix(v):
    n = len(v)
    t = LaurentPoly.var("t", ("t",))
    if n == 0:
        return LaurentPoly.constant(1, ("t",))
    m = [[LaurentPoly.constant(v[i][j], ("t",)) - t * v[j][i]
          for j in range(n)] for i in range(n)]
    return poly_det(m)


class TestFixtures:
    def test_unknot_empty_matrix(self):
        assert seifert_matrix(fixtures.unknot()) == []

    def test_kink_unknot(self):
        assert seifert_matrix(fixtures.unknot_kink()) == []

    def test_trefoil(self):
        v = seifert_matrix(fixtures.trefoil_right())
        assert len(v) == 2
        expected = LaurentPoly(("t",), {(2,): 1, (1,): -1, (0,): 1})
        assert units_equal(alex_of_matrix(v), expected)

    def test_trefoil_signature_negative_definite(self):
        # right-handedness check: V + V^T of the positive trefoil braid is
        # negative definite (signature -2)
        v = seifert_matrix(fixtures.trefoil_right())
        sym = [[v[i][j] + v[j][i] for j in range(2)] for i in range(2)]
        assert sym[0][0] < 0
        assert sym[0][0] * sym[1][1] - sym[0][1] * sym[1][0] > 0

    def test_figure_eight(self):
        v = seifert_matrix(fixtures.figure_eight())
        assert len(v) == 2
        expected = LaurentPoly(("t",), {(2,): 1, (1,): -3, (0,): 1})
        assert units_equal(alex_of_matrix(v), expected)

    def test_multi_component_rejected(self):
        with pytest.raises(DiagramError, match="knot diagram"):
            seifert_matrix(fixtures.hopf_positive())


class TestBraidRoundTrip:
    def test_braid_form_diagrams_need_no_moves(self):
        for word, strands in (([1, 1, 1], 2), ([1, -2, 1, -2], 3),
                              ([1, 1], 2)):
            d = braid_closure_diagram(word, strands)
            recovered = pd_to_braid_word(d)
            assert sorted(g for g, _ in recovered) == sorted(abs(w) for w in word)
            assert sorted(s for _, s in recovered) == sorted(
                1 if w > 0 else -1 for w in word)

    def test_recovered_word_same_seifert_data(self):
        rng = random.Random(41)
        for _ in range(30):
            strands = rng.randint(2, 4)
            word = [rng.choice((1, -1)) * rng.randint(1, strands - 1)
                    for _ in range(rng.randint(1, 8))]
            d = braid_closure_diagram(word, strands)
            if d.n_components() != 1:
                continue
            direct = braid_seifert_matrix(
                [(abs(w), 1 if w > 0 else -1) for w in word])
            via_pd = seifert_matrix(d)
            assert units_equal(alex_of_matrix(direct), alex_of_matrix(via_pd))


class TestReductionMoves:
    def kinked_everywhere(self, d):
        """Kinks at every arc trigger reduction at non-stabilization sites."""
        out = []
        for arc in sorted({a for cyc in d.components for a in cyc}):
            for s in (1, -1):
                out.append(add_kink(d, arc, s))
        return out

    def test_kinked_trefoils(self):
        base = alexander_knot(fixtures.trefoil_right())
        for k in self.kinked_everywhere(fixtures.trefoil_right()):
            assert alexander_knot(k) == base

    def test_kinked_figure_eights(self):
        base = alexander_knot(fixtures.figure_eight())
        for k in self.kinked_everywhere(fixtures.figure_eight()):
            assert alexander_knot(k) == base

    def test_self_clasped_unknot(self):
        # clasping an unknot with itself gives a 2-crossing unknot diagram
        # whose Seifert circles are not a coherent chain
        d = fixtures.unknot_kink()
        d = add_clasp(d, d.components[0][0], d.components[0][1], 1)
        assert d.n_components() == 1
        assert alexander_knot(d) == LaurentPoly.constant(1, ("t",))


class TestCrossRouteOnRandomBraids:
    def test_fox_route_matches_seifert_route(self):
        rng = random.Random(97)
        checked = 0
        while checked < 25:
            strands = rng.randint(2, 3)
            word = [rng.choice((1, -1)) * rng.randint(1, strands - 1)
                    for _ in range(rng.randint(1, 7))]
            d = braid_closure_diagram(word, strands)
            if d.n_components() != 1:
                continue
            assert units_equal(alexander_knot(d), alexander_link(d))
            checked += 1
