"""PD-code parsing, validation, invariants, and local moves."""

import json

import pytest

from cassurg import fixtures
from cassurg.diagram import (Crossing, DiagramError, FramedLinkDiagram,
                             add_clasp, add_kink, crossing_change,
                             diagram_to_dict, framing, linking_matrix,
                             linking_number, mirror, parse_pd,
                             permute_components, reverse_component,
                             serialize_pd, smooth_crossing, writhe)

HOPF_HAND_DRAWN = json.dumps({
    # round two-circle picture, both components counterclockwise
    "components": [[1, 2], [3, 4]],
    "crossings": [{"arcs": [4, 2, 3, 1], "sign": 1},
                  {"arcs": [2, 4, 1, 3], "sign": 1}],
})


class TestParsing:
    def test_crossingless_unknot(self):
        d = parse_pd('{"components": [[1]], "crossings": []}')
        assert d.n_components() == 1
        assert len(d.crossings) == 0

    def test_hopf_hand_drawn(self):
        d = parse_pd(HOPF_HAND_DRAWN)
        assert d.n_components() == 2
        assert linking_number(d, 1, 2) == 1

    def test_trefoil_fixture(self):
        d = fixtures.trefoil_right()
        assert d.n_components() == 1
        assert writhe(d) == 3

    def test_components_derived_when_missing(self):
        doc = json.loads(HOPF_HAND_DRAWN)
        del doc["components"]
        d = parse_pd(json.dumps(doc))
        assert d.n_components() == 2

    def test_arc_count_error(self):
        bad = '{"components": [[1,2]], "crossings": [{"arcs":[1,1,1,2],"sign":1}]}'
        with pytest.raises(DiagramError, match="arc 1 appears"):
            parse_pd(bad)

    def test_sign_mismatch_error(self):
        doc = json.loads(HOPF_HAND_DRAWN)
        doc["crossings"][0]["sign"] = -1
        with pytest.raises(DiagramError, match="sign/orientation mismatch"):
            parse_pd(json.dumps(doc))

    def test_non_closed_cycle_error(self):
        doc = json.loads(HOPF_HAND_DRAWN)
        doc["components"] = [[1, 2, 3, 4]]
        with pytest.raises(DiagramError, match="non-closed cycle"):
            parse_pd(json.dumps(doc))

    def test_malformed_json(self):
        with pytest.raises(DiagramError, match="malformed"):
            parse_pd("{not json")

    def test_malformed_crossing_reports_index(self):
        bad = '{"crossings": [{"arcs": [1, 2], "sign": 1}]}'
        with pytest.raises(DiagramError, match="crossing 0"):
            parse_pd(bad)

    def test_round_trip_canonical(self):
        for name in fixtures.fixture_names():
            d = fixtures.load(name)
            canon = parse_pd(serialize_pd(d))
            assert serialize_pd(canon) == serialize_pd(d)
            assert diagram_to_dict(canon) == diagram_to_dict(d)


class TestInvariants:
    def test_linking_examples(self):
        assert linking_number(fixtures.hopf_positive(), 1, 2) == 1
        unl = fixtures.unlink(2)
        assert linking_number(unl, 1, 2) == 0
        bor = fixtures.borromean_rings()
        for i, j in ((1, 2), (1, 3), (2, 3)):
            assert linking_number(bor, i, j) == 0
            assert linking_number(bor, j, i) == 0

    def test_linking_errors(self):
        d = fixtures.hopf_positive()
        with pytest.raises(DiagramError):
            linking_number(d, 1, 1)
        with pytest.raises(DiagramError):
            linking_number(d, 1, 5)

    def test_framing_examples(self):
        assert framing(fixtures.unknot(), 1) == 0
        assert framing(fixtures.unknot_kink(), 1) == 1
        assert framing(fixtures.trefoil_right(), 1) == 3

    def test_linking_matrix_symmetric(self):
        m = linking_matrix(fixtures.borromean_meridian())
        n = len(m)
        assert all(m[i][j] == m[j][i] for i in range(n) for j in range(n))
        assert m[2][3] == 1  # the clasped circle links the third component


class TestCrossingChange:
    def test_kink_flip(self):
        d = fixtures.unknot_kink()
        flipped = crossing_change(d, 0)
        assert writhe(flipped) == -1
        assert framing(flipped, 1) == -1

    def test_involution(self):
        for name in ("trefoil_right", "figure_eight", "borromean_rings"):
            d = fixtures.load(name)
            for c in range(len(d.crossings)):
                assert crossing_change(crossing_change(d, c), c) == d

    def test_mixed_crossing_changes_linking_by_one(self):
        d = fixtures.hopf_positive()
        assert linking_number(crossing_change(d, 0), 1, 2) == 0

    def test_self_crossing_changes_framing_by_twice_old_sign(self):
        d = fixtures.trefoil_right()
        for c in range(3):
            old_sign = d.crossings[c].sign
            changed = crossing_change(d, c)
            assert framing(changed, 1) == framing(d, 1) - 2 * old_sign

    def test_mirror_flips_all_signs(self):
        d = fixtures.trefoil_right()
        m = mirror(d)
        assert writhe(m) == -3
        assert mirror(m) == d

    def test_index_error(self):
        with pytest.raises(DiagramError):
            crossing_change(fixtures.unknot_kink(), 5)


class TestSmoothing:
    def test_smooth_kink_gives_unlink(self):
        d = fixtures.unknot_kink()
        s = smooth_crossing(d, 0)
        assert s.n_components() == 2
        assert len(s.crossings) == 0
        assert linking_number(s, 1, 2) == 0

    def test_smooth_hopf_gives_unknot(self):
        d = fixtures.hopf_positive()
        s = smooth_crossing(d, 0)
        assert s.n_components() == 1
        assert len(s.crossings) == 1

    def test_crossing_count_drops_by_one(self):
        d = fixtures.borromean_rings()
        for c in range(len(d.crossings)):
            assert len(smooth_crossing(d, c).crossings) == len(d.crossings) - 1

    def test_far_linking_preserved(self):
        # clasp components 1,2 of the 3-unlink, then smooth a clasp crossing
        # of a second clasp added between 1 and 3
        d = fixtures.unlink(3)
        d = add_clasp(d, d.components[0][0], d.components[1][0], 1)
        d = add_clasp(d, d.components[0][0], d.components[2][0], 1)
        target = len(d.crossings) - 1
        s = smooth_crossing(d, target)
        # components 1 and 3 merge or reconnect; linking of the pair not
        # incident to the smoothed crossing is preserved
        assert linking_number(d, 1, 2) == 1
        comp_count = s.n_components()
        assert comp_count in (2, 4)
        assert linking_number(s, 1, 2) == 1


class TestReverseAndPermute:
    def test_reverse_flips_mixed_signs(self):
        d = fixtures.hopf_positive()
        r = reverse_component(d, 1)
        assert linking_number(r, 1, 2) == -1
        assert reverse_component(r, 1) == d

    def test_reverse_keeps_self_crossings(self):
        d = fixtures.trefoil_right()
        r = reverse_component(d, 1)
        assert writhe(r) == 3

    def test_permute(self):
        d = fixtures.borromean_meridian()
        p = permute_components(d, (4, 3, 2, 1))
        assert linking_number(p, 1, 2) == 1  # was the (3, 4) pair
        with pytest.raises(DiagramError):
            permute_components(d, (1, 1, 2, 3))


class TestSplicing:
    def test_kink_changes_only_framing(self):
        d = fixtures.borromean_rings()
        k = add_kink(d, d.components[0][0], -1)
        assert framing(k, 1) == -1
        assert framing(k, 2) == 0
        assert all(linking_number(k, i, j) == linking_number(d, i, j)
                   for i, j in ((1, 2), (1, 3), (2, 3)))

    def test_kink_on_circle(self):
        d = fixtures.unknot()
        k = add_kink(d, 1, 1)
        assert framing(k, 1) == 1
        assert len(k.crossings) == 1

    def test_clasp_changes_only_target_linking(self):
        d = fixtures.unlink(3)
        c = add_clasp(d, 1, 2, -1)
        assert linking_number(c, 1, 2) == -1
        assert linking_number(c, 1, 3) == 0
        assert len(c.crossings) == 2
        assert all(x.sign == -1 for x in c.crossings)

    def test_clasp_framing_unchanged(self):
        d = fixtures.unlink(2)
        c = add_clasp(d, 1, 2, 1)
        assert framing(c, 1) == 0
        assert framing(c, 2) == 0

    def test_stacked_clasps(self):
        d = fixtures.unlink(2)
        for _ in range(3):
            c = d = add_clasp(d, d.components[0][0], d.components[1][0], 1)
        assert linking_number(c, 1, 2) == 3

    def test_clasp_needs_distinct_arcs(self):
        with pytest.raises(DiagramError):
            add_clasp(fixtures.unknot(), 1, 1, 1)
