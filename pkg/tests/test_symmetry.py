import itertools

import pytest

from permrestrict.perms import PATTERNS_3, count_occurrences
from permrestrict.restrictions import RestrictionSpec, contain_each_once
from permrestrict.symmetry import (GROUP, SymmetryOp, apply, apply_to_spec,
                                   complement, compose, invert, op_inverse,
                                   orbit, parse_op, reverse)


def sn(n):
    return itertools.permutations(range(1, n + 1))


class TestBasicMaps:
    @pytest.mark.parametrize("pi,expected", [
        ((1, 2, 3, 4), (4, 3, 2, 1)),
        ((3, 1, 4, 2), (2, 4, 1, 3)),
    ])
    def test_reverse(self, pi, expected):
        assert reverse(pi) == expected

    @pytest.mark.parametrize("pi,expected", [
        ((1, 3, 2), (3, 1, 2)),
        ((1, 2, 3, 4), (4, 3, 2, 1)),
    ])
    def test_complement(self, pi, expected):
        assert complement(pi) == expected

    @pytest.mark.parametrize("pi,expected", [
        ((2, 3, 1), (3, 1, 2)),
        ((1, 2, 3), (1, 2, 3)),
    ])
    def test_invert(self, pi, expected):
        assert invert(pi) == expected

    def test_involutions_on_s5(self):
        for pi in sn(5):
            assert reverse(reverse(pi)) == pi
            assert complement(complement(pi)) == pi
            assert invert(invert(pi)) == pi

    def test_reverse_complement_commute(self):
        for pi in sn(5):
            assert reverse(complement(pi)) == complement(reverse(pi))


class TestGroup:
    def test_eight_distinct_elements(self):
        # this permutation separates all eight images
        ref = (1, 3, 4, 2)
        images = {apply(op, ref) for op in GROUP}
        assert len(images) == 8

    def test_enumeration_order(self):
        assert [op.value for op in GROUP] == \
            ["id", "r", "c", "rc", "i", "ri", "ci", "rci"]

    def test_identity_is_neutral(self):
        for g in GROUP:
            assert compose(SymmetryOp.ID, g) is g
            assert compose(g, SymmetryOp.ID) is g

    def test_closure_and_associativity(self):
        for g, h, k in itertools.product(GROUP, repeat=3):
            assert compose(g, h) in GROUP
            assert compose(g, compose(h, k)) is compose(compose(g, h), k)

    def test_inverses(self):
        for g in GROUP:
            assert compose(g, op_inverse(g)) is SymmetryOp.ID
            assert compose(op_inverse(g), g) is SymmetryOp.ID
        # the two rotations invert each other; everything else is an involution
        assert op_inverse(SymmetryOp.RI) is SymmetryOp.CI
        assert op_inverse(SymmetryOp.CI) is SymmetryOp.RI
        for g in GROUP:
            if g not in (SymmetryOp.RI, SymmetryOp.CI):
                assert op_inverse(g) is g

    def test_compose_matches_action(self):
        for g, h in itertools.product(GROUP, repeat=2):
            for pi in sn(4):
                assert apply(compose(g, h), pi) == apply(g, apply(h, pi))

    def test_apply_equals_stepwise_composition(self):
        for pi in sn(4):
            assert apply(SymmetryOp.RCI, pi) == reverse(complement(invert(pi)))
            assert apply(SymmetryOp.RI, pi) == reverse(invert(pi))
            assert apply(SymmetryOp.RC, pi) == reverse(complement(pi))
            assert apply(SymmetryOp.ID, pi) == pi

    def test_parse_op(self):
        assert parse_op("rc") is SymmetryOp.RC
        assert parse_op(" RCI ") is SymmetryOp.RCI
        with pytest.raises(ValueError):
            parse_op("rr")


class TestSpecAction:
    def test_identity_fixes_spec(self):
        spec = RestrictionSpec.parse("123;132")
        assert apply_to_spec(SymmetryOp.ID, spec) == spec

    def test_rc_image(self):
        # rc fixes 123 and swaps 132 with 213
        spec = RestrictionSpec.parse("123;132")
        assert apply_to_spec(SymmetryOp.RC, spec) == RestrictionSpec.parse("123;213")

    def test_r_image(self):
        spec = RestrictionSpec.parse("123;132")
        assert apply_to_spec(SymmetryOp.R, spec) == RestrictionSpec.parse("321;231")

    def test_complement_of_contain_pair(self):
        spec = RestrictionSpec.parse(";123,231")
        assert apply_to_spec(SymmetryOp.C, spec) == RestrictionSpec.parse(";213,321")

    def test_multiplicities_preserved(self):
        spec = RestrictionSpec.parse(";132^2")
        image = apply_to_spec(SymmetryOp.R, spec)
        assert image == RestrictionSpec.parse(";231^2")


class TestOrbits:
    def test_ordered_pair_orbit(self):
        got = {s.text() for s in orbit(RestrictionSpec.parse("123;231"))}
        assert got == {"123;231", "123;312", "321;132", "321;213"}

    def test_class_d_orbit(self):
        got = {s.text() for s in orbit(RestrictionSpec.parse("132;213"))}
        assert got == {"132;213", "213;132", "231;312", "312;231"}

    def test_symmetric_multiset_is_fixed(self):
        assert orbit(RestrictionSpec.parse(";123,321")) == \
            frozenset({RestrictionSpec.parse(";123,321")})

    def test_orbit_sizes_divide_eight(self):
        for a, b in itertools.permutations(PATTERNS_3, 2):
            spec = RestrictionSpec(avoid=(a,), contain=((b, 1),))
            assert 8 % len(orbit(spec)) == 0


class TestEquivariance:
    def test_occurrence_counts_preserved(self):
        # exhaustive for n <= 5 here; the acceptance suite pushes to n = 6
        for n in range(1, 6):
            for pi in sn(n):
                base = {a: count_occurrences(pi, a).value for a in PATTERNS_3}
                for op in GROUP:
                    image = apply(op, pi)
                    for alpha in PATTERNS_3:
                        assert count_occurrences(
                            image, apply(op, alpha)).value == base[alpha]

    def test_membership_equivariance(self):
        # exhaustive over S_6: pi satisfies the spec iff g(pi) satisfies g(spec)
        from permrestrict.oracle import satisfies
        specs = [RestrictionSpec.parse("123;312"),
                 contain_each_once((1, 3, 2), (2, 1, 3))]
        for spec in specs:
            for op in GROUP:
                image_spec = apply_to_spec(op, spec)
                for pi in sn(6):
                    assert satisfies(pi, spec) == \
                        satisfies(apply(op, pi), image_spec)
