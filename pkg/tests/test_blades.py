"""Blade-level arithmetic: products, signs, involutions, parsing."""

import pytest

from cliffcent.blades import (
    CommuteClass,
    Signature,
    all_blades,
    blade_from_indices,
    blade_grade,
    blade_indices,
    blade_product,
    blade_sort_key,
    commute_class,
    format_blade,
    hat_sign,
    involution_signs,
    make_signature,
    parse_blade,
    tilde_sign,
)


class TestSignature:
    def test_fields(self):
        sig = make_signature(2, 1, 3)
        assert (sig.p, sig.q, sig.r) == (2, 1, 3)
        assert sig.n == 6
        assert str(sig) == "Cl(2,1,3)"

    def test_metric_signs(self):
        sig = make_signature(1, 2, 1)
        assert [sig.metric_sign(i) for i in range(1, 5)] == [1, -1, -1, 0]

    def test_masks(self):
        sig = make_signature(1, 1, 2)
        assert sig.negative_mask == 0b0010
        assert sig.degenerate_mask == 0b1100
        assert sig.full_mask == 0b1111

    @pytest.mark.parametrize("bad", [(-1, 0, 1), (0, 0, 0), (17, 0, 0), (8, 8, 1)])
    def test_rejects_bad_triples(self, bad):
        with pytest.raises(ValueError):
            make_signature(*bad)


class TestBladeBasics:
    def test_indices_round_trip(self):
        b = blade_from_indices((1, 3, 4))
        assert blade_indices(b) == (1, 3, 4)
        assert blade_grade(b) == 3

    def test_from_indices_requires_ascending(self):
        with pytest.raises(ValueError):
            blade_from_indices((3, 1))
        with pytest.raises(ValueError):
            blade_from_indices((2, 2))

    def test_enumeration_is_grade_major(self):
        sig = make_signature(2, 0, 1)
        order = list(all_blades(sig))
        assert order[0] == 0
        grades = [blade_grade(b) for b in order]
        assert grades == sorted(grades)
        # within a grade, index tuples ascend lexicographically
        assert [blade_indices(b) for b in order[1:4]] == [(1,), (2,), (3,)]
        assert [blade_indices(b) for b in order[4:7]] == [(1, 2), (1, 3), (2, 3)]

    def test_sort_key_matches_enumeration(self):
        sig = make_signature(1, 1, 1)
        order = list(all_blades(sig))
        assert sorted(order, key=blade_sort_key) == order


class TestBladeProduct:
    def test_generator_squares(self):
        sig = make_signature(1, 1, 1)
        e1, e2, e3 = (blade_from_indices((i,)) for i in (1, 2, 3))
        assert blade_product(sig, e1, e1) == (1, 0)
        assert blade_product(sig, e2, e2) == (-1, 0)
        assert blade_product(sig, e3, e3) == (0, 0)

    def test_anticommuting_generators(self):
        sig = make_signature(2, 0, 0)
        e1, e2 = blade_from_indices((1,)), blade_from_indices((2,))
        assert blade_product(sig, e1, e2) == (1, blade_from_indices((1, 2)))
        assert blade_product(sig, e2, e1) == (-1, blade_from_indices((1, 2)))

    def test_hand_computed_product(self):
        # e12 * e13 = -e1 e1 e2 e3 = -e23 in Cl(3,0,0)
        sig = make_signature(3, 0, 0)
        a = blade_from_indices((1, 2))
        b = blade_from_indices((1, 3))
        assert blade_product(sig, a, b) == (-1, blade_from_indices((2, 3)))

    def test_degenerate_annihilation(self):
        sig = make_signature(1, 0, 2)
        a = blade_from_indices((1, 2))
        b = blade_from_indices((2, 3))
        assert blade_product(sig, a, b) == (0, 0)

    def test_scalar_is_identity(self):
        sig = make_signature(2, 1, 0)
        for b in all_blades(sig):
            assert blade_product(sig, 0, b) == (1, b)
            assert blade_product(sig, b, 0) == (1, b)

    def test_associative_on_blades(self):
        def scaled(sig, sign, blade, other, after):
            if sign == 0:
                return (0, 0)
            s2, out = (blade_product(sig, blade, other) if after
                       else blade_product(sig, other, blade))
            return (0, 0) if s2 == 0 else (sign * s2, out)

        sig = make_signature(1, 1, 1)
        blades = list(all_blades(sig))
        for a in blades:
            for b in blades:
                for c in blades:
                    s_ab, ab = blade_product(sig, a, b)
                    s_bc, bc = blade_product(sig, b, c)
                    assert (scaled(sig, s_ab, ab, c, after=True)
                            == scaled(sig, s_bc, bc, a, after=False))


class TestCommuteClass:
    def test_matches_direct_comparison(self):
        sig = make_signature(1, 1, 1)
        for a in all_blades(sig):
            for b in all_blades(sig):
                sa, ab = blade_product(sig, a, b)
                sb, ba = blade_product(sig, b, a)
                cls = commute_class(sig, a, b)
                if sa == 0:
                    assert cls is CommuteClass.ANNIHILATE
                    assert sb == 0
                elif (sa, ab) == (sb, ba):
                    assert cls is CommuteClass.COMMUTE
                else:
                    assert (ab == ba) and (sa == -sb)
                    assert cls is CommuteClass.ANTICOMMUTE


class TestInvolutions:
    @pytest.mark.parametrize("grade,hat,tilde", [
        (0, 1, 1), (1, -1, 1), (2, 1, -1), (3, -1, -1),
        (4, 1, 1), (5, -1, 1), (6, 1, -1), (7, -1, -1),
    ])
    def test_sign_table(self, grade, hat, tilde):
        b = blade_from_indices(tuple(range(1, grade + 1)))
        assert involution_signs(b) == (hat, tilde)
        assert hat_sign(b) == hat
        assert tilde_sign(b) == tilde


class TestParseFormat:
    def test_round_trip(self):
        for text in ("e[]", "e[1]", "e[2,5]", "e[1,2,3]"):
            assert format_blade(parse_blade(text)) == text

    def test_format(self):
        assert format_blade(0) == "e[]"
        assert format_blade(blade_from_indices((1, 3))) == "e[1,3]"

    @pytest.mark.parametrize("bad", ["", "e", "e[", "e[0]", "e[2,1]", "e[1,1]", "[1]"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_blade(bad)
