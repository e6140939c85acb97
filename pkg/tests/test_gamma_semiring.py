import pytest
from hypothesis import given, settings, strategies as st

from softgamma import (
    GammaSemiring,
    InputError,
    SizeLimitError,
    check_gamma_semiring,
    make_matrix_gamma,
    make_minmax_gamma,
    make_zn_gamma,
    ternary_product,
)


class TestZnFamily:
    def test_z8_weak_passes(self, z8):
        assert check_gamma_semiring(z8, "weak").passed

    def test_z8_strict_fails_on_gamma_closure(self, z8):
        report = check_gamma_semiring(z8, "strict")
        assert not report.passed
        assert [(v.axiom, v.witness) for v in report.violations] == [
            ("gamma-closure", ("2", "6", "0"))
        ]

    def test_gamma_closure_witness_replays(self, z8):
        ((_, (a, b, result)),) = [(v.axiom, v.witness) for v in check_gamma_semiring(z8, "strict").violations]
        i, j = z8.gamma_elements.index(a), z8.gamma_elements.index(b)
        assert z8.gamma_add[i][j] == result
        assert result not in z8.gamma_elements

    def test_z4_full_gamma_strict_passes(self, z4_full):
        # independent oracle: exhaust the four defining identities in modular arithmetic
        n = 4
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for al in range(n):
                        assert ((a + b) * al * c) % n == (a * al * c + b * al * c) % n
                        assert (a * al * (b + c)) % n == (a * al * b + a * al * c) % n
                        for be in range(n):
                            assert (a * ((al + be) % n) * b) % n == (a * al * b + a * be * b) % n
                            assert (a * al * ((b * be * c) % n)) % n == (((a * al * b) % n) * be * c) % n
        assert check_gamma_semiring(z4_full, "strict").passed

    def test_trivial_one_element_strict(self):
        assert check_gamma_semiring(make_zn_gamma(1, (0,), strict=True), "strict").passed

    def test_strict_without_gamma_add_is_an_input_error(self):
        gs = make_zn_gamma(8, (2, 4, 6), strict=False)
        with pytest.raises(InputError, match="gamma addition table"):
            check_gamma_semiring(gs, "strict")

    def test_unknown_mode_rejected(self, z8):
        with pytest.raises(InputError):
            check_gamma_semiring(z8, "lenient")

    def test_empty_gamma_rejected(self):
        with pytest.raises(InputError):
            make_zn_gamma(8, ())

    @given(
        n=st.integers(min_value=1, max_value=16),
        picks=st.sets(st.integers(min_value=0, max_value=15), min_size=1),
    )
    @settings(max_examples=60)
    def test_every_zn_structure_is_weak_valid(self, n, picks):
        gamma = {v % n for v in picks}
        gs = make_zn_gamma(n, gamma)
        assert check_gamma_semiring(gs, "weak").passed


class TestMinMaxFamily:
    def test_strict_valid(self):
        assert check_gamma_semiring(make_minmax_gamma(5, (1, 2, 3)), "strict").passed

    def test_trivial_instance(self):
        assert check_gamma_semiring(make_minmax_gamma(1, (0,)), "strict").passed

    def test_products_take_the_minimum(self):
        gs = make_minmax_gamma(5, (1, 2, 3))
        assert ternary_product(gs, "3", "1", "2") == "1"
        assert ternary_product(gs, "4", "2", "3") == "2"

    @given(
        n=st.integers(min_value=1, max_value=8),
        picks=st.sets(st.integers(min_value=0, max_value=7), min_size=1),
    )
    @settings(max_examples=40)
    def test_any_gamma_subset_is_strict_valid(self, n, picks):
        gamma = {v % n for v in picks}
        assert check_gamma_semiring(make_minmax_gamma(n, gamma), "strict").passed


def _mat(label, rows, cols):
    digits = [int(d) for d in label]
    return [digits[i * cols : (i + 1) * cols] for i in range(rows)]


def _matmul_oracle(a, b, p):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(cols)]
        for i in range(rows)
    ]


class TestMatrixFamily:
    def test_sizes_and_strict_validity(self):
        gs = make_matrix_gamma(2, 1, 2)
        assert gs.size == 4
        assert len(gs.gamma_elements) == 4
        assert check_gamma_semiring(gs, "strict").passed

    def test_one_by_one_degenerates_to_mod_p_multiplication(self):
        gs = make_matrix_gamma(2, 1, 1)
        z2 = make_zn_gamma(2, (0, 1))
        for a in "01":
            for g in "01":
                for b in "01":
                    assert ternary_product(gs, a, g, b) == ternary_product(z2, a, g, b)

    def test_2x1_case_passes_strict(self):
        assert check_gamma_semiring(make_matrix_gamma(2, 2, 1), "strict").passed

    def test_product_table_matches_matrix_arithmetic(self):
        gs = make_matrix_gamma(2, 1, 2)
        for a in gs.elements:
            for g in gs.gamma_elements:
                for b in gs.elements:
                    got = _mat(ternary_product(gs, a, g, b), 1, 2)
                    expected = _matmul_oracle(
                        _matmul_oracle(_mat(a, 1, 2), _mat(g, 2, 1), 2), _mat(b, 1, 2), 2
                    )
                    assert got == expected

    def test_size_bounds_refused(self):
        with pytest.raises(InputError):
            make_matrix_gamma(5, 1, 1)
        with pytest.raises(SizeLimitError):
            make_matrix_gamma(2, 2, 3)


class TestTernaryProduct:
    def test_z8_lookup(self, z8):
        assert ternary_product(z8, "1", "2", "2") == "4"

    def test_zero_annihilates_in_z8(self, z8):
        for g in z8.gamma_elements:
            for s in z8.elements:
                assert ternary_product(z8, "0", g, s) == "0"
                assert ternary_product(z8, s, g, "0") == "0"

    def test_unknown_labels_are_input_errors(self, z8):
        with pytest.raises(InputError):
            ternary_product(z8, "9", "2", "0")
        with pytest.raises(InputError):
            ternary_product(z8, "1", "3", "0")


class TestStructuralValidation:
    def test_ragged_product_table_rejected(self, z8):
        bad = [list(map(list, layer)) for layer in z8.product]
        bad[0][0] = bad[0][0][:-1]
        with pytest.raises(InputError):
            GammaSemiring(z8.s, z8.gamma_elements, None, bad, zero="0")

    def test_out_of_range_product_entry_rejected(self, z8):
        bad = [list(map(list, layer)) for layer in z8.product]
        bad[0][0][0] = 99
        with pytest.raises(InputError):
            GammaSemiring(z8.s, z8.gamma_elements, None, bad, zero="0")

    def test_unknown_zero_rejected(self, z8):
        with pytest.raises(InputError):
            GammaSemiring(z8.s, z8.gamma_elements, None, z8.product, zero="17")

    def test_zero_identity_scan(self, z8):
        # declare a non-identity element as zero: the scan must object
        gs = GammaSemiring(z8.s, z8.gamma_elements, None, z8.product, zero="1")
        report = check_gamma_semiring(gs, "weak")
        assert not report.passed
        assert report.violations[0].axiom == "zero-identity"
