# =============================================================
# Pytest: TensorService
# =============================================================

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

# =============================================================
# Local Models & Services
# =============================================================
from tensors.models import SubsetIndex, Tensor
from tensors.services.algebra import SHIFT_BY_E, TensorService

# =============================================================
# Core Exceptions
# =============================================================
from core.exceptions import (
    DomainException,
    InvalidFormatException,
    UnsupportedOrderException,
    ValidationException,
)


# =============================================================
# Test Case 1: apply on Closed-form Tensors
# =============================================================
def test_apply_identity_gives_cubes(unit_tensor):
    assert_array_equal(TensorService.apply(unit_tensor(4, 2), [1.0, 2.0]), [1.0, 8.0])


def test_apply_matrix(matrix_2112):
    assert_array_equal(TensorService.apply(matrix_2112, [1.0, 1.0]), [3.0, 3.0])


def test_apply_diagonal_tensor(diag_23):
    assert_array_equal(TensorService.apply(diag_23, [1.0, -1.0]), [2.0, -3.0])


def test_apply_rejects_wrong_length(unit_tensor):
    with pytest.raises(ValidationException):
        TensorService.apply(unit_tensor(4, 2), [1.0, 2.0, 3.0])


# =============================================================
# Test Case 2: Homogeneity and Batch Evaluation
# =============================================================
@pytest.mark.parametrize("m", [2, 3, 4])
def test_apply_is_homogeneous_of_degree_m_minus_1(m):
    # Step 1 — Random tensor and vector
    rng = np.random.default_rng(m)
    A = Tensor.from_array(rng.standard_normal((3,) * m))
    x = rng.standard_normal(3)

    # Step 2 — Compare scaled evaluations
    base = TensorService.apply(A, x)
    for t in (-2.0, -1.0, 0.5, 3.0):
        assert_allclose(TensorService.apply(A, t * x), t ** (m - 1) * base, rtol=1e-10, atol=1e-12)


def test_apply_batch_matches_rowwise_apply():
    rng = np.random.default_rng(5)
    A = Tensor.from_array(rng.standard_normal((3, 3, 3, 3)))
    X = rng.standard_normal((17, 3))

    expected = np.array([TensorService.apply(A, x) for x in X])
    assert_allclose(TensorService.apply_batch(A, X), expected, rtol=1e-12, atol=1e-12)


def test_jacobian_matches_finite_differences():
    # Step 1 — Nonsymmetric tensor, generic point
    rng = np.random.default_rng(11)
    A = Tensor.from_array(rng.standard_normal((3, 3, 3)))
    x = rng.standard_normal(3)

    # Step 2 — Central differences column by column
    h = 1e-6
    numeric = np.column_stack([
        (TensorService.apply(A, x + h * e) - TensorService.apply(A, x - h * e)) / (2 * h)
        for e in np.eye(3)
    ])
    assert_allclose(TensorService.jacobian(A, x), numeric, rtol=1e-6, atol=1e-7)


# =============================================================
# Test Case 3: power_vector
# =============================================================
def test_power_vector_odd_root_keeps_sign():
    assert_allclose(TensorService.power_vector([-8.0, 27.0], 1.0 / 3), [-2.0, 3.0])


@pytest.mark.parametrize("x, expected", [([1.0, 2.0], [1.0, 8.0]), ([0.0, 5.0], [0.0, 125.0])])
def test_power_vector_integer_power(x, expected):
    assert_array_equal(TensorService.power_vector(x, 3), expected)


def test_power_vector_even_root_of_negative_is_domain_error():
    with pytest.raises(DomainException):
        TensorService.power_vector([-4.0, 1.0], 0.5)


# =============================================================
# Test Case 4: Principal Sub-tensors
# =============================================================
def test_principal_subtensor_single_index(diag_23):
    sub = TensorService.principal_subtensor(diag_23, SubsetIndex.of([2], 2))
    assert (sub.order, sub.dim) == (4, 1)
    assert sub.entries.tolist() == [3.0]


def test_principal_subtensor_full_subset_is_identity(matrix_2112):
    assert TensorService.principal_subtensor(matrix_2112, SubsetIndex.full(2)) == matrix_2112


def test_principal_subtensor_of_matrix(matrix):
    sub = TensorService.principal_subtensor(matrix([[2, 1], [9, 5]]), SubsetIndex.of([1], 2))
    assert sub.entries.tolist() == [2.0]


def test_principal_subtensor_of_unit_tensor(unit_tensor):
    sub = TensorService.principal_subtensor(unit_tensor(4, 3), SubsetIndex.of([1, 3], 3))
    assert sub == unit_tensor(4, 2)


@pytest.mark.parametrize("members", [[], [0], [3], [2, 1], [1, 1]])
def test_subset_index_rejects_invalid_members(members):
    with pytest.raises(ValidationException):
        SubsetIndex.of(members, 2)


def test_subtensor_consistency_for_vectors_supported_on_j():
    # Step 1 — Random A and every subset of {1,2,3}
    rng = np.random.default_rng(3)
    A = Tensor.from_array(rng.standard_normal((3, 3, 3, 3)))

    for J in TensorService.subsets(3):
        # Step 2 — x vanishing off J
        x_sub = rng.standard_normal(len(J))
        x = TensorService.pad(x_sub, J, 3)

        # Step 3 — Restriction of A x^{m-1} to J equals A_J x_J^{m-1}
        sub = TensorService.principal_subtensor(A, J)
        assert_allclose(TensorService.apply(A, x)[J.positions], TensorService.apply(sub, x_sub), rtol=1e-13)

        # Step 4 — Row sums only shrink on sub-tensors
        assert np.all(TensorService.row_abs_sums(sub) <= TensorService.row_abs_sums(A)[J.positions] + 1e-15)


def test_subsets_enumerates_all_nonempty_subsets():
    subsets = list(TensorService.subsets(4))
    assert len(subsets) == 2 ** 4 - 1
    assert len({J.members for J in subsets}) == 15


# =============================================================
# Test Case 5: Unit and E Tensors
# =============================================================
def test_unit_tensor_matrix_case(unit_tensor):
    assert_array_equal(unit_tensor(2, 3).data, np.eye(3))


def test_unit_tensor_applies_componentwise_power(unit_tensor):
    rng = np.random.default_rng(0)
    I = unit_tensor(4, 3)
    for x in rng.standard_normal((100, 3)):
        assert_array_equal(TensorService.apply(I, x), x ** 3)

    assert_array_equal(TensorService.apply(unit_tensor(4, 2), [2.0, -1.0]), [8.0, -1.0])


@pytest.mark.parametrize("x, expected", [([1.0, 0.0], [1.0, 0.0]), ([1.0, 1.0], [2.0, 2.0]), ([0.0, 0.0], [0.0, 0.0])])
def test_e_apply(x, expected):
    assert_array_equal(TensorService.e_apply(x, 4), expected)


def test_e_apply_rejects_odd_order():
    with pytest.raises(UnsupportedOrderException):
        TensorService.e_apply([1.0, 0.0], 3)


@pytest.mark.parametrize("m, n", [(2, 3), (4, 2), (4, 3), (6, 2)])
def test_materialised_e_tensor_matches_e_apply(m, n):
    rng = np.random.default_rng(m * 10 + n)
    E = TensorService.e_tensor(m, n)
    for x in rng.standard_normal((20, n)):
        assert_allclose(TensorService.apply(E, x), TensorService.e_apply(x, m), rtol=1e-12)


def test_shift_by_e_subtracts_e(unit_tensor):
    I = unit_tensor(4, 2)
    B = TensorService.shifted(I, 0.5, by=SHIFT_BY_E)
    x = np.array([1.0, 2.0])
    assert_allclose(TensorService.apply(B, x), x ** 3 - 0.5 * 5.0 * x)


def test_shift_rejects_unknown_kind(unit_tensor):
    with pytest.raises(ValidationException):
        TensorService.shifted(unit_tensor(4, 2), 1.0, by="other")


# =============================================================
# Test Case 6: Row Sums and Symmetrization
# =============================================================
def test_row_abs_sums(matrix_2112, unit_tensor):
    assert_array_equal(TensorService.row_abs_sums(matrix_2112), [3.0, 3.0])
    assert_array_equal(TensorService.row_abs_sums(unit_tensor(4, 2)), [1.0, 1.0])
    ones = Tensor.from_entries(3, 2, [1.0] * 8)
    assert_array_equal(TensorService.row_abs_sums(ones), [4.0, 4.0])


def test_symmetrize_is_permutation_invariant_and_keeps_action():
    rng = np.random.default_rng(8)
    A = Tensor.from_array(rng.standard_normal((2, 2, 2)))
    S = TensorService.symmetrize(A)

    assert_allclose(S.data, np.transpose(S.data, (1, 0, 2)))
    assert_allclose(S.data, np.transpose(S.data, (2, 1, 0)))
    # only the first index is not summed over, so A x^{m-1} changes but x'A x^{m-1} does not
    x = rng.standard_normal(2)
    assert x @ TensorService.apply(S, x) == pytest.approx(x @ TensorService.apply(A, x))


# =============================================================
# Test Case 7: Tensor Construction
# =============================================================
def test_from_entries_rejects_wrong_length():
    with pytest.raises(InvalidFormatException):
        Tensor.from_entries(4, 2, [1.0] * 15)


def test_from_entries_rejects_non_finite():
    with pytest.raises(InvalidFormatException):
        Tensor.from_entries(2, 2, [1.0, float("nan"), 0.0, 1.0])


def test_tensor_data_is_read_only(unit_tensor):
    with pytest.raises(ValueError):
        unit_tensor(2, 2).data[0, 0] = 5.0
