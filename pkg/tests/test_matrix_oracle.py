import numpy as np
import pytest

from berezin import closed_form as cf
from berezin import geometry, kernels, symbols
from berezin import matrix_oracle as oracle


def test_composition_matrix_elliptic_is_diagonal_powers():
    op = oracle.composition_matrix(kernels.HARDY, symbols.elliptic(0.5), 6)
    expected = np.diag(0.5 ** np.arange(6).astype(float))
    np.testing.assert_allclose(op.entries, expected, atol=1e-15)


def test_composition_matrix_first_column_is_constant_function():
    op = oracle.composition_matrix(kernels.BERGMAN, symbols.blaschke(0.3), 8)
    e0 = np.zeros(8)
    e0[0] = 1.0
    np.testing.assert_allclose(op.entries[:, 0], e0, atol=1e-15)


def test_bergman_weights_differ_from_hardy():
    symb = symbols.blaschke(0.5)
    hardy_op = oracle.composition_matrix(kernels.HARDY, symb, 16)
    bergman_op = oracle.composition_matrix(kernels.BERGMAN, symb, 16)
    j = np.arange(16, dtype=float)
    ratio = np.sqrt(j[None, :] + 1) / np.sqrt(j[:, None] + 1)
    np.testing.assert_allclose(
        bergman_op.entries, hardy_op.entries * ratio, atol=1e-13
    )


def test_oracle_agrees_with_closed_forms():
    """Matrix quadratic forms against the closed-form transforms: the central
    dual-route check of the whole package."""
    rng = np.random.default_rng(101)
    ws = rng.uniform(0.05, 0.8, 40) * np.exp(2j * np.pi * rng.uniform(size=40))
    catalog = [
        symbols.elliptic(0.5),
        symbols.elliptic(0.25 + 0.25j),
        symbols.blaschke(0.5),
        symbols.blaschke(0.3j),
        symbols.automorphism(1.25, 0.75),
    ]
    for space in (kernels.HARDY, kernels.BERGMAN):
        closed_fn = (
            cf.hardy_transform if space.kind == "hardy" else cf.bergman_transform
        )
        for symb in catalog:
            op = oracle.composition_matrix(space, symb, 256)
            got = oracle.berezin_grid(op, space, ws)
            np.testing.assert_allclose(got, closed_fn(symb, ws), atol=1e-8)


def test_single_point_oracle_matches_grid():
    symb = symbols.blaschke(0.4)
    op = oracle.composition_matrix(kernels.HARDY, symb, 128)
    w = 0.3 + 0.2j
    single = oracle.berezin_from_matrix(op, kernels.HARDY, w)
    grid_val = oracle.berezin_grid(op, kernels.HARDY, np.array([w]))[0]
    np.testing.assert_allclose(single, grid_val, rtol=1e-13)


def test_l2_berezin_set_from_matrix_and_vector():
    mat = np.array([[1.0, 0.0], [0.0, 2.0]])
    np.testing.assert_array_equal(oracle.l2_berezin_set(mat), [1.0, 2.0])
    upper = np.array([[1.5, 1.0], [0.0, 1.5]])
    np.testing.assert_array_equal(oracle.l2_berezin_set(upper), [1.5])
    np.testing.assert_array_equal(oracle.l2_berezin_set([3.0, 3.0, 1.0]), [3.0, 1.0])
    with pytest.raises(ValueError):
        oracle.l2_berezin_set(np.zeros((2, 3)))


def test_model_operator_matrix_is_subdiagonal_shift():
    op = oracle.model_operator_matrix(3)
    np.testing.assert_array_equal(
        op.entries, [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    )


def test_model_range_matches_closed_form():
    grid = cf.PolarGrid.regular(30, 12, 0.98)
    for n in (1, 2, 4):
        sample = oracle.model_berezin_range(n, grid)
        np.testing.assert_allclose(
            sample.values, cf.model_transform(n, grid.mesh()), atol=1e-13
        )
        assert sample.symbol is None


def test_model_berezin_number_approaches_limit():
    grid = cf.PolarGrid.regular(200, 32, 0.9999)
    for n in (2, 5, 8):
        ber = oracle.model_berezin_range(n, grid).berezin_number()
        target = (n - 1) / n
        assert target - 2e-3 <= ber <= target + 1e-12


def test_numerical_range_of_diagonal_is_segment():
    pts = oracle.numerical_range_boundary(np.diag([1.0, 2.0]), 90)
    assert pts.shape == (90, 2)
    np.testing.assert_allclose(pts[:, 1], 0.0, atol=1e-12)
    assert pts[:, 0].min() >= 1.0 - 1e-12
    assert pts[:, 0].max() <= 2.0 + 1e-12


def test_numerical_range_of_nilpotent_jordan_block():
    # 2x2 Jordan block: the numerical range is the closed disk of radius 1/2
    block = np.array([[0.0, 1.0], [0.0, 0.0]])
    pts = oracle.numerical_range_boundary(block, 360)
    radii = np.hypot(pts[:, 0], pts[:, 1])
    np.testing.assert_allclose(radii, 0.5, atol=1e-12)


def test_numerical_range_hermitian_matches_eigenvalue_interval():
    rng = np.random.default_rng(77)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = (g + g.conj().T) / 2
    eigs = np.linalg.eigvalsh(h)
    pts = oracle.numerical_range_boundary(h, 180)
    np.testing.assert_allclose(pts[:, 1], 0.0, atol=1e-10)
    np.testing.assert_allclose(pts[:, 0].min(), eigs[0], atol=1e-10)
    np.testing.assert_allclose(pts[:, 0].max(), eigs[-1], atol=1e-10)


def test_berezin_samples_inside_numerical_range():
    """Berezin values are averages <T k, k> over unit vectors, so every
    sample must land inside the numerical-range hull."""
    rng = np.random.default_rng(303)
    ws = rng.uniform(0.05, 0.8, 60) * np.exp(2j * np.pi * rng.uniform(size=60))
    for symb in (symbols.blaschke(0.5), symbols.elliptic(0.25 + 0.25j)):
        op = oracle.composition_matrix(kernels.HARDY, symb, 64)
        vals = oracle.berezin_grid(op, kernels.HARDY, ws)
        samples = np.column_stack([vals.real, vals.imag])
        hull_pts = oracle.numerical_range_boundary(op, 180)
        depth = geometry.hull_signed_depth(hull_pts, samples)
        assert depth.min() >= -1e-6


def test_operator_matrix_validation():
    with pytest.raises(ValueError):
        oracle.OperatorMatrix(np.zeros((2, 3)), "hardy-monomial", 2)
    op = oracle.composition_matrix(kernels.HARDY, symbols.elliptic(0.5), 4)
    assert op.basis == "hardy-monomial"
    assert op.truncation == 4


def test_composition_matrix_rejects_l2_and_model():
    with pytest.raises(ValueError):
        oracle.composition_matrix(kernels.L2, symbols.elliptic(0.5), 8)
    with pytest.raises(ValueError):
        oracle.composition_matrix(kernels.model_space(3), symbols.elliptic(0.5), 8)
