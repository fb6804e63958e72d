"""Unital positive maps and the random instance generators."""
import numpy as np
import pytest

from opineq.generators import (haar_isometry, random_spd, random_state,
                               random_unital_map, random_unitary,
                               random_weights, sandwiched_pair)
from opineq.hermitian import SpectralInterval, eigenvalues, is_psd, loewner_leq
from opineq.maps import (Compression, DirectSum, Pinching, Scaled,
                         UnitaryMixture, identity_map, induced_congruence,
                         make_rotation_mixture, rotation, unit_vector,
                         vector_state_value)

IV = SpectralInterval(1.0, 2.0)


def test_identity_map():
    phi = identity_map(3)
    a = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 1.0]])
    np.testing.assert_allclose(phi(a), a, atol=1e-14)
    assert phi.is_unital


def test_rotation_mixture_known_image():
    # half/half mixture of rotations by pi/3 and pi/4 applied to diag(2, 1)
    phi = make_rotation_mixture(np.pi / 3, np.pi / 4)
    img = phi(np.diag([2.0, 1.0]))
    expected = np.array([[1.375, -0.46650635], [-0.46650635, 1.625]])
    np.testing.assert_allclose(img, expected, atol=1e-8)
    assert abs(np.trace(img) - 3.0) < 1e-12  # unitary mixtures preserve trace


def test_rotation_matrix():
    r = rotation(np.pi / 2)
    np.testing.assert_allclose(r, [[0.0, -1.0], [1.0, 0.0]], atol=1e-15)


def test_mixture_rejects_non_unitary():
    with pytest.raises(ValueError):
        UnitaryMixture([np.array([[1.0, 0.0], [1.0, 1.0]])], [1.0])


def test_mixture_rejects_bad_weights():
    u = np.eye(2)
    with pytest.raises(ValueError):
        UnitaryMixture([u, u], [0.7, 0.7])
    with pytest.raises(ValueError):
        UnitaryMixture([u, u], [1.2, -0.2])


def test_pinching_idempotent_and_unital():
    phi = Pinching([[0, 2], [1, 3]], 4)
    assert phi.is_unital
    a = np.arange(16.0).reshape(4, 4)
    a = (a + a.T) / 2
    once = phi(a)
    np.testing.assert_allclose(phi(once), once, atol=1e-14)
    # off-block entries are gone
    assert once[0, 1] == 0.0 and once[2, 3] == 0.0


def test_pinching_blocks_must_partition():
    with pytest.raises(ValueError):
        Pinching([[0, 1], [1, 2]], 3)
    with pytest.raises(ValueError):
        Pinching([[0]], 2)


def test_compression_dims_and_unitality(rng):
    v = haar_isometry(5, 3, rng)
    phi = Compression(v)
    assert phi.input_dim == 5 and phi.output_dim == 3
    assert phi.is_unital
    a = random_spd(5, IV, rng)
    assert is_psd(phi(a), tol=1e-12)


def test_direct_sum_weights_must_sum_to_identity(rng):
    parts = [Scaled(0.25, 2), Scaled(0.75, 2)]
    phi = DirectSum(parts)
    assert phi.is_unital
    with pytest.raises(ValueError):
        DirectSum([Scaled(0.25, 2), Scaled(0.25, 2)])


def test_induced_congruence_is_unital(rng):
    base = make_rotation_mixture(0.3, 1.1)
    anchor = random_spd(2, IV, rng)
    psi = induced_congruence(base, anchor)
    assert psi.is_unital


def test_positivity_preserved(rng):
    for _ in range(30):
        phi, in_dim = random_unital_map(int(rng.integers(2, 6)), rng)
        a = random_spd(in_dim, SpectralInterval(0.5, 3.0), rng)
        assert is_psd(phi(a), tol=1e-10)


def test_unitality_across_generator(rng):
    for _ in range(50):
        phi, in_dim = random_unital_map(int(rng.integers(2, 7)), rng)
        phi.check_unital()  # raises on defect
        assert phi(np.eye(in_dim)).shape == (phi.output_dim, phi.output_dim)


def test_unit_vector_and_state_value():
    x = unit_vector([3.0, 4.0])
    assert abs(np.linalg.norm(x) - 1.0) < 1e-14
    t = np.diag([1.0, 2.0])
    val = vector_state_value(x, t)
    assert abs(val - (9 / 25 * 1 + 16 / 25 * 2)) < 1e-12
    with pytest.raises(ValueError):
        vector_state_value(np.array([1.0, 1.0]), t)  # not unit norm


def test_random_unitary_is_unitary(rng):
    for n in (2, 4, 7):
        u = random_unitary(n, rng)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(n), atol=1e-11)


def test_haar_first_entry_moment(rng):
    # E |U_11|^2 = 1/n for Haar; dim 4, 10^4 draws, generous band
    n, draws = 4, 10_000
    acc = 0.0
    for _ in range(draws):
        u = random_unitary(n, rng)
        acc += abs(u[0, 0]) ** 2
    assert abs(acc / draws - 1.0 / n) < 0.02


def test_random_spd_spectrum(rng):
    iv = SpectralInterval(1.0, 4.0)
    for _ in range(40):
        n = int(rng.integers(2, 9))
        w = eigenvalues(random_spd(n, iv, rng))
        assert w[0] >= iv.m - 1e-10 and w[-1] <= iv.M + 1e-10
        # endpoints are forced, so constants computed from iv are tight
        assert abs(w[0] - iv.m) < 1e-10 and abs(w[-1] - iv.M) < 1e-10


def test_random_spd_dim_one(rng):
    a = random_spd(1, IV, rng)
    assert a.shape == (1, 1) and IV.m <= a[0, 0] <= IV.M


def test_random_state_and_weights(rng):
    x = random_state(5, rng)
    assert abs(np.linalg.norm(x) - 1.0) < 1e-12
    w = random_weights(4, rng)
    assert w.shape == (4,) and abs(w.sum() - 1.0) < 1e-12 and (w > 0).all()


def test_sandwiched_pair_obeys_sandwich(rng):
    iv_a = SpectralInterval(1.0, 2.0)
    bounds = SpectralInterval(0.8, 1.5)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        a, b = sandwiched_pair(n, iv_a, bounds, rng)
        assert loewner_leq(bounds.m * a, b, tol=1e-10)[0]
        assert loewner_leq(b, bounds.M * a, tol=1e-10)[0]
