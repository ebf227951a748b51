import numpy as np
import pytest

from mirrorew import catalog, sepopt
from mirrorew.linops import HermitianOperator, pauli_string_matrix
from mirrorew.mirror import (
    MirrorPair,
    Witness,
    classify_operator,
    compute_mu,
    finer_shift,
    generalized_pair,
    mirror_of,
    mspa,
    povm_cloud,
    spa,
    window,
)


def bell_witness():
    mat = (np.eye(4) - pauli_string_matrix("XX") - pauli_string_matrix("ZZ")) / 4
    return Witness(HermitianOperator(mat, (2, 2)), family="bell-2m")


def test_mirror_identity_and_involution():
    w = bell_witness()
    mu = compute_mu(w, restarts=32)
    assert abs(mu - 0.5) < 1e-9
    pair = mirror_of(w, 0.5)
    assert pair.residual() <= 1e-12
    # mirroring the mirror returns the original witness
    back = mirror_of(Witness(pair.m, family="mirror"), 0.5)
    assert np.allclose(back.m.data, w.op.data, atol=1e-12)


def test_mirror_rejects_small_mu():
    w = bell_witness()
    with pytest.raises(ValueError):
        mirror_of(w, 0.2)


def test_window_of_normalized_witness():
    w = bell_witness()  # already trace 1
    win = window(w, restarts=32)
    assert win.lo == 0.0
    assert abs(win.hi - 0.5) < 1e-6


def test_spa_mspa_tightness():
    w = bell_witness()
    pos, p = spa(w.op)
    neg, q = mspa(w.op)
    assert np.linalg.eigvalsh(pos.data).min() >= -1e-12
    assert np.linalg.eigvalsh(neg.data).min() >= -1e-12
    # tightness: any smaller admixture leaves a negative eigenvalue
    assert np.linalg.eigvalsh(w.op.data + (p - 1e-6) * np.eye(4)).min() < 0
    assert np.linalg.eigvalsh((q - 1e-6) * np.eye(4) - w.op.data).min() < 0
    # the two shifted operators sum to (p+q) I
    assert np.allclose(pos.data + neg.data, (p + q) * np.eye(4), atol=1e-12)


def test_finer_shift_preserves_window_scalar():
    # a deliberately non-optimal witness: optimal one plus identity padding
    loose = Witness(
        HermitianOperator(bell_witness().op.data + 0.1 * np.eye(4), (2, 2)),
        family="padded",
    )
    pair = mirror_of(loose, 0.6)
    p = HermitianOperator(np.eye(4), (2, 2))
    eps = 0.05
    shifted = finer_shift(pair, p, eps, restarts=32)
    assert shifted.mu == pair.mu
    total = shifted.w.op.data + shifted.m_scale * shifted.m.data
    assert np.allclose(total, pair.mu * np.eye(4), atol=1e-12)
    # separable expectations of the shifted witness stay inside the window
    rng = np.random.default_rng(8)
    for _ in range(500):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        st = sepopt.product_state(
            (a / np.linalg.norm(a), b / np.linalg.norm(b)), dims=(2, 2)
        )
        val = st.expectation(shifted.w.op)
        assert -1e-9 <= val <= pair.mu + 1e-9


def test_finer_shift_rejects_optimal_witness():
    # the bell pair witness is optimal: any positive subtraction breaks
    # block positivity
    pair = catalog.bell_pair_witness("example1")
    p = HermitianOperator(np.eye(4), (2, 2))
    with pytest.raises(ValueError):
        finer_shift(pair, p, 0.05, restarts=32)


def test_povm_cloud_signs():
    o = HermitianOperator(
        pauli_string_matrix("XX") + pauli_string_matrix("ZZ"), (2, 2)
    )
    w, m, mu = povm_cloud(o, restarts=64)
    assert abs(mu - 2.0) < 1e-6  # separable range of XX+ZZ is [-1, 1]
    rng = np.random.default_rng(13)
    for _ in range(10_000):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        st = sepopt.product_state(
            (a / np.linalg.norm(a), b / np.linalg.norm(b)), dims=(2, 2)
        )
        assert st.expectation(w) >= -1e-6
        assert st.expectation(m) >= -1e-6


def test_classify_operator_labels():
    proj = catalog.bell_pair_witness("example2").m  # a projector: positive
    assert classify_operator(proj, restarts=16) == "positive"
    w = bell_witness().op
    assert classify_operator(w, restarts=32) == "witness"


def test_generalized_pair_identity_reduces_to_mirror():
    w = bell_witness()
    m, k, report = generalized_pair(w, np.eye(2))
    # with the identity, W + M = 2W + ... collapses to K = W + M
    assert np.allclose(m.data, w.op.data, atol=1e-12)
    assert np.allclose(k.data, 2 * w.op.data, atol=1e-12)


def test_generalized_pair_rejects_nonunitary():
    w = bell_witness()
    with pytest.raises(ValueError):
        generalized_pair(w, np.array([[1, 0], [0, 2.0]]))


def test_compute_mu_ghz_families():
    for n in (3, 4):
        assert abs(
            compute_mu(catalog.canonical_ghz_witness(n).w, restarts=32)
            - 1 / (2**n - 2)
        ) < 1e-6
        assert abs(
            compute_mu(catalog.alternative_ghz_witness(n).w, restarts=32)
            - 2.0 ** (1 - n)
        ) < 1e-6


def test_mirror_pair_residual_is_max_abs():
    pair = catalog.canonical_ghz_witness(3)
    total = pair.w.op.data + pair.m_scale * pair.m.data
    assert abs(
        pair.residual() - np.max(np.abs(total - pair.mu * np.eye(8)))
    ) < 1e-15
