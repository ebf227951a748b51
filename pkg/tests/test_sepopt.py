import numpy as np
import pytest

from mirrorew.linops import HermitianOperator, pauli_string_matrix
from mirrorew.sepopt import (
    biseparable_extreme,
    bipartitions,
    block_positive,
    product_state,
    seesaw,
    separable_bounds,
    spanning_dimension,
    zero_set_search,
)


def bell_projector_2q():
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1 / np.sqrt(2)
    return HermitianOperator(np.outer(v, v.conj()), (2, 2))


def test_bipartitions_count():
    assert len(bipartitions(2)) == 1
    assert len(bipartitions(3)) == 3
    assert len(bipartitions(4)) == 7


def test_seesaw_bell_projector_max():
    # max |<psi x phi | bell>|^2 = 1/2
    val, state = seesaw(bell_projector_2q(), sense="max", restarts=16)
    assert abs(val - 0.5) < 1e-9
    assert abs(state.expectation(bell_projector_2q()) - val) < 1e-12


def test_seesaw_zz_extremes():
    zz = HermitianOperator(pauli_string_matrix("ZZ"), (2, 2))
    lo, _ = seesaw(zz, sense="min", restarts=16)
    hi, _ = seesaw(zz, sense="max", restarts=16)
    assert abs(lo + 1.0) < 1e-9
    assert abs(hi - 1.0) < 1e-9


def test_separable_bounds_bracket(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    op = HermitianOperator(a + a.conj().T, (2, 2))
    report = separable_bounds(op, restarts=32, seed=3)
    lam = np.linalg.eigvalsh(op.data)
    assert lam[0] - 1e-9 <= report.lower <= report.upper <= lam[-1] + 1e-9
    # random product states stay inside the bounds
    for _ in range(200):
        v1 = rng.normal(size=2) + 1j * rng.normal(size=2)
        v2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        st = product_state((v1 / np.linalg.norm(v1), v2 / np.linalg.norm(v2)),
                           dims=(2, 2))
        val = st.expectation(op)
        assert report.lower - 1e-7 <= val <= report.upper + 1e-7


def test_separable_bounds_deterministic():
    op = bell_projector_2q()
    r1 = separable_bounds(op, restarts=16, seed=11)
    r2 = separable_bounds(op, restarts=16, seed=11)
    assert r1.lower == r2.lower and r1.upper == r2.upper


def test_seesaw_local_unitary_covariance(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    op = HermitianOperator(a + a.conj().T, (2, 2))
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    u = np.kron(q, np.eye(2))
    rotated = HermitianOperator(u @ op.data @ u.conj().T, (2, 2))
    r1 = separable_bounds(op, restarts=64, seed=5)
    r2 = separable_bounds(rotated, restarts=64, seed=5)
    assert abs(r1.lower - r2.lower) < 1e-7
    assert abs(r1.upper - r2.upper) < 1e-7


def test_biseparable_extreme_three_qubits():
    # XXX + ZZI + IZZ: every bipartite cut bottoms out at -2
    mat = (
        pauli_string_matrix("XXX")
        + pauli_string_matrix("ZZI")
        + pauli_string_matrix("IZZ")
    )
    op = HermitianOperator(mat, (2, 2, 2))
    val, _ = biseparable_extreme(op, sense="min", restarts=32)
    assert abs(val + 2.0) < 1e-8
    # the fully entangled minimum is strictly lower
    assert np.linalg.eigvalsh(mat).min() < val - 0.5


def test_block_positive_detects_violation():
    zz = HermitianOperator(-pauli_string_matrix("ZZ"), (2, 2))
    ok, counterexample = block_positive(zz, restarts=16)
    assert not ok
    assert counterexample is not None
    assert counterexample.expectation(zz) < -0.5


def test_block_positive_accepts_projector():
    ok, counterexample = block_positive(bell_projector_2q(), restarts=16)
    assert ok and counterexample is None


def test_zero_set_search_finds_zeros():
    # W = I/2 - |bell><bell| scaled: zeros of <W> at product states hitting 1/2
    w = HermitianOperator(
        0.5 * np.eye(4) - bell_projector_2q().data, (2, 2)
    )
    zeros = zero_set_search(w, count_target=6, restarts=128)
    assert len(zeros) >= 2
    for st in zeros:
        assert abs(st.expectation(w)) <= 1e-8


def test_spanning_dimension():
    e0 = np.array([1, 0], dtype=complex)
    e1 = np.array([0, 1], dtype=complex)
    states = [
        product_state((a, b), dims=(2, 2))
        for a in (e0, e1)
        for b in (e0, e1)
    ]
    assert spanning_dimension(states, 4) == 4
    assert spanning_dimension(states[:2], 4) == 2


def test_seesaw_rejects_bad_sense():
    with pytest.raises(ValueError):
        seesaw(bell_projector_2q(), sense="sideways")
