import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorew.linops import (
    HermitianOperator,
    Operator,
    PauliSum,
    XShapedOperator,
    bell_projector,
    eig_extremes,
    generalized_bell,
    identity,
    matrix_to_pauli,
    operator_from_json,
    operator_to_json,
    partial_transpose,
    pauli_label_mul,
    pauli_string_matrix,
    pauli_to_matrix,
    tensor,
    trace_inner,
    weyl,
    xshape_expand,
    xshape_from_operator,
)


def random_hermitian(rng, dims):
    d = int(np.prod(dims))
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return HermitianOperator(a + a.conj().T, dims)


DIM_CHOICES = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 2)]


def test_partial_transpose_properties(rng):
    for _ in range(100):
        dims = DIM_CHOICES[rng.integers(len(DIM_CHOICES))]
        k = len(dims)
        subset = tuple(
            i for i in range(k) if rng.integers(2)
        ) or (int(rng.integers(k)),)
        a = random_hermitian(rng, dims)
        b = random_hermitian(rng, dims)
        # involution
        back = partial_transpose(partial_transpose(a, subset), subset)
        assert np.allclose(back.data, a.data, atol=1e-14)
        # linearity
        lin = partial_transpose(
            Operator(2.0 * a.data - 0.5 * b.data, dims), subset
        )
        direct = 2.0 * partial_transpose(a, subset).data - 0.5 * partial_transpose(
            b, subset
        ).data
        assert np.allclose(lin.data, direct, atol=1e-14)
        # trace preservation
        assert abs(np.trace(partial_transpose(a, subset).data) - np.trace(a.data)) < 1e-12
        # transposing every subsystem is the full transpose
        full = partial_transpose(a, range(k))
        assert np.allclose(full.data, a.data.T, atol=1e-14)


def test_partial_transpose_spectrum_of_product(rng):
    # PT on either factor of a product state keeps it PSD
    for _ in range(20):
        v1 = rng.normal(size=3) + 1j * rng.normal(size=3)
        v2 = rng.normal(size=3) + 1j * rng.normal(size=3)
        v = np.kron(v1 / np.linalg.norm(v1), v2 / np.linalg.norm(v2))
        rho = Operator(np.outer(v, v.conj()), (3, 3))
        lam = np.linalg.eigvalsh(partial_transpose(rho, (1,)).data)
        assert lam.min() >= -1e-12


@given(
    st.lists(st.sampled_from("IXYZ"), min_size=1, max_size=4),
    st.lists(st.sampled_from("IXYZ"), min_size=1, max_size=4),
)
@settings(max_examples=80, deadline=None)
def test_pauli_label_mul_matches_matrices(a, b):
    n = max(len(a), len(b))
    la = "".join(a).ljust(n, "I")
    lb = "".join(b).ljust(n, "I")
    phase, lc = pauli_label_mul(la, lb)
    lhs = pauli_string_matrix(la) @ pauli_string_matrix(lb)
    rhs = (1j) ** phase * pauli_string_matrix(lc)
    assert np.allclose(lhs, rhs, atol=1e-14)


@given(
    st.dictionaries(
        st.text(alphabet="IXYZ", min_size=3, max_size=3),
        st.floats(-3, 3, allow_nan=False).filter(lambda x: abs(x) > 1e-6),
        min_size=1,
        max_size=6,
    )
)
@settings(max_examples=60, deadline=None)
def test_pauli_round_trip(terms):
    p = PauliSum(terms)
    op = pauli_to_matrix(p)
    q = matrix_to_pauli(op)
    for label, coeff in terms.items():
        assert abs(q.terms.get(label, 0.0) - coeff) < 1e-10
    for label in q.terms:
        assert label in terms


def test_weyl_composition_exact():
    for n in (2, 3, 4):
        omega = np.exp(2j * np.pi / n)
        for m1 in range(n):
            for k1 in range(n):
                for m2 in range(n):
                    for k2 in range(n):
                        lhs = weyl(n, m1, k1).data @ weyl(n, m2, k2).data
                        rhs = omega ** (m1 * k2) * weyl(
                            n, (m1 + m2) % n, (k1 + k2) % n
                        ).data
                        assert np.allclose(lhs, rhs, atol=1e-13)


def test_bell_basis_orthonormal():
    for n in (2, 3, 4):
        vecs = [generalized_bell(n, k, ell) for k in range(n) for ell in range(n)]
        gram = np.array([[np.vdot(a, b) for b in vecs] for a in vecs])
        assert np.allclose(gram, np.eye(n * n), atol=1e-13)
        for k in range(n):
            for ell in range(n):
                p = bell_projector(n, k, ell)
                assert np.allclose(p.data @ p.data, p.data, atol=1e-13)


def test_two_qubit_mirror_pair_matrices():
    # (II - XX - ZZ)/4 in the computational basis
    ii = np.eye(4)
    xx = pauli_string_matrix("XX")
    zz = pauli_string_matrix("ZZ")
    w = (ii - xx - zz) / 4
    expected = np.array(
        [
            [0, 0, 0, -1],
            [0, 2, -1, 0],
            [0, -1, 2, 0],
            [-1, 0, 0, 0],
        ]
    ) / 4
    assert np.allclose(w, expected, atol=1e-15)
    m = (ii + xx + zz) / 4
    assert np.allclose(w + m, np.eye(4) / 2, atol=1e-15)


def test_xshape_round_trip(rng):
    for _ in range(20):
        s = tuple(rng.uniform(0, 2, 4))
        t = tuple(rng.uniform(0, 2, 4))
        u = tuple(rng.normal(size=4) + 1j * rng.normal(size=4))
        x = XShapedOperator(s, t, u)
        op = xshape_expand(x)
        back = xshape_from_operator(op)
        assert np.allclose(back.s, s, atol=1e-14)
        assert np.allclose(back.t, t, atol=1e-14)
        assert np.allclose(back.u, u, atol=1e-14)


def test_xshape_expand_placement():
    x = XShapedOperator((1, 2, 3, 4), (5, 6, 7, 8), (0, 0, 0, 0))
    m = xshape_expand(x).data
    assert np.allclose(np.diag(m), [1, 2, 3, 4, 8, 7, 6, 5])
    x = XShapedOperator((0,) * 4, (0,) * 4, (1j, 0, 0, 0))
    m = xshape_expand(x).data
    assert m[0, 7] == 1j and m[7, 0] == -1j


def test_tensor_and_trace_inner(rng):
    a = random_hermitian(rng, (2,))
    b = random_hermitian(rng, (3,))
    t = tensor([a, b])
    assert t.dims == (2, 3)
    assert np.allclose(t.data, np.kron(a.data, b.data))
    assert abs(
        trace_inner(t, t) - np.trace(t.data.conj().T @ t.data)
    ) < 1e-10


def test_operator_json_round_trip(rng):
    op = random_hermitian(rng, (2, 3))
    text = json.dumps(operator_to_json(op))
    back = operator_from_json(json.loads(text), require_hermitian=True)
    assert back.dims == op.dims
    assert np.allclose(back.data, op.data, atol=0)


def test_hermitian_rejects_non_hermitian():
    with pytest.raises(ValueError):
        HermitianOperator(np.array([[0, 1], [0, 0]], dtype=complex), (2,))


def test_eig_extremes(rng):
    op = random_hermitian(rng, (2, 2))
    lam = np.linalg.eigvalsh(op.data)
    lo, hi = eig_extremes(op)
    assert abs(lo - lam[0]) < 1e-12 and abs(hi - lam[-1]) < 1e-12


def test_identity_dims():
    i = identity((2, 3))
    assert i.dims == (2, 3)
    assert np.allclose(i.data, np.eye(6))
