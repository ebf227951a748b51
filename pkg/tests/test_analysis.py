import itertools

import numpy as np
import pytest

from mirrorew import analysis, catalog
from mirrorew.linops import (
    HermitianOperator,
    partial_transpose,
    pauli_string_matrix,
)


def trace_with(op, rho):
    return float(np.real(np.sum(op.data.T * rho)))


def test_detect_verdicts():
    pair = catalog.bell_pair_witness("example1")
    bell = catalog.bell_state("phi+")
    rho_ent = HermitianOperator(np.outer(bell, bell.conj()), (2, 2))
    verdict = analysis.detect(pair, rho_ent)
    assert verdict.value < 0 and verdict.bound_violated == "lower"
    # maximally mixed state sits inside the window
    mixed = HermitianOperator(np.eye(4) / 4, (2, 2))
    assert analysis.detect(pair, mixed).bound_violated == "none"


def test_detect_upper_violation():
    # a state detected by the mirror's lower bound violates the witness's
    # upper bound
    pair = catalog.bell_pair_witness("example1")
    psi = catalog.bell_state("psi-")
    rho = HermitianOperator(np.outer(psi, psi.conj()), (2, 2))
    m_val = trace_with(HermitianOperator(pair.m.data, (2, 2)), rho.data)
    assert m_val < 0
    verdict = analysis.detect(pair, rho)
    assert verdict.value > pair.mu
    assert verdict.bound_violated == "upper"


def test_detect_dim_mismatch():
    pair = catalog.bell_pair_witness("example1")
    with pytest.raises(ValueError):
        analysis.detect(pair, catalog.rho_x(2.0))


def test_is_ppt_all_on_bc_grid():
    for b in (0.25, 0.5, 1.0, 2.0, 4.0):
        for c in (0.25, 0.5, 1.0, 2.0, 4.0):
            if b * c < 1:
                continue
            spec = catalog.rho_bc(b, c)
            assert analysis.is_ppt_all(spec) == (b * c >= 1)


def test_is_npt_on_bell():
    bell = catalog.bell_state("phi+")
    rho = HermitianOperator(np.outer(bell, bell.conj()), (2, 2))
    assert analysis.is_npt(rho)
    assert not analysis.is_ppt(rho, (1,))


def test_rijk_closed_forms_match_traces(rng):
    labels = analysis.R_LABELS
    for _ in range(25):
        s = rng.uniform(0.1, 2.0, 4)
        t = rng.uniform(0.1, 2.0, 4)
        u = rng.uniform(-0.3, 0.3, 4) + 1j * rng.uniform(-0.3, 0.3, 4)
        spec = catalog.rho_ppt(s, 1 / s, u * 0)  # PPT family needs s*t = 1
        r = analysis.rijk(s, 1 / s, u * 0)
        for lbl in labels:
            pauli = "".join("IXYZ"[int(ch)] for ch in lbl[1:])
            direct = trace_with(
                HermitianOperator(pauli_string_matrix(pauli), (2, 2, 2)),
                spec.op.data,
            )
            assert abs(direct - getattr(r, lbl)) < 1e-12, lbl


def test_rijk_r111_unit_example():
    r = analysis.rijk([1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1])
    assert abs(r.r111 - 1.0) < 1e-15
    assert abs(r.r000 - 0.0) < 1e-15  # unset labels read as zero


def test_expectation_via_coeffs_full_grid():
    for b in (1.0, 2.0, 4.0):
        for c in (1.0, 2.0, 4.0):
            spec = catalog.rho_bc(b, c)
            r = analysis.rijk([1, 1, 1, b], [1, 1, 1, c], [-1, -1, 1, -1])
            for bits in itertools.product((0, 1), repeat=3):
                got = analysis.expectation_via_coeffs(*bits, r)
                direct = trace_with(catalog.w3q(*bits).op, spec.op.data)
                assert abs(got - direct) < 1e-12


def test_lu_equivalence_checks():
    p33 = catalog.pair33()
    assert analysis.lu_equivalent_by(
        p33.pair.w.op,
        HermitianOperator(p33.pair.m.data, (3, 3)),
        [p33.unitary, p33.unitary.conj()],
    )
    # wrong unitary fails
    assert not analysis.lu_equivalent_by(
        p33.pair.w.op,
        HermitianOperator(p33.pair.m.data, (3, 3)),
        [np.eye(3), np.eye(3)],
    )
    with pytest.raises(ValueError):
        analysis.lu_equivalent_by(
            p33.pair.w.op,
            HermitianOperator(p33.pair.m.data, (3, 3)),
            [np.eye(3) * 2, np.eye(3)],
        )


def test_xshaped_optimality_check():
    from mirrorew.linops import xshape_from_operator

    w = catalog.w_opt_xshaped(2.0, 3.0, 0.5, np.pi / 4)
    report = analysis.xshaped_optimality_check(xshape_from_operator(w.op))
    assert report.optimal, report.reason


def test_decomposability_certificate_tiers():
    # PSD operator: decomposable with P = W, Q = 0
    psd = HermitianOperator(np.eye(9), (3, 3))
    assert analysis.decomposability_certificate(psd).tier == "DECOMPOSABLE"
    # a transposed projector: W = Q^Gamma
    bell = catalog.bell_state("psi-")
    q = np.outer(bell, bell.conj())
    w = partial_transpose(HermitianOperator(q, (2, 2)), (1,))
    cert = analysis.decomposability_certificate(
        HermitianOperator(w.data, (2, 2))
    )
    assert cert.tier == "DECOMPOSABLE"
    # pair33 witness detects a PPT state: nondecomposable
    p33 = catalog.pair33()
    cert = analysis.decomposability_certificate(p33.pair.w.op)
    assert cert.tier == "NONDECOMPOSABLE"


def test_tau_index_scan_finds_match():
    hits = analysis.tau_index_scan(np.pi / 4)
    assert hits, "no Weyl index reproduces the closed forms"
    assert all(jk != (0, 0) for jk in hits)


def test_pauli_conjugation_self_inverse():
    for label in ("III", "ZZZ", "YIY", "XXZ"):
        factors = analysis.pauli_conjugation(label)
        u = factors[0]
        for f in factors[1:]:
            u = np.kron(u, f)
        assert np.allclose(u @ u.conj().T, np.eye(8), atol=1e-14)
