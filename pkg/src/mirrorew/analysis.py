"""Detection verdicts, PPT checks, local-unitary equivalence, X-shaped
optimality checks, decomposability certificates, and the closed-form
correlation coefficients of the three-qubit X-shaped family.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linops import (
    HermitianOperator,
    Operator,
    XShapedOperator,
    min_eigenvalue,
    partial_transpose,
    pauli_string_matrix,
)
from .mirror import MirrorPair, Witness, classify_operator
from . import catalog, sepopt

PPT_TOL = 1e-10
DETECT_TOL = 1e-10
AP_RESIDUAL_TOL = 1e-8
AP_MAX_ITERS = 10_000


# ---------------------------------------------------------------------------
# Detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DetectionVerdict:
    value: float
    bound_violated: str  # 'lower' | 'upper' | 'none'
    witness_id: str = ""
    state_id: str = ""


def _as_operator(obj) -> Operator:
    if isinstance(obj, Witness):
        return obj.op
    if isinstance(obj, catalog.StateSpec):
        return obj.op
    return obj


def detect(w, rho, mu: float | None = None) -> DetectionVerdict:
    """Expectation value of a witness (or mirrored pair) on a state, with the
    violated bound: 'lower' when the value is negative, 'upper' when it
    exceeds the pair's window scalar."""
    if isinstance(w, MirrorPair):
        if mu is None:
            mu = w.mu
        wid = w.w.family
        wop = w.w.op
    else:
        wop = _as_operator(w)
        wid = getattr(w, "family", "")
    rop = _as_operator(rho)
    if wop.dims != rop.dims:
        raise ValueError(f"dims mismatch: {wop.dims} vs {rop.dims}")
    value = float(np.real(np.sum(wop.data.T * rop.data)))
    verdict = "none"
    if value < -DETECT_TOL:
        verdict = "lower"
    elif mu is not None and value > mu + DETECT_TOL:
        verdict = "upper"
    return DetectionVerdict(
        value=value,
        bound_violated=verdict,
        witness_id=wid,
        state_id=getattr(rho, "family", ""),
    )


def is_ppt(rho, bipartition) -> bool:
    """Positive partial transpose across the given subsystem subset."""
    rop = _as_operator(rho)
    return min_eigenvalue(partial_transpose(rop, bipartition)) >= -PPT_TOL


def is_ppt_all(rho) -> bool:
    """PPT across every bipartition of the subsystems."""
    rop = _as_operator(rho)
    return all(
        is_ppt(rop, left) for left, _ in sepopt.bipartitions(rop.n_subsystems)
    )


def is_npt(rho) -> bool:
    return not is_ppt_all(rho)


# ---------------------------------------------------------------------------
# Local-unitary equivalence
# ---------------------------------------------------------------------------


def lu_equivalent_by(a, b, locals_, tol: float = 1e-10) -> bool:
    """Whether (U_1 x ... x U_k) a (.)^dag equals b entrywise."""
    a, b = _as_operator(a), _as_operator(b)
    mats = [np.asarray(u, dtype=complex) for u in locals_]
    for u in mats:
        if np.max(np.abs(u.conj().T @ u - np.eye(len(u)))) > 1e-10:
            raise ValueError("non-unitary local factor")
    big = mats[0]
    for u in mats[1:]:
        big = np.kron(big, u)
    if big.shape != a.data.shape:
        raise ValueError("local factors do not match operator dims")
    return float(np.max(np.abs(big @ a.data @ big.conj().T - b.data))) <= tol


def pauli_conjugation(label: str):
    """Single-qubit Pauli factors of a conjugation label such as 'ZXX'."""
    return [pauli_string_matrix(c) for c in label]


# ---------------------------------------------------------------------------
# X-shaped optimality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XOptimalityReport:
    optimal: bool
    anchor: int | None
    r: float | None
    reason: str
    spanning_dim: int | None = None


def xshaped_optimality_check(
    x: XShapedOperator,
    tol: float = 1e-10,
    cross_check_spanning: bool = False,
    seed: int = 42,
) -> XOptimalityReport:
    """Structural optimality criterion for X-shaped witnesses.

    Requires one antidiagonal slot i with zero diagonal pair and |u_i| = r,
    while every other slot j has u_j = 0 and geometric mean
    sqrt(s_j t_j) = r.  Optionally cross-checks via the spanning dimension of
    the numerically found zero set.
    """
    half = len(x.s)
    anchors = [
        i
        for i in range(half)
        if abs(x.s[i]) <= tol and abs(x.t[i]) <= tol and abs(x.u[i]) > tol
    ]
    if len(anchors) != 1:
        return XOptimalityReport(
            False, None, None, f"expected exactly one zero-diagonal slot, found {len(anchors)}"
        )
    i = anchors[0]
    r = abs(x.u[i])
    for j in range(half):
        if j == i:
            continue
        if abs(x.u[j]) > tol:
            return XOptimalityReport(False, i, r, f"nonzero off-diagonal at slot {j}")
        if x.s[j] < -tol or x.t[j] < -tol:
            return XOptimalityReport(False, i, r, f"negative diagonal at slot {j}")
        if abs(np.sqrt(max(x.s[j], 0.0) * max(x.t[j], 0.0)) - r) > 1e-8:
            return XOptimalityReport(
                False, i, r, f"geometric mean at slot {j} differs from r"
            )
    spanning = None
    if cross_check_spanning:
        from .linops import xshape_expand

        op = xshape_expand(x)
        zeros = sepopt.zero_set_search(op, count_target=op.dim, seed=seed)
        spanning = sepopt.spanning_dimension(zeros, op.dim) if zeros else 0
    return XOptimalityReport(True, i, r, "structural conditions hold", spanning)


# ---------------------------------------------------------------------------
# Correlation coefficients of the three-qubit X-shaped family
# ---------------------------------------------------------------------------

R_LABELS = (
    "r300", "r030", "r003", "r330", "r303", "r033", "r333",
    "r111", "r112", "r121", "r211", "r122", "r212", "r221", "r222",
)


@dataclass(frozen=True)
class RCoeffs:
    """The nonzero Pauli correlations r_L = Tr[rho sigma_L] of an X-shaped
    three-qubit state (all other labels vanish identically)."""

    values: dict = field(default_factory=dict)

    def __getattr__(self, name):
        if name.startswith("r") and name[1:].isdigit():
            return self.values.get(name, 0.0)
        raise AttributeError(name)


def rijk(s, t, u) -> RCoeffs:
    """Closed-form correlations of the X-shaped state with diagonal
    (s_1..s_4, t_4..t_1) and antidiagonal u, normalized by nu = sum(s+t).

    The convention is r_L = Tr[rho sigma_L] directly (so r_000 = 1).
    """
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    u = np.asarray(u, dtype=complex)
    nu = float(np.sum(s) + np.sum(t))
    re, im = np.real(u), np.imag(u)
    s1, s2, s3, s4 = s
    t1, t2, t3, t4 = t
    vals = {
        "r111": 2 * (re[0] + re[1] + re[2] + re[3]) / nu,
        "r112": 2 * (-im[0] + im[1] - im[2] + im[3]) / nu,
        "r121": 2 * (-im[0] - im[1] + im[2] + im[3]) / nu,
        "r211": 2 * (-im[0] - im[1] - im[2] - im[3]) / nu,
        "r122": 2 * (-re[0] + re[1] + re[2] - re[3]) / nu,
        "r212": 2 * (-re[0] + re[1] - re[2] + re[3]) / nu,
        "r221": 2 * (-re[0] - re[1] + re[2] + re[3]) / nu,
        "r222": 2 * (im[0] - im[1] - im[2] + im[3]) / nu,
        "r300": (s1 + s2 + s3 + s4 - t1 - t2 - t3 - t4) / nu,
        "r030": (s1 + s2 - s3 - s4 - t1 - t2 + t3 + t4) / nu,
        "r003": (s1 - s2 + s3 - s4 - t1 + t2 - t3 + t4) / nu,
        "r330": (s1 + s2 - s3 - s4 + t1 + t2 - t3 - t4) / nu,
        "r303": (s1 - s2 + s3 - s4 + t1 - t2 + t3 - t4) / nu,
        "r033": (s1 - s2 - s3 + s4 + t1 - t2 - t3 + t4) / nu,
        "r333": (s1 - s2 - s3 + s4 - t1 + t2 + t3 - t4) / nu,
    }
    return RCoeffs(vals)


def rijk_of(spec: catalog.StateSpec) -> RCoeffs:
    """Correlations from an X-shaped StateSpec carrying s, t, u parameters."""
    p = spec.params
    if "s" in p:
        return rijk(p["s"], p["t"], p["u"])
    if spec.family == "x3q-xyz":
        x, y, z = p["x"], p["y"], p["z"]
        return rijk([1, x, y, z], [1, 1 / x, 1 / y, 1 / z], [1, 0, 0, 0])
    if spec.family == "x3q-bc":
        b, c = p["b"], p["c"]
        return rijk([1, 1, 1, b], [1, 1, 1, c], [-1, -1, 1, -1])
    raise ValueError(f"no X-shaped parameters on family {spec.family!r}")


def expectation_via_coeffs(i1: int, i2: int, i3: int, r: RCoeffs) -> float:
    """Closed-form expectation of the (i1,i2,i3) X-shaped witness on a state
    with correlations r."""
    return (
        1.0
        - r.r333
        - (-1.0) ** i1 * r.r111
        - (-1.0) ** i2 * r.r122
        - (-1.0) ** i3 * r.r212
        - (-1.0) ** (i1 + i2 + i3 + 1) * r.r221
    )


# ---------------------------------------------------------------------------
# Decomposability certificates
# ---------------------------------------------------------------------------


def _psd_part(mat: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh((mat + mat.conj().T) / 2)
    vals = np.clip(vals, 0.0, None)
    return (vecs * vals) @ vecs.conj().T


def _ppt_probe_states(dims, count: int, seed: int):
    """PPT states for the nondecomposability search: catalogued families plus
    random draws from the structured X-shaped / covariant parametrizations."""
    rng = np.random.default_rng((seed, 17))
    probes = []
    if dims == (2, 2, 2):
        probes.append(catalog.rho_xyz(0.5, 0.5, 2.0))
        probes.append(catalog.rho_bc(2.0, 0.5))
        for _ in range(count):
            s = np.exp(rng.uniform(-1.5, 1.5, size=4))
            phases = np.exp(2j * np.pi * rng.uniform(size=4))
            mags = rng.uniform(0, 1, size=4)
            probes.append(catalog.rho_ppt(s, 1 / s, mags * phases))
    elif dims == (3, 3):
        p33 = catalog.pair33()
        probes.extend([p33.rho_w, p33.rho_m])
        probes.append(catalog.covariant_state(1.0, 0.5, 2.0))
        for _ in range(count):
            p = 1.0 + rng.uniform(0, 3)
            q = np.exp(rng.uniform(-1.5, 1.5))
            r = (1.0 + rng.uniform(0, 3)) / q
            probes.append(catalog.covariant_state(p, q, r))
    elif dims == (4, 4):
        for x in (0.5, 1.5, 2.0, 3.0, 5.0):
            probes.append(catalog.rho_x(x))
        for _ in range(count):
            probes.append(catalog.rho_x(float(np.exp(rng.uniform(-2, 2)))))
    return probes


@dataclass(frozen=True)
class DecompCertificate:
    tier: str  # 'NONDECOMPOSABLE' | 'DECOMPOSABLE' | 'UNDECIDED'
    reason: str
    witness_state: object = None
    residual: float | None = None


def decomposability_certificate(
    w, probe_count: int = 1000, seed: int = 42
) -> DecompCertificate:
    """Tiered certificate.

    (a) NONDECOMPOSABLE when some PPT probe state has negative expectation
    (decomposable operators are nonnegative on all PPT states);
    (b) DECOMPOSABLE when W >= 0, or W^Gamma >= 0, or an alternating
    projection onto W = P + Q^Gamma with P, Q >= 0 converges;
    (c) UNDECIDED otherwise.
    """
    op = _as_operator(w)
    for rho in _ppt_probe_states(op.dims, probe_count, seed):
        if not is_ppt_all(rho):
            continue
        val = float(np.real(np.sum(op.data.T * rho.op.data)))
        if val < -1e-8:
            return DecompCertificate(
                "NONDECOMPOSABLE",
                f"detects a PPT state of family {rho.family!r} at {val:.6f}",
                witness_state=rho,
            )
    if min_eigenvalue(op) >= -PPT_TOL:
        return DecompCertificate("DECOMPOSABLE", "operator is positive semidefinite")
    gamma_subset = [op.n_subsystems - 1]
    if min_eigenvalue(partial_transpose(op, gamma_subset)) >= -PPT_TOL:
        return DecompCertificate(
            "DECOMPOSABLE", "partial transpose is positive semidefinite"
        )
    # alternating projections toward W = P + Q^Gamma with P, Q >= 0
    q = np.zeros_like(op.data)
    residual = np.inf
    for _ in range(AP_MAX_ITERS):
        q_gamma = partial_transpose(Operator(q, op.dims), gamma_subset).data
        p = _psd_part(op.data - q_gamma)
        q = _psd_part(partial_transpose(Operator(op.data - p, op.dims), gamma_subset).data)
        q_gamma = partial_transpose(Operator(q, op.dims), gamma_subset).data
        residual = float(np.max(np.abs(op.data - p - q_gamma)))
        if residual <= AP_RESIDUAL_TOL:
            return DecompCertificate(
                "DECOMPOSABLE",
                "alternating projections converged to W = P + Q^Gamma",
                residual=residual,
            )
    return DecompCertificate(
        "UNDECIDED",
        "no PPT detection found and split did not converge",
        residual=residual,
    )


# ---------------------------------------------------------------------------
# Mirror-family classification sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationPoint:
    param: float
    a: float
    mu: float
    lambda_min_m: float
    tier: str  # 'positive' | 'decomposable EW' | 'nondecomposable EW' | 'undecided'


# The mirror is built from a seesaw-computed window scalar whose error is of
# order 1e-7 near flat optima, so positivity of the mirror is judged at the
# same scale as the window tolerance rather than at machine precision.
MIRROR_POSITIVE_TOL = 1e-6


def _classify_mirror(m: HermitianOperator, restarts: int, seed: int) -> tuple[str, float]:
    lam = min_eigenvalue(m)
    if lam >= -MIRROR_POSITIVE_TOL:
        return "positive", lam
    verdict = classify_operator(m, restarts=restarts, seed=seed)
    if verdict != "witness":
        return "undecided", lam
    cert = decomposability_certificate(m, probe_count=200, seed=seed)
    if cert.tier == "NONDECOMPOSABLE":
        return "nondecomposable EW", lam
    if cert.tier == "DECOMPOSABLE":
        return "decomposable EW", lam
    return "undecided", lam


def classify_mirror_family(
    family: str, samples, restarts: int = 64, seed: int = 42
) -> list[ClassificationPoint]:
    """For each parameter sample, build the witness, compute its window
    scalar by seesaw, and classify the mirror mu*I - W."""
    from .mirror import compute_mu

    out = []
    for p in samples:
        p = float(p)
        if family == "choi_phi":
            w = catalog.choi_phi(p)
            a = w.params["a"]
        elif family == "class1":
            w = catalog.wabcd_class("I", p)
            a = w.params["a"]
        elif family == "class2":
            w = catalog.wabcd_class("II", p)
            a = w.params["a"]
        else:
            raise ValueError(f"unknown family {family!r}")
        mu = compute_mu(w, restarts=restarts, seed=seed)
        m = HermitianOperator(mu * np.eye(w.op.dim) - w.op.data, w.op.dims)
        tier, lam = _classify_mirror(m, restarts, seed)
        out.append(ClassificationPoint(param=p, a=a, mu=mu, lambda_min_m=lam, tier=tier))
    return out


# ---------------------------------------------------------------------------
# Generalized-mirror index scan
# ---------------------------------------------------------------------------


def tau_index_scan(theta: float, tol: float = 1e-8) -> list[tuple[int, int]]:
    """Weyl indices (j,k) for which the class II witness at angle theta and
    its Weyl-conjugated mirror hit the closed-form values
    (cos t - sin t - 3)/4 and (cos t + sin t - 3)/4 on tau = (P00 + P_jk)/2."""
    from .linops import weyl
    from .mirror import generalized_pair

    w = catalog.wabcd_class("II", theta)
    want_w = (np.cos(theta) - np.sin(theta) - 3) / 4
    want_m = (np.cos(theta) + np.sin(theta) - 3) / 4
    hits = []
    for j in range(4):
        for k in range(4):
            if (j, k) == (0, 0):
                continue
            tau = catalog.tau_state(j, k)
            u = weyl(4, j, k).data
            m, _, _ = generalized_pair(w, u, subsystem=1)
            tw = float(np.real(np.sum(w.op.data.T * tau.op.data)))
            tm = float(np.real(np.sum(m.data.T * tau.op.data)))
            if abs(tw - want_w) <= tol and abs(tm - want_m) <= tol:
                hits.append((j, k))
    return hits
