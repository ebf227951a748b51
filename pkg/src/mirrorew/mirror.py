"""Mirror construction, structural approximations, separability windows,
and generalized (observable-connected) mirroring.

A canonical mirrored pair satisfies W + M = mu * I.  The window scalar mu of
a trace-normalized witness is its separable upper bound; for operators on
three or more parties the separable set is taken as the convex hull of
states that are product across at least one bipartition, which is the set
bounded by witnesses of genuine multipartite entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .linops import (
    HermitianOperator,
    Operator,
    eig_extremes,
    min_eigenvalue,
)
from . import sepopt

POSITIVE_TOL = 1e-10
WITNESS_TOL = 1e-7

Classification = Literal["positive", "witness", "undetermined"]


@dataclass(frozen=True)
class Witness:
    """A Hermitian observable used as an entanglement witness."""

    op: HermitianOperator
    family: str = ""
    params: dict = None
    normalized: bool = False

    def __init__(self, op, family="", params=None, normalized=False):
        if not isinstance(op, HermitianOperator):
            op = HermitianOperator(op.data if isinstance(op, Operator) else op,
                                   op.dims if isinstance(op, Operator) else None)
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", dict(params or {}))
        object.__setattr__(self, "normalized", bool(normalized))

    def normalize(self) -> "Witness":
        """Trace-1 copy (detection sets are scale invariant)."""
        tr = np.real(self.op.trace())
        if abs(tr) < 1e-14:
            raise ValueError("cannot trace-normalize a traceless witness")
        if abs(tr - 1.0) <= 1e-14:
            return replace(self, normalized=True)
        return Witness(
            HermitianOperator(self.op.data / tr, self.op.dims),
            family=self.family,
            params=self.params,
            normalized=True,
        )


@dataclass(frozen=True)
class MirrorPair:
    """Witness W, mirror M, and the scalar mu with W + scale*M = mu*I.

    ``m_scale`` is 1 for canonical pairs; families whose catalogued mirror is
    a trace-normalized rescaling carry the positive factor explicitly.
    """

    w: Witness
    m: HermitianOperator
    mu: float
    m_class: Classification = "undetermined"
    m_scale: float = 1.0

    def residual(self) -> float:
        ident = np.eye(self.w.op.dim)
        return float(
            np.max(
                np.abs(
                    self.w.op.data + self.m_scale * self.m.data - self.mu * ident
                )
            )
        )


@dataclass(frozen=True)
class Window:
    lo: float
    hi: float

    def __init__(self, hi: float, lo: float = 0.0):
        if hi < 0:
            raise ValueError("window upper end must be nonnegative")
        object.__setattr__(self, "lo", float(lo))
        object.__setattr__(self, "hi", float(hi))


def classify_operator(
    m: Operator, restarts: int = 64, seed: int = 42
) -> Classification:
    """positive | witness | undetermined, per eigenvalue and product-state
    evidence.

    "positive" needs lambda_min >= -1e-10; "witness" needs a clearly negative
    eigenvalue plus block positivity evidence; the band in between stays
    undetermined rather than guessing.
    """
    lam = min_eigenvalue(m)
    if lam >= -POSITIVE_TOL:
        return "positive"
    if lam < -WITNESS_TOL:
        ok, _ = sepopt.block_positive(m, tol=WITNESS_TOL, restarts=restarts, seed=seed)
        if ok:
            return "witness"
    return "undetermined"


def mirror_of(
    w: Witness,
    mu: float,
    classify: bool = True,
    restarts: int = 64,
    seed: int = 42,
) -> MirrorPair:
    """Mirror m = mu*I - w; raises if m is not block-positive (mu below the
    separable upper bound of w)."""
    m = HermitianOperator(mu * np.eye(w.op.dim) - w.op.data, w.op.dims)
    if classify:
        m_class = classify_operator(m, restarts=restarts, seed=seed)
        if m_class == "undetermined" and min_eigenvalue(m) < -WITNESS_TOL:
            ok, counterexample = sepopt.block_positive(
                m, tol=WITNESS_TOL, restarts=restarts, seed=seed
            )
            if not ok:
                raise ValueError(
                    "mu is below the separable upper bound: mirror goes negative "
                    f"on the product state {counterexample.vectors}"
                )
    else:
        m_class = "undetermined"
    return MirrorPair(w=w, m=m, mu=float(mu), m_class=m_class)


def compute_mu(
    w: Witness,
    restarts: int = 64,
    seed: int = 42,
    escalate_to: int = 512,
) -> float:
    """Separable upper bound of the witness by seesaw.

    Restarts escalate when fewer than two restarts agree with the best basin
    to 1e-6 (the bilinear landscape has symmetric local maxima, so a lone
    best basin is weak evidence).
    """
    op = w.op
    if op.n_subsystems == 2:
        report = sepopt.separable_bounds(op, restarts=restarts, seed=seed)
        if report.history["basins"]["max"] < 2 and escalate_to > restarts:
            report = sepopt.separable_bounds(op, restarts=escalate_to, seed=seed)
        return float(report.upper)
    val, _ = sepopt.biseparable_extreme(
        op, sense="max", restarts=restarts, seed=seed
    )
    return float(val)


def window(w: Witness, restarts: int = 64, seed: int = 42) -> Window:
    """Separability window [0, mu] of the trace-normalized witness."""
    return Window(hi=compute_mu(w.normalize(), restarts=restarts, seed=seed))


def spa(op: Operator) -> tuple[HermitianOperator, float]:
    """Admix the identity until positive: returns (op + p*I, p) with the
    minimal p."""
    lam_min, _ = eig_extremes(op)
    p = max(0.0, -lam_min)
    return HermitianOperator(op.data + p * np.eye(op.dim), op.dims), p


def mspa(op: Operator) -> tuple[HermitianOperator, float]:
    """Flip the sign and admix the identity: returns (-op + q*I, q) with the
    minimal q."""
    _, lam_max = eig_extremes(op)
    q = lam_max
    return HermitianOperator(q * np.eye(op.dim) - op.data, op.dims), q


def finer_shift(
    pair: MirrorPair,
    p: Operator,
    eps: float,
    restarts: int = 64,
    seed: int = 42,
    check: bool = True,
) -> MirrorPair:
    """Subtract eps*P from W and add it to M; the window scalar is kept."""
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if min_eigenvalue(p) < -POSITIVE_TOL:
        raise ValueError("shift operator must be positive semidefinite")
    w_new = HermitianOperator(pair.w.op.data - eps * p.data, pair.w.op.dims)
    if check and eps > 0:
        ok, counterexample = sepopt.block_positive(
            w_new, tol=WITNESS_TOL, restarts=restarts, seed=seed
        )
        if not ok:
            raise ValueError(
                "shifted witness is no longer block-positive; violating product "
                f"state {counterexample.vectors}"
            )
    m_new = HermitianOperator(
        pair.m.data + eps * p.data / max(pair.m_scale, 1e-300), pair.m.dims
    )
    return MirrorPair(
        w=replace(pair.w, op=w_new),
        m=m_new,
        mu=pair.mu,
        m_class="undetermined",
        m_scale=pair.m_scale,
    )


def povm_cloud(
    op: Operator, restarts: int = 64, seed: int = 42
) -> tuple[HermitianOperator, HermitianOperator, float]:
    """Mirrored pair from an arbitrary observable via its separable bounds:
    W = O - l*I and M = u*I - O, with mu = u - l."""
    if op.n_subsystems == 2:
        report = sepopt.separable_bounds(op, restarts=restarts, seed=seed)
        lo, up = report.lower, report.upper
    else:
        up, _ = sepopt.biseparable_extreme(op, "max", restarts=restarts, seed=seed)
        lo, _ = sepopt.biseparable_extreme(op, "min", restarts=restarts, seed=seed)
    ident = np.eye(op.dim)
    w = HermitianOperator(op.data - lo * ident, op.dims)
    m = HermitianOperator(up * ident - op.data, op.dims)
    return w, m, float(up - lo)


def generalized_pair(
    w: Witness,
    u_local: np.ndarray,
    subsystem: int = 1,
    probes=(),
):
    """Mirror through a local unitary instead of the identity:
    M = (I x u) W (I x u)^dag and K = W + M.

    K is block-positive whenever W is, since the product-state set is
    invariant under local unitaries.  Returns (M, K, report) where the report
    lists probe states detected by both W and M.
    """
    u_local = np.asarray(u_local, dtype=complex)
    if np.max(np.abs(u_local.conj().T @ u_local - np.eye(len(u_local)))) > 1e-10:
        raise ValueError("u_local is not unitary")
    dims = w.op.dims
    factors = [
        u_local if i == subsystem else np.eye(dims[i]) for i in range(len(dims))
    ]
    big = factors[0]
    for f in factors[1:]:
        big = np.kron(big, f)
    m = HermitianOperator(big @ w.op.data @ big.conj().T, dims)
    k = HermitianOperator(w.op.data + m.data, dims)
    both_detected = []
    for rho in probes:
        tw = float(np.real(np.trace(w.op.data @ rho.data)))
        tm = float(np.real(np.trace(m.data @ rho.data)))
        if tw < 0 and tm < 0:
            both_detected.append((tw, tm))
    return m, k, {"both_detected": both_detected, "n_probes": len(tuple(probes))}
