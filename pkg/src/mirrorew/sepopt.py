"""Optimization of Hermitian observables over pure product states.

The workhorse is a seesaw: fixing all parties but one, the optimal local
vector is an extremal eigenvector of the effective operator obtained by
contracting the observable with the remaining parties' states.  Each party
update is exact, so the objective is monotone per sweep; restarts from
Haar-random initial points cover the symmetric basins of the bilinear
landscape.

Parties may be grouped: ``groups=((0,), (1, 2))`` optimizes over states that
are product across the 1|23 cut but arbitrary inside each block.  The
ungrouped default is the fully-product optimization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .linops import Operator

DEFAULT_TOL = 1e-11
MAX_SWEEPS = 500
ZERO_TOL = 1e-8
DEDUP_OVERLAP = 1 - 1e-6


def _default_groups(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple((i,) for i in range(k))


def bipartitions(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All unordered two-block partitions of subsystems 0..k-1."""
    out = []
    rest = list(range(1, k))
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            left = (0,) + extra
            right = tuple(i for i in range(k) if i not in left)
            if right:
                out.append((left, right))
    return out


def _group_isometry(dims, groups, factors) -> np.ndarray:
    """Kron of per-group factors, rows permuted to canonical subsystem order.

    Each factor is either a local vector (shape (d_g,)) or a matrix
    (d_g, c_g) whose columns are kept free.
    """
    mats = [np.asarray(f).reshape(np.asarray(f).shape[0], -1) for f in factors]
    t = mats[0]
    for m in mats[1:]:
        t = np.kron(t, m)
    order = [i for g in groups for i in g]
    if order != sorted(order):
        row_dims = [dims[i] for i in order]
        arr = t.reshape(row_dims + [t.shape[1]])
        perm = [order.index(i) for i in range(len(dims))] + [len(dims)]
        t = arr.transpose(perm).reshape(-1, t.shape[1])
    return t


@dataclass(frozen=True)
class ProductState:
    """One unit vector per party group, in canonical subsystem order."""

    vectors: tuple
    groups: tuple
    dims: tuple

    def __init__(self, vectors, groups, dims):
        vectors = tuple(np.asarray(v, dtype=complex) for v in vectors)
        groups = tuple(tuple(g) for g in groups)
        dims = tuple(dims)
        for v, g in zip(vectors, groups):
            d = int(np.prod([dims[i] for i in g]))
            if v.shape != (d,):
                raise ValueError(f"vector shape {v.shape} does not match group {g}")
            if abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise ValueError("local vectors must be normalized")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "groups", groups)
        object.__setattr__(self, "dims", dims)

    def full_vector(self) -> np.ndarray:
        return _group_isometry(self.dims, self.groups, self.vectors).ravel()

    def expectation(self, op: Operator) -> float:
        v = self.full_vector()
        return float(np.real(v.conj() @ op.data @ v))


def product_state(vectors, dims=None, groups=None) -> ProductState:
    """Convenience constructor; vectors are normalized in place."""
    vecs = [np.asarray(v, dtype=complex) for v in vectors]
    vecs = [v / np.linalg.norm(v) for v in vecs]
    if dims is None:
        dims = tuple(len(v) for v in vecs)
    if groups is None:
        k, pos = len(vecs), 0
        groups = []
        for v in vecs:
            cnt = 0
            d = 1
            while d < len(v):
                d *= dims[pos + cnt]
                cnt += 1
            if d != len(v):
                raise ValueError("vector length does not split over dims")
            groups.append(tuple(range(pos, pos + max(cnt, 1))))
            pos += max(cnt, 1)
    return ProductState(vecs, groups, dims)


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    upper: float
    arg_lower: ProductState
    arg_upper: ProductState
    restarts_used: int
    converged_basins: int
    seed: int
    history: dict = field(default_factory=dict, compare=False)


def _haar_vector(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def _pick_eigvec(vals: np.ndarray, vecs: np.ndarray, sense: str):
    """Extremal eigenpair with deterministic tie-breaking: among eigenvectors
    degenerate at the extreme, take the one with lexicographically largest
    absolute components, then fix the global phase."""
    idx = 0 if sense == "min" else len(vals) - 1
    target = vals[idx]
    cand = [i for i, v in enumerate(vals) if abs(v - target) <= 1e-12]
    best = cand[0]
    if len(cand) > 1:
        keys = {i: tuple(np.round(np.abs(vecs[:, i]), 9)) for i in cand}
        best = max(cand, key=lambda i: keys[i])
    vec = vecs[:, best].copy()
    nz = np.flatnonzero(np.abs(vec) > 1e-12)
    if len(nz):
        vec *= np.exp(-1j * np.angle(vec[nz[0]]))
    return float(target), vec


def _seesaw_once(op, groups, vectors, sense, tol, max_sweeps):
    dims = op.dims
    value = None
    history = []
    for _ in range(max_sweeps):
        prev = value
        for j in range(len(groups)):
            d_j = int(np.prod([dims[i] for i in groups[j]]))
            factors = [
                np.eye(d_j) if g == j else vectors[g] for g in range(len(groups))
            ]
            v_iso = _group_isometry(dims, groups, factors)
            eff = v_iso.conj().T @ op.data @ v_iso
            eff = (eff + eff.conj().T) / 2
            vals, vecs = np.linalg.eigh(eff)
            value, vectors[j] = _pick_eigvec(vals, vecs, sense)
        history.append(value)
        # exact party updates cannot move the objective the wrong way
        if prev is not None:
            drift = value - prev if sense == "min" else prev - value
            if drift > 1e-9:
                raise RuntimeError(f"seesaw lost monotonicity by {drift:.3e}")
        if prev is not None and abs(value - prev) < tol:
            break
    return value, vectors, history


def seesaw(
    op: Operator,
    sense: str = "min",
    restarts: int = 64,
    tol: float = DEFAULT_TOL,
    seed: int = 42,
    groups=None,
    max_sweeps: int = MAX_SWEEPS,
):
    """Best product-state value of a Hermitian observable over restarts.

    Returns ``(value, ProductState)``.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    if not op.is_hermitian():
        raise ValueError("seesaw requires a Hermitian observable")
    if op.n_subsystems < 2 and groups is None:
        raise ValueError("need at least two subsystems")
    groups = tuple(tuple(g) for g in (groups or _default_groups(op.n_subsystems)))
    dims = op.dims
    best_val, best_vecs = None, None
    for r in range(restarts):
        rng = np.random.default_rng((seed, r, 0 if sense == "min" else 1))
        vectors = [
            _haar_vector(rng, int(np.prod([dims[i] for i in g]))) for g in groups
        ]
        val, vectors, _ = _seesaw_once(op, groups, vectors, sense, tol, max_sweeps)
        if best_val is None or (val < best_val if sense == "min" else val > best_val):
            best_val, best_vecs = val, [v.copy() for v in vectors]
    return best_val, ProductState(tuple(best_vecs), groups, dims)


def separable_bounds(
    op: Operator,
    restarts: int = 64,
    seed: int = 42,
    groups=None,
    tol: float = DEFAULT_TOL,
) -> BoundsReport:
    """Best-of-restarts lower and upper product-state bounds for op."""
    if not op.is_hermitian():
        raise ValueError("separable_bounds requires a Hermitian observable")
    groups = tuple(tuple(g) for g in (groups or _default_groups(op.n_subsystems)))
    dims = op.dims
    results = {}
    basins = {}
    for sense in ("min", "max"):
        vals = []
        best_val, best_vecs = None, None
        for r in range(restarts):
            rng = np.random.default_rng((seed, r, 0 if sense == "min" else 1))
            vectors = [
                _haar_vector(rng, int(np.prod([dims[i] for i in g]))) for g in groups
            ]
            val, vectors, _ = _seesaw_once(op, groups, vectors, sense, tol, MAX_SWEEPS)
            vals.append(val)
            if best_val is None or (
                val < best_val if sense == "min" else val > best_val
            ):
                best_val, best_vecs = val, [v.copy() for v in vectors]
        results[sense] = (best_val, ProductState(tuple(best_vecs), groups, dims))
        basins[sense] = int(np.sum(np.abs(np.array(vals) - best_val) <= 1e-6))
    lower, arg_lower = results["min"]
    upper, arg_upper = results["max"]
    return BoundsReport(
        lower=lower,
        upper=upper,
        arg_lower=arg_lower,
        arg_upper=arg_upper,
        restarts_used=restarts,
        converged_basins=min(basins["min"], basins["max"]),
        seed=seed,
        history={"basins": basins},
    )


def biseparable_extreme(
    op: Operator,
    sense: str = "max",
    restarts: int = 64,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
):
    """Extreme of op over pure states that are product across at least one
    bipartition of the parties (the relevant separable set for witnesses of
    genuine multipartite entanglement).

    For two parties this coincides with the fully-product optimization.
    Returns ``(value, ProductState)``.
    """
    best_val, best_state = None, None
    for groups in bipartitions(op.n_subsystems):
        val, state = seesaw(
            op, sense=sense, restarts=restarts, seed=seed, groups=groups, tol=tol
        )
        if best_val is None or (val > best_val if sense == "max" else val < best_val):
            best_val, best_state = val, state
    return best_val, best_state


def block_positive(
    op: Operator,
    tol: float = 1e-7,
    restarts: int = 64,
    seed: int = 42,
):
    """Evidence that op is nonnegative on all product states.

    Returns ``(verdict, counterexample)``; the counterexample is the violating
    ProductState when the verdict is False, else None.
    """
    report = separable_bounds(op, restarts=restarts, seed=seed)
    if report.lower >= -tol:
        return True, None
    return False, report.arg_lower


def zero_set_search(
    op: Operator,
    count_target: int = 16,
    seed: int = 42,
    restarts: int | None = None,
    candidates=(),
    zero_tol: float = ZERO_TOL,
) -> list[ProductState]:
    """Product states on which the witness expectation vanishes.

    Runs seesaw minimizations from many seeds, keeps |<op>| <= zero_tol, and
    deduplicates by overlap of the full vectors.  Caller-supplied candidate
    states are screened the same way.  Returns an empty list when nothing is
    found.
    """
    if restarts is None:
        restarts = max(64, 8 * count_target)
    groups = _default_groups(op.n_subsystems)
    found: list[ProductState] = []
    fulls: list[np.ndarray] = []

    def consider(state: ProductState):
        val = state.expectation(op)
        if abs(val) > zero_tol:
            return
        v = state.full_vector()
        for w in fulls:
            if abs(np.vdot(w, v)) > DEDUP_OVERLAP:
                return
        found.append(state)
        fulls.append(v)

    for cand in candidates:
        if not isinstance(cand, ProductState):
            cand = product_state(cand, dims=op.dims)
        consider(cand)
    dims = op.dims
    for r in range(restarts):
        rng = np.random.default_rng((seed, r, 2))
        vectors = [_haar_vector(rng, dims[i]) for i in range(len(dims))]
        val, vectors, _ = _seesaw_once(
            op, groups, vectors, "min", DEFAULT_TOL, MAX_SWEEPS
        )
        consider(ProductState(tuple(vectors), groups, dims))
        if len(found) >= count_target:
            break
    return found


def spanning_dimension(states, total_dim: int) -> int:
    """Numerical rank of the span of the given product states."""
    states = list(states)
    if not states:
        raise ValueError("need at least one state")
    mat = np.array([s.full_vector() for s in states])
    svals = np.linalg.svd(mat, compute_uv=False)
    if svals[0] == 0:
        return 0
    return int(np.sum(svals > 1e-8 * svals[0]))
