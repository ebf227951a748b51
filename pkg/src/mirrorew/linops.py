"""Dense complex operator core: tensor algebra, partial transpose, spectra,
Pauli and Weyl expansions.

All operators carry an ordered tuple of subsystem dimensions.  The first
subsystem is the most significant digit of the composite basis index
(big-endian), which matches the ordinary Kronecker product convention of
``numpy.kron``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

HERM_TOL = 1e-10

# Single-qubit Pauli matrices.
PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _as_dims(dims: Iterable[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    if any(d < 2 for d in dims):
        raise ValueError(f"subsystem dimensions must be >= 2, got {dims}")
    return dims


@dataclass(frozen=True)
class Operator:
    """A dense complex square matrix together with its subsystem dimensions."""

    data: np.ndarray
    dims: tuple[int, ...]

    def __init__(self, data: np.ndarray, dims: Iterable[int]):
        dims = _as_dims(dims)
        data = np.asarray(data, dtype=complex)
        total = int(np.prod(dims))
        if data.shape != (total, total):
            raise ValueError(
                f"matrix shape {data.shape} does not match dims {dims} (total {total})"
            )
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def dagger(self) -> "Operator":
        return Operator(self.data.conj().T, self.dims)

    def is_hermitian(self, tol: float = HERM_TOL) -> bool:
        return float(np.max(np.abs(self.data - self.data.conj().T))) <= tol

    def __add__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.data + other.data, self.dims)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.data - other.data, self.dims)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.data * scalar, self.dims)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Operator":
        return Operator(self.data / scalar, self.dims)

    def __neg__(self) -> "Operator":
        return Operator(-self.data, self.dims)

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_dims(other)
        return Operator(self.data @ other.data, self.dims)

    def _check_dims(self, other: "Operator") -> None:
        if self.dims != other.dims:
            raise ValueError(f"dims mismatch: {self.dims} vs {other.dims}")


class HermitianOperator(Operator):
    """Operator verified Hermitian at construction time."""

    def __init__(self, data: np.ndarray, dims: Iterable[int], tol: float = HERM_TOL):
        super().__init__(data, dims)
        dev = float(np.max(np.abs(self.data - self.data.conj().T)))
        if dev > tol:
            raise ValueError(f"matrix is not Hermitian: max deviation {dev:.3e}")


def hermitian(data: np.ndarray, dims: Iterable[int]) -> HermitianOperator:
    return HermitianOperator(data, dims)


def identity(dims: Iterable[int]) -> Operator:
    dims = _as_dims(dims)
    return Operator(np.eye(int(np.prod(dims))), dims)


def tensor(factors: Sequence[Operator]) -> Operator:
    """Kronecker product of operators; dims are concatenated."""
    if not factors:
        raise ValueError("tensor of an empty sequence")
    data = factors[0].data
    dims: tuple[int, ...] = factors[0].dims
    for f in factors[1:]:
        data = np.kron(data, f.data)
        dims = dims + f.dims
    return Operator(data, dims)


def trace_inner(a: Operator, b: Operator) -> complex:
    """Tr[a b] without forming the product matrix."""
    a._check_dims(b)
    return complex(np.sum(a.data.T * b.data))


# ---------------------------------------------------------------------------
# Pauli strings
# ---------------------------------------------------------------------------

# i^k phase table for single-letter products: PAULI_MUL[(a, b)] = (k, c)
# with sigma_a sigma_b = i^k sigma_c.
_PAULI_MUL = {}
for _a in "IXYZ":
    _PAULI_MUL[("I", _a)] = (0, _a)
    _PAULI_MUL[(_a, "I")] = (0, _a)
    _PAULI_MUL[(_a, _a)] = (0, "I")
_PAULI_MUL[("X", "Y")] = (1, "Z")
_PAULI_MUL[("Y", "X")] = (3, "Z")
_PAULI_MUL[("Y", "Z")] = (1, "X")
_PAULI_MUL[("Z", "Y")] = (3, "X")
_PAULI_MUL[("Z", "X")] = (1, "Y")
_PAULI_MUL[("X", "Z")] = (3, "Y")


def pauli_label_mul(a: str, b: str) -> tuple[int, str]:
    """Product of two Pauli strings: returns (k, label) with a*b = i^k * label."""
    if len(a) != len(b):
        raise ValueError("label lengths differ")
    phase = 0
    out = []
    for ca, cb in zip(a, b):
        k, c = _PAULI_MUL[(ca, cb)]
        phase = (phase + k) % 4
        out.append(c)
    return phase, "".join(out)


def pauli_labels_commute(a: str, b: str) -> bool:
    ka, _ = pauli_label_mul(a, b)
    kb, _ = pauli_label_mul(b, a)
    return ka == kb


def pauli_string_matrix(label: str) -> np.ndarray:
    mats = [PAULI[c] for c in label]
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


@dataclass(frozen=True)
class PauliSum:
    """Real-weighted sum of n-qubit Pauli strings, kept in canonical form
    (unique labels, no zero coefficients)."""

    terms: dict[str, float] = field(default_factory=dict)

    def __init__(self, terms: dict[str, float] | None = None, tol: float = 0.0):
        terms = dict(terms or {})
        lengths = {len(k) for k in terms}
        if len(lengths) > 1:
            raise ValueError(f"inconsistent label lengths: {sorted(lengths)}")
        for label in terms:
            if any(c not in "IXYZ" for c in label):
                raise ValueError(f"bad Pauli label {label!r}")
        clean = {k: float(v) for k, v in terms.items() if abs(v) > tol}
        object.__setattr__(self, "terms", clean)

    @property
    def n_qubits(self) -> int:
        if not self.terms:
            raise ValueError("empty PauliSum has no qubit count")
        return len(next(iter(self.terms)))

    def __add__(self, other: "PauliSum") -> "PauliSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0.0) + v
        return PauliSum(out, tol=0.0)

    def __mul__(self, scalar: float) -> "PauliSum":
        return PauliSum({k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__


def pauli_to_matrix(p: PauliSum, n_qubits: int | None = None) -> HermitianOperator:
    """Expand a PauliSum to its dense matrix on (C^2)^{x n}."""
    if not p.terms:
        if n_qubits is None:
            raise ValueError("empty PauliSum needs an explicit qubit count")
        n = n_qubits
    else:
        n = p.n_qubits
        if n_qubits is not None and n_qubits != n:
            raise ValueError("qubit count disagrees with labels")
    out = np.zeros((2**n, 2**n), dtype=complex)
    for label, coeff in p.terms.items():
        out += coeff * pauli_string_matrix(label)
    return HermitianOperator(out, (2,) * n)


def matrix_to_pauli(op: Operator, tol: float = 1e-12) -> PauliSum:
    """Expand a Hermitian multi-qubit operator in the Pauli basis.

    The coefficient of label L is Tr[op sigma_L] / 2^n.
    """
    if any(d != 2 for d in op.dims):
        raise ValueError(f"Pauli expansion requires qubit dims, got {op.dims}")
    n = op.n_subsystems
    terms = {}
    for letters in itertools.product("IXYZ", repeat=n):
        label = "".join(letters)
        coeff = np.real_if_close(
            np.sum(pauli_string_matrix(label).T * op.data) / 2**n
        )
        if abs(coeff) > tol:
            terms[label] = float(np.real(coeff))
    return PauliSum(terms)


# ---------------------------------------------------------------------------
# Partial transpose
# ---------------------------------------------------------------------------


def partial_transpose(op: Operator, subset: Iterable[int]) -> Operator:
    """Transpose the given subsystems of a multipartite operator."""
    subset = set(int(i) for i in subset)
    k = op.n_subsystems
    if any(i < 0 or i >= k for i in subset):
        raise ValueError(f"subsystem index out of range for {k} subsystems: {subset}")
    tens = op.data.reshape(op.dims + op.dims)
    perm = list(range(2 * k))
    for i in subset:
        perm[i], perm[k + i] = perm[k + i], perm[i]
    out = tens.transpose(perm).reshape(op.dim, op.dim)
    return Operator(out, op.dims)


# ---------------------------------------------------------------------------
# Weyl operators and generalized Bell states
# ---------------------------------------------------------------------------


def weyl(n: int, m: int, k: int) -> Operator:
    """Discrete displacement unitary: maps |l> to omega^{m l} |l+k>."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    m, k = m % n, k % n
    omega = np.exp(2j * np.pi / n)
    out = np.zeros((n, n), dtype=complex)
    for ell in range(n):
        out[(ell + k) % n, ell] = omega ** (m * ell)
    return Operator(out, (n,))


def generalized_bell(n: int, k: int, ell: int) -> np.ndarray:
    """Unit vector (I x U_{k ell}) |psi_00> with |psi_00> the maximally
    entangled state of two n-level systems."""
    psi00 = np.zeros(n * n, dtype=complex)
    for j in range(n):
        psi00[j * n + j] = 1.0
    psi00 /= np.sqrt(n)
    u = weyl(n, k, ell).data
    return np.kron(np.eye(n), u) @ psi00


def bell_projector(n: int, k: int, ell: int) -> HermitianOperator:
    v = generalized_bell(n, k, ell)
    return HermitianOperator(np.outer(v, v.conj()), (n, n))


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


def eigvalsh(op: Operator) -> np.ndarray:
    if not op.is_hermitian():
        raise ValueError("eigvalsh requires a Hermitian operator")
    return np.linalg.eigvalsh(op.data)


def eig_extremes(op: Operator) -> tuple[float, float]:
    """Smallest and largest eigenvalue of a Hermitian operator."""
    vals = eigvalsh(op)
    return float(vals[0]), float(vals[-1])


def min_eigenvalue(op: Operator) -> float:
    return eig_extremes(op)[0]


def is_psd(op: Operator, tol: float = 1e-10) -> bool:
    return min_eigenvalue(op) >= -tol


# ---------------------------------------------------------------------------
# X-shaped operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XShapedOperator:
    """Multi-qubit operator supported on the diagonal and anti-diagonal.

    ``s`` holds the first half of the diagonal, ``t`` the second half in
    mirrored order (so ``t[0]`` sits at the bottom-right corner), and ``u``
    the upper anti-diagonal entries, also from the outside in.
    """

    s: np.ndarray
    t: np.ndarray
    u: np.ndarray

    def __init__(self, s, t, u):
        s = np.asarray(s, dtype=float)
        t = np.asarray(t, dtype=float)
        u = np.asarray(u, dtype=complex)
        if not (len(s) == len(t) == len(u)):
            raise ValueError("s, t, u must have equal lengths")
        half = len(s)
        if half < 1 or half & (half - 1):
            raise ValueError(f"length must be a power of two, got {half}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "u", u)

    @property
    def n_qubits(self) -> int:
        return int(np.log2(len(self.s))) + 1


def xshape_expand(x: XShapedOperator) -> HermitianOperator:
    half = len(x.s)
    d = 2 * half
    out = np.zeros((d, d), dtype=complex)
    for i in range(half):
        out[i, i] = x.s[i]
        out[d - 1 - i, d - 1 - i] = x.t[i]
        out[i, d - 1 - i] = x.u[i]
        out[d - 1 - i, i] = np.conj(x.u[i])
    n = int(np.log2(d))
    return HermitianOperator(out, (2,) * n)


def xshape_from_operator(op: Operator, tol: float = 1e-10) -> XShapedOperator:
    """Inverse of :func:`xshape_expand`; raises if entries live off the X."""
    d = op.dim
    half = d // 2
    mask = np.ones((d, d), dtype=bool)
    idx = np.arange(d)
    mask[idx, idx] = False
    mask[idx, d - 1 - idx] = False
    if np.max(np.abs(op.data[mask])) > tol:
        raise ValueError("operator has support outside the diagonal/anti-diagonal")
    s = np.real(np.diag(op.data)[:half])
    t = np.real(np.diag(op.data)[half:][::-1])
    u = np.array([op.data[i, d - 1 - i] for i in range(half)])
    return XShapedOperator(s, t, u)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def operator_to_json(op: Operator) -> dict:
    return {
        "dims": list(op.dims),
        "re": np.real(op.data).tolist(),
        "im": np.imag(op.data).tolist(),
    }


def operator_from_json(obj: dict, require_hermitian: bool = False) -> Operator:
    data = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    if require_hermitian:
        return HermitianOperator(data, obj["dims"])
    return Operator(data, obj["dims"])


def operator_dump(op: Operator) -> str:
    return json.dumps(operator_to_json(op))


def operator_load(text: str, require_hermitian: bool = False) -> Operator:
    return operator_from_json(json.loads(text), require_hermitian)
