"""Constructors for the witness and state families handled by this library.

Families covered: two-qubit Bell-state witnesses, GHZ witnesses (canonical,
alternative, two-measurement), graph-state witnesses, three-qubit X-shaped
witnesses and PPT states, covariant witnesses on n x n systems (3x3 Choi-type
and the 4x4 one-parameter classes), the optimal 3x3 mirrored pair, and the
Bell-diagonal probe states used by the detection machinery.

Witnesses are stored exactly in their standard (sometimes unnormalized)
form; ``Witness.normalize()`` produces the trace-1 copy used for window
computations.  Mirrors are canonically mu*I - W; families whose catalogued
mirror is a trace-normalized rescaling carry the factor in
``MirrorPair.m_scale``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .linops import (
    HermitianOperator,
    Operator,
    PauliSum,
    XShapedOperator,
    bell_projector,
    pauli_string_matrix,
    pauli_to_matrix,
    xshape_expand,
)
from .graphs import (
    Coloring,
    Graph,
    generator,
    ghz_generators,
    graph_projector,
    named_graph,
    two_coloring,
)
from .mirror import MirrorPair, Witness

STATE_PSD_TOL = 1e-10
STATE_TRACE_TOL = 1e-12


class StateSpec:
    """A density matrix with family metadata; positivity and unit trace are
    checked at construction."""

    def __init__(self, op: HermitianOperator, family: str = "", params=None):
        lam = float(np.linalg.eigvalsh(op.data)[0])
        if lam < -STATE_PSD_TOL:
            raise ValueError(f"state is not positive semidefinite: lambda_min {lam:.3e}")
        tr = float(np.real(np.trace(op.data)))
        if abs(tr - 1.0) > STATE_TRACE_TOL:
            raise ValueError(f"state trace {tr!r} is not 1")
        self.op = op
        self.family = family
        self.params = dict(params or {})

    def __repr__(self):
        return f"StateSpec(family={self.family!r}, params={self.params!r})"


def _projector_product(gens) -> HermitianOperator:
    """Product of (I + g)/2 over the given single-string generators."""
    n = gens[0].n_qubits
    out = np.eye(2**n, dtype=complex)
    for g in gens:
        ((label, coeff),) = g.terms.items()
        out = out @ ((np.eye(2**n) + coeff * pauli_string_matrix(label)) / 2)
    return HermitianOperator(out, (2,) * n)


# ---------------------------------------------------------------------------
# Two-qubit examples
# ---------------------------------------------------------------------------


def bell_state(which: str) -> np.ndarray:
    """The four Bell vectors: phi+, phi-, psi+, psi-."""
    v = np.zeros(4, dtype=complex)
    if which in ("phi+", "phi-"):
        v[0], v[3] = 1, (1 if which == "phi+" else -1)
    elif which in ("psi+", "psi-"):
        v[1], v[2] = 1, (1 if which == "psi+" else -1)
    else:
        raise ValueError(f"unknown Bell state {which!r}")
    return v / np.sqrt(2)


def bell_pair_witness(which: str) -> MirrorPair:
    """Two-qubit mirrored pairs.

    'example1': W = (II - XX - ZZ)/4 with mirror M = (II + XX + ZZ)/4 and
    mu = 1/2; both are witnesses.  'example2': the optimal witness
    W = (|psi-><psi-|)^Gamma whose mirror |phi+><phi+| is positive, mu = 1/2.
    """
    if which == "example1":
        w = Witness(
            pauli_to_matrix(PauliSum({"II": 0.25, "XX": -0.25, "ZZ": -0.25})),
            family="bell-2m",
            params={},
            normalized=True,
        )
        m = pauli_to_matrix(PauliSum({"II": 0.25, "XX": 0.25, "ZZ": 0.25}))
        return MirrorPair(w=w, m=m, mu=0.5, m_class="witness")
    if which == "example2":
        psim = bell_state("psi-")
        proj = HermitianOperator(np.outer(psim, psim.conj()), (2, 2))
        wt = proj.data.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
        w = Witness(
            HermitianOperator(wt, (2, 2)), family="bell-opt", params={}, normalized=True
        )
        phip = bell_state("phi+")
        m = HermitianOperator(np.outer(phip, phip.conj()), (2, 2))
        return MirrorPair(w=w, m=m, mu=0.5, m_class="positive")
    raise ValueError(f"unknown case {which!r}")


# ---------------------------------------------------------------------------
# GHZ witnesses
# ---------------------------------------------------------------------------


def ghz_a_state(n: int) -> np.ndarray:
    """The alternating-basis GHZ vector (|0101...> - |1010...>)/sqrt(2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    bits = [i % 2 for i in range(n)]
    idx = int("".join(map(str, bits)), 2)
    comp = 2**n - 1 - idx
    v = np.zeros(2**n, dtype=complex)
    v[idx], v[comp] = 1, -1
    return v / np.sqrt(2)


def ghz_projector(n: int) -> HermitianOperator:
    return graph_projector(ghz_generators(n))


def canonical_ghz_witness(n: int) -> MirrorPair:
    """Trace-1 witness (I/2 - P_GHZ)/(2^{n-1}-1); its mirror is the GHZ
    projector itself (positive, not a witness), with window scalar
    1/(2^n - 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    proj = ghz_projector(n)
    scale = 1.0 / (2 ** (n - 1) - 1)
    w = Witness(
        HermitianOperator(scale * (np.eye(2**n) / 2 - proj.data), (2,) * n),
        family="ghz-canonical",
        params={"n": n},
        normalized=True,
    )
    mu = 1.0 / (2**n - 2)
    return MirrorPair(w=w, m=proj, mu=mu, m_class="positive", m_scale=scale)


def alternative_ghz_witness(n: int) -> MirrorPair:
    """Trace-1 pair W = (I - sum g_i/(n-1))/2^n and M = (I + sum g_i/(n-1))/2^n
    with W + M = 2^{1-n} I; both sides are witnesses."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = ghz_generators(n)
    gsum = gens[0]
    for g in gens[1:]:
        gsum = gsum + g
    ident = PauliSum({"I" * n: 1.0})
    coef = 1.0 / (n - 1)
    w = Witness(
        pauli_to_matrix((ident + (-coef) * gsum) * (1.0 / 2**n)),
        family="ghz-alternative",
        params={"n": n},
        normalized=True,
    )
    m = pauli_to_matrix((ident + coef * gsum) * (1.0 / 2**n))
    return MirrorPair(w=w, m=m, mu=2.0 ** (1 - n), m_class="witness")


def two_measurement_witness(
    g: Graph, coloring: Coloring | None = None, generators=None
) -> MirrorPair:
    """Two-setting witness of a two-colorable graph state.

    W_raw = (3/2)I - P_red - P_blue where P_red/P_blue are the products of
    (I+g_i)/2 over each color class.  Stored trace-normalized; the window
    scalar is (3/2)/Tr[W_raw] and the catalogued mirror is the normalized
    (P_red + P_blue), rescaled into the identity by m_scale.
    """
    if coloring is None:
        coloring = two_coloring(g)
    if coloring is None:
        raise ValueError("graph is not two-colorable")
    if generators is None:
        generators = [generator(g, i) for i in range(g.n)]
    n = g.n
    red = [generators[i] for i in sorted(coloring.red)]
    blue = [generators[i] for i in sorted(coloring.blue)]
    if not red or not blue:
        raise ValueError("both color classes must be nonempty")
    p_red = _projector_product(red)
    p_blue = _projector_product(blue)
    w_raw = 1.5 * np.eye(2**n) - p_red.data - p_blue.data
    m_raw = p_red.data + p_blue.data
    tw = float(np.real(np.trace(w_raw)))
    tm = float(np.real(np.trace(m_raw)))
    w = Witness(
        HermitianOperator(w_raw / tw, (2,) * n),
        family="two-measurement",
        params={"n": n, "red": sorted(coloring.red)},
        normalized=True,
    )
    m = HermitianOperator(m_raw / tm, (2,) * n)
    return MirrorPair(w=w, m=m, mu=1.5 / tw, m_class="undetermined", m_scale=tm / tw)


def ghz_two_measurement_witness(n: int) -> MirrorPair:
    """GHZ two-setting witness: red = the all-X generator, blue = the ZZ
    chain; window scalar (3/2)/(2^n - 2) and positive mirror."""
    gens = ghz_generators(n)
    g = named_graph("ghz-star", n=n)  # carrier for vertex count only
    coloring = Coloring(red={0}, blue=set(range(1, n)))
    pair = two_measurement_witness(g, coloring, generators=gens)
    w = Witness(pair.w.op, family="ghz-two-measurement", params={"n": n}, normalized=True)
    return MirrorPair(w=w, m=pair.m, mu=pair.mu, m_class="positive", m_scale=pair.m_scale)


# ---------------------------------------------------------------------------
# Graph-state witnesses
# ---------------------------------------------------------------------------


def graph_witness(g: Graph, generators=None, family: str = "graph") -> MirrorPair:
    """Unnormalized pair W = (n-1)I - sum g_i and M = (n-1)I + sum g_i with
    W + M = 2(n-1)I; trace-normalized copies have window scalar 2^{1-n}."""
    if generators is None:
        generators = [generator(g, i) for i in range(g.n)]
    n = g.n
    gsum = generators[0]
    for gen in generators[1:]:
        gsum = gsum + gen
    ident = PauliSum({"I" * n: float(n - 1)})
    w = Witness(
        pauli_to_matrix(ident + (-1.0) * gsum),
        family=family,
        params={"n": n},
        normalized=False,
    )
    m = pauli_to_matrix(ident + gsum)
    return MirrorPair(w=w, m=m, mu=float(2 * (n - 1)), m_class="witness")


def ghz_stabilizer_witness(n: int) -> MirrorPair:
    """Graph-style pair built from the GHZ generator set (all-X plus ZZ
    chain) instead of star-graph generators."""
    g = Graph(n, [])
    return graph_witness(g, generators=ghz_generators(n), family="ghz-stabilizer")


def graph_mirror_unitary(g: Graph) -> Operator:
    """Local unitary connecting the graph witness to its mirror: Y on
    even-degree vertices, X on odd-degree vertices (flips every generator)."""
    letters = ["Y" if g.degree(i) % 2 == 0 else "X" for i in range(g.n)]
    return Operator(pauli_string_matrix("".join(letters)), (2,) * g.n)


def ghz_mirror_unitary(n: int) -> Operator:
    """Local unitary flipping every GHZ generator: alternating Z,Y,Z,Y,...
    with the last letter X when n is even."""
    letters = ["Z" if i % 2 == 0 else "Y" for i in range(n)]
    if n % 2 == 0:
        letters[-1] = "X"
    return Operator(pauli_string_matrix("".join(letters)), (2,) * n)


# ---------------------------------------------------------------------------
# Three-qubit X-shaped witnesses and PPT states
# ---------------------------------------------------------------------------


def _w3q_sum(i1: int, i2: int, i3: int, sign: float) -> PauliSum:
    return PauliSum(
        {
            "III": 1.0,
            "ZZZ": -sign,
            "XXX": -sign * (-1.0) ** i1,
            "XYY": -sign * (-1.0) ** i2,
            "YXY": -sign * (-1.0) ** i3,
            "YYX": -sign * (-1.0) ** (i1 + i2 + i3 + 1),
        }
    )


def w3q(i1: int, i2: int, i3: int) -> Witness:
    """8x8 witness I - ZZZ -(-1)^{i1}XXX -(-1)^{i2}XYY -(-1)^{i3}YXY
    -(-1)^{i1+i2+i3+1}YYX; detects states that are PPT on every bipartition."""
    if any(i not in (0, 1) for i in (i1, i2, i3)):
        raise ValueError("indices must be bits")
    return Witness(
        pauli_to_matrix(_w3q_sum(i1, i2, i3, 1.0)),
        family="x3q-witness",
        params={"i1": i1, "i2": i2, "i3": i3},
    )


def m3q(i1: int, i2: int, i3: int) -> Witness:
    """Mirror of w3q under mu = 2: all Pauli terms with flipped signs."""
    if any(i not in (0, 1) for i in (i1, i2, i3)):
        raise ValueError("indices must be bits")
    return Witness(
        pauli_to_matrix(_w3q_sum(i1, i2, i3, -1.0)),
        family="x3q-mirror",
        params={"i1": i1, "i2": i2, "i3": i3},
    )


def w3q_pair(i1: int, i2: int, i3: int) -> MirrorPair:
    w = w3q(i1, i2, i3)
    m = m3q(i1, i2, i3)
    return MirrorPair(w=w, m=m.op, mu=2.0, m_class="witness")


# Local Pauli conjugations carrying W[0,0,0] (and M[0,0,0]) to every other
# index triple.
X3Q_CONJUGATIONS = {
    (0, 0, 0): "III",
    (1, 1, 1): "ZZZ",
    (1, 1, 0): "ZXX",
    (1, 0, 1): "XZX",
    (1, 0, 0): "XXZ",
    (0, 1, 1): "YYI",
    (0, 1, 0): "YIY",
    (0, 0, 1): "IYY",
}


def rho_ppt(s, t, u) -> StateSpec:
    """Three-qubit X-shaped state, PPT on every bipartition: diagonal
    (s_1..s_4, t_4..t_1) and antidiagonal u, normalized by sum(s) + sum(t).

    Requires s_i, t_i > 0 with s_i t_i = 1 and |u_i| <= 1.
    """
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    u = np.asarray(u, dtype=complex)
    if s.shape != (4,) or t.shape != (4,) or u.shape != (4,):
        raise ValueError("s, t, u must each have 4 entries")
    if np.any(s <= 0) or np.any(t <= 0):
        raise ValueError("s and t must be positive")
    if np.max(np.abs(s * t - 1.0)) > 1e-12:
        raise ValueError("need s_i * t_i = 1 for PPT")
    if np.max(np.abs(u)) > 1.0 + 1e-12:
        raise ValueError("need |u_i| <= 1 for positivity")
    nu = float(np.sum(s) + np.sum(t))
    # the expansion places t_1 at the bottom-right corner and t_4 adjacent
    # to s_4, matching the mirrored diagonal (s_1..s_4, t_4..t_1)
    op = xshape_expand(XShapedOperator(s / nu, t / nu, u / nu))
    return StateSpec(
        op,
        family="x3q-ppt",
        params={"s": s.tolist(), "t": t.tolist(), "u": u.tolist(), "nu": nu},
    )


def rho_xyz(x: float, y: float, z: float) -> StateSpec:
    """Three-qubit PPT family with diagonal (1,x,y,z,1/z,1/y,1/x,1) and unit
    outer antidiagonal corners; detected by the (0,1,0) witness when
    x + y + 1/z < 3."""
    if min(x, y, z) <= 0:
        raise ValueError("x, y, z must be positive")
    spec = rho_ppt([1, x, y, z], [1, 1 / x, 1 / y, 1 / z], [1, 0, 0, 0])
    spec.family = "x3q-xyz"
    spec.params = {"x": x, "y": y, "z": z, "nu": spec.params["nu"]}
    return spec


def rho_bc(b: float, c: float) -> StateSpec:
    """Three-qubit PPT family (for bc >= 1) with inner diagonal block
    diag(b, c) and alternating-sign antidiagonal; detected by the (1,1,0)
    witness when c < 3."""
    if min(b, c) <= 0:
        raise ValueError("b and c must be positive")
    if b * c < 1 - 1e-12:
        raise ValueError("need bc >= 1 for positivity")
    s = np.array([1.0, 1.0, 1.0, b])
    t = np.array([1.0, 1.0, 1.0, c])
    u = np.array([-1.0, -1.0, 1.0, -1.0])
    nu = float(np.sum(s) + np.sum(t))
    op = xshape_expand(XShapedOperator(s / nu, t / nu, u / nu))
    # positivity of the 2x2 inner block needs bc >= 1, not s_i t_i = 1
    return StateSpec(op, family="x3q-bc", params={"b": b, "c": c, "nu": nu})


def w_opt_xshaped(s2: float, s3: float, s4: float, theta: float) -> Witness:
    """Optimal three-qubit X-shaped witness: zero diagonal corners with
    a unit-modulus corner phase, diagonal (0, s2, s3, s4, 1/s4, 1/s3, 1/s2, 0)."""
    if min(s2, s3, s4) <= 0:
        raise ValueError("s parameters must be positive")
    s = np.array([0.0, s2, s3, s4])
    t = np.array([0.0, 1 / s2, 1 / s3, 1 / s4])
    u = np.array([np.exp(1j * theta), 0, 0, 0])
    op = xshape_expand(XShapedOperator(s, t, u))
    return Witness(
        op,
        family="x3q-optimal",
        params={"s2": s2, "s3": s3, "s4": s4, "theta": theta},
    )


# ---------------------------------------------------------------------------
# Covariant witnesses on n (x) n
# ---------------------------------------------------------------------------


def covariant_witness(alpha, n: int, family: str = "covariant", check: bool = True) -> Witness:
    """Bell-diagonal-covariant witness: diagonal coefficient alpha_j on
    |i, i+j><i, i+j| minus all |ii><jj| cross terms (i != j).

    Validity constraints: sum(alpha) = n - 1 and A A^T = I + (n-2) J for the
    circulant matrix A built from alpha.
    """
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (n,):
        raise ValueError(f"alpha must have {n} entries")
    if check:
        res_sum = abs(float(np.sum(alpha)) - (n - 1))
        a_mat = np.array([[alpha[(l - k) % n] for l in range(n)] for k in range(n)])
        target = np.eye(n) + (n - 2) * np.ones((n, n))
        res_gram = float(np.max(np.abs(a_mat @ a_mat.T - target)))
        if res_sum > 1e-9 or res_gram > 1e-9:
            raise ValueError(
                f"invalid coefficient vector: sum residual {res_sum:.3e}, "
                f"Gram residual {res_gram:.3e}"
            )
    out = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            k = i * n + (i + j) % n
            out[k, k] = alpha[j]
    for i in range(n):
        for j in range(n):
            if i != j:
                out[i * n + i, j * n + j] = -1.0
    return Witness(
        HermitianOperator(out, (n, n)),
        family=family,
        params={"alpha": alpha.tolist(), "n": n},
    )


def choi_abc(a: float, b: float, c: float) -> Witness:
    """3x3 Choi-type witness with diagonal pattern (a, b, c); requires
    a,b,c >= 0, a+b+c >= 2, and bc >= (1-a)^2 when a <= 1."""
    if min(a, b, c) < 0:
        raise ValueError("parameters must be nonnegative")
    if a + b + c < 2 - 1e-12:
        raise ValueError("need a + b + c >= 2")
    if a <= 1 and b * c < (1 - a) ** 2 - 1e-12:
        raise ValueError("need bc >= (1-a)^2 when a <= 1")
    w = covariant_witness([a, b, c], 3, family="choi", check=False)
    w = Witness(w.op, family="choi", params={"a": a, "b": b, "c": c})
    return w


def choi_phi(phi: float) -> Witness:
    """One-parameter optimal slice of the 3x3 family:
    a = (2/3)(1+cos phi), b,c = (1/3)(2 - cos phi -/+ sqrt(3) sin phi)."""
    a = (2 / 3) * (1 + np.cos(phi))
    b = (1 / 3) * (2 - np.cos(phi) - np.sqrt(3) * np.sin(phi))
    c = (1 / 3) * (2 - np.cos(phi) + np.sqrt(3) * np.sin(phi))
    w = covariant_witness([a, b, c], 3, family="choi-phi", check=True)
    return Witness(w.op, family="choi-phi", params={"phi": phi, "a": a, "b": b, "c": c})


def wabcd(a: float, b: float, c: float, d: float, check: bool = True) -> Witness:
    """4x4 covariant witness with diagonal pattern (a, b, c, d)."""
    w = covariant_witness([a, b, c, d], 4, family="wabcd", check=check)
    return Witness(w.op, family="wabcd", params={"a": a, "b": b, "c": c, "d": d})


def wabcd_class(cls: str, theta: float) -> Witness:
    """The two one-parameter 4x4 families.

    Class 'I' (a+c = 2, b+d = 1): a = (2 - sin t)/2, b = (1 + cos t)/2.
    Class 'II' (a+c = 1, b+d = 2): a = (1 + cos t)/2, b = (2 - sin t)/2;
    class II members are optimal for t in (0, pi).
    """
    if cls == "I":
        a = (2 - np.sin(theta)) / 2
        b = (1 + np.cos(theta)) / 2
        c, d = 2 - a, 1 - b
    elif cls == "II":
        a = (1 + np.cos(theta)) / 2
        b = (2 - np.sin(theta)) / 2
        c, d = 1 - a, 2 - b
    else:
        raise ValueError("class must be 'I' or 'II'")
    w = wabcd(a, b, c, d, check=True)
    w.params.update({"class": cls, "theta": theta})
    return w


def rho_x(x: float) -> StateSpec:
    """4x4 PPT state with diagonal pattern (3, x, 1, 1/x) on |i,i+j> and +1
    cross terms |ii><jj|; stored trace-normalized (raw trace in params)."""
    if x <= 0:
        raise ValueError("x must be positive")
    n = 4
    out = np.zeros((16, 16), dtype=complex)
    diag = [3.0, x, 1.0, 1.0 / x]
    for i in range(n):
        for j in range(n):
            k = i * n + (i + j) % n
            out[k, k] = diag[j]
    for i in range(n):
        for j in range(n):
            if i != j:
                out[i * n + i, j * n + j] = -1.0
    nu = float(np.real(np.trace(out)))
    return StateSpec(
        HermitianOperator(out / nu, (4, 4)), family="rho-x", params={"x": x, "nu": nu}
    )


def covariant_state(p: float, q: float, r: float) -> StateSpec:
    """3x3 Bell-diagonal-covariant PPT state: diagonal pattern (p, q, r) with
    +1 cross terms |ii><jj|; PSD needs p >= 1, PPT needs qr >= 1."""
    if p < 1 - 1e-12 or q <= 0 or r <= 0 or q * r < 1 - 1e-12:
        raise ValueError("need p >= 1 and qr >= 1")
    n = 3
    out = np.zeros((9, 9), dtype=complex)
    diag = [p, q, r]
    for i in range(n):
        for j in range(n):
            k = i * n + (i + j) % n
            out[k, k] = diag[j]
    for i in range(n):
        for j in range(n):
            if i != j:
                out[i * n + i, j * n + j] = 1.0
    nu = float(np.real(np.trace(out)))
    return StateSpec(
        HermitianOperator(out / nu, (3, 3)),
        family="covariant-state",
        params={"p": p, "q": q, "r": r, "nu": nu},
    )


# ---------------------------------------------------------------------------
# The optimal 3x3 mirrored pair
# ---------------------------------------------------------------------------


class Pair33(NamedTuple):
    pair: MirrorPair
    rho_w: StateSpec
    rho_m: StateSpec
    unitary: np.ndarray


def pair33() -> Pair33:
    """The 3x3 mirrored pair of optimal witnesses with W + M = 4*I, the PPT
    states each detects at value -2/5, and the unitary U with
    M = (U (x) U*) W (U (x) U*)^dag."""
    w_mat = np.array(
        [
            [0, 0, 0, 0, 1, 0, 0, 0, 1],
            [0, 3, 0, 0, 0, -2, -2, 0, 0],
            [0, 0, 3, -2, 0, 0, 0, -2, 0],
            [0, 0, -2, 3, 0, 0, 0, -2, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, 1],
            [0, -2, 0, 0, 0, 3, -2, 0, 0],
            [0, -2, 0, 0, 0, -2, 3, 0, 0],
            [0, 0, -2, -2, 0, 0, 0, 3, 0],
            [1, 0, 0, 0, 1, 0, 0, 0, 0],
        ],
        dtype=complex,
    )
    m_mat = 4 * np.eye(9) - w_mat
    rw = np.array(
        [
            [3, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 1, 1, 0, 0],
            [0, 0, 1, 1, 0, 0, 0, 1, 0],
            [0, 0, 1, 1, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 3, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 1, 1, 0, 0],
            [0, 1, 0, 0, 0, 1, 1, 0, 0],
            [0, 0, 1, 1, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 3],
        ],
        dtype=complex,
    ) / 15
    rm = np.array(
        [
            [1, 0, 0, 0, 1, 0, 0, 0, 1],
            [0, 2, 0, 0, 0, -1, -1, 0, 0],
            [0, 0, 2, -1, 0, 0, 0, -1, 0],
            [0, 0, -1, 2, 0, 0, 0, -1, 0],
            [1, 0, 0, 0, 1, 0, 0, 0, 1],
            [0, -1, 0, 0, 0, 2, -1, 0, 0],
            [0, -1, 0, 0, 0, -1, 2, 0, 0],
            [0, 0, -1, -1, 0, 0, 0, 2, 0],
            [1, 0, 0, 0, 1, 0, 0, 0, 1],
        ],
        dtype=complex,
    ) / 15
    omega = np.exp(2j * np.pi / 3)
    u = np.array(
        [
            [1, 1, omega],
            [1, omega, 1],
            [np.conj(omega), omega, omega],
        ],
        dtype=complex,
    ) / np.sqrt(3)
    w = Witness(HermitianOperator(w_mat, (3, 3)), family="pair33", params={})
    pair = MirrorPair(
        w=w, m=HermitianOperator(m_mat, (3, 3)), mu=4.0, m_class="witness"
    )
    return Pair33(
        pair=pair,
        rho_w=StateSpec(HermitianOperator(rw, (3, 3)), family="pair33-rho-w"),
        rho_m=StateSpec(HermitianOperator(rm, (3, 3)), family="pair33-rho-m"),
        unitary=u,
    )


# ---------------------------------------------------------------------------
# Bell-diagonal probe states
# ---------------------------------------------------------------------------


def tau_state(j: int, k: int = 1, n: int = 4) -> StateSpec:
    """Equal mixture of the Bell projectors P_00 and P_jk on two n-level
    systems; entangled (NPT) whenever (j,k) != (0,0)."""
    p00 = bell_projector(n, 0, 0)
    pjk = bell_projector(n, j % n, k % n)
    op = HermitianOperator((p00.data + pjk.data) / 2, (n, n))
    return StateSpec(op, family="tau", params={"j": j % n, "k": k % n, "n": n})


# ---------------------------------------------------------------------------
# Catalog manifest
# ---------------------------------------------------------------------------


def default_catalog() -> dict:
    """Every family at representative default parameters, keyed by a stable
    identifier; values are (kind, object) with kind in
    {'witness', 'pair', 'state'}."""
    entries = {}
    entries["bell-example1"] = ("pair", bell_pair_witness("example1"))
    entries["bell-example2"] = ("pair", bell_pair_witness("example2"))
    for n in (3, 4):
        entries[f"ghz-canonical-{n}"] = ("pair", canonical_ghz_witness(n))
        entries[f"ghz-alternative-{n}"] = ("pair", alternative_ghz_witness(n))
        entries[f"ghz-two-measurement-{n}"] = ("pair", ghz_two_measurement_witness(n))
    entries["cluster-4"] = ("pair", graph_witness(named_graph("linear-cluster", n=4)))
    entries["ghz-stabilizer-3"] = ("pair", ghz_stabilizer_witness(3))
    for bits in sorted(X3Q_CONJUGATIONS):
        tag = "".join(map(str, bits))
        entries[f"x3q-{tag}"] = ("pair", w3q_pair(*bits))
    entries["x3q-xyz"] = ("state", rho_xyz(0.5, 0.5, 2.0))
    entries["x3q-bc"] = ("state", rho_bc(2.0, 0.5))
    entries["x3q-optimal"] = ("witness", w_opt_xshaped(2.0, 3.0, 0.5, np.pi / 4))
    entries["choi-110"] = ("witness", choi_abc(1, 1, 0))
    entries["choi-011"] = ("witness", choi_abc(0, 1, 1))
    entries["class1-0"] = ("witness", wabcd_class("I", 0.0))
    entries["class2-pi4"] = ("witness", wabcd_class("II", np.pi / 4))
    entries["rho-x-2"] = ("state", rho_x(2.0))
    entries["pair33"] = ("pair", pair33().pair)
    entries["tau-j1"] = ("state", tau_state(1))
    return entries
