"""Self-contained checks of the library's headline numerical claims.

Each criterion is a function returning a CriterionResult; the same runners
back both the pytest acceptance suite and the ``selftest`` CLI subcommand.
Exact algebraic identities are held to 1e-12; optimizer-backed quantities to
the tolerances stated per criterion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from . import analysis, catalog, sepopt
from .linops import (
    HermitianOperator,
    Operator,
    generalized_bell,
    min_eigenvalue,
    pauli_string_matrix,
    weyl,
)
from .graphs import named_graph
from .mirror import compute_mu, generalized_pair


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    restarts: int = 64
    quick: bool = False


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    skipped: bool = False
    details: dict = field(default_factory=dict)


def _residual(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def _trace_with(op: Operator, mat: np.ndarray) -> float:
    return float(np.real(np.sum(op.data.T * mat)))


# ---------------------------------------------------------------------------
# Two-qubit product-state oracle (independent of the seesaw)
# ---------------------------------------------------------------------------


def _bloch_vector(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * phi)], dtype=complex
    )


def two_qubit_grid_oracle(op: Operator, levels: int = 12) -> tuple[float, float]:
    """Product-state extremes of a 4x4 observable by coarse angle grid plus
    local polish; an independent cross-check of the seesaw bounds."""

    def value(params):
        v = np.kron(_bloch_vector(params[0], params[1]), _bloch_vector(params[2], params[3]))
        return float(np.real(v.conj() @ op.data @ v))

    thetas = np.linspace(0, np.pi, levels)
    phis = np.linspace(0, 2 * np.pi, levels, endpoint=False)
    best_min, best_max = None, None
    arg_min, arg_max = None, None
    for t1, p1, t2, p2 in itertools.product(thetas, phis, thetas, phis):
        val = value((t1, p1, t2, p2))
        if best_min is None or val < best_min:
            best_min, arg_min = val, (t1, p1, t2, p2)
        if best_max is None or val > best_max:
            best_max, arg_max = val, (t1, p1, t2, p2)
    lo = optimize.minimize(value, arg_min, method="Nelder-Mead",
                           options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000})
    hi = optimize.minimize(lambda p: -value(p), arg_max, method="Nelder-Mead",
                           options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000})
    return float(lo.fun), float(-hi.fun)


# ---------------------------------------------------------------------------
# Criteria
# ---------------------------------------------------------------------------


def criterion_1(cfg: RunConfig) -> CriterionResult:
    """Exact mirror identities at 1e-12."""
    tol = 1e-12
    details = {}
    pair = catalog.bell_pair_witness("example1")
    details["bell"] = _residual(pair.w.op.data + pair.m.data, 0.5 * np.eye(4))
    for n in range(2, 7):
        p = catalog.alternative_ghz_witness(n)
        details[f"alt-{n}"] = _residual(
            p.w.op.data + p.m.data, 2.0 ** (1 - n) * np.eye(2**n)
        )
    graphs = {
        "path-6": named_graph("linear-cluster", n=6),
        "star-6": named_graph("ghz-star", n=6),
        "grid-2x3": named_graph("grid", rows=2, cols=3),
    }
    for name, g in graphs.items():
        p = catalog.graph_witness(g)
        details[f"graph-{name}"] = _residual(
            p.w.op.data + p.m.data, 2 * (g.n - 1) * np.eye(2**g.n)
        )
    for bits in itertools.product((0, 1), repeat=3):
        p = catalog.w3q_pair(*bits)
        details[f"x3q-{bits}"] = _residual(p.w.op.data + p.m.data, 2 * np.eye(8))
    p33 = catalog.pair33()
    details["pair33"] = _residual(p33.pair.w.op.data + p33.pair.m.data, 4 * np.eye(9))
    for n in range(3, 7):
        p = catalog.ghz_two_measurement_witness(n)
        details[f"2m-{n}"] = _residual(
            p.mu * np.eye(2**n) - p.w.op.data, p.m_scale * p.m.data
        )
    worst = max(details.values())
    return CriterionResult(1, "exact mirror identities", worst <= tol,
                           details={"worst_residual": worst, **details})


def criterion_2(cfg: RunConfig) -> CriterionResult:
    """GHZ-state expectation closed forms at 1e-12."""
    tol = 1e-12
    details = {}
    ok = True
    for n in range(2, 7):
        ghz = np.zeros(2**n, dtype=complex)
        ghz[0] = ghz[-1] = 1 / np.sqrt(2)
        rho = np.outer(ghz, ghz.conj())
        vals = {
            "canonical": (
                _trace_with(catalog.canonical_ghz_witness(n).w.op, rho),
                -1.0 / (2**n - 2),
            ),
            "alternative": (
                _trace_with(catalog.alternative_ghz_witness(n).w.op, rho),
                -1.0 / ((n - 1) * 2**n),
            ),
            "two-measurement": (
                _trace_with(catalog.ghz_two_measurement_witness(n).w.op, rho),
                -1.0 / (2 * (2**n - 2)),
            ),
        }
        ga = catalog.ghz_a_state(n)
        vals["mirror-alt"] = (
            _trace_with(
                Operator(catalog.alternative_ghz_witness(n).m.data, (2,) * n),
                np.outer(ga, ga.conj()),
            ),
            -1.0 / ((n - 1) * 2**n),
        )
        for key, (got, want) in vals.items():
            err = abs(got - want)
            details[f"{key}-{n}"] = err
            ok = ok and err <= tol
    return CriterionResult(2, "GHZ closed forms", ok,
                           details={"worst": max(details.values()), **details})


def criterion_3(cfg: RunConfig) -> CriterionResult:
    """Window scalars by optimization match closed forms at 1e-6."""
    if cfg.quick:
        return CriterionResult(3, "window values by optimization", True, skipped=True)
    tol = 1e-6
    details = {}
    ok = True
    mus = {}
    for n in (3, 4, 5):
        cases = {
            "canonical": (catalog.canonical_ghz_witness(n).w, 1.0 / (2**n - 2)),
            "two-measurement": (
                catalog.ghz_two_measurement_witness(n).w,
                1.5 / (2**n - 2),
            ),
            "alternative": (catalog.alternative_ghz_witness(n).w, 2.0 ** (1 - n)),
        }
        for key, (w, want) in cases.items():
            got = compute_mu(w, restarts=cfg.restarts, seed=cfg.seed)
            mus[(key, n)] = got
            err = abs(got - want)
            details[f"{key}-{n}"] = err
            ok = ok and err <= tol
        hier = (
            mus[("canonical", n)] <= mus[("two-measurement", n)] + tol
            and mus[("two-measurement", n)] <= mus[("alternative", n)] + tol
        )
        details[f"hierarchy-{n}"] = hier
        ok = ok and hier
    # n = 2 values reported, not asserted
    details["mu-n2"] = {
        key: compute_mu(case.w, restarts=cfg.restarts, seed=cfg.seed)
        for key, case in {
            "canonical": catalog.canonical_ghz_witness(2),
            "two-measurement": catalog.ghz_two_measurement_witness(2),
            "alternative": catalog.alternative_ghz_witness(2),
        }.items()
    }
    return CriterionResult(3, "window values by optimization", ok, details=details)


def criterion_4(cfg: RunConfig) -> CriterionResult:
    """Three-qubit bound-entanglement detection closed forms."""
    details = {}
    ok = True
    for b in (0.25, 0.5, 1.0, 2.0, 4.0):
        spec = catalog.rho_bc(b, 1.0 / b)
        ppt = analysis.is_ppt_all(spec)
        details[f"ppt-bc-{b}"] = ppt
        ok = ok and ppt
    w110 = catalog.w3q(1, 1, 0)
    worst = 0.0
    for b in (1.0, 1.5, 2.0, 3.0, 4.0):
        for c in (1.0, 1.5, 2.0, 3.0, 4.0):
            spec = catalog.rho_bc(b, c)
            got = _trace_with(w110.op, spec.op.data)
            want = 2 * (c - 3) / (b + c + 6)
            worst = max(worst, abs(got - want))
    details["w110-closed-form-worst"] = worst
    ok = ok and worst <= 1e-12
    w010 = catalog.w3q(0, 1, 0)
    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        for y in (0.5, 1.0, 2.0):
            for z in (0.5, 1.0, 2.0):
                spec = catalog.rho_xyz(x, y, z)
                got = _trace_with(w010.op, spec.op.data)
                nu = 2 + x + y + z + 1 / x + 1 / y + 1 / z
                want = 2 * (x + y + 1 / z - 3) / nu
                worst = max(worst, abs(got - want))
    details["w010-closed-form-worst"] = worst
    ok = ok and worst <= 1e-12
    # mirrored detection of the Pauli-conjugated state
    m110 = catalog.m3q(1, 1, 0)
    yyy = pauli_string_matrix("YYY")
    worst = 0.0
    for b, c in ((2.0, 0.5), (3.0, 1.0), (1.0, 2.0)):
        spec = catalog.rho_bc(b, c)
        conj = yyy @ spec.op.data @ yyy.conj().T
        got = _trace_with(m110.op, conj)
        want = _trace_with(w110.op, spec.op.data)
        worst = max(worst, abs(got - want))
    details["mirror-transport-worst"] = worst
    ok = ok and worst <= 1e-12
    return CriterionResult(4, "three-qubit bound-entanglement detection", ok, details=details)


def criterion_5(cfg: RunConfig) -> CriterionResult:
    """Coefficient formula matches direct traces for all 8 witnesses."""
    worst = 0.0
    worst_general = 0.0
    for b in (1.0, 1.5, 2.0, 3.0, 4.0):
        for c in (1.0, 1.5, 2.0, 3.0, 4.0):
            spec = catalog.rho_bc(b, c)
            r = analysis.rijk([1, 1, 1, b], [1, 1, 1, c], [-1, -1, 1, -1])
            for bits in itertools.product((0, 1), repeat=3):
                got = analysis.expectation_via_coeffs(*bits, r)
                direct = _trace_with(catalog.w3q(*bits).op, spec.op.data)
                worst = max(worst, abs(got - direct))
                i1, i2, i3 = bits
                general = (
                    2 * c + 6 + 4 * (
                        (-1) ** i1 - (-1) ** i2 + (-1) ** i3 + (-1) ** (i1 + i2 + i3)
                    )
                ) / (b + c + 6)
                worst_general = max(worst_general, abs(got - general))
    ok = worst <= 1e-12 and worst_general <= 1e-12
    return CriterionResult(
        5,
        "coefficient formula equivalence",
        ok,
        details={"vs_direct": worst, "vs_general_form": worst_general},
    )


def _x3q_zero_candidates():
    plus = np.array([1, 1]) / np.sqrt(2)
    minus = np.array([1, -1]) / np.sqrt(2)
    zero = np.array([1, 0], dtype=complex)
    one = np.array([0, 1], dtype=complex)
    combos = [
        (zero, zero, zero), (zero, one, one), (one, zero, one), (one, one, zero),
        (plus, plus, plus), (plus, minus, minus), (minus, plus, minus), (minus, minus, plus),
    ]
    return [sepopt.product_state(c, dims=(2, 2, 2)) for c in combos]


def criterion_6(cfg: RunConfig) -> CriterionResult:
    """Spanning zero sets: the 8x8 witnesses and the 3x3 pair."""
    details = {}
    w000 = catalog.w3q(0, 0, 0)
    zeros = sepopt.zero_set_search(
        w000.op, count_target=8, seed=cfg.seed, candidates=_x3q_zero_candidates()
    )
    span = sepopt.spanning_dimension(zeros, 8) if zeros else 0
    details["w000"] = {"found": len(zeros), "span": span}
    ok = len(zeros) >= 8 and span == 8
    # transport the zero set to every mirror by the local conjugations
    yyy = pauli_string_matrix("YYY")
    base = [st.full_vector() for st in zeros]
    for bits, label in sorted(catalog.X3Q_CONJUGATIONS.items()):
        u = yyy @ pauli_string_matrix(label)
        m = catalog.m3q(*bits)
        vecs = [u @ v for v in base]
        vals = [float(np.real(v.conj() @ m.op.data @ v)) for v in vecs]
        mat = np.array(vecs)
        rank = int(np.sum(np.linalg.svd(mat, compute_uv=False) > 1e-8))
        key = "m" + "".join(map(str, bits))
        details[key] = {"max_abs_value": max(abs(v) for v in vals), "span": rank}
        ok = ok and max(abs(v) for v in vals) <= 1e-8 and rank == 8
    if not cfg.quick:
        p33 = catalog.pair33()
        for name, op in (("pair33-w", p33.pair.w.op), ("pair33-m", p33.pair.m)):
            zs = sepopt.zero_set_search(
                Operator(op.data, (3, 3)), count_target=16, seed=cfg.seed, restarts=400
            )
            span = sepopt.spanning_dimension(zs, 9) if zs else 0
            details[name] = {"found": len(zs), "span": span}
            ok = ok and span == 9
    return CriterionResult(6, "spanning zero sets", ok, details=details)


def criterion_7(cfg: RunConfig) -> CriterionResult:
    """X-shaped optimality conditions and positive mirror."""
    w = catalog.w_opt_xshaped(2.0, 3.0, 0.5, np.pi / 4)
    from .linops import xshape_from_operator

    report = analysis.xshaped_optimality_check(xshape_from_operator(w.op))
    lam = min_eigenvalue(Operator(3.0 * np.eye(8) - w.op.data, (2, 2, 2)))
    ok = report.optimal and lam >= -1e-10
    return CriterionResult(
        7,
        "X-shaped optimality and positive mirror",
        ok,
        details={"structural": report.optimal, "anchor": report.anchor,
                 "r": report.r, "mirror_lambda_min": lam},
    )


def criterion_8(cfg: RunConfig) -> CriterionResult:
    """Mirror of the first 4x4 family detects the PPT states rho_x."""
    w = catalog.wabcd(1, 1, 1, 0, check=True)
    m = HermitianOperator((4 / 3) * np.eye(16) - w.op.data, (4, 4))
    details = {}
    ok = True
    for x in (1.0, 4.0):
        spec = catalog.rho_x(x)
        raw_value = _trace_with(m, spec.op.data) * spec.params["nu"]
        details[f"root-{x}"] = raw_value
        ok = ok and abs(raw_value) <= 1e-9
    for x in (1.5, 2.0, 3.0):
        spec = catalog.rho_x(x)
        val = _trace_with(m, spec.op.data)
        want = (4 / (3 * x)) * (x**2 - 5 * x + 4) / spec.params["nu"]
        details[f"negative-{x}"] = val
        ok = ok and val < 0 and abs(val - want) <= 1e-12
    for x in (0.5, 1.0, 2.0, 3.0, 4.0, 5.0):
        ppt = analysis.is_ppt_all(catalog.rho_x(x))
        details[f"ppt-{x}"] = ppt
        ok = ok and ppt
    return CriterionResult(8, "PPT detection by the 4x4 mirror", ok, details=details)


def criterion_9(cfg: RunConfig) -> CriterionResult:
    """Bell-mixture probe values for the second 4x4 family."""
    details = {}
    hits = analysis.tau_index_scan(np.pi / 4)
    details["matching_indices"] = hits
    ok = len(hits) > 0
    if ok:
        j, k = hits[0]
        tau = catalog.tau_state(j, k)
        details["tau_npt"] = analysis.is_npt(tau)
        ok = ok and analysis.is_npt(tau)
        for theta in (np.pi / 6, np.pi / 4, np.pi / 2):
            w = catalog.wabcd_class("II", theta)
            u = weyl(4, j, k).data
            m, kop, _ = generalized_pair(w, u, subsystem=1)
            tw = _trace_with(w.op, tau.op.data)
            tm = _trace_with(m, tau.op.data)
            want_w = (np.cos(theta) - np.sin(theta) - 3) / 4
            want_m = (np.cos(theta) + np.sin(theta) - 3) / 4
            err = max(abs(tw - want_w), abs(tm - want_m))
            details[f"theta-{theta:.4f}"] = {
                "err": err, "sum": tw + tm, "k_negative": _trace_with(kop, tau.op.data) < 0
            }
            ok = ok and err <= 1e-10 and tw + tm < 0
    return CriterionResult(9, "generalized mirror probe values", ok, details=details)


def criterion_10(cfg: RunConfig) -> CriterionResult:
    """The 3x3 optimal pair: traces, PPT, unitary relation, certificates."""
    p33 = catalog.pair33()
    details = {}
    tw = _trace_with(p33.pair.w.op, p33.rho_w.op.data)
    tm = _trace_with(Operator(p33.pair.m.data, (3, 3)), p33.rho_m.op.data)
    details["trace_w"] = tw
    details["trace_m"] = tm
    ok = abs(tw + 0.4) <= 1e-12 and abs(tm + 0.4) <= 1e-12
    details["rho_w_ppt"] = analysis.is_ppt_all(p33.rho_w)
    details["rho_m_ppt"] = analysis.is_ppt_all(p33.rho_m)
    ok = ok and details["rho_w_ppt"] and details["rho_m_ppt"]
    lu = analysis.lu_equivalent_by(
        p33.pair.w.op, Operator(p33.pair.m.data, (3, 3)),
        [p33.unitary, p33.unitary.conj()],
    )
    details["lu_relation"] = lu
    ok = ok and lu
    if not cfg.quick:
        for name, op in (("w", p33.pair.w.op), ("m", p33.pair.m)):
            report = sepopt.separable_bounds(
                Operator(op.data, (3, 3)), restarts=cfg.restarts, seed=cfg.seed
            )
            details[f"block_positive_{name}"] = report.lower
            ok = ok and report.lower >= -1e-7
            cert = analysis.decomposability_certificate(
                Operator(op.data, (3, 3)), probe_count=200, seed=cfg.seed
            )
            details[f"certificate_{name}"] = cert.tier
            ok = ok and cert.tier == "NONDECOMPOSABLE"
    return CriterionResult(10, "3x3 optimal pair", ok, details=details)


def criterion_11(cfg: RunConfig) -> CriterionResult:
    """Mirror classification sweeps over the covariant families."""
    if cfg.quick:
        return CriterionResult(11, "mirror-family classification", True, skipped=True)
    details = {}
    ok = True
    phis = (np.pi / 3, 2 * np.pi / 3, np.pi, 4 * np.pi / 3, 5 * np.pi / 3)
    points = analysis.classify_mirror_family(
        "choi_phi", phis, restarts=cfg.restarts, seed=cfg.seed
    )
    for pt in points:
        want = "positive" if pt.a <= 1 / 3 + 1e-9 else "decomposable EW"
        details[f"choi-phi-{pt.param:.4f}"] = {"a": pt.a, "tier": pt.tier, "want": want}
        ok = ok and pt.tier == want
    points = analysis.classify_mirror_family(
        "class2", (np.pi / 4, 3 * np.pi / 4), restarts=cfg.restarts, seed=cfg.seed
    )
    wants = {0: "decomposable EW", 1: "positive"}
    for i, pt in enumerate(points):
        details[f"class2-{pt.param:.4f}"] = {"tier": pt.tier, "want": wants[i]}
        ok = ok and pt.tier == wants[i]
    return CriterionResult(11, "mirror-family classification", ok, details=details)


def _random_density(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return rho / np.real(np.trace(rho))


def criterion_12(cfg: RunConfig) -> CriterionResult:
    """Property suites: detection disjointness, oracle agreement, Weyl and
    Bell algebra."""
    details = {}
    ok = True
    rng = np.random.default_rng(cfg.seed)
    pairs = {
        "bell": catalog.bell_pair_witness("example1"),
        "ghz-alt-3": catalog.alternative_ghz_witness(3),
        "x3q-000": catalog.w3q_pair(0, 0, 0),
        "pair33": catalog.pair33().pair,
    }
    n_states = 2000 if cfg.quick else 10_000
    for name, pair in pairs.items():
        d = pair.w.op.dim
        violations = 0
        for _ in range(n_states):
            rho = _random_density(rng, d)
            tw = _trace_with(pair.w.op, rho)
            tm = float(np.real(np.sum(pair.m.data.T * rho)))
            if tw < -1e-12 and tm < -1e-12:
                violations += 1
        details[f"disjointness-{name}"] = violations
        ok = ok and violations == 0
    if not cfg.quick:
        worst = 0.0
        for i in range(20):
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            h = Operator((g + g.conj().T) / 2, (2, 2))
            lo, hi = two_qubit_grid_oracle(h)
            report = sepopt.separable_bounds(h, restarts=cfg.restarts, seed=cfg.seed)
            worst = max(worst, abs(lo - report.lower), abs(hi - report.upper))
        details["grid-oracle-worst"] = worst
        ok = ok and worst <= 1e-5
    worst_weyl = 0.0
    worst_bell = 0.0
    for n in (2, 3, 4):
        omega = np.exp(2j * np.pi / n)
        for k, l, r, s in itertools.product(range(n), repeat=4):
            lhs = weyl(n, k, l).data @ weyl(n, r, s).data
            rhs = omega ** (k * s) * weyl(n, (k + r) % n, (l + s) % n).data
            worst_weyl = max(worst_weyl, _residual(lhs, rhs))
        vecs = np.array([generalized_bell(n, k, l) for k in range(n) for l in range(n)])
        gram = vecs.conj() @ vecs.T
        worst_bell = max(worst_bell, _residual(gram, np.eye(n * n)))
    details["weyl-composition"] = worst_weyl
    details["bell-orthonormality"] = worst_bell
    ok = ok and worst_weyl <= 1e-12 and worst_bell <= 1e-12
    return CriterionResult(12, "property suites", ok, details=details)


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
)


def run_all(cfg: RunConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or RunConfig()
    return [crit(cfg) for crit in CRITERIA]
