"""Copyability analysis and protocol synthesis for pairs of orthogonal
maximally entangled states.

The pair operator T = D * PT_2(|psi1><psi2|) = U1 U2^dag captures the
relation between two maximally entangled states.  A local copying
protocol with a maximally entangled blank exists iff, after removing a
global phase rotation, the spectrum of T consists of the Mth roots of
unity, each with the same multiplicity D/M, for some M dividing D.
When it does, a unitary A on the doubled space with

    A (T~ (x) 1) A^dag = T~ (x) T~        (T~ the rotated T)

exists and can be built by pairing eigenspaces of equal eigenvalue, and
the protocol's local unitaries follow from A by fixed conjugations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, AmbiguityError, NumericConfig, PreconditionError, SynthesisError
from .states import BipartiteState, assert_max_entangled, assert_unitary, unitary_of_state
from .tensor import eig_normal, kron, partial_trace_second

TAU = 2.0 * math.pi

ORTHOGONAL = "orthogonal"
IDENTICAL = "identical_up_to_phase"
NEITHER = "neither"


@dataclass
class SpectrumReport:
    """Outcome of the spectral copyability test for a pair operator."""

    eigenphases: np.ndarray          # sorted ascending, in [0, 2pi)
    clusters: tuple[tuple[float, int], ...]  # (representative phase, multiplicity)
    rotation: float                  # angle removed so the anchor cluster sits at 0
    detected_m: int | None           # M when copyable, else None
    copyable: bool
    trace: complex


@dataclass
class CopyProtocol:
    """Local unitaries copying two designed states onto a blank.

    A acts on particles (1,3), B on particles (2,4); the transformation
    achieved is A^13 (x) B^24 |psi_j^12>|b^34> = e^{i theta_j}
    |psi_j^12>|psi_j^34> for j in {1, 2}.
    """

    d: int
    blank: BipartiteState
    a_op: np.ndarray
    b_op: np.ndarray
    phases: tuple[float, float]
    wiring: str = "A:(1,3) B:(2,4)"

    def __post_init__(self) -> None:
        n = self.d * self.d
        self.a_op = np.asarray(self.a_op, dtype=complex)
        self.b_op = np.asarray(self.b_op, dtype=complex)
        if self.a_op.shape != (n, n) or self.b_op.shape != (n, n):
            raise ValueError(
                f"operators must be {n} x {n} for d={self.d}, "
                f"got {self.a_op.shape} and {self.b_op.shape}"
            )


def pair_operator(
    psi1: BipartiteState, psi2: BipartiteState, config: NumericConfig | None = None
) -> np.ndarray:
    """T = D * PT_2(|psi1><psi2|), equal to U1 U2^dag; unitary.

    Both inputs must be maximally entangled; that is exactly the
    condition under which the partial trace is proportional to a unitary.
    """
    cfg = config or DEFAULT
    if psi1.d != psi2.d:
        raise ValueError(f"dimension mismatch: {psi1.d} vs {psi2.d}")
    assert_max_entangled(psi1, cfg)
    assert_max_entangled(psi2, cfg)
    d = psi1.d
    rho = np.outer(psi1.vector(), psi2.vector().conj())
    return d * partial_trace_second(rho, d, d)


def orthogonality(t: np.ndarray, config: NumericConfig | None = None) -> str:
    """Classify the state pair behind t by |Tr(T)|.

    <psi2|psi1> = Tr(T)/D, and for copyable pairs the trace magnitude is
    either 0 or D: returns "orthogonal" when |Tr| < D*ortho_tol,
    "identical_up_to_phase" when |Tr| > D*(1 - ortho_tol), else "neither".
    """
    cfg = config or DEFAULT
    t = np.asarray(t)
    d = t.shape[0]
    mag = abs(np.trace(t))
    if mag < d * cfg.ortho_tol:
        return ORTHOGONAL
    if mag > d * (1.0 - cfg.ortho_tol):
        return IDENTICAL
    return NEITHER


def _circular_distance(a: float, b: float) -> float:
    delta = abs(a - b) % TAU
    return min(delta, TAU - delta)


def _cluster_phases(phases: np.ndarray, tol: float) -> list[tuple[float, np.ndarray]]:
    """Group phases (radians, [0, 2pi)) into clusters cut at gaps > tol.

    The first and last groups merge when they meet across the 0/2pi seam.
    Returns (circular mean, member indices) per cluster.
    """
    order = np.argsort(phases)
    sp = phases[order]
    n = sp.size
    cuts = [k + 1 for k in range(n - 1) if sp[k + 1] - sp[k] > tol]
    segments = np.split(order, cuts)
    if len(segments) > 1 and (sp[0] + TAU - sp[-1]) <= tol:
        segments[0] = np.concatenate([segments[-1], segments[0]])
        segments = segments[:-1]
    clusters = []
    for seg in segments:
        rep = float(np.angle(np.sum(np.exp(1j * phases[seg]))) % TAU)
        clusters.append((rep, seg))
    return clusters


def spectral_verdict(t: np.ndarray, config: NumericConfig | None = None) -> SpectrumReport:
    """Decide copyability of the pair behind t from its eigenphases.

    Clusters the eigenphases, removes the rotation that puts the cluster
    containing the smallest phase at 0, and reports copyable iff the
    cluster representatives match the Mth-roots-of-unity grid (M = number
    of clusters) within phase_tol and all multiplicities equal D/M.
    """
    cfg = config or DEFAULT
    t = np.asarray(t, dtype=complex)
    assert_unitary(t, cfg, "pair operator")
    d = t.shape[0]
    lam, _ = eig_normal(t, cfg)
    phases = np.angle(lam) % TAU
    clusters = _cluster_phases(phases, cfg.phase_tol)
    m = len(clusters)

    if m > 1:
        reps = sorted(rep for rep, _ in clusters)
        gaps = [reps[k + 1] - reps[k] for k in range(m - 1)]
        gaps.append(reps[0] + TAU - reps[-1])
        smallest = min(gaps)
        if smallest <= 2.0 * cfg.phase_tol:
            raise AmbiguityError(
                f"two eigenphase clusters are separated by only {smallest:.3e} rad, "
                f"between phase_tol {cfg.phase_tol:.1e} and twice that; "
                "the clustering is ambiguous at this tolerance"
            )

    anchor_member = int(np.argmin(phases))
    anchor = next(rep for rep, seg in clusters if anchor_member in seg)
    rotation = (-anchor) % TAU

    rotated = sorted(
        (((rep + rotation) % TAU, len(seg)) for rep, seg in clusters)
    )
    aligned = all(
        _circular_distance(phase, TAU * k / m) <= cfg.phase_tol
        for k, (phase, _) in enumerate(rotated)
    )
    multiplicities = [count for _, count in rotated]
    copyable = bool(aligned and d % m == 0 and all(c == d // m for c in multiplicities))

    return SpectrumReport(
        eigenphases=np.sort(phases),
        clusters=tuple((rep, len(seg)) for rep, seg in sorted(clusters, key=lambda c: c[0])),
        rotation=rotation,
        detected_m=m if copyable else None,
        copyable=copyable,
        trace=complex(np.trace(t)),
    )


def degeneracy_form_check(multiplicities: list[int], m: int, d: int) -> bool:
    """Evaluate the quadratic degeneracy condition on root multiplicities.

    With lambda_r = e^{2 pi i (r-1)/M}, the spectra of T~ (x) T~ and
    T~ (x) 1 agree iff for every r

        sum_{s,s'} G_{rss'} d_s d_{s'} = D * d_r,
        G_{rss'} = 1 iff (s + s' - r) mod M == 1.

    Exact integer arithmetic; an independent oracle for the equal-
    degeneracy answer of spectral_verdict.
    """
    mult = [int(x) for x in multiplicities]
    if len(mult) != m:
        raise ValueError(f"expected {m} multiplicities, got {len(mult)}")
    if sum(mult) != d:
        raise ValueError(f"multiplicities sum to {sum(mult)}, expected {d}")
    for r in range(1, m + 1):
        total = 0
        for s in range(1, m + 1):
            for sp in range(1, m + 1):
                if (s + sp - r) % m == 1:
                    total += mult[s - 1] * mult[sp - 1]
        if total != d * mult[r - 1]:
            return False
    return True


def _root_labels(lam: np.ndarray, report: SpectrumReport) -> np.ndarray:
    """Assign each eigenvalue its root-of-unity index after rotation."""
    m = report.detected_m
    rotated = (np.angle(lam) + report.rotation) % TAU
    return np.round(rotated / (TAU / m)).astype(int) % m


def _synthesize_from(
    t: np.ndarray, report: SpectrumReport, config: NumericConfig
) -> np.ndarray:
    d = t.shape[0]
    m = report.detected_m
    lam, v = eig_normal(t, config)
    labels = _root_labels(lam, report)
    if any(int(np.sum(labels == r)) != d // m for r in range(m)):
        raise SynthesisError(
            f"eigenspace dimensions {np.bincount(labels, minlength=m)} "
            f"disagree with equal degeneracy {d}//{m}"
        )

    # Eigenvectors of T~ (x) 1 and of T~ (x) T~ are both v_k (x) v_l at
    # flat index mu = k + d*l, with eigenvalues lambda_{labels[k]} and
    # lambda_{(labels[k] + labels[l]) mod M}.  The spectral condition
    # makes the eigenvalue multiplicities match, so a basis permutation
    # pairing equal eigenvalues conjugates one operator into the other.
    source: dict[int, list[int]] = {r: [] for r in range(m)}
    target: dict[int, list[int]] = {r: [] for r in range(m)}
    for l in range(d):
        for k in range(d):
            mu = k + d * l
            source[labels[k]].append(mu)
            target[(labels[k] + labels[l]) % m].append(mu)
    permutation = np.empty(d * d, dtype=int)
    for r in range(m):
        if len(source[r]) != len(target[r]):
            raise SynthesisError(
                f"eigenspace of root {r} has dimension {len(source[r])} "
                f"as source but {len(target[r])} as target"
            )
        for src, dst in zip(source[r], target[r]):
            permutation[src] = dst
    p = np.zeros((d * d, d * d))
    p[permutation, np.arange(d * d)] = 1.0
    w = np.kron(v, v)  # column k + d*l is v_k (x) v_l in the mu convention
    a = w @ p @ w.conj().T

    t_rot = np.exp(1j * report.rotation) * t
    eye = np.eye(d)
    residual = float(np.linalg.norm(
        a @ kron(t_rot, eye, config) @ a.conj().T - kron(t_rot, t_rot, config)
    ))
    if residual > config.synthesis_tol:
        raise SynthesisError(
            f"synthesized A fails its defining relation: residual {residual:.3e}"
        )
    return a


def synthesize_a(t: np.ndarray, config: NumericConfig | None = None) -> np.ndarray:
    """Build a unitary A with A (T~ (x) 1) A^dag = T~ (x) T~.

    T~ is t rotated per spectral_verdict.  A maps the eigenspace of
    T~ (x) 1 for each root of unity onto the eigenspace of T~ (x) T~ for
    the same root (A P_r A^dag = Q_r).  Deterministic for a given t.
    Raises PreconditionError when the spectral condition fails.
    """
    cfg = config or DEFAULT
    t = np.asarray(t, dtype=complex)
    report = spectral_verdict(t, cfg)
    if not report.copyable:
        raise PreconditionError(
            "pair operator spectrum is not equally degenerate roots of unity; "
            "no copying protocol exists"
        )
    return _synthesize_from(t, report, cfg)


def synthesize_protocol(
    psi1: BipartiteState,
    psi2: BipartiteState,
    blank: BipartiteState,
    config: NumericConfig | None = None,
) -> CopyProtocol:
    """Construct local unitaries A, B copying both psi1 and psi2 onto blank.

    Requires psi1 and psi2 orthogonal, all three states maximally
    entangled, and the pair operator copyable.  The abstract eigenspace
    problem is solved for W = U2^dag U1 (whose solution is the operator
    C_1 relating A and B); then A = (U1 (x) U1) C_1 (U1 (x) U_b)^dag and
    B = conj(C_1), with theta_1 = 0 and theta_2 = -rotation.  The result
    is verified by full four-particle simulation before being returned.
    """
    cfg = config or DEFAULT
    t = pair_operator(psi1, psi2, cfg)
    kind = orthogonality(t, cfg)
    if kind != ORTHOGONAL:
        raise PreconditionError(
            f"states to copy must be orthogonal, got verdict {kind!r}"
        )
    u1 = unitary_of_state(psi1, cfg)
    u2 = unitary_of_state(psi2, cfg)
    ub = unitary_of_state(blank, cfg)

    w = u2.conj().T @ u1  # similar to t, so same spectrum and verdict
    report = spectral_verdict(w, cfg)
    if not report.copyable:
        raise PreconditionError(
            "pair operator spectrum is not equally degenerate roots of unity; "
            "no copying protocol exists"
        )
    c1 = _synthesize_from(w, report, cfg)

    a_op = kron(u1, u1, cfg) @ c1 @ kron(u1, ub, cfg).conj().T
    b_op = c1.conj()
    theta2 = -report.rotation
    theta2 = (theta2 + math.pi) % TAU - math.pi  # wrap to [-pi, pi)
    protocol = CopyProtocol(
        d=psi1.d, blank=blank, a_op=a_op, b_op=b_op, phases=(0.0, theta2)
    )

    from .simulator import verify_copy  # deferred: simulator imports this module

    for label, psi in (("psi1", psi1), ("psi2", psi2)):
        fidelity = verify_copy(protocol, psi, cfg)
        if fidelity < 1.0 - cfg.fidelity_tol:
            raise SynthesisError(
                f"synthesized protocol failed verification on {label}: "
                f"fidelity {fidelity!r}"
            )
    return protocol
