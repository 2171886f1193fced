"""Centralized numeric tolerances and error types."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class NumericConfig:
    """All tolerances used across the package.

    Every comparison against an analytic identity goes through one of
    these fields, so batch drivers and the CLI can tighten or relax them
    in a single place.
    """

    unitarity_tol: float = 1e-9         # ||U^dag U - I||_F bound for unitarity checks
    eig_reconstruction_tol: float = 1e-10  # ||V diag(lam) V^dag - M||_F for eig_normal
    normality_tol: float = 1e-8         # Schur off-diagonal residual bound
    phase_tol: float = 1e-7             # eigenphase clustering gap cut, radians
    ortho_tol: float = 1e-9             # relative trace threshold for orthogonality
    sum_tol: float = 1e-10              # one-sided slack on majorization partial sums
    max_ent_tol: float = 1e-8           # max deviation of Schmidt probs from 1/d
    fidelity_tol: float = 1e-9          # copy verification: require f >= 1 - fidelity_tol
    synthesis_tol: float = 1e-9         # ||A (T~ x 1) A^dag - T~ x T~||_F bound
    max_dim: int = 20736                # largest dense matrix dimension (12^4)


DEFAULT = NumericConfig()


class PreconditionError(ValueError):
    """An input violates an operation's mathematical precondition."""


class AmbiguityError(ValueError):
    """Eigenphase clustering is ill-conditioned at the configured tolerance."""


class SynthesisError(RuntimeError):
    """A synthesized operator failed its own verification; signals a tolerance bug."""
