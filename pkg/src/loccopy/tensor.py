"""Dense complex linear algebra primitives shared by every module.

Index convention, fixed globally: a product state |x_i> (x) |x_j> of two
factors with dimensions (d1, d2) sits at flat index mu = i + d1*(j - 1)
in 1-based terms, so the FIRST factor varies fastest.  Consequences used
throughout the package:

  * the matrix of op1 (x) op2 is numpy's ``np.kron(op2, op1)``;
  * a d1 x d2 amplitude grid c[i, j] flattens with ``order='F'``;
  * reshaping a flat vector back to factors uses ``order='F'`` as well.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg as la

from .config import DEFAULT, NumericConfig, PreconditionError


def kron(a: np.ndarray, b: np.ndarray, config: NumericConfig | None = None) -> np.ndarray:
    """Tensor product of two operators, first factor fastest.

    Returns the matrix of a (x) b in the mu = i + d1*(j-1) convention,
    which is np.kron(b, a).
    """
    cfg = config or DEFAULT
    a = np.asarray(a)
    b = np.asarray(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > cfg.max_dim:
        raise ValueError(
            f"kron result is {rows} x {cols}, exceeds max dimension {cfg.max_dim}"
        )
    return np.kron(b, a)


def partial_trace_second(m: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Trace out the second factor of an operator on a d1*d2 dimensional space.

    Returns the d1 x d1 matrix with entries sum_k m[(i,k),(i',k)].
    """
    m = np.asarray(m)
    n = d1 * d2
    if m.shape != (n, n):
        raise ValueError(f"expected a {n} x {n} matrix for d1={d1}, d2={d2}, got {m.shape}")
    # row mu = i + d1*k (0-based), so a C-order reshape exposes [k, i, k', i']
    m4 = m.reshape(d2, d1, d2, d1)
    return np.einsum("kikj->ij", m4)


def permute_factors(v: np.ndarray, dims: list[int], perm: tuple[int, ...]) -> np.ndarray:
    """Reorder the tensor factors of a flat state vector.

    ``perm`` is 1-based: output factor position k carries input factor
    perm[k-1].  The amplitude at multi-index (i_perm(1), ..., i_perm(n))
    of the output equals the amplitude at (i_1, ..., i_n) of the input.
    """
    v = np.asarray(v)
    n = len(dims)
    if int(np.prod(dims)) != v.size:
        raise ValueError(f"product of dims {dims} != vector size {v.size}")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm {perm} is not a permutation of 1..{n}")
    axes = [p - 1 for p in perm]
    grid = v.reshape(dims, order="F")
    out = grid.transpose(axes)
    return out.flatten(order="F")


def eig_normal(
    m: np.ndarray, config: NumericConfig | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a normal matrix with orthonormal eigenvectors.

    Uses a complex Schur factorization, which stays unitary under
    eigenvalue degeneracy where a generic eigensolver may not.  Returns
    (eigenvalues, eigenvector columns), unsorted; m @ V == V @ diag(lam).
    """
    cfg = config or DEFAULT
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    t, z = la.schur(m, output="complex")
    off = t - np.diag(np.diag(t))
    residual = la.norm(off)
    if residual > cfg.normality_tol * max(1.0, la.norm(t)):
        raise PreconditionError(
            f"matrix is not normal: off-diagonal Schur residual {residual:.3e}"
        )
    return np.diag(t).copy(), z
