"""Dense linear-algebra oracle for grid states.

Everything here works on explicit matrices so the graphical criteria can be
checked against plain linear algebra.  Matrices are real: Laplacian entries
are integers, so the density matrix is rational and is also kept exactly as
``Fraction`` entries for identity checks.  Floating point only enters in the
eigenvalue iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Bipartition, GridError, GridGraph, connected_components, require_edges

PPT_TOL = 1e-10
RANK_TOL = 1e-9
CCNR_TOL = 1e-9
GRAM_CUTOFF = 1e-12


def laplacian(G: GridGraph) -> np.ndarray:
    """Integer Laplacian indexed by composite (row-major mixed radix) vertex index."""
    n = G.nvertices
    L = np.zeros((n, n), dtype=np.int64)
    for u, v in G.edges:
        a, b = G.index(u), G.index(v)
        L[a, a] += 1
        L[b, b] += 1
        L[a, b] -= 1
        L[b, a] -= 1
    return L


@dataclass(frozen=True)
class DensityMatrix:
    entries: np.ndarray
    dims: tuple[int, ...]
    exact: np.ndarray | None = None

    def __post_init__(self):
        side = math.prod(self.dims)
        if self.entries.shape != (side, side):
            raise GridError(f"matrix shape {self.entries.shape} does not match dims {self.dims}")

    @property
    def side(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_array(cls, arr, dims: Sequence[int]) -> "DensityMatrix":
        return cls(np.asarray(arr, dtype=float), tuple(dims))


def exact_matrix(L: np.ndarray, scale: Fraction) -> np.ndarray:
    out = np.empty(L.shape, dtype=object)
    for idx, x in np.ndenumerate(L):
        out[idx] = Fraction(int(x)) * scale
    return out


def density(G: GridGraph) -> DensityMatrix:
    """rho(G) = L(G) / (2|E|)."""
    require_edges(G)
    L = laplacian(G)
    scale = Fraction(1, 2 * len(G.edges))
    return DensityMatrix(L / (2 * len(G.edges)), G.dims, exact_matrix(L, scale))


def kernel_basis(G: GridGraph) -> list[np.ndarray]:
    """Unnormalised indicator vector of every connected component."""
    vecs = []
    for comp in connected_components(G):
        vec = np.zeros(G.nvertices, dtype=np.int64)
        for v in comp:
            vec[G.index(v)] = 1
        vecs.append(vec)
    return vecs


def _check_symmetric(M: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if M.size and np.max(np.abs(M - M.T)) > tol * max(1.0, np.max(np.abs(M))):
        raise ValueError("matrix is not symmetric")
    return M


def eigenvalues_sym(M, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps visit pivots ``(p, q)`` in fixed row-cyclic order, so results are
    reproducible bit for bit.  Iteration stops once the off-diagonal Frobenius
    norm drops below ``tol`` times the matrix norm.
    """
    A = _check_symmetric(M).copy()
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = max(np.linalg.norm(A), 1.0)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app, aqq = A[p, p], A[q, q]
                if abs(apq) < 1e-18 * scale:
                    A[p, q] = A[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) Givens rotation
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = A[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(A))


def _as_array(rho) -> tuple[np.ndarray, tuple[int, ...]]:
    if isinstance(rho, DensityMatrix):
        return rho.entries, rho.dims
    raise TypeError("expected a DensityMatrix (use DensityMatrix.from_array for raw matrices)")


def block_tensor(M: np.ndarray, dims: Sequence[int], cut: Bipartition) -> tuple[np.ndarray, int, int]:
    """View ``M`` as ``T[a, b, a', b']`` with ``a`` over the left block and ``b`` over the right."""
    if cut.nparties != len(dims):
        raise GridError(f"cut {cut} does not match {len(dims)} parties")
    m, n = cut.sizes(dims)
    N = len(dims)
    order = list(cut.left) + list(cut.right)
    T = M.reshape(tuple(dims) * 2).transpose(order + [N + p for p in order])
    return T.reshape(m, n, m, n), m, n


def partial_transpose(rho, cut: Bipartition) -> np.ndarray:
    """Transpose the right block: result[(a,b),(a',b')] = rho[(a,b'),(a',b)].

    The result is indexed in the flattened ``(left, right)`` order.
    """
    M, dims = _as_array(rho)
    T, m, n = block_tensor(M, dims, cut)
    return T.transpose(0, 3, 2, 1).reshape(m * n, m * n)


def realign(rho, cut: Bipartition) -> np.ndarray:
    """R[(i,k),(j,l)] = rho[(i,j),(k,l)], shape ``m^2 x n^2``."""
    M, dims = _as_array(rho)
    T, m, n = block_tensor(M, dims, cut)
    return T.transpose(0, 2, 1, 3).reshape(m * m, n * n)


def trace_norm(M) -> float:
    """Sum of singular values via the eigenvalues of the smaller Gram matrix."""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0.0
    gram = M.T @ M if M.shape[1] <= M.shape[0] else M @ M.T
    gram = (gram + gram.T) / 2
    ev = eigenvalues_sym(gram)
    # square roots amplify rounding in zero eigenvalues (1e-17 -> 3e-9), so drop them
    ev[ev < GRAM_CUTOFF * max(ev[-1], 0.0)] = 0.0
    return float(np.sum(np.sqrt(ev)))


def numeric_rank(M, tol: float = RANK_TOL) -> int:
    return int(np.sum(np.abs(eigenvalues_sym(M)) > tol))


def min_pt_eigenvalue(rho, cut: Bipartition) -> float:
    return float(eigenvalues_sym(partial_transpose(rho, cut))[0])
