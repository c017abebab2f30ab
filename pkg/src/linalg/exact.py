"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays whose entries live in ``[0, p)``. Every
routine is a pure function of its inputs. Pivoting is deterministic: the
leftmost column with a nonzero entry wins, and within it the lowest row index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

MAX_PRIME = 1 << 20


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    divisor = 3
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"Field characteristic must be prime, got {p}")
    if p >= MAX_PRIME:
        raise ValueError(f"Field characteristic {p} exceeds the supported bound {MAX_PRIME}")
    return p


def as_matrix(values: Iterable | np.ndarray, p: int, shape: Optional[tuple[int, int]] = None) -> np.ndarray:
    """Coerce ``values`` into a reduced int64 matrix, keeping empty shapes legal."""
    arr = np.asarray(values, dtype=np.int64)
    if shape is not None:
        arr = arr.reshape(shape)
    return np.mod(arr, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.mod(a @ b, p)


def chain(mats: Sequence[np.ndarray], p: int) -> np.ndarray:
    """Product ``mats[0] @ mats[1] @ ...`` reduced mod p."""
    result = mats[0]
    for mat in mats[1:]:
        result = matmul(result, mat, p)
    return result


def matrix_power(a: np.ndarray, exponent: int, p: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = np.mod(a, p)
    while exponent > 0:
        if exponent & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        exponent >>= 1
    return result


def block_diagonal(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(block.shape[0] for block in blocks)
    cols = sum(block.shape[1] for block in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for block in blocks:
        out[r : r + block.shape[0], c : c + block.shape[1]] = block
        r += block.shape[0]
        c += block.shape[1]
    return out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns."""
    m = np.mod(np.array(a, dtype=np.int64, copy=True), p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = np.mod(m[r] * inv, p)
        column = m[:, c].copy()
        column[r] = 0
        if column.any():
            m = np.mod(m - np.outer(column, m[r]), p)
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


@dataclass(frozen=True)
class Factorization:
    rank: int
    kernel_basis: np.ndarray
    image_basis: np.ndarray
    rref: np.ndarray
    pivots: tuple[int, ...]


def factor(a: np.ndarray, p: int) -> Factorization:
    rows, cols = a.shape
    reduced, pivots = rref(a, p)
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    kernel = zeros(cols, len(free))
    for j, f in enumerate(free):
        kernel[f, j] = 1
        for i, pc in enumerate(pivots):
            kernel[pc, j] = (-reduced[i, f]) % p
    image = np.mod(a[:, list(pivots)], p) if rank else zeros(rows, 0)
    return Factorization(
        rank=rank,
        kernel_basis=kernel,
        image_basis=np.array(image, dtype=np.int64).reshape(rows, rank),
        rref=reduced[:rank],
        pivots=pivots,
    )


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def kernel(a: np.ndarray, p: int) -> np.ndarray:
    return factor(a, p).kernel_basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    return factor(a, p).image_basis


def left_kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Rows ``y`` with ``y @ a == 0``, stacked as a matrix."""
    return kernel(a.T, p).T


def solve(a: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Some ``x`` with ``a @ x == b``, or ``None`` when no solution exists."""
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"Row mismatch in solve: {a.shape} vs {b.shape}")
    n = a.shape[1]
    if b.shape[1] == 0:
        return zeros(n, 0)
    augmented = np.concatenate([np.mod(a, p), np.mod(b, p)], axis=1)
    reduced, pivots = rref(augmented, p)
    if any(pc >= n for pc in pivots):
        return None
    x = zeros(n, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i, n:]
    return x


def complement(basis: np.ndarray, n: int, p: int) -> list[int]:
    """Standard basis indices extending the column span of ``basis`` to F_p^n."""
    if n == 0:
        return []
    stacked = np.concatenate([basis.reshape(n, -1), identity(n)], axis=1)
    offset = stacked.shape[1] - n
    _, pivots = rref(stacked, p)
    return [pc - offset for pc in pivots if pc >= offset]


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"Cannot invert non-square matrix {a.shape}")
    x = solve(a, identity(n), p)
    if x is None:
        raise ValueError("Matrix is singular")
    return x


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def polynomial_roots(coeffs: Sequence[int], p: int) -> list[int]:
    """Roots in F_p of the polynomial with ``coeffs`` listed from the leading term down."""
    points = np.arange(p, dtype=np.int64)
    values = np.zeros(p, dtype=np.int64)
    for coeff in coeffs:
        values = np.mod(values * points + int(coeff), p)
    return [int(x) for x in np.nonzero(values == 0)[0]]


def eigenvalues(a: np.ndarray, p: int) -> list[int]:
    """Eigenvalues in F_p, via Krylov minimal polynomials of the standard vectors."""
    n = a.shape[0]
    roots: set[int] = set()
    for i in range(n):
        vectors = [identity(n)[:, i : i + 1]]
        while True:
            nxt = matmul(a, vectors[-1], p)
            basis = np.concatenate(vectors, axis=1)
            coeffs = solve(basis, nxt, p)
            if coeffs is not None:
                # x^k - sum c_j x^j, leading term first
                poly = [1] + [(-int(c)) % p for c in coeffs[::-1, 0]]
                roots.update(polynomial_roots(poly, p))
                break
            vectors.append(nxt)
    return sorted(roots)


__all__ = [
    "Factorization",
    "as_matrix",
    "block_diagonal",
    "chain",
    "check_prime",
    "column_space",
    "complement",
    "eigenvalues",
    "factor",
    "identity",
    "inverse",
    "is_invertible",
    "is_prime",
    "kernel",
    "left_kernel",
    "matmul",
    "matrix_power",
    "polynomial_roots",
    "rank",
    "rref",
    "solve",
    "zeros",
]
