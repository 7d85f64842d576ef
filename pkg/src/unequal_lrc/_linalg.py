"""Gaussian elimination over a GaloisField on lists of raw element indices.

Matrices are lists of rows.  Nothing here mutates its inputs.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from unequal_lrc.galois import GaloisField


def rref(F: "GaloisField", rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    add, mul = F.add, F.mul
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        if inv != 1:
            A[r] = [mul(inv, x) for x in A[r]]
        row = A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = F.neg(A[i][c])
                A[i] = [add(x, mul(f, y)) if y else x for x, y in zip(A[i], row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(F: "GaloisField", rows: Sequence[Sequence[int]]) -> int:
    """Rank of the matrix whose rows are ``rows`` (forward elimination only)."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    ncols = len(A[0])
    add, mul = F.add, F.mul
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        row = A[r]
        inv = F.inv(row[c])
        for i in range(r + 1, len(A)):
            if A[i][c]:
                f = F.neg(mul(A[i][c], inv))
                A[i] = [add(x, mul(f, y)) if y else x for x, y in zip(A[i], row)]
        r += 1
        if r == len(A):
            break
    return r


def transpose(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


def solve(F: "GaloisField", A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """One solution x of A x = b, or None if the system is inconsistent.

    Free variables are set to zero, so the solution is unique whenever A has
    full column rank.
    """
    if not A:
        return []
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, c in zip(R, pivots):
        x[c] = row[ncols]
    return x


def nullspace(F: "GaloisField", A: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of {x : A x = 0}."""
    if ncols is None:
        ncols = len(A[0])
    if not A:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(R, pivots):
            if row[fc]:
                x[pc] = F.neg(row[fc])
        basis.append(x)
    return basis


def matmul(F: "GaloisField", A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    Bt = transpose(B)
    return [[dot(F, row, col) for col in Bt] for row in A]


def dot(F: "GaloisField", x: Sequence[int], y: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def inverse(F: "GaloisField", A: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(A)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]
