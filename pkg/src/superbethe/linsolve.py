"""Exact Gaussian elimination over the rationals."""
from fractions import Fraction


def solve_exact(rows, rhs):
    """Solve the (possibly overdetermined) system ``rows @ x = rhs`` exactly.

    Returns ``(solution, rank, consistent)``.  ``solution`` is ``None`` unless
    the system has full column rank and is consistent.  Pivots are chosen as the
    entry of smallest height among the remaining block (full pivoting).
    """
    A = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    n_rows = len(A)
    n_cols = len(A[0]) - 1 if A else 0
    col_order = list(range(n_cols))
    rank = 0
    for step in range(min(n_rows, n_cols)):
        best = None
        for r in range(step, n_rows):
            for c in range(step, n_cols):
                v = A[r][col_order[c]]
                if v:
                    size = abs(v.numerator) + v.denominator
                    if best is None or size < best[0]:
                        best = (size, r, c)
        if best is None:
            break
        _, r, c = best
        A[step], A[r] = A[r], A[step]
        col_order[step], col_order[c] = col_order[c], col_order[step]
        pc = col_order[step]
        piv = A[step][pc]
        A[step] = [v / piv for v in A[step]]
        for r2 in range(n_rows):
            if r2 != step and A[r2][pc]:
                factor = A[r2][pc]
                A[r2] = [a - factor * b for a, b in zip(A[r2], A[step])]
        rank += 1
    consistent = all(A[r][-1] == 0 for r in range(rank, n_rows))
    if rank < n_cols or not consistent:
        return None, rank, consistent
    x = [Fraction(0)] * n_cols
    for step in range(n_cols):
        x[col_order[step]] = A[step][-1]
    return x, rank, consistent
