"""Row reduction over a finite field context."""

from __future__ import annotations


def rref(ctx, rows, col_order=None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)`` without zero rows.

    ``col_order`` fixes the order in which columns are used as pivots.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    order = list(col_order) if col_order is not None else list(range(ncols))
    pivots = []
    rank = 0
    for col in order:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ctx.inv(mat[rank][col])
        mat[rank] = [ctx.mul(inv, v) for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = ctx.neg(mat[i][col])
                mat[i] = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def rank(ctx, rows) -> int:
    return len(rref(ctx, rows)[0])


def in_rowspace(ctx, rows, vec) -> bool:
    return rank(ctx, list(rows) + [list(vec)]) == rank(ctx, rows)


def rowspace_equal(ctx, rows1, rows2) -> bool:
    r1, r2 = rank(ctx, rows1), rank(ctx, rows2)
    return r1 == r2 and rank(ctx, list(rows1) + list(rows2)) == r1
