"""Smith normal form over the integers (Python ints, so unbounded)."""

from __future__ import annotations

from typing import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries ``d_1 | d_2 | ...`` of the Smith form, all positive."""
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                # fold the offending row in so its remainder shows up in column t
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a remainder is smaller than the pivot: move it into place
            _, i, j = min(
                [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            )
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
