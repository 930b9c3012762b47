"""Exact sparse linear algebra over the rationals.

Rows are sparse {column: value} dicts.  Elimination is fraction-free: rows
are cleared to integers up front and every update is an integer
cross-multiplication followed by a gcd reduction, so no rounding can occur
and intermediate growth stays tame.  Pivots are chosen as the smallest column
index of the incoming row, which makes echelon forms (and therefore nullspace
bases) deterministic.
"""

from fractions import Fraction
from math import gcd


def clear_denominators(row):
    """{col: Fraction} -> {col: int}, scaled by the lcm of denominators."""
    mult = 1
    for v in row.values():
        d = Fraction(v).denominator
        mult = mult * d // gcd(mult, d)
    out = {}
    for c, v in row.items():
        v = Fraction(v) * mult
        assert v.denominator == 1
        if v:
            out[c] = int(v)
    return out


def _gcd_reduce(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Online fraction-free row echelon accumulator."""

    def __init__(self):
        self.rows = {}  # pivot column -> integer row with positive pivot

    def add(self, row):
        """Reduce a {col: Fraction|int} row against the accumulated rows and
        insert what is left.  Returns True if the row added a new pivot."""
        row = clear_denominators(row)
        while row:
            col = min(row)
            piv = self.rows.get(col)
            if piv is None:
                row = _gcd_reduce(row)
                if row[col] < 0:
                    row = {c: -v for c, v in row.items()}
                self.rows[col] = row
                return True
            a, b = row[col], piv[col]
            new = {c: v * b for c, v in row.items()}
            for c, v in piv.items():
                w = new.get(c, 0) - v * a
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            row = _gcd_reduce(new)
        return False

    @property
    def rank(self):
        return len(self.rows)

    def nullspace(self, ncols):
        """Basis of the right nullspace as primitive integer vectors.

        One vector per free column, in column order; entry at the free column
        is positive.
        """
        pivots = sorted(self.rows)
        pivot_set = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            x = {free: Fraction(1)}
            for p in reversed(pivots):
                if p >= free:
                    continue
                rowp = self.rows[p]
                s = Fraction(0)
                for c, v in rowp.items():
                    if c != p and c in x:
                        s += v * x[c]
                if s:
                    x[p] = -s / rowp[p]
            vec = [x.get(c, Fraction(0)) for c in range(ncols)]
            mult = 1
            for v in vec:
                d = v.denominator
                mult = mult * d // gcd(mult, d)
            ints = [int(v * mult) for v in vec]
            g = 0
            for v in ints:
                g = gcd(g, abs(v))
            if g > 1:
                ints = [v // g for v in ints]
            first = next(v for v in ints if v)
            if first < 0:
                ints = [-v for v in ints]
            basis.append(ints)
        return basis


def nullspace(rows, ncols):
    """Right nullspace of the matrix whose rows are {col: value} dicts."""
    ech = Echelon()
    for row in rows:
        if row:
            ech.add(row)
    return ech.nullspace(ncols)


def solve_exact(columns, target):
    """Coordinates x with sum_j x[j] columns[j] = target, all exact.

    columns and target are dense same-length vectors.  Returns None when
    the system is inconsistent; raises when the solution is not unique.
    """
    m = len(columns)
    n = len(target)
    rows = [
        [Fraction(columns[j][i]) for j in range(m)] + [Fraction(target[i])]
        for i in range(n)
    ]
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rows[r] = [v / rows[r][c] for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[m] for row in rows[r:]):
        return None
    if len(pivots) < m:
        raise ValueError("solution is not unique")
    x = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        x[c] = rows[i][m]
    return x
