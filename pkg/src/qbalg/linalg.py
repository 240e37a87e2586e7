"""Exact linear algebra over the rationals for sparse row sets.

Rows are dicts ``{column: value}``. Elimination is fraction-free: each row
is scaled to a primitive integer vector and combined by integer
cross-multiplication, then divided by its content again.
"""
from fractions import Fraction
from math import gcd, lcm


def _primitive(row):
    """Scale a rational row to coprime integers with positive leading entry."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = {}
    for c, v in row.items():
        iv = v * den
        if isinstance(iv, Fraction):
            iv = iv.numerator
        if iv:
            ints[c] = int(iv)
    return _normalize(ints)


def _normalize(row):
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Incrementally maintained row echelon form keyed by pivot column."""

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        """Reduce a row against the current pivots; returns the residue."""
        row = _primitive(row)
        pivots = self.pivots
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                return row
            a, b = row[c], prow[c]
            out = {k: v * b for k, v in row.items()}
            for k, v in prow.items():
                nv = out.get(k, 0) - a * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _normalize(out)
        return row

    def add(self, row):
        """Insert a row; True when it increased the rank."""
        res = self.reduce(row)
        if not res:
            return False
        self.pivots[min(res)] = res
        return True


def rank(rows):
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def rref(rows, ncols):
    """Reduced row echelon form of dense-able rational rows.

    Returns ``(reduced_rows, pivot_columns)`` with Fraction entries and each
    pivot normalised to 1.
    """
    mat = [[Fraction(row.get(c, 0)) for c in range(ncols)] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        mat[r] = [v / piv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols):
    """Basis of {f : sum_c f[c] * row[c] = 0 for every row}, as sparse dicts."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = {fc: Fraction(1)}
        for row, pc in zip(reduced, pivots):
            if row[fc] != 0:
                vec[pc] = -row[fc]
        basis.append(vec)
    return basis
