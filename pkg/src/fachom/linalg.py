"""Exact sparse linear algebra over Q.

Scalars are :class:`fractions.Fraction`.  Rank computations clear
denominators row by row and eliminate over the integers, keeping every
row primitive, so no rounding ever happens and intermediate integers stay
small for the +-1 matrices that dominate homology computations.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import CompositionNonzero

Q = Fraction


@dataclass
class SparseMatrix:
    rows: int
    cols: int
    entries: dict = field(default_factory=dict)  # (row, col) -> nonzero Fraction

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            v = Q(v)
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): Q(1) for i in range(n)})

    @classmethod
    def from_dense(cls, data, cols=None):
        data = [list(r) for r in data]
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        ent = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls(len(data), ncols, ent)

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from a list of sparse columns ``{row: value}``."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    ent[(i, j)] = v
        return cls(rows, len(columns), ent)

    def to_dense(self):
        out = [[Q(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def scaled(self, s):
        s = Q(s)
        return SparseMatrix(self.rows, self.cols, {k: v * s for k, v in self.entries.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, out)

    def is_zero(self):
        return not self.entries

    def apply(self, vec):
        out = [Q(0)] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * vec[c]
        return out


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _integer_rows(m):
    grouped = {}
    for (r, c), v in m.entries.items():
        grouped.setdefault(r, {})[c] = v
    rows = []
    for row in grouped.values():
        den = 1
        for v in row.values():
            den = lcm(den, v.denominator)
        rows.append(_primitive({c: int(v * den) for c, v in row.items()}))
    return rows


def _echelon_integer(rows):
    """Row echelon form keyed by leading column; rows are primitive int dicts."""
    pivots = {}
    for row in sorted(rows, key=len):
        while row:
            lead = min(row)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            a, b = row[lead], p[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: b * v for c, v in row.items()}
            for c, v in p.items():
                x = new.get(c, 0) - a * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return pivots


def rank(m: SparseMatrix) -> int:
    if not m.entries:
        return 0
    return len(_echelon_integer(_integer_rows(m)))


def _rref(m):
    """Reduced row echelon form over Q: {pivot column: row dict with 1 at pivot}."""
    pivots = {}
    for row in _echelon_integer(_integer_rows(m)).values():
        lead = min(row)
        pivots[lead] = {c: Q(v, row[lead]) for c, v in row.items()}
    for col in sorted(pivots, reverse=True):
        prow = pivots[col]
        for other_col, orow in pivots.items():
            if other_col != col and col in orow:
                f = orow[col]
                for c, v in prow.items():
                    x = orow.get(c, 0) - f * v
                    if x:
                        orow[c] = x
                    else:
                        orow.pop(c, None)
    return pivots


def kernel_basis(m: SparseMatrix):
    """Basis of the right kernel as dense tuples of Fractions."""
    pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * m.cols
        v[f] = Q(1)
        for pc, row in pivots.items():
            if f in row:
                v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def quotient_dim(d_in: SparseMatrix, d_out: SparseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) for a composable pair with d_out∘d_in = 0."""
    if d_in.rows != d_out.cols:
        raise ValueError(f"maps do not compose: {d_in.rows} != {d_out.cols}")
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzero("d_out∘d_in is nonzero")
    return d_out.cols - rank(d_out) - rank(d_in)
