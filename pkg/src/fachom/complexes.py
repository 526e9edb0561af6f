"""Weight-graded chain complexes over Q and their Betti tables.

Homological convention throughout: the differential lowers degree by one
and preserves weight.  ``V[k]`` puts ``V_d`` in degree ``d + k``.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DifferentialSquareNonzero
from .linalg import SparseMatrix, rank

Q = Fraction


class Table:
    """Map (weight, degree) -> nonnegative integer, zeros omitted."""

    def __init__(self, entries=None):
        self.entries = {}
        for (w, d), n in (entries or {}).items():
            n = int(n)
            if n < 0:
                raise ValueError(f"negative entry {n} at {(w, d)}")
            if n:
                self.entries[(int(w), int(d))] = n

    def __getitem__(self, slot):
        return self.entries.get(slot, 0)

    def __eq__(self, other):
        return isinstance(other, Table) and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"({w},{d}): {n}" for (w, d), n in sorted(self.entries.items()))
        return f"{type(self).__name__}({{{body}}})"

    def __iter__(self):
        return iter(sorted(self.entries.items()))

    def __bool__(self):
        return bool(self.entries)

    def weights(self):
        return sorted({w for w, _ in self.entries})

    def at_weight(self, w):
        return {d: n for (ww, d), n in self.entries.items() if ww == w}

    def euler(self, w):
        return sum((-1) ** (d % 2) * n for (ww, d), n in self.entries.items() if ww == w)

    def restrict(self, max_weight=None, degree_window=None):
        out = {}
        for (w, d), n in self.entries.items():
            if max_weight is not None and abs(w) > max_weight:
                continue
            if degree_window is not None and not (degree_window[0] <= d <= degree_window[1]):
                continue
            out[(w, d)] = n
        return type(self)(out)

    def reflect(self):
        return type(self)({(-w, -d): n for (w, d), n in self.entries.items()})

    def shifted(self, k):
        return type(self)({(w, d + k): n for (w, d), n in self.entries.items()})

    def convolve(self, other, max_weight=None):
        out = {}
        for (w1, d1), n1 in self.entries.items():
            for (w2, d2), n2 in other.entries.items():
                w = w1 + w2
                if max_weight is not None and abs(w) > max_weight:
                    continue
                out[(w, d1 + d2)] = out.get((w, d1 + d2), 0) + n1 * n2
        return type(self)(out)

    def first_difference(self, other):
        """Lowest (weight, degree) slot where the two tables disagree, or None."""
        keys = sorted(set(self.entries) | set(other.entries), key=lambda s: (abs(s[0]), s[0], s[1]))
        for k in keys:
            if self[k] != other[k]:
                return k
        return None

    # serialization
    def to_dict(self):
        return {"entries": [{"weight": w, "degree": d, "dim": n} for (w, d), n in self]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        return cls({(e["weight"], e["degree"]): e["dim"] for e in data["entries"]})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "degree", "dim"])
        for (w, d), n in self:
            writer.writerow([w, d, n])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text):
        reader = csv.DictReader(io.StringIO(text))
        return cls({(int(r["weight"]), int(r["degree"])): int(r["dim"]) for r in reader})

    def to_grid_csv(self):
        """Wide layout: one row per weight, one column per degree."""
        if not self.entries:
            return "weight\n"
        degrees = sorted({d for _, d in self.entries})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight"] + [str(d) for d in degrees])
        for w in self.weights():
            writer.writerow([w] + [self[(w, d)] for d in degrees])
        return buf.getvalue()

    def to_text(self):
        if not self.entries:
            return "(zero)\n"
        degrees = sorted({d for _, d in self.entries})
        width = max(4, *(len(str(n)) for n in self.entries.values()))
        lines = ["w\\d " + " ".join(f"{d:>{width}}" for d in degrees)]
        for w in self.weights():
            cells = " ".join(f"{self[(w, d)] or '.':>{width}}" for d in degrees)
            lines.append(f"{w:>3} " + cells)
        return "\n".join(lines) + "\n"


class BettiTable(Table):
    pass


class DimTable(Table):
    pass


@dataclass
class BigradedSpace:
    basis: dict = field(default_factory=dict)  # (weight, degree) -> list of labels

    def dim(self, slot):
        return len(self.basis.get(slot, ()))

    def slots(self):
        return sorted(s for s, b in self.basis.items() if b)

    def dimension_table(self):
        return DimTable({s: len(b) for s, b in self.basis.items()})


@dataclass
class ChainComplex:
    """Bigraded space plus differential matrices ``diff[(w, d)]: (w, d) -> (w, d-1)``."""

    space: BigradedSpace
    diff: dict = field(default_factory=dict)

    @classmethod
    def from_basis(cls, elements, boundary=None):
        """Build from ``(key, weight, degree, label)`` tuples.

        ``boundary(key)`` returns ``{key: coefficient}``; targets must be
        basis keys one degree lower in the same weight.  Coefficients on
        keys outside the basis raise ``KeyError``.
        """
        basis, index = {}, {}
        for key, w, d, label in elements:
            slot_list = basis.setdefault((w, d), [])
            index[key] = ((w, d), len(slot_list))
            slot_list.append(label)
        diff = {}
        if boundary is not None:
            cols = {}
            for key, w, d, _ in elements:
                cols.setdefault((w, d), []).append(key)
            for (w, d), keys in cols.items():
                target = (w, d - 1)
                ent = {}
                for j, key in enumerate(keys):
                    for tkey, c in boundary(key).items():
                        if not c:
                            continue
                        tslot, i = index[tkey]
                        if tslot != target:
                            raise ValueError(f"boundary of {key!r} leaves slot {target}: hits {tslot}")
                        ent[(i, j)] = ent.get((i, j), 0) + c
                m = SparseMatrix(len(basis.get(target, ())), len(keys), ent)
                if m.entries:
                    diff[(w, d)] = m
        return cls(BigradedSpace(basis), diff)

    def dim(self, slot):
        return self.space.dim(slot)

    def slots(self):
        return self.space.slots()

    def d(self, slot):
        w, dg = slot
        m = self.diff.get(slot)
        if m is None:
            return SparseMatrix.zero(self.dim((w, dg - 1)), self.dim(slot))
        return m

    def labels(self, slot):
        return list(self.space.basis.get(slot, ()))

    def dimension_table(self):
        return self.space.dimension_table()

    def weights(self):
        return sorted({w for w, _ in self.slots()})

    def check_d_squared(self, weight_window=None, degree_window=None):
        for w, dg in self.slots():
            if not _in(w, weight_window) or not _in(dg, degree_window):
                continue
            m1 = self.diff.get((w, dg))
            m2 = self.diff.get((w, dg - 1))
            if m1 is not None and m2 is not None and not (m2 @ m1).is_zero():
                raise DifferentialSquareNonzero((w, dg))


def _in(x, window):
    return window is None or window[0] <= x <= window[1]


def homology(c: ChainComplex, weight_window=None, degree_window=None) -> BettiTable:
    """Betti table of ``c`` restricted to the given closed intervals."""
    c.check_d_squared(weight_window, degree_window)
    ranks = {}

    def rk(slot):
        if slot not in ranks:
            m = c.diff.get(slot)
            ranks[slot] = rank(m) if m is not None else 0
        return ranks[slot]

    out = {}
    for w, dg in c.slots():
        if not _in(w, weight_window) or not _in(dg, degree_window):
            continue
        n = c.dim((w, dg)) - rk((w, dg)) - rk((w, dg + 1))
        if n:
            out[(w, dg)] = n
    return BettiTable(out)


def unit_complex():
    return ChainComplex(BigradedSpace({(0, 0): ["1"]}))


def tensor(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Tensor product with d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy."""
    elements = []
    for sa in a.slots():
        for sb in b.slots():
            w, d = sa[0] + sb[0], sa[1] + sb[1]
            for i, la in enumerate(a.labels(sa)):
                for j, lb in enumerate(b.labels(sb)):
                    elements.append(((sa, i, sb, j), w, d, f"({la},{lb})"))
    cols_a = _columns(a)
    cols_b = _columns(b)

    def boundary(key):
        sa, i, sb, j = key
        out = {}
        for ti, c in cols_a.get((sa, i), {}).items():
            out[((sa[0], sa[1] - 1), ti, sb, j)] = c
        sign = -1 if sa[1] % 2 else 1
        for tj, c in cols_b.get((sb, j), {}).items():
            k = (sa, i, (sb[0], sb[1] - 1), tj)
            out[k] = out.get(k, 0) + sign * c
        return out

    return ChainComplex.from_basis(elements, boundary)


def _columns(c):
    cols = {}
    for slot, m in c.diff.items():
        for (r, j), v in m.entries.items():
            cols.setdefault((slot, j), {})[r] = v
    return cols


def dual(c: ChainComplex) -> ChainComplex:
    """Slotwise linear dual: (w, d) -> (-w, -d); differential (-1)^{deg} times the transpose."""
    basis = {(-w, -d): [f"{lab}^" for lab in c.labels((w, d))] for w, d in c.slots()}
    diff = {}
    for (w, d), m in c.diff.items():
        # m: (w, d) -> (w, d-1); dual map: (-w, -d+1) -> (-w, -d), the source has degree 1-d.
        sign = -1 if (1 - d) % 2 else 1
        t = m.transpose().scaled(sign)
        if t.entries:
            diff[(-w, -d + 1)] = t
    return ChainComplex(BigradedSpace(basis), diff)


def shift(c: ChainComplex, k: int) -> ChainComplex:
    basis = {(w, d + k): list(labs) for (w, d), labs in c.space.basis.items()}
    sign = -1 if k % 2 else 1
    diff = {(w, d + k): m.scaled(sign) for (w, d), m in c.diff.items()}
    return ChainComplex(BigradedSpace(basis), diff)


def euler_characteristics(c: ChainComplex):
    out = {}
    for w, d in c.slots():
        out[w] = out.get(w, 0) + (-1) ** (d % 2) * c.dim((w, d))
    return out
