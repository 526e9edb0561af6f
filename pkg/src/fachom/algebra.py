"""Weight-graded differential graded associative algebras.

An algebra is stored on a finite basis truncated at ``max_weight``; basis
element 0 ... n-1 each carry a (weight, degree) and the product is given
by exact structure constants, computed lazily and memoized.  Products that
leave the weight window are zero, which is the quotient by the ideal of
weights beyond the window and therefore harmless for anything computed
inside it.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .complexes import BigradedSpace, ChainComplex
from .errors import MixedWeightSigns, StraighteningOverflow, ValidationError
from .linalg import SparseMatrix, _rref

Q = Fraction


def _add_into(acc, vec, scale=1):
    for k, v in vec.items():
        x = acc.get(k, 0) + scale * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


def koszul(p, q):
    """Sign of swapping homogeneous elements of degrees p and q."""
    return -1 if (p % 2 and q % 2) else 1


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    weight: int


@dataclass
class GradedSpacePresentation:
    generators: list = field(default_factory=list)
    relations: list = field(default_factory=list)  # [{(gen index, ...): coefficient}]
    brackets: list = field(default_factory=list)  # [(i, j, {k: coefficient})]

    def __post_init__(self):
        self.generators = [g if isinstance(g, Generator) else Generator(*g) for g in self.generators]
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        signs = {(g.weight > 0) - (g.weight < 0) for g in self.generators}
        if 0 in signs or len(signs) > 1:
            raise MixedWeightSigns(f"generator weights must be all >0 or all <0, got {[g.weight for g in self.generators]}")

    @classmethod
    def of(cls, *gens):
        """``of(("x", 0, 1), ("y", 1, 1))`` with (name, degree, weight) triples."""
        return cls([Generator(*g) for g in gens])

    def shifted(self, k):
        return GradedSpacePresentation([Generator(g.name, g.degree + k, g.weight) for g in self.generators])

    def weight_sign(self):
        return 1 if not self.generators or self.generators[0].weight > 0 else -1


class WgAlgebra:
    def __init__(self, labels, weights, degrees, mul, differential=None, unit=0,
                 commutative=False, max_weight=0, name=""):
        self.labels = list(labels)
        self.weights = list(weights)
        self.degrees = list(degrees)
        self._mul_fn = mul
        self._memo = {}
        self.differential = differential or {}
        self.unit = unit
        self.commutative = commutative
        self.max_weight = max_weight
        self.name = name
        zero = [i for i, w in enumerate(self.weights) if w == 0]
        if zero != [unit] or self.degrees[unit] != 0:
            raise MixedWeightSigns(f"weight-0 part of {name or 'algebra'} must be exactly the unit, found {[self.labels[i] for i in zero]}")
        signs = {(w > 0) - (w < 0) for w in self.weights if w}
        if len(signs) > 1:
            raise MixedWeightSigns(f"augmentation ideal of {name or 'algebra'} has weights of both signs")
        self.sign = signs.pop() if signs else 1

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"WgAlgebra({self.name or '?'}, dim={len(self)}, W={self.max_weight})"

    def ideal(self):
        return [i for i in range(len(self)) if i != self.unit]

    def index_by_weight(self):
        out = {}
        for i, w in enumerate(self.weights):
            out.setdefault(w, []).append(i)
        return out

    def mul(self, i, j):
        if i == self.unit:
            return {j: Q(1)}
        if j == self.unit:
            return {i: Q(1)}
        if abs(self.weights[i] + self.weights[j]) > self.max_weight:
            return {}
        key = (i, j)
        r = self._memo.get(key)
        if r is None:
            r = {k: Q(v) for k, v in self._mul_fn(i, j).items() if v}
            self._memo[key] = r
        return r

    def mul_vec(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                _add_into(out, self.mul(i, j), a * b)
        return out

    def d(self, i):
        return self.differential.get(i, {})

    def d_vec(self, u):
        out = {}
        for i, a in u.items():
            _add_into(out, self.d(i), a)
        return out

    def carrier(self) -> ChainComplex:
        elements = [(i, self.weights[i], self.degrees[i], self.labels[i]) for i in range(len(self))]
        return ChainComplex.from_basis(elements, self.d)

    def dimension_table(self):
        return self.carrier().dimension_table()

    def structure_constants(self):
        """Every nonzero product of basis elements inside the window."""
        out = {}
        for i in range(len(self)):
            for j in range(len(self)):
                r = self.mul(i, j)
                if r:
                    out[(i, j)] = r
        return out


# ---------------------------------------------------------------- checks

def _within(a, *idx):
    return abs(sum(a.weights[i] for i in idx)) <= a.max_weight


def check_unit(a):
    for i in range(len(a)):
        if a.mul(a.unit, i) != {i: 1} or a.mul(i, a.unit) != {i: 1}:
            raise ValidationError("unitality", a.labels[i])


def check_associative(a):
    by_w = a.index_by_weight()
    ideal = a.ideal()
    for i in ideal:
        for j in ideal:
            if not _within(a, i, j):
                continue
            ij = a.mul(i, j)
            for k in ideal:
                if not _within(a, i, j, k):
                    continue
                left = a.mul_vec(ij, {k: 1})
                right = a.mul_vec({i: 1}, a.mul(j, k))
                if left != right:
                    raise ValidationError("associativity", (a.labels[i], a.labels[j], a.labels[k]))
    return by_w


def check_leibniz(a):
    for i in range(len(a)):
        for j in range(len(a)):
            if not _within(a, i, j):
                continue
            lhs = a.d_vec(a.mul(i, j))
            rhs = a.mul_vec(a.d(i), {j: 1})
            s = -1 if a.degrees[i] % 2 else 1
            _add_into(rhs, a.mul_vec({i: 1}, a.d(j)), s)
            if lhs != rhs:
                raise ValidationError("Leibniz rule", (a.labels[i], a.labels[j]))


def check_d_squared(a):
    for i in range(len(a)):
        if a.d_vec(a.d(i)):
            raise ValidationError("d∘d = 0", a.labels[i])


def check_commutative(a):
    for i in range(len(a)):
        for j in range(len(a)):
            if not _within(a, i, j):
                continue
            ba = {k: koszul(a.degrees[i], a.degrees[j]) * v for k, v in a.mul(j, i).items()}
            if a.mul(i, j) != ba:
                raise ValidationError("graded commutativity", (a.labels[i], a.labels[j]))


def is_commutative(a):
    try:
        check_commutative(a)
    except ValidationError:
        return False
    return True


def validate(a):
    """Run every structural check; raises ValidationError naming the failing tuple."""
    check_unit(a)
    check_associative(a)
    check_d_squared(a)
    check_leibniz(a)
    if a.commutative:
        check_commutative(a)
    for i in range(len(a)):
        for k in a.d(i):
            if a.weights[k] != a.weights[i] or a.degrees[k] != a.degrees[i] - 1:
                raise ValidationError("differential bidegree (0, -1)", a.labels[i])
        for j in range(len(a)):
            for k in a.mul(i, j):
                if (a.weights[k], a.degrees[k]) != (a.weights[i] + a.weights[j], a.degrees[i] + a.degrees[j]):
                    raise ValidationError("product bidegree", (a.labels[i], a.labels[j]))


# ---------------------------------------------------------- constructors

def ground_field():
    return WgAlgebra(["1"], [0], [0], lambda i, j: {}, commutative=True, name="Q")


def _word_label(names, word):
    return "*".join(names[i] for i in word) if word else "1"


def _words_up_to(gens, max_weight):
    """All words (tuples of generator indices) of weight <= max_weight, by weight."""
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            base = sum(gens[i].weight for i in w)
            for i, g in enumerate(gens):
                if base + g.weight <= max_weight:
                    nxt.append(w + (i,))
        out.extend(nxt)
        frontier = nxt
    return out


def tensor_algebra(v: GradedSpacePresentation, max_weight: int, relations=None, name="") -> WgAlgebra:
    """Free associative algebra on ``v`` (optionally modulo homogeneous two-sided relations)."""
    gens = v.generators
    if gens and v.weight_sign() < 0:
        raise MixedWeightSigns("tensor_algebra needs strictly positive generator weights")
    relations = relations if relations is not None else v.relations
    words = _words_up_to(gens, max_weight)
    wt = lambda w: sum(gens[i].weight for i in w)
    dg = lambda w: sum(gens[i].degree for i in w)
    names = [g.name for g in gens]
    normal = {}  # pivot word -> reduced combination of normal words
    if relations:
        normal = _reduce_relations(words, relations, wt, dg, max_weight)
    basis = [w for w in words if w not in normal]
    index = {w: k for k, w in enumerate(basis)}

    def reduce(word):
        if word in normal:
            return {index[u]: c for u, c in normal[word].items()}
        return {index[word]: Q(1)}

    def mul(i, j):
        return reduce(basis[i] + basis[j])

    return WgAlgebra([_word_label(names, w) for w in basis], [wt(w) for w in basis],
                     [dg(w) for w in basis], mul, unit=index[()],
                     commutative=False, max_weight=max_weight, name=name or "T(V)")


def _reduce_relations(words, relations, wt, dg, max_weight):
    by_slot = {}
    for w in words:
        by_slot.setdefault((wt(w), dg(w)), []).append(w)
    ideal_rows = {}
    for rel in relations:
        rel = {tuple(k): Q(c) for k, c in rel.items() if c}
        slots = {(wt(k), dg(k)) for k in rel}
        if len(slots) != 1:
            raise MixedWeightSigns(f"relation {rel} is not (weight, degree)-homogeneous")
        rw = slots.pop()[0]
        for u in words:
            if wt(u) + rw > max_weight:
                continue
            for v in words:
                if wt(u) + rw + wt(v) > max_weight:
                    continue
                row = {u + k + v: c for k, c in rel.items()}
                ideal_rows.setdefault((wt(u) + rw + wt(v), dg(u) + dg(next(iter(rel))) + dg(v)), []).append(row)
    normal = {}
    for slot, rows in ideal_rows.items():
        # larger words become pivots, so normal words are the deglex-smaller ones
        cols = sorted(by_slot[slot], key=lambda w: (len(w), w), reverse=True)
        cidx = {w: k for k, w in enumerate(cols)}
        m = SparseMatrix(len(rows), len(cols), {(r, cidx[w]): c for r, row in enumerate(rows) for w, c in row.items()})
        for pc, row in _rref(m).items():
            normal[cols[pc]] = {cols[c]: -x for c, x in row.items() if c != pc}
    return normal


def _sym_monomials(gens, max_weight):
    """Exponent vectors of graded-commutative monomials with |weight| <= max_weight."""
    out = []

    def rec(k, exps, w):
        if k == len(gens):
            out.append(tuple(exps))
            return
        g = gens[k]
        cap = 1 if g.degree % 2 else max_weight // abs(g.weight)
        for e in range(cap + 1):
            if abs(w + e * g.weight) > max_weight:
                break
            rec(k + 1, exps + [e], w + e * g.weight)

    rec(0, [], 0)
    out.sort(key=lambda e: (abs(sum(x * g.weight for x, g in zip(e, gens))), sum(e), tuple(-x for x in e)))
    return out


def _mono_label(names, e):
    parts = []
    for n, x in zip(names, e):
        if x == 1:
            parts.append(n)
        elif x > 1:
            parts.append(f"{n}^{x}")
    return "*".join(parts) or "1"


def sym_product_sign(gens, e1, e2):
    """Koszul sign of reordering monomial e1·e2 into generator order; 0 if an odd generator squares."""
    inv = 0
    for i, (a, b) in enumerate(zip(e1, e2)):
        if gens[i].degree % 2 and a and b:
            return 0
    odd1 = [i for i, a in enumerate(e1) if a and gens[i].degree % 2]
    odd2 = [j for j, b in enumerate(e2) if b and gens[j].degree % 2]
    for i in odd1:
        for j in odd2:
            if i > j:
                inv += 1
    return -1 if inv % 2 else 1


def sym_algebra(v: GradedSpacePresentation, max_weight: int, name="") -> WgAlgebra:
    """Free graded-commutative algebra: polynomial on even, exterior on odd generators."""
    gens = v.generators
    monos = _sym_monomials(gens, max_weight)
    index = {e: k for k, e in enumerate(monos)}
    names = [g.name for g in gens]

    def mul(i, j):
        e1, e2 = monos[i], monos[j]
        s = sym_product_sign(gens, e1, e2)
        if not s:
            return {}
        e = tuple(a + b for a, b in zip(e1, e2))
        return {index[e]: s} if e in index else {}

    weights = [sum(x * g.weight for x, g in zip(e, gens)) for e in monos]
    degrees = [sum(x * g.degree for x, g in zip(e, gens)) for e in monos]
    return WgAlgebra([_mono_label(names, e) for e in monos], weights, degrees, mul,
                     unit=index[tuple(0 for _ in gens)], commutative=True,
                     max_weight=max_weight, name=name or "Sym(V)")


def sym_dimension_table(gens, max_weight):
    """Dimensions of Sym on (name, degree, weight) generators, without building products."""
    gens = [g if isinstance(g, Generator) else Generator(*g) for g in gens]
    out = {}
    for e in _sym_monomials(gens, max_weight):
        slot = (sum(x * g.weight for x, g in zip(e, gens)), sum(x * g.degree for x, g in zip(e, gens)))
        out[slot] = out.get(slot, 0) + 1
    return BigradedSpace({s: [f"m{k}" for k in range(n)] for s, n in out.items()})


def enveloping(g, max_weight: int, name="") -> WgAlgebra:
    """Universal enveloping algebra of a degree-0 Lie algebra with positive weights, PBW basis."""
    if any(d != 0 for d in g.degrees):
        raise ValueError("enveloping needs a Lie algebra concentrated in degree 0")
    if any(w <= 0 for w in g.weights):
        raise MixedWeightSigns("enveloping needs strictly positive weights")
    n = len(g)
    wts = g.weights

    def sorted_words(wmax):
        out = [()]

        def rec(start, word, w):
            for i in range(start, n):
                if w + wts[i] <= wmax:
                    out.append(word + (i,))
                    rec(i, word + (i,), w + wts[i])

        rec(0, (), 0)
        return out

    basis = sorted(sorted_words(max_weight), key=lambda w: (sum(wts[i] for i in w), len(w), w))
    index = {w: k for k, w in enumerate(basis)}
    memo = {}

    def straighten(word):
        r = memo.get(word)
        if r is not None:
            return r
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                break
        else:
            memo[word] = {word: Q(1)}
            return memo[word]
        a, b = word[k], word[k + 1]
        out = dict(straighten(word[:k] + (b, a) + word[k + 2:]))
        for z, c in g.bracket(a, b).items():
            if wts[z] != wts[a] + wts[b]:
                raise StraighteningOverflow(f"[{g.labels[a]}, {g.labels[b]}] leaves its weight")
            _add_into(out, straighten(word[:k] + (z,) + word[k + 2:]), c)
        memo[word] = out
        return out

    def mul(i, j):
        return {index[w]: c for w, c in straighten(basis[i] + basis[j]).items()}

    return WgAlgebra([_word_label(g.labels, w) for w in basis],
                     [sum(wts[i] for i in w) for w in basis], [0] * len(basis), mul,
                     unit=index[()], commutative=False, max_weight=max_weight,
                     name=name or f"U({g.name or 'g'})")


def enveloping_n(g, n: int, max_weight: int) -> BigradedSpace:
    """Graded dimensions of U_n g, i.e. of Sym(g[1-n]) (PBW)."""
    gens = [Generator(g.labels[i], g.degrees[i] + 1 - n, g.weights[i]) for i in range(len(g))]
    return sym_dimension_table(gens, max_weight)


def opposite(a: WgAlgebra) -> WgAlgebra:
    def mul(i, j):
        s = koszul(a.degrees[i], a.degrees[j])
        return {k: s * v for k, v in a.mul(j, i).items()}

    return WgAlgebra(a.labels, a.weights, a.degrees, mul, dict(a.differential), a.unit,
                     a.commutative, a.max_weight, name=f"{a.name}^op")


def algebra_tensor(a: WgAlgebra, b: WgAlgebra) -> WgAlgebra:
    """(a1⊗b1)(a2⊗b2) = (-1)^{|b1||a2|} a1a2 ⊗ b1b2."""
    if a.sign != b.sign and len(a) > 1 and len(b) > 1:
        raise MixedWeightSigns("tensor of algebras with opposite weight signs")
    # the ground field carries no truncation of its own
    W = min(x.max_weight for x in (a, b) if len(x) > 1) if max(len(a), len(b)) > 1 else 0
    pairs = [(i, j) for i, j in iproduct(range(len(a)), range(len(b)))
             if abs(a.weights[i] + b.weights[j]) <= W]
    pairs.sort(key=lambda p: (abs(a.weights[p[0]] + b.weights[p[1]]), p))
    index = {p: k for k, p in enumerate(pairs)}

    def mul(x, y):
        (i1, j1), (i2, j2) = pairs[x], pairs[y]
        s = koszul(b.degrees[j1], a.degrees[i2])
        out = {}
        for ka, ca in a.mul(i1, i2).items():
            for kb, cb in b.mul(j1, j2).items():
                k = index.get((ka, kb))
                if k is not None:
                    out[k] = out.get(k, 0) + s * ca * cb
        return out

    diff = {}
    for x, (i, j) in enumerate(pairs):
        out = {}
        for ka, c in a.d(i).items():
            _add_into(out, {index[(ka, j)]: c})
        s = -1 if a.degrees[i] % 2 else 1
        for kb, c in b.d(j).items():
            _add_into(out, {index[(i, kb)]: s * c})
        if out:
            diff[x] = out
    t = WgAlgebra([f"({a.labels[i]},{b.labels[j]})" for i, j in pairs],
                     [a.weights[i] + b.weights[j] for i, j in pairs],
                     [a.degrees[i] + b.degrees[j] for i, j in pairs], mul, diff,
                     unit=index[(a.unit, b.unit)], commutative=a.commutative and b.commutative,
                     max_weight=W, name=f"{a.name}⊗{b.name}")
    t.pairs = pairs
    return t


def truncated_polynomial(name, degree, weight, power, max_weight):
    """Q[x]/x^power as a quotient of the tensor algebra on one generator."""
    v = GradedSpacePresentation.of((name, degree, weight))
    a = tensor_algebra(v, max_weight, relations=[{(0,) * power: 1}], name=f"Q[{name}]/{name}^{power}")
    a.commutative = is_commutative(a)
    return a
