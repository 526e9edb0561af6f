"""Weight-graded dg Lie algebras, free Lie algebras, mapping Lie algebras
and Chevalley–Eilenberg chains and cochains.

Signs follow the Koszul rule.  CE chains are Sym(l[1]) with the
coderivation determined by

    d1(sx) = -s(dx),        b(sx, sy) = (-1)^{|x|} s[x, y],

and CE cochains are the graded linear dual, with the product dual to the
unshuffle coproduct of Sym(l[1]) and differential (-1)^{|φ|} φ∘d.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import (Generator, GradedSpacePresentation, WgAlgebra, _add_into, _mono_label,
                      _sym_monomials, koszul, sym_product_sign)
from .complexes import ChainComplex
from .errors import MixedWeightSigns, ValidationError

Q = Fraction


class WgLieAlgebra:
    def __init__(self, labels, weights, degrees, brackets, differential=None, name="", max_weight=None):
        self.labels = list(labels)
        self.weights = list(weights)
        self.degrees = list(degrees)
        self.name = name
        self.max_weight = max_weight
        self.differential = {i: {k: Q(c) for k, c in v.items() if c} for i, v in (differential or {}).items()}
        signs = {(w > 0) - (w < 0) for w in self.weights}
        if 0 in signs or len(signs) > 1:
            raise MixedWeightSigns(f"Lie algebra {name or ''} needs all weights >0 or all <0, got {self.weights}")
        table = {}
        for (i, j), val in brackets.items():
            val = {k: Q(c) for k, c in val.items() if c}
            if not val:
                continue
            for k in val:
                if self.weights[k] != self.weights[i] + self.weights[j]:
                    raise MixedWeightSigns(
                        f"[{self.labels[i]}, {self.labels[j]}] has weight {self.weights[i] + self.weights[j]}, "
                        f"outside the strictly signed generators")
                if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    raise ValidationError("bracket degree additivity", (self.labels[i], self.labels[j]))
            table[(i, j)] = val
            s = -koszul(self.degrees[i], self.degrees[j])
            mirror = {k: s * c for k, c in val.items()}
            if (j, i) in brackets and i != j:
                given = {k: Q(c) for k, c in brackets[(j, i)].items() if c}
                if given != mirror:
                    raise ValidationError("graded antisymmetry", (self.labels[i], self.labels[j]))
            table[(j, i)] = mirror if i != j else val
        self._table = table

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"WgLieAlgebra({self.name or '?'}, dim={len(self)})"

    def bracket(self, i, j):
        return self._table.get((i, j), {})

    def bracket_vec(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                _add_into(out, self.bracket(i, j), a * b)
        return out

    def d(self, i):
        return self.differential.get(i, {})

    def d_vec(self, u):
        out = {}
        for i, a in u.items():
            _add_into(out, self.d(i), a)
        return out

    def is_abelian(self):
        return not self._table

    def carrier(self):
        return ChainComplex.from_basis(
            [(i, self.weights[i], self.degrees[i], self.labels[i]) for i in range(len(self))], self.d)


def lie_from_presentation(p: GradedSpacePresentation, name="") -> WgLieAlgebra:
    return WgLieAlgebra([g.name for g in p.generators], [g.weight for g in p.generators],
                        [g.degree for g in p.generators],
                        {(i, j): v for i, j, v in p.brackets}, name=name)


def abelian(dim, weight=1, degree=0, name=""):
    labels = ["x", "y", "z"][:dim] if dim <= 3 else [f"x{i}" for i in range(dim)]
    return WgLieAlgebra(labels, [weight] * dim, [degree] * dim, {}, name=name or f"ab{dim}")


def heisenberg(name="heisenberg"):
    return WgLieAlgebra(["x", "y", "z"], [1, 1, 2], [0, 0, 0], {(0, 1): {2: 1}}, name=name)


def filiform4(name="filiform4"):
    """[x,y] = z, [x,z] = t with weights (1, 1, 2, 3): nilpotent of class 3."""
    return WgLieAlgebra(["x", "y", "z", "t"], [1, 1, 2, 3], [0, 0, 0, 0],
                        {(0, 1): {2: 1}, (0, 2): {3: 1}}, name=name)


# ----------------------------------------------------------------- checks

def check_antisymmetry(g):
    for i in range(len(g)):
        for j in range(len(g)):
            s = -koszul(g.degrees[i], g.degrees[j])
            if g.bracket(i, j) != {k: s * c for k, c in g.bracket(j, i).items()}:
                raise ValidationError("graded antisymmetry", (g.labels[i], g.labels[j]))


def check_jacobi(g):
    """[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]] on basis triples."""
    for i in range(len(g)):
        for j in range(len(g)):
            xy = g.bracket(i, j)
            for k in range(len(g)):
                lhs = g.bracket_vec({i: 1}, g.bracket(j, k))
                rhs = g.bracket_vec(xy, {k: 1})
                _add_into(rhs, g.bracket_vec({j: 1}, g.bracket(i, k)), koszul(g.degrees[i], g.degrees[j]))
                if lhs != rhs:
                    raise ValidationError("graded Jacobi identity", (g.labels[i], g.labels[j], g.labels[k]))


def check_derivation(g):
    for i in range(len(g)):
        if g.d_vec(g.d(i)):
            raise ValidationError("d∘d = 0", g.labels[i])
        for j in range(len(g)):
            lhs = g.d_vec(g.bracket(i, j))
            rhs = g.bracket_vec(g.d(i), {j: 1})
            _add_into(rhs, g.bracket_vec({i: 1}, g.d(j)), -1 if g.degrees[i] % 2 else 1)
            if lhs != rhs:
                raise ValidationError("d is a bracket derivation", (g.labels[i], g.labels[j]))


def validate_lie(g):
    check_antisymmetry(g)
    check_jacobi(g)
    check_derivation(g)


# -------------------------------------------------------------- free Lie

def lyndon_words(k, max_len):
    """Duval's algorithm: Lyndon words over {0..k-1} of length <= max_len."""
    if k == 0 or max_len == 0:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def _is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def standard_factorization(w):
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has length 1")


def _poly_mul(p, r):
    out = {}
    for u, a in p.items():
        for v, b in r.items():
            k = u + v
            x = out.get(k, 0) + a * b
            if x:
                out[k] = x
            else:
                out.pop(k, None)
    return out


def _commutator(p, dp, r, dr):
    out = _poly_mul(p, r)
    return _add_into(out, _poly_mul(r, p), -koszul(dp, dr))


def free_lie(v: GradedSpacePresentation, n: int, max_weight: int, name="") -> WgLieAlgebra:
    """Free graded Lie algebra on V[n-1], truncated at ``max_weight``.

    Realized inside the tensor algebra as standard bracketings of Lyndon
    words, plus [P_w, P_w] for odd Lyndon words w.  Each basis element is
    multihomogeneous with a distinct lexicographically smallest word, so
    brackets are rewritten in the basis by triangular reduction.
    The returned algebra has an ordinary degree-0 bracket; callers shift
    it by 1-n where the n-disk normalization is wanted.
    """
    gens = v.shifted(n - 1).generators
    if gens and v.weight_sign() < 0:
        raise MixedWeightSigns("free_lie needs strictly positive weights")
    k = len(gens)
    min_w = min((g.weight for g in gens), default=1)
    wt = lambda w: sum(gens[i].weight for i in w)
    dg = lambda w: sum(gens[i].degree for i in w)
    words = [w for w in lyndon_words(k, max_weight // min_w) if wt(w) <= max_weight]
    words.sort(key=lambda w: (wt(w), len(w), w))
    polys = {}
    labels = {}
    basis = []
    for w in words:
        if len(w) == 1:
            polys[w] = {w: Q(1)}
            labels[w] = gens[w[0]].name
        else:
            u, r = standard_factorization(w)
            polys[w] = _commutator(polys[u], dg(u), polys[r], dg(r))
            labels[w] = f"[{labels[u]},{labels[r]}]"
        basis.append(w)
        if dg(w) % 2 and 2 * wt(w) <= max_weight:
            sq = ("sq",) + w
            polys[sq] = _commutator(polys[w], dg(w), polys[w], dg(w))
            labels[sq] = f"[{labels[w]},{labels[w]}]"
            basis.append(sq)
    key_word = lambda b: b[1:] if b[0] == "sq" else b
    bw = lambda b: wt(key_word(b)) * (2 if b[0] == "sq" else 1)
    bd = lambda b: dg(key_word(b)) * (2 if b[0] == "sq" else 1)
    basis.sort(key=lambda b: (bw(b), bd(b), min(polys[b])))
    lead = {}
    for idx, b in enumerate(basis):
        p = polys[b]
        if not p:
            raise AssertionError(f"Lie basis element {labels[b]} vanishes")
        m = min(p)
        if m in lead:
            raise AssertionError(f"leading word collision at {m}")
        lead[m] = (idx, p[m])

    def reduce(poly):
        out = {}
        poly = dict(poly)
        while poly:
            m = min(poly)
            idx, c0 = lead[m]  # KeyError means the element is not a Lie polynomial
            c = poly[m] / c0
            out[idx] = c
            _add_into(poly, polys[basis[idx]], -c)
        return out

    brackets = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if j < i or bw(bi) + bw(bj) > max_weight:
                continue
            val = reduce(_commutator(polys[bi], bd(bi), polys[bj], bd(bj)))
            if val:
                brackets[(i, j)] = val
    g = WgLieAlgebra([labels[b] for b in basis], [bw(b) for b in basis], [bd(b) for b in basis],
                     brackets, name=name or f"FreeLie(V[{n - 1}])", max_weight=max_weight)
    g.polynomials = [polys[b] for b in basis]
    return g


# ----------------------------------------------------- commutative models

@dataclass
class CommutativeModel:
    """Finite-dimensional graded-commutative algebra (unit optional), weight 0."""

    labels: list
    degrees: list
    products: dict = field(default_factory=dict)  # (i, j) -> {k: coefficient}
    name: str = ""
    differential: dict = field(default_factory=dict)

    def mul(self, i, j):
        return self.products.get((i, j), {})

    def check(self):
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                s = koszul(self.degrees[i], self.degrees[j])
                if self.mul(i, j) != {k: s * c for k, c in self.mul(j, i).items()}:
                    raise ValidationError("model graded commutativity", (self.labels[i], self.labels[j]))
                for k in range(n):
                    left, right = {}, {}
                    for a, c in self.mul(i, j).items():
                        _add_into(left, self.mul(a, k), c)
                    for a, c in self.mul(j, k).items():
                        _add_into(right, self.mul(i, a), c)
                    if left != right:
                        raise ValidationError("model associativity", (self.labels[i], self.labels[j], self.labels[k]))


def _unital(labels, degrees, extra=None):
    prods = {(0, i): {i: 1} for i in range(len(labels))}
    prods.update({(i, 0): {i: 1} for i in range(len(labels))})
    prods.update(extra or {})
    return prods


def point_model():
    return CommutativeModel(["1"], [0], _unital(["1"], [0]), name="point")


def rn_model(n):
    """Compactly supported cochains of R^n: one class in degree -n, zero product."""
    return CommutativeModel([f"u{n}"], [-n], {}, name=f"R^{n}")


def sphere_cochains(m):
    """H^*(S^m) with cup product (m >= 1); S^0 is two orthogonal idempotents."""
    if m == 0:
        return CommutativeModel(["e0", "e1"], [0, 0], {(0, 0): {0: 1}, (1, 1): {1: 1}}, name="S^0")
    return CommutativeModel(["1", f"s{m}"], [0, -m], _unital(["1", "s"], [0, -m]), name=f"S^{m}")


def circle_model():
    return sphere_cochains(1)


def sphere_times_rn_model(m, n):
    """H_c^*(S^m x R^(n-m)).  For n > m every product vanishes (u^2 = 0 in H_c(R^(n-m)))."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if m == n:
        return sphere_cochains(m)
    k = n - m
    if m == 0:
        return CommutativeModel([f"u{k}@0", f"u{k}@1"], [-k, -k], {}, name=f"S^0xR^{k}")
    return CommutativeModel([f"u{k}", f"s{m}u{k}"], [-k, -n], {}, name=f"S^{m}xR^{k}")


def mapping_lie(m: CommutativeModel, g: WgLieAlgebra) -> WgLieAlgebra:
    """Model ⊗ g with [a⊗x, b⊗y] = (-1)^{|x||b|} ab ⊗ [x,y]."""
    pairs = [(a, x) for a in range(len(m.labels)) for x in range(len(g))]
    pairs.sort(key=lambda p: (abs(g.weights[p[1]]), p[1], p[0]))
    index = {p: k for k, p in enumerate(pairs)}
    brackets = {}
    for i, (a, x) in enumerate(pairs):
        for j, (b, y) in enumerate(pairs):
            xy = g.bracket(x, y)
            ab = m.mul(a, b)
            if not xy or not ab:
                continue
            s = koszul(g.degrees[x], m.degrees[b])
            out = {}
            for c, cc in ab.items():
                for z, cz in xy.items():
                    k = index[(c, z)]
                    out[k] = out.get(k, 0) + s * cc * cz
            out = {k: v for k, v in out.items() if v}
            if out:
                brackets[(i, j)] = out
    diff = {}
    for i, (a, x) in enumerate(pairs):
        out = {}
        for c, cc in m.differential.get(a, {}).items():
            _add_into(out, {index[(c, x)]: cc})
        s = -1 if m.degrees[a] % 2 else 1
        for z, cz in g.d(x).items():
            _add_into(out, {index[(a, z)]: s * cz})
        if out:
            diff[i] = out
    return WgLieAlgebra([f"{m.labels[a]}⊗{g.labels[x]}" for a, x in pairs],
                        [g.weights[x] for _, x in pairs],
                        [m.degrees[a] + g.degrees[x] for a, x in pairs],
                        brackets, diff, name=f"Map({m.name},{g.name})",
                        max_weight=g.max_weight)


# ---------------------------------------------------- Chevalley–Eilenberg

class _CEData:
    """Sym(l[1]) basis with CE boundary, shared by chains and cochains."""

    def __init__(self, l: WgLieAlgebra, max_weight: int):
        self.l = l
        self.max_weight = max_weight
        self.gens = [Generator("s" + l.labels[i], l.degrees[i] + 1, l.weights[i]) for i in range(len(l))]
        self.monos = _sym_monomials(self.gens, max_weight)
        self.index = {e: k for k, e in enumerate(self.monos)}
        self.weight = [sum(x * g.weight for x, g in zip(e, self.gens)) for e in self.monos]
        self.degree = [sum(x * g.degree for x, g in zip(e, self.gens)) for e in self.monos]
        self.labels = [_mono_label([g.name for g in self.gens], e) for e in self.monos]
        self.boundary = [self._boundary(e) for e in self.monos]

    def _word_to_mono(self, word):
        odd = [self.gens[i].degree % 2 for i in range(len(self.gens))]
        inv = 0
        for p in range(len(word)):
            if not odd[word[p]]:
                continue
            for q in range(p + 1, len(word)):
                if odd[word[q]]:
                    if word[p] == word[q]:
                        return 0, None
                    if word[p] > word[q]:
                        inv += 1
        e = [0] * len(self.gens)
        for i in word:
            e[i] += 1
        return (-1 if inv % 2 else 1), tuple(e)

    def _boundary(self, e):
        l = self.l
        sdeg = [g.degree for g in self.gens]
        word = tuple(i for i, x in enumerate(e) for _ in range(x))
        out = {}

        def emit(coef, new_word):
            s, mono = self._word_to_mono(new_word)
            if s:
                k = self.index[mono]
                x = out.get(k, 0) + s * coef
                if x:
                    out[k] = x
                else:
                    out.pop(k, None)

        prefix = 0
        for i, v in enumerate(word):
            for z, c in l.d(v).items():
                emit((-1 if prefix % 2 else 1) * -c, word[:i] + (z,) + word[i + 1:])
            prefix += sdeg[v]
        for i in range(len(word)):
            vi = word[i]
            before_i = sum(sdeg[word[t]] for t in range(i))
            for j in range(i + 1, len(word)):
                vj = word[j]
                br = l.bracket(vi, vj)
                if not br:
                    continue
                before_j = sum(sdeg[word[t]] for t in range(j) if t != i)
                sign = (-1) ** ((sdeg[vi] * before_i + sdeg[vj] * before_j) % 2)
                sign *= -1 if l.degrees[vi] % 2 else 1
                rest = word[:i] + word[i + 1:j] + word[j + 1:]
                for z, c in br.items():
                    emit(sign * c, (z,) + rest)
        return out


def ce_chains(l: WgLieAlgebra, max_weight: int) -> ChainComplex:
    data = _CEData(l, max_weight)
    elements = [(k, data.weight[k], data.degree[k], data.labels[k]) for k in range(len(data.monos))]
    c = ChainComplex.from_basis(elements, lambda k: data.boundary[k])
    c.check_d_squared()
    return c


def ce_cochains(l: WgLieAlgebra, max_weight: int, name="") -> WgAlgebra:
    """Graded dual of the CE chains, as a commutative dg algebra in negated weights."""
    data = _CEData(l, max_weight)
    gens = data.gens
    monos = data.monos
    deg = data.degree

    def mul(i, j):
        e1, e2 = monos[i], monos[j]
        s = sym_product_sign(gens, e1, e2)
        if not s:
            return {}
        e = tuple(a + b for a, b in zip(e1, e2))
        k = data.index.get(e)
        if k is None:
            return {}
        c = s * (-1 if (deg[i] * deg[j]) % 2 else 1)
        for g, a, b in zip(gens, e1, e2):
            if g.degree % 2 == 0:
                c *= comb(a + b, a)
        return {k: c}

    diff = {}
    for src, bd in enumerate(data.boundary):
        # coefficient of m in d(src) contributes to δ(m^*) with sign (-1)^{|m^*|}
        for m, c in bd.items():
            s = -1 if deg[m] % 2 else 1
            diff.setdefault(m, {})[src] = s * c
    unit = data.index[tuple(0 for _ in gens)]
    return WgAlgebra([f"({lab})^" if lab != "1" else "1" for lab in data.labels],
                     [-w for w in data.weight], [-d for d in deg], mul, diff, unit=unit,
                     commutative=True, max_weight=max_weight, name=name or f"C*({l.name})")
