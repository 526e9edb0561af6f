"""Tensors X ⊗ A of a commutative algebra with a finite simplicial set.

The simplicial chain complex k ↦ A^{⊗X_k} is normalized by discarding
every basis tensor whose support (the simplices carrying a non-unit
factor) lies inside the image of a single degeneracy.  Since each non-unit
factor has |weight| ≥ 1, only finitely many levels contribute to a weight
window; the level cap is checked at runtime.
"""
import json
from itertools import product as iproduct

from .algebra import WgAlgebra
from .complexes import ChainComplex
from .errors import LevelCapTooSmall, PresentationError, UnknownModel, ValidationError


class FiniteSimplicialSet:
    """Levels computed on demand.

    ``build(k)`` returns ``(labels, faces, degeneracies)`` for level ``k``:
    ``faces[i][x]`` is the index of ``d_i x`` in level ``k-1`` and
    ``degeneracies[j][x]`` the index of ``s_j x`` in level ``k+1``.
    """

    def __init__(self, name, build, dimension, max_level=None):
        self.name = name
        self.dimension = dimension
        self.max_level = max_level
        self._build = build
        self._levels = {}

    def __repr__(self):
        return f"FiniteSimplicialSet({self.name}, dim={self.dimension})"

    def level(self, k):
        if k not in self._levels:
            if self.max_level is not None and k > self.max_level:
                raise LevelCapTooSmall(f"{self.name}: level {k} requested, data stops at {self.max_level}")
            self._levels[k] = self._build(k)
        return self._levels[k]

    def simplices(self, k):
        return self.level(k)[0]

    def face(self, k, i):
        return self.level(k)[1][i]

    def degeneracy(self, k, j):
        return self.level(k)[2][j]

    def degenerate_cover(self, k):
        """Per simplex of level k, bitmask of those j with x outside im(s_j)."""
        n = len(self.simplices(k))
        if k == 0:
            return [0] * n
        full = (1 << k) - 1
        masks = [full] * n
        for j in range(k):
            for y in self.degeneracy(k - 1, j):
                masks[y] &= ~(1 << j)
        return masks


# ---------------------------------------------------------------- models

def _from_functions(name, dimension, simplices, face, degen):
    def build(k):
        xs = simplices(k)
        faces = []
        if k > 0:
            lower = {x: n for n, x in enumerate(simplices(k - 1))}
            faces = [[lower[face(i, x)] for x in xs] for i in range(k + 1)]
        upper = {x: n for n, x in enumerate(simplices(k + 1))}
        degens = [[upper[degen(j, x)] for x in xs] for j in range(k + 1)]
        return [str(x) for x in xs], faces, degens

    return FiniteSimplicialSet(name, build, dimension)


def _monotone(k, n):
    """Monotone maps [k] -> [n] as nondecreasing tuples."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == k + 1:
            out.append(tuple(prefix))
            return
        for v in range(lo, n + 1):
            rec(prefix + [v], v)

    rec([], 0)
    return out


def _drop(t, i):
    return t[:i] + t[i + 1:]


def _repeat(t, j):
    return t[:j + 1] + t[j:]


def simplex_mod_boundary(n, name=None):
    """Δ[n]/∂Δ[n]: surjections [k] -> [n] plus a basepoint."""
    base = "*"

    def simplices(k):
        return [base] + [t for t in _monotone(k, n) if set(t) == set(range(n + 1))]

    def face(i, x):
        if x == base:
            return base
        y = _drop(x, i)
        return y if set(y) == set(range(n + 1)) else base

    def degen(j, x):
        return base if x == base else _repeat(x, j)

    return _from_functions(name or f"S^{n}", n, simplices, face, degen)


def standard_simplex(n, name=None):
    return _from_functions(name or f"Delta[{n}]", n, lambda k: _monotone(k, n),
                           lambda i, x: _drop(x, i), lambda j, x: _repeat(x, j))


def point():
    return _from_functions("point", 0, lambda k: ["*"], lambda i, x: x, lambda j, x: x)


def product(x: FiniteSimplicialSet, y: FiniteSimplicialSet, name=None):
    def build(k):
        lx, fx, sx = x.level(k)
        ly, fy, sy = y.level(k)
        ny = len(ly)
        labels = [f"({a},{b})" for a, b in iproduct(lx, ly)]
        nyl = len(y.simplices(k - 1)) if k > 0 else 0
        nyu = len(y.simplices(k + 1))
        faces = [[fx[i][p // ny] * nyl + fy[i][p % ny] for p in range(len(labels))] for i in range(len(fx))]
        degens = [[sx[j][p // ny] * nyu + sy[j][p % ny] for p in range(len(labels))] for j in range(len(sx))]
        return labels, faces, degens

    out = FiniteSimplicialSet(name or f"{x.name}x{y.name}", build, x.dimension + y.dimension)
    out.factors = getattr(x, "factors", (x,)) + getattr(y, "factors", (y,))
    return out


def builtin_model(name):
    if name == "point":
        return point()
    if name == "circle":
        return simplex_mod_boundary(1, "circle")
    if name == "sphere2":
        return simplex_mod_boundary(2, "sphere2")
    if name == "torus":
        return product(simplex_mod_boundary(1), simplex_mod_boundary(1), "torus")
    if name == "interval":
        return standard_simplex(1, "interval")
    raise UnknownModel(f"unknown simplicial model {name!r}; expected point, circle, sphere2, torus or interval")


def load_simplicial(data):
    """From ``{"name", "dimension", "levels": [{"simplices", "faces", "degeneracies"}]}``.

    The last level needs no degeneracies; it is used only as the vanishing check.
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        levels = data["levels"]
        parsed = []
        for lv in levels:
            parsed.append((list(lv["simplices"]), [list(f) for f in lv.get("faces", [])],
                           [list(s) for s in lv.get("degeneracies", [])]))
        dim = int(data.get("dimension", len(levels) - 1))
    except (KeyError, TypeError, ValueError) as e:
        raise PresentationError(f"bad simplicial set: {e}") from e
    return FiniteSimplicialSet(data.get("name", "custom"), lambda k: parsed[k], dim, len(parsed) - 1)


def check_simplicial_identities(x: FiniteSimplicialSet, level_cap: int):
    """All five simplicial identities, exhaustively on levels 0..level_cap."""
    for k in range(level_cap + 1):
        n = len(x.simplices(k))
        for p in range(n):
            for j in range(k + 1):
                sj = x.degeneracy(k, j)[p]
                for i in range(k + 2):
                    di_sj = x.face(k + 1, i)[sj]
                    if i < j:
                        want = x.degeneracy(k - 1, j - 1)[x.face(k, i)[p]] if k > 0 else None
                    elif i in (j, j + 1):
                        want = p
                    else:
                        want = x.degeneracy(k - 1, j)[x.face(k, i - 1)[p]] if k > 0 else None
                    if want is not None and di_sj != want:
                        raise ValidationError("d_i s_j identity", (x.name, k, p, i, j))
                for i in range(j + 1):
                    if x.degeneracy(k + 1, i)[sj] != x.degeneracy(k + 1, j + 1)[x.degeneracy(k, i)[p]]:
                        raise ValidationError("s_i s_j identity", (x.name, k, p, i, j))
            if k >= 2:
                for i in range(k + 1):
                    for j in range(i + 1, k + 1):
                        if x.face(k - 1, i)[x.face(k, j)[p]] != x.face(k - 1, j - 1)[x.face(k, i)[p]]:
                            raise ValidationError("d_i d_j identity", (x.name, k, p, i, j))


# ------------------------------------------------------- normalized chains

class _Levels:
    """Multi-levels of a product X1 × ... × Xr, one simplicial direction per factor.

    With a single factor this is the ordinary simplicial object; with
    several it is the multisimplicial one whose diagonal is the product.
    """

    def __init__(self, factors):
        self.factors = factors
        self._cache = {}

    def data(self, ks):
        if ks not in self._cache:
            sizes = [len(x.simplices(k)) for x, k in zip(self.factors, ks)]
            n = 1
            for m in sizes:
                n *= m
            coords = list(iproduct(*[range(m) for m in sizes]))
            cover = [0] * n
            offset = 0
            for r, (x, k) in enumerate(zip(self.factors, ks)):
                cr = x.degenerate_cover(k)
                for p, c in enumerate(coords):
                    cover[p] |= cr[c[r]] << offset
                offset += k
            index = {c: p for p, c in enumerate(coords)}
            self._cache[ks] = (coords, cover, (1 << offset) - 1, index)
        return self._cache[ks]

    def face(self, ks, r, i):
        """Index map of d_i in direction r from multi-level ks."""
        key = (ks, r, i)
        if key not in self._cache:
            coords = self.data(ks)[0]
            lower = ks[:r] + (ks[r] - 1,) + ks[r + 1:]
            lindex = self.data(lower)[3]
            f = self.factors[r].face(ks[r], i)
            self._cache[key] = [lindex[c[:r] + (f[c[r]],) + c[r + 1:]] for c in coords]
        return self._cache[key]

    def labels(self, ks):
        coords = self.data(ks)[0]
        names = [x.simplices(k) for x, k in zip(self.factors, ks)]
        if len(names) == 1:
            return [names[0][c[0]] for c in coords]
        return ["(" + ",".join(n[i] for n, i in zip(names, c)) + ")" for c in coords]


def _normalized_basis(levels, ks, a, max_weight):
    """Sorted tuples ((simplex, basis element), ...) with nondegenerate support in every direction."""
    _, cover, full, _ = levels.data(ks)
    ideal = [i for i in a.ideal() if abs(a.weights[i]) <= max_weight]
    if not ideal:
        return [()] if full == 0 else []
    min_w = min(abs(a.weights[i]) for i in ideal)
    best = max((bin(m).count("1") for m in cover), default=0)
    out = []

    def rec(start, chosen, covered, used):
        if covered == full:
            out.append(tuple(chosen))
        budget = (max_weight - used) // min_w
        missing = bin(full & ~covered).count("1")
        if budget <= 0 or (missing and (best == 0 or -(-missing // best) > budget)):
            return
        for s in range(start, len(cover)):
            for b in ideal:
                w = abs(a.weights[b])
                if used + w > max_weight:
                    continue
                chosen.append((s, b))
                rec(s + 1, chosen, covered | cover[s], used + w)
                chosen.pop()

    rec(0, [], 0, 0)
    return out


def _multi_levels(caps):
    return list(iproduct(*[range(c + 1) for c in caps]))


def space_tensor(x: FiniteSimplicialSet, a: WgAlgebra, max_weight: int, level_cap=None,
                 method="auto") -> ChainComplex:
    """Normalized total complex of k ↦ A^{⊗X_k}, truncated at |weight| ≤ max_weight.

    ``method="auto"`` splits a levelwise product into its factors and
    totalizes the multisimplicial object (Eilenberg–Zilber); ``"diagonal"``
    always uses the simplicial object of ``x`` itself.
    """
    if not a.commutative:
        raise ValidationError("space_tensor needs a commutative algebra", a.name)
    if method not in ("auto", "diagonal"):
        raise ValueError(f"unknown method {method!r}")
    factors = getattr(x, "factors", (x,)) if method == "auto" else (x,)
    W = max_weight
    if level_cap is None:
        caps = tuple(W * f.dimension for f in factors)
    else:
        caps = (level_cap,) * len(factors)
    levels = _Levels(factors)
    for r in range(len(factors)):
        for ks in _multi_levels(caps):
            over = ks[:r] + (caps[r] + 1,) + ks[r + 1:]
            if _normalized_basis(levels, over, a, W):
                raise LevelCapTooSmall(f"{x.name}: level {over} has nondegenerate tensors within weight {W}")
    all_ks = _multi_levels(caps)
    bases = {ks: _normalized_basis(levels, ks, a, W) for ks in all_ks}
    index = {ks: {t: n for n, t in enumerate(b)} for ks, b in bases.items()}
    deg = a.degrees

    def push(f, t):
        """Pushforward of a basis tensor along a face index map, with Koszul reordering sign."""
        order = sorted(range(len(t)), key=lambda p: f[t[p][0]])
        inv = 0
        odd = [deg[b] % 2 for _, b in t]
        for p in range(len(order)):
            if odd[order[p]]:
                for q in range(p + 1, len(order)):
                    if odd[order[q]] and order[q] < order[p]:
                        inv += 1
        groups = []
        for p in order:
            y, b = f[t[p][0]], t[p][1]
            if groups and groups[-1][0] == y:
                groups[-1][1] = a.mul_vec(groups[-1][1], {b: 1})
            else:
                groups.append([y, {b: 1}])
        terms = {(): -1 if inv % 2 else 1}
        for y, vec in groups:
            terms = {tt + ((y, b),): c * v for tt, c in terms.items() for b, v in vec.items()}
        return terms

    def boundary(key):
        ks, n = key
        t = bases[ks][n]
        out = {}

        def add(kk, tt, c):
            m = index[kk].get(tt)
            if m is None:
                _, cover, full, _ = levels.data(kk)
                cov = 0
                for s, _ in tt:
                    cov |= cover[s]
                if cov != full:
                    return  # degenerate: zero in the normalized quotient
                raise ValidationError("face of a normalized tensor left the basis", (ks, t, tt))
            out[(kk, m)] = out.get((kk, m), 0) + c

        before = 0
        for r, k in enumerate(ks):
            if k > 0:
                lower = ks[:r] + (k - 1,) + ks[r + 1:]
                for i in range(k + 1):
                    s = -1 if (before + i) % 2 else 1
                    for tt, c in push(levels.face(ks, r, i), t).items():
                        add(lower, tt, s * c)
            before += k
        prefix = before
        for p, (y, b) in enumerate(t):
            s = -1 if prefix % 2 else 1
            for z, c in a.d(b).items():
                add(ks, t[:p] + ((y, z),) + t[p + 1:], s * c)
            prefix += deg[b]
        return out

    elements = []
    for ks in all_ks:
        names = levels.labels(ks)
        tag = ",".join(map(str, ks))
        for n, t in enumerate(bases[ks]):
            w = sum(a.weights[e] for _, e in t)
            d = sum(ks) + sum(deg[e] for _, e in t)
            lab = f"{tag}:" + ("⊗".join(f"{a.labels[e]}@{names[s]}" for s, e in t) or "1")
            elements.append(((ks, n), w, d, lab))
    c = ChainComplex.from_basis(elements, boundary)
    c.check_d_squared()
    return c
