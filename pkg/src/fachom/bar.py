"""Two-sided, one-sided and cyclic bar constructions, truncated by weight.

Inner factors are suspended, r[sa1|...|sak]l, and the differential is the
sum over positions of

    d(r),  -s(da),  d(l),  -(-1)^{|r|} r a1,  (-1)^{|a|} s(ab),  ak l,

each preceded by the Koszul sign of moving past the factors on its left
(module ends count with their own degree, inner factors with |a| + 1).
The cyclic complex suspends a0 as well and adds the wrap-around face that
rotates the last factor to the front.  docs/SIGNS.md spells this out.
"""
from fractions import Fraction

from .algebra import WgAlgebra, _add_into, algebra_tensor, koszul, opposite
from .complexes import ChainComplex, homology
from .errors import MixedWeightSigns, UnboundedWeight, ValidationError

Q = Fraction


class WgModule:
    """Chain complex with optional left and right actions by weight-graded algebras."""

    def __init__(self, labels, weights, degrees, differential=None, left=None, left_act=None,
                 right=None, right_act=None, name=""):
        self.labels = list(labels)
        self.weights = list(weights)
        self.degrees = list(degrees)
        self.differential = differential or {}
        self.left, self._left_act = left, left_act
        self.right, self._right_act = right, right_act
        self.name = name
        self._lmemo, self._rmemo = {}, {}

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        sides = "".join(s for s, a in (("L", self.left), ("R", self.right)) if a is not None)
        return f"WgModule({self.name or '?'}, dim={len(self)}, actions={sides or '-'})"

    def act_left(self, a, m):
        if a == self.left.unit:
            return {m: Q(1)}
        r = self._lmemo.get((a, m))
        if r is None:
            r = {k: Q(v) for k, v in self._left_act(a, m).items() if v}
            self._lmemo[(a, m)] = r
        return r

    def act_right(self, m, a):
        if a == self.right.unit:
            return {m: Q(1)}
        r = self._rmemo.get((m, a))
        if r is None:
            r = {k: Q(v) for k, v in self._right_act(m, a).items() if v}
            self._rmemo[(m, a)] = r
        return r

    def d(self, i):
        return self.differential.get(i, {})

    def carrier(self) -> ChainComplex:
        return ChainComplex.from_basis(
            [(i, self.weights[i], self.degrees[i], self.labels[i]) for i in range(len(self))], self.d)


def regular(a: WgAlgebra) -> WgModule:
    """A as an A-A bimodule."""
    return WgModule(a.labels, a.weights, a.degrees, a.differential,
                    left=a, left_act=a.mul, right=a, right_act=a.mul, name=a.name)


def augmentation_module(a: WgAlgebra) -> WgModule:
    """The ground field with the augmentation action on both sides."""
    return WgModule(["1"], [0], [0], {}, left=a, left_act=lambda x, m: {},
                    right=a, right_act=lambda m, x: {}, name="Q")


def hochschild_module(a: WgAlgebra, ae: WgAlgebra) -> WgModule:
    """A over A⊗A^op on both sides, with the outer actions.

    (x⊗y)·m = (-1)^{|y||m|} x m y        m·(x⊗y) = (-1)^{|y|(|m|+|x|)} y m x
    """
    deg = a.degrees

    def left(e, m):
        x, y = ae.pairs[e]
        s = koszul(deg[y], deg[m])
        return {k: s * c for k, c in a.mul_vec(a.mul(x, m), {y: 1}).items()}

    def right(m, e):
        x, y = ae.pairs[e]
        s = -1 if (deg[y] * (deg[m] + deg[x])) % 2 else 1
        return {k: s * c for k, c in a.mul_vec(a.mul(y, m), {x: 1}).items()}

    return WgModule(a.labels, a.weights, a.degrees, a.differential, left=ae, left_act=left,
                    right=ae, right_act=right, name=f"{a.name}(bimod)")


def enveloping_pair(a: WgAlgebra) -> WgAlgebra:
    return algebra_tensor(a, opposite(a))


# ------------------------------------------------------------------ checks

def check_module(m: WgModule):
    """Action associativity, unit and Leibniz on basis tuples inside the window."""
    for side in ("left", "right"):
        alg = getattr(m, side)
        if alg is None:
            continue
        act = m.act_left if side == "left" else m.act_right
        W = alg.max_weight

        def act_vec(avec, mvec):
            out = {}
            for x, c in avec.items():
                for k, e in mvec.items():
                    r = act(x, k) if side == "left" else act(k, x)
                    _add_into(out, r, c * e)
            return out

        ideal = alg.ideal()
        for k in range(len(m)):
            for x in ideal:
                if abs(m.weights[k] + alg.weights[x]) > W:
                    continue
                for y in ideal:
                    if abs(m.weights[k] + alg.weights[x] + alg.weights[y]) > W:
                        continue
                    if side == "left":
                        lhs = act_vec({x: 1}, act_vec({y: 1}, {k: 1}))
                        rhs = act_vec(alg.mul(x, y), {k: 1})
                    else:
                        lhs = act_vec({y: 1}, act_vec({x: 1}, {k: 1}))
                        rhs = act_vec(alg.mul(x, y), {k: 1})
                    if lhs != rhs:
                        raise ValidationError(f"{side} action associativity", (m.labels[k], alg.labels[x], alg.labels[y]))
                # Leibniz: d(x·k) = dx·k + (-1)^{|x|} x·dk   (left)
                #          d(k·x) = dk·x + (-1)^{|k|} k·dx   (right)
                mv = act_vec({x: 1}, {k: 1})
                lhs = {}
                for t, c in mv.items():
                    _add_into(lhs, m.d(t), c)
                if side == "left":
                    rhs = act_vec(alg.d(x), {k: 1})
                    _add_into(rhs, act_vec({x: 1}, m.d(k)), -1 if alg.degrees[x] % 2 else 1)
                else:
                    rhs = act_vec({x: 1}, m.d(k))
                    _add_into(rhs, act_vec(alg.d(x), {k: 1}), -1 if m.degrees[k] % 2 else 1)
                if lhs != rhs:
                    raise ValidationError(f"{side} action Leibniz rule", (m.labels[k], alg.labels[x]))


# ------------------------------------------------------------- bar complexes

def _check_augmented(a: WgAlgebra):
    if any(a.weights[i] == 0 for i in a.ideal()):
        raise UnboundedWeight(f"{a.name}: augmentation ideal has a weight-0 component")


def _by_abs_weight(idx, weights):
    out = {}
    for i in idx:
        out.setdefault(abs(weights[i]), []).append(i)
    return out


def bar_module(r: WgModule, a: WgAlgebra, l: WgModule, max_weight: int) -> WgModule:
    """B(R, A, L) with the outer left action of R and right action of L."""
    _check_augmented(a)
    for mod in (r, l):
        if any(w and (w > 0) != (a.sign > 0) for w in mod.weights):
            raise MixedWeightSigns(f"module {mod.name} has weights of the wrong sign for {a.name}")
    W = max_weight
    rw = _by_abs_weight(range(len(r)), r.weights)
    aw = _by_abs_weight(a.ideal(), a.weights)
    lw = _by_abs_weight(range(len(l)), l.weights)
    keys = []

    def extend(prefix, used):
        for wl in range(0, W - used + 1):
            for li in lw.get(wl, ()):
                keys.append(prefix + (li,))
        for wa in range(1, W - used + 1):
            for ai in aw.get(wa, ()):
                extend(prefix + (ai,), used + wa)

    for wr in range(W + 1):
        for ri in rw.get(wr, ()):
            extend((ri,), wr)

    def wdeg(key):
        mid = key[1:-1]
        w = r.weights[key[0]] + sum(a.weights[x] for x in mid) + l.weights[key[-1]]
        dg = r.degrees[key[0]] + sum(a.degrees[x] + 1 for x in mid) + l.degrees[key[-1]]
        return w, dg

    for key in keys:
        if len(key) - 2 > abs(wdeg(key)[0]):
            raise AssertionError(f"bar level {len(key) - 2} exceeds |weight| for {key}")
    keys.sort(key=lambda k: (abs(wdeg(k)[0]), wdeg(k)[1], len(k), k))
    index = {k: n for n, k in enumerate(keys)}

    def label(key):
        parts = [r.labels[key[0]]] + [a.labels[x] for x in key[1:-1]] + [l.labels[key[-1]]]
        return "[" + "|".join(parts) + "]"

    def boundary(key):
        out = {}
        s = len(key) - 2
        sdeg = [r.degrees[key[0]]] + [a.degrees[x] + 1 for x in key[1:-1]] + [l.degrees[key[-1]]]

        def emit(newkey, c):
            k = index.get(newkey)
            if k is None:  # product left the window
                return
            x = out.get(k, 0) + c
            if x:
                out[k] = x
            else:
                out.pop(k, None)

        prefix = 0
        for pos in range(s + 2):
            sign = -1 if prefix % 2 else 1
            if pos == 0:
                diff, dsign = r.d(key[0]), sign
            elif pos == s + 1:
                diff, dsign = l.d(key[-1]), sign
            else:
                diff, dsign = a.d(key[pos]), -sign
            for z, c in diff.items():
                emit(key[:pos] + (z,) + key[pos + 1:], dsign * c)
            if pos <= s and s > 0:
                # merge factor pos with pos + 1; the two module ends never meet directly
                if pos == 0:
                    fsign, prod = -sign * (-1 if r.degrees[key[0]] % 2 else 1), r.act_right(key[0], key[1])
                elif pos == s:
                    fsign, prod = sign, l.act_left(key[pos], key[-1])
                else:
                    fsign, prod = sign * (-1 if a.degrees[key[pos]] % 2 else 1), a.mul(key[pos], key[pos + 1])
                for z, c in prod.items():
                    emit(key[:pos] + (z,) + key[pos + 2:], fsign * c)
            prefix += sdeg[pos]
        return out

    weights, degrees = zip(*[wdeg(k) for k in keys]) if keys else ((), ())
    diff = {}
    for n, k in enumerate(keys):
        b = boundary(k)
        if b:
            diff[n] = b

    def left_act(p, n):
        key = keys[n]
        out = {}
        for z, c in r.act_left(p, key[0]).items():
            k = index.get((z,) + key[1:])
            if k is not None:
                out[k] = out.get(k, 0) + c
        return out

    def right_act(n, q):
        key = keys[n]
        out = {}
        for z, c in l.act_right(key[-1], q).items():
            k = index.get(key[:-1] + (z,))
            if k is not None:
                out[k] = out.get(k, 0) + c
        return out

    m = WgModule([label(k) for k in keys], list(weights), list(degrees), diff,
                 left=r.left, left_act=left_act if r.left is not None else None,
                 right=l.right, right_act=right_act if l.right is not None else None,
                 name=f"B({r.name},{a.name},{l.name})")
    m.keys = keys
    return m


def two_sided_bar(r: WgModule, a: WgAlgebra, l: WgModule, max_weight: int) -> ChainComplex:
    c = bar_module(r, a, l, max_weight).carrier()
    c.check_d_squared()
    return c


def bar(a: WgAlgebra, max_weight: int) -> ChainComplex:
    k = augmentation_module(a)
    return two_sided_bar(k, a, k, max_weight)


def relative_tensor(r: WgModule, a: WgAlgebra, l: WgModule, max_weight: int):
    return homology(two_sided_bar(r, a, l, max_weight), (-max_weight, max_weight))


def hochschild_via_bimodule(a: WgAlgebra, max_weight: int) -> ChainComplex:
    """A ⊗_{A⊗A^op} A, computed as B(A, A⊗A^op, A)."""
    ae = enveloping_pair(a)
    m = hochschild_module(a, ae)
    return two_sided_bar(m, ae, m, max_weight)


def cyclic_bar(a: WgAlgebra, max_weight: int) -> ChainComplex:
    """Normalized Hochschild complex ⊕_s A ⊗ Ā^{⊗s} with the wrap-around face."""
    _check_augmented(a)
    W = max_weight
    aw = _by_abs_weight(a.ideal(), a.weights)
    keys = []

    def extend(prefix, used):
        keys.append(prefix)
        for wa in range(1, W - used + 1):
            for x in aw.get(wa, ()):
                extend(prefix + (x,), used + wa)

    for i in range(len(a)):
        if abs(a.weights[i]) <= W:
            extend((i,), abs(a.weights[i]))

    def wdeg(key):
        return (sum(a.weights[x] for x in key),
                a.degrees[key[0]] + sum(a.degrees[x] + 1 for x in key[1:]))

    keys.sort(key=lambda k: (abs(wdeg(k)[0]), wdeg(k)[1], len(k), k))
    index = {k: n for n, k in enumerate(keys)}

    def boundary(n):
        key = keys[n]
        s = len(key) - 1
        sdeg = [a.degrees[x] + 1 for x in key]
        out = {}

        def emit(newkey, c):
            k = index.get(newkey)
            if k is None:
                return
            x = out.get(k, 0) + c
            if x:
                out[k] = x
            else:
                out.pop(k, None)

        prefix = 0
        for pos in range(s + 1):
            sign = -1 if prefix % 2 else 1
            for z, c in a.d(key[pos]).items():
                emit(key[:pos] + (z,) + key[pos + 1:], -sign * c)
            if pos < s:
                fsign = sign * (-1 if a.degrees[key[pos]] % 2 else 1)
                for z, c in a.mul(key[pos], key[pos + 1]).items():
                    emit(key[:pos] + (z,) + key[pos + 2:], fsign * c)
            prefix += sdeg[pos]
        if s >= 1:
            # rotate x_s to the front, then merge it with x_0
            rot = -1 if (sdeg[s] * (prefix - sdeg[s])) % 2 else 1
            fsign = rot * (-1 if a.degrees[key[s]] % 2 else 1)
            for z, c in a.mul(key[s], key[0]).items():
                emit((z,) + key[1:s], fsign * c)
        return out

    def label(key):
        return "[" + "|".join(a.labels[x] for x in key) + "]"

    elements = [(n, *wdeg(k), label(k)) for n, k in enumerate(keys)]
    c = ChainComplex.from_basis(elements, boundary)
    c.check_d_squared()
    return c
