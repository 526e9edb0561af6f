"""Free n-disk algebras and labeled configuration spaces, as dimension tables.

Over Q the homology of the free n-disk algebra on V is Sym(L[1-n]) with
L = FreeLie(V[n-1]); the Lie-model route computes the same thing (and its
analogue on other framed n-manifolds) as CE homology of Map_c(M, L).
"""
from .algebra import GradedSpacePresentation, Generator, sym_algebra, sym_dimension_table, tensor_algebra
from .bar import bar
from .complexes import BettiTable, DimTable, homology
from .errors import InvalidCodim
from .excision import Report
from .lie import CommutativeModel, ce_chains, free_lie, mapping_lie, sphere_times_rn_model


def _lie_generators(v, n, max_weight, shift):
    g = free_lie(v, n, max_weight)
    return [Generator(f"g{i}", g.degrees[i] + shift, g.weights[i]) for i in range(len(g))]


def free_en_dims(n: int, v: GradedSpacePresentation, max_weight: int) -> DimTable:
    """Dimensions of Sym(FreeLie(V[n-1])[1-n]) up to weight ``max_weight``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    gens = _lie_generators(v, n, max_weight, 1 - n)
    return sym_dimension_table(gens, max_weight).dimension_table()


def conf_labeled_homology(m: CommutativeModel, n: int, v: GradedSpacePresentation, max_weight: int) -> DimTable:
    """Homology of C^Lie_*(Map_c(M, FreeLie(V[n-1]))), graded like free_en_dims."""
    g = free_lie(v, n, max_weight)
    if not len(g):
        return DimTable({(0, 0): 1})
    b = homology(ce_chains(mapping_lie(m, g), max_weight), (-max_weight, max_weight))
    return DimTable(b.entries)


def check_splits(n: int, m: int, v: GradedSpacePresentation, max_weight: int) -> Report:
    """S^m × R^{n-m}: Lie-model homology against Free_n(V) ⊗ Free_{n-m}(V[m])."""
    if not 0 <= m < n:
        raise InvalidCodim(f"splitting needs 0 <= m < n, got m={m}, n={n}")
    lhs = conf_labeled_homology(sphere_times_rn_model(m, n), n, v, max_weight)
    rhs = free_en_dims(n, v, max_weight).convolve(free_en_dims(n - m, v.shifted(m), max_weight), max_weight)
    return _compare([(f"Lie model on S^{m}xR^{n - m}", lhs),
                     (f"Free_{n} ⊗ Free_{n - m}(V[{m}])", rhs)], [(0, 1)], max_weight)


def check_bar_free(n: int, v: GradedSpacePresentation, max_weight: int) -> Report:
    """B Free_n(V) against Free_{n-1}(ΣV).

    n = 1 is a chain-level check: the bar construction of T(V) against
    Q ⊕ V[1].  For n ≥ 2 the bar construction is computed on the formal
    model Sym(L[1-n]) and compared with Free_{n-1}(ΣV); separately the
    generators FreeLie(V[n-1])[2-n] and FreeLie((ΣV)[n-2])[2-n] are compared.
    """
    W = max_weight
    if n == 1:
        got = homology(bar(tensor_algebra(v, W), W), (-W, W))
        want = {(0, 0): 1}
        for g in v.generators:
            if abs(g.weight) <= W:
                want[(g.weight, g.degree + 1)] = want.get((g.weight, g.degree + 1), 0) + 1
        return _compare([("bar(T(V))", got), ("Q ⊕ V[1]", BettiTable(want))], [(0, 1)], W)
    sym = sym_algebra(GradedSpacePresentation(_lie_generators(v, n, W, 1 - n)), W)
    got = homology(bar(sym, W), (-W, W))
    suspended = v.shifted(1)
    want = free_en_dims(n - 1, suspended, W)
    lhs_gens = sym_dimension_table(_lie_generators(v, n, W, 2 - n), W).dimension_table()
    rhs_gens = sym_dimension_table(_lie_generators(suspended, n - 1, W, 2 - n), W).dimension_table()
    lie_l = _generator_table(v, n, W, 2 - n)
    lie_r = _generator_table(suspended, n - 1, W, 2 - n)
    return _compare([(f"bar(Sym(FreeLie(V[{n - 1}])[{1 - n}]))", got),
                     (f"Free_{n - 1}(ΣV)", want),
                     (f"Sym(FreeLie(V[{n - 1}])[{2 - n}])", lhs_gens),
                     (f"Sym(FreeLie(ΣV[{n - 2}])[{2 - n}])", rhs_gens),
                     (f"FreeLie(V[{n - 1}])[{2 - n}]", lie_l),
                     (f"FreeLie(ΣV[{n - 2}])[{2 - n}]", lie_r)],
                    [(0, 1), (1, 2), (2, 3), (4, 5)], W)


def _generator_table(v, n, max_weight, shift):
    out = {}
    for g in _lie_generators(v, n, max_weight, shift):
        out[(g.weight, g.degree)] = out.get((g.weight, g.degree), 0) + 1
    return DimTable(out)


def _compare(routes, pairs, max_weight):
    names = [r for r, _ in routes]
    tables = [t.restrict(max_weight) for _, t in routes]
    comps = [(i, j, tables[i].first_difference(tables[j])) for i, j in pairs]
    return Report(names, tables, comps, (max_weight,))
