"""Top-degree embedding obstruction machinery for octahedralized complexes.

Two k-simplices with vertices in increasing rank order are *meshed* when
their vertices strictly interleave.  The meshing cocycle assigns +1 to a
meshed ordered pair led by the lower vertex, (-1)^k to the swapped pair,
and 0 otherwise; its mod-2 reduction is the top obstruction cocycle on the
configuration space.  A nonstrict variant pairs simplices of the doubled
complex with simplices of the minus copy.

Nonvanishing is certified by a cycle of unordered disjoint pairs that
jointly cover a chosen simplex, built from a GF(2) cycle of the base.
Vanishing is certified by an explicit coboundary primitive.  A geometric
cross-check computes exact signed intersection numbers of simplices mapped
to the moment curve and must reproduce the combinatorial cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .complexes import SimplicialComplex, skeleton
from .config_space import ConfigurationSpace, chain_boundary
from .homology import cycle_space, solve_coboundary
from .intlinalg import integer_det
from .octa import MINUS, Octahedralization, DoubledComplex, double_over, minus_lift, octahedralize, project


# ---------------------------------------------------------------------------
# Cocycles


def _interleaves(a: tuple, b: tuple, rank: dict) -> bool:
    """a0 < b0 < a1 < b1 < ... < ak < bk in the vertex order."""
    prev = None
    for x, y in zip(a, b):
        rx, ry = rank[x], rank[y]
        if rx >= ry:
            return False
        if prev is not None and prev >= rx:
            return False
        prev = ry
    return True


def mesh_number(sigma: tuple, tau: tuple, rank: dict) -> int:
    """Value of the top integral obstruction cocycle on an ordered pair."""
    if len(sigma) != len(tau):
        raise ValueError("meshing is defined for equal-dimensional simplices")
    k = len(sigma) - 1
    if _interleaves(sigma, tau, rank):
        return 1
    if _interleaves(tau, sigma, rank):
        return (-1) ** k
    return 0


def mesh_indicator(cell, rank: dict) -> int:
    """Mod-2 meshing indicator on an unordered pair cell."""
    sigma, tau = cell
    return 1 if (_interleaves(sigma, tau, rank) or _interleaves(tau, sigma, rank)) else 0


@dataclass(frozen=True)
class MeshVerdict:
    """Classified cocycle value on an ordered pair: value is nonzero exactly
    when the vertices interleave one way or the other."""

    value: int
    kind: str  # 'strict-mesh' | 'swapped-mesh' | 'non-mesh'


def mesh_verdict(sigma: tuple, tau: tuple, rank: dict) -> MeshVerdict:
    k = len(sigma) - 1
    if _interleaves(sigma, tau, rank):
        return MeshVerdict(value=1, kind="strict-mesh")
    if _interleaves(tau, sigma, rank):
        return MeshVerdict(value=(-1) ** k, kind="swapped-mesh")
    return MeshVerdict(value=0, kind="non-mesh")


def nonstrict_mesh_indicator(sigma: tuple, b: tuple, rank: dict) -> int:
    """Nonstrict meshing of a doubled simplex against a minus-copy simplex.

    The pattern is v0 <= w0 < v1 <= w1 < ... < vk <= wk in the interleaved
    order, where the w's are the vertices of `b` (all carrying the minus
    sign).
    """
    if len(sigma) != len(b):
        raise ValueError("nonstrict meshing needs equal-dimensional simplices")
    if any(s != MINUS for _v, s in b):
        raise ValueError("second simplex must lie in the minus copy")
    prev = None
    for v, w in zip(sigma, b):
        rv, rw = rank[v], rank[w]
        if rv > rw:
            return 0
        if prev is not None and prev >= rv:
            return 0
        prev = rw
    return 1


def push_to_product(chain, octa: Octahedralization) -> dict:
    """Push a configuration-space chain to the product with the minus copy.

    An unordered pair [sigma, tau] goes to (sigma, p(tau)) plus the swapped
    term with the factor-switch sign, where p relabels onto the minus copy.
    Integer coefficients; reduce mod 2 when needed.
    """
    items = chain.items() if isinstance(chain, dict) else ((c, 1) for c in chain)
    out: dict = {}

    def add(cell, v):
        out[cell] = out.get(cell, 0) + v

    for (sigma, tau), coeff in items:
        sign = (-1) ** ((len(sigma) - 1) * (len(tau) - 1))
        add((sigma, minus_lift(project(tau))), coeff)
        add((tau, minus_lift(project(sigma))), sign * coeff)
    return {c: v for c, v in out.items() if v}


def evaluate_nonstrict_on_product(chain, rank: dict) -> int:
    """Integer pairing of the nonstrict meshing cocycle with a product chain."""
    total = 0
    items = chain.items() if isinstance(chain, dict) else ((c, 1) for c in chain)
    for (sigma, b), coeff in items:
        total += coeff * nonstrict_mesh_indicator(sigma, b, rank)
    return total


# ---------------------------------------------------------------------------
# The covering chain and the pair-intersection (star) condition


def covering_pair_chain(doubled: DoubledComplex):
    """The top GF(2) chain of the doubled complex's configuration space
    supported on disjoint pairs whose projections jointly cover the chosen
    simplex.  Returns (space, chain) with the chain as a frozenset."""
    D = doubled.complex
    k = doubled.degree
    space = ConfigurationSpace(D)
    delta_set = set(doubled.delta)
    cells = []
    for a, b in combinations(D.faces_of_dim(k), 2):
        if set(a) & set(b):
            continue
        if delta_set <= set(project(a)) | set(project(b)):
            cells.append(space.canonical(a, b)[0])
    return space, frozenset(cells)


@dataclass(frozen=True)
class StarConditionReport:
    """Outcome of the pair-intersection scan: every two cycle simplices that
    jointly cover the chosen simplex must intersect inside it."""

    holds: bool
    violation: tuple | None


def check_star_condition(cycle, delta: tuple) -> StarConditionReport:
    delta_set = set(delta)
    simplices = sorted(cycle)
    for a, b in combinations_with_replacement(simplices, 2):
        if delta_set <= set(a) | set(b) and not set(a) & set(b) <= delta_set:
            return StarConditionReport(holds=False, violation=(a, b))
    return StarConditionReport(holds=True, violation=None)


def delta_product_chain(doubled: DoubledComplex) -> dict:
    """The product chain (all signed lifts of delta) x (minus copy of the cycle)."""
    out = {}
    for sigma in doubled.octa.lifts(doubled.delta):
        for b in sorted(doubled.cycle):
            out[(sigma, minus_lift(b))] = 1
    return out


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class CycleCertificate:
    """Machine-checkable witness that the top mod-2 obstruction of the
    octahedralized l-skeleton pairs nontrivially with a cycle."""

    degree: int
    cycle: frozenset
    delta: tuple
    doubled: DoubledComplex
    omega: frozenset
    star_condition: bool
    evaluation: int


def _cycle_candidates(basis, budget: int):
    for c in basis:
        yield c
    for r in range(2, budget + 1):
        for combo in combinations(range(len(basis)), r):
            acc: frozenset = frozenset()
            for i in combo:
                acc = acc.symmetric_difference(basis[i])
            if acc:
                yield acc


def certify_nonvanishing(L: SimplicialComplex, degree: int | None = None, search_budget: int = 2):
    """Search for a nonvanishing certificate in the given degree.

    Works on the degree-skeleton of L.  Tries cycle-basis elements first,
    then sums of up to `search_budget` of them, and every simplex of each
    candidate as the doubling simplex.  Absence of a certificate is a
    legal result (None), never a vanishing claim.
    """
    k = L.dim if degree is None else degree
    if k < 0 or k > L.dim:
        return None
    K = skeleton(L, k)
    basis = cycle_space(K, k)
    if not basis:
        return None
    octa = octahedralize(K)
    for cycle in _cycle_candidates(basis, search_budget):
        for delta in sorted(cycle):
            report = check_star_condition(cycle, delta)
            if not report.holds:
                continue
            doubled = double_over(octa, cycle, delta)
            space, omega = covering_pair_chain(doubled)
            boundary = chain_boundary(omega, space.boundary, mod=2)
            if boundary:
                raise RuntimeError(
                    "covering chain failed to be a cycle under the pair-intersection "
                    f"condition (cycle {sorted(cycle)}, delta {delta})"
                )
            evaluation = sum(mesh_indicator(c, octa.rank) for c in omega) % 2
            if evaluation != 1:
                raise RuntimeError(
                    f"covering chain evaluated to 0 (cycle {sorted(cycle)}, delta {delta})"
                )
            return CycleCertificate(
                degree=k,
                cycle=cycle,
                delta=delta,
                doubled=doubled,
                omega=omega,
                star_condition=True,
                evaluation=evaluation,
            )
    return None


@dataclass(frozen=True)
class VanishingResult:
    """Outcome of the top-degree coboundary solve on the configuration space.

    status: 'primitive' (solved; the class vanishes mod 2), 'obstructed'
    (a witness cycle pairs nontrivially), or 'skipped' (size guard or a
    degenerate degree).
    """

    status: str
    primitive: dict | None
    witness_cycle: tuple | None
    reason: str = ""
    integral_primitive: dict | None = None
    integral_checked: bool = False


def top_mesh_cocycle(octa: Octahedralization, space: ConfigurationSpace, degree: int) -> dict:
    return {
        cell: 1
        for cell in space.cells_of_degree(2 * degree)
        if len(cell[0]) == degree + 1 and mesh_indicator(cell, octa.rank)
    }


def certify_vanishing(L: SimplicialComplex, integral: bool = False, max_cells: int = 10**6) -> VanishingResult:
    """Decide whether the top mod-2 obstruction cocycle is a coboundary.

    Solves delta(x) = nu on the configuration space of the octahedralized
    complex over GF(2).  On failure returns a witness cycle pairing to 1,
    which simultaneously certifies nonvanishing.  With `integral` set, the
    integer cocycle is additionally tested via a Smith normal form solve.
    """
    k = L.dim
    if k < 0:
        raise ValueError("empty complex")
    if k == 0:
        return VanishingResult(status="skipped", primitive=None, witness_cycle=None,
                               reason="degree 0 is handled by the sphere rules")
    octa = octahedralize(L)
    space = ConfigurationSpace(octa.complex)
    n_top = len(space.cells_of_degree(2 * k))
    n_lower = len(space.cells_of_degree(2 * k - 1))
    if n_top + n_lower > max_cells:
        return VanishingResult(status="skipped", primitive=None, witness_cycle=None,
                               reason=f"cell budget exceeded ({n_top + n_lower} > {max_cells})")
    phi = top_mesh_cocycle(octa, space, k)
    primitive, witness = solve_coboundary(phi, 2 * k, space, coefficients="gf2")
    if primitive is None:
        witness = tuple(witness)
        wb = chain_boundary(frozenset(witness), space.boundary, mod=2)
        if wb:
            raise RuntimeError("inconsistency witness is not a cycle")
        if sum(phi.get(c, 0) for c in witness) % 2 != 1:
            raise RuntimeError("inconsistency witness does not pair to 1")
        return VanishingResult(status="obstructed", primitive=None, witness_cycle=witness)
    # Re-check the primitive cell by cell.
    idx = set(primitive)
    for cell in space.cells_of_degree(2 * k):
        val = sum(coeff for sub, coeff in space.boundary(cell) if sub in idx) % 2
        if val != phi.get(cell, 0) % 2:
            raise RuntimeError("primitive fails verification")
    integral_prim = None
    checked = False
    if integral:
        nu = {
            cell: mesh_number(cell[0], cell[1], octa.rank)
            for cell in space.cells_of_degree(2 * k)
            if len(cell[0]) == k + 1
        }
        integral_prim, _ = solve_coboundary(nu, 2 * k, space, coefficients="int")
        checked = True
    return VanishingResult(status="primitive", primitive=primitive, witness_cycle=None,
                           integral_primitive=integral_prim, integral_checked=checked)


# ---------------------------------------------------------------------------
# Exact geometric cross-check on the moment curve


def _moment_point(t: int, dim: int) -> list:
    return [t**d for d in range(1, dim + 1)]


def _raw_moment_pairing(pa: tuple, pb: tuple) -> int:
    """Signed intersection of two simplices mapped to the moment curve.

    pa, pb: strictly increasing integer parameter tuples, k+1 each.  The
    barycentric coordinates of the intersection of the two affine hulls in
    R^(2k) solve a square integer system; Cramer determinant signs decide
    interior incidence without ever leaving integers.  Distinct parameters
    keep the map in general position, so a singular system means parallel
    disjoint hulls and contributes 0.
    """
    k = len(pa) - 1
    if k == 0:
        return 1  # both points land in R^0; the pairing counts the pair once
    n = 2 * k
    cols = [_moment_point(t, n) for t in pa] + [[-x for x in _moment_point(t, n)] for t in pb]
    mat = [[cols[c][r] for c in range(n + 2)] for r in range(n)]
    mat.append([1] * (k + 1) + [0] * (k + 1))
    mat.append([0] * (k + 1) + [1] * (k + 1))
    rhs = [0] * n + [1, 1]
    det = integer_det(mat)
    if det == 0:
        # Parallel affine hulls; confirm there is no common point.
        if solve_rational_consistent(mat, rhs):
            raise ArithmeticError("unexpected degenerate intersection on the moment curve")
        return 0
    for i in range(n + 2):
        sub = [row[:i] + [rhs[r]] + row[i + 1 :] for r, row in enumerate(mat)]
        di = integer_det(sub)
        if di == 0:
            raise ArithmeticError("barycentric coordinate vanished on the moment curve")
        if (di > 0) != (det > 0):
            return 0  # intersection point outside one of the simplices
    orient = [
        [p[r] - base[r] for r in range(n)]
        for base, pts in (
            ( _moment_point(pa[0], n), [_moment_point(t, n) for t in pa[1:]] ),
            ( _moment_point(pb[0], n), [_moment_point(t, n) for t in pb[1:]] ),
        )
        for p in pts
    ]
    o = integer_det([[orient[c][r] for c in range(n)] for r in range(n)])
    if o == 0:
        raise ArithmeticError("degenerate tangent frame on the moment curve")
    return 1 if o > 0 else -1


def solve_rational_consistent(mat, rhs) -> bool:
    """Whether mat x = rhs has any rational solution (rank test)."""
    from .intlinalg import integer_rank

    aug = [row + [r] for row, r in zip(mat, rhs)]
    return integer_rank(mat) == integer_rank(aug)


@lru_cache(maxsize=None)
def _reference_sign(k: int) -> int:
    """Orientation convention in degree k, fixed once on the canonical
    meshed pair 0,2,..,2k against 1,3,..,2k+1 (whose cocycle value is +1)."""
    raw = _raw_moment_pairing(tuple(range(0, 2 * k + 2, 2)), tuple(range(1, 2 * k + 2, 2)))
    if raw not in (1, -1):
        raise ArithmeticError("reference meshed pair must intersect once")
    return raw


def moment_intersection(sigma: tuple, tau: tuple, rank: dict) -> int:
    """Exact signed moment-curve intersection number of an ordered pair,
    normalized to the cocycle's orientation convention."""
    pa = tuple(rank[v] for v in sigma)
    pb = tuple(rank[v] for v in tau)
    k = len(pa) - 1
    return _reference_sign(k) * _raw_moment_pairing(pa, pb)


def moment_curve_oracle(K: SimplicialComplex, degree: int | None = None) -> dict:
    """Geometric values for every top configuration cell of K."""
    k = K.dim if degree is None else degree
    space = ConfigurationSpace(K)
    out = {}
    for cell in space.cells_of_degree(2 * k):
        if len(cell[0]) != k + 1:
            continue
        out[cell] = moment_intersection(cell[0], cell[1], K.rank)
    return out
