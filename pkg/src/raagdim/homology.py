"""Exact simplicial homology over GF(2) and over the rationals.

Reduced homology is the default (the augmentation lives in degree -1), so
reduced Betti numbers of a point are all zero and b0 counts components
minus one.  Rational ranks come from fraction-free integer elimination.

The coboundary solver works on any finite cell complex presented through
the `cells + signed boundary incidence` interface (an object with
``cells_of_degree(d)`` and ``boundary(cell) -> [(cell, coeff), ...]``),
which is how the quotient pair complexes plug in.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2, intlinalg
from .complexes import SimplicialComplex


def simplex_boundary(face: tuple):
    """Signed facets of an oriented simplex; vertices assumed rank-sorted."""
    if len(face) == 1:
        return []
    return [(face[:i] + face[i + 1 :], (-1) ** i) for i in range(len(face))]


def boundary_gf2_rows(K: SimplicialComplex, k: int, reduced: bool = False):
    """Rows of the degree-k boundary matrix over GF(2).

    Rows are indexed by (k-1)-faces (plus one augmentation row when
    `reduced` and k == 0), columns by k-faces; returned as int bitmasks.
    """
    cols = K.faces_of_dim(k)
    if k == 0:
        if reduced:
            return [gf2.mask_from_indices(range(len(cols)))], cols
        return [], cols
    rows_idx = {f: i for i, f in enumerate(K.faces_of_dim(k - 1))}
    rows = [0] * len(rows_idx)
    for j, f in enumerate(cols):
        for sub, _sign in simplex_boundary(f):
            rows[rows_idx[sub]] ^= 1 << j
    return rows, cols


def boundary_int_matrix(K: SimplicialComplex, k: int, reduced: bool = False):
    """Integer boundary matrix in degree k (rows: (k-1)-faces, cols: k-faces)."""
    cols = K.faces_of_dim(k)
    if k == 0:
        if reduced:
            return [[1] * len(cols)], cols
        return [], cols
    rows_f = K.faces_of_dim(k - 1)
    rows_idx = {f: i for i, f in enumerate(rows_f)}
    mat = [[0] * len(cols) for _ in rows_f]
    for j, f in enumerate(cols):
        for sub, sign in simplex_boundary(f):
            mat[rows_idx[sub]][j] = sign
    return mat, cols


def mod2_betti(K: SimplicialComplex, reduced: bool = True) -> tuple:
    """dim H_k(K; Z/2) for k = 0..dim K."""
    if K.dim < 0:
        return ()
    ranks = []
    for k in range(K.dim + 2):
        rows, cols = boundary_gf2_rows(K, k, reduced=reduced)
        ranks.append(gf2.rank(rows) if cols else 0)
    out = []
    for k in range(K.dim + 1):
        n_k = len(K.faces_of_dim(k))
        out.append(n_k - ranks[k] - ranks[k + 1])
    return tuple(out)


def rational_betti(K: SimplicialComplex, reduced: bool = True) -> tuple:
    """dim_Q H_k(K; Q) for k = 0..dim K, by fraction-free elimination."""
    if K.dim < 0:
        return ()
    ranks = []
    for k in range(K.dim + 2):
        mat, cols = boundary_int_matrix(K, k, reduced=reduced)
        ranks.append(intlinalg.integer_rank(mat) if (mat and cols) else 0)
    out = []
    for k in range(K.dim + 1):
        n_k = len(K.faces_of_dim(k))
        out.append(n_k - ranks[k] - ranks[k + 1])
    return tuple(out)


def boundary_matrix_json(K: SimplicialComplex, k: int) -> dict:
    """Debug export of the degree-k integer boundary matrix."""
    mat, cols = boundary_int_matrix(K, k)
    return {
        "degree": k,
        "rows": [list(f) for f in K.faces_of_dim(k - 1)] if k > 0 else [],
        "cols": [list(f) for f in cols],
        "entries": mat,
    }


def cycle_space(K: SimplicialComplex, k: int, coefficients: str = "gf2") -> tuple:
    """Basis of the GF(2) cycle space Z_k, each cycle a frozenset of k-faces.

    Degree 0 uses the reduced convention (a 0-cycle has evenly many
    vertices), matching the reduced homology used everywhere else.  The
    support subcomplex of any basis cycle comes from support_complex.
    """
    if coefficients != "gf2":
        raise ValueError("only GF(2) cycle bases are provided")
    if k < 0 or k > K.dim:
        return ()
    rows, cols = boundary_gf2_rows(K, k, reduced=(k == 0))
    basis = gf2.kernel_basis(rows, len(cols))
    out = []
    for mask in basis:
        out.append(frozenset(cols[i] for i in gf2.indices_from_mask(mask)))
    return tuple(sorted(out, key=lambda c: (len(c), sorted(c))))


def support_complex(K: SimplicialComplex, cycle) -> SimplicialComplex:
    """Face closure of a chain's support inside K, keeping K's vertex order."""
    from .complexes import make_complex

    return make_complex(sorted(cycle), vertex_order=K.vertices)


def is_cycle(K: SimplicialComplex, chain, degree: int) -> bool:
    """GF(2) cycle test, reduced in degree 0."""
    if degree == 0:
        return len(chain) % 2 == 0
    acc: set = set()
    for f in chain:
        for sub, _sign in simplex_boundary(f):
            acc.symmetric_difference_update({sub})
    return not acc


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers over GF(2) and Q, plus a top cycle basis."""

    mod2_betti: tuple
    rational_betti: tuple
    top_cycle_basis: tuple
    top_degree: int


def homology_profile(K: SimplicialComplex) -> HomologyProfile:
    return HomologyProfile(
        mod2_betti=mod2_betti(K),
        rational_betti=rational_betti(K),
        top_cycle_basis=cycle_space(K, K.dim) if K.dim >= 0 else (),
        top_degree=K.dim,
    )


def solve_coboundary(phi, degree: int, space, coefficients: str = "gf2"):
    """Find x with (delta x) = phi on the m-cells of a cell complex.

    phi: mapping from m-cells to coefficients (missing cells read as 0).
    space: cell complex exposing cells_of_degree(d) and boundary(cell).

    Returns (primitive, witness): `primitive` is a dict on (m-1)-cells when
    solvable, otherwise None and `witness` is a list of m-cells forming a
    cycle on which phi evaluates to 1 (GF(2)) resp. nontrivially.
    """
    m_cells = space.cells_of_degree(degree)
    lower = space.cells_of_degree(degree - 1) if degree > 0 else ()
    idx = {c: i for i, c in enumerate(lower)}
    if coefficients == "gf2":
        eqs = []
        for cell in m_cells:
            mask = 0
            for sub, coeff in space.boundary(cell):
                if coeff % 2:
                    mask ^= 1 << idx[sub]
            eqs.append((mask, phi.get(cell, 0) % 2))
        x, witness = gf2.solve(eqs, len(lower), want_witness=True)
        if x is None:
            return None, [m_cells[i] for i in witness]
        prim = {lower[i]: 1 for i in gf2.indices_from_mask(x)}
        return prim, None
    if coefficients == "int":
        mat = []
        rhs = []
        for cell in m_cells:
            row = [0] * len(lower)
            for sub, coeff in space.boundary(cell):
                row[idx[sub]] += coeff
            mat.append(row)
            rhs.append(phi.get(cell, 0))
        if not mat:
            return ({}, None) if not any(rhs) else (None, [])
        sol = intlinalg.solve_integer(mat, rhs)
        if sol is None:
            return None, []
        return {lower[i]: v for i, v in enumerate(sol) if v}, None
    raise ValueError(f"unknown coefficient ring {coefficients!r}")
