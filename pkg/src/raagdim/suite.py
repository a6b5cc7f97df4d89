"""Property-test driver for the four chain-level identities.

On seeded random flag complexes (small, with a top cycle) this checks:

  * pullback: the top cocycle equals the nonstrict cocycle pulled through
    the push-to-product map, cell by cell, with exact integers;
  * pushforward: the push of the covering chain equals the product of the
    doubled simplex's lifts with the cycle, mod 2, for every tried pair
    (whether or not the pair-intersection condition holds);
  * cycle: the covering chain has zero boundary whenever the
    pair-intersection condition holds;
  * evaluation: the nonstrict cocycle evaluates to 1 on the product chain
    for every top cycle;

plus agreement of the moment-curve intersection oracle with the cocycle on
(a sample of) top cells.  Failures are reported with a shrunk complex.

Fault injection (for testing the driver itself) deliberately breaks one
ingredient: 'transfer-drop' pushes only the first product term, which the
pushforward identity catches; 'mesh-flip' inverts the meshing test, which
the pullback identity catches on the first cell.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, make_complex
from .config_space import ConfigurationSpace, chain_boundary
from .homology import cycle_space
from .obstruction import (
    check_star_condition,
    covering_pair_chain,
    delta_product_chain,
    evaluate_nonstrict_on_product,
    mesh_number,
    moment_intersection,
    push_to_product,
)
from .octa import double_over, minus_lift, octahedralize, project
from .zoo import cycle as cycle_complex
from .zoo import random_flag, suspension


@dataclass
class SuiteFailure:
    check: str
    complex_maximal: tuple
    detail: str


@dataclass
class SuiteResult:
    complexes: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _sample_complex(rng: random.Random) -> SimplicialComplex | None:
    """One random flag complex of dimension <= 2 carrying a top cycle."""
    style = rng.random()
    if style < 0.25:
        K = suspension(cycle_complex(rng.randint(4, 6)))
        return K if len(K.vertices) <= 8 else None
    n = rng.randint(4, 8)
    p = rng.uniform(0.3, 0.65)
    K = random_flag(n, p, seed=rng.randrange(1 << 30))
    if K.dim < 1 or K.dim > 2:
        return None
    if not cycle_space(K, K.dim):
        return None
    return K


def _shrink(K: SimplicialComplex, still_fails) -> SimplicialComplex:
    """Greedy minimization: drop maximal faces while the failure persists."""
    current = K
    changed = True
    while changed:
        changed = False
        for m in current.maximal_faces():
            rest = [f for f in current.maximal_faces() if f != m]
            if not rest:
                continue
            cand = make_complex(rest, vertex_order=current.vertices)
            try:
                if still_fails(cand):
                    current = cand
                    changed = True
                    break
            except Exception:
                continue
    return current


def _push(chain, octa, inject):
    if inject == "transfer-drop":
        out: dict = {}
        items = chain.items() if isinstance(chain, dict) else ((c, 1) for c in chain)
        for (sigma, tau), coeff in items:
            cell = (sigma, minus_lift(project(tau)))
            out[cell] = out.get(cell, 0) + coeff
        return {c: v for c, v in out.items() if v}
    return push_to_product(chain, octa)


def _mesh_value(cell, rank, inject):
    if inject == "mesh-flip":
        return 1 - abs(mesh_number(cell[0], cell[1], rank))
    return mesh_number(cell[0], cell[1], rank)


def check_complex(K: SimplicialComplex, result: SuiteResult, inject: str | None = None,
                  oracle_cell_cap: int = 400, pair_cap: int = 6) -> None:
    """Run the four identities plus the oracle agreement on one complex."""
    k = K.dim
    octa = octahedralize(K)
    rank = octa.rank
    space = ConfigurationSpace(octa.complex)
    top_cells = [c for c in space.cells_of_degree(2 * k) if len(c[0]) == k + 1]

    for cell in top_cells:
        result.checks += 1
        lhs = _mesh_value(cell, rank, inject)
        pushed = _push({cell: 1}, octa, inject)
        rhs = evaluate_nonstrict_on_product(pushed, rank)
        if lhs != rhs:
            result.failures.append(SuiteFailure(
                "pullback", K.maximal_faces(),
                f"cell {cell}: cocycle {lhs} != pushed evaluation {rhs}"))
            return

    basis = cycle_space(K, k)
    pairs = []
    for cyc in basis:
        for delta in sorted(cyc):
            pairs.append((cyc, delta))
    pairs = pairs[:pair_cap]
    for cyc, delta in pairs:
        doubled = double_over(octa, cyc, delta)
        dspace, omega = covering_pair_chain(doubled)
        product = delta_product_chain(doubled)

        result.checks += 1
        pushed = {c: v % 2 for c, v in _push(dict.fromkeys(omega, 1), octa, inject).items() if v % 2}
        if pushed != product:
            result.failures.append(SuiteFailure(
                "pushforward", K.maximal_faces(),
                f"cycle {sorted(cyc)}, delta {delta}: push of covering chain differs from product chain"))
            return

        star = check_star_condition(cyc, delta)
        if star.holds:
            result.checks += 1
            if chain_boundary(omega, dspace.boundary, mod=2):
                result.failures.append(SuiteFailure(
                    "cycle", K.maximal_faces(),
                    f"cycle {sorted(cyc)}, delta {delta}: covering chain has boundary"))
                return

        result.checks += 1
        if evaluate_nonstrict_on_product(product, rank) % 2 != 1:
            result.failures.append(SuiteFailure(
                "evaluation", K.maximal_faces(),
                f"cycle {sorted(cyc)}, delta {delta}: product chain evaluates to 0"))
            return

    for cell in top_cells[:oracle_cell_cap]:
        result.checks += 1
        if moment_intersection(cell[0], cell[1], rank) != mesh_number(cell[0], cell[1], rank):
            result.failures.append(SuiteFailure(
                "moment-oracle", K.maximal_faces(),
                f"cell {cell}: geometric intersection disagrees with the cocycle"))
            return


def run_suite(seed: int, count: int, inject: str | None = None,
              oracle_cell_cap: int = 400) -> SuiteResult:
    rng = random.Random(seed)
    result = SuiteResult()
    attempts = 0
    while result.complexes < count and attempts < 60 * max(count, 1):
        attempts += 1
        K = _sample_complex(rng)
        if K is None:
            continue
        result.complexes += 1
        check_complex(K, result, inject=inject, oracle_cell_cap=oracle_cell_cap)
        if result.failures:
            fail = result.failures[-1]
            check_name = fail.check

            def still_fails(cand: SimplicialComplex) -> bool:
                probe = SuiteResult()
                check_complex(cand, probe, inject=inject, oracle_cell_cap=oracle_cell_cap)
                return any(f.check == check_name for f in probe.failures)

            shrunk = _shrink(K, still_fails)
            fail.complex_maximal = shrunk.maximal_faces()
            break
    return result
