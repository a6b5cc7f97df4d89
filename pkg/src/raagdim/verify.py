"""Independent re-checking of stored nonvanishing certificates.

Rebuilds the doubled complex and the covering chain from the certificate's
(M, Delta) against the provided complex and re-runs every identity, naming
the first failing check.  The stored support must match the rebuilt chain
exactly; a certificate is a proof object, not a hint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, skeleton
from .config_space import chain_boundary
from .homology import is_cycle
from .obstruction import (
    check_star_condition,
    covering_pair_chain,
    delta_product_chain,
    evaluate_nonstrict_on_product,
    mesh_indicator,
    push_to_product,
)
from .octa import double_over, octahedralize

CHECKS = (
    "delta-membership",
    "cycle-condition",
    "star-condition",
    "omega-cycle",
    "omega-evaluation",
    "pushforward-identity",
    "omega-support-match",
)


@dataclass(frozen=True)
class VerificationOutcome:
    ok: bool
    failed_check: str | None
    detail: str
    checks_run: tuple


def verify_certificate(L: SimplicialComplex, cert: dict) -> VerificationOutcome:
    """cert: decoded certificate dict (degree, M, Delta, omega_support,
    star_condition, evaluation)."""
    run = []
    degree = cert["degree"]
    K = skeleton(L, degree)

    run.append("delta-membership")
    try:
        m_faces = frozenset(K.sort_face(f) for f in cert["M"])
        delta = K.sort_face(cert["Delta"])
    except ValueError as exc:
        return VerificationOutcome(False, "delta-membership", f"unknown simplex: {exc}", tuple(run))
    if delta not in m_faces:
        return VerificationOutcome(False, "delta-membership",
                                   "Delta is not a simplex of M", tuple(run))
    if not m_faces <= K.faces:
        return VerificationOutcome(False, "delta-membership",
                                   "M contains simplices outside the complex", tuple(run))
    if any(len(f) != degree + 1 for f in m_faces):
        return VerificationOutcome(False, "delta-membership",
                                   "M is not pure of the stated degree", tuple(run))

    run.append("cycle-condition")
    if not is_cycle(K, m_faces, degree):
        return VerificationOutcome(False, "cycle-condition", "M is not a GF(2) cycle", tuple(run))

    run.append("star-condition")
    star = check_star_condition(m_faces, delta)
    if not star.holds:
        return VerificationOutcome(False, "star-condition",
                                   f"violating pair {star.violation}", tuple(run))

    octa = octahedralize(K)
    doubled = double_over(octa, m_faces, delta)
    space, rebuilt = covering_pair_chain(doubled)
    stored = frozenset(space.canonical(a, b)[0] for a, b in cert["omega_support"])

    run.append("omega-cycle")
    boundary = chain_boundary(stored, space.boundary, mod=2)
    if boundary:
        cell = next(iter(sorted(boundary, key=space.cell_key)))
        return VerificationOutcome(False, "omega-cycle",
                                   f"stored chain has boundary, e.g. at {cell}", tuple(run))

    run.append("omega-evaluation")
    evaluation = sum(mesh_indicator(c, octa.rank) for c in stored) % 2
    if evaluation != 1 or evaluation != cert["evaluation"]:
        return VerificationOutcome(False, "omega-evaluation",
                                   f"stored chain evaluates to {evaluation}", tuple(run))

    run.append("pushforward-identity")
    pushed = {c: v % 2 for c, v in push_to_product(dict.fromkeys(stored, 1), octa).items() if v % 2}
    if pushed != delta_product_chain(doubled):
        return VerificationOutcome(False, "pushforward-identity",
                                   "push of the stored chain is not the product chain", tuple(run))
    if evaluate_nonstrict_on_product(pushed, octa.rank) % 2 != 1:
        return VerificationOutcome(False, "pushforward-identity",
                                   "product evaluation is not 1", tuple(run))

    run.append("omega-support-match")
    if stored != rebuilt:
        extra = sorted(stored - rebuilt)[:3]
        missing = sorted(rebuilt - stored)[:3]
        return VerificationOutcome(False, "omega-support-match",
                                   f"stored support differs (extra {extra}, missing {missing})",
                                   tuple(run))

    return VerificationOutcome(True, None, "certificate verified", tuple(run))
