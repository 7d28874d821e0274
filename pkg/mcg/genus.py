# =============================================================================
# mcg/genus.py
# =============================================================================
# Purpose:
# Genus bookkeeping for embedding a wreath product into a mapping class
# group. Start from S (genus g_S, b >= 1 boundary circles) and cap all but
# one boundary circle with a one-holed torus to get S̄. A finite group acting
# on S_h with a free orbit of size m: delete a disc at each orbit point and
# glue in a copy of S̄. Euler characteristic is additive under gluing along
# circles:
#
#     χ(S̄)   = (2 - 2 g_S - b) - (b - 1)
#     χ(S_g) = (2 - 2h - m) + m · χ(S̄)
#     g      = (2 - χ(S_g)) / 2
# =============================================================================

import logging

from models.errors import ParityError, PreconditionError
from models.surface import GenusStage, SurfaceSpec

logger = logging.getLogger(__name__)


def _check(g_s: int, b: int, h: int, m: int) -> None:
    if b < 1:
        raise PreconditionError("S needs at least one boundary component")
    if m < 1:
        raise PreconditionError("the free orbit must be nonempty")
    if g_s < 0 or h < 0:
        raise PreconditionError("genera are non-negative")


def _genus_from_chi(chi: int) -> int:
    if chi % 2:
        raise ParityError(f"closed surface with odd Euler characteristic {chi}")
    return (2 - chi) // 2


def wreath_genus(g_s: int, b: int, h: int, m: int) -> int:
    _check(g_s, b, h, m)
    capped = SurfaceSpec(genus=g_s, boundary=b).euler_characteristic - (b - 1)
    chi = SurfaceSpec(genus=h, boundary=m).euler_characteristic + m * capped
    return _genus_from_chi(chi)


def wreath_genus_stepwise(g_s: int, b: int, h: int, m: int) -> list[GenusStage]:
    """The same genus, one cut-and-paste step at a time."""
    _check(g_s, b, h, m)
    stages = []
    chi = SurfaceSpec(genus=g_s, boundary=b).euler_characteristic
    stages.append(GenusStage(stage="S", euler_characteristic=chi, boundary=b))

    # A one-holed torus has χ = -1; gluing along a circle adds χ
    chi_bar = chi - (b - 1)
    stages.append(GenusStage(stage="attach one-holed tori", euler_characteristic=chi_bar, boundary=1))

    chi = SurfaceSpec(genus=h).euler_characteristic
    stages.append(GenusStage(stage="closed base S_h", euler_characteristic=chi, boundary=0))

    chi -= m
    stages.append(GenusStage(stage="delete discs on a free orbit", euler_characteristic=chi, boundary=m))

    chi += m * chi_bar
    stages.append(GenusStage(stage="glue copies of S-bar", euler_characteristic=chi, boundary=0))

    if _genus_from_chi(chi) != wreath_genus(g_s, b, h, m):
        raise ParityError("stepwise and closed-form genus disagree")
    return stages


def genus_sequence(g_s: int, b: int, m: int, hs: list[int] | range) -> list[int]:
    """Genera reached as the base genus h varies; strictly increasing in h."""
    genera = [wreath_genus(g_s, b, h, m) for h in hs]
    logger.debug("genus sequence for g_S=%d, b=%d, m=%d: %s", g_s, b, m, genera)
    return genera
