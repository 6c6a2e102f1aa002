"""Admissible Floer-homology profiles and periodicity feasibility.

The spectral sequence is handled as a degree certificate, never as pages
with actual differentials: each collapse argument in scope is of the form
"every differential leaving a ring generator lands in an empty degree".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .charnum import CutContext
from .coring import CohomologyRing, make_sphere
from .fold import FoldedProfile, fold_dims, is_two_periodic

EQUALS_COHOMOLOGY = "EqualsCohomology"
COHOMOLOGY_MINUS_ENDS = "CohomologyMinusEnds"
TRIVIAL = "Trivial"

_KINDS = (EQUALS_COHOMOLOGY, COHOMOLOGY_MINUS_ENDS, TRIVIAL)


@dataclass(frozen=True)
class HFProfile:
    """One admissible shape of the Floer homology of a candidate."""

    kind: str
    source: CohomologyRing

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")

    def graded_dims(self) -> tuple[int, ...]:
        """Per-degree dimensions of the profile, indexed 0..dim."""
        if self.kind == EQUALS_COHOMOLOGY:
            return self.source.betti
        if self.kind == COHOMOLOGY_MINUS_ENDS:
            dims = list(self.source.betti)
            dims[0] -= 1
            dims[self.source.dim] -= 1
            return tuple(dims)
        return (0,) * (self.source.dim + 1)

    def fold(self, N: int) -> FoldedProfile:
        return fold_dims(self.graded_dims(), N)

    @property
    def total_dim(self) -> int:
        return sum(self.graded_dims())


@dataclass(frozen=True)
class PageCheck:
    """One differential target inspected by the collapse certificate."""

    page: int
    generator_degree: int
    target_degree: int
    target_betti: int


@dataclass(frozen=True)
class CollapseCertificate:
    """Degree-based proof that every differential vanishes on generators.

    nu is the last page that could carry a differential; per_page lists,
    for each page r = 1..nu and each generator degree g, the target degree
    g + 1 - r * N_L together with the Betti number found there.  The
    certificate is valid exactly when every target is empty, which forces
    the sequence to collapse immediately.
    """

    N_L: int
    nu: int
    per_page: tuple[PageCheck, ...]

    @property
    def valid(self) -> bool:
        return all(c.target_betti == 0 for c in self.per_page)


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of testing profiles against 2-periodicity.

    feasible is True when some profile folds 2-periodically, False when
    none does, and None when no profile was supplied at all (nothing is
    forced, which is distinct from a contradiction).
    """

    feasible: bool | None
    witnesses: tuple[HFProfile, ...]

    @property
    def indeterminate(self) -> bool:
        return self.feasible is None


def ss_collapse_certificate(ring: CohomologyRing, N_L: int) -> CollapseCertificate | None:
    """Certify collapse by checking all generator-degree targets are empty.

    Page r differentials drop degree by r * N_L - 1, so a class of degree
    g is sent to degree g + 1 - r * N_L; out-of-range degrees carry zero.
    Returns None when some target is nonempty (collapse is then not forced
    by degree reasons alone).
    """
    if N_L < 2:
        raise ValueError("collapse bookkeeping needs N_L >= 2")
    nu = (ring.dim + 1) // N_L
    checks = []
    for r in range(1, nu + 1):
        for g in sorted(set(ring.generator_degrees)):
            target = g + 1 - r * N_L
            b = ring.betti[target] if 0 <= target <= ring.dim else 0
            checks.append(PageCheck(r, g, target, b))
    cert = CollapseCertificate(N_L=N_L, nu=nu, per_page=tuple(checks))
    return cert if cert.valid else None


def oh_profiles(ring: CohomologyRing, N_L: int) -> frozenset[HFProfile]:
    """Profiles allowed by the Maslov-range dichotomy.

    Above dim + 1 the Floer homology must equal the cohomology; exactly at
    dim + 1 it may also lose the two end degrees; below that the rule is
    silent and the empty set is returned.
    """
    if N_L < 2:
        raise ValueError("profile dichotomy needs N_L >= 2")
    n = ring.dim
    if N_L >= n + 2:
        return frozenset({HFProfile(EQUALS_COHOMOLOGY, ring)})
    if N_L == n + 1:
        return frozenset(
            {
                HFProfile(EQUALS_COHOMOLOGY, ring),
                HFProfile(COHOMOLOGY_MINUS_ENDS, ring),
            }
        )
    return frozenset()


def sphere_local_rule(d: int, N_W: int) -> HFProfile | None:
    """Local model rule for spheres: HF equals cohomology unless 2 N_W | d+1."""
    if d < 2:
        raise ValueError("sphere rule needs d >= 2")
    if N_W < 1:
        raise ValueError("sphere rule needs N_W >= 1")
    if (d + 1) % (2 * N_W) == 0:
        return None
    return HFProfile(EQUALS_COHOMOLOGY, make_sphere(d))


@dataclass(frozen=True)
class SeidelCandidate:
    """Hypothesis bundle a candidate brings to the periodicity theorem."""

    exact_or_simply_connected: bool
    N_L: int


def seidel_applicable(ctx: CutContext, N: int, candidate: SeidelCandidate) -> bool:
    """Whether the 2-periodicity theorem applies with grading N.

    Needs a monotone cut, N dividing twice the ambient Chern number, a
    candidate with N_L >= 2, and a vanishing mod-N Maslov class.  The last
    is granted for exact or simply connected candidates and otherwise
    holds when N divides N_L.
    """
    if N < 1:
        raise ValueError("grading N must be >= 1")
    if not ctx.monotone:
        return False
    if (2 * ctx.chern_number) % N != 0:
        return False
    if candidate.N_L < 2:
        return False
    if candidate.exact_or_simply_connected:
        return True
    return candidate.N_L % N == 0


def hf_feasible(profiles: Iterable[HFProfile], N: int) -> FeasibilityReport:
    """Which of the given profiles admit a 2-periodic Z/N fold."""
    if N < 1:
        raise ValueError("grading N must be >= 1")
    profs = tuple(profiles)
    if not profs:
        return FeasibilityReport(feasible=None, witnesses=())
    witnesses = tuple(p for p in profs if is_two_periodic(p.fold(N)))
    return FeasibilityReport(feasible=bool(witnesses), witnesses=witnesses)
