"""Folding graded cohomology into a Z/N grading and the S_j sum identities.

All S_j arithmetic is exact big-integer arithmetic.  The trigonometric
closed form of the roots-of-unity filter is a floating cross-check only;
the integer side is always the authority.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .coring import CohomologyRing, make_complex_projective


class InvalidModulusError(ValueError):
    """Raised for moduli outside an operation's domain."""


@dataclass(frozen=True)
class FoldedProfile:
    """Dimensions S_0..S_{N-1} of cohomology folded into a Z/N grading."""

    modulus: int
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidModulusError("invalid-modulus: N must be >= 1")
        if len(self.dims) != self.modulus:
            raise InvalidModulusError("profile must have exactly N entries")
        if any(s < 0 for s in self.dims):
            raise InvalidModulusError("folded dimensions must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class TorusIdentityReport:
    """Outcome of the equidistribution identity N*S_j = 2^d for the torus."""

    holds: bool
    NS0: int
    pow: int


def fold_dims(dims: Sequence[int], N: int) -> FoldedProfile:
    """Fold a raw graded dimension vector: S_j = sum of dims[k] over k = j mod N."""
    if N < 1:
        raise InvalidModulusError("invalid-modulus: N must be >= 1")
    out = [0] * N
    for k, b in enumerate(dims):
        out[k % N] += b
    return FoldedProfile(N, tuple(out))


def fold_mod(ring: CohomologyRing, N: int) -> FoldedProfile:
    """Fold the Betti vector of a ring into the Z/N grading."""
    return fold_dims(ring.betti, N)


def is_two_periodic(p: FoldedProfile) -> bool:
    """True iff shifting the graded dimensions by 2 leaves them unchanged."""
    N = p.modulus
    return all(p.dims[j] == p.dims[(j + 2) % N] for j in range(N))


def binomial_fold_sum(d: int, N: int, j: int) -> int:
    """Exact S_j(d, N) = sum over k of C(d, j + k*N)."""
    if N < 1:
        raise InvalidModulusError("invalid-modulus: N must be >= 1")
    if not 0 <= j < N:
        raise ValueError(f"index j must satisfy 0 <= j < N, got {j}")
    return sum(math.comb(d, i) for i in range(j, d + 1, N))


def torus_identity_check(d: int, N: int) -> TorusIdentityReport:
    """Test whether all S_j(d, N) are equal with common value 2^d / N.

    Defined for even N only: the derivation splits the fold into even and
    odd index sums, each totalling 2^(d-1).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if N < 2 or N % 2 != 0:
        raise InvalidModulusError("invalid-modulus: identity requires even N >= 2")
    sums = [binomial_fold_sum(d, N, j) for j in range(N)]
    pow2 = 1 << d
    ns0 = N * sums[0]
    holds = all(s == sums[0] for s in sums) and ns0 == pow2
    return TorusIdentityReport(holds=holds, NS0=ns0, pow=pow2)


def roots_of_unity_residual(d: int, N: int) -> float:
    """Relative gap between N*S_0 - 2^d and its trigonometric closed form.

    The integer left side is the oracle.  The float side evaluates
    sum over k of (2 cos(k pi / N))^d * cos(k d pi / N) for k = 1..N-1,
    which is the real expansion of the roots-of-unity filter.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    if N < 2:
        raise InvalidModulusError("invalid-modulus: N must be >= 2")
    left = N * binomial_fold_sum(d, N, 0) - (1 << d)
    trig = 0.0
    for k in range(1, N):
        trig += (2.0 * math.cos(math.pi * k / N)) ** d * math.cos(math.pi * k * d / N)
    return abs(left - trig) / max(1.0, float(1 << d))


def cp_profile_match(p: FoldedProfile, d: int) -> bool:
    """True iff p is the fold of the complex projective space of dimension d.

    The reference profile is CP^(d/2) folded modulo d+2, the shape forced
    on simply connected candidates at the boundary grading.
    """
    if d % 2 != 0 or d < 2:
        raise ValueError("d must be a positive even integer")
    if p.modulus != d + 2:
        raise InvalidModulusError("profile modulus must equal d + 2")
    reference = fold_mod(make_complex_projective(d // 2), d + 2)
    return p.dims == reference.dims
