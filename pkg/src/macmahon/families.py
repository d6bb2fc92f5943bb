"""Parameter validation and membership tests for the two partition families.

Fix integers p >= 2, 1 <= a < p with gcd(a, p) = 1, and r >= 0, and write
M = p*r + a (the block size) and L = p*M (the modulus).  The two families
of partitions of n are:

  A-side: partitions in which a multiplicity m congruent to j*a (mod p)
          must be at least j*M, where j is the unique index in {0,...,p-1}
          with m == j*a (mod p), i.e. j = (a^-1 * m) mod p.

  B-side: partitions whose parts are each divisible by p or congruent to
          -s*M (mod L) for some s in {1,...,p-1} (equivalently: a nonzero
          multiple of M modulo L).

Candidate part sizes split into three classes: multiples of M ("K block"),
other multiples of p ("G block"), and everything else ("forbidden", never
a part of a B-side partition).  Multiples of both p and M are multiples of
L because gcd(p, M) = 1, so the K branch absorbs them and the three classes
partition the positive integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .partitions import Partition


class ParameterError(ValueError):
    """Raised when (p, a, r) violates a parameter-domain condition."""


@dataclass(frozen=True)
class Params:
    """Validated parameter triple plus derived constants.

    a_inv is the inverse of a modulo p, M = p*r + a, L = p*M, and
    allowed_residues = {(p-s)*M mod L : s = 1..p-1}, the residues mod L
    that a part not divisible by p is allowed to have.
    """

    p: int
    a: int
    r: int
    a_inv: int
    M: int
    L: int
    allowed_residues: frozenset[int]

    def __str__(self) -> str:
        return f"(p={self.p}, a={self.a}, r={self.r})"


class PartClass(enum.Enum):
    KBLOCK = "K"      # N == 0 (mod M)
    GBLOCK = "G"      # N == 0 (mod p) and N/p != 0 (mod M)
    FORBIDDEN = "F"   # neither; never appears in a B-side partition


def validate_params(p: int, a: int, r: int) -> Params:
    """Check p >= 2, 1 <= a < p, gcd(a, p) = 1, r >= 0 and derive constants.

    Raises ParameterError naming the violated condition.
    """
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")
    if not 1 <= a < p:
        raise ParameterError(f"a must satisfy 1 <= a < p, got a={a}, p={p}")
    if gcd(a, p) != 1:
        raise ParameterError(f"gcd(a, p) must be 1, got gcd({a}, {p}) = {gcd(a, p)}")
    if r < 0:
        raise ParameterError(f"r must be nonnegative, got {r}")
    a_inv = pow(a, -1, p)
    M = p * r + a
    L = p * M
    residues = frozenset((p - s) * M % L for s in range(1, p))
    return Params(p=p, a=a, r=r, a_inv=a_inv, M=M, L=L, allowed_residues=residues)


def is_allowed_multiplicity(ps: Params, m: int) -> bool:
    """True iff m >= j*M for the unique j in {0..p-1} with m == j*a (mod p).

    m = 0 is always allowed (j = 0 makes the bound vacuous).
    """
    if m < 0:
        raise ValueError(f"multiplicity must be nonnegative, got {m}")
    j = (ps.a_inv * m) % ps.p
    return m >= j * ps.M


def in_A(ps: Params, pt: Partition) -> bool:
    """A-side membership: every multiplicity passes is_allowed_multiplicity."""
    return all(is_allowed_multiplicity(ps, mult) for _, mult in pt.pairs)


def classify_part(ps: Params, N: int) -> PartClass:
    """Classify a candidate part size as KBLOCK, GBLOCK, or FORBIDDEN."""
    if N < 1:
        raise ValueError(f"part size must be positive, got {N}")
    if N % ps.M == 0:
        return PartClass.KBLOCK
    if N % ps.p == 0:
        return PartClass.GBLOCK
    return PartClass.FORBIDDEN


def in_B(ps: Params, pt: Partition) -> bool:
    """B-side membership: no part classifies as FORBIDDEN."""
    return all(
        classify_part(ps, part) is not PartClass.FORBIDDEN for part, _ in pt.pairs
    )
