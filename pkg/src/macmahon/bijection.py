"""The weight-preserving bijection between the A-side and B-side families.

Every allowed multiplicity h splits uniquely as h = k + g with k = M*v for
v = (a^-1 * h) mod p and g = h - k, where g is then a nonnegative multiple
of p (that is exactly what A-side membership guarantees).  The forward map
reads each part i of an A-side partition, with multiplicity h_i = M*v_i + g_i,
and emits

  * v_i copies of the part M*i          (the "K" contribution), and
  * g_i copies of part i     if M | i   (the "G" contribution lands on a
    g_i/p copies of part p*i otherwise   multiple of M or of p respectively).

Both kinds of image part are divisible by M or by p, so the image is a
B-side partition, and each part's contribution to the weight is unchanged:
(M*i)*v_i = i*k_i and either i*g_i or (p*i)*(g_i/p) = i*g_i.

The map is reversed by reading the image multiplicities D = d(N):

  * N a multiple of M: d(N) = v_{N/M} + g_N with g_N == 0 (mod p) and
    0 <= v_{N/M} < p, so v_{N/M} = D mod p and g_N = D - (D mod p);
  * N a multiple of p only: g_{N/p} = p*D.

Recombining h_i = M*v_i + g_i recovers the original partition.
"""

from __future__ import annotations

from typing import NamedTuple

from .families import Params, PartClass, classify_part, in_A, in_B
from .partitions import Partition, make_partition


class FamilyViolationError(ValueError):
    """Input partition is outside the family the operation is defined on."""


class MultiplicityDecomposition(NamedTuple):
    """Unique split h = k + g with k = M*v, v in [0, p-1], p | g."""

    v: int
    k: int
    g: int


def decompose_multiplicity(ps: Params, h: int) -> MultiplicityDecomposition:
    """Split an allowed multiplicity h into (v, k, g).

    Raises FamilyViolationError when h is below the minimum j*M for its
    residue class j = (a^-1 * h) mod p, i.e. when h is not an allowed
    A-side multiplicity.
    """
    j = (ps.a_inv * h) % ps.p
    k = j * ps.M
    if h < k:
        raise FamilyViolationError(
            f"multiplicity {h} is congruent to {j}*{ps.a} (mod {ps.p}) "
            f"but is below the required minimum {k}"
        )
    g = h - k
    assert g % ps.p == 0, f"residue bookkeeping broken: h={h}, k={k}, p={ps.p}"
    return MultiplicityDecomposition(v=j, k=k, g=g)


def forward(ps: Params, lam: Partition) -> Partition:
    """Map an A-side partition to its B-side image.

    Raises FamilyViolationError (naming the offending part) when some
    multiplicity of `lam` is not allowed.
    """
    image: dict[int, int] = {}
    for part, mult in lam.pairs:
        try:
            v, _, g = decompose_multiplicity(ps, mult)
        except FamilyViolationError as e:
            raise FamilyViolationError(f"part {part}: {e}") from None
        if v:
            dest = ps.M * part
            image[dest] = image.get(dest, 0) + v
        if g:
            if part % ps.M == 0:
                image[part] = image.get(part, 0) + g
            else:
                dest = ps.p * part
                image[dest] = image.get(dest, 0) + g // ps.p
    mu = make_partition(image.items())
    assert mu.weight == lam.weight
    assert in_B(ps, mu)
    return mu


def inverse(ps: Params, mu: Partition) -> Partition:
    """Map a B-side partition back to its A-side preimage.

    Raises FamilyViolationError when `mu` contains a forbidden part.
    """
    k_part: dict[int, int] = {}
    g_part: dict[int, int] = {}
    for part, mult in mu.pairs:
        cls = classify_part(ps, part)
        if cls is PartClass.KBLOCK:
            v = mult % ps.p
            if v:
                src = part // ps.M
                k_part[src] = k_part.get(src, 0) + ps.M * v
            if mult - v:
                g_part[part] = g_part.get(part, 0) + (mult - v)
        elif cls is PartClass.GBLOCK:
            src = part // ps.p
            g_part[src] = g_part.get(src, 0) + ps.p * mult
        else:
            raise FamilyViolationError(
                f"part {part} is forbidden: not divisible by {ps.p} and not "
                f"congruent to -s*{ps.M} (mod {ps.L}) for any s in 1..{ps.p - 1}"
            )
    counts = k_part
    for src, g in g_part.items():
        counts[src] = counts.get(src, 0) + g
    lam = make_partition(counts.items())
    assert lam.weight == mu.weight
    assert in_A(ps, lam)
    return lam


def aepr_forward(lam: Partition) -> Partition:
    """Independent literal map for the classical p=2, a=1, r=1 case.

    Implements the six-congruence table for partitions with no odd
    multiplicity below 3 (image parts are even or congruent to 3 mod 6):
    split each multiplicity h as h = k + g with k in {0, 3} (k = 3 iff h is
    odd) and g even, then

        d(6t+1) = d(6t+5) = 0
        d(6t+2) = g(3t+1) / 2
        d(6t+4) = g(3t+2) / 2
        d(6t+3) = k(2t+1) / 3 + g(6t+3)
        d(6t+6) = k(2t+2) / 3 + g(6t+6)

    Used purely as a differential-testing oracle against forward() with
    (p, a, r) = (2, 1, 1); shares no code with it.
    """

    def k_of(i: int) -> int:
        h = lam.multiplicity(i)
        if h % 2 == 0:
            return 0
        if h < 3:
            raise FamilyViolationError(
                f"part {i}: odd multiplicity {h} is below the required minimum 3"
            )
        return 3

    def g_of(i: int) -> int:
        return lam.multiplicity(i) - k_of(i)

    # Validate every multiplicity, including ones no table line consumes.
    for part, _ in lam.pairs:
        k_of(part)

    image: dict[int, int] = {}
    for t in range(lam.max_part() + 1):
        for dest, val in (
            (6 * t + 2, g_of(3 * t + 1) // 2),
            (6 * t + 4, g_of(3 * t + 2) // 2),
            (6 * t + 3, k_of(2 * t + 1) // 3 + g_of(6 * t + 3)),
            (6 * t + 6, k_of(2 * t + 2) // 3 + g_of(6 * t + 6)),
        ):
            if val:
                image[dest] = image.get(dest, 0) + val
    return make_partition(image.items())
