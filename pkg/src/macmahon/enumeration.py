"""Exhaustive partition generation and brute-force verification.

These are the desk-scale oracles: enumerate every partition of n, count
family members directly from the membership predicates, and drive the map
over complete families checking weight, membership, roundtrip, and
injectivity/surjectivity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterator

from .bijection import forward, inverse
from .families import Params, in_A, in_B
from .partitions import Partition, make_partition

# p(60) is just under a million partitions; beyond that the exhaustive
# oracles stop being desk scale.  Callers can raise the cap explicitly.
DEFAULT_CAP = 60


def _desc_part_lists(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _desc_part_lists(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in decreasing-lex order.

    Raises ValueError for n < 0 or n above the resource cap.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")

    def gen() -> Iterator[Partition]:
        for parts in _desc_part_lists(n, n):
            pairs = []
            for part in parts:
                if pairs and pairs[-1][0] == part:
                    pairs[-1][1] += 1
                else:
                    pairs.append([part, 1])
            yield Partition(tuple((p, m) for p, m in pairs))

    return gen()


def count_family(ps: Params, family: str, n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of partitions of n in the chosen family ("A" or "B")."""
    if family not in ("A", "B"):
        raise ValueError(f"family must be 'A' or 'B', got {family!r}")
    member = in_A if family == "A" else in_B
    return sum(1 for pt in enumerate_partitions(n, cap) if member(ps, pt))


@dataclass(frozen=True)
class PerNRecord:
    """Verification counters for a single weight n."""

    n: int
    count_a: int
    count_b: int
    roundtrip_failures: int
    weight_failures: int
    membership_failures: int
    collision_failures: int

    @property
    def clean(self) -> bool:
        return (
            self.count_a == self.count_b
            and self.roundtrip_failures == 0
            and self.weight_failures == 0
            and self.membership_failures == 0
            and self.collision_failures == 0
        )


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated per-n verification results for one parameter triple."""

    params: Params
    n_max: int
    per_n: tuple[PerNRecord, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "params": {
                "p": self.params.p,
                "a": self.params.a,
                "r": self.params.r,
                "a_inv": self.params.a_inv,
                "M": self.params.M,
                "L": self.params.L,
            },
            "n_max": self.n_max,
            "per_n": [
                {
                    "n": rec.n,
                    "count_a": rec.count_a,
                    "count_b": rec.count_b,
                    "roundtrip_failures": rec.roundtrip_failures,
                    "weight_failures": rec.weight_failures,
                    "membership_failures": rec.membership_failures,
                    "collision_failures": rec.collision_failures,
                }
                for rec in self.per_n
            ],
            "pass": self.passed,
        }


def _per_n_record(ps: Params, cap: int, n: int) -> PerNRecord:
    a_members = []
    count_b = 0
    for pt in enumerate_partitions(n, cap):
        if in_A(ps, pt):
            a_members.append(pt)
        if in_B(ps, pt):
            count_b += 1

    roundtrip = weight = membership = 0
    images = []
    for lam in a_members:
        mu = forward(ps, lam)
        images.append(mu)
        if not in_B(ps, mu):
            membership += 1
        if mu.weight != n:
            weight += 1
        if inverse(ps, mu) != lam:
            roundtrip += 1
    collisions = len(images) - len(set(images))

    return PerNRecord(
        n=n,
        count_a=len(a_members),
        count_b=count_b,
        roundtrip_failures=roundtrip,
        weight_failures=weight,
        membership_failures=membership,
        collision_failures=collisions,
    )


def verify_bijection(
    ps: Params, n_max: int, cap: int = DEFAULT_CAP, jobs: int = 1
) -> VerificationReport:
    """Drive the map over every A-side partition of every n <= n_max.

    Per n this records |A(n)|, |B(n)| and the number of membership, weight,
    roundtrip, and image-collision failures.  Injectivity (no collisions)
    plus |image| = |B(n)| gives surjectivity without enumerating preimages.
    Failures are counted in the report, never raised.  `jobs` > 1 fans the
    independent n values out to worker processes; the report is identical
    either way.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise ValueError(f"n_max={n_max} exceeds the enumeration cap {cap}")

    check = partial(_per_n_record, ps, cap)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_n = tuple(pool.map(check, range(n_max + 1)))
    else:
        per_n = tuple(check(n) for n in range(n_max + 1))

    return VerificationReport(
        params=ps,
        n_max=n_max,
        per_n=per_n,
        passed=all(rec.clean for rec in per_n),
    )
