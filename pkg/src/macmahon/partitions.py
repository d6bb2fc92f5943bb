"""Integer partitions as sparse part -> multiplicity mappings.

A partition is stored canonically as a tuple of (part, multiplicity) pairs
sorted by strictly decreasing part, with every part >= 1 and every stored
multiplicity >= 1.  Values are immutable and hashable, so they can be used
as set/dict members and shared freely between workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

_TOKEN_RE = re.compile(r"(\d+)(?:\^(\d+))?")


@dataclass(frozen=True)
class Partition:
    """Canonical partition value.

    `pairs` holds (part, multiplicity) sorted by decreasing part.  Two
    partitions are equal iff their pairs are equal; the canonical form is
    unique, so this coincides with multiset equality.
    """

    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def weight(self) -> int:
        """Sum of all parts, counted with multiplicity."""
        return sum(part * mult for part, mult in self.pairs)

    def multiplicity(self, i: int) -> int:
        """Number of times part i occurs; 0 for absent parts (total on i >= 1)."""
        for part, mult in self.pairs:
            if part == i:
                return mult
        return 0

    def max_part(self) -> int:
        """Largest part, or 0 for the empty partition."""
        return self.pairs[0][0] if self.pairs else 0

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition(())


def make_partition(entries: Iterable[tuple[int, int]]) -> Partition:
    """Build a canonical Partition from (part, multiplicity) entries.

    Duplicate parts are merged and zero multiplicities dropped.  Raises
    ValueError on a part < 1 or a negative multiplicity.
    """
    merged: dict[int, int] = {}
    for part, mult in entries:
        if part < 1:
            raise ValueError(f"part must be a positive integer, got {part}")
        if mult < 0:
            raise ValueError(f"multiplicity must be nonnegative, got {mult} for part {part}")
        if mult:
            merged[part] = merged.get(part, 0) + mult
    return Partition(tuple(sorted(merged.items(), reverse=True)))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form: tokens `P` or `P^M`.

    Whitespace around tokens is ignored and an empty (or blank) string is
    the empty partition.  Repeated parts are merged.  Raises ValueError on
    malformed tokens, part 0, or exponent 0 (the text form requires M >= 1).
    """
    if not text.strip():
        return EMPTY
    entries = []
    for token in text.split(","):
        token = token.strip()
        m = _TOKEN_RE.fullmatch(token)
        if m is None:
            raise ValueError(f"malformed partition token {token!r}")
        part = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if mult == 0:
            raise ValueError(f"multiplicity must be positive in token {token!r}")
        entries.append((part, mult))
    return make_partition(entries)


def format_partition(pt: Partition) -> str:
    """Canonical text form, parts strictly decreasing; inverse of parse_partition."""
    return ",".join(
        f"{part}^{mult}" if mult > 1 else str(part) for part, mult in pt.pairs
    )


def to_json_dict(pt: Partition) -> dict:
    """JSON form {"parts": [[P, M], ...]} with pairs sorted by decreasing P."""
    return {"parts": [[part, mult] for part, mult in pt.pairs]}


def from_json_dict(obj: dict) -> Partition:
    """Rebuild a Partition from its JSON form."""
    return make_partition((part, mult) for part, mult in obj["parts"])
