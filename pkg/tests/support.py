"""Shared test fixtures: the standard parameter grid and an independent
partition-counting oracle.

The oracle uses Euler's pentagonal number recurrence and shares no code
with the enumeration module, so it can vouch for the enumerator itself.
"""

GRID = [
    (2, 1, 0), (2, 1, 1), (2, 1, 2), (2, 1, 3),
    (3, 1, 1), (3, 2, 0), (3, 2, 1),
    (4, 1, 1), (4, 3, 1), (5, 2, 1),
]


def partition_counts(n_max):
    """Return [p(0), ..., p(n_max)] via the pentagonal number recurrence.

    p(n) = sum_{k>=1} (-1)^(k-1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    """
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = k * (3 * k + 1) // 2
            sign = 1 if k % 2 else -1
            total += sign * counts[n - g1]
            if g2 <= n:
                total += sign * counts[n - g2]
            k += 1
        counts[n] = total
    return counts
