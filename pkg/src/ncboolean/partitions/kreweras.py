"""Kreweras complement of a non-crossing partition."""
from __future__ import annotations

from .base import Partition, require_noncrossing


def kreweras(p):
    """Largest partition on the gaps that can interleave with p without crossings.

    Put p on the odd points 1', 3', ... and the complement on the even
    points.  Gap i (between element i and i+1, cyclically) and gap j > i can
    share a block exactly when {i+1, ..., j} is a union of blocks of p.
    """
    require_noncrossing(p)
    n = p.n
    lo = [p.blocks[k][0] for k in p.labels]
    hi = [p.blocks[k][-1] for k in p.labels]
    label = [None] * (n + 1)
    nxt = 0
    for i in range(1, n + 1):
        if label[i] is not None:
            continue
        label[i] = nxt
        mn, mx = n + 1, 0
        for j in range(i + 1, n + 1):
            mn = min(mn, lo[j - 1])
            mx = max(mx, hi[j - 1])
            if mn > i and mx <= j:
                label[j] = nxt
        nxt += 1
    return Partition.from_labels(label[1:])


def kreweras_permutation(p):
    """Same complement via cycles of p^{-1} composed with the long cycle."""
    require_noncrossing(p)
    n = p.n
    inv = [0] * (n + 1)
    for b in p.blocks:
        for t, x in enumerate(b):
            inv[b[(t + 1) % len(b)]] = x
    perm = [0] * (n + 1)
    for i in range(1, n + 1):
        perm[i] = inv[i % n + 1]
    label = [None] * (n + 1)
    for i in range(1, n + 1):
        j = i
        while label[j] is None:
            label[j] = i
            j = perm[j]
    return Partition.from_labels(label[1:])
