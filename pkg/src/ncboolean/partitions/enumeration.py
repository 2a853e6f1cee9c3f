"""Enumeration of non-crossing and interval partitions."""
from __future__ import annotations

from itertools import combinations

from ..errors import InputError
from .base import Coloring, Partition

MAX_NC = 20


def _check_n(n, limit=MAX_NC):
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise InputError("n must be at least 1")
    if n > limit:
        raise InputError(f"n = {n} exceeds the enumeration limit {limit}")


def iter_nc_labels(n, colors=None):
    """Yield label lists of all non-crossing partitions of {1..n}.

    Depth-first: element i either opens a new block or joins one of the
    currently open blocks (a stack, innermost on top); joining a block
    closes everything above it.  If ``colors`` is given, only blocks of
    equal colour may be joined.  The yielded list is reused between
    iterations, copy it if needed.
    """
    labels = [0] * n
    stack = [0]
    first = [0] * n  # first element of each block label

    def rec(i, nb):
        if i == n:
            yield labels
            return
        labels[i] = nb
        first[nb] = i
        stack.append(nb)
        yield from rec(i + 1, nb + 1)
        stack.pop()
        ci = colors[i] if colors is not None else None
        for j in range(len(stack) - 1, -1, -1):
            lab = stack[j]
            if ci is not None and colors[first[lab]] != ci:
                continue
            labels[i] = lab
            saved = stack[j + 1:]
            del stack[j + 1:]
            yield from rec(i + 1, nb)
            stack.extend(saved)

    yield from rec(1, 1)


def count_nc(n):
    _check_n(n)
    return sum(1 for _ in iter_nc_labels(n))


def enumerate_nc(n):
    """All non-crossing partitions of {1..n}, in depth-first order."""
    _check_n(n)
    return [Partition.from_labels(lab) for lab in iter_nc_labels(n)]


def iter_interval_cuts(n):
    """Yield the cut sets (sorted tuples in 1..n-1) of all interval partitions."""
    inner = range(1, n)
    for k in range(n):
        yield from combinations(inner, k)


def interval_from_cuts(n, cuts):
    bounds = [0, *cuts, n]
    return Partition._trusted(n, tuple(tuple(range(bounds[t] + 1, bounds[t + 1] + 1)) for t in range(len(bounds) - 1)))


def enumerate_interval(n):
    """All 2^(n-1) interval partitions of {1..n}."""
    _check_n(n)
    return [interval_from_cuts(n, c) for c in iter_interval_cuts(n)]


def enumerate_nc_colored(n, coloring):
    """Non-crossing partitions of {1..n} on which the colouring is block-constant."""
    _check_n(n)
    if not isinstance(coloring, Coloring):
        coloring = Coloring(tuple(coloring))
    if coloring.m != n:
        raise InputError("colouring length differs from n")
    return [Partition.from_labels(lab) for lab in iter_nc_labels(n, coloring.values)]
