"""Nesting structure of non-crossing partitions and the ac-friendly class."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError, PreconditionError
from .base import Coloring, Partition, SignedTuple, require_noncrossing
from .enumeration import iter_nc_labels

MAX_ACF = 16


@dataclass(frozen=True)
class NestingInfo:
    depth: tuple   # per block index
    parent: tuple  # per block index, None for outer blocks
    outer: tuple   # outer block indices, left to right


def nesting(p):
    """Depth and parent of every block of a non-crossing partition."""
    cached = p.__dict__.get("_nesting")
    if cached is not None:
        return cached
    require_noncrossing(p)
    k = len(p.blocks)
    depth = [0] * k
    parent = [None] * k
    outer = []
    stack = []
    for idx, b in enumerate(p.blocks):
        while stack and p.blocks[stack[-1]][-1] < b[0]:
            stack.pop()
        if stack:
            parent[idx] = stack[-1]
            depth[idx] = len(stack)
        else:
            outer.append(idx)
        stack.append(idx)
    info = NestingInfo(tuple(depth), tuple(parent), tuple(outer))
    p.__dict__["_nesting"] = info
    return info


def _check_block(p, block_index):
    if not 0 <= block_index < len(p.blocks):
        raise InputError(f"block index {block_index} out of range")


def block_depth(p, block_index):
    """Number of blocks strictly nesting the given block."""
    _check_block(p, block_index)
    return nesting(p).depth[block_index]


def depth(p, j):
    """Depth of the block containing element j."""
    if not 1 <= j <= p.n:
        raise InputError(f"element {j} outside 1..{p.n}")
    return nesting(p).depth[p.block_of(j)]


def parent(p, block_index):
    """Index of the smallest block nesting the given one, or None if it is outer."""
    _check_block(p, block_index)
    return nesting(p).parent[block_index]


@dataclass(frozen=True)
class OuterData:
    outer: tuple          # outer block indices, left to right
    outer_max: frozenset  # maxima of the outer blocks
    closure: Partition    # interval partition spanned by the outer blocks


def outer_data(p):
    info = nesting(p)
    spans = [(p.blocks[k][0], p.blocks[k][-1]) for k in info.outer]
    closure = Partition._trusted(p.n, tuple(tuple(range(lo, hi + 1)) for lo, hi in spans))
    return OuterData(info.outer, frozenset(hi for _, hi in spans), closure)


def calt(p):
    """Alternating colouring: outer blocks get 1, 2, 1, ... from the left,
    every inner block the opposite colour of its parent."""
    info = nesting(p)
    bc = [0] * len(p.blocks)
    for t, k in enumerate(info.outer):
        bc[k] = 1 + t % 2
    for k in range(len(p.blocks)):  # parents precede children in min order
        if info.parent[k] is not None:
            bc[k] = 3 - bc[info.parent[k]]
    return Coloring(tuple(bc[k] for k in p.labels), 2)


def _require_even(p):
    if p.n % 2:
        raise InputError("ac-friendliness is defined on an even number of points")


def is_ac_friendly(p, via="depth"):
    """Membership in the ac-friendly class, by the depth criterion or the calt criterion."""
    _require_even(p)
    require_noncrossing(p)
    if via not in ("depth", "calt"):
        raise InputError(f"unknown criterion {via!r}")
    od = outer_data(p)
    n2 = p.n
    if any(x % 2 == 0 and x != n2 for x in od.outer_max):
        return False
    if via == "depth":
        dep = nesting(p).depth
        lab = p.labels
        for j in range(1, n2, 2):
            if j not in od.outer_max and dep[lab[j - 1]] == dep[lab[j]]:
                return False
        return True
    c = calt(p).values
    return all(c[i] != c[i + 1] for i in range(0, n2, 2))


def oddtuple(p):
    """Signed tuple read off the alternating colouring at odd positions."""
    if not is_ac_friendly(p, via="calt"):
        raise PreconditionError(f"{p} is not ac-friendly")
    c = calt(p).values
    return SignedTuple(tuple("1" if c[i] == 1 else "*" for i in range(0, p.n, 2)))


def acf_labels_ok(lab, n):
    """Fast ac-friendliness test on a label list from ``iter_nc_labels``.

    Works with the parity of the alternating colouring, computed in one
    left-to-right pass; labels appear in order of first occurrence.
    """
    last = [0] * n
    for i in range(n):
        last[lab[i]] = i
    col = [0] * n
    stack = []
    seen = 0
    outer = 0
    prev = 0
    for i in range(n):
        lb = lab[i]
        while stack and last[stack[-1]] < i:
            stack.pop()
        if lb == seen:
            seen += 1
            if stack:
                col[lb] = 1 - col[stack[-1]]
            else:
                col[lb] = outer & 1
                outer += 1
            stack.append(lb)
        if i & 1 and i != n - 1 and last[lb] == i and len(stack) == 1:
            return False  # an outer block closes at an even position < 2n
        c = col[lb]
        if i & 1:
            if c == prev:
                return False
        else:
            prev = c
    return True


def _check_two_n(two_n):
    if not isinstance(two_n, int) or isinstance(two_n, bool):
        raise InputError(f"size must be an integer, got {two_n!r}")
    if two_n < 2 or two_n % 2:
        raise InputError(f"size must be a positive even integer, got {two_n}")
    if two_n > MAX_ACF:
        raise InputError(f"size {two_n} exceeds the ac-friendly enumeration limit {MAX_ACF}")


def iter_ac_friendly_labels(two_n):
    """Yield label lists (reused) of the ac-friendly partitions of {1..2n}."""
    _check_two_n(two_n)
    for lab in iter_nc_labels(two_n):
        if acf_labels_ok(lab, two_n):
            yield lab


def enumerate_ac_friendly(two_n):
    """All ac-friendly non-crossing partitions of {1..2n}."""
    _check_two_n(two_n)
    return [Partition.from_labels(lab) for lab in iter_ac_friendly_labels(two_n)]
