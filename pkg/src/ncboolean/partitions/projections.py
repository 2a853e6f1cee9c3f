"""The order << on non-crossing partitions, block projections and VNRP."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError, PreconditionError, StructureError
from .base import Coloring, Partition, leq, require_noncrossing
from .nesting import nesting


def ll_leq(p, q):
    """p << q: p <= q and every block of q has a block of p holding its min and max."""
    if not leq(p, q):
        return False
    pl = p.labels
    return all(pl[w[0] - 1] == pl[w[-1] - 1] for w in q.blocks)


def special_blocks(p, q):
    """Indices of blocks of p sharing both min and max with their q-block (for p << q)."""
    if not ll_leq(p, q):
        raise PreconditionError(f"{p} is not << {q}")
    ql = q.labels
    out = []
    for k, b in enumerate(p.blocks):
        w = q.blocks[ql[b[0] - 1]]
        if b[0] == w[0] and b[-1] == w[-1]:
            out.append(k)
    return tuple(out)


def nests(p, outer, inner):
    """Whether block ``outer`` nests block ``inner`` (both indices of p, reflexive)."""
    a, b = p.blocks[outer], p.blocks[inner]
    return a[0] <= b[0] and b[-1] <= a[-1]


@dataclass(frozen=True)
class BlockProjection:
    """A map on the blocks of a non-crossing partition.

    ``image[k]`` is the index of the image of block k.  Must be idempotent,
    monotone for nesting and extensive (every block is nested in its image).
    """

    base: Partition
    image: tuple

    def __post_init__(self):
        p = self.base
        require_noncrossing(p)
        img = tuple(self.image)
        k = len(p.blocks)
        if len(img) != k or any(not 0 <= t < k for t in img):
            raise InputError("projection image has the wrong shape")
        object.__setattr__(self, "image", img)
        for a in range(k):
            if img[img[a]] != img[a]:
                raise StructureError("block projection is not idempotent")
            if not nests(p, img[a], a):
                raise StructureError("block projection is not extensive")
        for a in range(k):
            for b in range(k):
                if nests(p, a, b) and not nests(p, img[a], img[b]):
                    raise StructureError("block projection is not nest-monotone")

    def range(self):
        return tuple(sorted(set(self.image)))

    def __call__(self, k):
        return self.image[k]


def projection_from_marked(p, marked):
    """The block projection with the given range (marked set must contain all outer blocks)."""
    info = nesting(p)
    marked = frozenset(marked)
    if any(not 0 <= k < len(p.blocks) for k in marked):
        raise InputError("marked block index out of range")
    missing = [k for k in info.outer if k not in marked]
    if missing:
        raise PreconditionError(f"outer blocks {missing} are not marked")
    img = [0] * len(p.blocks)
    for k in range(len(p.blocks)):  # parents come first in min order
        img[k] = k if k in marked else img[info.parent[k]]
    return BlockProjection(p, tuple(img))


def partition_from_projection(phi):
    """Glue each block of the range with everything mapped onto it."""
    return Partition.from_labels([phi.image[k] for k in phi.base.labels])


def projection_from_coarsening(p, q):
    """The block projection of p whose associated partition is q (requires p << q)."""
    special = special_blocks(p, q)
    return projection_from_marked(p, special)


def has_vnrp(p, coloring):
    """Every inner block has a colour different from its parent's."""
    bc = coloring.block_colors(p)
    par = nesting(p).parent
    return all(par[k] is None or bc[par[k]] != bc[k] for k in range(len(p.blocks)))


def vnrp_majorant(p, coloring):
    """The unique VNRP partition tau with p << tau in the coloured non-crossing class."""
    if not isinstance(coloring, Coloring):
        coloring = Coloring(tuple(coloring))
    require_noncrossing(p)
    bc = coloring.block_colors(p)
    par = nesting(p).parent
    marked = [k for k in range(len(p.blocks)) if par[k] is None or bc[par[k]] != bc[k]]
    return partition_from_projection(projection_from_marked(p, marked))
