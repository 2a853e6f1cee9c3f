"""Set partitions of {1, ..., n}, colourings and signed tuples."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from ..errors import InputError, StructureError


class Partition:
    """An immutable partition of {1, ..., n}.

    Blocks are stored as sorted tuples, ordered by their minima, so two
    equal partitions always have identical ``blocks``.  Block indices used
    throughout the package refer to positions in ``blocks``.
    """

    __slots__ = ("n", "blocks", "__dict__")

    def __init__(self, blocks, n=None):
        bl = [tuple(sorted(int(x) for x in b)) for b in blocks]
        if any(len(b) == 0 for b in bl):
            raise InputError("partition blocks must be non-empty")
        elems = sorted(x for b in bl for x in b)
        if n is None:
            n = len(elems)
        if n < 1:
            raise InputError("partitions of the empty set are not supported")
        if elems != list(range(1, n + 1)):
            raise InputError(f"blocks do not partition {{1..{n}}}: {blocks!r}")
        bl.sort(key=lambda b: b[0])
        self.n = n
        self.blocks = tuple(bl)

    @classmethod
    def _trusted(cls, n, blocks):
        p = cls.__new__(cls)
        p.n = n
        p.blocks = blocks
        return p

    @classmethod
    def from_labels(cls, labels):
        """Build from a label list where ``labels[i]`` is the block of element i+1.

        Labels may be arbitrary hashables; blocks are canonicalised.
        """
        if len(labels) == 0:
            raise InputError("partitions of the empty set are not supported")
        groups = {}
        for i, lab in enumerate(labels, 1):
            groups.setdefault(lab, []).append(i)
        return cls._trusted(len(labels), tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])))

    @classmethod
    def parse(cls, text):
        """Parse the text form ``{{1,4},{2,3}}``."""
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise InputError(f"cannot parse partition {text!r}")
        inner = s[1:-1].strip()
        found = re.findall(r"\{([^{}]*)\}", inner)
        rest = re.sub(r"\{[^{}]*\}", "", inner).replace(",", "").strip()
        if rest or not found:
            raise InputError(f"cannot parse partition {text!r}")
        try:
            blocks = [[int(x) for x in f.split(",") if x.strip()] for f in found]
        except ValueError:
            raise InputError(f"cannot parse partition {text!r}") from None
        return cls(blocks)

    @classmethod
    def one(cls, n):
        """The one-block partition 1_n."""
        if n < 1:
            raise InputError("n must be positive")
        return cls._trusted(n, (tuple(range(1, n + 1)),))

    @classmethod
    def zero(cls, n):
        """The partition 0_n into singletons."""
        if n < 1:
            raise InputError("n must be positive")
        return cls._trusted(n, tuple((i,) for i in range(1, n + 1)))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return f"Partition({self})"

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def to_lists(self):
        return [list(b) for b in self.blocks]

    @cached_property
    def labels(self):
        """Tuple whose entry i-1 is the index of the block containing i."""
        lab = [0] * self.n
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x - 1] = k
        return tuple(lab)

    def block_of(self, i):
        """Index of the block containing element i."""
        return self.labels[i - 1]

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def restrict(self, subset):
        """Induced partition on the sorted ``subset``, relabelled to 1..k."""
        subset = sorted(subset)
        pos = {x: i for i, x in enumerate(subset, 1)}
        bl = []
        for b in self.blocks:
            r = [pos[x] for x in b if x in pos]
            if r:
                bl.append(r)
        return Partition(bl, len(subset))

    @cached_property
    def is_noncrossing(self):
        stack = []
        for i in range(1, self.n + 1):
            k = self.labels[i - 1]
            b = self.blocks[k]
            while stack and self.blocks[stack[-1]][-1] < i:
                stack.pop()
            if b[0] == i:
                stack.append(k)
            elif not stack or stack[-1] != k:
                return False
        return True

    @cached_property
    def is_interval(self):
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)


@dataclass(frozen=True)
class Classification:
    is_noncrossing: bool
    is_interval: bool


def classify(p):
    return Classification(p.is_noncrossing, p.is_interval)


def require_noncrossing(p):
    if not p.is_noncrossing:
        raise StructureError(f"partition {p} is crossing")


def leq(p, q):
    """Reverse refinement: every block of p lies inside a block of q."""
    if p.n != q.n:
        raise InputError("partitions live on different ground sets")
    ql = q.labels
    return all(len({ql[x - 1] for x in b}) == 1 for b in p.blocks)


def join(p, q):
    """Least upper bound in the lattice of all partitions (connectivity closure)."""
    if p.n != q.n:
        raise InputError("partitions live on different ground sets")
    parent = list(range(p.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for b in part.blocks:
            r = find(b[0])
            for x in b[1:]:
                parent[find(x)] = r
    return Partition.from_labels([find(i) for i in range(1, p.n + 1)])


def meet(p, q):
    """Greatest lower bound: nonempty blockwise intersections."""
    if p.n != q.n:
        raise InputError("partitions live on different ground sets")
    return Partition.from_labels(list(zip(p.labels, q.labels)))


@dataclass(frozen=True)
class Coloring:
    """A map {1..m} -> {1..s}, stored as a tuple of colours."""

    values: tuple
    s: int = 0

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise InputError("colouring of the empty set")
        s = self.s or max(vals)
        if any(v < 1 or v > s for v in vals):
            raise InputError(f"colours must lie in 1..{s}: {vals}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "s", s)

    @classmethod
    def from_word(cls, word, alphabet="ab"):
        """Colour i is 1 + position of letter i in ``alphabet``."""
        try:
            return cls(tuple(alphabet.index(ch) + 1 for ch in word), len(alphabet))
        except ValueError:
            raise InputError(f"word {word!r} uses letters outside {alphabet!r}") from None

    @property
    def m(self):
        return len(self.values)

    def __call__(self, i):
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def block_colors(self, p):
        """Colour of each block of p; InputError if c is not block-constant."""
        if p.n != self.m:
            raise InputError("colouring and partition sizes differ")
        out = []
        for b in p.blocks:
            cols = {self.values[x - 1] for x in b}
            if len(cols) != 1:
                raise InputError(f"colouring is not constant on block {b}")
            out.append(cols.pop())
        return tuple(out)

    def is_constant_on(self, p):
        return all(len({self.values[x - 1] for x in b}) == 1 for b in p.blocks)


@dataclass(frozen=True)
class SignedTuple:
    """A tuple over {'1', '*'}; '1' stands for the word ab and '*' for ba."""

    entries: tuple

    def __post_init__(self):
        ent = tuple(str(e) for e in self.entries)
        if not ent:
            raise InputError("signed tuples must be non-empty")
        if any(e not in ("1", "*") for e in ent):
            raise InputError(f"signed tuple entries must be '1' or '*': {ent}")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def parse(cls, text):
        """Accept '11*', '1,1,*' or '(1,1,*)'."""
        s = text.strip().strip("()").replace(",", "").replace(" ", "")
        return cls(tuple(s))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(self.entries) + ")"

    def complement(self):
        return SignedTuple(tuple("*" if e == "1" else "1" for e in self.entries))

    def word(self):
        """The 2n-letter word in a, b obtained by expanding 1 -> ab and * -> ba."""
        return "".join("ab" if e == "1" else "ba" for e in self.entries)
