"""Moment and cumulant conversions and joint Boolean cumulants of free variables.

All arithmetic is exact (``fractions.Fraction``).  Partition sums are
evaluated through cached tables that record, for every ground-set size
or colouring, how many partitions of each block-size type occur.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import InputError
from .partitions import (
    Coloring,
    Partition,
    has_vnrp,
    iter_interval_cuts,
    iter_nc_labels,
    kreweras,
    nesting,
)


def to_fraction(x):
    """Exact rational from an int, Fraction or 'p/q' string."""
    if isinstance(x, bool):
        raise InputError(f"not a rational number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {x!r}") from None
    raise InputError(f"not a rational number: {x!r}")


def fraction_str(x):
    return str(Fraction(x))


@dataclass(frozen=True)
class _Sequence:
    """Values indexed 1..order, stored 0-based in ``values``."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_fraction(v) for v in self.values))

    @property
    def order(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def coeff(self, k):
        if not 1 <= k <= len(self.values):
            raise InputError(f"index {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def to_json(self):
        return [fraction_str(v) for v in self.values]


@dataclass(frozen=True)
class MomentSequence(_Sequence):
    """Moments m_1, ..., m_N (m_0 = 1 is implicit)."""

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))


_KINDS = ("boolean", "free")


@dataclass(frozen=True)
class CumulantSequence(_Sequence):
    """Cumulants c_1, ..., c_N of one kind."""

    kind: str = "boolean"

    def __post_init__(self):
        super().__post_init__()
        if self.kind not in _KINDS:
            raise InputError(f"unknown cumulant kind {self.kind!r}")

    def to_json(self):
        return {"kind": self.kind, "values": super().to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["values"]), data["kind"])


def _require_kind(seq, kind):
    if not isinstance(seq, CumulantSequence) or seq.kind != kind:
        raise InputError(f"expected a {kind} cumulant sequence")


# ---------------------------------------------------------------- type tables


def _sizes_from_labels(lab):
    c = Counter(lab)
    return tuple(sorted(c.values()))


@lru_cache(maxsize=None)
def nc_type_counts(n):
    """Counter: sorted block-size tuple -> number of non-crossing partitions of that type."""
    return Counter(_sizes_from_labels(lab) for lab in iter_nc_labels(n))


@lru_cache(maxsize=None)
def interval_type_counts(n):
    out = Counter()
    for cuts in iter_interval_cuts(n):
        b = (0, *cuts, n)
        out[tuple(sorted(b[t + 1] - b[t] for t in range(len(b) - 1)))] += 1
    return out


@lru_cache(maxsize=None)
def irreducible_type_counts(n):
    """Types of non-crossing partitions with 1 and n in one block (that is, pi << 1_n)."""
    return Counter(_sizes_from_labels(lab) for lab in iter_nc_labels(n) if lab[0] == lab[-1])


def _evaluate(types, values):
    total = Fraction(0)
    for sizes, count in types.items():
        term = Fraction(count)
        for s in sizes:
            term *= values[s - 1]
            if not term:
                break
        total += term
    return total


def _check_order(seq):
    if len(seq) < 1:
        raise InputError("empty sequence")


# ---------------------------------------------------------------- conversions


def boolean_to_moments(beta):
    """m_n as the sum over interval partitions of products of Boolean cumulants."""
    _require_kind(beta, "boolean")
    _check_order(beta)
    v = beta.values
    return MomentSequence(tuple(_evaluate(interval_type_counts(n), v) for n in range(1, len(v) + 1)))


def moments_to_boolean(m):
    """Inverse of ``boolean_to_moments``, solved order by order."""
    _check_order(m)
    out = []
    for n in range(1, len(m) + 1):
        types = interval_type_counts(n)
        rest = _evaluate({t: c for t, c in types.items() if t != (n,)}, out + [Fraction(0)])
        out.append(m.values[n - 1] - rest)
    return CumulantSequence(tuple(out), "boolean")


def free_to_moments(kappa):
    """m_n as the sum over non-crossing partitions of products of free cumulants."""
    _require_kind(kappa, "free")
    _check_order(kappa)
    v = kappa.values
    return MomentSequence(tuple(_evaluate(nc_type_counts(n), v) for n in range(1, len(v) + 1)))


def moments_to_free(m):
    _check_order(m)
    out = []
    for n in range(1, len(m) + 1):
        types = nc_type_counts(n)
        rest = _evaluate({t: c for t, c in types.items() if t != (n,)}, out + [Fraction(0)])
        out.append(m.values[n - 1] - rest)
    return CumulantSequence(tuple(out), "free")


def boolean_from_free(kappa):
    """beta_n as the sum over pi << 1_n of products of free cumulants."""
    _require_kind(kappa, "free")
    _check_order(kappa)
    v = kappa.values
    return CumulantSequence(
        tuple(_evaluate(irreducible_type_counts(n), v) for n in range(1, len(v) + 1)), "boolean"
    )


def free_from_boolean(beta):
    _require_kind(beta, "boolean")
    _check_order(beta)
    out = []
    for n in range(1, len(beta) + 1):
        types = irreducible_type_counts(n)
        rest = _evaluate({t: c for t, c in types.items() if t != (n,)}, out + [Fraction(0)])
        out.append(beta.values[n - 1] - rest)
    return CumulantSequence(tuple(out), "free")


def convert(seq, source, target):
    """Convert between 'moments', 'boolean' and 'free' (through moments when needed)."""
    for name in (source, target):
        if name not in ("moments", "boolean", "free"):
            raise InputError(f"unknown sequence type {name!r}")
    if source == "moments":
        m = seq if isinstance(seq, MomentSequence) else MomentSequence(tuple(seq))
    else:
        c = seq if isinstance(seq, CumulantSequence) else CumulantSequence(tuple(seq), source)
        _require_kind(c, source)
        if source == target:
            return c
        if source == "free" and target == "boolean":
            return boolean_from_free(c)
        if source == "boolean" and target == "free":
            return free_from_boolean(c)
        m = boolean_to_moments(c) if source == "boolean" else free_to_moments(c)
    if target == "moments":
        return m
    return moments_to_boolean(m) if target == "boolean" else moments_to_free(m)


# ---------------------------------------------------------------- free models


MAX_COLOURS = 4


@dataclass(frozen=True)
class FreeModel:
    """Boolean cumulant sequences of freely independent variables, one per colour."""

    betas: tuple
    _free: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        bs = tuple(self.betas)
        if not bs:
            raise InputError("a model needs at least one variable")
        if len(bs) > MAX_COLOURS:
            raise InputError(f"at most {MAX_COLOURS} variables are supported, got {len(bs)}")
        for b in bs:
            _require_kind(b, "boolean")
        object.__setattr__(self, "betas", bs)

    @classmethod
    def pair(cls, beta_a, beta_b):
        return cls((beta_a, beta_b))

    @property
    def s(self):
        return len(self.betas)

    @property
    def order(self):
        return min(len(b) for b in self.betas)

    def beta(self, colour, k):
        return self.betas[colour - 1].values[k - 1]

    def free(self, colour):
        if colour not in self._free:
            self._free[colour] = free_from_boolean(self.betas[colour - 1])
        return self._free[colour]


def _as_coloring(word_or_coloring, s=2):
    if isinstance(word_or_coloring, Coloring):
        return word_or_coloring
    if isinstance(word_or_coloring, str):
        alphabet = "abcdefghijklmnopqrstuvwxyz"[: max(s, 2)]
        return Coloring.from_word(word_or_coloring, alphabet)
    return Coloring(tuple(word_or_coloring))


def _colored_partitions(colors):
    for lab in iter_nc_labels(len(colors), colors):
        yield Partition.from_labels(lab)


def _typed(p, colors):
    return tuple(sorted((colors[b[0] - 1], len(b)) for b in p.blocks))


@lru_cache(maxsize=None)
def vnrp_terms(colors, irreducible):
    """Counter of coloured block types over VNRP partitions in NC(m; c).

    With ``irreducible`` only partitions with 1 and m in one block count.
    """
    c = Coloring(colors)
    out = Counter()
    for p in _colored_partitions(colors):
        if irreducible and p.labels[0] != p.labels[-1]:
            continue
        if has_vnrp(p, c):
            out[_typed(p, colors)] += 1
    return out


@lru_cache(maxsize=None)
def colored_nc_terms(colors):
    """Counter of coloured block types over all of NC(m; c)."""
    return Counter(_typed(p, colors) for p in _colored_partitions(colors))


def _eval_colored(terms, value):
    total = Fraction(0)
    for typ, count in terms.items():
        term = Fraction(count)
        for col, size in typ:
            term *= value(col, size)
            if not term:
                break
        total += term
    return total


def _check_model(model, coloring):
    if coloring.s > model.s:
        raise InputError(f"colouring uses {coloring.s} colours but the model has {model.s} variables")
    # a block never holds more positions than its colour occupies
    need = max(Counter(coloring.values).values())
    if need > model.order:
        raise InputError(f"word needs cumulants up to order {need}, the model stops at {model.order}")


def joint_boolean_vnrp(model, word):
    """Joint Boolean cumulant of the coloured word, summing VNRP partitions pi << 1_m."""
    c = _as_coloring(word, model.s)
    _check_model(model, c)
    return _eval_colored(vnrp_terms(c.values, True), model.beta)


def joint_moment_free(model, word, path="vnrp"):
    """Mixed moment of the coloured word.

    path 'vnrp': VNRP partitions in NC(m; c) weighted by Boolean cumulants.
    path 'free_cumulant': all of NC(m; c) weighted by free cumulants.
    """
    c = _as_coloring(word, model.s)
    _check_model(model, c)
    if path == "vnrp":
        return _eval_colored(vnrp_terms(c.values, False), model.beta)
    if path == "free_cumulant":
        return _eval_colored(colored_nc_terms(c.values), lambda col, k: model.free(col).values[k - 1])
    raise InputError(f"unknown path {path!r}")


# ---------------------------------------------------------------- products as arguments


def admissible_cut_sets(boundaries):
    """Cut sets of interval partitions pi of {1..n} with pi v sigma = 1_n.

    ``boundaries`` are i(1) < ... < i(m) = n, the right ends of the grouped
    arguments.  The join is full exactly when no cut falls on a boundary.
    """
    b = tuple(int(x) for x in boundaries)
    if not b or any(x < 1 for x in b) or any(b[t] >= b[t + 1] for t in range(len(b) - 1)):
        raise InputError(f"boundaries must be strictly increasing positive integers: {boundaries}")
    n = b[-1]
    allowed = [x for x in range(1, n) if x not in set(b[:-1])]
    for k in range(len(allowed) + 1):
        yield from combinations(allowed, k)


def boolean_product_expansion(boundaries, evaluator):
    """Boolean cumulant with products as arguments.

    Sums ``evaluator(block)`` products over interval partitions of {1..n}
    whose join with the grouping is 1_n; ``block`` is a tuple of positions.
    """
    n = int(boundaries[-1])
    total = Fraction(0)
    for cuts in admissible_cut_sets(boundaries):
        bounds = (0, *cuts, n)
        term = Fraction(1)
        for t in range(len(bounds) - 1):
            term *= evaluator(tuple(range(bounds[t] + 1, bounds[t + 1] + 1)))
            if not term:
                break
        total += term
    return total


@dataclass(frozen=True)
class UnitRuleOutcome:
    vanishes: bool
    dropped: int | None  # position removed when the cumulant does not vanish


def unit_rule(m, n):
    """Effect of the unit at position m on a Boolean cumulant of length n >= 2."""
    if n < 2 or not 1 <= m <= n:
        raise InputError(f"need n >= 2 and 1 <= m <= n, got m={m}, n={n}")
    if m in (1, n):
        return UnitRuleOutcome(True, None)
    return UnitRuleOutcome(False, m)


# ---------------------------------------------------------------- sums and products


@lru_cache(maxsize=None)
def depth_parity_types(n):
    """Counter over pi << 1_n of (sizes at even depth, sizes at odd depth)."""
    out = Counter()
    for lab in iter_nc_labels(n):
        if lab[0] != lab[-1]:
            continue
        p = Partition.from_labels(lab)
        dep = nesting(p).depth
        even = tuple(sorted(len(b) for k, b in enumerate(p.blocks) if dep[k] % 2 == 0))
        odd = tuple(sorted(len(b) for k, b in enumerate(p.blocks) if dep[k] % 2 == 1))
        out[(even, odd)] += 1
    return out


def _prod(values, sizes):
    r = Fraction(1)
    for s in sizes:
        r *= values[s - 1]
        if not r:
            break
    return r


def boolean_cumulants_of_sum(model, order=None):
    """Boolean cumulants of a + b for free a, b, colouring blocks by depth parity."""
    if model.s != 2:
        raise InputError("the sum formula needs exactly two variables")
    order = model.order if order is None else order
    if order > model.order:
        raise InputError(f"order {order} exceeds the model order {model.order}")
    ba, bb = model.betas[0].values, model.betas[1].values
    out = []
    for n in range(1, order + 1):
        total = Fraction(0)
        for (even, odd), count in depth_parity_types(n).items():
            total += count * (_prod(ba, even) * _prod(bb, odd) + _prod(bb, even) * _prod(ba, odd))
        out.append(total)
    return CumulantSequence(tuple(out), "boolean")


@lru_cache(maxsize=None)
def kreweras_pair_types(n):
    out = Counter()
    for lab in iter_nc_labels(n):
        p = Partition.from_labels(lab)
        out[(tuple(sorted(p.block_sizes())), tuple(sorted(kreweras(p).block_sizes())))] += 1
    return out


def free_cumulants_of_product(kappa_a, kappa_b, order=None):
    """Free cumulants of ab for free a, b: sum over pi of kappa_a(pi) kappa_b(Kr pi)."""
    _require_kind(kappa_a, "free")
    _require_kind(kappa_b, "free")
    top = min(len(kappa_a), len(kappa_b))
    order = top if order is None else order
    if order > top:
        raise InputError(f"order {order} exceeds the available cumulants ({top})")
    va, vb = kappa_a.values, kappa_b.values
    out = []
    for n in range(1, order + 1):
        out.append(sum((c * _prod(va, s1) * _prod(vb, s2) for (s1, s2), c in kreweras_pair_types(n).items()), Fraction(0)))
    return CumulantSequence(tuple(out), "free")


def free_additive_boolean(model, order=None):
    """Boolean cumulants of a + b computed by adding free cumulants."""
    order = model.order if order is None else order
    ka, kb = model.free(1).values, model.free(2).values
    kappa = CumulantSequence(tuple(ka[i] + kb[i] for i in range(order)), "free")
    return boolean_from_free(kappa)

