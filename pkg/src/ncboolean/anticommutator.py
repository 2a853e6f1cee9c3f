"""Boolean cumulants of words in ab, ba and of the anticommutator ab + ba."""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cumulants import CumulantSequence, FreeModel, boolean_product_expansion, joint_boolean_vnrp
from .errors import InputError
from .partitions import SignedTuple, calt, enumerate_ac_friendly, iter_ac_friendly_labels, oddtuple

FILTERS = ("all", "pairings", "even-blocks")


@dataclass(frozen=True)
class AcTerm:
    partition: object
    a_sizes: tuple  # sorted sizes of the blocks weighted by cumulants of a
    b_sizes: tuple


@dataclass(frozen=True)
class AcTermTable:
    eps: SignedTuple
    terms: tuple

    def __len__(self):
        return len(self.terms)

    def size_multiset(self):
        return Counter((t.a_sizes, t.b_sizes) for t in self.terms)


@lru_cache(maxsize=None)
def _records(two_n):
    """(partition, oddtuple, colour-1 sizes, colour-2 sizes) for every ac-friendly partition."""
    out = []
    for p in enumerate_ac_friendly(two_n):
        c = calt(p).values
        s1 = tuple(sorted(len(b) for b in p.blocks if c[b[0] - 1] == 1))
        s2 = tuple(sorted(len(b) for b in p.blocks if c[b[0] - 1] == 2))
        out.append((p, oddtuple(p), s1, s2))
    return tuple(out)


def _coerce_eps(eps):
    if isinstance(eps, SignedTuple):
        return eps
    if isinstance(eps, str):
        return SignedTuple.parse(eps)
    return SignedTuple(tuple(eps))


def ac_term_table(eps):
    """Partitions and weights summed by ``joint_boolean_of_word``.

    For eps(1) = 1 these are the ac-friendly partitions with oddtuple eps,
    colour 1 carrying a.  For eps(1) = * the complementary tuple is used and
    the roles of a and b swap.
    """
    eps = _coerce_eps(eps)
    flip = eps[0] == "*"
    target = eps.complement() if flip else eps
    terms = []
    for p, ot, s1, s2 in _records(2 * len(eps)):
        if ot == target:
            terms.append(AcTerm(p, s2, s1) if flip else AcTerm(p, s1, s2))
    return AcTermTable(eps, tuple(terms))


def _check_pair(model, n):
    if not isinstance(model, FreeModel) or model.s != 2:
        raise InputError("expected a model with two free variables")
    if model.order < n:
        raise InputError(f"model order {model.order} is below the required {n}")


def _weight(model, a_sizes, b_sizes):
    r = Fraction(1)
    for s in a_sizes:
        r *= model.beta(1, s)
    for s in b_sizes:
        r *= model.beta(2, s)
    return r


def joint_boolean_of_word(model, eps):
    """Boolean cumulant of (ab)^eps(1), ..., (ab)^eps(n) with a, b free and selfadjoint."""
    eps = _coerce_eps(eps)
    _check_pair(model, len(eps))
    return sum((_weight(model, t.a_sizes, t.b_sizes) for t in ac_term_table(eps).terms), Fraction(0))


def anticommutator_boolean(model, n):
    """n-th Boolean cumulant of ab + ba."""
    if n < 1:
        raise InputError("n must be positive")
    _check_pair(model, n)
    total = Fraction(0)
    for _, _, s1, s2 in _records(2 * n):
        total += _weight(model, s1, s2) + _weight(model, s2, s1)
    return total


def anticommutator_boolean_same(beta, n):
    """n-th Boolean cumulant of ab + ba when a and b have the same distribution."""
    if n < 1:
        raise InputError("n must be positive")
    if beta.kind != "boolean" or len(beta) < n:
        raise InputError(f"need Boolean cumulants up to order {n}")
    total = Fraction(0)
    for _, _, s1, s2 in _records(2 * n):
        r = Fraction(1)
        for s in s1 + s2:
            r *= beta.values[s - 1]
        total += r
    return 2 * total


def anticommutator_sequence(model, order):
    return CumulantSequence(tuple(anticommutator_boolean(model, n) for n in range(1, order + 1)), "boolean")


def word_of(eps):
    """Letters of the 2n-letter word for eps: 1 -> a b, * -> b a."""
    return _coerce_eps(eps).word()


def oracle_joint_boolean(model, eps):
    """Same cumulant as ``joint_boolean_of_word`` without ac-friendly partitions.

    Expands products as arguments over interval partitions of {1..2n} and
    evaluates each mixed cumulant by the VNRP formula.
    """
    eps = _coerce_eps(eps)
    _check_pair(model, len(eps))
    word = eps.word()
    cache = {}

    def ev(block):
        sub = "".join(word[i - 1] for i in block)
        if sub not in cache:
            cache[sub] = joint_boolean_vnrp(model, sub)
        return cache[sub]

    return boolean_product_expansion(tuple(range(2, 2 * len(eps) + 1, 2)), ev)


# ---------------------------------------------------------------- census


def _passes(lab, filt):
    if filt == "all":
        return True
    sizes = Counter(lab).values()
    if filt == "pairings":
        return all(s == 2 for s in sizes)
    return all(s % 2 == 0 for s in sizes)


def census(two_n, filt="all"):
    """Number of ac-friendly partitions of {1..2n}, optionally only pairings or even-block ones."""
    if filt not in FILTERS:
        raise InputError(f"unknown filter {filt!r}; choose from {FILTERS}")
    return sum(1 for lab in iter_ac_friendly_labels(two_n) if _passes(lab, filt))


@dataclass(frozen=True)
class CensusTable:
    rows: tuple  # (two_n, filter, count)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["two_n", "filter", "count"])
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self):
        return [{"two_n": a, "filter": f, "count": c} for a, f, c in self.rows]


def census_table(two_ns, filters=("all",)):
    return CensusTable(tuple((t, f, census(t, f)) for t in two_ns for f in filters))
