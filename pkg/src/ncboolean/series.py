"""Truncated power series over the rationals and the eta-series fixed-point systems."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cumulants import FreeModel, MomentSequence, fraction_str, joint_boolean_vnrp, to_fraction
from .errors import DomainError, InputError, PreconditionError, SolverError


class RationalSeries:
    """c_0 + c_1 z + ... + c_N z^N with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = tuple(to_fraction(x) for x in coeffs)
        if not c:
            raise InputError("a series needs at least a constant term")
        self.coeffs = c

    @classmethod
    def _raw(cls, coeffs):
        s = cls.__new__(cls)
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order):
        return cls._raw((Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order):
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order):
        return cls._raw((to_fraction(c),) + (Fraction(0),) * order)

    @classmethod
    def z(cls, order):
        c = [Fraction(0)] * (order + 1)
        if order >= 1:
            c[1] = Fraction(1)
        return cls._raw(c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RationalSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalSeries({[fraction_str(c) for c in self.coeffs]})"

    def resize(self, order):
        """Truncate, or pad with zero coefficients, to the given order."""
        c = self.coeffs[: order + 1]
        return RationalSeries._raw(c + (Fraction(0),) * (order + 1 - len(c)))

    def truncate(self, order):
        if order > self.order:
            raise InputError(f"cannot truncate order {self.order} to {order}")
        return RationalSeries._raw(self.coeffs[: order + 1])

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __add__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries.constant(other, self.order)
        n = min(len(self), len(other))
        return RationalSeries._raw(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            c = to_fraction(other)
            return RationalSeries._raw(tuple(c * x for x in self.coeffs))
        n = min(len(self), len(other))
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return RationalSeries._raw(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by z^k, keeping the order."""
        return RationalSeries._raw((Fraction(0),) * k + self.coeffs[: len(self) - k])

    def compose(self, g):
        """self(g(z)) for g with zero constant term (Horner scheme)."""
        if g.coeffs[0]:
            raise DomainError("composition needs an inner series without constant term")
        n = min(self.order, g.order)
        g = g.resize(n)
        out = RationalSeries.constant(self.coeffs[n] if n <= self.order else 0, n)
        for k in range(n - 1, -1, -1):
            out = out * g + self.coeffs[k]
        return out

    def halve_degrees(self):
        """Substitute z^2 -> z; every odd coefficient must vanish."""
        odd = [k for k in range(1, len(self), 2) if self.coeffs[k]]
        if odd:
            raise PreconditionError(f"series has non-zero odd coefficients at degrees {odd}")
        return RationalSeries._raw(self.coeffs[::2])

    def is_even(self):
        return not any(self.coeffs[1::2])

    def to_json(self):
        return {"order": self.order, "coefficients": [fraction_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        s = cls(data["coefficients"])
        if "order" in data and data["order"] != s.order:
            raise InputError("order field disagrees with the coefficient list")
        return s


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def scalar_mul(c, f):
    return f * to_fraction(c)


def geometric_inverse(f):
    """(1 - f)^{-1} for f without constant term."""
    if f.coeffs[0]:
        raise PreconditionError("geometric inverse needs a zero constant term")
    n = f.order
    h = [Fraction(0)] * (n + 1)
    h[0] = Fraction(1)
    c = f.coeffs
    for k in range(1, n + 1):
        h[k] = sum((c[j] * h[k - j] for j in range(1, k + 1) if c[j]), Fraction(0))
    return RationalSeries._raw(h)


def reciprocal(f):
    """1/f for f with non-zero constant term."""
    c0 = f.coeffs[0]
    if not c0:
        raise PreconditionError("reciprocal needs a non-zero constant term")
    return geometric_inverse(RationalSeries._raw((Fraction(0),) + tuple(-x / c0 for x in f.coeffs[1:]))) * (1 / c0)


def _rational_sqrt(q):
    if q < 0:
        raise DomainError(f"negative constant term {q}")
    p, d = q.numerator, q.denominator
    rp, rd = isqrt(p), isqrt(d)
    if rp * rp != p or rd * rd != d:
        raise DomainError(f"constant term {q} is not the square of a rational")
    return Fraction(rp, rd)


def sqrt(f):
    """The series square root with non-negative rational constant term."""
    r0 = _rational_sqrt(f.coeffs[0])
    n = f.order
    if r0 == 0:
        if f.is_zero():
            return RationalSeries.zero(n)
        v = f.valuation()
        if v % 2:
            raise DomainError("series has odd valuation and no square root")
        inner = sqrt(RationalSeries._raw(f.coeffs[v:]).resize(n))
        return inner.shift(v // 2)
    s = [Fraction(0)] * (n + 1)
    s[0] = r0
    c = f.coeffs
    for k in range(1, n + 1):
        acc = c[k] - sum((s[j] * s[k - j] for j in range(1, k)), Fraction(0))
        s[k] = acc / (2 * r0)
    return RationalSeries._raw(s)


# ---------------------------------------------------------------- eta <-> moments


def eta_from_moments(m):
    """eta = M / (1 + M) with M = sum_{n>=1} m_n z^n."""
    M = RationalSeries((0, *m.values))
    return M * reciprocal(M + 1)


def moments_from_eta(eta):
    """Moments from M = eta / (1 - eta)."""
    if eta.coeffs[0]:
        raise PreconditionError("eta series must have zero constant term")
    M = eta * geometric_inverse(eta)
    return MomentSequence(M.coeffs[1:])


def eta_from_boolean(beta):
    return RationalSeries((0, *beta.values))


# ---------------------------------------------------------------- 2x2 matrices


class SeriesMatrix:
    """A 2x2 matrix of series; rows and columns indexed by ``symbols`` such as ('a', 'a*')."""

    __slots__ = ("entries", "symbols")

    def __init__(self, entries, symbols=("a", "a*")):
        (e00, e01), (e10, e11) = entries
        es = (e00, e01, e10, e11)
        if len({e.order for e in es}) != 1:
            raise InputError("matrix entries must share one order")
        self.entries = es
        self.symbols = tuple(symbols)

    @classmethod
    def identity(cls, order, symbols=("a", "a*")):
        o, z = RationalSeries.one(order), RationalSeries.zero(order)
        return cls(((o, z), (z, o)), symbols)

    @classmethod
    def zero(cls, order, symbols=("a", "a*")):
        z = RationalSeries.zero(order)
        return cls(((z, z), (z, z)), symbols)

    @property
    def order(self):
        return self.entries[0].order

    def entry(self, row, col):
        """Entry by symbol, e.g. ``F.entry('a', 'a*')``."""
        try:
            i, j = self.symbols.index(row), self.symbols.index(col)
        except ValueError:
            raise InputError(f"symbols must be in {self.symbols}") from None
        return self.entries[2 * i + j]

    def __eq__(self, other):
        return isinstance(other, SeriesMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        return SeriesMatrix(_pairs(tuple(x + y for x, y in zip(self.entries, other.entries))), self.symbols)

    def __mul__(self, other):
        if isinstance(other, SeriesMatrix):
            a, b, c, d = self.entries
            e, f, g, h = other.entries
            return SeriesMatrix(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), self.symbols)
        return SeriesMatrix(_pairs(tuple(x * other for x in self.entries)), self.symbols)

    __rmul__ = __mul__

    def map(self, fn):
        return SeriesMatrix(_pairs(tuple(fn(x) for x in self.entries)), self.symbols)

    def resize(self, order):
        return self.map(lambda x: x.resize(order))

    def to_json(self):
        s = self.symbols
        return {f"{s[i]},{s[j]}": self.entries[2 * i + j].to_json()["coefficients"] for i in range(2) for j in range(2)}

    def __repr__(self):
        return f"SeriesMatrix({self.to_json()})"


def _pairs(es):
    return ((es[0], es[1]), (es[2], es[3]))


def _matrix_poly(coeffs, X, order, symbols):
    """sum_k coeffs[k] X^k by Horner, for X with zero constant terms."""
    eye = SeriesMatrix.identity(order, symbols)
    top = min(len(coeffs) - 1, order)
    acc = eye * coeffs[top] if top >= 0 else SeriesMatrix.zero(order, symbols)
    for k in range(top - 1, -1, -1):
        acc = X * acc + eye * coeffs[k]
    return acc


def eta_matrix_apply(eta, H, scaled=True):
    """eta(zH) = sum_n beta_n z^n H^n; with ``scaled=False``, eta(H) for H without constant terms."""
    if eta.coeffs[0]:
        raise DomainError("eta series must have zero constant term")
    order = min(eta.order, H.order)
    H = H.resize(order)
    X = H.map(lambda x: x.shift(1)) if scaled else H
    if any(e.coeffs[0] for e in X.entries):
        raise DomainError("matrix argument has a non-zero constant term")
    return X * _matrix_poly(eta.coeffs[1:], X, order, H.symbols)


def f_matrix(eta, H):
    """sum_{n>=1} beta_n z^n H^{n-1}; multiplying by H on the right gives eta(zH)."""
    order = H.order
    X = H.map(lambda x: x.shift(1))
    return _matrix_poly(eta.resize(order).coeffs[1:], X, order, H.symbols).map(lambda x: x.shift(1))


# ---------------------------------------------------------------- anticommutator systems


def _h_a(Fb):
    """H_a built from the entries of F_b (symbols b, b*)."""
    bb, bbs, bsb, bsbs = Fb.entries
    g = geometric_inverse(bsb)
    return SeriesMatrix(((bb * g, bbs + bb * g * bsbs), (g, g * bsbs)), ("a", "a*"))


def _h_b(Fa):
    aa, aas, asa, asas = Fa.entries
    g = geometric_inverse(aas)
    return SeriesMatrix(((g * aa, g), (asa + asas * g * aa, asas * g)), ("b", "b*"))


def _eta_pieces(Fa, Fb):
    aa, aas, asa, asas = Fa.entries
    bb, bbs, bsb, bsbs = Fb.entries
    g = geometric_inverse(bbs * asa)
    return (
        aa * g * bb,
        aas + aa * g * bbs * asas,
        bsb + bsbs * g * asa * bb,
        bsbs * g * asas,
    )


def _check_eta(*etas):
    for e in etas:
        if not isinstance(e, RationalSeries):
            raise InputError("eta must be a RationalSeries")
        if e.coeffs[0]:
            raise PreconditionError("eta series must have zero constant term")


def _need(eta, work):
    if eta.order < work:
        raise InputError(f"eta series of order {eta.order} is too short; order {work} is needed")
    return eta.resize(work)


def _iterate(step, state, work):
    """Fixed point from zero with growing truncation, then two confirming passes at full order."""
    for t in range(1, work + 1):
        state = step(state, t)
    for _ in range(2):
        nxt = step(state, work)
        if nxt == state:
            return state, work + 1
        state = nxt
    raise SolverError("fixed-point iteration did not stabilise")


@dataclass(frozen=True)
class AnticommutatorSolution:
    F_a: SeriesMatrix
    F_b: SeriesMatrix | None
    eta_z2: RationalSeries  # eta of ab + ba in the variable z^2, before substitution
    eta_ac: RationalSeries
    iterations: int


def solve_anticommutator_general(eta_a, eta_b, order):
    """Solve F_a H_a = eta_a(z H_a), F_b H_b = eta_b(z H_b) and read off eta of ab + ba to ``order``."""
    _check_eta(eta_a, eta_b)
    work = 2 * order
    ea, eb = _need(eta_a, work), _need(eta_b, work)

    def step(state, t):
        Fa, Fb = (m.resize(t) for m in state)
        return (f_matrix(ea.resize(t), _h_a(Fb)), f_matrix(eb.resize(t), _h_b(Fa)))

    init = (SeriesMatrix.zero(0, ("a", "a*")), SeriesMatrix.zero(0, ("b", "b*")))
    (Fa, Fb), its = _iterate(step, init, work)
    p = _eta_pieces(Fa, Fb)
    eta_z2 = p[0] + p[1] + p[2] + p[3]
    return AnticommutatorSolution(Fa, Fb, eta_z2, eta_z2.halve_degrees(), its)


def _same_fb(Fa):
    """F_b in terms of F_a when a and b share a distribution."""
    aa, aas, asa, asas = Fa.entries
    return SeriesMatrix(((asas, asa), (aas, aa)), ("b", "b*"))


def solve_anticommutator_same(eta, order):
    """Single-matrix system for a and b with the same distribution."""
    _check_eta(eta)
    work = 2 * order
    e = _need(eta, work)

    def step(Fa, t):
        return f_matrix(e.resize(t), _h_a(_same_fb(Fa.resize(t))))

    Fa, its = _iterate(step, SeriesMatrix.zero(0), work)
    aa, aas, asa, asas = Fa.entries
    eta_z2 = (aas + aa * asas * geometric_inverse(asa)) * 2
    return AnticommutatorSolution(Fa, None, eta_z2, eta_z2.halve_degrees(), its)


@dataclass(frozen=True)
class SymmetricSolution:
    f: dict  # keys like ('a', 'a*'); diagonal entries are identically zero
    eta_z2: RationalSeries
    eta_ac: RationalSeries
    iterations: int


def _even_sum(eta, y):
    """sum_k beta_{2k+2} z^{2k+2} y^k, that is z^2 P(z^2 y)."""
    n = y.order
    coeffs = [eta.coeffs[2 * k + 2] if 2 * k + 2 <= eta.order else Fraction(0) for k in range(n + 1)]
    return RationalSeries._raw(coeffs).compose(y.shift(2)).shift(2)


def solve_symmetric(eta_a, eta_b, order):
    """Reduced system for symmetric a, b, where the diagonal f entries vanish."""
    _check_eta(eta_a, eta_b)
    for e in (eta_a, eta_b):
        if not e.is_even():
            raise PreconditionError("symmetric solver needs eta series with only even degrees")
    work = 2 * order
    ea, eb = _need(eta_a, work), _need(eta_b, work)

    def step(state, t):
        aas, asa, bbs, bsb = (x.resize(t) for x in state)
        ga, gb = geometric_inverse(aas), geometric_inverse(bsb)
        sa = _even_sum(ea.resize(t), bbs * gb)
        sb = _even_sum(eb.resize(t), ga * asa)
        return (bbs * sa, gb * sa, ga * sb, asa * sb)

    zero = RationalSeries.zero(0)
    (aas, asa, bbs, bsb), its = _iterate(step, (zero,) * 4, work)
    z = RationalSeries.zero(work)
    f = {("a", "a"): z, ("a", "a*"): aas, ("a*", "a"): asa, ("a*", "a*"): z,
         ("b", "b"): z, ("b", "b*"): bbs, ("b*", "b"): bsb, ("b*", "b*"): z}
    eta_z2 = aas + bsb
    return SymmetricSolution(f, eta_z2, eta_z2.halve_degrees(), its)


# ---------------------------------------------------------------- f-series oracle

_NEXT = {"a": ("b",), "b": ("a", "b*"), "b*": ("a*",), "a*": ("b*", "a")}
_FAMILY = {"a": "a", "a*": "a", "b": "b", "b*": "b"}
MAX_ORACLE_ORDER = 10


def admissible_words(l, l2, length):
    """Letter sequences of the given length from l to l2 along the transition automaton."""
    out = []

    def rec(word):
        if len(word) == length:
            if word[-1] == l2:
                out.append(tuple(word))
            return
        for nxt in _NEXT[word[-1]]:
            word.append(nxt)
            rec(word)
            word.pop()

    rec([l])
    return out


def f_series_oracle(model, l, l2, order):
    """Entry (l, l2) of F_a or F_b from Boolean cumulants of admissible words."""
    if l not in _NEXT or l2 not in _NEXT or _FAMILY[l] != _FAMILY[l2]:
        raise InputError(f"invalid symbol pair ({l}, {l2})")
    if order > MAX_ORACLE_ORDER:
        raise InputError(f"oracle order {order} exceeds the limit {MAX_ORACLE_ORDER}")
    if not isinstance(model, FreeModel) or model.s != 2 or model.order < order:
        raise InputError(f"need a two-variable model of order at least {order}")
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        for w in admissible_words(l, l2, k):
            coeffs[k] += joint_boolean_vnrp(model, "".join(_FAMILY[x] for x in w))
    return RationalSeries._raw(coeffs)


# ---------------------------------------------------------------- sum system


def solve_sum_eta(eta_a, eta_b, order):
    """eta of a + b from B_a = eta_a(z/(1-B_b)) (1-B_b) and the symmetric equation."""
    _check_eta(eta_a, eta_b)
    ea, eb = _need(eta_a, order), _need(eta_b, order)

    def side(e, other, t):
        one_minus = 1 - other
        return e.resize(t).compose(RationalSeries.z(t) * geometric_inverse(other)) * one_minus

    def step(state, t):
        Ba, Bb = (x.resize(t) for x in state)
        return (side(ea, Bb, t), side(eb, Ba, t))

    zero = RationalSeries.zero(0)
    (Ba, Bb), _ = _iterate(step, (zero, zero), order)
    return Ba + Bb
