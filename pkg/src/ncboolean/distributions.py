"""Finitely supported distributions with rational or quadratic-surd atoms."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .cumulants import MomentSequence, to_fraction
from .errors import DomainError, InputError


def _squarefree(r):
    """Write r = k^2 * q with q squarefree; return (k, q)."""
    k, q, d = 1, r, 2
    while d * d <= q:
        while q % (d * d) == 0:
            q //= d * d
            k *= d
        d += 1
    return k, q


@dataclass(frozen=True)
class QuadraticSurd:
    """rational + coeff * sqrt(radicand) with a squarefree radicand (1 means rational)."""

    rational: Fraction
    coeff: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        r = int(self.radicand)
        if r < 1:
            raise InputError("radicand must be a positive integer")
        k, q = _squarefree(r)
        rat, co = to_fraction(self.rational), to_fraction(self.coeff) * k
        if q == 1:
            rat, co = rat + co, Fraction(0)
        if co == 0:
            q = 1
        object.__setattr__(self, "rational", rat)
        object.__setattr__(self, "coeff", co)
        object.__setattr__(self, "radicand", q)

    @classmethod
    def parse(cls, text):
        """Accept 'p/q', 's*sqrt(r)', 'sqrt(r)' and '-sqrt(r)'."""
        t = text.strip().replace("−", "-").replace(" ", "")
        m = re.fullmatch(r"([+-]?)(?:([0-9/]+)\*)?sqrt\(([0-9]+)\)", t)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            s = to_fraction(m.group(2)) if m.group(2) else Fraction(1)
            return cls(Fraction(0), sign * s, int(m.group(3)))
        if "sqrt" in t:
            raise InputError(f"cannot parse location {text!r}")
        return cls(to_fraction(t))

    def __mul__(self, other):
        if self.radicand != other.radicand and self.coeff and other.coeff:
            raise InputError("cannot multiply surds with different radicands")
        r = self.radicand if self.coeff else other.radicand
        return QuadraticSurd(
            self.rational * other.rational + self.coeff * other.coeff * r,
            self.rational * other.coeff + self.coeff * other.rational,
            r,
        )

    def __float__(self):
        return float(self.rational) + float(self.coeff) * self.radicand ** 0.5

    def __str__(self):
        if not self.coeff:
            return str(self.rational)
        s = f"{self.coeff}*sqrt({self.radicand})"
        return s if not self.rational else f"{self.rational}+{s}"


@dataclass(frozen=True)
class AtomicDistribution:
    atoms: tuple  # (QuadraticSurd location, Fraction weight)

    def __post_init__(self):
        atoms = []
        for loc, w in self.atoms:
            loc = loc if isinstance(loc, QuadraticSurd) else QuadraticSurd(to_fraction(loc))
            w = to_fraction(w)
            if w <= 0:
                raise InputError(f"weights must be positive, got {w}")
            atoms.append((loc, w))
        if not atoms:
            raise InputError("a distribution needs at least one atom")
        if sum(w for _, w in atoms) != 1:
            raise InputError("weights must sum to 1")
        object.__setattr__(self, "atoms", tuple(atoms))

    @classmethod
    def parse(cls, text):
        """Parse 'loc:weight,loc:weight,...'."""
        atoms = []
        for part in text.split(","):
            if ":" not in part:
                raise InputError(f"expected location:weight, got {part!r}")
            loc, w = part.rsplit(":", 1)
            atoms.append((QuadraticSurd.parse(loc), to_fraction(w)))
        return cls(tuple(atoms))

    def moments(self, order):
        """m_1..m_order; the irrational parts must cancel."""
        out = []
        powers = [QuadraticSurd(Fraction(1)) for _ in self.atoms]
        for _ in range(order):
            rat = Fraction(0)
            irr = {}
            for t, (loc, w) in enumerate(self.atoms):
                powers[t] = powers[t] * loc
                rat += w * powers[t].rational
                if powers[t].coeff:
                    irr[powers[t].radicand] = irr.get(powers[t].radicand, Fraction(0)) + w * powers[t].coeff
            if any(irr.values()):
                raise DomainError("moments of this distribution are not rational")
            out.append(rat)
        return MomentSequence(tuple(out))

    def eta(self, order):
        from .series import eta_from_moments

        return eta_from_moments(self.moments(order))
