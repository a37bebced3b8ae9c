"""Dirichlet characters of odd modulus with exact cyclotomic values.

The unit group mod an odd d splits over the odd prime-power factors,
each cyclic with a fixed canonical generator (the smallest primitive
root, lifted).  A character is the tuple of exponents on those
generators, which makes enumeration O(phi(d)), conductor computation a
per-factor divisibility test, and all values exact roots of unity.

Values of order <= 2 come back as plain Fractions so quadratic-character
sums stay in Q; higher orders are CyclotomicRational of the character's
order.  A fixed correspondence (canonical root of unity of order m
dividing p-1  <->  Teichmuller lift of the canonical primitive root)
embeds those values into Z_p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm

from .cyclotomic import CyclotomicRational
from .ntheory import euler_phi, factorize, int_valuation, is_prime, primitive_root
from .padic import Padic, int_mod_to_padic, teichmuller_lift


class EmbeddingError(ValueError):
    """Character values cannot be realized in the requested p-adic field."""


@dataclass(frozen=True)
class CrtFactor:
    prime: int
    exp: int
    pp: int      # prime**exp
    gen: int     # canonical generator of the cyclic unit group mod pp
    order: int   # phi(pp)


@lru_cache(maxsize=None)
def group_structure(d: int) -> tuple[CrtFactor, ...]:
    if d < 1:
        raise ValueError("modulus must be >= 1")
    if d % 2 == 0:
        raise ValueError(f"even modulus {d} is not supported (odd moduli only)")
    out = []
    for p, k in sorted(factorize(d).items()):
        pp = p**k
        out.append(CrtFactor(p, k, pp, primitive_root(pp), euler_phi(pp)))
    return tuple(out)


@lru_cache(maxsize=None)
def _dlog_table(pp: int, gen: int) -> dict[int, int]:
    table = {}
    x = 1
    for e in range(euler_phi(pp)):
        table[x] = e
        x = x * gen % pp
    return table


def _root_power(order: int, e: int):
    """Canonical root of unity of the given order raised to e."""
    e %= order
    if order == 1:
        return Fraction(1)
    if order == 2:
        return Fraction(-1) if e else Fraction(1)
    return CyclotomicRational.root(order, e)


@dataclass(frozen=True)
class DirichletCharacter:
    """Character of the unit group mod an odd d, as exponents on CRT generators."""

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        factors = group_structure(self.modulus)
        if len(self.exponents) != len(factors):
            raise ValueError("one exponent per CRT factor required")
        object.__setattr__(
            self,
            "exponents",
            tuple(e % f.order for e, f in zip(self.exponents, factors)),
        )

    @property
    def factors(self) -> tuple[CrtFactor, ...]:
        return group_structure(self.modulus)

    @cached_property
    def order(self) -> int:
        o = 1
        for e, f in zip(self.exponents, self.factors):
            o = lcm(o, f.order // gcd(f.order, e))
        return o

    @cached_property
    def conductor(self) -> int:
        """Smallest modulus through which the character factors."""
        f = 1
        for e, fac in zip(self.exponents, self.factors):
            if e:
                # trivial on 1 + p^j classes iff p^(k-j) divides e
                f *= fac.prime ** (fac.exp - int_valuation(e, fac.prime))
        return f

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __call__(self, a: int):
        a = a % self.modulus if self.modulus > 1 else 0
        if self.modulus > 1 and gcd(a, self.modulus) != 1:
            return Fraction(0)
        big = 1
        for f in self.factors:
            big = lcm(big, f.order)
        t = 0
        for e, f in zip(self.exponents, self.factors):
            t += e * _dlog_table(f.pp, f.gen)[a % f.pp] * (big // f.order)
        m = self.order
        return _root_power(m, (t % big) * m // big)

    def multiply(self, other: "DirichletCharacter") -> "DirichletCharacter":
        """Pointwise product, as a character mod lcm of the moduli."""
        m = lcm(self.modulus, other.modulus)
        a = self.extended_to(m)
        b = other.extended_to(m)
        return DirichletCharacter(
            m, tuple(x + y for x, y in zip(a.exponents, b.exponents))
        )

    def extended_to(self, new_modulus: int) -> "DirichletCharacter":
        if new_modulus % self.modulus:
            raise ValueError("can only extend to a multiple of the modulus")
        exps = []
        for f in group_structure(new_modulus):
            if self.modulus % f.prime:
                exps.append(0)
                continue
            i, old = next(
                (i, g) for i, g in enumerate(self.factors) if g.prime == f.prime
            )
            # value at the new canonical generator, rewritten to the new order
            l = _dlog_table(old.pp, old.gen)[f.gen % old.pp]
            exps.append(self.exponents[i] * l * (f.order // old.order))
        return DirichletCharacter(new_modulus, tuple(exps))

    def primitive_part(self) -> "DirichletCharacter":
        """The primitive character (mod the conductor) inducing this one."""
        cond = self.conductor
        exps = []
        for e, f in zip(self.exponents, self.factors):
            if cond % f.prime:
                continue
            j = f.exp - int_valuation(e, f.prime)
            newf = next(g for g in group_structure(cond) if g.prime == f.prime)
            # the old generator reduces to a generator mod p^j; rewrite the
            # exponent relative to the canonical generator there
            l = _dlog_table(newf.pp, newf.gen)[f.gen % newf.pp]
            exps.append((e // f.prime ** (f.exp - j)) * pow(l, -1, newf.order))
        return DirichletCharacter(cond, tuple(exps))

    def serialize(self) -> dict:
        return {
            "modulus": self.modulus,
            "generator_list": [f.gen for f in self.factors],
            "exponent_list": list(self.exponents),
            "order": self.order,
            "conductor": self.conductor,
        }

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, exponents {self.exponents})"


def trivial_character(d: int = 1) -> DirichletCharacter:
    return DirichletCharacter(d, tuple(0 for _ in group_structure(d)))


def enumerate_characters(d: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod odd d, in deterministic lexicographic order."""
    factors = group_structure(d)
    return [
        DirichletCharacter(d, exps)
        for exps in itertools.product(*(range(f.order) for f in factors))
    ]


def char_value(chi: DirichletCharacter, a: int):
    return chi(a)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def primitive_part(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.primitive_part()


# -- p-adic embedding -----------------------------------------------------


def embed_cyclotomic(value, p: int, prec: int) -> Padic:
    """Embed an exact character value into Z_p.

    Uses the fixed correspondence sending the canonical root of unity of
    order m (m must divide p-1) to teichmuller(g)^((p-1)/m), with g the
    canonical primitive root mod p.  This is a ring homomorphism on each
    cyclotomic field of order dividing p-1 and is compatible across
    orders.
    """
    if isinstance(value, (int, Fraction)):
        return Padic.from_rational(Fraction(value), p, prec)
    if not isinstance(value, CyclotomicRational):
        raise TypeError(f"cannot embed {type(value).__name__}")
    m = value.order
    if (p - 1) % m:
        raise EmbeddingError(f"order {m} does not divide p - 1 = {p - 1}")
    g = primitive_root(p)
    mod = p**prec
    root = pow(teichmuller_lift(g, p, prec), (p - 1) // m, mod)
    acc = 0
    for c in reversed(value.coeffs):
        cc = (c.numerator * pow(c.denominator, -1, mod)) % mod
        acc = (acc * root + cc) % mod
    return int_mod_to_padic(acc, p, prec)


class EmbeddedCharacter:
    """A character evaluated in Z_p at fixed precision (order must divide p-1)."""

    def __init__(self, chi: DirichletCharacter, p: int, prec: int):
        if not is_prime(p) or p == 2:
            raise ValueError("p must be an odd prime")
        if (p - 1) % chi.order:
            raise EmbeddingError(
                f"character order {chi.order} does not divide p - 1 = {p - 1}"
            )
        self.chi = chi
        self.p = p
        self.prec = prec
        self.modulus = chi.modulus
        self._cache: dict[int, Padic] = {}

    def __call__(self, a: int) -> Padic:
        r = a % self.modulus if self.modulus > 1 else 0
        v = self._cache.get(r)
        if v is None:
            v = embed_cyclotomic(self.chi(r), self.p, self.prec)
            self._cache[r] = v
        return v


def omega_character(p: int) -> DirichletCharacter:
    """The mod-p character matching the Teichmuller lift under the fixed embedding."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    return DirichletCharacter(p, (1,))


@dataclass(frozen=True)
class OmegaTwist:
    """The twist chi * omega^(-power), evaluated pointwise mod lcm(d, p).

    The modulus always keeps the factor p, so evaluation at any multiple
    of p gives 0, even when the exponent -power reduces to 0 mod p-1.
    """

    base: DirichletCharacter
    p: int
    power: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")

    @property
    def modulus(self) -> int:
        return lcm(self.base.modulus, self.p)

    @property
    def omega_exponent(self) -> int:
        return (-self.power) % (self.p - 1)

    @cached_property
    def as_character(self) -> DirichletCharacter:
        """The pointwise product as an exact character mod lcm(d, p)."""
        om_pow = DirichletCharacter(self.p, (self.omega_exponent,))
        return self.base.multiply(om_pow)

    def primitive(self) -> DirichletCharacter:
        return self.as_character.primitive_part()

    def __call__(self, a: int):
        return self.as_character(a)

    def value_padic(self, a: int, prec: int) -> Padic:
        """chi(a) * teichmuller(a)^(-power) in Z_p (0 when gcd(a, d*p) > 1)."""
        return embed_cyclotomic(self.as_character(a), self.p, prec)


def twist_by_omega(chi: DirichletCharacter, p: int, n: int) -> OmegaTwist:
    return OmegaTwist(chi, p, n)
