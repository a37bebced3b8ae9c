"""Small integer number-theory helpers shared across the package."""
from __future__ import annotations

from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, k in factorize(n).items():
        ds = [d * p**j for d in ds for j in range(k + 1)]
    return sorted(ds)


def euler_phi(n: int) -> int:
    phi = 1
    for p, k in factorize(n).items():
        phi *= p ** (k - 1) * (p - 1)
    return phi


def int_valuation(n: int, p: int) -> int:
    """v_p(n) for a nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def primitive_root(pp: int) -> int:
    """Smallest primitive root modulo an odd prime power pp.

    Deterministic choice: the smallest primitive root g modulo p, bumped
    to g + p in the rare case g^(p-1) = 1 mod p^2 (so it lifts to all
    higher powers of p).
    """
    fac = factorize(pp)
    if len(fac) != 1:
        raise ValueError(f"{pp} is not a prime power")
    (p, k), = fac.items()
    if p == 2:
        raise ValueError("even moduli are not supported")
    phi = p - 1
    qs = list(factorize(phi))
    g = 2
    while any(pow(g, phi // q, p) == 1 for q in qs):
        g += 1
    if k > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g
