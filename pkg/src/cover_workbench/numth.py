"""Integer arithmetic primitives: factorization, divisors, valuations, CRT.

Everything here is a pure function on plain ints.  Factorization is trial
division; all intended workloads are tiny (moduli and lcms below 10^7), so
simplicity wins over speed.  Inputs above 2^63 - 1 are rejected outright:
the workbench treats its quantities as 64-bit conceptually and refuses to
silently chew on anything larger.
"""

from __future__ import annotations

from math import gcd, isqrt

# (prime, exponent) pairs, primes strictly increasing, exponents >= 1
Factorization = tuple[tuple[int, int], ...]

MAX_INPUT = 2**63 - 1


def _check_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")
    if n > MAX_INPUT:
        raise ValueError(f"{what}={n} exceeds the 64-bit input bound")


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1 as (prime, exponent) pairs.

    factorize(1) is the empty tuple.
    """
    _check_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                e += 1
                n //= d
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    r = isqrt(p)
    while d <= r:
        if p % d == 0:
            return False
        d += 2
    return True


def valuation(p: int, n: int) -> int:
    """Largest e with p^e dividing n.  Rejects non-prime p."""
    _check_positive(n)
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    e = 0
    while n % p == 0:
        e += 1
        n //= p
    return e


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def divisors_at_least(n: int, m: int) -> list[int]:
    """Divisors d of n with d >= m, ascending (includes n itself when n >= m)."""
    _check_positive(n)
    _check_positive(m, "m")
    return [d for d in divisors(n) if d >= m]


def largest_prime_factor(n: int) -> int:
    f = factorize(n)
    if not f:
        raise ValueError("n=1 has no prime factor")
    return f[-1][0]


def primes_up_to(bound: int) -> list[int]:
    """Primes <= bound by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, bound + 1, p))
    return [p for p in range(bound + 1) if sieve[p]]


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def crt_solve(pairs) -> tuple[int, int] | None:
    """Solve the simultaneous congruences x = r_i (mod m_i).

    Returns (r, M) with M = lcm of the moduli and 0 <= r < M, or None when
    the system is inconsistent.  Non-coprime moduli are handled (the gcd
    compatibility condition is checked pair by pair while folding).
    """
    r1, m1 = 0, 1
    for r2, m2 in pairs:
        _check_positive(m2, "modulus")
        r2 %= m2
        g = gcd(m1, m2)
        if (r2 - r1) % g != 0:
            return None
        n1, n2 = m1 // g, m2 // g
        M = m1 * n2
        # r = r1 + m1 * t with t chosen so r = r2 (mod m2)
        t = ((r2 - r1) // g * pow(n1, -1, n2)) % n2
        r1, m1 = (r1 + m1 * t) % M, M
    return r1, m1
