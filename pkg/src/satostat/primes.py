"""Prime sieves, primality testing, and prime-power enumeration."""

import math

import numpy as np

from .errors import DomainError

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = None


def sieve_primes(limit):
    """All primes <= limit, ascending, as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _small_primes():
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = [int(p) for p in sieve_primes(1 << 16)]
    return _SMALL_PRIMES


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    n = int(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n):
    """Prime factorization {p: exponent} by trial division.

    Intended for the moderate sizes seen here (group orders near 1e6,
    prime-power indices); not a general-purpose factoring routine.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"cannot factorize {n}")
    out = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < (1 << 32) or is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            # square of a prime above the trial bound is the only other
            # shape reachable from our callers
            r = math.isqrt(n)
            if r * r == n and is_prime(r):
                out[r] = 2
            else:
                raise DomainError(f"cofactor {n} too hard for trial division")
    return out


def prime_power_split(j):
    """Return (p, m) with j = p^m, or None if j is not a prime power."""
    j = int(j)
    if j < 2:
        return None
    fs = factorize(j)
    if len(fs) != 1:
        return None
    ((p, m),) = fs.items()
    return p, m


def prime_powers_upto(x, primes=None):
    """All (j, p, m) with j = p^m <= x, m >= 1, sorted by j."""
    xi = int(math.floor(x))
    if primes is None:
        primes = sieve_primes(xi)
    out = [(int(p), int(p), 1) for p in primes[primes <= xi]]
    out.extend(higher_prime_powers_upto(xi, primes))
    out.sort()
    return out


def higher_prime_powers_upto(x, primes=None):
    """All (j, p, m) with j = p^m <= x and m >= 2, sorted by j."""
    xi = int(math.floor(x))
    root = math.isqrt(xi)
    if primes is None:
        primes = sieve_primes(root)
    out = []
    for p in primes:
        p = int(p)
        if p > root:
            break
        j, m = p * p, 2
        while j <= xi:
            out.append((j, p, m))
            j *= p
            m += 1
    out.sort()
    return out


def von_mangoldt_psi(x):
    """Classical summatory von Mangoldt function: sum of log p over p^m <= x."""
    if x < 2:
        return 0.0
    return math.fsum(math.log(p) for _, p, _ in prime_powers_upto(x))
