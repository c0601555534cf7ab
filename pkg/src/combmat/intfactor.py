"""Integer factorization helpers for divisor enumeration.

Miller-Rabin with the fixed witness set (2, 3, ..., 37) is deterministic
for inputs below 3317044064679887385961981 (~3.3e24); larger inputs are
additionally tested against the first forty primes, which is probabilistic
in principle but has no known counterexample and an error bound far below
hardware fault rates.  Pollard's rho (Brent variant) splits composites with
deterministic parameter sweeps, so factorizations are reproducible.
"""

from __future__ import annotations

from math import gcd, isqrt

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139,
    149, 151, 157, 163, 167, 173,
)

_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_DETERMINISTIC_BASES
    if n >= _MR_DETERMINISTIC_LIMIT:
        bases = _SMALL_PRIMES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n, via Brent's cycle finding."""
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")  # unreachable for composite n


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; 0 and ±1 give {}."""
    n = abs(n)
    if n <= 1:
        return {}
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return factors


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|; requires n != 0."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    ds = [1]
    for p, e in prime_factors(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)
