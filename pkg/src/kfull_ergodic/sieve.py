"""Sieve-backed multiplicative arithmetic.

Smallest-prime-factor tables up to a bound, and the derived quantities the
rest of the library runs on: Omega(n) (prime factors with multiplicity),
the squarefree indicator mu^2(n), the Liouville function (-1)^Omega(n), and
exact factorizations.  All bulk tables are built with vectorized numpy
passes; single-value queries walk the spf table directly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FactorSieve",
    "OmegaTable",
    "ArithTables",
    "build_sieve",
    "build_omega_table",
    "squarefree_mask",
    "shared_tables",
    "factorize",
    "omega",
    "mu_squared",
    "liouville",
    "omega_of_int",
]

# spf entries are int32, so 4 bytes per table slot; a sieve to 10**8 costs
# ~400 MB.  int32 also caps the direct sieve below 2**31, which is enough:
# the k-full machinery only ever sieves up to N**(1/k).
_SPF_DTYPE = np.int32
_SPF_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class FactorSieve:
    """Smallest-prime-factor table for 2..limit.

    spf[n] is the least prime dividing n (spf[0] = spf[1] = 0).  The array
    is immutable by convention once built and safe to share across threads.
    """

    limit: int
    spf: np.ndarray

    def prime_count(self) -> int:
        return int(np.count_nonzero(self.spf[2:] == np.arange(2, self.limit + 1)))

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending."""
        idx = np.arange(2, self.limit + 1, dtype=_SPF_DTYPE)
        return idx[self.spf[2:] == idx]


@dataclass(frozen=True)
class OmegaTable:
    """omega[n] = Omega(n) for 1 <= n <= limit, stored as uint8.

    Omega(n) <= 60 for n < 2**60, so a byte per entry always suffices.
    """

    limit: int
    omega: np.ndarray


def build_sieve(limit: int) -> FactorSieve:
    """Build the smallest-prime-factor table for 2..limit.

    Memory: 4*(limit+1) bytes.  Deterministic; the composite-marking order
    guarantees spf[n] is the least prime factor.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > _SPF_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds the int32 cap {_SPF_LIMIT}")
    try:
        spf = np.zeros(limit + 1, dtype=_SPF_DTYPE)
    except MemoryError as exc:
        raise MemoryError(
            f"cannot allocate spf table to {limit}: ~{4 * (limit + 1)} bytes"
        ) from exc
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    rest = np.flatnonzero(spf[2:] == 0).astype(_SPF_DTYPE) + 2
    spf[rest] = rest
    return FactorSieve(limit, spf)


def build_omega_table(sieve: FactorSieve, limit: int | None = None) -> OmegaTable:
    """Tabulate Omega(n) for n <= limit by vectorized repeated spf division."""
    lim = sieve.limit if limit is None else limit
    if not 2 <= lim <= sieve.limit:
        raise ValueError(f"omega table limit {lim} outside sieve range")
    counts = np.zeros(lim + 1, dtype=np.uint8)
    idx = np.arange(2, lim + 1, dtype=_SPF_DTYPE)
    val = idx.copy()
    spf = sieve.spf
    while idx.size:
        counts[idx] += 1
        val = val // spf[val]
        alive = val > 1
        idx = idx[alive]
        val = val[alive]
    return OmegaTable(lim, counts)


def squarefree_mask(sieve: FactorSieve, limit: int | None = None) -> np.ndarray:
    """Boolean mask over 0..limit with mask[n] = (mu^2(n) == 1); mask[0] False."""
    lim = sieve.limit if limit is None else limit
    if not 2 <= lim <= sieve.limit:
        raise ValueError(f"mask limit {lim} outside sieve range")
    mask = np.ones(lim + 1, dtype=bool)
    mask[0] = False
    spf = sieve.spf
    for p in range(2, math.isqrt(lim) + 1):
        if spf[p] == p:
            mask[p * p :: p * p] = False
    return mask


def _check_range(sieve: FactorSieve, n: int) -> None:
    if not 1 <= n <= sieve.limit:
        raise ValueError(f"n={n} outside sieve range [1, {sieve.limit}]")


def factorize(sieve: FactorSieve, n: int) -> list[tuple[int, int]]:
    """Sorted (prime, exponent) pairs with product n; empty for n = 1."""
    _check_range(sieve, n)
    out: list[tuple[int, int]] = []
    spf = sieve.spf
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def omega(sieve: FactorSieve, n: int) -> int:
    """Omega(n): number of prime factors counted with multiplicity."""
    _check_range(sieve, n)
    spf = sieve.spf
    count = 0
    while n > 1:
        n //= int(spf[n])
        count += 1
    return count


def mu_squared(sieve: FactorSieve, n: int) -> int:
    """1 if n is squarefree, else 0."""
    _check_range(sieve, n)
    spf = sieve.spf
    while n > 1:
        p = int(spf[n])
        n //= p
        if n % p == 0:
            return 0
    return 1


def liouville(sieve: FactorSieve, n: int) -> int:
    """Liouville function (-1)**Omega(n)."""
    return -1 if omega(sieve, n) & 1 else 1


def omega_of_int(n: int) -> int:
    """Omega(n) by trial division, for values outside any sieve (n >= 1)."""
    if n < 1:
        raise ValueError(f"omega_of_int needs n >= 1, got {n}")
    count = 0
    for p in (2, 3):
        while n % p == 0:
            n //= p
            count += 1
    p = 5
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 2 if p % 6 == 5 else 4
    if n > 1:
        count += 1
    return count


@dataclass(frozen=True)
class ArithTables:
    """The sieve plus its derived bulk tables, shared across the library."""

    limit: int
    sieve: FactorSieve
    omega: np.ndarray  # uint8, omega[n] = Omega(n)
    squarefree: np.ndarray  # bool, squarefree[n] = (mu^2(n) == 1)


_TABLE_LOCK = threading.Lock()
_TABLE_CACHE: list[ArithTables] = []


def shared_tables(limit: int) -> ArithTables:
    """Return tables covering at least 1..limit, reusing the largest built.

    The cached tables may extend beyond the requested limit; callers slice
    to the range they need.  Tables are prefix-consistent, so reuse is safe.
    """
    limit = max(limit, 2)
    with _TABLE_LOCK:
        if _TABLE_CACHE and _TABLE_CACHE[0].limit >= limit:
            return _TABLE_CACHE[0]
        sieve = build_sieve(limit)
        tab = ArithTables(
            limit,
            sieve,
            build_omega_table(sieve).omega,
            squarefree_mask(sieve),
        )
        _TABLE_CACHE.clear()
        _TABLE_CACHE.append(tab)
        return tab
