"""Witnesses of Honda's class-number criterion and their enumeration.

A witness (n, u, m, d) certifies that 3 divides the class number of the
real quadratic field Q(sqrt(d)): it satisfies 27*n^2 + d*u^2 = 4*m^3
exactly, with gcd(m, 3n) = 1, X^3 - m*X + n free of integer roots, and d
squarefree with d >= 2.  Enumeration sweeps an (m, n) box and lets the
squarefree decomposition of 4*m^3 - 27*n^2 discover u and d implicitly.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .intmath import (
    cubic_has_integer_root,
    icbrt,
    is_squarefree,
    squarefree_decompose,
)

__all__ = [
    "INTERMEDIATE_LIMIT",
    "REJECT_CUBIC",
    "REJECT_GCD",
    "REJECT_IDENTITY",
    "REJECT_SQUAREFREE",
    "ConfigurationError",
    "EnumConfig",
    "HondaWitness",
    "WitnessRejection",
    "WitnessedDiscriminant",
    "candidate_from_pair",
    "derived_m_max",
    "enumerate_discriminants",
    "read_witnesses_csv",
    "validate_witness",
    "write_witnesses_csv",
]

# Budget for the largest intermediate 4*m^3; keeps the hot loop inside a
# 128-bit word even though Python integers would not overflow.
INTERMEDIATE_LIMIT = 2**127 - 1

REJECT_IDENTITY = "identity"
REJECT_GCD = "gcd"
REJECT_CUBIC = "cubic-root"
REJECT_SQUAREFREE = "squarefree"


class ConfigurationError(ValueError):
    """A run configuration that must be rejected before any sweep starts."""


@dataclass(frozen=True)
class HondaWitness:
    """A validated criterion witness: 27*n^2 + d*u^2 = 4*m^3 with the
    gcd, cubic-root and squarefree side conditions all holding."""

    n: int
    u: int
    m: int
    d: int


@dataclass(frozen=True)
class WitnessRejection:
    """First failed validation condition, in the fixed order
    identity / gcd / cubic-root / squarefree."""

    reason: str
    detail: str


@dataclass(frozen=True)
class WitnessedDiscriminant:
    """A qualifying d together with its canonical witness, the
    lexicographically least (m, n, u) discovered for it."""

    d: int
    witness: HondaWitness


@dataclass(frozen=True)
class EnumConfig:
    """Search-box knobs for the (m, n) sweep.

    The m range is derived from the target bound X: every witness with
    u <= u_cap, n <= n_max and d <= X satisfies 4*m^3 <= X*u_cap^2 +
    27*n_max^2, which caps m.  The n sweep itself is not capped (all n
    with 27*n^2 < 4*m^3 are visited), so the box may well discover
    witnesses beyond that guaranteed sub-family.
    """

    u_cap: int = 4
    n_max: int = 32
    x_cap: int = 1_000_000
    workers: int = 1
    shortcut_only: bool = False


def candidate_from_pair(m: int, n: int) -> tuple[int, int] | None:
    """Solve the identity for (u, d) at a given (m, n), if possible.

    Returns the squarefree decomposition (u, d) of t = 4*m^3 - 27*n^2 when
    t >= 2, and None when t <= 1 (no d >= 2 can exist).  Side conditions
    are not checked here.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    t4 = 4 * m * m * m
    if t4 > INTERMEDIATE_LIMIT:
        raise OverflowError(f"4*m^3 exceeds the intermediate budget at m={m}")
    t = t4 - 27 * n * n
    if t <= 1:
        return None
    dec = squarefree_decompose(t)
    return dec.square_part, dec.squarefree_part


def validate_witness(n: int, u: int, m: int, d: int) -> HondaWitness | WitnessRejection:
    """Check the four witness invariants, reporting the first failure.

    Order: exact identity, gcd(m, 3n) = 1, no integer cubic root, then
    d squarefree and >= 2.
    """
    if min(n, u, m, d) < 1:
        raise ValueError("witness components must be positive")
    lhs = 27 * n * n + d * u * u
    rhs = 4 * m * m * m
    if lhs != rhs:
        return WitnessRejection(REJECT_IDENTITY, f"27*{n}^2 + {d}*{u}^2 = {lhs} != {rhs} = 4*{m}^3")
    g = math.gcd(m, 3 * n)
    if g != 1:
        return WitnessRejection(REJECT_GCD, f"gcd({m}, 3*{n}) = {g}")
    if cubic_has_integer_root(m, n):
        return WitnessRejection(REJECT_CUBIC, f"X^3 - {m}*X + {n} has an integer root")
    if d < 2 or not is_squarefree(d):
        return WitnessRejection(REJECT_SQUAREFREE, f"d = {d} is not a squarefree integer >= 2")
    return HondaWitness(n=n, u=u, m=m, d=d)


def derived_m_max(X: int, config: EnumConfig) -> int:
    """Largest m swept for bound X: 4*m^3 <= X*u_cap^2 + 27*n_max^2."""
    total = X * config.u_cap * config.u_cap + 27 * config.n_max * config.n_max
    return icbrt(total // 4)


def _check_sweep_config(X: int, config: EnumConfig) -> int:
    if X < 2:
        raise ValueError("X must be at least 2")
    if config.workers < 1:
        raise ConfigurationError("workers must be >= 1")
    if config.u_cap < 1 or config.n_max < 0:
        raise ConfigurationError("u_cap must be >= 1 and n_max >= 0")
    if X > config.x_cap:
        raise ConfigurationError(f"X={X} exceeds the enumeration cap {config.x_cap}")
    m_hi = derived_m_max(X, config)
    if 4 * m_hi * m_hi * m_hi > INTERMEDIATE_LIMIT:
        raise ConfigurationError(
            f"4*m^3 at m_max={m_hi} exceeds the 128-bit intermediate budget"
        )
    return m_hi


def _sweep_m_range(
    X: int, m_lo: int, m_hi: int, shortcut_only: bool
) -> dict[int, tuple[int, int, int]]:
    """Sweep m in [m_lo, m_hi], keeping the lex-least (m, n, u) per d <= X."""
    found: dict[int, tuple[int, int, int]] = {}
    for m in range(max(2, m_lo), m_hi + 1):
        t4 = 4 * m * m * m
        n_hi = math.isqrt((t4 - 1) // 27)
        for n in range(1, n_hi + 1):
            if shortcut_only and not (m % 3 == 1 and n % 3):
                continue
            if math.gcd(m, 3 * n) != 1:
                continue
            t = t4 - 27 * n * n
            if t < 2:
                continue
            dec = squarefree_decompose(t)
            d = dec.squarefree_part
            if d < 2 or d > X:
                continue
            if not shortcut_only and cubic_has_integer_root(m, n):
                continue
            key = (m, n, dec.square_part)
            prev = found.get(d)
            if prev is None or key < prev:
                found[d] = key
    return found


def _partition(m_lo: int, m_hi: int, parts: int) -> list[tuple[int, int]]:
    span = m_hi - m_lo + 1
    if span <= 0:
        return []
    parts = max(1, min(parts, span))
    step = -(-span // parts)
    chunks = []
    lo = m_lo
    while lo <= m_hi:
        hi = min(lo + step - 1, m_hi)
        chunks.append((lo, hi))
        lo = hi + 1
    return chunks


def enumerate_discriminants(
    X: int, config: EnumConfig = EnumConfig()
) -> list[WitnessedDiscriminant]:
    """All qualifying squarefree d in [2, X] discoverable in the (m, n) box.

    Deduplicated with the canonical (lex-least) witness and sorted by d;
    the result is identical no matter how the m range is partitioned
    across workers.
    """
    m_hi = _check_sweep_config(X, config)
    chunks = _partition(2, m_hi, config.workers)
    if config.workers == 1 or len(chunks) <= 1:
        partials = [_sweep_m_range(X, lo, hi, config.shortcut_only) for lo, hi in chunks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                pool.submit(_sweep_m_range, X, lo, hi, config.shortcut_only)
                for lo, hi in chunks
            ]
            partials = [f.result() for f in futures]
    best: dict[int, tuple[int, int, int]] = {}
    for part in partials:
        for d, key in part.items():
            prev = best.get(d)
            if prev is None or key < prev:
                best[d] = key
    return [
        WitnessedDiscriminant(d=d, witness=HondaWitness(n=key[1], u=key[2], m=key[0], d=d))
        for d, key in sorted(best.items())
    ]


def write_witnesses_csv(items: Iterable[WitnessedDiscriminant], path) -> None:
    """Witness export: header `d,m,n,u`, ascending d, LF-terminated."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("d,m,n,u\n")
        for wd in items:
            w = wd.witness
            fh.write(f"{wd.d},{w.m},{w.n},{w.u}\n")


def read_witnesses_csv(path) -> list[tuple[int, int, int, int]]:
    """Parse a witness export back into (d, m, n, u) rows."""
    rows: list[tuple[int, int, int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "d,m,n,u":
            raise ValueError(f"unexpected witness header: {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise ValueError(f"malformed witness row: {line!r}")
            d, m, n, u = (int(p) for p in parts)
            rows.append((d, m, n, u))
    return rows
