"""Class-number oracles for quadratic fields via binary quadratic forms.

Negative discriminants get the exact class number by counting reduced
positive-definite forms.  Positive discriminants get the narrow class
number h+ by counting cycles of reduced indefinite forms under the
reduction step rho.  Since h+ = h or 2h, the odd parts of h and h+ agree,
so every 3-divisibility question is answered through h+.

An analytic estimate (truncated Kronecker-character L-sum combined with a
continued-fraction regulator) provides an independent cross-check of the
cycle counts.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .intmath import fundamental_discriminant, is_squarefree, isqrt

__all__ = [
    "PRACTICAL_DISCRIMINANT_CAP",
    "AnalyticEstimate",
    "ClassKind",
    "ClassNumberResult",
    "QuadraticForm",
    "analytic_estimate_real",
    "cf_regulator",
    "class_number_imaginary",
    "class_number_real_narrow",
    "imaginary_count_widened",
    "is_fundamental_discriminant",
    "is_reduced_indefinite",
    "kronecker",
    "reduced_indefinite_forms",
    "rho",
    "three_divides_real_class_number",
    "write_class_audit_csv",
]

# Cycle enumeration costs ~ D^(1/2+eps) per discriminant; past this the
# oracle stops being a desk-scale tool.
PRACTICAL_DISCRIMINANT_CAP = 10_000_000


class ClassKind(enum.Enum):
    IMAGINARY_EXACT = "imaginary_exact"
    REAL_NARROW = "real_narrow"


class QuadraticForm(NamedTuple):
    """Integral binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


@dataclass(frozen=True)
class ClassNumberResult:
    discriminant: int
    count: int
    kind: ClassKind


def is_fundamental_discriminant(D: int) -> bool:
    """True iff D is the discriminant of a quadratic field.

    Either D == 1 (mod 4) and squarefree, or D == 0 (mod 4) with D/4
    squarefree and congruent to 2 or 3 mod 4.  D in {0, 1} is excluded.
    """
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        q = D // 4
        return q % 4 in (2, 3) and is_squarefree(abs(q))
    return False


def _require_imaginary_fundamental(D: int) -> None:
    if D >= 0:
        raise ValueError(f"D={D} must be negative")
    if not is_fundamental_discriminant(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")


def _require_real_fundamental(D: int) -> None:
    if D <= 0:
        raise ValueError(f"D={D} must be positive")
    r = isqrt(D)
    if r * r == D:
        raise ValueError(f"D={D} is a perfect square")
    if not is_fundamental_discriminant(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")


# ---------------------------------------------------------------------------
# Imaginary side: exact count of reduced positive-definite forms.
# ---------------------------------------------------------------------------


def class_number_imaginary(D: int) -> ClassNumberResult:
    """Class number of the imaginary quadratic field of discriminant D < 0.

    Counts reduced positive-definite forms (a, b, c): |b| <= a <= c with
    b >= 0 whenever |b| = a or a = c.  Enumerates b >= 0 of the right
    parity up to sqrt(|D|/3) and divisors a of (b^2 + |D|)/4; forms with
    0 < b < a < c are counted twice for the b-sign choice.
    """
    _require_imaginary_fundamental(D)
    n = -D
    count = 0
    for b in range(n & 1, isqrt(n // 3) + 1, 2):
        ac = (b * b + n) // 4
        for a in range(max(b, 1), isqrt(ac) + 1):
            if ac % a:
                continue
            c = ac // a
            count += 1 if (b == 0 or b == a or a == c) else 2
    return ClassNumberResult(discriminant=D, count=count, kind=ClassKind.IMAGINARY_EXACT)


def imaginary_count_widened(D: int, slack: int = 3) -> int:
    """Recount reduced forms from a deliberately over-wide (b, a) window.

    Enumerates signed b and an enlarged divisor range, then filters with
    the literal reduced-form predicate.  Must agree with
    class_number_imaginary; exercises completeness and non-overlap of the
    counting windows.
    """
    _require_imaginary_fundamental(D)
    if slack < 0:
        raise ValueError("slack must be nonnegative")
    n = -D
    bmax = isqrt(n // 3) + slack
    count = 0
    for b in range(-bmax, bmax + 1):
        if (b * b + n) % 4:
            continue
        ac = (b * b + n) // 4
        for a in range(1, isqrt(ac) + 1 + slack):
            if ac % a:
                continue
            c = ac // a
            if not abs(b) <= a <= c:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            count += 1
    return count


# ---------------------------------------------------------------------------
# Real side: narrow class number as the cycle count of reduced forms.
# ---------------------------------------------------------------------------


def is_reduced_indefinite(form: QuadraticForm, D: int) -> bool:
    """Reduced test for indefinite forms: 0 < b < sqrt(D) and
    sqrt(D) - b < 2|a| < sqrt(D) + b, evaluated in exact arithmetic."""
    a, b, c = form
    if form.discriminant() != D:
        return False
    s = isqrt(D)
    if not 0 < b <= s:
        return False
    two_a = 2 * abs(a)
    # sqrt(D) is irrational here, so strict float comparisons become
    # s - b + 1 <= 2|a| <= s + b on integers.
    return s - b + 1 <= two_a <= s + b


def rho(form: QuadraticForm, D: int) -> QuadraticForm:
    """Reduction step on reduced indefinite forms of discriminant D.

    Maps (a, b, c) to (c, r, (r^2 - D)/(4c)) where r == -b (mod 2|c|) is
    the unique representative with sqrt(D) - 2|c| < r < sqrt(D).
    """
    _a, b, c = form
    s = isqrt(D)
    two_c = 2 * abs(c)
    r = s - (s + b) % two_c
    return QuadraticForm(c, r, (r * r - D) // (4 * c))


def reduced_indefinite_forms(D: int) -> list[QuadraticForm]:
    """All reduced indefinite forms of fundamental discriminant D, sorted."""
    _require_real_fundamental(D)
    return [QuadraticForm(*f) for f in sorted(_reduced_triples(D))]


def _reduced_triples(D: int) -> list[tuple[int, int, int]]:
    s = isqrt(D)
    out: list[tuple[int, int, int]] = []
    for b in range(2 - (D & 1), s + 1, 2):
        quarter = (D - b * b) // 4  # exact: b has the parity of D
        lo = s - b + 1  # window on 2|a|, inclusive
        hi = s + b
        for x in range(1, isqrt(quarter) + 1):
            if quarter % x:
                continue
            y = quarter // x
            if lo <= 2 * x <= hi:
                out.append((x, b, -y))
                out.append((-x, b, y))
            if y != x and lo <= 2 * y <= hi:
                out.append((y, b, -x))
                out.append((-y, b, x))
    return out


def class_number_real_narrow(D: int) -> ClassNumberResult:
    """Narrow class number h+ of the real quadratic field of discriminant D.

    Equals the number of rho-cycles partitioning the reduced indefinite
    forms of discriminant D.
    """
    _require_real_fundamental(D)
    forms = _reduced_triples(D)
    s = isqrt(D)
    seen: set[tuple[int, int, int]] = set()
    cycles = 0
    limit = len(forms) + 1
    for start in forms:
        if start in seen:
            continue
        cycles += 1
        g = start
        for _ in range(limit):
            seen.add(g)
            _a, b, c = g
            r = s - (s + b) % (2 * abs(c))
            g = (c, r, (r * r - D) // (4 * c))
            if g == start:
                break
        else:
            raise ArithmeticError(f"reduction cycle failed to close for D={D}")
    return ClassNumberResult(discriminant=D, count=cycles, kind=ClassKind.REAL_NARROW)


def three_divides_real_class_number(d: int) -> bool:
    """Whether 3 divides the class number of Q(sqrt(d)), d squarefree >= 2.

    Goes through the narrow class number of the fundamental discriminant;
    h+ is h or 2h, so the odd parts coincide and 3|h iff 3|h+.
    """
    if d < 2:
        raise ValueError("d must be a squarefree integer >= 2")
    D = fundamental_discriminant(d)
    return class_number_real_narrow(D).count % 3 == 0


# ---------------------------------------------------------------------------
# Analytic cross-check: truncated L-sum and continued-fraction regulator.
# ---------------------------------------------------------------------------


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n): the Jacobi symbol extended to even and
    nonpositive lower arguments by the standard rules at 2, -1 and 0."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        # (2|a) for odd a, by a mod 8
        two_sym = 1 if a % 8 in (1, 7) else -1
        while n % 2 == 0:
            n //= 2
            t *= two_sym
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def cf_regulator(D: int) -> float:
    """Regulator log(eps) of the quadratic order of discriminant D > 0.

    Runs the exact integer (P, Q) recurrence for the purely periodic
    continued fraction of (P0 + sqrt(D))/2, with P0 the largest integer
    below sqrt(D) of the parity of D.  The fundamental unit is the product
    of the complete quotients over one period, detected by first
    repetition of the (P, Q) state; the product is accumulated as a sum of
    logs so the unit never has to be held as an integer.
    """
    _require_real_fundamental(D)
    s = isqrt(D)
    p0 = s if (s & 1) == (D & 1) else s - 1
    q0 = 2
    sqrt_d = math.sqrt(D)
    p, q = p0, q0
    reg = 0.0
    while True:
        reg += math.log((p + sqrt_d) / q)
        a = (p + s) // q
        p = a * q - p
        q = (D - p * p) // q
        if (p, q) == (p0, q0):
            return reg


@dataclass(frozen=True)
class AnalyticEstimate:
    """sqrt(D) * L(1, chi_D) / (2 * regulator), which targets the wide
    class number h; the cycle count h+ is h or 2h."""

    discriminant: int
    value: float
    l_value: float
    regulator: float
    tail_bound: float
    unstable: bool


def analytic_estimate_real(D: int, cutoff: int = 10_000) -> AnalyticEstimate:
    """Analytic class-number estimate for fundamental D > 0.

    L(1, chi_D) is approximated by the character sum truncated at cutoff;
    the regulator comes from cf_regulator.  tail_bound is the
    Polya-Vinogradov bound on the class-number error induced by the
    truncation; when it exceeds 0.25 the estimate cannot separate adjacent
    integers and the result is flagged unstable rather than rejected.
    """
    _require_real_fundamental(D)
    if cutoff < 1_000:
        raise ValueError("cutoff must be at least 1000")
    l_sum = 0.0
    for k in range(1, cutoff + 1):
        chi = kronecker(D, k)
        if chi:
            l_sum += chi / k
    reg = cf_regulator(D)
    sqrt_d = math.sqrt(D)
    l_tail = sqrt_d * math.log(D) / cutoff
    h_err = sqrt_d * l_tail / (2.0 * reg)
    return AnalyticEstimate(
        discriminant=D,
        value=sqrt_d * l_sum / (2.0 * reg),
        l_value=l_sum,
        regulator=reg,
        tail_bound=h_err,
        unstable=h_err > 0.25,
    )


def write_class_audit_csv(results: Iterable[ClassNumberResult], path) -> None:
    """Audit dump, one `D,h,kind` row per result."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("D,h,kind\n")
        for res in results:
            fh.write(f"{res.discriminant},{res.count},{res.kind.value}\n")
