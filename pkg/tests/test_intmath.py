"""Integer-kernel tests: frozen examples plus exhaustive property sweeps.

Expected values marked with an oracle were computed by the independent
routes coded in this file (incremental root scans, a p^2-marking sieve,
full-range root scans), not by the functions under test.
"""

import pytest

from ccsieve.intmath import (
    SquarefreeDecomposition,
    cubic_has_integer_root,
    fundamental_discriminant,
    gcd,
    icbrt,
    is_squarefree,
    isqrt,
    mod3_shortcut_no_root,
    squarefree_decompose,
)


def _squarefree_sieve(n: int) -> bytearray:
    """Oracle: squarefree flags for 0..n by marking multiples of k^2."""
    flags = bytearray([1]) * (n + 1)
    k = 2
    while k * k <= n:
        step = k * k
        flags[step::step] = bytearray(len(range(step, n + 1, step)))
        k += 1
    return flags


class TestGcd:
    def test_examples(self):
        assert gcd(4, 3) == 1
        assert gcd(6, 9) == 3
        assert gcd(0, 5) == 5

    def test_symmetry_small(self):
        for a in range(0, 40):
            for b in range(0, 40):
                if a == 0 and b == 0:
                    continue
                assert gcd(a, b) == gcd(b, a)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd(0, 0)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            gcd(-4, 2)


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(229) == 15  # 225 <= 229 < 256
        assert isqrt(1264) == 35  # oracle: incremental scan below

    def test_exhaustive_to_1e5(self):
        # independent incremental oracle: maintain r so that r^2 <= t
        r = 0
        for t in range(0, 100_001):
            if (r + 1) * (r + 1) <= t:
                r += 1
            assert isqrt(t) == r

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)


class TestIcbrt:
    def test_exhaustive_to_2e4(self):
        r = 0
        for t in range(0, 20_001):
            if (r + 1) ** 3 <= t:
                r += 1
            assert icbrt(t) == r

    def test_large_cubes_exact(self):
        for r in (10**6, 10**12, 3 * 10**12 + 7):
            assert icbrt(r**3) == r
            assert icbrt(r**3 - 1) == r - 1
            assert icbrt(r**3 + 1) == r


class TestSquarefreeDecompose:
    def test_examples(self):
        # 229 is prime: no divisor in 2..15 (checked below), so (1, 229)
        assert all(229 % p for p in range(2, 16))
        assert squarefree_decompose(229) == SquarefreeDecomposition(229, 1, 229)
        # 1264 = 2^4 * 79 by trial factorization, so u = 4, d = 79
        assert 1264 == 2**4 * 79 and all(79 % p for p in range(2, 9))
        assert squarefree_decompose(1264) == SquarefreeDecomposition(1264, 4, 79)
        assert squarefree_decompose(1) == SquarefreeDecomposition(1, 1, 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decompose(0)

    def test_exhaustive_to_1e6(self):
        flags = _squarefree_sieve(1_000_000)
        for t in range(1, 1_000_001):
            dec = squarefree_decompose(t)
            assert dec.square_part**2 * dec.squarefree_part == t
            assert flags[dec.squarefree_part]

    def test_large_values(self):
        # constructed inputs with known decomposition
        assert squarefree_decompose(10**12) == SquarefreeDecomposition(10**12, 10**6, 1)
        big_prime = 999_999_999_989
        dec = squarefree_decompose(4 * big_prime)
        assert (dec.square_part, dec.squarefree_part) == (2, big_prime)

    def test_is_squarefree(self):
        flags = _squarefree_sieve(5_000)
        for t in range(1, 5_001):
            assert is_squarefree(t) == bool(flags[t])


class TestCubicRoot:
    def test_examples(self):
        assert cubic_has_integer_root(4, 1) is False  # r in {1,-1}: -2 and 4
        assert cubic_has_integer_root(7, 6) is True  # r = 1: 1 - 7 + 6 = 0
        assert cubic_has_integer_root(1, 1) is False  # r in {1,-1}: 1 and 1

    def test_against_full_scan(self):
        # oracle: any root r of X^3 - mX + n with n >= 1 satisfies |r| <= n,
        # so scanning the whole interval is complete
        for m in range(1, 61):
            for n in range(1, 61):
                brute = any(
                    r * r * r - m * r + n == 0 for r in range(-n, n + 1)
                )
                assert cubic_has_integer_root(m, n) == brute


class TestMod3Shortcut:
    def test_examples(self):
        assert mod3_shortcut_no_root(4, 1) is True
        assert mod3_shortcut_no_root(5, 1) is False  # m - 1 = 4 not divisible by 3
        assert mod3_shortcut_no_root(7, 3) is False  # 3 | n

    def test_sound_never_complete(self):
        # soundness over the full stated box: shortcut true forces rootless
        for m in range(1, 501):
            for n in range(1, 501):
                if mod3_shortcut_no_root(m, n):
                    assert not cubic_has_integer_root(m, n)
        # incompleteness: a rootless pair the shortcut misses
        assert not cubic_has_integer_root(5, 3) and not mod3_shortcut_no_root(5, 3)


class TestFundamentalDiscriminant:
    def test_examples(self):
        assert fundamental_discriminant(5) == 5
        assert fundamental_discriminant(79) == 316
        assert fundamental_discriminant(-23) == -23

    def test_negative_cases(self):
        assert fundamental_discriminant(-1) == -4
        assert fundamental_discriminant(-5) == -20

    def test_rejects_bad_input(self):
        for bad in (0, 1, 12, -12, 75):
            with pytest.raises(ValueError):
                fundamental_discriminant(bad)

    def test_result_residue(self):
        flags = _squarefree_sieve(500)
        for d in range(2, 501):
            if not flags[d]:
                continue
            for signed in (d, -d):
                D = fundamental_discriminant(signed)
                assert D % 4 in (0, 1)
                assert D in (signed, 4 * signed)
