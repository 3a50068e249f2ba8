"""Morgan-Voyce polynomials, the integer specialization of the plane
polynomial family at base 1, Fibonacci polynomials, Lehmer sequences,
and the Morgan-Voyce order of apparition.

At base 1 the alternating gap exponent degenerates (1 for even index
gaps, 0 for odd), so the family becomes the two classical Morgan-Voyce
ladders b_k (odd indices) and B_k (even indices) with the three-term
recursion g_k = (X+2) g_{k-1} - g_{k-2} inside each parity class.  All
coefficients are exact arbitrary-precision integers.
"""

from __future__ import annotations

from math import comb

from .errors import ZeroResidue
from .upoly import IntPoly

_B_LOWER = "b"
_B_UPPER = "B"


def f_m1(m: int) -> IntPoly:
    """The base-1 family member: f_0 = 0, f_1 = 1, then
    X f_{k-1} + f_{k-2} for odd k >= 3 and f_{k-1} + f_{k-2} for even k
    (the base-1 gap exponent is 1 at even gap index, 0 at odd)."""
    if m < 0:
        raise ValueError("index must be >= 0")
    prev, cur = IntPoly(()), IntPoly((1,))  # f_0, f_1
    x = IntPoly((0, 1))
    for k in range(2, m + 1):
        nxt = (x * cur if k % 2 == 1 else cur) + prev
        prev, cur = cur, nxt
    return cur if m >= 1 else prev


def mv_poly(kind: str, k: int) -> IntPoly:
    """Binomial closed forms: b_k = sum C(k+i, k-i) X^i and
    B_k = sum C(k+i+1, k-i) X^i."""
    if k < 0:
        raise ValueError("index must be >= 0")
    if kind == _B_LOWER:
        return IntPoly.make([comb(k + i, k - i) for i in range(k + 1)])
    if kind == _B_UPPER:
        return IntPoly.make([comb(k + i + 1, k - i) for i in range(k + 1)])
    raise ValueError(f"kind must be 'b' or 'B', got {kind!r}")


def mv_three_term_check(kind: str, k: int) -> bool:
    """(X+2) g_{k-1} - g_{k-2} = g_k within one parity family."""
    if k < 2:
        raise ValueError("the three-term recursion starts at k = 2")
    xp2 = IntPoly((2, 1))
    g2, g1, g0 = mv_poly(kind, k), mv_poly(kind, k - 1), mv_poly(kind, k - 2)
    return xp2 * g1 - g0 == g2


def fib_poly(m: int) -> IntPoly:
    """Fibonacci polynomials: 0, 1, then X f_{m-1} + f_{m-2}."""
    if m < 0:
        raise ValueError("index must be >= 0")
    prev, cur = IntPoly(()), IntPoly((1,))
    x = IntPoly((0, 1))
    for _ in range(2, m + 1):
        prev, cur = cur, x * cur + prev
    return cur if m >= 1 else prev


def lehmer_U(n: int, Z: int, Q: int) -> int:
    """The parity-alternating Lehmer term: U_0 = 0, U_1 = 1, then
    Z U_{n-1} - Q U_{n-2} for odd n and U_{n-1} - Q U_{n-2} for even."""
    if n < 0:
        raise ValueError("index must be >= 0")
    a, b = 0, 1  # U_0, U_1
    for k in range(2, n + 1):
        if k % 2 == 1:
            a, b = b, Z * b - Q * a
        else:
            a, b = b, b - Q * a
    return b if n >= 1 else a


def mv_value(n: int, Z: int) -> int:
    """The integer Morgan-Voyce value MV_n(Z) = U_n(sqrt(Z), -1)."""
    return lehmer_U(n, Z, -1)


def mv_apparition(z: int, p: int, Z: int) -> int:
    """Least m with p dividing MV_m(Z), for an integer lift Z of the
    nonzero residue z; computed on exact integer values."""
    z %= p
    if z == 0:
        raise ZeroResidue("apparition needs a nonzero residue")
    if Z % p != z:
        raise ValueError(f"{Z} is not a lift of {z} mod {p}")
    a, b = 0, 1
    for m in range(2, p + 2):
        if m % 2 == 1:
            a, b = b, Z * b + a
        else:
            a, b = b, b + a
        if b % p == 0:
            return m
    raise AssertionError(f"no apparition index <= p+1 for z={z}, p={p}")


def mv_value_table(n_max: int, Z: int) -> list[int]:
    """MV_1(Z) .. MV_nmax(Z) as exact integers."""
    return [mv_value(n, Z) for n in range(1, n_max + 1)]
