"""Univariate polynomial arithmetic over F_p and F_{p^m}, plus integer
polynomials with arbitrary-precision coefficients.

Polynomials are coefficient vectors, constant term first, trimmed so the
leading coefficient is nonzero (the zero polynomial is the empty
vector).  Coefficients are field codes (plain residues over a prime
field).  Multiplication and reduction switch to numpy kernels over prime
fields once vectors are long enough to pay for the call overhead;
extension fields go through the table-backed code arithmetic of gf.

Factoring support covers exactly what the rest of the library needs:
squarefree decomposition (with the p-th-root branch for vanishing
derivatives), distinct-degree splitting, a Rabin irreducibility test,
and seeded equal-degree splitting for pulling out a single factor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstantInput,
    ConstantModulus,
    FieldMismatch,
)
from .gf import FieldDesc, make_field
from .numth import factorize

_NP_MUL_THRESHOLD = 24
_NP_MOD_THRESHOLD = 48


# ---------------------------------------------------------------------------
# raw helpers on (field, list-of-codes)


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _raw_add(field: FieldDesc, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = field.add_code(out[i], y)
    return _trim(out)


def _raw_sub(field: FieldDesc, a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = field.sub_code(out[i], y)
    return _trim(out)


def _raw_mul(field: FieldDesc, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if field.m == 1 and len(a) + len(b) >= _NP_MUL_THRESHOLD:
        prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        return _trim((prod % field.p).tolist())
    out = [0] * (len(a) + len(b) - 1)
    if field.m == 1:
        p = field.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([v % p for v in out])
    mul = field.mul_code
    add = field.add_code
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


def _raw_divmod(
    field: FieldDesc, a: list[int], b: list[int]
) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    if field.m == 1 and len(a) >= _NP_MOD_THRESHOLD:
        return _np_divmod(field.p, a, b)
    rem = list(a)
    inv_lead = field.inv_code(b[-1])
    quot = [0] * (len(a) - len(b) + 1)
    mul = field.mul_code
    sub = field.sub_code
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c:
            c = mul(c, inv_lead)
            quot[k] = c
            for i, y in enumerate(b):
                if y:
                    rem[k + i] = sub(rem[k + i], mul(c, y))
    return _trim(quot), _trim(rem[: len(b) - 1])


def _np_divmod(p: int, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    rem = np.array(a, dtype=np.int64)
    bv = np.array(b, dtype=np.int64)
    nb = len(b)
    inv_lead = pow(b[-1], -1, p)
    quot = np.zeros(len(a) - nb + 1, dtype=np.int64)
    for k in range(len(a) - nb, -1, -1):
        c = rem[k + nb - 1] % p
        if c:
            c = c * inv_lead % p
            quot[k] = c
            rem[k : k + nb] = (rem[k : k + nb] - c * bv) % p
    return _trim(quot.tolist()), _trim(rem[: nb - 1].tolist())


def _raw_gcd(field: FieldDesc, a: list[int], b: list[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _raw_divmod(field, a, b)[1]
    if a:
        inv = field.inv_code(a[-1])
        a = [field.mul_code(c, inv) for c in a]
    return a


# ---------------------------------------------------------------------------
# DensePoly


@dataclass(frozen=True)
class DensePoly:
    """Dense univariate polynomial over a FieldDesc, constant term first."""

    field: FieldDesc
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, field: FieldDesc, coeffs) -> "DensePoly":
        """From a list of element codes (for prime fields: residues,
        negative values allowed)."""
        cs = [int(c) for c in coeffs]
        if field.m == 1:
            cs = [c % field.p for c in cs]
        else:
            for c in cs:
                if not 0 <= c < field.q:
                    raise ValueError(f"{c} is not an element code of {field}")
        return cls(field, tuple(_trim(cs)))

    @classmethod
    def from_residues(cls, field: FieldDesc, coeffs) -> "DensePoly":
        """Coefficients given as prime-subfield residues."""
        return cls(field, tuple(_trim([c % field.p for c in coeffs])))

    @classmethod
    def zero(cls, field: FieldDesc) -> "DensePoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldDesc) -> "DensePoly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldDesc) -> "DensePoly":
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "DensePoly") -> None:
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        return DensePoly(self.field, tuple(_raw_add(self.field, list(self.coeffs), list(other.coeffs))))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        return DensePoly(self.field, tuple(_raw_sub(self.field, list(self.coeffs), list(other.coeffs))))

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        return DensePoly(self.field, tuple(_raw_mul(self.field, list(self.coeffs), list(other.coeffs))))

    def __divmod__(self, other: "DensePoly") -> tuple["DensePoly", "DensePoly"]:
        self._check(other)
        q, r = _raw_divmod(self.field, list(self.coeffs), list(other.coeffs))
        return DensePoly(self.field, tuple(q)), DensePoly(self.field, tuple(r))

    def __floordiv__(self, other: "DensePoly") -> "DensePoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "DensePoly") -> "DensePoly":
        return divmod(self, other)[1]

    def monic(self) -> "DensePoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = self.field.inv_code(self.coeffs[-1])
        return DensePoly(
            self.field, tuple(self.field.mul_code(c, inv) for c in self.coeffs)
        )

    def derivative(self) -> "DensePoly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            k = i % f.p
            out.append(f.mul_code(k, self.coeffs[i]) if k else 0)
        return DensePoly(f, tuple(_trim(out)))

    def eval_code(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add_code(f.mul_code(acc, x), c)
        return acc

    def shift_arg(self, c: int) -> "DensePoly":
        """The composition f(X + c) by Horner in the polynomial ring."""
        f = self.field
        out: list[int] = []
        xc = [c % f.q, 1]
        for coef in reversed(self.coeffs):
            out = _raw_add(f, _raw_mul(f, out, xc), [coef])
        return DensePoly(f, tuple(out))

    def scale_arg(self, a: int) -> "DensePoly":
        """The composition f(a*X)."""
        f = self.field
        out, power = [], 1
        for coef in self.coeffs:
            out.append(f.mul_code(coef, power))
            power = f.mul_code(power, a)
        return DensePoly(f, tuple(_trim(out)))

    def to_json(self):
        if self.field.m == 1:
            return list(self.coeffs)
        return [self.field.to_coeffs(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"DensePoly(p={self.field.p}, m={self.field.m}, coeffs={list(self.coeffs)})"


# -- function-style wrappers --


def poly_add(f: DensePoly, g: DensePoly) -> DensePoly:
    return f + g


def poly_sub(f: DensePoly, g: DensePoly) -> DensePoly:
    return f - g


def poly_mul(f: DensePoly, g: DensePoly) -> DensePoly:
    return f * g


def poly_mod(f: DensePoly, g: DensePoly) -> DensePoly:
    return f % g


def poly_gcd(f: DensePoly, g: DensePoly) -> DensePoly:
    """Monic greatest common divisor."""
    f._check(g)
    return DensePoly(
        f.field, tuple(_raw_gcd(f.field, list(f.coeffs), list(g.coeffs)))
    )


class _ModCtx:
    """Reduction context for repeated multiplication modulo a fixed
    nonconstant polynomial; over prime fields the reduction uses a
    precomputed numpy matrix of X^k mod f rows."""

    def __init__(self, field: FieldDesc, mod: list[int]):
        if len(mod) < 2:
            raise ConstantModulus("modulus must be nonconstant")
        self.field = field
        self.mod = list(mod)
        self.n = len(mod) - 1
        self.np_ok = field.m == 1 and self.n >= 2
        if self.np_ok:
            p = field.p
            n = self.n
            inv_lead = pow(mod[-1], -1, p)
            monic = [c * inv_lead % p for c in mod]
            rows = np.zeros((n - 1, n), dtype=np.int64)
            # rows[i] = X^(n+i) mod monic
            cur = [(-monic[i]) % p for i in range(n)]  # X^n mod f
            rows_list = [cur]
            for _ in range(n - 2):
                nxt = [0] + cur[:-1]
                lead = cur[-1]
                if lead:
                    for i in range(n):
                        nxt[i] = (nxt[i] - lead * monic[i]) % p
                cur = nxt[:n]
                rows_list.append(cur)
            for i, row in enumerate(rows_list):
                rows[i] = row
            self.rows = rows
            self.p = p

    def reduce(self, cs: list[int]) -> list[int]:
        if len(cs) <= self.n:
            return list(cs)
        if self.np_ok and len(cs) <= 2 * self.n - 1:
            arr = np.asarray(cs, dtype=np.int64)
            high = arr[self.n :]
            low = arr[: self.n].copy()
            low += high @ self.rows[: len(high)]
            return _trim((low % self.p).tolist())
        return _raw_divmod(self.field, list(cs), self.mod)[1]

    def mulmod(self, a: list[int], b: list[int]) -> list[int]:
        if self.np_ok:
            if not a or not b:
                return []
            prod = np.convolve(
                np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
            ) % self.p
            return self.reduce(prod.tolist())
        return self.reduce(_raw_mul(self.field, a, b))

    def powmod(self, a: list[int], e: int) -> list[int]:
        if e < 0:
            raise ValueError("negative exponent in powmod")
        result = [1]
        base = self.reduce(list(a))
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            base = self.mulmod(base, base)
            e >>= 1
        return result


def poly_powmod(f: DensePoly, e: int, mod: DensePoly) -> DensePoly:
    """f**e reduced modulo a nonconstant polynomial, square-and-multiply."""
    f._check(mod)
    if mod.is_constant():
        raise ConstantModulus("powmod modulus must be nonconstant")
    ctx = _ModCtx(f.field, list(mod.coeffs))
    return DensePoly(f.field, tuple(ctx.powmod(list(f.coeffs), e)))


# ---------------------------------------------------------------------------
# factorization support


def _pth_root(field: FieldDesc, cs: list[int]) -> list[int]:
    # f = g(X^p)  ->  g, taking p-th roots of the surviving coefficients
    p = field.p
    root_exp = p ** (field.m - 1)
    out = []
    for i in range(0, len(cs), p):
        out.append(field.pow_code(cs[i], root_exp))
    for i, c in enumerate(cs):
        if i % p and c:
            raise AssertionError("polynomial with zero derivative not in F[X^p]")
    return _trim(out)


def squarefree_decomposition(f: DensePoly) -> list[tuple[DensePoly, int]]:
    """Monic squarefree parts with multiplicities; the product of
    part**multiplicity recovers monic(f).  Characteristic-p safe."""
    if f.is_constant():
        raise ConstantInput("squarefree decomposition needs a nonconstant input")
    field = f.field
    out: list[tuple[DensePoly, int]] = []
    stack = [(list(f.monic().coeffs), 1)]
    while stack:
        cs, scale = stack.pop()
        deriv = list(DensePoly(field, tuple(cs)).derivative().coeffs)
        if not deriv:
            stack.append((_pth_root(field, cs), scale * field.p))
            continue
        c = _raw_gcd(field, cs, deriv)
        w = _raw_divmod(field, cs, c)[0]
        i = 1
        while len(w) > 1:
            y = _raw_gcd(field, w, c)
            z = _raw_divmod(field, w, y)[0]
            if len(z) > 1:
                out.append((DensePoly(field, tuple(z)), i * scale))
            i += 1
            w = y
            c = _raw_divmod(field, c, y)[0]
        if len(c) > 1:
            stack.append((_pth_root(field, c), scale * field.p))
    out.sort(key=lambda t: (t[1], t[0].coeffs))
    return out


@dataclass(frozen=True)
class DegreeMultiset:
    """Degrees of irreducible factors counted with multiplicity."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "DegreeMultiset":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total_degree(self) -> int:
        return sum(d * m for d, m in self.counts)

    def to_json(self) -> dict[str, int]:
        return {str(d): m for d, m in self.counts}

    def __repr__(self) -> str:
        return f"DegreeMultiset({self.as_dict()})"


def _ddf_squarefree(g: DensePoly) -> list[tuple[int, DensePoly]]:
    """Distinct-degree split of a monic squarefree polynomial: list of
    (d, product of all irreducible factors of degree d)."""
    field = g.field
    q = field.q
    ctx = _ModCtx(field, list(g.coeffs))
    parts: list[tuple[int, DensePoly]] = []
    remaining = list(g.coeffs)
    h = ctx.reduce([0, 1])  # X
    d = 0
    while len(remaining) - 1 >= 1:
        d += 1
        if 2 * d > len(remaining) - 1:
            parts.append((len(remaining) - 1, DensePoly(field, tuple(remaining))))
            break
        h = ctx.powmod(h, q)
        hx = _raw_sub(field, h, [0, 1])
        w = _raw_gcd(field, hx, remaining)
        if len(w) > 1:
            parts.append((d, DensePoly(field, tuple(w))))
            remaining = _raw_divmod(field, remaining, w)[0]
    return parts


def distinct_degree_factor(f: DensePoly) -> DegreeMultiset:
    """Exact multiset of degrees of the irreducible factors of f, counted
    with multiplicity: squarefree decomposition first, then standard
    distinct-degree splitting within each squarefree part."""
    if f.is_constant():
        raise ConstantInput("cannot factor a constant")
    counts: dict[int, int] = {}
    for part, mult in squarefree_decomposition(f):
        for d, w in _ddf_squarefree(part):
            counts[d] = counts.get(d, 0) + (w.degree // d) * mult
    ms = DegreeMultiset.from_dict(counts)
    if ms.total_degree != f.degree:
        raise AssertionError("factor degrees do not sum to the input degree")
    return ms


def is_irreducible(f: DensePoly) -> bool:
    """Rabin irreducibility criterion over the coefficient field."""
    if f.is_constant():
        raise ConstantInput("constants are neither irreducible nor reducible here")
    n = f.degree
    if n == 1:
        return True
    field = f.field
    q = field.q
    ctx = _ModCtx(field, list(f.monic().coeffs))
    needed = sorted({n // r for r in factorize(n)} | {n})
    h = ctx.reduce([0, 1])
    powers: dict[int, list[int]] = {}
    k = 0
    for target in needed:
        while k < target:
            h = ctx.powmod(h, q)
            k += 1
        powers[target] = list(h)
    if _raw_sub(field, powers[n], [0, 1]):
        return False
    for r in factorize(n):
        diff = _raw_sub(field, powers[n // r], [0, 1])
        g = _raw_gcd(field, list(f.coeffs), diff) if diff else list(f.monic().coeffs)
        if len(g) != 1:
            return False
    return True


def equal_degree_split(f: DensePoly, d: int, seed: int = 0) -> list[DensePoly]:
    """Split a monic squarefree product of degree-d irreducibles into its
    irreducible factors (Cantor-Zassenhaus, odd q only).  Deterministic
    for a fixed seed."""
    field = f.field
    if field.q % 2 == 0:
        raise NotImplementedError("equal-degree splitting is implemented for odd q")
    rng = random.Random(seed)
    out: list[DensePoly] = []
    stack = [f.monic()]
    e = (field.q**d - 1) // 2
    while stack:
        g = stack.pop()
        if g.degree == d:
            out.append(g)
            continue
        ctx = _ModCtx(field, list(g.coeffs))
        while True:
            r = [rng.randrange(field.q) for _ in range(g.degree)]
            r = _trim(r)
            if len(r) < 1:
                continue
            h = ctx.powmod(r, e)
            h0 = _raw_sub(field, h, [1])
            w = _raw_gcd(field, h0, list(g.coeffs))
            if 0 < len(w) - 1 < g.degree:
                stack.append(DensePoly(field, tuple(w)))
                stack.append(g // DensePoly(field, tuple(w)))
                break
    out.sort(key=lambda t: t.coeffs)
    return out



# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, coeffs) -> "IntPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return int_poly_add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return int_poly_add(self, IntPoly.make([-c for c in other.coeffs]))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return int_poly_mul(self, other)

    def __call__(self, x: int) -> int:
        return int_poly_eval(self, x)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def int_poly_add(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = list(f.coeffs), list(g.coeffs)
    if len(a) < len(b):
        a, b = b, a
    for i, y in enumerate(b):
        a[i] += y
    return IntPoly.make(a)


def int_poly_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f.coeffs or not g.coeffs:
        return IntPoly(())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, x in enumerate(f.coeffs):
        if x:
            for j, y in enumerate(g.coeffs):
                out[i + j] += x * y
    return IntPoly.make(out)


def int_poly_eval(f: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def int_poly_mod_p(f: IntPoly, p: int) -> DensePoly:
    """Reduce the coefficients into F_p."""
    field = make_field(p, 1)
    return DensePoly.from_residues(field, list(f.coeffs))
