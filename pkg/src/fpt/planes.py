"""Two-dimensional F_p-subspaces of F_{p^m}: enumeration in canonical
echelon form, dilation orbits, the value set of the orbit invariant,
pencils through the prime-field line, and the root-product oracle for
the polynomial family.

A plane is identified with the reduced row-echelon basis of its 2 x m
coordinate matrix over F_p, which makes equality and hashing O(1).
Orbit counting unions each plane with its image under one fixed
multiplicative generator, which generates the whole dilation action.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dickson import nu_code, nu_point_code
from .errors import (
    BudgetExceeded,
    CoefficientNotInPrimeField,
    DegreeTooSmall,
    DependentPair,
    WrongField,
)
from .fmp import degree_formula, eval_fp
from .gf import DEFAULT_BUDGET, FieldDesc
from .upoly import DensePoly


@dataclass(frozen=True)
class Plane:
    """A plane in canonical echelon basis (u, v); codes of the two rows."""

    field: FieldDesc
    u: int
    v: int

    def basis_vectors(self) -> tuple[list[int], list[int]]:
        return self.field.to_coeffs(self.u), self.field.to_coeffs(self.v)

    def contains_prime_field(self) -> bool:
        # F_p = span{1}; membership is solvable since the basis is echelon
        return _membership(self.field, self, 1)

    def points(self) -> list[int]:
        """All p^2 element codes of the plane."""
        f = self.field
        out = []
        for a in range(f.p):
            au = f.mul_code(a, self.u)
            for b in range(f.p):
                out.append(f.add_code(au, f.mul_code(b, self.v)))
        return out

    def nu_value(self) -> int:
        return nu_code(self.field, self.u, self.v)

    def to_json(self) -> list[list[int]]:
        return [self.field.to_coeffs(self.u), self.field.to_coeffs(self.v)]


def _membership(field: FieldDesc, plane: Plane, x: int) -> bool:
    for a in range(field.p):
        au = field.mul_code(a, plane.u)
        for b in range(field.p):
            if field.add_code(au, field.mul_code(b, plane.v)) == x:
                return True
    return False


def canonical_plane(field: FieldDesc, x: int, y: int) -> Plane:
    """Reduced row-echelon representative of span{x, y}; raises on a
    dependent pair."""
    p, m = field.p, field.m
    r1 = field.to_coeffs(x)
    r2 = field.to_coeffs(y)
    # first pivot
    piv1 = next((i for i, c in enumerate(r1) if c), None)
    piv2 = next((i for i, c in enumerate(r2) if c), None)
    if piv1 is None:
        r1, r2, piv1, piv2 = r2, r1, piv2, None
    if piv1 is None:
        raise DependentPair("zero pair spans no plane")
    if piv2 is not None and (piv2 < piv1):
        r1, r2, piv1, piv2 = r2, r1, piv2, piv1
    inv = pow(r1[piv1], -1, p)
    r1 = [c * inv % p for c in r1]
    if r2[piv1]:
        c = r2[piv1]
        r2 = [(b - c * a) % p for a, b in zip(r1, r2)]
    piv2 = next((i for i, c in enumerate(r2) if c), None)
    if piv2 is None:
        raise DependentPair("pair is linearly dependent over the prime field")
    inv = pow(r2[piv2], -1, p)
    r2 = [c * inv % p for c in r2]
    if r1[piv2]:
        c = r1[piv2]
        r1 = [(a - c * b) % p for a, b in zip(r1, r2)]
    return Plane(field, field.from_coeffs(r1), field.from_coeffs(r2))


def enumerate_planes(field: FieldDesc, budget: int = DEFAULT_BUDGET) -> list[Plane]:
    """All planes, one canonical representative each, by direct echelon
    enumeration over pivot-column pairs."""
    p, m = field.p, field.m
    if m < 2:
        raise DegreeTooSmall("planes need extension degree at least 2")
    if field.q > budget:
        raise BudgetExceeded(f"field order {field.q} exceeds budget {budget}")
    out = []
    for j1 in range(m - 1):
        for j2 in range(j1 + 1, m):
            free1 = [i for i in range(j1 + 1, m) if i != j2]
            free2 = list(range(j2 + 1, m))
            n1, n2 = len(free1), len(free2)
            for mask1 in range(p**n1):
                r1 = [0] * m
                r1[j1] = 1
                rem = mask1
                for i in free1:
                    r1[i] = rem % p
                    rem //= p
                u = field.from_coeffs(r1)
                for mask2 in range(p**n2):
                    r2 = [0] * m
                    r2[j2] = 1
                    rem = mask2
                    for i in free2:
                        r2[i] = rem % p
                        rem //= p
                    out.append(Plane(field, u, field.from_coeffs(r2)))
    expected = (field.q - 1) * (field.q - p) // ((p * p - 1) * (p * p - p))
    if len(out) != expected:
        raise AssertionError("echelon enumeration missed planes")
    return out


def plane_count_formula(p: int, m: int) -> int:
    q = p**m
    return (q - 1) * (q - p) // ((p * p - 1) * (p * p - p))


def orbit_count_formula(p: int, m: int) -> int:
    """Number of dilation orbits of planes."""
    if m % 2 == 1:
        return (p ** (m - 1) - 1) // (p * p - 1)
    return 1 + (p ** (m - 1) - p) // (p * p - 1)


@dataclass(frozen=True)
class OrbitCensus:
    p: int
    m: int
    planes: int
    formula_orbits: int
    enumerated_orbits: int
    orbit_sizes: tuple[tuple[int, int], ...]  # (size, how many orbits)

    def to_json(self) -> dict:
        return {
            "planes": self.planes,
            "orbits": self.enumerated_orbits,
            "formula_orbits": self.formula_orbits,
            "orbit_sizes": {str(s): c for s, c in self.orbit_sizes},
        }


def _find_generator_code(field: FieldDesc) -> int:
    for code in range(2, field.q):
        if field.order_code(code) == field.q - 1:
            return code
    raise AssertionError("no generator")


def orbit_count(p: int, m: int, budget: int = DEFAULT_BUDGET) -> OrbitCensus:
    """Formula value and an independent union-find enumeration of the
    dilation orbits (one generator step per plane suffices)."""
    from .gf import make_field

    field = make_field(p, m)
    planes = enumerate_planes(field, budget)
    index = {(pl.u, pl.v): i for i, pl in enumerate(planes)}
    parent = list(range(len(planes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    g = _find_generator_code(field)
    for i, pl in enumerate(planes):
        gu = field.mul_code(g, pl.u)
        gv = field.mul_code(g, pl.v)
        img = canonical_plane(field, gu, gv)
        j = index[(img.u, img.v)]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    sizes: dict[int, int] = {}
    for i in range(len(planes)):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    hist: dict[int, int] = {}
    for s in sizes.values():
        hist[s] = hist.get(s, 0) + 1
    return OrbitCensus(
        p,
        m,
        len(planes),
        orbit_count_formula(p, m),
        len(sizes),
        tuple(sorted(hist.items())),
    )


def z_values(
    field: FieldDesc, full_sweep: bool = False, budget: int = DEFAULT_BUDGET
) -> tuple[frozenset[int], frozenset[int]]:
    """(Z, Z_circ): the invariant's value set over all planes, and the
    same set without 0.

    The default route evaluates nu(x, 1) over x outside the prime field
    (every dilation orbit contains a plane through the prime-field
    line); full_sweep enumerates all planes instead and must agree.
    """
    if field.m < 2:
        raise DegreeTooSmall("plane invariants need extension degree at least 2")
    if field.q > budget:
        raise BudgetExceeded(f"field order {field.q} exceeds budget {budget}")
    if full_sweep:
        vals = {pl.nu_value() for pl in enumerate_planes(field, budget)}
    else:
        frob = field.frob_code
        vals = set()
        for x in field.codes():
            if frob(x, 1) == x:
                continue
            vals.add(nu_point_code(field, x))
    z = frozenset(vals)
    z_circ = frozenset(v for v in vals if v)
    if len(z_circ) != degree_formula(field.m, field.p):
        raise AssertionError("value-set size disagrees with the degree formula")
    if (0 in z) != (field.m % 2 == 0):
        raise AssertionError("zero membership must track the parity of m")
    return z, z_circ


@dataclass(frozen=True)
class Pencil:
    """The planes through the prime-field line sharing one invariant value."""

    field: FieldDesc
    z: int
    planes: tuple[Plane, ...]

    def to_json(self) -> dict:
        return {
            "z": self.z,
            "planes": [pl.to_json() for pl in self.planes],
        }


def pencil(z: int, field: FieldDesc, budget: int = DEFAULT_BUDGET) -> Pencil:
    """The p+1 planes through F_p with invariant value z (a single plane
    for z = 0, which names the quadratic subfield)."""
    p, m = field.p, field.m
    if not 0 <= z < p:
        raise WrongField(f"{z} is not a residue mod {p}")
    if field.q > budget:
        raise BudgetExceeded(f"field order {field.q} exceeds budget {budget}")
    if z == 0:
        if m % 2 != 0:
            raise WrongField("value 0 needs the quadratic subfield, so an even degree")
    elif eval_fp(m, p, z) != 0:
        raise WrongField(f"value {z} does not occur among planes of this field")
    frob = field.frob_code
    seen: dict[tuple[int, int], Plane] = {}
    hits = 0
    for x in field.codes():
        if frob(x, 1) == x:
            continue
        if nu_point_code(field, x) == z:
            hits += 1
            pl = canonical_plane(field, x, 1)
            seen[(pl.u, pl.v)] = pl
    expected_planes = 1 if z == 0 else p + 1
    expected_points = p * p - p if z == 0 else p**3 - p
    if len(seen) != expected_planes or hits != expected_points:
        raise AssertionError(
            f"pencil census wrong: {len(seen)} planes / {hits} points"
        )
    ordered = tuple(sorted(seen.values(), key=lambda pl: (pl.u, pl.v)))
    return Pencil(field, z, ordered)


def oracle_fmp(field: FieldDesc, budget: int = DEFAULT_BUDGET) -> DensePoly:
    """The family member as a root product: monic, squarefree, with one
    root per nonzero invariant value; coefficients must land in the
    prime subfield (checked via Frobenius-orbit minimal polynomials)."""
    _, z_circ = z_values(field, budget=budget)
    p = field.p
    remaining = set(z_circ)
    minpolys: list[list[int]] = []
    while remaining:
        z = remaining.pop()
        orbit = [z]
        t = field.frob_code(z, 1)
        while t != z:
            if t not in remaining:
                raise AssertionError("value set is not Frobenius-stable")
            remaining.remove(t)
            orbit.append(t)
            t = field.frob_code(t, 1)
        # minimal polynomial of the orbit, computed in the big field
        cs = [1]
        for root in orbit:
            nxt = [0] * (len(cs) + 1)
            for i, c in enumerate(cs):
                nxt[i + 1] = field.add_code(nxt[i + 1], c)
                nxt[i] = field.sub_code(nxt[i], field.mul_code(c, root))
            cs = nxt
        for c in cs:
            if c >= p:
                raise CoefficientNotInPrimeField(
                    f"orbit product coefficient {field.to_coeffs(c)} left F_p"
                )
        minpolys.append(cs)
    prod = np.array([1], dtype=np.int64)
    for cs in minpolys:
        prod = np.convolve(prod, np.array(cs, dtype=np.int64)) % p
    coeffs = [int(c) for c in prod]
    poly = DensePoly(field, tuple(coeffs))
    if poly.degree != degree_formula(field.m, p) or not poly.is_monic():
        raise AssertionError("root product has the wrong shape")
    return poly
