"""Closed-form log canonical thresholds and complex singularity exponents.

Every function returns an exact Fraction. The del Pezzo and cubic-surface
classifiers encode the standard value tables for surfaces; the remaining
functions are one-line formulas with explicit validity regimes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import OutOfRegime, UnknownKey, UnsupportedDescriptor
from .toric import check_well_formed

CUBIC_SINGULARITY_TYPES = ("A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6")


def wps_lct(weights) -> Fraction:
    """lct of the weighted projective space P(a_0 <= ... <= a_n):
    a_0 / (a_0 + ... + a_n). Weights are sorted internally; raises
    NotWellFormed unless every n of them are coprime."""
    weights = tuple(sorted(int(a) for a in weights))
    check_well_formed(weights)
    return Fraction(weights[0], sum(weights))


def hypersurface_lct(n: int, m: int) -> Fraction:
    """lct of a smooth hypersurface of degree m < n in projective n-space:
    1/(n + 1 - m). Raises OutOfRegime when m >= n."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    if m >= n:
        raise OutOfRegime(f"degree {m} hypersurface in P^{n}: formula needs m < n")
    return Fraction(1, n + 1 - m)


def double_cover_lct(n: int, d: int) -> Fraction:
    """lct of a smooth double cover of projective n-space branched in degree
    2d, for 2 <= d <= n - 1: 1/(n + 1 - d)."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    if not 2 <= d <= n - 1:
        raise OutOfRegime(f"branch half-degree {d} over P^{n}: formula needs 2 <= d <= n-1")
    return Fraction(1, n + 1 - d)


def monomial_cse(exponents) -> Fraction:
    """Complex singularity exponent of the monomial z_1^{m_1} ... z_k^{m_k}
    at the origin: min(1/m_i)."""
    exponents = tuple(int(m) for m in exponents)
    if not exponents or any(m < 1 for m in exponents):
        raise ValueError("exponents must be positive integers")
    return Fraction(1, max(exponents))


def fermat_cse(exponents) -> Fraction:
    """Complex singularity exponent of z_1^{m_1} + ... + z_k^{m_k} at the
    origin: min(1, sum 1/m_i)."""
    exponents = tuple(int(m) for m in exponents)
    if not exponents or any(m < 1 for m in exponents):
        raise ValueError("exponents must be positive integers")
    return min(Fraction(1), sum(Fraction(1, m) for m in exponents))


def product_lct(a, b) -> Fraction:
    """lct of a product with canonical Gorenstein factors: min of the
    factors' thresholds."""
    a, b = Fraction(a), Fraction(b)
    if not (0 < a <= 1 and 0 < b <= 1):
        raise ValueError("factor thresholds must lie in (0, 1]")
    return min(a, b)


def p1_product_lct(a) -> Fraction:
    """lct of a product of the projective line with a log terminal Fano:
    min(1/2, lct of the second factor)."""
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("factor threshold must lie in (0, 1]")
    return min(Fraction(1, 2), a)


@dataclass(frozen=True)
class DelPezzoDescriptor:
    """A del Pezzo surface, described by degree plus the features that move
    its threshold.

    nodes (0 or 1) applies to degrees 4, 5, 6 only; the anticanonical-curve
    flags apply to degrees 1 (cuspidal) and 2 (tacnodal); the Eckardt flag to
    degree 3; degree8_type ("product" for the quadric surface, "nonproduct"
    for the one-point blow-up of the plane) is required exactly in degree 8.
    Invalid combinations raise UnsupportedDescriptor.
    """

    degree: int
    nodes: int = 0
    has_cuspidal_anticanonical: bool = False
    has_tacnodal_anticanonical: bool = False
    has_eckardt_point: bool = False
    degree8_type: str | None = None

    def __post_init__(self):
        if not 1 <= self.degree <= 9:
            raise UnsupportedDescriptor(f"degree {self.degree} is not in 1..9")
        if self.nodes not in (0, 1):
            raise UnsupportedDescriptor("nodes must be 0 or 1")
        if self.nodes and self.degree not in (4, 5, 6):
            raise UnsupportedDescriptor(
                f"one-node values are tabulated for degrees 4, 5, 6 only, not {self.degree}"
                + ("; route singular cubics to cubic_surface_lct" if self.degree == 3 else ""))
        if self.has_cuspidal_anticanonical and self.degree != 1:
            raise UnsupportedDescriptor("cuspidal flag applies to degree 1 only")
        if self.has_tacnodal_anticanonical and self.degree != 2:
            raise UnsupportedDescriptor("tacnodal flag applies to degree 2 only")
        if self.has_eckardt_point and self.degree != 3:
            raise UnsupportedDescriptor("Eckardt flag applies to degree 3 only")
        if self.degree == 8:
            if self.degree8_type not in ("product", "nonproduct"):
                raise UnsupportedDescriptor(
                    "degree 8 needs degree8_type 'product' or 'nonproduct'")
        elif self.degree8_type is not None:
            raise UnsupportedDescriptor("degree8_type applies to degree 8 only")


def del_pezzo_lct(surface: DelPezzoDescriptor) -> Fraction:
    """Global lct of a del Pezzo surface.

    Smooth values by degree: 1 -> 1 (5/6 with a cuspidal anticanonical
    curve), 2 -> 5/6 (3/4 tacnodal), 3 -> 3/4 (2/3 with an Eckardt point),
    4 -> 2/3, 5 and 6 -> 1/2, 7 -> 1/3, 8 -> 1/2 for the quadric surface and
    1/3 otherwise, 9 -> 1/3. One-node values: degree 4 -> 1/2, 5 -> 1/2,
    6 -> 1/3.
    """
    d = surface.degree
    if surface.nodes:
        return {4: Fraction(1, 2), 5: Fraction(1, 2), 6: Fraction(1, 3)}[d]
    if d == 1:
        return Fraction(5, 6) if surface.has_cuspidal_anticanonical else Fraction(1)
    if d == 2:
        return Fraction(3, 4) if surface.has_tacnodal_anticanonical else Fraction(5, 6)
    if d == 3:
        return Fraction(2, 3) if surface.has_eckardt_point else Fraction(3, 4)
    if d == 4:
        return Fraction(2, 3)
    if d in (5, 6):
        return Fraction(1, 2)
    if d == 8:
        return Fraction(1, 2) if surface.degree8_type == "product" else Fraction(1, 3)
    return Fraction(1, 3)  # degrees 7 and 9


def cubic_surface_lct(singularities: Iterable[str]) -> Fraction:
    """Global lct of a cubic surface with du Val singularities, from the
    multiset of singularity types.

    Precedence: exactly one A1 -> 2/3; any A5 or exactly {D5} -> 1/4;
    exactly {E6} -> 1/6; any A4, or exactly {D4}, or two or more A2 -> 1/3;
    everything else (including the smooth surface's types being routed
    through del_pezzo_lct instead) -> 1/2.
    """
    bag = Counter(str(s) for s in singularities)
    if not bag:
        raise ValueError("empty singularity multiset; smooth cubics go through del_pezzo_lct")
    unknown = sorted(set(bag) - set(CUBIC_SINGULARITY_TYPES))
    if unknown:
        raise ValueError(f"unknown singularity types: {', '.join(unknown)}")
    if bag == {"A1": 1}:
        return Fraction(2, 3)
    if bag["A5"] or bag == {"D5": 1}:
        return Fraction(1, 4)
    if bag == {"E6": 1}:
        return Fraction(1, 6)
    if bag["A4"] or bag == {"D4": 1} or bag["A2"] >= 2:
        return Fraction(1, 3)
    return Fraction(1, 2)


class EquivariantLct(NamedTuple):
    value: Fraction
    provenance: str


KNOWN_EQUIVARIANT: dict[str, EquivariantLct] = {
    "dP5_S5": EquivariantLct(Fraction(2), "quintic del Pezzo surface with its symmetric-group action"),
    "dP5_A5": EquivariantLct(Fraction(2), "quintic del Pezzo surface with its alternating-group action"),
    "FermatCubic_Aut": EquivariantLct(Fraction(4), "Fermat cubic surface with its full automorphism group"),
    "P2_A6": EquivariantLct(Fraction(2), "projective plane with the icosahedral A6 action"),
}


def known_equivariant_lct(key: str) -> EquivariantLct:
    """Tabulated equivariant thresholds (value, provenance) for the four
    classically known group actions; raises UnknownKey otherwise."""
    try:
        return KNOWN_EQUIVARIANT[key]
    except KeyError:
        raise UnknownKey(f"no tabulated equivariant lct for {key!r}; "
                         f"known keys: {', '.join(sorted(KNOWN_EQUIVARIANT))}")
