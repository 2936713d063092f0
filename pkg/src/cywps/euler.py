"""Orbifold and stringy Euler numbers, computed along four independent routes.

* the double character sum over pairs (l, r) of the cyclic group of order w,
  with factor (1 - 1/q_i) over the indices fixed by both (empty product 1);
* its subset form (1/w) sum over J, |J| <= d-1, of (-1)^|J| n_J^2 prod 1/q_j;
* the mirror closed form (1/w) sum over |J| >= 2 of (-1)^|J| n_Jbar^2
  prod_{i in Jbar} 1/q_i, valid for IP weight vectors;
* the general lattice-polytope formula sum_k (-1)^(k-1) sum_{dim theta = k}
  Vol_k(theta) * Vol_{d-k}(sigma_theta cap Delta*), evaluated with the exact
  volume machinery on the mirror simplex.

All values are exact rationals; agreement of the routes is what ``verify``
checks, and the (-1)^(d-1) sign ties the mirror side to the orbifold side.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, NotIPError
from .exact import format_rational
from .polytope import (
    Polytope,
    dual_face,
    dual_polytope,
    face_volume,
    fano_classification,
    normal_cone_section,
    normalized_volume,
)
from .quasismooth import has_ip_property, is_transverse
from .wps import (
    MirrorLattice,
    WeightVector,
    mirror_lattice,
    mirror_simplex,
    newton_hull,
    subset_gcd,
    weight_flags,
)


def vafa_double_sum(w: WeightVector) -> Fraction:
    """The double sum (1/w) sum_{l,r} prod_{i : l q_i, r q_i integral} (1 - 1/q_i).

    Membership l*q_i integral is the divisibility (w / gcd(w, w_i)) | l, so each
    l is reduced to the bitmask of its fixed indices; the sum is then taken over
    all w^2 pairs by combining bucket counts with cached subset products.
    """
    ws = w.weights
    deg = w.degree
    periods = [deg // math.gcd(deg, wi) for wi in ws]
    counts: dict[int, int] = {}
    for l in range(deg):
        mask = 0
        for i, p in enumerate(periods):
            if l % p == 0:
                mask |= 1 << i
        counts[mask] = counts.get(mask, 0) + 1
    factors = [Fraction(wi - deg, wi) for wi in ws]
    prod_cache: dict[int, Fraction] = {0: Fraction(1)}

    def product(mask: int) -> Fraction:
        got = prod_cache.get(mask)
        if got is None:
            low = mask & -mask
            got = product(mask ^ low) * factors[low.bit_length() - 1]
            prod_cache[mask] = got
        return got

    total = Fraction(0)
    items = list(counts.items())
    for s_mask, s_count in items:
        for t_mask, t_count in items:
            total += s_count * t_count * product(s_mask & t_mask)
    return total / deg


class SubsetSum(NamedTuple):
    value: Fraction
    partials: tuple[Fraction, ...]  # per subset cardinality, before dividing by w


def vafa_subset_sum(w: WeightVector) -> SubsetSum:
    """The subset form of the double sum, for well-formed weight vectors:
    value = (1/w) sum_{|J| <= d-1} (-1)^|J| n_J^2 prod_{j in J} (w / w_j)."""
    ws = w.weights
    deg = w.degree
    d = w.dim
    partials = [Fraction(0) for _ in range(d)]
    for mask in range(1 << (d + 1)):
        size = mask.bit_count()
        if size > d - 1:
            continue
        n_j = subset_gcd(w, mask)
        term = Fraction(n_j * n_j)
        for j in range(d + 1):
            if mask >> j & 1:
                term *= Fraction(deg, ws[j])
        if size % 2:
            term = -term
        partials[size] += term
    return SubsetSum(sum(partials) / deg, tuple(partials))


def stringy_mirror_closed(w: WeightVector) -> Fraction:
    """Stringy Euler number of the compactified mirror hypersurface:
    (1/w) sum_{|J| >= 2} (-1)^|J| n_Jbar^2 prod_{i in Jbar} (w / w_i).

    Only meaningful for IP weight vectors; anything else is a domain error.
    """
    if not has_ip_property(w):
        raise NotIPError(f"weight vector {w} lacks the IP-property")
    ws = w.weights
    deg = w.degree
    d = w.dim
    full = (1 << (d + 1)) - 1
    total = Fraction(0)
    for mask in range(1 << (d + 1)):
        size = mask.bit_count()
        if size < 2:
            continue
        comp = full ^ mask
        n_c = subset_gcd(w, comp)
        term = Fraction(n_c * n_c)
        for i in range(d + 1):
            if comp >> i & 1:
                term *= Fraction(deg, ws[i])
        if size % 2:
            term = -term
        total += term
    return total / deg


def stringy_polytope(lattice: MirrorLattice) -> Fraction:
    """Stringy Euler number from the mirror simplex alone:
    sum_{k=1..d} (-1)^(k-1) sum_{dim theta = k} Vol_k(theta) * Vol_{d-k}(pyramid
    over the polar face), all volumes by direct triangulation.

    Requires the bracket of the dual simplex to be canonical Fano, which for a
    weight vector is exactly the IP-property.
    """
    w = WeightVector(lattice.weights)
    if not has_ip_property(w):
        raise NotIPError(
            f"bracket of the dual simplex of {w} is not canonical (no IP-property)"
        )
    poly = mirror_simplex(lattice)
    d = poly.dim
    total = Fraction(0)
    for k in range(1, d + 1):
        sign = 1 if k % 2 else -1
        for face in poly.faces(k):
            vol = face_volume(poly, face)
            section = normalized_volume(normal_cone_section(poly, face))
            total += sign * vol * section
    return total


def stringy_reflexive(delta: Polytope) -> Fraction:
    """Stringy Euler number of a Calabi-Yau hypersurface from a reflexive
    polytope: sum_{k=1..d-2} (-1)^(k-1) sum Vol_k(theta) * Vol_{d-k-1}(theta*)."""
    if not (delta.is_full_dimensional and delta.is_lattice and delta.origin_interior()):
        raise DomainError("reflexive lattice polytope with interior origin required")
    if any(f.offset != 1 for f in delta.facets):
        raise DomainError("polytope is not reflexive (dual is not a lattice polytope)")
    dual = dual_polytope(delta)
    d = delta.dim
    total = Fraction(0)
    for k in range(1, d - 1):
        sign = 1 if k % 2 else -1
        for face in delta.faces(k):
            polar = dual_face(delta, dual, face)
            total += sign * face_volume(delta, face) * face_volume(dual, polar)
    return total


def k3_identity(delta: Polytope) -> Fraction:
    """Residual of the K3 volume identity
    24 = Vol_3 - sum_facets Vol_2/n + sum_edges Vol_1 * Vol_1(polar)
    for a 3-dimensional almost-reflexive lattice polytope (0 means it holds)."""
    if delta.ambient_dim != 3 or delta.dim != 3:
        raise DomainError("a 3-dimensional polytope is required")
    flags = fano_classification(delta)
    if not (flags.canonical and flags.almost_pseudoreflexive):
        raise DomainError("polytope is not almost reflexive")
    dual = dual_polytope(delta)
    rhs = normalized_volume(delta)
    for face in delta.faces(2):
        distance = delta.facets[face.facet_ids[0]].offset
        rhs -= face_volume(delta, face) / distance
    for face in delta.faces(1):
        rhs += face_volume(delta, face) * face_volume(dual, dual_face(delta, dual, face))
    return Fraction(24) - rhs


@dataclass(frozen=True)
class EulerReport:
    """Aggregated results of the mirror test for one weight vector."""

    weights: tuple[int, ...]
    degree: int
    well_formed: bool
    gorenstein: bool
    ip: bool
    transverse: bool
    chi_orb_formula: Fraction
    chi_str_mirror: Fraction | None
    integral: bool
    methods_agree: bool
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "degree": self.degree,
            "well_formed": self.well_formed,
            "gorenstein": self.gorenstein,
            "ip": self.ip,
            "transverse": self.transverse,
            "chi_orb_formula": format_rational(self.chi_orb_formula),
            "chi_str_mirror": (
                None if self.chi_str_mirror is None else format_rational(self.chi_str_mirror)
            ),
            "integral": self.integral,
            "methods_agree": self.methods_agree,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def mirror_test(w: WeightVector) -> EulerReport:
    """Run every applicable Euler-number route and cross-check them.

    For IP vectors the report carries chi_str_mirror = (-1)^(d-1) *
    chi_orb_formula; a non-transverse IP vector additionally gets diagnostics
    against the Calabi-Yau attached to its Newton polytope (integrality
    failures and stringy mismatches are recorded as notes, not errors).
    """
    well_formed, gorenstein = weight_flags(w)
    transverse = is_transverse(w)
    ip = has_ip_property(w)
    sign = 1 if w.dim % 2 else -1

    chi_double = vafa_double_sum(w)
    notes: list[str] = []
    values = {"double-sum": chi_double}
    chi_str: Fraction | None = None

    if well_formed:
        values["subset-sum"] = vafa_subset_sum(w).value
    else:
        notes.append("not well-formed: chi_orb_formula is a formula value only")

    if well_formed and ip:
        lattice = mirror_lattice(w)
        chi_str = stringy_mirror_closed(w)
        values["closed-form"] = sign * chi_str
        values["polytope"] = sign * stringy_polytope(lattice)
    elif well_formed:
        notes.append("no IP-property: the mirror construction does not apply; "
                     "chi_orb_formula is a formula value only")

    methods_agree = len(set(values.values())) == 1
    if not methods_agree:
        detail = ", ".join(f"{k}={format_rational(v)}" for k, v in sorted(values.items()))
        notes.append(f"methods disagree: {detail}")

    integral = chi_double.denominator == 1
    if well_formed and ip and not transverse:
        if not integral:
            notes.append(
                f"chi_orb_formula = {format_rational(chi_double)} is not an integer: "
                "no Landau-Ginzburg description and no mirror at all"
            )
        lattice = mirror_lattice(w)
        hull = newton_hull(w, lattice)
        flags = fano_classification(hull)
        if flags.reflexive:
            chi_geom = stringy_reflexive(hull)
            notes.append(
                f"newton polytope hypersurface is a Calabi-Yau with chi_str = "
                f"{format_rational(chi_geom)}"
            )
            expected = sign * chi_geom
            if chi_str != expected:
                notes.append(
                    f"mirror mismatch: chi_str_mirror = {format_rational(chi_str)} != "
                    f"{format_rational(expected)} = (-1)^(d-1) * chi_str of the newton "
                    "polytope hypersurface: not a mirror pair"
                )

    return EulerReport(
        weights=w.weights,
        degree=w.degree,
        well_formed=well_formed,
        gorenstein=gorenstein,
        ip=ip,
        transverse=transverse,
        chi_orb_formula=chi_double,
        chi_str_mirror=chi_str,
        integral=integral,
        methods_agree=methods_agree,
        notes=tuple(notes),
    )
