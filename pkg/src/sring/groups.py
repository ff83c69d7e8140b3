"""Elements, subgroups and automorphisms of Z x Z_m and Z_n x Z_m.

The group is a direct product of a cyclic "free" factor <z> (infinite or of
order n) and a cyclic torsion factor <a> of order m.  Elements are stored as
reduced exponent pairs, so equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from .errors import InfiniteGroup, InvalidAutomorphism, OrbitUnbounded

DEFAULT_ORBIT_BOUND = 64


class GroupElement(NamedTuple):
    """Exponent pair z^z_exp * a^a_exp; the identity is (0, 0)."""

    z_exp: int
    a_exp: int

    def __str__(self) -> str:
        return format_element(self)


IDENTITY = GroupElement(0, 0)


@dataclass(frozen=True)
class GroupDescriptor:
    """Direct product of a cyclic free factor and a cyclic torsion factor.

    ``free_order == 0`` encodes the infinite cyclic factor; ``free_order == n``
    with n >= 1 gives Z_n.  ``torsion_order`` is the order m >= 1 of <a>.
    """

    free_order: int = 0
    torsion_order: int = 1

    def __post_init__(self) -> None:
        if self.free_order < 0:
            raise ValueError("free_order must be 0 (infinite) or >= 1")
        if self.torsion_order < 1:
            raise ValueError("torsion_order must be >= 1")

    @property
    def is_infinite(self) -> bool:
        return self.free_order == 0

    @property
    def order(self) -> int | None:
        """Group order, or None for the infinite group."""
        if self.is_infinite:
            return None
        return self.free_order * self.torsion_order

    # -- element arithmetic ------------------------------------------------

    def element(self, z_exp: int, a_exp: int) -> GroupElement:
        """Build the reduced element z^z_exp * a^a_exp."""
        if self.free_order:
            z_exp %= self.free_order
        return GroupElement(z_exp, a_exp % self.torsion_order)

    def reduce(self, g: GroupElement) -> GroupElement:
        return self.element(*g)

    @property
    def identity(self) -> GroupElement:
        return IDENTITY

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.element(g.z_exp + h.z_exp, g.a_exp + h.a_exp)

    def inverse(self, g: GroupElement) -> GroupElement:
        return self.element(-g.z_exp, -g.a_exp)

    def pow(self, g: GroupElement, k: int) -> GroupElement:
        return self.element(g.z_exp * k, g.a_exp * k)

    # -- enumeration -------------------------------------------------------

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite group in canonical order."""
        if self.is_infinite:
            raise InfiniteGroup("cannot enumerate an infinite group")
        for z in range(self.free_order):
            for a in range(self.torsion_order):
                yield GroupElement(z, a)

    def window_elements(self, window: int) -> Iterator[GroupElement]:
        """Elements with |z_exp| <= window (all elements for a finite group)."""
        if not self.is_infinite:
            yield from self.elements()
            return
        for z in range(-window, window + 1):
            for a in range(self.torsion_order):
                yield GroupElement(z, a)

    def coset_of_torsion(self, z_exp: int) -> frozenset[GroupElement]:
        """The full torsion coset z^z_exp * <a>."""
        return frozenset(self.element(z_exp, a) for a in range(self.torsion_order))

    def to_json(self) -> dict:
        return {
            "free": "Z" if self.is_infinite else self.free_order,
            "torsion": self.torsion_order,
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupDescriptor":
        free = data["free"]
        return cls(0 if free == "Z" else int(free), int(data["torsion"]))


# -- text form --------------------------------------------------------------

_ELEMENT_RE = re.compile(
    r"^\s*(?:(?P<one>1)|(?P<z>z(?:\^(?P<zk>-?\d+))?)?\*?(?P<a>a(?:\^(?P<ak>-?\d+))?)?)\s*$"
)


def format_element(g: GroupElement) -> str:
    """Render an element as e.g. "z^3*a^2"; unit factors are omitted."""
    parts = []
    if g.z_exp:
        parts.append("z" if g.z_exp == 1 else f"z^{g.z_exp}")
    if g.a_exp:
        parts.append("a" if g.a_exp == 1 else f"a^{g.a_exp}")
    return "*".join(parts) if parts else "1"


def parse_element(text: str, group: GroupDescriptor | None = None) -> GroupElement:
    """Parse the text form produced by :func:`format_element`.

    The separating "*" is optional, so "z^5a^2" is accepted too.
    """
    match = _ELEMENT_RE.match(text)
    if not match or (not match.group("one") and not match.group("z") and not match.group("a")):
        raise ValueError(f"not a group element: {text!r}")
    if match.group("one"):
        z_exp = a_exp = 0
    else:
        z_exp = 0
        if match.group("z"):
            z_exp = int(match.group("zk")) if match.group("zk") is not None else 1
        a_exp = 0
        if match.group("a"):
            a_exp = int(match.group("ak")) if match.group("ak") is not None else 1
    g = GroupElement(z_exp, a_exp)
    return group.reduce(g) if group is not None else g


# -- automorphisms -----------------------------------------------------------


def _units(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [u for u in range(n) if gcd(u, n) == 1]


def _modinv(u: int, n: int) -> int:
    if n == 1:
        return 0
    return pow(u, -1, n)


@dataclass(frozen=True)
class Automorphism:
    """Automorphism of the form z -> a^twist * z^unit, a -> a^torsion_unit.

    For m prime this parametric family is the whole automorphism group; the
    validator rejects parameters that do not extend to a bijective
    homomorphism.
    """

    group: GroupDescriptor
    twist: int          # exponent j in z -> a^j z^e
    unit: int           # e: +1/-1 for infinite free part, else a unit mod n
    torsion_unit: int   # u in a -> a^u, coprime to m

    def __post_init__(self) -> None:
        G = self.group
        n, m = G.free_order, G.torsion_order
        object.__setattr__(self, "twist", self.twist % m)
        object.__setattr__(self, "torsion_unit", self.torsion_unit % m)
        if gcd(self.torsion_unit, m) != 1:
            raise InvalidAutomorphism(f"a -> a^{self.torsion_unit} is not bijective mod {m}")
        if n == 0:
            if self.unit not in (1, -1):
                raise InvalidAutomorphism("infinite free part needs z -> a^j z^(+-1)")
        else:
            object.__setattr__(self, "unit", self.unit % n)
            if gcd(self.unit, n) != 1:
                raise InvalidAutomorphism(f"z -> z^{self.unit} is not bijective mod {n}")
            if (self.twist * n) % m:
                raise InvalidAutomorphism("image of z would violate z^n = 1")

    def apply(self, g: GroupElement) -> GroupElement:
        return self.group.element(
            self.unit * g.z_exp,
            self.twist * g.z_exp + self.torsion_unit * g.a_exp,
        )

    def __call__(self, g: GroupElement) -> GroupElement:
        return self.apply(g)

    def apply_set(self, elems: Iterable[GroupElement]) -> frozenset[GroupElement]:
        return frozenset(self.apply(g) for g in elems)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        if self.group != other.group:
            raise InvalidAutomorphism("automorphisms live on different groups")
        return Automorphism(
            self.group,
            self.torsion_unit * other.twist + self.twist * other.unit,
            self.unit * other.unit,
            self.torsion_unit * other.torsion_unit,
        )

    def inverse(self) -> "Automorphism":
        G = self.group
        n, m = G.free_order, G.torsion_order
        e_inv = self.unit if n == 0 else _modinv(self.unit, n)
        u_inv = _modinv(self.torsion_unit, m)
        j_inv = (-self.twist * e_inv * u_inv) % m
        return Automorphism(G, j_inv, e_inv, u_inv)

    def is_identity(self) -> bool:
        n, m = self.group.free_order, self.group.torsion_order
        unit_one = self.unit == 1 or (n == 1 and self.unit % n == 0)
        return self.twist % m == 0 and unit_one and self.torsion_unit % m == 1 % m

    @classmethod
    def identity(cls, group: GroupDescriptor) -> "Automorphism":
        return cls(group, 0, 1 if group.free_order != 1 else 0, 1)

    @classmethod
    def inversion(cls, group: GroupDescriptor) -> "Automorphism":
        """The map g -> g^-1."""
        n = group.free_order
        e = -1 if n == 0 else (n - 1) % n
        return cls(group, 0, e, group.torsion_order - 1)

    def name(self) -> str | None:
        """Canonical alias for one of the named maps, if any.

        Aliases are reserved for the infinite group with torsion order 3,
        where the named maps live.
        """
        if self.group != GroupDescriptor(0, 3):
            return None
        for alias, params in _NAMED_PARAMS.items():
            if (self.twist, self.unit, self.torsion_unit) == _reduced_params(self.group, params):
                return alias
        return None

    def to_json(self):
        alias = self.name()
        if alias:
            return alias
        return {"z": [self.twist, self.unit], "a": self.torsion_unit}

    def __str__(self) -> str:
        alias = self.name()
        base = f"z->a^{self.twist}z^{self.unit}, a->a^{self.torsion_unit}"
        return f"{alias} ({base})" if alias else base


# The five maps named in the classification, plus the two plain inversions.
_NAMED_PARAMS: dict[str, tuple[int, int, int]] = {
    "psi": (1, 1, 2),     # z -> a z,       a -> a^2
    "delta": (2, 1, 2),   # z -> a^2 z,     a -> a^2
    "xi": (0, -1, 2),     # z -> z^-1,      a -> a^2   (full inversion g -> g^-1)
    "rho": (1, -1, 1),    # z -> a z^-1,    a -> a
    "sigma": (2, -1, 1),  # z -> a^2 z^-1,  a -> a
    "zeta": (0, -1, 1),   # z -> z^-1,      a -> a
    "tau": (0, 1, 2),     # z -> z,         a -> a^2
}

NAMED_AUTOMORPHISM_ORDER = tuple(_NAMED_PARAMS)


def _reduced_params(group: GroupDescriptor, params: tuple[int, int, int]) -> tuple[int, int, int]:
    j, e, u = params
    n, m = group.free_order, group.torsion_order
    if n:
        e %= n
    return (j % m, e, u % m)


def named_automorphism(name: str, group: GroupDescriptor) -> Automorphism:
    """Look up one of psi/delta/xi/rho/sigma/zeta/tau on the given group."""
    try:
        j, e, u = _NAMED_PARAMS[name]
    except KeyError:
        raise KeyError(f"unknown automorphism alias {name!r}") from None
    return Automorphism(group, j, e, u)


def automorphism_from_json(data, group: GroupDescriptor) -> Automorphism:
    if isinstance(data, str):
        return named_automorphism(data, group)
    j, e = data["z"]
    return Automorphism(group, j, e, data["a"])


def automorphism_sort_key(phi: Automorphism) -> tuple:
    """Named maps first (in their canonical order), then by parameters."""
    alias = phi.name()
    if alias is not None:
        return (0, NAMED_AUTOMORPHISM_ORDER.index(alias))
    return (1, phi.twist, phi.unit, phi.torsion_unit)


def all_automorphisms(group: GroupDescriptor) -> list[Automorphism]:
    """Every automorphism of the supported parametric form, canonically ordered.

    Complete for the infinite group and for finite groups with coprime factor
    orders; for non-coprime finite products the parametric family is a proper
    subgroup of Aut(G).
    """
    n, m = group.free_order, group.torsion_order
    units_free = (1, -1) if n == 0 else tuple(_units(n))
    result = []
    for e in units_free:
        for j in range(m):
            if n and (j * n) % m:
                continue
            for u in _units(m):
                result.append(Automorphism(group, j, e, u))
    return sorted(result, key=automorphism_sort_key)


def close_automorphisms(
    gens: Iterable[Automorphism], bound: int = 4096
) -> frozenset[Automorphism]:
    """Closure of a generating set under composition (always finite here)."""
    gens = list(gens)
    if not gens:
        return frozenset()
    group = gens[0].group
    seen = {Automorphism.identity(group)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for phi in frontier:
            for g in gens:
                h = g.compose(phi)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > bound:
                        raise OrbitUnbounded("automorphism closure exceeded bound")
        frontier = nxt
    return frozenset(seen)


def orbit(
    gens: Iterable[Automorphism],
    g: GroupElement,
    bound: int = DEFAULT_ORBIT_BOUND,
) -> frozenset[GroupElement]:
    """The orbit of g under the group generated by gens.

    Raises OrbitUnbounded if the orbit closure exceeds the bound.  Every
    generator here has finite order, so closing under the generators alone
    already yields the group orbit.
    """
    gens = list(gens)
    seen = {g}
    frontier = [g]
    while frontier:
        nxt = []
        for x in frontier:
            for phi in gens:
                y = phi.apply(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise OrbitUnbounded(f"orbit of {format_element(g)} exceeded bound {bound}")
        frontier = nxt
    return frozenset(seen)


# -- subgroups ----------------------------------------------------------------


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b, g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class Subgroup:
    """Subgroup in Hermite-style normal form.

    Generated by z^free_step * a^twist together with a^torsion_step.  For the
    infinite group free_step == 0 means "no free part"; for a finite free
    factor of order n the trivial free part is encoded as free_step == n.
    torsion_step is a divisor d of m, giving the torsion part <a^d>
    (d == m means trivial).  Canonically 0 <= twist < torsion_step, and
    twist == 0 whenever the free part is trivial.

    This normal form covers every subgroup of the supported groups, including
    "twisted" ones such as <az> that the plain <z^h> x <a^d> shape misses.
    """

    group: GroupDescriptor
    free_step: int
    twist: int
    torsion_step: int

    def __post_init__(self) -> None:
        n, m = self.group.free_order, self.group.torsion_order
        d, h, c = self.torsion_step, self.free_step, self.twist
        if d < 1 or m % d:
            raise ValueError("torsion_step must divide the torsion order")
        if n == 0:
            if h < 0:
                raise ValueError("free_step must be >= 0")
        else:
            if h < 1 or n % h:
                raise ValueError("free_step must divide the free order")
        if not 0 <= c < d:
            raise ValueError("twist must satisfy 0 <= twist < torsion_step")
        if self._free_trivial and c:
            raise ValueError("twist must be 0 when the free part is trivial")
        if n and h != n and ((n // h) * c) % d:
            raise ValueError("twist incompatible with the free-part wrap-around")

    # -- constructors --------------------------------------------------------

    @classmethod
    def generated_by(
        cls, group: GroupDescriptor, elems: Iterable[GroupElement]
    ) -> "Subgroup":
        """The subgroup generated by the given elements."""
        n, m = group.free_order, group.torsion_order
        gens = [group.reduce(g) for g in elems]
        if n:
            gens.append(GroupElement(n, 0))  # wrap-around relation of the free factor
        h, c_h = 0, 0
        for k, i in gens:
            if k == 0:
                continue
            g, x, y = _ext_gcd(h, k)
            c_h = (x * c_h + y * i) % m
            h = g
        torsion_residues = [m]
        for k, i in gens:
            if h:
                torsion_residues.append((i - (k // h) * c_h) % m)
            elif k == 0:
                torsion_residues.append(i % m)
        d = 0
        for t in torsion_residues:
            d = gcd(d, t)
        d = d or m
        if n and h == 0:
            h = n
        trivial_free = (h == 0) if n == 0 else (h == n)
        c = 0 if trivial_free or d == 1 else c_h % d
        return cls(group, h, c, d)

    @classmethod
    def trivial(cls, group: GroupDescriptor) -> "Subgroup":
        return cls.generated_by(group, [])

    @classmethod
    def torsion(cls, group: GroupDescriptor) -> "Subgroup":
        """T(G) for the infinite group; the <a>-factor in general."""
        return cls.generated_by(group, [GroupElement(0, 1)])

    @classmethod
    def full(cls, group: GroupDescriptor) -> "Subgroup":
        return cls.generated_by(group, [GroupElement(1, 0), GroupElement(0, 1)])

    @classmethod
    def free_power(cls, group: GroupDescriptor, h: int) -> "Subgroup":
        """<z^h>, without torsion."""
        return cls.generated_by(group, [GroupElement(h, 0)])

    @classmethod
    def free_power_with_torsion(cls, group: GroupDescriptor, h: int) -> "Subgroup":
        """<z^h> x <a>."""
        return cls.generated_by(group, [GroupElement(h, 0), GroupElement(0, 1)])

    # -- structure -------------------------------------------------------------

    @property
    def _free_trivial(self) -> bool:
        n = self.group.free_order
        return self.free_step == 0 if n == 0 else self.free_step == n

    @property
    def torsion_included(self) -> bool:
        return self.torsion_step == 1

    @property
    def z_index(self) -> int:
        """The spec's h: 0 for a trivial free part, else the step of <z^h>."""
        return 0 if self._free_trivial else self.free_step

    @property
    def is_trivial(self) -> bool:
        return self._free_trivial and self.torsion_step == self.group.torsion_order

    @property
    def is_full(self) -> bool:
        full_free = self.free_step == 1 or self.group.free_order == 1
        return full_free and self.torsion_included and self.twist == 0

    @property
    def order(self) -> int | None:
        """Subgroup order, or None when infinite."""
        n, m = self.group.free_order, self.group.torsion_order
        torsion_count = m // self.torsion_step
        if self._free_trivial:
            return torsion_count
        if n == 0:
            return None
        return (n // self.free_step) * torsion_count

    def generators(self) -> list[GroupElement]:
        gens = []
        if not self._free_trivial:
            gens.append(self.group.element(self.free_step, self.twist))
        if self.torsion_step != self.group.torsion_order:
            gens.append(self.group.element(0, self.torsion_step))
        return gens

    def contains(self, g: GroupElement) -> bool:
        g = self.group.reduce(g)
        k, i = g
        if self._free_trivial:
            if k != 0:
                return False
            t = 0
        else:
            if k % self.free_step:
                return False
            t = k // self.free_step
        return (i - t * self.twist) % self.torsion_step == 0

    def __contains__(self, g: GroupElement) -> bool:
        return self.contains(g)

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return all(self.contains(g) for g in other.generators())

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite subgroup, in canonical order."""
        if self.order is None:
            raise InfiniteGroup("cannot enumerate an infinite subgroup")
        n, m = self.group.free_order, self.group.torsion_order
        free_count = 1 if self._free_trivial else n // self.free_step
        out = []
        for t in range(free_count):
            for j in range(m // self.torsion_step):
                out.append(
                    self.group.element(
                        t * self.free_step if not self._free_trivial else 0,
                        t * self.twist + j * self.torsion_step,
                    )
                )
        yield from sorted(out)

    def window_elements(self, window: int) -> Iterator[GroupElement]:
        """Members with |z_exp| <= window."""
        if self.order is not None:
            yield from self.elements()
            return
        h = self.free_step
        m = self.group.torsion_order
        for t in range(-(window // h), window // h + 1):
            for j in range(m // self.torsion_step):
                yield self.group.element(t * h, t * self.twist + j * self.torsion_step)

    # -- the subgroup as a group in its own right ------------------------------

    def as_group(self) -> tuple[GroupDescriptor, "SubgroupCoords"]:
        """Descriptor for H itself plus the coordinate maps G <-> H."""
        n, m = self.group.free_order, self.group.torsion_order
        new_m = m // self.torsion_step
        if self._free_trivial:
            new_n = 1
        elif n == 0:
            new_n = 0
        else:
            new_n = n // self.free_step
        return GroupDescriptor(new_n, new_m), SubgroupCoords(self)

    def to_json(self) -> dict:
        return {
            "free_step": self.free_step,
            "twist": self.twist,
            "torsion_step": self.torsion_step,
        }

    def __str__(self) -> str:
        gens = self.generators()
        if not gens:
            return "<1>"
        return "<" + ", ".join(format_element(g) for g in gens) + ">"


class SubgroupCoords:
    """Coordinate change between a subgroup and its standalone descriptor."""

    def __init__(self, sub: Subgroup):
        self.sub = sub

    def to_sub(self, g: GroupElement) -> GroupElement:
        sub = self.sub
        G = sub.group
        g = G.reduce(g)
        if not sub.contains(g):
            raise ValueError(f"{format_element(g)} is not in {sub}")
        if sub._free_trivial:
            t = 0
        else:
            t = g.z_exp // sub.free_step
        j = ((g.a_exp - t * sub.twist) % G.torsion_order) // sub.torsion_step
        new_m = G.torsion_order // sub.torsion_step
        return GroupElement(t, j % new_m)

    def from_sub(self, g: GroupElement) -> GroupElement:
        sub = self.sub
        G = sub.group
        t, j = g
        z = 0 if sub._free_trivial else t * sub.free_step
        return G.element(z, t * sub.twist + j * sub.torsion_step)


def all_subgroups(group: GroupDescriptor) -> list[Subgroup]:
    """Every subgroup of a finite group (abelian of rank <= 2)."""
    if group.is_infinite:
        raise InfiniteGroup("cannot enumerate subgroups of an infinite group")
    elems = list(group.elements())
    seen: dict[Subgroup, None] = {}
    seen[Subgroup.trivial(group)] = None
    for i, g in enumerate(elems):
        seen[Subgroup.generated_by(group, [g])] = None
        for h in elems[i:]:
            seen[Subgroup.generated_by(group, [g, h])] = None
    return sorted(
        seen,
        key=lambda s: (s.order, s.free_step, s.torsion_step, s.twist),
    )


# -- Smith normal form on two columns (for quotient maps) ---------------------


def _smith_2col(rows: list[tuple[int, int]]) -> tuple[int, int, list[list[int]]]:
    """Diagonalize the row lattice; returns (d0, d1, V) with d0 | d1.

    V is the unimodular column transform: the lattice spanned by the rows
    equals { (t0*d0, t1*d1) * V^-1 }, so x belongs to the quotient class of
    (x*V mod (d0, d1) ).  d == 0 encodes an infinite (free) direction.
    """
    A = [list(r) for r in rows if r != (0, 0)]
    V = [[1, 0], [0, 1]]

    def col_swap():
        for row in A:
            row[0], row[1] = row[1], row[0]
        for row in V:
            row[0], row[1] = row[1], row[0]

    def col_add(dst: int, src: int, q: int):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    while True:
        if not A or all(r == [0, 0] for r in A):
            return 1, 1, V  # unreachable with the torsion relation present
        # gather gcd of column 0 into a single row by row reduction
        while True:
            nz = [r for r in A if r[0]]
            if not nz:
                col_swap()
                nz = [r for r in A if r[0]]
                if not nz:
                    # only possible if every row is zero; handled above
                    return 1, 1, V
            pivot = min(nz, key=lambda r: abs(r[0]))
            done = True
            for row in A:
                if row is pivot or row[0] == 0:
                    continue
                q = row[0] // pivot[0]
                row[0] -= q * pivot[0]
                row[1] -= q * pivot[1]
                if row[0]:
                    done = False
            if done:
                break
        # clear the pivot's second entry by a column operation
        if pivot[1] % pivot[0]:
            col_add(1, 0, -(pivot[1] // pivot[0]))
            if pivot[1]:
                col_swap()
                continue
        elif pivot[1]:
            col_add(1, 0, -(pivot[1] // pivot[0]))
        d0 = abs(pivot[0])
        d1 = 0
        for row in A:
            if row is not pivot:
                d1 = gcd(d1, abs(row[1]))
        if d1 and d1 % d0:
            col_add(0, 1, 1)
            continue
        return d0, d1, V


def _mat2_inverse(V: list[list[int]]) -> list[list[int]]:
    det = V[0][0] * V[1][1] - V[0][1] * V[1][0]
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    return [
        [det * V[1][1], -det * V[0][1]],
        [-det * V[1][0], det * V[0][0]],
    ]


class QuotientMap:
    """Projection G -> G/K with a section, in canonical coordinates."""

    def __init__(self, group: GroupDescriptor, kernel: Subgroup):
        if kernel.group != group:
            raise ValueError("kernel lives in a different group")
        self.group = group
        self.kernel = kernel
        n, m = group.free_order, group.torsion_order
        if kernel.twist == 0:
            # natural coordinates: (k mod h, i mod d)
            h = 0 if kernel._free_trivial and n == 0 else kernel.free_step
            d = kernel.torsion_step
            self.descriptor = GroupDescriptor(h, d)
            self._mode = ("natural", h, d)
        else:
            rows = [(0, m)]
            if n:
                rows.append((n, 0))
            if not kernel._free_trivial:
                rows.append((kernel.free_step, kernel.twist))
            rows.append((0, kernel.torsion_step))
            d0, d1, V = _smith_2col(rows)
            self.descriptor = GroupDescriptor(d1, d0)
            self._mode = ("smith", V, _mat2_inverse(V), d0, d1)

    def project(self, g: GroupElement) -> GroupElement:
        g = self.group.reduce(g)
        if self._mode[0] == "natural":
            _, h, d = self._mode
            z = g.z_exp % h if h else g.z_exp
            return self.descriptor.element(z, g.a_exp % d if d else g.a_exp)
        _, V, _, d0, d1 = self._mode
        y0 = g.z_exp * V[0][0] + g.a_exp * V[1][0]
        y1 = g.z_exp * V[0][1] + g.a_exp * V[1][1]
        return self.descriptor.element(y1, y0)

    def section(self, q: GroupElement) -> GroupElement:
        """One preimage of a quotient element."""
        q = self.descriptor.reduce(q)
        if self._mode[0] == "natural":
            return self.group.reduce(GroupElement(q.z_exp, q.a_exp))
        _, _, Vinv, d0, d1 = self._mode
        y0, y1 = q.a_exp, q.z_exp
        x0 = y0 * Vinv[0][0] + y1 * Vinv[1][0]
        x1 = y0 * Vinv[0][1] + y1 * Vinv[1][1]
        return self.group.reduce(GroupElement(x0, x1))

    def preimage(self, q: GroupElement) -> frozenset[GroupElement]:
        """The full coset over a quotient element (kernel must be finite)."""
        if self.kernel.order is None:
            raise InfiniteGroup("preimages of an infinite kernel are infinite")
        base = self.section(q)
        return frozenset(self.group.mul(base, k) for k in self.kernel.elements())

    def project_set(self, elems: Iterable[GroupElement]) -> frozenset[GroupElement]:
        return frozenset(self.project(g) for g in elems)
