"""Brute-force oracles: exhaustive enumeration and traditionality detection.

These searches are deliberately independent of the classifier: they work from
the axioms (plus a handful of proven closure facts used as pruning rules) so
their output can falsify the classifier at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceeded, InfiniteGroup
from .group_ring import RingElement, simple_quantity
from .groups import (
    Automorphism,
    GroupDescriptor,
    GroupElement,
    Subgroup,
    all_automorphisms,
    all_subgroups,
    automorphism_sort_key,
    close_automorphisms,
    orbit,
)
from .schur import (
    SchurPresentation,
    VALID,
    is_ssubgroup,
    quotient,
    restrict,
    verify_axioms,
)

DEFAULT_FINITE_BOUND = 16
MAX_WINDOW = 6


# -- exhaustive enumeration over finite groups --------------------------------


def enumerate_finite(
    group: GroupDescriptor,
    bound: int = DEFAULT_FINITE_BOUND,
    prune: bool = True,
) -> list[SchurPresentation]:
    """All Schur-ring partitions of a finite group, deterministically ordered.

    Backtracking assigns the least unassigned element to a fresh class (every
    subset containing it is tried), forcing the star class immediately and
    pruning on product closure over completed classes.  Disabling ``prune``
    falls back to raw partition enumeration; the final arbiter is
    verify_axioms either way, so both modes return the same set.
    """
    if group.is_infinite:
        raise InfiniteGroup("enumeration needs a finite group")
    if group.order > bound:
        raise BoundExceeded(f"|G| = {group.order} exceeds bound {bound}")
    identity = group.identity
    pool = tuple(sorted(g for g in group.elements() if g != identity))
    id_class = frozenset([identity])
    results: list[SchurPresentation] = []

    def products_consistent(done: list[frozenset], fresh: Sequence[frozenset]) -> bool:
        sums = {c: simple_quantity(group, c) for c in done}
        for c in fresh:
            for d in done:
                prod = sums[c] * sums[d]
                for e in done:
                    first = None
                    for g in e:
                        v = prod.coeff(g)
                        if first is None:
                            first = v
                        elif v != first:
                            return False
        return True

    def extend(classes: list[frozenset], remaining: tuple[GroupElement, ...]) -> None:
        if not remaining:
            P = SchurPresentation(group, [id_class] + classes)
            if verify_axioms(P).verdict == VALID:
                results.append(P)
            return
        least, rest = remaining[0], remaining[1:]
        for mask in range(2 ** len(rest)):
            cls = frozenset(
                [least] + [rest[i] for i in range(len(rest)) if mask >> i & 1]
            )
            if prune:
                star = frozenset(group.inverse(g) for g in cls)
                if star == cls:
                    fresh = [cls]
                elif star & cls:
                    continue
                elif star <= frozenset(rest):
                    fresh = [cls, star]
                else:
                    continue
                new_classes = classes + fresh
                if not products_consistent([id_class] + new_classes, fresh):
                    continue
            else:
                fresh = [cls]
                new_classes = classes + fresh
            used = set().union(*fresh)
            extend(new_classes, tuple(g for g in remaining if g not in used))

    extend([], pool)
    return sorted(results, key=lambda P: tuple(tuple(sorted(c)) for c in P.classes))


# -- traditionality -----------------------------------------------------------


@dataclass(frozen=True)
class TraditionalityResult:
    kind: str  # "trivial" | "orbit" | "tensor" | "wedge" | "no"
    generators: tuple[Automorphism, ...] = ()
    split: tuple[Subgroup, Subgroup] | None = None
    tower: tuple[Subgroup, Subgroup] | None = None  # (K, H)

    def __bool__(self) -> bool:
        return self.kind != "no"

    def describe(self) -> str:
        if self.kind == "orbit":
            return "orbit<" + ",".join(str(g) for g in self.generators) + ">"
        if self.kind == "tensor":
            return f"tensor({self.split[0]} x {self.split[1]})"
        if self.kind == "wedge":
            return f"wedge(K={self.tower[0]}, H={self.tower[1]})"
        return self.kind


def _automorphism_subgroups(group: GroupDescriptor) -> list[frozenset[Automorphism]]:
    autos = [phi for phi in all_automorphisms(group) if not phi.is_identity()]
    seen: dict[frozenset, None] = {frozenset([Automorphism.identity(group)]): None}
    for size in range(1, len(autos) + 1):
        for combo in combinations(autos, size):
            seen[close_automorphisms(combo)] = None
    return sorted(seen, key=lambda s: (len(s), sorted(map(automorphism_sort_key, s))))


def _canonical_generating_set(members: frozenset[Automorphism]) -> tuple[Automorphism, ...]:
    nonid = sorted((p for p in members if not p.is_identity()), key=automorphism_sort_key)
    for size in range(0, len(nonid) + 1):
        for combo in combinations(nonid, size):
            if not combo and len(members) > 1:
                continue
            if close_automorphisms(combo or [next(iter(members))]) == members:
                return combo
    return tuple(nonid)


def _orbit_partition(group: GroupDescriptor, gens: Iterable[Automorphism]) -> set[frozenset]:
    gens = list(gens)
    classes, seen = set(), set()
    for g in group.elements():
        if g in seen:
            continue
        orb = orbit(gens, g, bound=group.order or 0)
        seen |= orb
        classes.add(orb)
    return classes


def is_traditional(P: SchurPresentation) -> TraditionalityResult:
    """First matching family: trivial, orbit, tensor, wedge (parts recursively
    traditional), else "no".

    The orbit search runs over the parametric automorphism family, which is
    all of Aut(G) whenever the two factor orders are coprime.
    """
    G = P.group
    if G.is_infinite:
        raise InfiniteGroup("traditionality detection works on finite groups")
    class_set = set(P.classes)

    rest = frozenset(g for g in G.elements() if g != G.identity)
    if G.order >= 2 and class_set == {frozenset([G.identity]), rest}:
        return TraditionalityResult("trivial")

    for members in _automorphism_subgroups(G):
        if _orbit_partition(G, members) == class_set:
            return TraditionalityResult("orbit", generators=_canonical_generating_set(members))

    subgroups = all_subgroups(G)
    proper = [H for H in subgroups if not H.is_trivial and H.order != G.order]
    for H in proper:
        for K in proper:
            if H.order * K.order != G.order:
                continue
            h_elems, k_elems = set(H.elements()), set(K.elements())
            if len(h_elems & k_elems) != 1:
                continue
            if not (is_ssubgroup(P, H) and is_ssubgroup(P, K)):
                continue
            h_classes = [c for c in P.classes if c <= h_elems]
            k_classes = [c for c in P.classes if c <= k_elems]
            products = {
                frozenset(G.mul(x, y) for x in ch for y in ck)
                for ch in h_classes
                for ck in k_classes
            }
            if products == class_set:
                return TraditionalityResult("tensor", split=(H, K))

    for H in proper:
        if not is_ssubgroup(P, H):
            continue
        h_elems = set(H.elements())
        for K in proper:
            if not (H.contains_subgroup(K) and is_ssubgroup(P, K)):
                continue
            k_elems = list(K.elements())
            outside_ok = all(
                frozenset(G.mul(g, k) for k in k_elems) <= c
                for c in P.classes
                if not c <= h_elems
                for g in c
            )
            if not outside_ok:
                continue
            if is_traditional(restrict(P, H)) and is_traditional(quotient(P, K)):
                return TraditionalityResult("wedge", tower=(K, H))

    return TraditionalityResult("no")


# -- windowed enumeration over Z x Z_3 ----------------------------------------


def _set_partitions(items: Sequence) -> Iterator[list[frozenset]]:
    items = sorted(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for mask in range(2 ** len(rest)):
        chosen = [rest[i] for i in range(len(rest)) if mask >> i & 1]
        cls = frozenset([first] + chosen)
        others = [x for x in rest if x not in cls]
        for sub in _set_partitions(others):
            yield [cls] + sub


def _star_of(group: GroupDescriptor, c: frozenset) -> frozenset:
    return frozenset(group.inverse(g) for g in c)


def _level_candidates(group: GroupDescriptor, k: int, mode: str) -> list[tuple[frozenset, ...]]:
    """Admissible class layouts for the z-levels +-k.

    Discrete projections partition the coset at +k (the -k side is the star
    image).  Symmetric projections partition the combined six-element slab
    into star-closed classes, each meeting both signs; three-element classes
    are excluded outright since a mixed-sign triple can never be a torsion
    coset.
    """
    out = []
    if mode == "discrete":
        coset = sorted(group.coset_of_torsion(k))
        for parts in _set_partitions(coset):
            layout = tuple(parts) + tuple(_star_of(group, c) for c in parts)
            out.append(layout)
    else:
        slab = sorted(group.coset_of_torsion(k) | group.coset_of_torsion(-k))
        for parts in _set_partitions(slab):
            classes = tuple(parts)
            if any(len({1 if g.z_exp > 0 else -1 for g in c}) != 2 for c in classes):
                continue
            if any(len(c) == 3 for c in classes):
                continue
            if {_star_of(group, c) for c in classes} != set(classes):
                continue
            out.append(classes)
    return sorted(out, key=lambda layout: sorted(tuple(sorted(c)) for c in layout))


def _constant_on(prod: RingElement, cls: frozenset) -> bool:
    first = None
    for g in cls:
        v = prod.coeff(g)
        if first is None:
            first = v
        elif v != first:
            return False
    return True


class _WindowSearch:
    def __init__(self, group: GroupDescriptor, window: int, mode: str, torsion: tuple):
        self.group = group
        self.window = window
        self.mode = mode
        self.base = [frozenset([group.identity])] + list(torsion)
        self.results: list[list[frozenset]] = []

    def run(self) -> None:
        candidates = {
            k: _level_candidates(self.group, k, self.mode)
            for k in range(1, self.window + 1)
        }
        self._extend(list(self.base), 1, candidates)

    def _extend(self, classes: list[frozenset], level: int, candidates) -> None:
        if level > self.window:
            if self._small_class_rule(classes):
                self.results.append(list(classes))
            return
        for layout in candidates[level]:
            extended = classes + list(layout)
            if self._consistent(extended, layout):
                self._extend(extended, level + 1, candidates)

    def _consistent(self, classes: list[frozenset], fresh: Sequence[frozenset]) -> bool:
        group = self.group
        lookup = {g: c for c in classes for g in c}
        sums = {c: simple_quantity(group, c) for c in classes}
        fresh_set = set(fresh)
        for i, c in enumerate(classes):
            for d in classes[i:]:
                if c not in fresh_set and d not in fresh_set:
                    continue
                prod = sums[c] * sums[d]
                checked = set()
                for g in prod.support():
                    e = lookup.get(g)
                    if e is None or e in checked:
                        continue
                    checked.add(e)
                    if not _constant_on(prod, e):
                        return False
        # closure under the squaring transport (coprime to the torsion order)
        covered = set(lookup)
        for c in classes:
            image = sums[c].frobenius(2)
            support = image.support()
            if not support <= covered:
                continue
            if not self._is_union(support, lookup):
                return False
        return True

    @staticmethod
    def _is_union(elems: frozenset, lookup: dict) -> bool:
        remaining = set(elems)
        while remaining:
            g = next(iter(remaining))
            c = lookup.get(g)
            if c is None or not c <= remaining:
                return False
            remaining -= c
        return True

    def _small_class_rule(self, classes: list[frozenset]) -> bool:
        # classes of size < 3 push z^(3m) into the pure-z part of the window
        lookup = {g: c for c in classes for g in c}
        for c in classes:
            if len(c) >= 3:
                continue
            for g in c:
                target = GroupElement(3 * g.z_exp, 0)
                if abs(target.z_exp) > self.window or target.z_exp == 0:
                    continue
                target_class = lookup.get(target)
                if target_class is None or any(x.a_exp for x in target_class):
                    return False
        return True


def enumerate_windowed(
    window: int,
    projection: str | None = None,
) -> list[SchurPresentation]:
    """All window-consistent partitions of the window of Z x Z_3.

    Constraints: {1} is a class, star closure, the torsion subgroup is an
    S-subgroup, the projection modulo torsion is a discrete or symmetric
    window over Z, exact in-window product closure, closure under the
    squaring transport, the coset-or-size class-shape rule, and the
    small-class power rule.  ``projection`` filters to one projection type.
    """
    if window < 1 or window > MAX_WINDOW:
        raise BoundExceeded(f"window must be between 1 and {MAX_WINDOW}")
    group = GroupDescriptor(0, 3)
    a, a2 = GroupElement(0, 1), GroupElement(0, 2)
    torsion_layouts = [
        (frozenset([a]), frozenset([a2])),
        (frozenset([a, a2]),),
    ]
    results = []
    for mode in ("discrete", "symmetric"):
        if projection and mode != projection:
            continue
        for torsion in torsion_layouts:
            search = _WindowSearch(group, window, mode, torsion)
            search.run()
            for classes in search.results:
                P = SchurPresentation(
                    group, classes, window=window, tag=f"windowed({mode})"
                )
                if verify_axioms(P).ok:
                    results.append(P)
    return results
