"""Schur presentations: axiom verification, S-sets, S-subgroups, quotients.

A presentation is a finite-support partition of a group (or of a window of an
infinite group) claiming to span a Schur ring.  Verification is exact; for
windowed presentations a product check runs only when it provably stays
inside the window, so truncation can never produce a false negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    BadPrime,
    MalformedPartition,
    NotInSpan,
    NotSSet,
    NotSSubgroup,
)
from .group_ring import CoeffFn, RingElement, simple_quantity
from .groups import (
    GroupDescriptor,
    GroupElement,
    QuotientMap,
    Subgroup,
    format_element,
)

BasicSet = frozenset


def _class_key(cls: frozenset) -> tuple:
    return tuple(sorted(cls))


class SchurPresentation:
    """A partition of a group (or a window of one) into basic sets."""

    __slots__ = ("group", "window", "tag", "classes", "_member_class")

    def __init__(
        self,
        group: GroupDescriptor,
        classes: Iterable[Iterable[GroupElement]],
        window: int = 0,
        tag: str | None = None,
    ):
        self.group = group
        self.window = int(window)
        self.tag = tag
        normalized = [frozenset(group.element(*g) for g in c) for c in classes]
        self.classes = tuple(sorted(normalized, key=_class_key))
        member: dict[GroupElement, frozenset] = {}
        for c in self.classes:
            for g in c:
                member.setdefault(g, c)
        self._member_class = member

    # -- basic queries -----------------------------------------------------

    def class_of(self, g: GroupElement) -> frozenset | None:
        return self._member_class.get(self.group.element(*g))

    def has_class(self, c: Iterable[GroupElement]) -> bool:
        return frozenset(self.group.element(*g) for g in c) in set(self.classes)

    def class_sum(self, c: frozenset) -> RingElement:
        return simple_quantity(self.group, c)

    def covered_elements(self) -> frozenset:
        return frozenset(self._member_class)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurPresentation)
            and self.group == other.group
            and self.window == other.window
            and self.classes == other.classes
        )

    def __hash__(self) -> int:
        return hash((self.group, self.window, self.classes))

    def same_classes(self, other: "SchurPresentation") -> bool:
        return self.group == other.group and self.classes == other.classes

    def __repr__(self) -> str:
        kind = "finite" if not self.group.is_infinite else f"window={self.window}"
        return f"<SchurPresentation {kind} classes={len(self.classes)} tag={self.tag!r}>"

    def describe(self) -> str:
        return "; ".join(
            "{" + ", ".join(format_element(g) for g in sorted(c)) + "}" for c in self.classes
        )

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "window": self.window,
            "classes": [[list(g) for g in sorted(c)] for c in self.classes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchurPresentation":
        group = GroupDescriptor.from_json(data["group"])
        classes = [
            [GroupElement(int(z), int(a)) for z, a in c] for c in data["classes"]
        ]
        return cls(group, classes, window=int(data.get("window", 0)))


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Concrete evidence for an Invalid verdict."""

    kind: str  # "identity-class" | "star-closure" | "product-closure"
    left: tuple
    right: tuple | None
    detail: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "left": [list(g) for g in self.left],
            "right": [list(g) for g in self.right] if self.right is not None else None,
            "detail": self.detail,
        }


VALID = "valid"
VALID_UP_TO_WINDOW = "valid-up-to-window"
INVALID = "invalid"


@dataclass(frozen=True)
class VerificationReport:
    verdict: str
    checked_pairs: int
    effective_window: int | None = None
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in (VALID, VALID_UP_TO_WINDOW)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "checked_pairs": self.checked_pairs,
            "effective_window": self.effective_window,
            "witness": self.witness.to_json() if self.witness else None,
        }


def check_partition(P: SchurPresentation) -> None:
    """Raise MalformedPartition on empty classes, overlaps, or gaps."""
    total = 0
    for c in P.classes:
        if not c:
            raise MalformedPartition("empty class")
        total += len(c)
    if total != len(P._member_class):
        raise MalformedPartition("classes overlap")
    if P.group.is_infinite:
        if P.window < 1:
            raise MalformedPartition("windowed presentation needs window >= 1")
        universe = P.group.window_elements(P.window)
    else:
        universe = P.group.elements()
    missing = [g for g in universe if g not in P._member_class]
    if missing:
        raise MalformedPartition(f"group not covered, e.g. {format_element(missing[0])}")


def _checkable_pairs(P: SchurPresentation) -> Iterator[tuple[frozenset, frozenset]]:
    """Unordered class pairs whose product provably stays inside the window."""
    classes = P.classes
    if P.group.is_infinite:
        reach = {c: max(abs(g.z_exp) for g in c) for c in classes}
        for i, c in enumerate(classes):
            for d in classes[i:]:
                if reach[c] + reach[d] <= P.window:
                    yield c, d
    else:
        for i, c in enumerate(classes):
            for d in classes[i:]:
                yield c, d


def verify_axioms(P: SchurPresentation) -> VerificationReport:
    """Check the defining axioms: identity class, star closure, product closure.

    Product closure is tested as coefficient-constancy of each product on
    every class it meets.  Deterministic: classes are scanned in canonical
    order, so the witness is the least one.
    """
    check_partition(P)
    infinite = P.group.is_infinite

    def report(verdict, pairs, witness=None):
        return VerificationReport(
            verdict,
            pairs,
            effective_window=P.window if infinite else None,
            witness=witness,
        )

    identity_class = P.class_of(P.group.identity)
    if identity_class != frozenset([P.group.identity]):
        return report(
            INVALID,
            0,
            Witness(
                "identity-class",
                _class_key(identity_class),
                None,
                "the identity must form a singleton class",
            ),
        )

    class_set = set(P.classes)
    for c in P.classes:
        c_star = frozenset(P.group.inverse(g) for g in c)
        if c_star not in class_set:
            return report(
                INVALID,
                0,
                Witness(
                    "star-closure",
                    _class_key(c),
                    _class_key(c_star),
                    "the inverse set of a class must itself be a class",
                ),
            )

    pairs = 0
    for c, d in _checkable_pairs(P):
        product = P.class_sum(c) * P.class_sum(d)
        pairs += 1
        seen: set[frozenset] = set()
        for g in sorted(product.support()):
            e = P.class_of(g)
            if e is None or e in seen:
                continue
            seen.add(e)
            values = {product.coeff(h) for h in e}
            if len(values) > 1:
                return report(
                    INVALID,
                    pairs,
                    Witness(
                        "product-closure",
                        _class_key(c),
                        _class_key(d),
                        f"product is not constant on class {_fmt_class(e)}",
                    ),
                )
    return report(VALID_UP_TO_WINDOW if infinite else VALID, pairs)


def _fmt_class(c: Iterable[GroupElement]) -> str:
    return "{" + ", ".join(format_element(g) for g in sorted(c)) + "}"


def is_sset(P: SchurPresentation, elems: Iterable[GroupElement]) -> bool:
    """True when the set is exactly a union of classes of P."""
    remaining = {P.group.element(*g) for g in elems}
    while remaining:
        g = next(iter(remaining))
        c = P.class_of(g)
        if c is None or not c <= remaining:
            return False
        remaining -= c
    return True


def verify_wielandt(P: SchurPresentation) -> VerificationReport:
    """Alternative verification: span closed under Hadamard and star,
    contains the identity, supports cover the group.

    Ring closure is tested through the level-set route: every coefficient
    level set of every product must be a union of classes.  Must agree with
    :func:`verify_axioms`.
    """
    check_partition(P)
    infinite = P.group.is_infinite

    def report(verdict, pairs, witness=None):
        return VerificationReport(
            verdict,
            pairs,
            effective_window=P.window if infinite else None,
            witness=witness,
        )

    if not is_sset(P, [P.group.identity]):
        return report(
            INVALID,
            0,
            Witness(
                "identity-class",
                _class_key(P.class_of(P.group.identity)),
                None,
                "the identity element is not a singleton S-set",
            ),
        )

    for c in P.classes:
        c_star = frozenset(P.group.inverse(g) for g in c)
        if not is_sset(P, c_star):
            return report(
                INVALID,
                0,
                Witness(
                    "star-closure",
                    _class_key(c),
                    _class_key(c_star),
                    "the star of a class is not an S-set",
                ),
            )

    pairs = 0
    for c, d in _checkable_pairs(P):
        product = P.class_sum(c) * P.class_sum(d)
        pairs += 1
        by_value: dict[Fraction, set] = {}
        for g, v in product.terms().items():
            by_value.setdefault(v, set()).add(g)
        for v in sorted(by_value):
            if not is_sset(P, by_value[v]):
                return report(
                    INVALID,
                    pairs,
                    Witness(
                        "product-closure",
                        _class_key(c),
                        _class_key(d),
                        f"coefficient level set for value {v} is not an S-set",
                    ),
                )
    return report(VALID_UP_TO_WINDOW if infinite else VALID, pairs)


# -- span membership and S-subgroups -----------------------------------------


def _require_in_span(alpha: RingElement, P: SchurPresentation) -> None:
    for g in alpha.support():
        c = P.class_of(g)
        if c is None:
            raise NotInSpan(f"support element {format_element(g)} lies outside the partition")
        values = {alpha.coeff(h) for h in c}
        if len(values) > 1:
            raise NotInSpan(f"coefficients are not constant on class {_fmt_class(c)}")


def level_sets(alpha: RingElement, P: SchurPresentation) -> list[tuple[Fraction, frozenset]]:
    """Partition the support of alpha by coefficient value.

    Each part is an S-set of P (the Schur-Wielandt principle); NotInSpan is
    raised when alpha is not in the span of P's class sums.
    """
    _require_in_span(alpha, P)
    by_value: dict[Fraction, set] = {}
    for g, v in alpha.terms().items():
        by_value.setdefault(v, set()).add(g)
    out = []
    for v in sorted(by_value, reverse=True):
        part = frozenset(by_value[v])
        if not is_sset(P, part):  # cannot happen once constancy holds
            raise NotInSpan(f"level set for {v} is not a union of classes")
        out.append((v, part))
    return out


def is_ssubgroup(P: SchurPresentation, H: Subgroup) -> bool:
    """True when no class straddles H (checked on the window for infinite G)."""
    for c in P.classes:
        inside = sum(1 for g in c if H.contains(g))
        if inside not in (0, len(c)):
            return False
    return True


def generated_subgroup(alpha: RingElement, P: SchurPresentation) -> Subgroup:
    """The subgroup generated by the support of alpha; always an S-subgroup."""
    _require_in_span(alpha, P)
    H = Subgroup.generated_by(P.group, alpha.support())
    if not is_ssubgroup(P, H):
        raise NotSSubgroup(
            f"<supp(alpha)> = {H} is split by a class; the presentation is not a Schur ring"
        )
    return H


def restrict(P: SchurPresentation, H: Subgroup) -> SchurPresentation:
    """The presentation on H formed by the classes inside H.

    H must be an S-subgroup; the result lives over H's own descriptor with
    the canonical coordinates, and the window shrinks by H's free step.
    """
    if H.group != P.group:
        raise ValueError("subgroup belongs to a different group")
    if not is_ssubgroup(P, H):
        raise NotSSubgroup(f"{H} is not a union of classes")
    desc, coords = H.as_group()
    inner_classes = [
        frozenset(coords.to_sub(g) for g in c)
        for c in P.classes
        if all(g in H for g in c)
    ]
    if desc.is_infinite:
        window = P.window // H.free_step
    else:
        window = 0
    return SchurPresentation(desc, inner_classes, window=window, tag=_derive_tag(P, "restrict"))


def quotient(P: SchurPresentation, K: Subgroup) -> SchurPresentation:
    """The image presentation over G/K (K must be an S-subgroup).

    Duplicate class images are merged, matching the quotient construction for
    Schur rings over abelian groups.
    """
    if K.group != P.group:
        raise ValueError("subgroup belongs to a different group")
    if not is_ssubgroup(P, K):
        raise NotSSubgroup(f"{K} is not a union of classes")
    qm = QuotientMap(P.group, K)
    images = {qm.project_set(c) for c in P.classes}
    if qm.descriptor.is_infinite:
        window = P.window
    else:
        window = 0
    return SchurPresentation(
        qm.descriptor, images, window=window, tag=_derive_tag(P, "quotient")
    )


def _derive_tag(P: SchurPresentation, op: str) -> str | None:
    return f"{op}({P.tag})" if P.tag else None


def torsion_is_ssubgroup(P: SchurPresentation) -> bool:
    """Whether the torsion subgroup is a union of classes."""
    return is_ssubgroup(P, Subgroup.torsion(P.group))


# -- multiplier sets (second Schur theorem on multipliers) --------------------


def _p_torsion_kernel(G: GroupDescriptor, p: int) -> frozenset:
    """E = {g : g^p = 1}."""
    if G.is_infinite:
        return frozenset(
            GroupElement(0, i) for i in range(G.torsion_order) if (i * p) % G.torsion_order == 0
        )
    return frozenset(g for g in G.elements() if G.pow(g, p) == G.identity)


def _check_multiplier_preconditions(X: frozenset, p: int, P: SchurPresentation) -> None:
    G = P.group
    torsion_size = G.torsion_order if G.is_infinite else G.order
    if p < 2 or torsion_size % p:
        raise BadPrime(f"{p} does not divide the torsion order {torsion_size}")
    if not is_sset(P, X):
        raise NotSSet("multiplier sets are defined for S-sets only")


def multiplier_set(
    X: Iterable[GroupElement], p: int, P: SchurPresentation, check_sset: bool = True
) -> frozenset:
    """The set {x^p : x in X, |X ∩ Ex| not divisible by p}, E the p-torsion kernel.

    The result is an S-set whenever its elements are inside the verified
    window; that conclusion is asserted when checkable.
    """
    G = P.group
    X = frozenset(G.element(*g) for g in X)
    _check_multiplier_preconditions(X, p, P)
    E = _p_torsion_kernel(G, p)
    result = set()
    for x in X:
        coset = frozenset(G.mul(e, x) for e in E)
        if len(X & coset) % p:
            result.add(G.pow(x, p))
    result = frozenset(result)
    if check_sset and all(P.class_of(g) is not None for g in result):
        if not is_sset(P, result):
            raise NotSSet(
                "multiplier set is not a union of classes; the presentation is not a Schur ring"
            )
    return result


def multiplier_set_congruence(
    X: Iterable[GroupElement], p: int, P: SchurPresentation
) -> frozenset:
    """Cross-check oracle for :func:`multiplier_set` via the mod-p route.

    Computes the p-th convolution power of the simple quantity of X, then
    keeps the support where the (integral) coefficient is not divisible by p.
    """
    G = P.group
    X = frozenset(G.element(*g) for g in X)
    _check_multiplier_preconditions(X, p, P)
    power = simple_quantity(G, X)
    for _ in range(p - 1):
        power = power * simple_quantity(G, X)
    table = {}
    for v in set(power.terms().values()):
        if v.denominator != 1:
            raise ValueError("expected integral coefficients")
        table[v] = 1 if v.numerator % p else 0
    keep = CoeffFn.from_mapping(table, default=0)
    return power.apply_coeff(keep).support()


# -- lemma-style checks (used by check-lemmas and the acceptance suite) -------


def frobenius_closure_holds(P: SchurPresentation, k: int) -> tuple[bool, str]:
    """Whether every in-reach class maps to an S-set under g -> g^k."""
    G = P.group
    for c in P.classes:
        if G.is_infinite:
            reach = max(abs(g.z_exp) for g in c) * abs(k)
            if reach > P.window:
                continue
        image = simple_quantity(G, c).frobenius(k)
        for _, part in _group_by_value(image):
            if not is_sset(P, part):
                return False, f"class {_fmt_class(c)} breaks closure under power {k}"
    return True, f"all in-window classes closed under power {k}"


def _group_by_value(alpha: RingElement):
    by_value: dict[Fraction, set] = {}
    for g, v in alpha.terms().items():
        by_value.setdefault(v, set()).add(g)
    return sorted((v, frozenset(s)) for v, s in by_value.items())


def torsion_subgroup_holds(P: SchurPresentation) -> tuple[bool, str]:
    ok = torsion_is_ssubgroup(P)
    return ok, "torsion subgroup is an S-subgroup" if ok else "torsion subgroup is split"


def multiplier_sets_hold(P: SchurPresentation, p: int) -> tuple[bool, str]:
    """X^[p] is an S-set for every in-window class, both routes agreeing."""
    G = P.group
    checked = 0
    for c in P.classes:
        if G.is_infinite and max(abs(g.z_exp) for g in c) * p > P.window:
            continue
        direct = multiplier_set(c, p, P)
        congruence = multiplier_set_congruence(c, p, P)
        if direct != congruence:
            return False, f"multiplier routes disagree on {_fmt_class(c)}"
        if any(P.class_of(g) is None for g in direct):
            continue
        if not is_sset(P, direct):
            return False, f"multiplier set of {_fmt_class(c)} is not an S-set"
        checked += 1
    return True, f"multiplier sets verified for {checked} classes"


def class_shape_holds(P: SchurPresentation) -> tuple[bool, str]:
    """Every class is a full torsion coset or has size != torsion order (p odd prime)."""
    G = P.group
    p = G.torsion_order
    for c in P.classes:
        if len(c) != p:
            continue
        z_exps = {g.z_exp for g in c}
        a_exps = {g.a_exp for g in c}
        if len(z_exps) == 1 and len(a_exps) == p:
            continue
        return False, f"class {_fmt_class(c)} has size {p} but is not a torsion coset"
    return True, "class shapes satisfy the coset-or-size dichotomy"


def power_in_subgroup_holds(P: SchurPresentation, H: Subgroup) -> tuple[bool, str]:
    """Classes of size < p containing z^m a^i force z^(p*m) into H (p = torsion order)."""
    G = P.group
    p = G.torsion_order
    for c in P.classes:
        if len(c) >= p:
            continue
        for g in c:
            target = GroupElement(p * g.z_exp, 0)
            if G.is_infinite and abs(target.z_exp) > P.window:
                continue
            if target not in H:
                return False, (
                    f"class {_fmt_class(c)} is small but z^{p * g.z_exp} escapes {H}"
                )
    return True, "small classes push their p-th powers into the maximal free S-subgroup"
