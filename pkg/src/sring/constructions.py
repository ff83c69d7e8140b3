"""Constructors for the standard Schur-ring families.

Five constructors: discrete, trivial, orbit, tensor and wedge.  Each returns
a :class:`~sring.schur.SchurPresentation`; windowed constructors only emit
classes that fit entirely inside the window, so partition invariants always
hold on the emitted presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BadTower,
    IncompatibleWedge,
    InfiniteGroup,
    UnsupportedProduct,
    WindowTooSmall,
)
from .groups import (
    DEFAULT_ORBIT_BOUND,
    Automorphism,
    GroupDescriptor,
    GroupElement,
    QuotientMap,
    Subgroup,
    orbit,
)
from .schur import SchurPresentation, is_ssubgroup, quotient, restrict


def _require_window(group: GroupDescriptor, window: int) -> None:
    if group.is_infinite and window < 1:
        raise WindowTooSmall("infinite groups need a window of at least 1")


def discrete(group: GroupDescriptor, window: int = 0) -> SchurPresentation:
    """The discrete presentation: every element is its own class."""
    _require_window(group, window)
    return SchurPresentation(
        group,
        [[g] for g in group.window_elements(window)],
        window=window if group.is_infinite else 0,
        tag="discrete",
    )


def trivial(group: GroupDescriptor) -> SchurPresentation:
    """The two-class presentation {1}, G - 1 of a finite group."""
    if group.is_infinite:
        raise InfiniteGroup("there is no trivial Schur ring over an infinite group")
    rest = [g for g in group.elements() if g != group.identity]
    classes = [[group.identity]]
    if rest:
        classes.append(rest)
    return SchurPresentation(group, classes, tag="trivial")


def orbit_ring(
    group: GroupDescriptor,
    gens: Iterable[Automorphism],
    window: int = 0,
    bound: int = DEFAULT_ORBIT_BOUND,
) -> SchurPresentation:
    """Classes are the orbits of the group generated by ``gens``.

    With no generators this is the discrete presentation.
    """
    gens = list(gens)
    for phi in gens:
        if phi.group != group:
            raise ValueError("generator acts on a different group")
    _require_window(group, window)
    classes = []
    seen: set[GroupElement] = set()
    for g in group.window_elements(window):
        if g in seen:
            continue
        orb = orbit(gens, g, bound=bound)
        seen |= orb
        classes.append(orb)
    names = ",".join(sorted(phi.name() or str(phi) for phi in gens)) if gens else ""
    return SchurPresentation(
        group,
        classes,
        window=window if group.is_infinite else 0,
        tag=f"orbit({names})",
    )


def symmetric(group: GroupDescriptor, window: int = 0) -> SchurPresentation:
    """Orbit presentation of the full inversion g -> g^-1."""
    return orbit_ring(group, [Automorphism.inversion(group)], window=window)


def tensor(A: SchurPresentation, B: SchurPresentation) -> SchurPresentation:
    """The presentation on H x K whose classes are the products C*D.

    Supported when one factor carries only the free part and the other only
    the torsion part (either order), so the product is again a supported
    free x torsion descriptor.
    """
    GA, GB = A.group, B.group

    def one_sided(desc: GroupDescriptor) -> str | None:
        if desc.torsion_order == 1 and desc.free_order != 1:
            return "free"
        if desc.free_order == 1:
            return "torsion"
        return None

    if GA.order == 1:
        return B
    if GB.order == 1:
        return A
    kind_a, kind_b = one_sided(GA), one_sided(GB)
    if kind_a == "free" and kind_b == "torsion":
        free_factor, torsion_factor = A, B
    elif kind_a == "torsion" and kind_b == "free":
        free_factor, torsion_factor = B, A
    else:
        raise UnsupportedProduct(
            f"cannot realize {GA} x {GB} as a free x torsion group"
        )
    group = GroupDescriptor(
        free_factor.group.free_order, torsion_factor.group.torsion_order
    )
    classes = []
    for c in free_factor.classes:
        for d in torsion_factor.classes:
            classes.append(
                frozenset(
                    GroupElement(g.z_exp, h.a_exp) for g in c for h in d
                )
            )
    return SchurPresentation(
        group,
        classes,
        window=free_factor.window,
        tag=f"tensor({free_factor.tag},{torsion_factor.tag})",
    )


@dataclass(frozen=True)
class WedgeSpec:
    """A wedge decomposition 1 < K <= H < G with its two presentations.

    ``inner`` lives over H's own descriptor (H.as_group coordinates) and
    ``outer`` over the canonical descriptor of G/K.
    """

    H: Subgroup
    K: Subgroup
    inner: SchurPresentation
    outer: SchurPresentation


def wedge(spec: WedgeSpec, window: int = 0) -> SchurPresentation:
    """Assemble a wedge: inner classes inside H, K-coset unions outside.

    The inner and outer presentations must agree on the overlap:
    quotient(inner, K) == restrict(outer, H/K) on the common window.
    """
    H, K = spec.H, spec.K
    G = H.group
    if K.group != G:
        raise BadTower("K lives in a different group")
    if K.is_trivial or H.is_full or not H.contains_subgroup(K):
        raise BadTower("wedge tower must satisfy 1 < K <= H < G")
    if K.order is None:
        raise IncompatibleWedge(
            "K must be finite: classes outside H are unions of K-cosets"
        )
    _require_window(G, window)

    h_desc, h_coords = H.as_group()
    if spec.inner.group != h_desc:
        raise IncompatibleWedge(
            f"inner presentation is over {spec.inner.group}, expected {h_desc}"
        )
    if G.is_infinite and h_desc.is_infinite and spec.inner.window < window // H.free_step:
        raise WindowTooSmall(
            f"inner window {spec.inner.window} cannot cover the middle subgroup "
            f"inside window {window}"
        )
    if G.is_infinite and spec.outer.window < window:
        raise WindowTooSmall(
            f"outer window {spec.outer.window} cannot cover window {window}"
        )
    qm = QuotientMap(G, K)
    if spec.outer.group != qm.descriptor:
        raise IncompatibleWedge(
            f"outer presentation is over {spec.outer.group}, expected {qm.descriptor}"
        )

    # K inside H's coordinates must be an S-subgroup of the inner presentation.
    k_in_h = Subgroup.generated_by(
        h_desc, [h_coords.to_sub(g) for g in K.elements()]
    )
    if not is_ssubgroup(spec.inner, k_in_h):
        raise IncompatibleWedge("K is not an S-subgroup of the inner presentation")

    # H/K inside G/K must be an S-subgroup of the outer presentation.
    if H.order is None:
        h_image_gens = [qm.project(h_coords.from_sub(g)) for g in
                        [GroupElement(1, 0), GroupElement(0, 1)]]
    else:
        h_image_gens = [qm.project(g) for g in H.elements()]
    h_image = Subgroup.generated_by(qm.descriptor, h_image_gens)
    if not is_ssubgroup(spec.outer, h_image):
        raise IncompatibleWedge("H/K is not an S-subgroup of the outer presentation")

    overlap_inner = quotient(spec.inner, k_in_h)
    overlap_outer = restrict(spec.outer, h_image)
    if overlap_inner.group != overlap_outer.group:
        raise IncompatibleWedge(
            "inner/K and outer|H/K live over different groups: "
            f"{overlap_inner.group} vs {overlap_outer.group}"
        )
    if overlap_inner.group.is_infinite:
        common = min(overlap_inner.window, overlap_outer.window)
        left = {c for c in overlap_inner.classes if _max_z(c) <= common}
        right = {c for c in overlap_outer.classes if _max_z(c) <= common}
    else:
        left, right = set(overlap_inner.classes), set(overlap_outer.classes)
    if left != right:
        raise IncompatibleWedge("inner and outer presentations disagree on H/K")

    classes: list[frozenset] = []
    for c in spec.inner.classes:
        embedded = frozenset(h_coords.from_sub(g) for g in c)
        if G.is_infinite and _max_z(embedded) > window:
            continue
        classes.append(embedded)
    for d in spec.outer.classes:
        if all(g in h_image for g in d):
            continue  # covered by the inner presentation
        preimage = frozenset(
            g for q in d for g in qm.preimage(q)
        )
        if G.is_infinite and _max_z(preimage) > window:
            continue  # coset classes are emitted only when entirely inside the window
        classes.append(preimage)
    return SchurPresentation(
        G,
        classes,
        window=window if G.is_infinite else 0,
        tag=f"wedge({spec.inner.tag}|{spec.outer.tag})",
    )


def _max_z(c: Iterable[GroupElement]) -> int:
    return max(abs(g.z_exp) for g in c)


def standard_wedge(
    group: GroupDescriptor,
    step: int,
    inner_kind: str,
    outer_kind: str,
    window: int,
) -> SchurPresentation:
    """Wedge over the torsion kernel with middle subgroup <z^step> x <a>.

    step == 0 keeps the middle subgroup equal to the torsion factor, where
    ``inner_kind`` may be "discrete" or "trivial"; for step >= 2 the inner
    presentation over <z^step> x <a> may be "discrete" or "symmetric".  The
    outer presentation over the free quotient is "discrete" or "symmetric".
    """
    if not group.is_infinite:
        raise InfiniteGroup("standard wedges are built over the infinite group")
    K = Subgroup.torsion(group)
    if step == 0:
        H = K
        h_desc, _ = H.as_group()
        if inner_kind == "discrete":
            inner = discrete(h_desc)
        elif inner_kind == "trivial":
            inner = trivial(h_desc)
        else:
            raise ValueError(f"inner kind {inner_kind!r} needs step >= 2")
    else:
        if step == 1:
            raise BadTower("step 1 makes the middle subgroup the whole group")
        H = Subgroup.free_power_with_torsion(group, step)
        h_desc, _ = H.as_group()
        inner_window = window // step
        if inner_kind == "discrete":
            inner = discrete(h_desc, inner_window)
        elif inner_kind == "symmetric":
            inner = symmetric(h_desc, inner_window)
        else:
            raise ValueError(f"unknown inner kind {inner_kind!r}")
    qdesc = QuotientMap(group, K).descriptor
    if outer_kind == "discrete":
        outer = discrete(qdesc, window)
    elif outer_kind == "symmetric":
        outer = symmetric(qdesc, window)
    else:
        raise ValueError(f"unknown outer kind {outer_kind!r}")
    return wedge(WedgeSpec(H, K, inner, outer), window)
