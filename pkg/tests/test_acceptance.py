"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and recorded runtimes.  All arithmetic is exact; no tolerances are used
anywhere.
"""

import random
import time
from fractions import Fraction

import pytest

from sring import (
    GroupDescriptor,
    MalformedPartition,
    RingElement,
    SchurPresentation,
    classify,
    discrete,
    enumerate_finite,
    enumerate_windowed,
    find_H,
    is_traditional,
    named_automorphism,
    orbit_ring,
    resynthesize,
    simple_quantity,
    standard_wedge,
    symmetric,
    tensor,
    trivial,
    verify_axioms,
    verify_wielandt,
)
from sring.constructions import IncompatibleWedge
from sring.schur import (
    class_shape_holds,
    frobenius_closure_holds,
    multiplier_sets_hold,
    power_in_subgroup_holds,
    torsion_subgroup_holds,
)

G = GroupDescriptor(0, 3)
Z = GroupDescriptor(0, 1)
Z3 = GroupDescriptor(1, 3)
NAMES = ("psi", "delta", "xi", "rho", "sigma")
AUTOS = {name: named_automorphism(name, G) for name in ("psi", "delta", "xi", "rho", "sigma", "zeta", "tau")}


def _report(number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {status} {title}: {detail} ({elapsed:.1f}s)")


def _both_verdicts(P):
    """Verdicts of the two verification routes, folding raised errors in."""
    outcomes = []
    for checker in (verify_axioms, verify_wielandt):
        try:
            outcomes.append(checker(P).verdict)
        except MalformedPartition:
            outcomes.append("malformed")
    return outcomes


def _corrupted_partitions(count: int):
    """Deterministic stream of guaranteed-invalid mutations of valid rings."""
    rng = random.Random(74125)
    bases = []
    for spec in [(1, 5), (1, 6), (1, 7), (1, 8), (2, 3)]:
        bases.extend(enumerate_finite(GroupDescriptor(*spec)))
    produced = 0
    while produced < count:
        base = rng.choice(bases)
        group = base.group
        classes = [set(c) for c in base.classes]
        style = produced % 4
        identity = group.identity
        id_index = next(i for i, c in enumerate(classes) if identity in c)
        others = [i for i in range(len(classes)) if i != id_index]
        if not others:
            continue
        if style == 0:  # merge the identity class into another class
            j = rng.choice(others)
            classes[j] |= classes[id_index]
            del classes[id_index]
        elif style == 1:  # drop one non-identity element: leaves a gap
            j = rng.choice(others)
            victim = rng.choice(sorted(classes[j]))
            classes[j].discard(victim)
            classes = [c for c in classes if c]
            if all(victim not in c for c in classes) and len(classes) < 2:
                continue
        elif style == 2:  # duplicate an element into a second class: overlap
            j = rng.choice(others)
            donor = rng.choice(sorted(classes[j]))
            k = rng.choice([i for i in range(len(classes)) if i != j])
            classes[k].add(donor)
        else:  # pull a non-identity element into the identity class
            j = rng.choice(others)
            victim = rng.choice(sorted(classes[j]))
            classes[j].discard(victim)
            classes[id_index].add(victim)
            classes = [c for c in classes if c]
        produced += 1
        yield SchurPresentation(group, [sorted(c) for c in classes])


class TestCriterion1VerifierCrossAgreement:
    def test_cross_agreement(self):
        start = time.time()
        checked = 0
        disagreements = []
        for n in range(2, 13):
            for P in enumerate_finite(GroupDescriptor(1, n)):
                verdicts = _both_verdicts(P)
                checked += 1
                if len(set(verdicts)) != 1 or verdicts[0] != "valid":
                    disagreements.append((n, verdicts))
        undetected = []
        for P in _corrupted_partitions(200):
            verdicts = _both_verdicts(P)
            checked += 1
            if len(set(verdicts)) != 1:
                disagreements.append(("corrupt", verdicts))
            if verdicts[0] not in ("invalid", "malformed"):
                undetected.append(P)
        elapsed = time.time() - start
        ok = not disagreements and not undetected
        _report(
            1,
            "axiom-verifier cross-agreement",
            ok,
            f"{checked} presentations, {len(disagreements)} disagreements, "
            f"{len(undetected)} corruptions missed",
            elapsed,
        )
        assert ok, (disagreements, undetected)


class TestCriterion2ConstructorSweep:
    def test_validity_sweep(self):
        start = time.time()
        built = []
        for window in (6, 12, 24):
            built.append(discrete(G, window))
            for name in NAMES:
                built.append(orbit_ring(G, [AUTOS[name]], window))
            built.append(orbit_ring(G, [AUTOS["psi"], AUTOS["xi"]], window))
            built.append(orbit_ring(G, [AUTOS["delta"], AUTOS["xi"]], window))
            built.append(tensor(symmetric(Z, window), discrete(Z3)))
            built.append(tensor(symmetric(Z, window), trivial(Z3)))
            built.append(tensor(discrete(Z, window), discrete(Z3)))
            for inner in ("discrete", "trivial"):
                for outer in ("discrete", "symmetric"):
                    built.append(standard_wedge(G, 0, inner, outer, window))
            for step in (2, 3, 4):
                for kinds in (("discrete", "discrete"), ("symmetric", "symmetric")):
                    built.append(standard_wedge(G, step, kinds[0], kinds[1], window))
        built.append(trivial(Z3))
        built.append(trivial(GroupDescriptor(2, 3)))
        invalid = [P.tag for P in built if not verify_axioms(P).ok]
        elapsed = time.time() - start
        ok = not invalid
        _report(
            2,
            "constructor validity sweep",
            ok,
            f"{len(built)} presentations built, {len(invalid)} invalid",
            elapsed,
        )
        assert ok, invalid


class TestCriterion3MainTheoremRoundTrip:
    def test_round_trip(self):
        start = time.time()
        window = 12
        cases: list[tuple[str, SchurPresentation]] = [("discrete", discrete(G, window))]
        for name in NAMES:
            cases.append((name, orbit_ring(G, [AUTOS[name]], window)))
        cases.append(("psi,xi", orbit_ring(G, [AUTOS["psi"], AUTOS["xi"]], window)))
        cases.append(("delta,xi", orbit_ring(G, [AUTOS["delta"], AUTOS["xi"]], window)))
        cases.append(("inversion", orbit_ring(G, [AUTOS["zeta"]], window)))
        cases.append(("full-inversion", symmetric(G, window)))
        # wedge towers with index parameters 1..3; step 1 degenerates to the
        # whole group ring, realized by the discrete/full cases above
        for step in (0, 2, 3):
            inners = ("discrete", "trivial") if step == 0 else ("discrete", "symmetric")
            for inner in inners:
                for outer in ("discrete", "symmetric"):
                    try:
                        P = standard_wedge(G, step, inner, outer, window)
                    except IncompatibleWedge:
                        continue
                    cases.append((f"wedge[{step},{inner},{outer}]", P))
        failures = []
        for label, P in cases:
            descriptor = classify(P)
            rebuilt = resynthesize(descriptor, window)
            if rebuilt.classes != P.classes:
                failures.append(label)
        elapsed = time.time() - start
        ok = not failures
        _report(
            3,
            "main-theorem round-trip",
            ok,
            f"{len(cases)} families round-tripped, {len(failures)} failures",
            elapsed,
        )
        assert ok, failures


class TestCriterion4DeskScaleExhaustiveness:
    @pytest.mark.parametrize("window", [3, 4])
    def test_every_window_classifies(self, window):
        start = time.time()
        presentations = enumerate_windowed(window)
        unclassifiable = []
        for P in presentations:
            try:
                classify(P)
            except Exception as ex:  # noqa: BLE001 - any failure counts
                unclassifiable.append((P.describe(), repr(ex)))
        elapsed = time.time() - start
        ok = not unclassifiable
        _report(
            4,
            f"desk-scale exhaustiveness (N={window})",
            ok,
            f"{len(presentations)} window partitions, {len(unclassifiable)} unclassifiable",
            elapsed,
        )
        assert ok, unclassifiable


class TestCriterion5LemmaSuite:
    def _corpus(self):
        window = 12
        corpus = [discrete(G, window), standard_wedge(G, 0, "discrete", "discrete", window)]
        for name in NAMES:
            corpus.append(orbit_ring(G, [AUTOS[name]], window))
        corpus.append(orbit_ring(G, [AUTOS["zeta"]], window))
        corpus.append(orbit_ring(G, [AUTOS["tau"]], window))
        corpus.append(orbit_ring(G, [AUTOS["psi"], AUTOS["xi"]], window))
        corpus.append(orbit_ring(G, [AUTOS["delta"], AUTOS["xi"]], window))
        corpus.append(standard_wedge(G, 0, "trivial", "symmetric", window))
        corpus.append(standard_wedge(G, 2, "discrete", "discrete", window))
        corpus.append(standard_wedge(G, 3, "symmetric", "symmetric", window))
        corpus.append(tensor(symmetric(Z, window), trivial(Z3)))
        return corpus

    def test_lemma_suite(self):
        start = time.time()
        failures = []
        corpus = self._corpus()
        for P in corpus:
            assert verify_axioms(P).ok
            for k in (2, 4, 5, 7):
                ok, msg = frobenius_closure_holds(P, k)
                if not ok:
                    failures.append((P.tag, f"frobenius {k}", msg))
            ok, msg = torsion_subgroup_holds(P)
            if not ok:
                failures.append((P.tag, "torsion", msg))
            ok, msg = multiplier_sets_hold(P, 3)  # both routes must agree inside
            if not ok:
                failures.append((P.tag, "multipliers", msg))
            ok, msg = class_shape_holds(P)
            if not ok:
                failures.append((P.tag, "class shape", msg))
            ok, msg = power_in_subgroup_holds(P, find_H(P))
            if not ok:
                failures.append((P.tag, "small-class powers", msg))
        elapsed = time.time() - start
        ok = not failures
        _report(
            5,
            "lemma suite",
            ok,
            f"{len(corpus)} presentations x 8 checks, {len(failures)} failures",
            elapsed,
        )
        assert ok, failures


class TestCriterion6FiniteTraditionality:
    def test_never_untraditional(self):
        start = time.time()
        checked = 0
        untraditional = []
        groups = [GroupDescriptor(1, n) for n in range(2, 13)]
        groups += [GroupDescriptor(2, 3), GroupDescriptor(4, 3)]
        for group in groups:
            for P in enumerate_finite(group):
                checked += 1
                if not is_traditional(P):
                    untraditional.append((group, P.describe()))
        elapsed = time.time() - start
        ok = not untraditional
        _report(
            6,
            "finite traditionality corroboration",
            ok,
            f"{checked} rings over {len(groups)} groups, {len(untraditional)} non-traditional",
            elapsed,
        )
        assert ok, untraditional


class TestCriterion7AlgebraProperties:
    CHECKS = 1000

    def _random_element(self, rng):
        return RingElement(
            G,
            [
                (
                    (rng.randint(-12, 12), rng.randint(0, 2)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                )
                for _ in range(rng.randint(0, 5))
            ],
        )

    def _random_set(self, rng):
        size = rng.randint(1, 5)
        return {
            G.element(rng.randint(-8, 8), rng.randint(0, 2)) for _ in range(size)
        }

    def test_randomized_identities(self):
        start = time.time()
        rng = random.Random(991231)
        failures = 0
        for _ in range(self.CHECKS):
            x, y, w = (self._random_element(rng) for _ in range(3))
            c_set, d_set = self._random_set(rng), self._random_set(rng)
            c_bar = simple_quantity(G, c_set)
            d_bar = simple_quantity(G, d_set)
            j, k = rng.randint(-4, 4), rng.randint(-4, 4)
            checks = [
                (x * y) * w == x * (y * w),
                x * y == y * x,
                x * (y + w) == x * y + x * w,
                (x * y).star() == x.star() * y.star(),
                c_bar.hadamard(d_bar) == simple_quantity(G, c_set & d_set),
                x.frobenius(j).frobenius(k) == x.frobenius(j * k),
            ]
            if not all(checks):
                failures += 1
        elapsed = time.time() - start
        ok = failures == 0
        _report(
            7,
            "group-ring algebra properties",
            ok,
            f"{self.CHECKS} randomized rounds x 6 identities, {failures} failures",
            elapsed,
        )
        assert ok
