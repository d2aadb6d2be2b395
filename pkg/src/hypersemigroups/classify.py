"""Decide the five regularity classes of a finite hypersemigroup by three
independent routes and verify per table that the routes agree.

Routes per class:

* ``elementwise``  -- exhaustive search for the defining witnesses,
* ``subset-1`` / ``subset-2`` -- the equivalent product-membership and
  product-inclusion definitions,
* ``fuzzy``        -- the point-set reduction of the fuzzy inequality
  characterizations (checking the inequality at every indicator suffices
  to force the class property, which is what makes the route decidable).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .core import CarrierMismatchError, HyperOp, NotAssociativeError, full_mask
from .fuzzy import FuzzySubset, compose_chain, one, point, random_fuzzy_subset

SUBSET_ALL_ORDER_CAP = 12  # variant 2 walks all 2^n - 1 subsets


class RegularityClass(Enum):
    REGULAR = "regular"
    INTRA_REGULAR = "intra-regular"
    LEFT_QUASI_REGULAR = "left quasi-regular"
    RIGHT_QUASI_REGULAR = "right quasi-regular"
    SEMISIMPLE = "semisimple"


CLASS_ORDER: tuple[RegularityClass, ...] = tuple(RegularityClass)

# Right-hand chain templates of the fuzzy characterizations, per class.
FUZZY_PATTERNS: dict[RegularityClass, tuple[str, ...]] = {
    RegularityClass.REGULAR: ("f", "1", "f"),
    RegularityClass.INTRA_REGULAR: ("1", "f", "f", "1"),
    RegularityClass.LEFT_QUASI_REGULAR: ("1", "f", "1", "f"),
    RegularityClass.RIGHT_QUASI_REGULAR: ("f", "1", "f", "1"),
    RegularityClass.SEMISIMPLE: ("1", "f", "1", "f", "1"),
}

# Factor templates of the subset-product definitions; "S" is the slot that
# holds {a} (variant 1) or an arbitrary nonempty A (variant 2).
_SUBSET_TEMPLATES: dict[RegularityClass, tuple[str, ...]] = {
    RegularityClass.REGULAR: ("S", "H", "S"),
    RegularityClass.INTRA_REGULAR: ("H", "S", "S", "H"),
    RegularityClass.LEFT_QUASI_REGULAR: ("H", "S", "H", "S"),
    RegularityClass.RIGHT_QUASI_REGULAR: ("S", "H", "S", "H"),
    RegularityClass.SEMISIMPLE: ("H", "S", "H", "S", "H"),
}

_WITNESS_ARITY: dict[RegularityClass, int] = {
    RegularityClass.REGULAR: 1,
    RegularityClass.INTRA_REGULAR: 2,
    RegularityClass.LEFT_QUASI_REGULAR: 2,
    RegularityClass.RIGHT_QUASI_REGULAR: 2,
    RegularityClass.SEMISIMPLE: 3,
}


def element_membership(
    h: HyperOp, cls: RegularityClass, a: int, witnesses: Sequence[int]
) -> bool:
    """Evaluate the raw defining membership of class ``cls`` at element a.

    ``witnesses`` is (x,) for regular, (x, y) for the intra/quasi classes
    and (x, y, z) for semisimple.  Used both by the elementwise decision
    search and to re-verify stored witnesses.
    """
    if len(witnesses) != _WITNESS_ARITY[cls]:
        raise ValueError(
            f"{cls.value} needs {_WITNESS_ARITY[cls]} witness elements, "
            f"got {len(witnesses)}"
        )
    bit = 1 << a
    cell = h.hyper_product
    if cls is RegularityClass.REGULAR:
        (x,) = witnesses
        return bool(h.set_product(cell(a, x), bit) & bit)
    if cls is RegularityClass.INTRA_REGULAR:
        x, y = witnesses
        return bool(h.set_product(cell(x, a), cell(a, y)) & bit)
    if cls is RegularityClass.LEFT_QUASI_REGULAR:
        x, y = witnesses
        return bool(h.set_product(cell(x, a), cell(y, a)) & bit)
    if cls is RegularityClass.RIGHT_QUASI_REGULAR:
        x, y = witnesses
        return bool(h.set_product(cell(a, x), cell(a, y)) & bit)
    x, y, z = witnesses  # semisimple
    inner = h.set_product(cell(x, a), cell(y, a))
    return bool(h.set_product(inner, 1 << z) & bit)


@dataclass(frozen=True)
class Witness:
    """Outcome of a per-element check on one route.

    For a positive elementwise witness, ``elements`` re-verifies under the
    raw membership definition; for a fuzzy failure, ``fuzzy_subset`` is the
    indicator whose inequality fails.
    """

    cls: RegularityClass
    element: int
    route: str  # "elementwise" | "fuzzy"
    holds: bool
    elements: tuple[int, ...] = ()
    fuzzy_subset: Optional[FuzzySubset] = None

    def to_dict(self) -> dict:
        d = {
            "class": self.cls.value,
            "element": self.element,
            "route": self.route,
            "holds": self.holds,
            "witness_elements": list(self.elements),
        }
        if self.fuzzy_subset is not None:
            d["fuzzy_subset"] = [str(v) for v in self.fuzzy_subset.values]
        return d


def verify_witness(h: HyperOp, w: Witness) -> bool:
    """Re-check a stored witness against the table it came from."""
    if w.route == "elementwise":
        if w.holds:
            return element_membership(h, w.cls, w.element, w.elements)
        # a recorded failure means no witness tuple exists for that element
        arity = _WITNESS_ARITY[w.cls]
        return not any(
            element_membership(h, w.cls, w.element, ws)
            for ws in itertools.product(range(h.order), repeat=arity)
        )
    if w.route == "fuzzy":
        f = point(h.order, w.element)
        ok = f.leq(compose_chain(h, _instantiate(FUZZY_PATTERNS[w.cls], f, one(h.order))))
        return ok if w.holds else not ok
    raise ValueError(f"unknown witness route {w.route!r}")


def _instantiate(
    pattern: Sequence[str], f: FuzzySubset, top: FuzzySubset
) -> list[FuzzySubset]:
    return [f if tok == "f" else top for tok in pattern]


def _require_hypersemigroup(h: HyperOp) -> None:
    if not h.is_hypersemigroup():
        raise NotAssociativeError(
            "the regularity classes are defined for hypersemigroups only"
        )


def _elementwise_holds(h: HyperOp, cls: RegularityClass) -> tuple[bool, list[Witness]]:
    # no associativity precondition here; the public wrapper adds it
    arity = _WITNESS_ARITY[cls]
    witnesses = []
    for a in range(h.order):
        found = None
        for ws in itertools.product(range(h.order), repeat=arity):
            if element_membership(h, cls, a, ws):
                found = ws
                break
        if found is None:
            return False, [Witness(cls, a, "elementwise", False)]
        witnesses.append(Witness(cls, a, "elementwise", True, found))
    return True, witnesses


def is_class_elementwise(
    h: HyperOp, cls: RegularityClass
) -> tuple[bool, list[Witness]]:
    """Decide ``cls`` from its defining elementwise membership.

    Witness search is lexicographic and the first hit wins, so reports are
    reproducible.  Returns one positive witness per element on success, or
    the first failing element on failure.
    """
    _require_hypersemigroup(h)
    return _elementwise_holds(h, cls)


def _subset_product(h: HyperOp, cls: RegularityClass, s_mask: int) -> int:
    full = full_mask(h.order)
    factors = [s_mask if tok == "S" else full for tok in _SUBSET_TEMPLATES[cls]]
    return h.n_fold_product(factors)


def is_class_subsetdef(
    h: HyperOp,
    cls: RegularityClass,
    variant: int,
    max_order: int = SUBSET_ALL_ORDER_CAP,
) -> bool:
    """Decide ``cls`` from the equivalent subset-product definition.

    Variant 1 checks a in the product built from {a} for every element a;
    variant 2 checks A subset-of the product built from A for every
    nonempty A (refused above ``max_order`` to bound the 2^n walk).
    """
    _require_hypersemigroup(h)
    if variant == 1:
        return all(
            _subset_product(h, cls, 1 << a) >> a & 1 for a in range(h.order)
        )
    if variant == 2:
        if h.order > max_order:
            raise ValueError(
                f"variant 2 walks 2^{h.order} subsets; cap is order {max_order}"
            )
        for a_mask in range(1, 1 << h.order):
            if _subset_product(h, cls, a_mask) & a_mask != a_mask:
                return False
        return True
    raise ValueError(f"variant must be 1 or 2, got {variant}")


def _fuzzy_pointset_holds(h: HyperOp, cls: RegularityClass) -> tuple[bool, list[Witness]]:
    top = one(h.order)
    pattern = FUZZY_PATTERNS[cls]
    witnesses = []
    for a in range(h.order):
        f = point(h.order, a)
        if f.leq(compose_chain(h, _instantiate(pattern, f, top))):
            witnesses.append(Witness(cls, a, "fuzzy", True))
        else:
            return False, [Witness(cls, a, "fuzzy", False, fuzzy_subset=f)]
    return True, witnesses


def is_class_fuzzy(h: HyperOp, cls: RegularityClass) -> tuple[bool, list[Witness]]:
    """Decide ``cls`` from its fuzzy characterization at the point sets.

    The inequality f <= chain(f) is quantified over all fuzzy subsets, but
    holding at every indicator already forces the class property, so the
    indicator sweep is a complete decision procedure.
    """
    _require_hypersemigroup(h)
    return _fuzzy_pointset_holds(h, cls)


def fuzzy_inequality_holds(
    h: HyperOp, cls: RegularityClass, f: FuzzySubset
) -> bool:
    """Whether f <= (class pattern chain at f) on the given table.

    Mechanically evaluable on any hypergroupoid (left-fold convention);
    only on hypersemigroups is it tied to the class property.
    """
    if f.order != h.order:
        raise CarrierMismatchError("fuzzy subset carrier does not match the table")
    chain = compose_chain(h, _instantiate(FUZZY_PATTERNS[cls], f, one(h.order)))
    return f.leq(chain)


@dataclass
class ClassReport:
    """Verdicts of all routes for one class, plus the recorded witnesses."""

    cls: RegularityClass
    elementwise: bool
    subset_singleton: bool
    subset_all: bool
    fuzzy: bool
    witnesses: tuple[Witness, ...] = ()

    @property
    def routes_agree(self) -> bool:
        return (
            self.elementwise
            == self.subset_singleton
            == self.subset_all
            == self.fuzzy
        )

    @property
    def verdict(self) -> bool:
        # the definitional route is the canonical verdict
        return self.elementwise

    def to_dict(self) -> dict:
        return {
            "class": self.cls.value,
            "verdict": self.verdict,
            "routes": {
                "elementwise": self.elementwise,
                "subset-1": self.subset_singleton,
                "subset-2": self.subset_all,
                "fuzzy": self.fuzzy,
            },
            "routes_agree": self.routes_agree,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass
class ClassificationReport:
    order: int
    classes: dict[RegularityClass, ClassReport]

    @property
    def all_routes_agree(self) -> bool:
        return all(r.routes_agree for r in self.classes.values())

    def verdict(self, cls: RegularityClass) -> bool:
        return self.classes[cls].verdict

    def combination_key(self) -> str:
        """Class verdicts as a 5-char 0/1 string in declared class order."""
        return "".join("1" if self.classes[c].verdict else "0" for c in CLASS_ORDER)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "classes": [self.classes[c].to_dict() for c in CLASS_ORDER],
            "all_routes_agree": self.all_routes_agree,
        }


def classify(h: HyperOp) -> ClassificationReport:
    """Run all routes for all five classes and flag any disagreement."""
    _require_hypersemigroup(h)
    classes = {}
    for cls in CLASS_ORDER:
        ew, ew_wit = _elementwise_holds(h, cls)
        fz, fz_wit = _fuzzy_pointset_holds(h, cls)
        classes[cls] = ClassReport(
            cls=cls,
            elementwise=ew,
            subset_singleton=is_class_subsetdef(h, cls, 1),
            subset_all=is_class_subsetdef(h, cls, 2),
            fuzzy=fz,
            witnesses=tuple(ew_wit + fz_wit),
        )
    return ClassificationReport(order=h.order, classes=classes)


@dataclass
class TheoremCheck:
    """Per-class outcome of a theorem verification run."""

    cls: RegularityClass
    routes_agree: bool
    verdict: bool
    trials: int
    counterexample: Optional[FuzzySubset] = None
    failure_reverified: bool = True

    @property
    def passed(self) -> bool:
        return (
            self.routes_agree
            and self.counterexample is None
            and self.failure_reverified
        )

    def to_dict(self) -> dict:
        return {
            "class": self.cls.value,
            "routes_agree": self.routes_agree,
            "verdict": self.verdict,
            "trials": self.trials,
            "counterexample": None
            if self.counterexample is None
            else [str(v) for v in self.counterexample.values],
            "failure_reverified": self.failure_reverified,
            "passed": self.passed,
        }


@dataclass
class VerificationReport:
    order: int
    checks: tuple[TheoremCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def counterexamples(self) -> list[TheoremCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def verify_theorems(
    h: HyperOp, random_trials: int = 1000, seed: int | str = 0
) -> VerificationReport:
    """Assert route agreement per class, then probe the universally
    quantified direction with random fuzzy subsets.

    For a class the table belongs to, every sampled f must satisfy the
    class inequality; a violation is a counterexample to the theorem (or a
    bug) and is returned in the report rather than raised.  For a class
    the table fails, the recorded failing indicator is re-checked.
    """
    _require_hypersemigroup(h)
    report = classify(h)
    rng = random.Random(f"verify:{seed}")
    checks = []
    for cls in CLASS_ORDER:
        cr = report.classes[cls]
        counterexample = None
        failure_reverified = True
        if cr.verdict:
            for _ in range(random_trials):
                f = random_fuzzy_subset(h.order, rng)
                if not fuzzy_inequality_holds(h, cls, f):
                    counterexample = f
                    break
        else:
            failing = [
                w for w in cr.witnesses if w.route == "fuzzy" and not w.holds
            ]
            failure_reverified = all(verify_witness(h, w) for w in failing)
        checks.append(
            TheoremCheck(
                cls=cls,
                routes_agree=cr.routes_agree,
                verdict=cr.verdict,
                trials=random_trials if cr.verdict else 0,
                counterexample=counterexample,
                failure_reverified=failure_reverified,
            )
        )
    return VerificationReport(order=h.order, checks=tuple(checks))
