"""Deterministic table generators shared by the test modules."""

from __future__ import annotations

import random

from hypersemigroups import HyperOp


def random_hypersemigroup(order: int, seed) -> HyperOp:
    """First associative table in a seeded rejection stream.

    Uniform cell draws stall at order 4 (associative tables are far too
    rare), so the stream alternates with a dense-cell distribution under
    which products saturate quickly and associativity is common.
    """
    rng = random.Random(f"hsg:{order}:{seed}")
    top = 1 << order
    attempt = 0
    while True:
        attempt += 1
        dense = order >= 4 or attempt % 2 == 0
        cells = []
        for _ in range(order * order):
            if dense:
                m = 0
                for i in range(order):
                    if rng.random() < 0.8:
                        m |= 1 << i
                if not m:
                    m = 1 << rng.randrange(order)
            else:
                m = rng.randrange(1, top)
            cells.append(m)
        h = HyperOp(order, cells)
        if h.is_hypersemigroup():
            return h


def fixed_hypersemigroups(count: int, orders=(2, 3, 4)) -> list[HyperOp]:
    """A reproducible mixed-order list of hypersemigroups."""
    return [
        random_hypersemigroup(orders[i % len(orders)], i) for i in range(count)
    ]


NON_ASSOCIATIVE_2 = HyperOp(2, (2, 1, 1, 1))  # cell(0,0)={1}, rest {0}
