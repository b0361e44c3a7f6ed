"""Opt-in operation counters for the enumeration routines.

Counting is off unless a :func:`counting` block is active, so the hot paths
pay a single context-variable lookup.  Inside a block, ``nextpt`` also checks
its loop-iteration budget and, with ``check_invariants=True`` (or
``HYPERHULL_DEBUG=1`` in the environment), asserts the search-basis
invariants on every update.
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Iterator, Optional


@dataclass
class Counters:
    check_invariants: bool = False
    raycasts: int = 0
    quad_root_calls: int = 0
    contains_calls: int = 0
    max_raycast_contains: int = 0
    nextpt_calls: int = 0
    prev_calls: int = 0
    loop_iterations: int = 0
    max_loop_iterations: int = 0
    budget_checked: int = 0
    # (n, det, p, iterations) for every nextpt call that exceeded its budget
    budget_violations: list = field(default_factory=list)


_active: ContextVar[Optional[Counters]] = ContextVar("hyperhull_counters", default=None)

DEBUG = os.environ.get("HYPERHULL_DEBUG", "") not in ("", "0")


def active() -> Optional[Counters]:
    return _active.get()


@contextmanager
def counting(check_invariants: bool = False, counters: Optional[Counters] = None) -> Iterator[Counters]:
    c = counters if counters is not None else Counters()
    c.check_invariants = c.check_invariants or check_invariants
    token = _active.set(c)
    try:
        yield c
    finally:
        _active.reset(token)


def checking_invariants() -> bool:
    c = _active.get()
    return DEBUG or (c is not None and c.check_invariants)
