"""Runtime knobs: validation mode and the instrumented word-op counter.

Validation mode turns on precondition checking (sortedness, domain
membership, label sanity) at O(r) cost per operation.  Fast mode trusts
callers.  The op counter is a plain global tally of word-level
operations performed by the instruction kernels; it exists for growth
measurements and the bench command, not for profiling accuracy.
"""

from __future__ import annotations

from contextlib import contextmanager


class OpCounter:
    """Counts word operations executed by instruction kernels."""

    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0

    def tick(self, k: int = 1) -> None:
        self.n += k

    def reset(self) -> None:
        self.n = 0

    def value(self) -> int:
        return self.n


ops = OpCounter()

_validation = True


def validation_enabled() -> bool:
    return _validation


def set_validation(on: bool) -> None:
    global _validation
    _validation = bool(on)


@contextmanager
def validation(on: bool):
    """Temporarily force validation on or off."""
    global _validation
    old = _validation
    _validation = bool(on)
    try:
        yield
    finally:
        _validation = old
