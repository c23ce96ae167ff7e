"""Shared numeric helpers."""

from __future__ import annotations

import os

import numpy as np

ENV_THREADS = "CAUSET_QFT_THREADS"


def op_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with a fixed, naive summation order.

    Structural operator identities (vanishing commutators, zero-coupling
    limits) cancel term by term only when both products accumulate their
    contraction in the same order, which BLAS-backed matmul does not
    guarantee.
    """
    return np.einsum("ij,jk->ik", a, b)


def thread_cap() -> int:
    """Enumeration-parallelism cap from the environment (default 1)."""
    raw = os.environ.get(ENV_THREADS)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_THREADS} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_THREADS} must be a positive integer, got {raw!r}")
    return value
