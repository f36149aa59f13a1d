"""Partition-based addressable heaps with stable handles."""

from ._partheap import (
    ExpHeap,
    FHTNGHeap,
    Handle,
    Heap,
    HeapError,
    LPHeap,
    generate_trace,
    run_trace,
)

__all__ = [
    "ExpHeap",
    "FHTNGHeap",
    "Handle",
    "Heap",
    "HeapError",
    "LPHeap",
    "generate_trace",
    "run_trace",
]
