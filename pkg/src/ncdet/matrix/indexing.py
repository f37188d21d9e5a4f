"""The single boundary between 1-based external indices and 0-based internal ones."""

from __future__ import annotations

from collections.abc import Iterable

from ncdet.errors import IndexOutOfRangeError


def to_internal(index: int, size: int, *, name: str = "index") -> int:
    """Convert a 1-based index to 0-based, checking it lies in 1..size."""
    if not 1 <= index <= size:
        raise IndexOutOfRangeError(f"{name} {index} out of range 1..{size}.")
    return index - 1


def to_external(index: int) -> int:
    return index + 1


def check_index(index: int, size: int, *, name: str = "index") -> int:
    """Validate a 0-based index; messages still report it 1-based."""
    if not 0 <= index < size:
        raise IndexOutOfRangeError(f"{name} {to_external(index)} out of range 1..{size}.")
    return index


def check_indices(indices: Iterable[int], size: int, *, name: str = "index") -> list[int]:
    """Validate a set of 0-based indices, rejecting duplicates."""
    out = [check_index(i, size, name=name) for i in indices]
    if len(set(out)) != len(out):
        raise IndexOutOfRangeError(f"Duplicate {name} in {[to_external(i) for i in out]}.")
    return out


def complement(indices: Iterable[int], size: int) -> list[int]:
    """Indices of 0..size-1 not in ``indices``, ascending."""
    taken = set(indices)
    return [k for k in range(size) if k not in taken]


def format_position(i: int, j: int) -> str:
    """Render a 0-based position as "(i,j)" in 1-based terms."""
    return f"({to_external(i)},{to_external(j)})"
