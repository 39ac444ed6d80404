"""GF(2) span membership on integer bitsets."""

from __future__ import annotations

from collections.abc import Iterable


def reduce_basis(vectors: Iterable[int]) -> dict[int, tuple[int, int]]:
    """Echelon basis keyed by leading bit.

    Each value is ``(vector, combination)`` where ``combination`` marks which
    input vectors (by position) were summed to produce it.
    """
    basis: dict[int, tuple[int, int]] = {}
    for idx, v in enumerate(vectors):
        combo = 1 << idx
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = (v, combo)
                break
            bv, bc = basis[lead]
            v ^= bv
            combo ^= bc
    return basis


def solve(vectors: list[int], target: int) -> list[int] | None:
    """Indices of ``vectors`` summing to ``target``, or ``None`` if outside the span."""
    basis = reduce_basis(vectors)
    combo = 0
    while target:
        lead = target.bit_length() - 1
        if lead not in basis:
            return None
        bv, bc = basis[lead]
        target ^= bv
        combo ^= bc
    return [i for i in range(len(vectors)) if combo >> i & 1]
