"""Equitable partitions of symmetric integer matrices and their quotients.

A partition is equitable for a matrix when every block has constant row
sums; the quotient then collects those sums, and its spectrum is
contained in the spectrum of the full matrix.  The containment check
here is done by exact polynomial divisibility, never by matching
floating-point roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidPartition, NotEquitable
from .exact import char_poly, poly_divide, squarefree_part

Partition = tuple[tuple[int, ...], ...]


def check_partition(p: Partition, n: int) -> None:
    seen: set[int] = set()
    if not p:
        raise InvalidPartition("no classes")
    for cls in p:
        if not cls:
            raise InvalidPartition("empty class")
        for v in cls:
            if not 0 <= v < n:
                raise InvalidPartition(f"index {v} out of range 0..{n - 1}")
            if v in seen:
                raise InvalidPartition(f"index {v} appears twice")
            seen.add(v)
    if len(seen) != n:
        raise InvalidPartition("classes do not cover all indices")


def is_equitable(m, p: Partition) -> bool:
    """True iff every block of ``m`` under ``p`` has constant row sums."""
    check_partition(p, len(m))
    for ci in p:
        for cj in p:
            sums = {sum(m[u][v] for v in cj) for u in ci}
            if len(sums) > 1:
                return False
    return True


@dataclass(frozen=True)
class QuotientMatrix:
    """Average block row sums of a matrix under a partition.

    Entries are Fractions in general; they are integers exactly when the
    partition is equitable.  The partition is carried along so spectrum
    checks can re-verify equitability.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    partition: Partition

    @property
    def order(self) -> int:
        return len(self.entries)

    def int_entries(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for row in self.entries:
            if any(c.denominator != 1 for c in row):
                raise NotEquitable("quotient entries are not integral")
            out.append(tuple(int(c) for c in row))
        return tuple(out)


def quotient_matrix(m, p: Partition) -> QuotientMatrix:
    check_partition(p, len(m))
    entries = tuple(
        tuple(
            Fraction(sum(m[u][v] for u in ci for v in cj), len(ci)) for cj in p
        )
        for ci in p
    )
    return QuotientMatrix(entries, tuple(tuple(cls) for cls in p))


def coarsest_equitable_refinement(m, initial: Partition) -> Partition:
    """Split classes by their block-row-sum signatures until stable.

    The result is the unique coarsest equitable partition refining
    ``initial``; at most n splits can happen, so the loop terminates.
    Subclass order is deterministic: split parts keep their parent's
    position, ordered by first occurrence of each signature.
    """
    n = len(m)
    check_partition(initial, n)
    classes = [tuple(cls) for cls in initial]
    while True:
        new_classes: list[tuple[int, ...]] = []
        changed = False
        for cls in classes:
            sig_order: list[tuple] = []
            buckets: dict[tuple, list[int]] = {}
            for u in cls:
                sig = tuple(sum(m[u][v] for v in other) for other in classes)
                if sig not in buckets:
                    buckets[sig] = []
                    sig_order.append(sig)
                buckets[sig].append(u)
            if len(buckets) > 1:
                changed = True
            new_classes.extend(tuple(buckets[sig]) for sig in sig_order)
        if not changed:
            return tuple(new_classes)
        classes = new_classes


def spectrum_containment_holds(m, q: QuotientMatrix) -> bool:
    """Every eigenvalue of the quotient appears in the spectrum of ``m``.

    Checked exactly: the squarefree part of the quotient's characteristic
    polynomial must divide the full characteristic polynomial over the
    rationals.  (Multiplicities are deliberately not compared; the
    containment claim is about eigenvalues, not their counts.)
    """
    if not is_equitable(m, q.partition):
        raise NotEquitable("quotient does not come from an equitable partition")
    reduced = squarefree_part(char_poly(q.int_entries()))
    _, rem = poly_divide(char_poly(m), reduced)
    return rem == ()
