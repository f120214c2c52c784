"""Integer partitions as canonical tuples.

A partition is stored as a tuple of weakly decreasing positive integers;
trailing zeros are never stored, so two partitions are equal iff their
tuples are equal.  Entries beyond the stored length count as 0.
"""

from functools import cache
from typing import Iterable, Sequence

Partition = tuple[int, ...]

EMPTY: Partition = ()


def make_partition(raw: Iterable[int]) -> Partition:
    """Canonicalize a sequence of nonnegative integers: sort descending, drop zeros."""
    parts = sorted((int(x) for x in raw), reverse=True)
    if parts and parts[-1] < 0:
        raise ValueError(f"partition entries must be nonnegative, got {parts[-1]}")
    return tuple(x for x in parts if x > 0)


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th entry (1-indexed), 0 beyond the stored length."""
    if i < 1:
        raise ValueError("parts are indexed from 1")
    return lam[i - 1] if i <= len(lam) else 0


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: entry i counts the parts of lam that are >= i."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for i in range(p):
            cols[i] += 1
    return tuple(cols)


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether mu fits inside lam, i.e. mu_i <= lam_i for all i (zero-padded)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size: every prefix sum of lam
    weakly exceeds that of mu.  Comparing different sizes is an error."""
    if size(lam) != size(mu):
        raise ValueError("dominance is only defined between partitions of equal size")
    total_l = 0
    total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += part(lam, i + 1)
        total_m += part(mu, i + 1)
        if total_l < total_m:
            return False
    return True


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n (parts <= max_part if given), in reverse-lexicographic
    order: (n) first, (1,...,1) last.  This order refines dominance."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    bound = n if max_part is None else min(max_part, n)
    result: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            extend(prefix, remaining - p, p)
            prefix.pop()

    extend([], n, bound)
    return tuple(result)


def concat_sort(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of parts, sorted weakly decreasing."""
    return tuple(sorted(lam + mu, reverse=True))


def beta_numbers(lam: Partition, q: int) -> tuple[int, ...]:
    """The strictly decreasing sequence (lam_1 - 1, lam_2 - 2, ..., lam_q - q)."""
    return tuple(part(lam, i) - i for i in range(1, q + 1))


def revlex_key(lam: Partition) -> tuple[int, ...]:
    """Sort key realizing the reverse-lexicographic order within each degree."""
    return tuple(-x for x in lam)


def display_key(lam: Partition) -> tuple[int, tuple[int, ...]]:
    """Sort key for printing terms: by size, then reverse-lexicographic."""
    return (size(lam), revlex_key(lam))


def parse(text: str) -> Partition:
    """Parse the textual form '3,2,1'; the empty string is the empty partition."""
    text = text.strip()
    if not text or text == "[]":
        return ()
    try:
        entries = [int(piece) for piece in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return make_partition(entries)


def unparse(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)


def is_partition(seq: Sequence[int]) -> bool:
    """Whether a sequence is already a canonical partition."""
    return all(x > 0 for x in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )
