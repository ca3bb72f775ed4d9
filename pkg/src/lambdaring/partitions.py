"""Integer partitions: the index set for bases, irreducibles and cycle types.

A partition is stored as a weakly decreasing tuple of positive integers.
:class:`Partition` subclasses ``tuple`` so it hashes and compares like the
plain tuple of its parts.
"""
import functools
import re

from .errors import DomainError, ParseError


class Partition(tuple):
    """A Young diagram, e.g. ``Partition((3, 1))``."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        return tuple.__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self):
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


def as_partition(obj):
    """Coerce a tuple/list/Partition, sorting nothing: order must already be valid."""
    if isinstance(obj, Partition):
        return obj
    return Partition(obj)


def normalize(parts):
    """Sort arbitrary positive parts into a partition (drops zeros)."""
    return Partition._trusted(tuple(sorted((p for p in parts if p), reverse=True)))


def size(lam):
    return sum(lam)


def partitions_of(n):
    """All partitions of ``n`` in reverse-lexicographic order: ``(n)`` first, ``(1^n)`` last."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return list(_partitions_cached(n))


@functools.lru_cache(maxsize=None)
def _partitions_cached(n):
    return tuple(Partition._trusted(p) for p in _gen(n, n))


def _gen(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def partitions_up_to(n):
    """Partitions of 0..n, ascending degree, reverse-lex within a degree."""
    out = []
    for k in range(n + 1):
        out.extend(_partitions_cached(k))
    return out


def conjugate(lam):
    """Transpose diagram: column heights of ``lam``."""
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def hooks_and_contents(lam):
    """(hook length, content) per cell, row by row, 0-indexed cells."""
    conj = conjugate(lam)
    return [
        (lam[i] - j + conj[j] - i - 1, j - i)
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def multiplicities(lam):
    counts = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts


def sort_key(lam):
    """Canonical order: ascending size, then reverse-lex within a size."""
    return (sum(lam), tuple(-p for p in lam))


_TEXT = re.compile(r"\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text):
    """Read ``[2,1]`` / ``[]``; also accepts bare ``2,1`` as used by ``--shape``."""
    m = _TEXT.match(text)
    if m is None:
        bare = text.strip()
        if bare == "":
            return Partition(())
        if not re.fullmatch(r"\d+(\s*,\s*\d+)*", bare):
            raise ParseError(f"malformed partition {text!r}", 0, "[a,b,...]")
        body = bare
    else:
        body = m.group(1) or ""
    parts = [int(x) for x in body.split(",")] if body else []
    if any(p == 0 for p in parts):
        raise DomainError(f"partition {text!r} has a zero part")
    return Partition(parts)


def format_partition(lam):
    return "[" + ",".join(str(p) for p in lam) + "]"
