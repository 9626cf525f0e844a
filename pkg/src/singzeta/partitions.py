"""Integer partitions: conjugation, containment, box complements, enumeration.

Partitions index every summation in the closed-form zeta formulas.  They are
stored as tuples of weakly decreasing positive parts; the empty partition is
().  All enumeration orders are graded by size and then lexicographic, so
downstream reports are reproducible.
"""


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts", "_conj")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be positive")
        self.parts = parts
        self._conj = None

    @staticmethod
    def box(m, d):
        """The d-by-m box (m^d): d parts equal to m."""
        return Partition((m,) * d) if m else Partition()

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-indexed part, 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self):
        """Column lengths lam'_i = #{j : lam_j >= i}, cached."""
        if self._conj is None:
            cols = []
            for i in range(1, (self.parts[0] + 1) if self.parts else 1):
                cols.append(sum(1 for p in self.parts if p >= i))
            self._conj = Partition(cols)
            self._conj._conj = self
        return self._conj

    def conj_part(self, i):
        return self.conjugate().part(i)

    def contains(self, mu):
        """True iff mu_i <= self_i for all i (Young diagram containment)."""
        return all(mu.part(i) <= self.part(i) for i in range(1, mu.length() + 1))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return (self.size(), self.parts) < (other.size(), other.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    __repr__ = __str__

    @staticmethod
    def parse(text):
        """Parse `3,1` or `[3,1]` (empty string or `[]` is the empty partition)."""
        text = text.strip().strip("[]")
        if not text:
            return Partition()
        return Partition(int(p) for p in text.split(","))


def contains(mu, lam):
    """mu subset-of lam as diagrams."""
    return lam.contains(mu)


def box_complement(m, d, mu):
    """The 180-degree rotated complement of mu inside the d-by-m box.

    Part i of the result is m - mu_{d+1-i}; requires mu to fit in the box.
    """
    if not Partition.box(m, d).contains(mu):
        raise ValueError("%s does not fit in the %dx%d box" % (mu, d, m))
    comp = [m - mu.part(d + 1 - i) for i in range(1, d + 1)]
    return Partition(p for p in comp if p)


def iterate_box(m, d):
    """All mu contained in the d-by-m box, graded by |mu| then lexicographic."""
    if m < 0 or d < 0:
        raise ValueError("m, d must be nonnegative")
    by_size = {}
    for mu in _box_rec((), m, d):
        by_size.setdefault(sum(mu), []).append(mu)
    for n in sorted(by_size):
        for mu in sorted(by_size[n]):
            yield Partition(mu)


def _box_rec(prefix, m, rows_left):
    yield prefix
    if rows_left == 0:
        return
    cap = prefix[-1] if prefix else m
    for p in range(1, cap + 1):
        yield from _box_rec(prefix + (p,), m, rows_left - 1)


def iterate_bounded_parts(m, max_size):
    """All mu with mu_1 <= m and |mu| <= max_size, graded order."""
    if m < 0 or max_size < 0:
        raise ValueError("m, max_size must be nonnegative")
    for n in range(max_size + 1):
        for mu in sorted(_sized_rec((), m, n)):
            yield Partition(mu)


def _sized_rec(prefix, cap, remaining):
    if remaining == 0:
        yield prefix
        return
    top = min(cap, remaining)
    for p in range(1, top + 1):
        yield from _sized_rec(prefix + (p,), p, remaining - p)


def partitions_of(n, max_part=None):
    """All partitions of exactly n (optionally with bounded largest part)."""
    cap = n if max_part is None else max_part
    return [Partition(mu) for mu in sorted(_sized_rec((), cap, n))]
