"""Coverage-counting segment tree over a fixed elementary decomposition.

The tree is built once over a set of integer endpoint values.  Its leaves
alternate between degenerate point intervals [v, v] and the open gaps
(v, v') between consecutive values, so two spans that merely share an
endpoint never cover a common leaf.  This replaces the usual epsilon
perturbation trick symbolically: free space squeezed to width zero between
two abutting spans survives as an uncovered point leaf.

By default an inserted span [b, e] covers every leaf strictly inside it
(the open gaps plus the interior points) but neither endpoint leaf.  The
``cover_low`` / ``cover_high`` flags extend coverage onto an endpoint leaf;
they exist for spans that were clamped to the tree's value range, where
the original span continued past the clamp.
"""

from __future__ import annotations

from bisect import bisect_left


class UnknownEndpoint(KeyError):
    """Query or update used a value that was not part of the build set."""


class CoverageSegmentTree:
    """Static-structure segment tree with per-node coverage counts."""

    def __init__(self, endpoints):
        values = sorted(set(endpoints))
        if not values:
            raise ValueError("at least one endpoint value is required")
        self.values = values
        # leaf layout: [v0], (v0,v1), [v1], ..., [vk]
        self.leaf_count = 2 * len(values) - 1
        size = 1
        while size < self.leaf_count:
            size *= 2
        self._size = size
        n_nodes = 2 * size
        self._count = [0] * n_nodes
        # full: every leaf below is covered; padding leaves count as full
        # so that aggregation over partially padded nodes stays correct.
        self._full = [False] * n_nodes
        self._any = [False] * n_nodes
        for i in range(size + self.leaf_count, n_nodes):
            self._full[i] = True
        for i in range(size - 1, 0, -1):
            self._full[i] = self._full[2 * i] and self._full[2 * i + 1]
        self._active = {}
        self.node_touches = 0  # instrumentation for complexity checks

    # -- value/leaf mapping ------------------------------------------------

    def _index(self, value):
        i = bisect_left(self.values, value)
        if i == len(self.values) or self.values[i] != value:
            raise UnknownEndpoint(value)
        return i

    def elementary_intervals(self):
        """The fixed decomposition as (lo, hi) pairs; lo == hi marks a point."""
        out = []
        for i, v in enumerate(self.values):
            if i:
                out.append((self.values[i - 1], v))
            out.append((v, v))
        return out

    def _leaf_span(self, b, e, cover_low, cover_high):
        """Leaf index range covered by span [b, e], or None for an empty range."""
        ib = 2 * self._index(b)
        ie = 2 * self._index(e)
        if b > e:
            raise ValueError(f"inverted span [{b}, {e}]")
        if b == e:
            # a degenerate span covers its single point leaf only when the
            # original interval strictly contained it on both sides
            return (ib, ib) if (cover_low and cover_high) else None
        lo = ib if cover_low else ib + 1
        hi = ie if cover_high else ie - 1
        return (lo, hi)

    # -- updates -----------------------------------------------------------

    def insert(self, b, e, cover_low=False, cover_high=False):
        span = self._leaf_span(b, e, cover_low, cover_high)
        key = (b, e, cover_low, cover_high)
        self._active[key] = self._active.get(key, 0) + 1
        if span is not None:
            self._update(1, 0, self._size - 1, span[0], span[1], 1)

    def remove(self, b, e, cover_low=False, cover_high=False):
        key = (b, e, cover_low, cover_high)
        have = self._active.get(key, 0)
        if have <= 0:
            raise ValueError(f"span {key} was not inserted")
        if have == 1:
            del self._active[key]
        else:
            self._active[key] = have - 1
        span = self._leaf_span(b, e, cover_low, cover_high)
        if span is not None:
            self._update(1, 0, self._size - 1, span[0], span[1], -1)

    def _update(self, node, nlo, nhi, lo, hi, delta):
        self.node_touches += 1
        if hi < nlo or nhi < lo:
            return
        if lo <= nlo and nhi <= hi:
            self._count[node] += delta
        else:
            mid = (nlo + nhi) // 2
            self._update(2 * node, nlo, mid, lo, hi, delta)
            self._update(2 * node + 1, mid + 1, nhi, lo, hi, delta)
        if node < self._size:
            self._full[node] = self._count[node] > 0 or (
                self._full[2 * node] and self._full[2 * node + 1])
            self._any[node] = self._count[node] > 0 or (
                self._any[2 * node] or self._any[2 * node + 1])
        else:
            self._full[node] = self._count[node] > 0
            self._any[node] = self._count[node] > 0

    # -- queries -----------------------------------------------------------

    def uncovered_within(self, b, e):
        """Maximal zero-coverage sub-intervals of [b, e], endpoint leaves included.

        Returns closed (lo, hi) value pairs; lo == hi is a degenerate point.
        """
        ib = 2 * self._index(b)
        ie = 2 * self._index(e)
        pieces = []
        self._collect(1, 0, self._size - 1, ib, ie, pieces)
        # fuse leaf ranges that came back from sibling subtrees
        runs = []
        for lo, hi in pieces:
            if runs and runs[-1][1] + 1 == lo:
                runs[-1][1] = hi
            else:
                runs.append([lo, hi])
        out = []
        for lo, hi in runs:
            # maximal uncovered runs always begin and end on point leaves:
            # a gap leaf next to a covered point leaf would need a covering
            # span that stops exactly on that point, which the insert
            # semantics rule out except at the clamped range ends.
            if lo % 2 == 1 or hi % 2 == 1:
                raise AssertionError("uncovered run not bounded by point leaves")
            out.append((self.values[lo // 2], self.values[hi // 2]))
        return out

    def _collect(self, node, nlo, nhi, lo, hi, pieces):
        if hi < nlo or nhi < lo or self._count[node] > 0 or self._full[node]:
            return
        if lo <= nlo and nhi <= hi and not self._any[node]:
            a, b = nlo, min(nhi, self.leaf_count - 1)
            if a <= b:
                if pieces and pieces[-1][1] + 1 == a:
                    pieces[-1][1] = b
                else:
                    pieces.append([a, b])
            return
        if node >= self._size:
            return
        mid = (nlo + nhi) // 2
        self._collect(2 * node, nlo, mid, lo, hi, pieces)
        self._collect(2 * node + 1, mid + 1, nhi, lo, hi, pieces)

    def has_coverage(self, b, e, include_endpoints=False):
        """True when any leaf of the (open by default) span [b, e] is covered."""
        span = self._leaf_span(b, e, include_endpoints, include_endpoints)
        if span is None:
            return False
        return self._probe(1, 0, self._size - 1, span[0], span[1])

    def _probe(self, node, nlo, nhi, lo, hi):
        if hi < nlo or nhi < lo:
            return False
        if self._count[node] > 0:
            return True
        if not self._any[node]:
            return False
        if lo <= nlo and nhi <= hi:
            return self._any[node]
        if node >= self._size:
            return False
        mid = (nlo + nhi) // 2
        return (self._probe(2 * node, nlo, mid, lo, hi)
                or self._probe(2 * node + 1, mid + 1, nhi, lo, hi))

    def coverage_profile(self):
        """Total coverage count per elementary interval, in leaf order."""
        profile = [0] * self.leaf_count
        self._accumulate(1, 0, self._size - 1, 0, profile)
        return profile

    def _accumulate(self, node, nlo, nhi, above, profile):
        total = above + self._count[node]
        if nlo == nhi:
            if nlo < self.leaf_count:
                profile[nlo] = total
            return
        mid = (nlo + nhi) // 2
        if total > 0 or self._any[node]:
            self._accumulate(2 * node, nlo, mid, total, profile)
            self._accumulate(2 * node + 1, mid + 1, nhi, total, profile)
        elif total == 0 and not self._any[node]:
            return  # all zeros already

    def __eq__(self, other):
        if not isinstance(other, CoverageSegmentTree):
            return NotImplemented
        return (self.values == other.values
                and self.coverage_profile() == other.coverage_profile())

    __hash__ = None
