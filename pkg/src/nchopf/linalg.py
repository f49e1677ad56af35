"""Sparse incremental row echelon form over QQ (fraction-free) or GF(p).

Vectors are dicts column -> raw field value; columns must be mutually
comparable.  Each row's pivot is its smallest column, so pivoting is
deterministic and independent of insertion order of equal spans.
"""

import heapq
from fractions import Fraction
from math import gcd

from .scalars import QQ


def _primitive(vec, tag):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec, tag
    for v in tag.values():
        g = gcd(g, v)
        if g == 1:
            return vec, tag
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
        tag = {k: v // g for k, v in tag.items()}
    return vec, tag


class Echelon:
    """Incrementally built echelon basis; optionally tracks input combinations."""

    def __init__(self, field=QQ, track=False):
        self.field = field
        self.rational = field.characteristic == 0
        self.track = track
        self.rows = {}
        self.tags = {}

    def __len__(self):
        return len(self.rows)

    rank = property(__len__)

    def _prepare(self, vec, tag):
        vec = {k: v for k, v in vec.items() if v != 0}
        tag = dict(tag) if tag else {}
        if self.rational:
            if any(type(v) is Fraction for v in vec.values()) or any(
                type(v) is Fraction for v in tag.values()
            ):
                den = 1
                for v in list(vec.values()) + list(tag.values()):
                    if type(v) is Fraction:
                        den = den * v.denominator // gcd(den, v.denominator)
                vec = {k: int(v * den) for k, v in vec.items()}
                tag = {k: int(v * den) for k, v in tag.items()}
        return vec, tag

    def reduce(self, vec, tag=None):
        """Reduce against the current rows; returns (remainder, tag combination)."""
        vec, tag = self._prepare(vec, tag)
        if not vec:
            return vec, tag
        rows, tags, p = self.rows, self.tags, self.field.characteristic
        heap = list(vec)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = vec.get(c)
            if a is None or c not in rows:
                continue
            prow = rows[c]
            ptag = tags.get(c) if self.track else None
            if self.rational:
                b = prow[c]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                if ma != 1:
                    if ma == -1:
                        vec = {k: -v for k, v in vec.items()}
                        tag = {k: -v for k, v in tag.items()}
                    else:
                        vec = {k: v * ma for k, v in vec.items()}
                        tag = {k: v * ma for k, v in tag.items()}
                for k, v in prow.items():
                    nv = vec.get(k, 0) - mb * v
                    if nv:
                        vec[k] = nv
                        if k not in seen:
                            heapq.heappush(heap, k)
                    else:
                        vec.pop(k, None)
                if ptag:
                    for k, v in ptag.items():
                        nv = tag.get(k, 0) - mb * v
                        if nv:
                            tag[k] = nv
                        else:
                            tag.pop(k, None)
                vec, tag = _primitive(vec, tag)
            else:
                for k, v in prow.items():
                    nv = (vec.get(k, 0) - a * v) % p
                    if nv:
                        vec[k] = nv
                        if k not in seen:
                            heapq.heappush(heap, k)
                    else:
                        vec.pop(k, None)
                if ptag:
                    for k, v in ptag.items():
                        nv = (tag.get(k, 0) - a * v) % p
                        if nv:
                            tag[k] = nv
                        else:
                            tag.pop(k, None)
        return vec, tag

    def add(self, vec, tag=None):
        """Insert a vector.  Returns None if independent, else the dependency tag."""
        rem, t = self.reduce(vec, tag)
        if not rem:
            return t
        c = min(rem)
        if not self.rational:
            inv = pow(rem[c], -1, self.field.characteristic)
            p = self.field.characteristic
            rem = {k: v * inv % p for k, v in rem.items()}
            t = {k: v * inv % p for k, v in t.items()}
        elif rem[c] < 0:
            rem = {k: -v for k, v in rem.items()}
            t = {k: -v for k, v in t.items()}
        self.rows[c] = rem
        if self.track:
            self.tags[c] = t
        return None

    def contains(self, vec):
        rem, _ = self.reduce(vec)
        return not rem

    def pivots(self):
        return sorted(self.rows)


def rank(vectors, field=QQ):
    e = Echelon(field)
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(images, field=QQ):
    """Basis of {c : sum c_i images[i] = 0}, each as a dict index -> coefficient.

    Kernel vectors are normalized so that their largest index has coefficient 1.
    """
    e = Echelon(field, track=True)
    out = []
    for i, img in enumerate(images):
        dep = e.add(img, {i: 1})
        if dep is not None:
            out.append(normalize(dep, field))
    return out


def normalize(vec, field=QQ):
    """Scale so that the coefficient at the largest key is 1."""
    vec = {k: v for k, v in vec.items() if v != 0}
    if not vec:
        return vec
    lead = vec[max(vec)]
    return {k: field.div(v, lead) for k, v in vec.items()}


def row_space_basis(vectors, field=QQ):
    """Reduced echelon basis (each vector normalized at its pivot) of the span."""
    e = Echelon(field)
    for v in vectors:
        e.add(v)
    basis = []
    for c in sorted(e.rows):
        row = e.rows[c]
        lead = row[c]
        basis.append({k: field.div(field(v), field(lead)) for k, v in row.items()})
    return basis
