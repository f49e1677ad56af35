"""Integer partial Bell polynomials, shared by the quotient coproducts and the
Faa di Bruno module."""

from functools import lru_cache
from math import factorial

from .errors import BadIndices


def _block_size_multisets(n, k, max_part=None):
    """Yield dicts {size: multiplicity} with k parts summing to n."""
    if max_part is None:
        max_part = n
    if k == 0:
        if n == 0:
            yield {}
        return
    for size in range(min(n - (k - 1), max_part), 0, -1):
        for rest in _block_size_multisets(n - size, k - 1, size):
            t = dict(rest)
            t[size] = t.get(size, 0) + 1
            yield t


@lru_cache(maxsize=None)
def bell_int(n, k):
    """B_{n,k}(u_1, ..., u_n) as {exponent tuple of length n: integer}."""
    if n < 1 or k < 1 or k > n:
        raise BadIndices(f"need 1 <= k <= n, got n={n}, k={k}")
    out = {}
    for t in _block_size_multisets(n, k):
        coeff = factorial(n)
        for i, m in t.items():
            coeff //= factorial(m) * factorial(i) ** m
        exps = tuple(t.get(i, 0) for i in range(1, n + 1))
        out[exps] = out.get(exps, 0) + coeff
    return out
