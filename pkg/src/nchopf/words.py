"""Words over the ordered alphabet g < h and Lyndon word machinery.

Words are plain strings.  Python string comparison already puts a proper
prefix before its extensions, which is the lexicographic order we need.
"""

from functools import lru_cache

from .errors import EmptyWord, NotLyndon, SingleLetter

ALPHABET = "gh"


def compare_lex(a, b):
    """-1, 0 or 1."""
    return (a > b) - (a < b)


def letter_counts(w):
    return w.count("g"), w.count("h")


def is_lyndon(w):
    """Duval scan: w is Lyndon iff it is its own single Lyndon factor."""
    if not w:
        raise EmptyWord("the empty word has no Lyndon status")
    n = len(w)
    i, j = 0, 1
    while j < n:
        if w[i] < w[j]:
            i = 0
        elif w[i] == w[j]:
            i += 1
        else:
            return False
        j += 1
    # w = u^k u' with u the Lyndon period; Lyndon iff the period is all of w
    return j - i == n


def lyndon_factorization(w):
    """Chen-Fox-Lyndon factorization into nonincreasing Lyndon words (Duval)."""
    out = []
    n, k = len(w), 0
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        period = j - i
        while k <= i:
            out.append(w[k:k + period])
            k += period
    return out


def lyndon_words_of_length(n, alphabet=ALPHABET):
    """Duval's generation algorithm, in lexicographic order."""
    if n < 1:
        return []
    out = []
    a = alphabet
    w = [0]
    while w:
        if len(w) == n:
            out.append("".join(a[i] for i in w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == len(a) - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def lyndon_enumerate(max_len, alphabet=ALPHABET):
    out = []
    for n in range(1, max_len + 1):
        out.extend(lyndon_words_of_length(n, alphabet))
    return out


@lru_cache(maxsize=None)
def standard_factorization(w):
    if len(w) == 1:
        raise SingleLetter(f"{w} is a single letter")
    if not is_lyndon(w):
        raise NotLyndon(f"{w} is not a Lyndon word")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise NotLyndon(w)


def omega_word(r):
    return "g" + "h" * r


def is_omega(w):
    return w[:1] == "g" and w[1:] == "h" * (len(w) - 1)


def necklace_count(n, k=2):
    """Number of aperiodic necklaces (Lyndon words) of length n over k letters."""
    def mobius(m):
        res, d = 1, 2
        while d * d <= m:
            if m % d == 0:
                m //= d
                if m % d == 0:
                    return 0
                res = -res
            d += 1
        return -res if m > 1 else res

    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n
