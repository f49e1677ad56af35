"""Term rewriting on generator strings: normal forms and overlap ambiguities.

Tokens are tuples: ('h',), ('g',), ('G',) for g^-1, ('E', k) for E_k with
k >= 1 and ('W', m) for the BF generators omega~_m with m >= 1.  In BF
strings g is written ('E', 0).
"""

import random

from .errors import IllegalGenerator, NonTerminating
from .scalars import binomial

H, G, GI = ("h",), ("g",), ("G",)


def E(k):
    return ("E", k)


def W(m):
    return ("W", m)


def token_str(t):
    if t == H:
        return "h"
    if t == G:
        return "g"
    if t == GI:
        return "g^-1"
    if t[0] == "E":
        return "g" if t[1] == 0 else f"E({t[1]})"
    return f"w({t[1]})"


def seq_str(seq):
    if not seq:
        return "1"
    out = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        s = token_str(seq[i])
        c = j - i
        if c == 1:
            out.append(s)
        elif seq[i] == GI:
            out.append(f"g^-{c}")
        else:
            out.append(f"{s}^{c}")
        i = j
    return "*".join(out)


class RewriteSystem:
    """The reduction rules of one preset."""

    def __init__(self, spec):
        self.spec = spec
        self.field = spec.field
        self.bf = spec.preset == "BF"
        if spec.preset not in ("BF",) and not spec.is_ore:
            raise IllegalGenerator(f"{spec.preset} has no rewriting presentation")
        self.kmax = None if self.bf else spec.kmax
        self.n = None if self.bf else spec.g_order
        self.h_cap = None if self.bf else spec.h_cap
        self.caps = () if self.bf else spec.e_caps
        self.localized = spec.localized
        self.commutative = spec.preset == "TBarN" and spec.commutative
        self._memo = {}

    # generator legality and zero generators

    def e_index(self, t):
        if t == G:
            return 0
        if t[0] == "E":
            return t[1]
        return None

    def is_zero_token(self, t):
        if t[0] == "E" and self.kmax is not None and t[1] >= self.kmax:
            return True
        return False

    def check_token(self, t):
        if self.bf:
            if t in (H, GI):
                raise IllegalGenerator(f"{token_str(t)} is not a generator of BF")
            if t == G:
                return E(0)
            if t[0] not in ("E", "W") or t[1] < 0:
                raise IllegalGenerator(str(t))
            if t[0] == "W" and t[1] == 0:
                return E(0)
            return t
        if t[0] == "W":
            raise IllegalGenerator("w(m) is only a generator of BF")
        if t == GI and not (self.localized or self.n is not None):
            raise IllegalGenerator("g^-1 needs a localized preset or g^n = 1")
        if t[0] == "E" and t[1] == 0:
            return G
        if t[0] == "E" and t[1] < 0:
            raise IllegalGenerator(str(t))
        return t

    def prepare(self, seq):
        """Validate tokens; returns the cleaned sequence or None if it is zero."""
        out = []
        for t in seq:
            t = self.check_token(t)
            if not self.bf and t == GI and not self.localized:
                out.extend([G] * (self.n - 1))
                continue
            if self.is_zero_token(t):
                return None
            out.append(t)
        return tuple(out)

    # rules

    def pair_rule(self, x, y):
        """Replacement for the adjacent pair xy, or None if xy is not a left side."""
        if self.bf:
            return self._bf_pair(x, y)
        if y == H:
            s = self.e_index(x)
            if s is not None:
                out = [((H, x), 1)]
                if self.kmax is None or s + 1 < self.kmax:
                    out.append(((E(s + 1),), 1))
                return out
            if x == GI:
                out = [((H, GI), 1)]
                if self.kmax is None or self.kmax > 1:
                    out.append(((E(1), GI, GI), -1))
                return out
            return None
        s, t = self.e_index(x), self.e_index(y)
        if s is not None and t is not None and s < t:
            return [((y, x), 1)]
        if x == GI and y[0] == "E":
            return [((y, x), 1)]
        if (x, y) in ((G, GI), (GI, G)):
            return [((), 1)]
        return None

    def _bf_pair(self, x, y):
        if x[0] == "E" and y[0] == "E":
            if x[1] < y[1]:
                return [((y, x), 1)]
            return None
        if x[0] == "E" and y[0] == "W":
            m, n = x[1], y[1]
            out = []
            for k in range(n + 1):
                first = W(n - k) if n - k > 0 else E(0)
                out.append(((first, E(m + k)), binomial(n, k)))
            return out
        if x[0] == "W" and y[0] == "W":
            m, n = x[1], y[1]
            return [((W(m + n - k), E(k)), binomial(n, k)) for k in range(n + 1)]
        return None

    def power_rules(self):
        """List of (token, exponent, replacement) with replacement () or None for zero."""
        out = []
        if self.bf:
            return out
        if self.n is not None:
            out.append((G, self.n, ()))
        if self.h_cap is not None:
            out.append((H, self.h_cap, None))
        for k, c in enumerate(self.caps, start=1):
            if c:
                out.append((E(k), c, None))
        return out

    def redexes(self, seq):
        """All (position, kind, data) reductions applicable to seq."""
        out = []
        powers = self.power_rules()
        for i in range(len(seq) - 1):
            if self.pair_rule(seq[i], seq[i + 1]) is not None:
                out.append((i, "pair", None))
        for tok, c, _ in powers:
            run = 0
            for i, t in enumerate(seq):
                run = run + 1 if t == tok else 0
                if run >= c:
                    out.append((i - c + 1, "power", tok))
        out.sort(key=lambda r: (r[0], r[1]))
        return out

    def first_redex(self, seq):
        powers = self.power_rules()
        for i in range(len(seq)):
            for tok, c, _ in powers:
                if seq[i] == tok and seq[i:i + c] == (tok,) * c:
                    return (i, "power", tok)
            if i + 1 < len(seq) and self.pair_rule(seq[i], seq[i + 1]) is not None:
                return (i, "pair", None)
        return None

    def apply(self, seq, redex):
        """One rewriting step; returns a list of (sequence, integer coefficient)."""
        i, kind, tok = redex
        if kind == "pair":
            rep = self.pair_rule(seq[i], seq[i + 1])
            return [(seq[:i] + r + seq[i + 2:], c) for r, c in rep if c]
        for t, c, r in self.power_rules():
            if t == tok:
                if r is None:
                    return []
                return [(seq[:i] + r + seq[i + c:], 1)]
        raise ValueError(redex)

    def redex_len(self, redex):
        if redex[1] == "pair":
            return 2
        for t, c, _ in self.power_rules():
            if t == redex[2]:
                return c
        raise ValueError(redex)

    def is_normal(self, seq):
        return self.first_redex(seq) is None

    # normalization

    def reduce(self, lin, strategy="leftmost", seed=0, fuel=2_000_000):
        """Fully reduce a dict {sequence: field value}."""
        fld = self.field
        rng = random.Random(seed)
        work = dict(lin)
        done = {}
        steps = 0
        while work:
            seq, c = work.popitem()
            if c == 0:
                continue
            if strategy == "random":
                rs = self.redexes(seq)
                red = rng.choice(rs) if rs else None
            else:
                red = self.first_redex(seq)
            if red is None:
                nv = fld.add(done.get(seq, 0), c)
                if nv:
                    done[seq] = nv
                else:
                    done.pop(seq, None)
                continue
            steps += 1
            if steps > fuel:
                raise NonTerminating(f"rewriting exceeded {fuel} steps")
            for s2, c2 in self.apply(seq, red):
                v = fld.mul(c, fld.from_int(c2))
                if not v:
                    continue
                if s2 in done and self.is_normal(s2):
                    nv = fld.add(done[s2], v)
                    if nv:
                        done[s2] = nv
                    else:
                        done.pop(s2)
                    continue
                nv = fld.add(work.get(s2, 0), v)
                if nv:
                    work[s2] = nv
                else:
                    work.pop(s2, None)
        return done

    def _append(self, nseq, tok):
        """Normal form of (normal sequence) * token, memoized."""
        key = (nseq, tok)
        hit = self._memo.get(key)
        if hit is None:
            hit = self.reduce({nseq + (tok,): self.field.one})
            if len(self._memo) > 200000:
                self._memo.clear()
            self._memo[key] = hit
        return hit

    def reduce_memo(self, lin):
        """Suffix-first strategy: normalize prefixes, then append one token at a time."""
        fld = self.field
        out = {}
        for seq, c in lin.items():
            cur = {(): fld.one}
            for tok in seq:
                nxt = {}
                for s, v in cur.items():
                    for s2, w in self._append(s, tok).items():
                        nv = fld.add(nxt.get(s2, 0), fld.mul(v, w))
                        if nv:
                            nxt[s2] = nv
                        else:
                            nxt.pop(s2, None)
                cur = nxt
                if not cur:
                    break
            for s, v in cur.items():
                nv = fld.add(out.get(s, 0), fld.mul(c, v))
                if nv:
                    out[s] = nv
                else:
                    out.pop(s, None)
        return out

    def normalize(self, lin, strategy="memo", seed=0, fuel=2_000_000):
        fld = self.field
        clean = {}
        for seq, c in lin.items():
            s = self.prepare(seq)
            if s is None:
                continue
            c = fld(c) if not isinstance(c, int) else fld.from_int(c)
            nv = fld.add(clean.get(s, 0), c)
            if nv:
                clean[s] = nv
            else:
                clean.pop(s, None)
        if strategy == "memo":
            return self.reduce_memo(clean)
        return self.reduce(clean, strategy=strategy, seed=seed, fuel=fuel)

    # conversion between normal sequences and basis keys

    def seq_to_key(self, seq):
        if self.bf:
            m = 0
            i = 0
            if seq and seq[0][0] == "W":
                m = seq[0][1]
                i = 1
            exps = [0]
            b = 0
            for t in seq[i:]:
                if t[1] == 0:
                    b += 1
                else:
                    if len(exps) < t[1]:
                        exps.extend([0] * (t[1] - len(exps)))
                    exps[t[1] - 1] += 1
            while exps and exps[-1] == 0:
                exps.pop()
            return (m, tuple(exps), b)
        a = 0
        exps = []
        b = 0
        for t in seq:
            if t == H:
                a += 1
            elif t == G:
                b += 1
            elif t == GI:
                b -= 1
            else:
                if len(exps) < t[1]:
                    exps.extend([0] * (t[1] - len(exps)))
                exps[t[1] - 1] += 1
        while exps and exps[-1] == 0:
            exps.pop()
        return (a, tuple(exps), b)

    def key_to_seq(self, key):
        first, exps, b = key
        out = []
        if self.bf:
            if first:
                out.append(W(first))
        else:
            out.extend([H] * first)
        for k in range(len(exps), 0, -1):
            out.extend([E(k)] * exps[k - 1])
        if self.bf:
            out.extend([E(0)] * b)
        elif b >= 0:
            out.extend([G] * b)
        else:
            out.extend([GI] * (-b))
        return tuple(out)

    # overlap ambiguities

    def alphabet(self, K):
        if self.bf:
            return [E(k) for k in range(K + 1)] + [W(m) for m in range(1, K + 1)]
        toks = [H, G]
        if self.localized:
            toks.append(GI)
        top = K if self.kmax is None else min(K, self.kmax - 1)
        toks.extend(E(k) for k in range(1, top + 1))
        return toks

    def overlaps(self, K):
        """Yield (label, word, left_redex, right_redex) for every overlap ambiguity."""
        alpha = self.alphabet(K)
        for x in alpha:
            for y in alpha:
                if self.pair_rule(x, y) is None:
                    continue
                for z in alpha:
                    if self.pair_rule(y, z) is None:
                        continue
                    word = (x, y, z)
                    yield ("pair/pair", word, (0, "pair", None), (1, "pair", None))
        for tok, c, _ in self.power_rules():
            for z in alpha:
                if self.pair_rule(tok, z) is not None:
                    word = (tok,) * c + (z,)
                    yield ("power/pair", word, (0, "power", tok), (c - 1, "pair", None))
                if self.pair_rule(z, tok) is not None:
                    word = (z,) + (tok,) * c
                    yield ("pair/power", word, (0, "pair", None), (1, "power", tok))
            for shift in range(1, c):
                word = (tok,) * (c + shift)
                yield ("power/power", word, (0, "power", tok), (shift, "power", tok))


def describe_overlap(system, word, left, right):
    """Bracketing of an overlap, e.g. '(g^2*g)*h = g^2*(g*h)'."""
    i0, l0 = left[0], system.redex_len(left)
    i1 = right[0]
    a, b, c = word[i0:i1], word[i1:i0 + l0], word[i0 + l0:]
    return f"({seq_str(a)}*{seq_str(b)})*{seq_str(c)} = {seq_str(a)}*({seq_str(b)}*{seq_str(c)})"
