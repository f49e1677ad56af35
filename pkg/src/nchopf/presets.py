"""Algebra presets and their parameter validation."""

from dataclasses import dataclass, replace

from .errors import BadDVector, CharMismatch, NonPrimeP, PNotDividingN, SpecError
from .scalars import field_for, is_prime

PRESETS = (
    "TBar", "TBarPm", "TBarPmPrime", "TBarN", "TBarNPrime", "TBarNP", "TBarNPD",
    "BF", "BFdB", "HFdB", "BFdBnc",
)

# Presets built on the Ore extension R[h; ad h]
ORE_PRESETS = ("TBar", "TBarPm", "TBarPmPrime", "TBarN", "TBarNPrime", "TBarNP", "TBarNPD")
HOPF_PRESETS = ("TBarPm", "TBarPmPrime", "TBarN", "TBarNPrime", "TBarNP", "TBarNPD", "HFdB")
LOCALIZED = ("TBarPm", "TBarPmPrime", "HFdB")
NEEDS_P = ("TBarPmPrime", "TBarNPrime", "TBarNP", "TBarNPD")
NEEDS_N = ("TBarN", "TBarNPrime", "TBarNP", "TBarNPD")

CLI_NAMES = {
    "tbar": "TBar", "tbar-pm": "TBarPm", "tbar-pm-prime": "TBarPmPrime",
    "tbar-n": "TBarN", "tbar-n-prime": "TBarNPrime", "tbar-np": "TBarNP",
    "tbar-npd": "TBarNPD", "bf": "BF", "bfdb": "BFdB", "hfdb": "HFdB", "bfdb-nc": "BFdBnc",
}


@dataclass(frozen=True)
class AlgebraSpec:
    preset: str
    characteristic: int = 0
    p: int = None
    n: int = None
    d: tuple = ()
    commutative: bool = False
    cop: bool = False

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise SpecError(f"unknown preset {self.preset!r}")
        object.__setattr__(self, "d", tuple(self.d or ()))
        if self.p is None and self.preset in NEEDS_P + ("TBarN",) and self.characteristic:
            object.__setattr__(self, "p", self.characteristic)

    @property
    def field(self):
        return field_for(self.characteristic)

    @property
    def localized(self):
        return self.preset in LOCALIZED

    @property
    def is_hopf(self):
        return self.preset in HOPF_PRESETS

    @property
    def is_ore(self):
        return self.preset in ORE_PRESETS

    @property
    def g_order(self):
        """n if g^n = 1 is imposed, else None."""
        return self.n if self.preset in NEEDS_N else None

    @property
    def h_cap(self):
        return self.p if self.preset in ("TBarNP", "TBarNPD") else None

    @property
    def kmax(self):
        """Smallest index k with E_k = 0 (None: no such index)."""
        if self.preset == "TBarN" and self.commutative:
            return 1
        if self.preset in ("TBarPmPrime", "TBarNPrime", "TBarNP", "TBarNPD"):
            return self.p - 1
        return None

    @property
    def e_caps(self):
        """Tuple c with E_k^{c[k-1]} = 0 (0 meaning uncapped)."""
        if self.preset != "TBarNPD":
            return ()
        return tuple(self.p ** dk for dk in self.d)

    def with_cop(self, cop=True):
        return replace(self, cop=cop)

    def label(self):
        parts = [self.preset]
        if self.characteristic:
            parts.append(f"char={self.characteristic}")
        if self.p is not None and self.preset in NEEDS_P:
            parts.append(f"p={self.p}")
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.d:
            parts.append("d=" + ",".join(map(str, self.d)))
        if self.commutative:
            parts.append("commutative")
        if self.cop:
            parts.append("cop")
        return "(" + ", ".join(parts) + ")"


def validate_spec(s):
    c = s.characteristic
    if c != 0 and not is_prime(c):
        raise NonPrimeP(f"characteristic {c} is not 0 or a prime")
    if s.p is not None and not is_prime(s.p):
        raise NonPrimeP(f"p = {s.p} is not prime")
    if s.commutative and s.preset != "TBarN":
        raise SpecError("the commutative flag only applies to TBarN")
    if s.preset in NEEDS_N:
        if s.n is None or s.n < 1:
            raise SpecError(f"{s.preset} needs a positive n")
    if s.preset in NEEDS_P:
        if s.p is None:
            raise SpecError(f"{s.preset} needs p")
        if c != s.p:
            raise CharMismatch(f"{s.preset} needs characteristic p = {s.p}, got {c}")
    if s.preset in NEEDS_N and not (s.preset == "TBarN" and s.commutative):
        if c == 0:
            raise CharMismatch(f"{s.preset} with E_gh != 0 needs characteristic p > 0")
        if s.p is not None and s.p != c:
            raise CharMismatch(f"p = {s.p} but characteristic is {c}")
        if s.n % c:
            raise PNotDividingN(f"p = {c} does not divide n = {s.n}")
    if s.preset == "TBarNPD":
        d = s.d
        if not 1 <= len(d) <= s.p - 2:
            raise BadDVector(f"need 1 <= len(d) <= p-2 = {s.p - 2}, got {len(d)}")
        if any((not isinstance(x, int)) or x < 1 for x in d):
            raise BadDVector(f"entries of d must be >= 1: {d}")
        if any(a > b for a, b in zip(d, d[1:])):
            raise BadDVector(f"d must satisfy d_1 <= d_2 <= ... <= d_j, got {d}")
    elif s.d:
        raise BadDVector(f"{s.preset} takes no d vector")
    return s


# Shorthand constructors

def TBar(characteristic=0, cop=False):
    return AlgebraSpec("TBar", characteristic, cop=cop)


def TBarPm(characteristic=0, cop=False):
    return AlgebraSpec("TBarPm", characteristic, cop=cop)


def TBarPmPrime(p, cop=False):
    return AlgebraSpec("TBarPmPrime", p, p=p, cop=cop)


def TBarN(p, n, commutative=False, characteristic=None, cop=False):
    if characteristic is None:
        characteristic = 0 if commutative else p
    return AlgebraSpec("TBarN", characteristic, p=p, n=n, commutative=commutative, cop=cop)


def TBarNPrime(p, n, cop=False):
    return AlgebraSpec("TBarNPrime", p, p=p, n=n, cop=cop)


def TBarNP(p, n, cop=False):
    return AlgebraSpec("TBarNP", p, p=p, n=n, cop=cop)


def TBarNPD(p, n, d, cop=False):
    return AlgebraSpec("TBarNPD", p, p=p, n=n, d=tuple(d), cop=cop)


def BF(characteristic=0):
    return AlgebraSpec("BF", characteristic)


def BFdB(characteristic=0):
    return AlgebraSpec("BFdB", characteristic)


def HFdB(characteristic=0):
    return AlgebraSpec("HFdB", characteristic)


def BFdBnc(characteristic=0):
    return AlgebraSpec("BFdBnc", characteristic)
