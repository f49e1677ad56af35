"""Structured (JSON-ready) forms of elements, tensors and growth tables."""

from .fdb import CPolyAlgebra, FPolyAlgebra
from .free import FreeAlgebra, PbwSpace


def monomial_record(algebra, key):
    if isinstance(algebra, FreeAlgebra):
        return {"word": key}
    if isinstance(algebra, PbwSpace):
        return {"pbw": [[w, e] for w, e in key]}
    if isinstance(algebra, CPolyAlgebra):
        return {"u": {str(i + 1): e for i, e in enumerate(key) if e}}
    if isinstance(algebra, FPolyAlgebra):
        return {"a": list(key)}
    first, exps, b = key
    rec = {"h": 0, "E": {str(k + 1): e for k, e in enumerate(exps) if e}, "g": b}
    if getattr(algebra, "rules", None) is not None:
        # BF keys carry an omega~ index in the first slot instead of an h power
        if first:
            rec["omega"] = [first, 1]
    else:
        rec["h"] = first
    return rec


def coeff_str(field, v):
    return field.to_str(v)


def element_record(x):
    A = x.algebra
    return [{"monomial": monomial_record(A, k), "coeff": coeff_str(A.field, v)} for k, v in x.items()]


def tensor_record(t):
    A, B = t.left, t.right
    return [
        {"left": monomial_record(A, k1), "right": monomial_record(B, k2), "coeff": coeff_str(A.field, v)}
        for (k1, k2), v in t.items()
    ]
