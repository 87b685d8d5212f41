"""E-polynomials of the twisted character varieties of the 2-torus (tabulated values)."""

from __future__ import annotations

from ..poly import EPoly
from ..sl2 import ConjClass

q = EPoly.q()

EPOLY_TABLE: dict[str, EPoly] = {
    "M_I": q * q + 1,
    "M_-I": EPoly((1,)),
    "M_J+": q * q - 2 * q - 3,
    "M_J-": q * q + 3 * q,
    "M_xi": q * q + 4 * q + 1,
    "X_t": q * q + 4 * q + 1,
    "X_2": q * q + 1,
    "X_-2": q * q + 3 * q + 1,
    "V": q * q + 7 * q + 1,
    "V_inf": 3 * q,
}

_CLASS_TAGS = {"Id": "M_I", "MinusId": "M_-I", "JPlus": "M_J+", "JMinus": "M_J-", "Diag": "M_xi"}


def epoly(key: str | ConjClass) -> EPoly:
    """Table lookup by fiber tag (``"X_t"``, ``"V_inf"``, ...) or by conjugacy class."""
    if isinstance(key, ConjClass):
        key = _CLASS_TAGS[key.tag]
    try:
        return EPOLY_TABLE[key]
    except KeyError:
        raise ValueError(f"unknown E-polynomial tag {key!r}") from None


def consistency_checks() -> dict[str, bool]:
    e = EPOLY_TABLE
    return {
        "e(X_-2) = e(M_J-) + e(M_-I)": e["X_-2"] == e["M_J-"] + e["M_-I"],
        "e(X_2) = e(M_I)": e["X_2"] == e["M_I"],
        "e(V) - e(V_inf) = q^2 + 4q + 1": e["V"] - e["V_inf"] == q * q + 4 * q + 1,
        "e(X_t) = e(M_xi)": e["X_t"] == e["M_xi"],
    }


def epoly_consistency() -> bool:
    return all(consistency_checks().values())
