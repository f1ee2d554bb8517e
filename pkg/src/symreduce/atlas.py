"""Finite simple groups as data: exact orders, outer automorphism group
orders, a bounded catalog, and the scan for |T| < |Out(T)|^4.

Identifiers carry (family, n, p, f) with q = p^f, or a name for sporadic
groups.  Orders come from the standard closed formulas; the classical
lower bounds (q^(n^2-2) < |PSL_n(q)| and friends) are kept only as
cross-check predicates, never as substitutes for exact values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial, gcd
from pathlib import Path

from .errors import DomainError, TailCheckFailed
from .intmath import is_prime, prime_power_parts, prime_powers_upto, int_nth_root


class Family(Enum):
    ALTERNATING = "alternating"
    SPORADIC = "sporadic"
    LINEAR = "linear"
    UNITARY = "unitary"
    SYMPLECTIC = "symplectic"
    ORTHOGONAL_ODD = "orthogonal_odd"
    ORTHOGONAL_PLUS = "orthogonal_plus"
    ORTHOGONAL_MINUS = "orthogonal_minus"
    G2 = "g2"
    F4 = "f4"
    E6 = "e6"
    E7 = "e7"
    E8 = "e8"
    SUZUKI = "suzuki"
    REE_G2 = "ree_g2"
    REE_F4 = "ree_f4"
    STEINBERG_3D4 = "steinberg_3d4"
    STEINBERG_2E6 = "steinberg_2e6"
    TITS = "tits"


_FAMILY_INDEX = {fam: i for i, fam in enumerate(Family)}

# Families parameterized by q = p^f.
_LIE_FAMILIES = frozenset(
    fam
    for fam in Family
    if fam not in (Family.ALTERNATING, Family.SPORADIC, Family.TITS)
)

# Classical families carry a dimension parameter n as well.
_CLASSICAL_FAMILIES = frozenset(
    (
        Family.LINEAR,
        Family.UNITARY,
        Family.SYMPLECTIC,
        Family.ORTHOGONAL_ODD,
        Family.ORTHOGONAL_PLUS,
        Family.ORTHOGONAL_MINUS,
    )
)


@dataclass(frozen=True)
class SimpleGroupId:
    """Identifier of a finite simple group.

    Lie-type families use (n, p, f); alternating uses n as the degree;
    sporadic entries use name.  The Tits group gets its own family tag so
    "examine all simple groups" loops cannot skip it.
    """

    family: Family
    n: int = 0
    p: int = 0
    f: int = 0
    name: str = ""

    @property
    def q(self) -> int:
        return self.p**self.f

    def sort_key(self):
        return (_FAMILY_INDEX[self.family], self.n, self.p, self.f, self.name)


@dataclass(frozen=True)
class GroupFacts:
    order: int
    out_order: int


# -- sporadic data ---------------------------------------------------------

_TITS_NAME = "2F4(2)'"


@lru_cache(maxsize=None)
def load_sporadic_table(path: str | None = None) -> dict[str, GroupFacts]:
    """Parse the sporadic-group table: one `name, order, out_order` record
    per line, `#` starts a comment.  The packaged table is used when no
    path is given."""
    if path is None:
        text = (
            resources.files("symreduce")
            .joinpath("data/sporadic_groups.txt")
            .read_text(encoding="utf-8")
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    table: dict[str, GroupFacts] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [piece.strip() for piece in line.split(",")]
        if len(parts) != 3:
            raise DomainError(f"sporadic table line {lineno}: expected 3 fields, got {len(parts)}")
        name, order_text, out_text = parts
        try:
            order_value, out_value = int(order_text), int(out_text)
        except ValueError as exc:
            raise DomainError(f"sporadic table line {lineno}: non-integer field") from exc
        if not name or order_value < 1 or out_value < 1:
            raise DomainError(f"sporadic table line {lineno}: invalid record")
        if name in table:
            raise DomainError(f"sporadic table line {lineno}: duplicate name {name!r}")
        table[name] = GroupFacts(order=order_value, out_order=out_value)
    return table


def sporadic_names(path: str | None = None) -> list[str]:
    """Sporadic names from the active table, Tits excluded."""
    return [name for name in load_sporadic_table(path) if name != _TITS_NAME]


# -- constructors (validate, then canonicalize) ----------------------------


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _q_parts(q: int, what: str) -> tuple[int, int]:
    parts = prime_power_parts(q)
    _require(parts is not None, f"{what}: q={q} is not a prime power")
    return parts


def alternating(n: int) -> SimpleGroupId:
    _require(n >= 5, f"alternating degree must be >= 5, got {n}")
    return SimpleGroupId(Family.ALTERNATING, n=n)


def sporadic(name: str, table_path: str | None = None) -> SimpleGroupId:
    if name == _TITS_NAME:
        return tits()
    _require(name in load_sporadic_table(table_path), f"unknown sporadic group {name!r}")
    return SimpleGroupId(Family.SPORADIC, name=name)


def tits() -> SimpleGroupId:
    return SimpleGroupId(Family.TITS, name=_TITS_NAME)


def linear(n: int, q: int) -> SimpleGroupId:
    _require(n >= 2, f"PSL dimension must be >= 2, got {n}")
    p, f = _q_parts(q, "PSL")
    _require((n, q) not in ((2, 2), (2, 3)), f"PSL({n},{q}) is not simple")
    return _canonicalize(SimpleGroupId(Family.LINEAR, n=n, p=p, f=f))


def unitary(n: int, q: int) -> SimpleGroupId:
    _require(n >= 3, f"PSU dimension must be >= 3, got {n}")
    p, f = _q_parts(q, "PSU")
    _require((n, q) != (3, 2), "PSU(3,2) is not simple")
    return SimpleGroupId(Family.UNITARY, n=n, p=p, f=f)


def symplectic(n: int, q: int) -> SimpleGroupId:
    _require(n >= 4 and n % 2 == 0, f"PSp dimension must be even and >= 4, got {n}")
    p, f = _q_parts(q, "PSp")
    _require((n, q) != (4, 2), "PSp(4,2) is not simple")
    return _canonicalize(SimpleGroupId(Family.SYMPLECTIC, n=n, p=p, f=f))


def orthogonal_odd(n: int, q: int) -> SimpleGroupId:
    _require(n >= 7 and n % 2 == 1, f"POmega dimension must be odd and >= 7, got {n}")
    p, f = _q_parts(q, "POmega")
    _require(p != 2, f"POmega({n},{q}) requires odd q")
    return SimpleGroupId(Family.ORTHOGONAL_ODD, n=n, p=p, f=f)


def orthogonal_plus(n: int, q: int) -> SimpleGroupId:
    _require(n >= 8 and n % 2 == 0, f"POmega+ dimension must be even and >= 8, got {n}")
    p, f = _q_parts(q, "POmega+")
    return SimpleGroupId(Family.ORTHOGONAL_PLUS, n=n, p=p, f=f)


def orthogonal_minus(n: int, q: int) -> SimpleGroupId:
    _require(n >= 8 and n % 2 == 0, f"POmega- dimension must be even and >= 8, got {n}")
    p, f = _q_parts(q, "POmega-")
    return SimpleGroupId(Family.ORTHOGONAL_MINUS, n=n, p=p, f=f)


def g2(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "G2")
    # G2(2) is not simple; its derived subgroup is PSU(3,3).
    _require(q >= 3, "G2(q) requires q >= 3")
    return SimpleGroupId(Family.G2, p=p, f=f)


def f4(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "F4")
    return SimpleGroupId(Family.F4, p=p, f=f)


def e6(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "E6")
    return SimpleGroupId(Family.E6, p=p, f=f)


def e7(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "E7")
    return SimpleGroupId(Family.E7, p=p, f=f)


def e8(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "E8")
    return SimpleGroupId(Family.E8, p=p, f=f)


def suzuki(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "2B2")
    _require(p == 2 and f % 2 == 1 and f >= 3, f"2B2 requires q = 2^f with odd f >= 3, got q={q}")
    return SimpleGroupId(Family.SUZUKI, p=p, f=f)


def ree_g2(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "2G2")
    _require(p == 3 and f % 2 == 1 and f >= 3, f"2G2 requires q = 3^f with odd f >= 3, got q={q}")
    return SimpleGroupId(Family.REE_G2, p=p, f=f)


def ree_f4(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "2F4")
    _require(p == 2 and f % 2 == 1 and f >= 3, f"2F4 requires q = 2^f with odd f >= 3, got q={q}")
    return SimpleGroupId(Family.REE_F4, p=p, f=f)


def steinberg_3d4(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "3D4")
    return SimpleGroupId(Family.STEINBERG_3D4, p=p, f=f)


def steinberg_2e6(q: int) -> SimpleGroupId:
    p, f = _q_parts(q, "2E6")
    return SimpleGroupId(Family.STEINBERG_2E6, p=p, f=f)


def _canonicalize(g: SimpleGroupId) -> SimpleGroupId:
    """Resolve the exceptional isomorphisms that land inside our family
    domains, so each abstract group has exactly one identifier."""
    if g.family is Family.LINEAR:
        key = (g.n, g.q)
        if key in ((2, 4), (2, 5)):
            return alternating(5)
        if key == (2, 9):
            return alternating(6)
        if key == (4, 2):
            return alternating(8)
        if key == (3, 2):
            return linear(2, 7)
    if g.family is Family.SYMPLECTIC and (g.n, g.q) == (4, 3):
        return unitary(4, 2)
    return g


# -- exact orders -----------------------------------------------------------


def _validate(g: SimpleGroupId) -> None:
    fam, n, q = g.family, g.n, g.q
    if fam is Family.ALTERNATING:
        _require(n >= 5, f"alternating degree must be >= 5, got {n}")
        return
    if fam in (Family.SPORADIC, Family.TITS):
        return
    parts = prime_power_parts(q)
    _require(
        parts == (g.p, g.f) and is_prime(g.p) and g.f >= 1,
        f"invalid prime power data p={g.p}, f={g.f}",
    )
    if fam is Family.LINEAR:
        _require(n >= 2 and (n, q) not in ((2, 2), (2, 3)), f"PSL({n},{q}) out of domain")
    elif fam is Family.UNITARY:
        _require(n >= 3 and (n, q) != (3, 2), f"PSU({n},{q}) out of domain")
    elif fam is Family.SYMPLECTIC:
        _require(n >= 4 and n % 2 == 0 and (n, q) != (4, 2), f"PSp({n},{q}) out of domain")
    elif fam is Family.ORTHOGONAL_ODD:
        _require(n >= 7 and n % 2 == 1 and q % 2 == 1, f"POmega({n},{q}) out of domain")
    elif fam in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        _require(n >= 8 and n % 2 == 0, f"POmega±({n},{q}) out of domain")
    elif fam is Family.G2:
        _require(q >= 3, "G2(q) requires q >= 3")
    elif fam is Family.SUZUKI:
        _require(g.p == 2 and g.f % 2 == 1 and g.f >= 3, f"2B2({q}) out of domain")
    elif fam is Family.REE_G2:
        _require(g.p == 3 and g.f % 2 == 1 and g.f >= 3, f"2G2({q}) out of domain")
    elif fam is Family.REE_F4:
        _require(g.p == 2 and g.f % 2 == 1 and g.f >= 3, f"2F4({q}) out of domain")


def order(g: SimpleGroupId, sporadic_table: str | None = None) -> int:
    """Exact |T|."""
    _validate(g)
    fam, n, q = g.family, g.n, g.q
    if fam is Family.ALTERNATING:
        return factorial(n) // 2
    if fam in (Family.SPORADIC, Family.TITS):
        return _sporadic_facts(g, sporadic_table).order
    if fam is Family.LINEAR:
        num = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            num *= q**i - 1
        return num // gcd(n, q - 1)
    if fam is Family.UNITARY:
        num = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            num *= q**i - (-1) ** i
        return num // gcd(n, q + 1)
    if fam in (Family.SYMPLECTIC, Family.ORTHOGONAL_ODD):
        m = n // 2
        num = q ** (m * m)
        for i in range(1, m + 1):
            num *= q ** (2 * i) - 1
        return num // gcd(2, q - 1)
    if fam in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        m = n // 2
        eps = 1 if fam is Family.ORTHOGONAL_PLUS else -1
        num = q ** (m * (m - 1)) * (q**m - eps)
        for i in range(1, m):
            num *= q ** (2 * i) - 1
        return num // gcd(4, q**m - eps)
    if fam is Family.G2:
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if fam is Family.F4:
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if fam is Family.E6:
        num = q**36
        for i in (12, 9, 8, 6, 5, 2):
            num *= q**i - 1
        return num // gcd(3, q - 1)
    if fam is Family.E7:
        num = q**63
        for i in (18, 14, 12, 10, 8, 6, 2):
            num *= q**i - 1
        return num // gcd(2, q - 1)
    if fam is Family.E8:
        num = q**120
        for i in (30, 24, 20, 18, 14, 12, 8, 2):
            num *= q**i - 1
        return num
    if fam is Family.SUZUKI:
        return q**2 * (q**2 + 1) * (q - 1)
    if fam is Family.REE_G2:
        return q**3 * (q**3 + 1) * (q - 1)
    if fam is Family.REE_F4:
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    if fam is Family.STEINBERG_3D4:
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if fam is Family.STEINBERG_2E6:
        num = q**36
        num *= (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1)
        return num // gcd(3, q + 1)
    raise DomainError(f"no order formula for {g}")


def out_order(g: SimpleGroupId, sporadic_table: str | None = None) -> int:
    """Exact |Out(T)|, including the diagonal/field/graph contributions and
    the D4 triality factor."""
    _validate(g)
    fam, n, q, f = g.family, g.n, g.q, g.f
    if fam is Family.ALTERNATING:
        return 4 if n == 6 else 2
    if fam in (Family.SPORADIC, Family.TITS):
        return _sporadic_facts(g, sporadic_table).out_order
    if fam is Family.LINEAR:
        if n == 2:
            return f * gcd(2, q - 1)
        return 2 * f * gcd(n, q - 1)
    if fam is Family.UNITARY:
        return 2 * f * gcd(n, q + 1)
    if fam is Family.SYMPLECTIC:
        # The n=4 graph automorphism exists only in characteristic 2, but
        # |Out| = 2f holds for all q: d*f = 2f when q is odd.
        if n == 4:
            return 2 * f
        return f * gcd(2, q - 1)
    if fam is Family.ORTHOGONAL_ODD:
        return 2 * f
    if fam is Family.ORTHOGONAL_PLUS:
        m = n // 2
        if n == 8:
            return 6 * f * gcd(4, q**4 - 1)  # triality: S3 on top of the diagonal part
        return 2 * f * gcd(4, q**m - 1)
    if fam is Family.ORTHOGONAL_MINUS:
        m = n // 2
        return 2 * f * gcd(4, q**m + 1)
    if fam is Family.G2:
        return 2 * f if g.p == 3 else f
    if fam is Family.F4:
        return 2 * f if g.p == 2 else f
    if fam is Family.E6:
        return 2 * f * gcd(3, q - 1)
    if fam is Family.E7:
        return f * gcd(2, q - 1)
    if fam is Family.E8:
        return f
    if fam in (Family.SUZUKI, Family.REE_G2, Family.REE_F4):
        return f
    if fam is Family.STEINBERG_3D4:
        return 3 * f
    if fam is Family.STEINBERG_2E6:
        return 2 * f * gcd(3, q + 1)
    raise DomainError(f"no out-order formula for {g}")


def _sporadic_facts(g: SimpleGroupId, sporadic_table: str | None) -> GroupFacts:
    table = load_sporadic_table(sporadic_table)
    if g.name not in table:
        raise DomainError(f"group {g.name!r} not present in sporadic table")
    return table[g.name]


def facts(g: SimpleGroupId, sporadic_table: str | None = None) -> GroupFacts:
    return GroupFacts(order(g, sporadic_table), out_order(g, sporadic_table))


# -- display / parse --------------------------------------------------------

_DISPLAY_PREFIX = {
    Family.LINEAR: "L",
    Family.UNITARY: "U",
    Family.SYMPLECTIC: "S",
    Family.ORTHOGONAL_ODD: "O",
    Family.ORTHOGONAL_PLUS: "O+",
    Family.ORTHOGONAL_MINUS: "O-",
}

_DISPLAY_EXCEPTIONAL = {
    Family.G2: "G2",
    Family.F4: "F4",
    Family.E6: "E6",
    Family.E7: "E7",
    Family.E8: "E8",
    Family.SUZUKI: "2B2",
    Family.REE_G2: "2G2",
    Family.REE_F4: "2F4",
    Family.STEINBERG_3D4: "3D4",
    Family.STEINBERG_2E6: "2E6",
}


def display_name(g: SimpleGroupId) -> str:
    fam = g.family
    if fam is Family.ALTERNATING:
        return f"A{g.n}"
    if fam in (Family.SPORADIC, Family.TITS):
        return g.name
    if fam in _DISPLAY_PREFIX:
        return f"{_DISPLAY_PREFIX[fam]}{g.n}({g.q})"
    return f"{_DISPLAY_EXCEPTIONAL[fam]}({g.q})"


_CLASSICAL_PATTERN = re.compile(r"^(L|U|S|O\+|O-|O)(\d+)\((\d+)\)$")
_EXCEPTIONAL_PATTERN = re.compile(r"^(G2|F4|E6|E7|E8|2B2|2G2|2F4|3D4|2E6)\((\d+)\)$")
_ALTERNATING_PATTERN = re.compile(r"^A(\d+)$")

_CLASSICAL_BUILDER = {
    "L": linear,
    "U": unitary,
    "S": symplectic,
    "O": orthogonal_odd,
    "O+": orthogonal_plus,
    "O-": orthogonal_minus,
}

_EXCEPTIONAL_BUILDER = {
    "G2": g2,
    "F4": f4,
    "E6": e6,
    "E7": e7,
    "E8": e8,
    "2B2": suzuki,
    "2G2": ree_g2,
    "2F4": ree_f4,
    "3D4": steinberg_3d4,
    "2E6": steinberg_2e6,
}


def parse_group(text: str, sporadic_table: str | None = None) -> SimpleGroupId:
    """Inverse of display_name.  Sporadic names are matched first, so the
    one-letter groups B and M stay reachable."""
    token = text.strip()
    if token in ("Tits", _TITS_NAME):
        return tits()
    if token in load_sporadic_table(sporadic_table):
        return sporadic(token, sporadic_table)
    match = _ALTERNATING_PATTERN.match(token)
    if match:
        return alternating(int(match.group(1)))
    match = _EXCEPTIONAL_PATTERN.match(token)
    if match:
        return _EXCEPTIONAL_BUILDER[match.group(1)](int(match.group(2)))
    match = _CLASSICAL_PATTERN.match(token)
    if match:
        return _CLASSICAL_BUILDER[match.group(1)](int(match.group(2)), int(match.group(3)))
    raise DomainError(f"cannot parse group name {token!r}")


# -- bounded catalog --------------------------------------------------------


def _rank_values(fam: Family, n_limit: int | None = None):
    """In-domain dimension values for a classical family, smallest first."""
    if fam is Family.LINEAR:
        start, step = 2, 1
    elif fam is Family.UNITARY:
        start, step = 3, 1
    elif fam is Family.SYMPLECTIC:
        start, step = 4, 2
    elif fam is Family.ORTHOGONAL_ODD:
        start, step = 7, 2
    else:
        start, step = 8, 2
    n = start
    while n_limit is None or n <= n_limit:
        yield n
        n += step


def _min_q(fam: Family, n: int) -> int:
    """Smallest q in the family's domain at dimension n."""
    if fam is Family.LINEAR and n == 2:
        return 4
    if fam is Family.UNITARY and n == 3:
        return 3
    if fam is Family.SYMPLECTIC and n == 4:
        return 3
    if fam is Family.ORTHOGONAL_ODD:
        return 3
    return 2


def _classical_bound(fam: Family, n: int, q: int) -> tuple[int, int]:
    """(c, value) such that c*|T| > value is the cited lower bound; the
    bound is monotone in q and n, which justifies iteration cutoffs."""
    if fam is Family.LINEAR:
        return 1, q ** (n * n - 2)
    if fam is Family.UNITARY:
        return 1, (q - 1) * q ** (n * n - 3)
    if fam is Family.SYMPLECTIC:
        return 4, q ** (n * (n + 1) // 2)
    return 8, q ** (n * (n - 1) // 2)


_EXCEPTIONAL_BOUND_EXPONENT = {
    Family.G2: 12,
    Family.F4: 20,
    Family.E6: 20,
    Family.E7: 20,
    Family.E8: 20,
    Family.SUZUKI: 4,
    Family.REE_G2: 4,
    Family.REE_F4: 20,
    Family.STEINBERG_3D4: 20,
    Family.STEINBERG_2E6: 20,
}


def _in_domain_q(fam: Family, n: int, q: int) -> bool:
    try:
        parts = prime_power_parts(q)
        if parts is None:
            return False
        if fam in _CLASSICAL_FAMILIES:
            _CLASSICAL_BUILDER[_DISPLAY_PREFIX[fam]](n, q)
        else:
            _EXCEPTIONAL_BUILDER[_DISPLAY_EXCEPTIONAL[fam]](q)
    except DomainError:
        return False
    return True


def _iter_family_raw(fam: Family, max_order: int):
    """Raw (non-canonical) ids in the family with a proven-order lower bound
    <= max_order.  Callers still filter by the exact order."""
    if fam in _CLASSICAL_FAMILIES:
        for n in _rank_values(fam):
            min_q = _min_q(fam, n)
            c, bound = _classical_bound(fam, n, min_q)
            if bound > c * max_order:
                return
            exponent = {
                Family.LINEAR: n * n - 2,
                Family.UNITARY: n * n - 3,
                Family.SYMPLECTIC: n * (n + 1) // 2,
            }.get(fam, n * (n - 1) // 2)
            # One past the root, so the boundary prime power is still tried.
            q_limit = int_nth_root(c * max_order, exponent) + 1
            for q in prime_powers_upto(q_limit):
                if not _in_domain_q(fam, n, q):
                    continue
                yield SimpleGroupId(fam, n=n, p=prime_power_parts(q)[0], f=prime_power_parts(q)[1])
    else:
        exponent = _EXCEPTIONAL_BOUND_EXPONENT[fam]
        q_limit = int_nth_root(max_order, exponent) + 1
        for q in prime_powers_upto(q_limit):
            if not _in_domain_q(fam, 0, q):
                continue
            p, f = prime_power_parts(q)
            yield SimpleGroupId(fam, p=p, f=f)


def enumerate_catalog(
    max_order: int, sporadic_table: str | None = None
) -> list[tuple[SimpleGroupId, GroupFacts]]:
    """Every finite simple group of order <= max_order, once per isomorphism
    class, in nondecreasing order of |T| (ties broken by identifier)."""
    if max_order < 60:
        return []
    found: dict[SimpleGroupId, GroupFacts] = {}

    def _admit(g: SimpleGroupId) -> None:
        if g in found:
            return
        fct = facts(g, sporadic_table)
        if fct.order <= max_order:
            found[g] = fct

    n = 5
    while factorial(n) // 2 <= max_order:
        _admit(alternating(n))
        n += 1
    for name in load_sporadic_table(sporadic_table):
        _admit(tits() if name == _TITS_NAME else sporadic(name, sporadic_table))
    for fam in _LIE_FAMILIES:
        for raw in _iter_family_raw(fam, max_order):
            _admit(_canonicalize(raw))
    return sorted(found.items(), key=lambda item: (item[1].order,) + item[0].sort_key())


# -- the |T| < |Out(T)|^4 scan ----------------------------------------------


@dataclass(frozen=True)
class TailCheck:
    """Boundary-confidence record for one family/axis of the scan grid.

    bounded: every ratio |Out|^4/|T| on the boundary shell is < 1.
    decreasing: the largest boundary ratio is below the largest ratio seen
    at all earlier axis values (None when the shell is the whole family).
    """

    family: Family
    axis: str
    boundary: int
    boundary_ratio: Fraction
    interior_ratio: Fraction | None
    bounded: bool
    decreasing: bool | None

    @property
    def ok(self) -> bool:
        return self.bounded and self.decreasing is not False


@dataclass(frozen=True)
class Out4ScanResult:
    candidates: tuple[SimpleGroupId, ...]
    checks: tuple[TailCheck, ...]
    n_max: int
    q_max: int
    include_sporadic: bool

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def failing_checks(self) -> list[TailCheck]:
        return [check for check in self.checks if not check.ok]


def _axis_checks(fam: Family, axis: str, ratios: dict[int, Fraction]) -> TailCheck | None:
    if not ratios:
        return None
    boundary = max(ratios)
    boundary_ratio = ratios[boundary]
    interior = [ratios[value] for value in ratios if value != boundary]
    interior_ratio = max(interior) if interior else None
    return TailCheck(
        family=fam,
        axis=axis,
        boundary=boundary,
        boundary_ratio=boundary_ratio,
        interior_ratio=interior_ratio,
        bounded=boundary_ratio < 1,
        decreasing=None if interior_ratio is None else boundary_ratio < interior_ratio,
    )


def out4_scan(
    n_max: int,
    q_max: int,
    include_sporadic: bool = True,
    families: frozenset[Family] | None = None,
    sporadic_table: str | None = None,
) -> Out4ScanResult:
    """Scan |T| < |Out(T)|^4 over the bounded grid and collect per-family
    tail checks.  The grid is scanned with raw identifiers so that each
    family's own order formula feeds its tail statistics; candidate ids are
    canonicalized before reporting."""
    # The reference outcome is only claimed for boxes at least as large as
    # (12, 1024); smaller boxes still scan, and the tail checks say whether
    # the bounds carried any evidence.
    _require(n_max >= 5, f"n_max must be >= 5, got {n_max}")
    _require(q_max >= 2, f"q_max must be >= 2, got {q_max}")
    selected = set(Family) if families is None else set(families)

    candidates: dict[SimpleGroupId, int] = {}
    checks: list[TailCheck] = []

    def _ratio(g: SimpleGroupId) -> Fraction:
        t = order(g, sporadic_table)
        o = out_order(g, sporadic_table)
        if t < o**4:
            canonical = _canonicalize(g) if g.family in _CLASSICAL_FAMILIES else g
            candidates[canonical] = order(canonical, sporadic_table)
        return Fraction(o**4, t)

    if Family.ALTERNATING in selected:
        ratios = {n: _ratio(alternating(n)) for n in range(5, n_max + 1)}
        check = _axis_checks(Family.ALTERNATING, "n", ratios)
        if check is not None:
            checks.append(check)
    if include_sporadic:
        for name in load_sporadic_table(sporadic_table):
            g = tits() if name == _TITS_NAME else SimpleGroupId(Family.SPORADIC, name=name)
            if g.family in selected:
                _ratio(g)
    for fam in sorted(_LIE_FAMILIES, key=_FAMILY_INDEX.get):
        if fam not in selected:
            continue
        by_n: dict[int, Fraction] = {}
        by_q: dict[int, Fraction] = {}
        if fam in _CLASSICAL_FAMILIES:
            for n in _rank_values(fam, n_limit=n_max):
                for q in prime_powers_upto(q_max):
                    if not _in_domain_q(fam, n, q):
                        continue
                    p, f = prime_power_parts(q)
                    ratio = _ratio(SimpleGroupId(fam, n=n, p=p, f=f))
                    if n not in by_n or ratio > by_n[n]:
                        by_n[n] = ratio
                    if q not in by_q or ratio > by_q[q]:
                        by_q[q] = ratio
            check = _axis_checks(fam, "n", by_n)
            if check is not None:
                checks.append(check)
        else:
            for q in prime_powers_upto(q_max):
                if not _in_domain_q(fam, 0, q):
                    continue
                p, f = prime_power_parts(q)
                ratio = _ratio(SimpleGroupId(fam, p=p, f=f))
                by_q[q] = ratio
        check = _axis_checks(fam, "q", by_q)
        if check is not None:
            checks.append(check)

    ordered = sorted(candidates, key=lambda g: (candidates[g],) + g.sort_key())
    return Out4ScanResult(
        candidates=tuple(ordered),
        checks=tuple(checks),
        n_max=n_max,
        q_max=q_max,
        include_sporadic=include_sporadic,
    )


def out4_candidates(
    n_max: int,
    q_max: int,
    sporadic: bool = True,
    families: frozenset[Family] | None = None,
    sporadic_table: str | None = None,
) -> list[SimpleGroupId]:
    """Candidates with |T| < |Out(T)|^4; raises TailCheckFailed when any
    boundary check fails, since then the bounds are too small to trust an
    emptiness claim."""
    result = out4_scan(n_max, q_max, sporadic, families, sporadic_table)
    if not result.ok:
        failing = ", ".join(
            f"{check.family.value}/{check.axis}@{check.boundary}" for check in result.failing_checks()
        )
        raise TailCheckFailed(f"tail checks failed at: {failing}", result=result)
    return list(result.candidates)


# -- cited bounds as predicates ---------------------------------------------


def order_lower_bound_holds(g: SimpleGroupId, sporadic_table: str | None = None) -> bool:
    """Strict form of the per-family order lower bound used to cut off the
    scans.  Only defined for Lie-type families."""
    if g.family not in _LIE_FAMILIES:
        raise DomainError(f"no cited lower bound for family {g.family.value}")
    t = order(g, sporadic_table)
    if g.family in _CLASSICAL_FAMILIES:
        c, bound = _classical_bound(g.family, g.n, g.q)
        return c * t > bound
    return t > g.q ** _EXCEPTIONAL_BOUND_EXPONENT[g.family]


def out_order_bound_holds(g: SimpleGroupId, sporadic_table: str | None = None) -> bool:
    """Per-family cap on |Out(T)| in terms of f, as cited in the scan."""
    o, f, n = out_order(g, sporadic_table), g.f, g.n
    fam = g.family
    if fam in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        return o <= 24 * f
    if fam in (Family.LINEAR, Family.UNITARY):
        return o <= 2 * f * max(n, 2)
    if fam in (Family.SYMPLECTIC, Family.ORTHOGONAL_ODD, Family.G2):
        return o <= 2 * f
    if fam in (Family.SUZUKI, Family.REE_G2, Family.REE_F4):
        return o == f
    if fam in _LIE_FAMILIES:
        return o <= 6 * f
    raise DomainError(f"no cited out bound for family {fam.value}")
