"""Finite pseudo BL-algebras given by operation tables.

Elements are the indices ``0..n-1``.  An algebra carries five ``n x n``
tables (meet, join, prod, arrow, sarrow) where ``table[x][y]`` is the result
of ``x op y``, plus the indices of the constants 0 and 1.  ``arrow`` is the
residuum with ``x*y <= z  iff  x <= y -> z`` and ``sarrow`` the one with
``x*y <= z  iff  y <= x ~> z``.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

TABLE_NAMES = ("meet", "join", "prod", "arrow", "sarrow")
DEFAULT_FILTER_CAP = 16

Table = tuple[tuple[int, ...], ...]
CrispSubset = frozenset


class AlgebraError(ValueError):
    pass


class MalformedTables(AlgebraError):
    pass


class InvalidAlgebra(AlgebraError):
    pass


class SizeTooSmall(AlgebraError):
    pass


class CarrierTooLarge(AlgebraError):
    pass


def _freeze(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class FinitePseudoBL:
    meet: Table
    join: Table
    prod: Table
    arrow: Table
    sarrow: Table
    zero: int
    one: int
    names: tuple[str, ...] | None = field(default=None, compare=False)
    descriptor: str = field(default="table", compare=False)

    def __post_init__(self):
        for name in TABLE_NAMES:
            object.__setattr__(self, name, _freeze(getattr(self, name)))
        n = len(self.meet)
        if n < 2:
            raise MalformedTables("carrier needs at least two elements")
        for name in TABLE_NAMES:
            table = getattr(self, name)
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedTables(f"{name} table is not {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise MalformedTables(f"{name} table has an out-of-range entry")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise MalformedTables("constant index out of range")
        if self.zero == self.one:
            raise MalformedTables("zero and one must differ")
        if self.names is not None and len(self.names) != n:
            raise MalformedTables("wrong number of element names")

    @property
    def n(self) -> int:
        return len(self.meet)

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def arrows_coincide(self) -> bool:
        return self.arrow == self.sarrow

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def with_entry(self, table: str, x: int, y: int, value: int) -> "FinitePseudoBL":
        """Copy of the algebra with one table entry replaced."""
        rows = [list(r) for r in getattr(self, table)]
        rows[x][y] = value
        kwargs = {t: getattr(self, t) for t in TABLE_NAMES}
        kwargs[table] = rows
        return FinitePseudoBL(zero=self.zero, one=self.one, names=self.names,
                              descriptor=f"{self.descriptor}[{table}({x},{y})={value}]", **kwargs)


def leq_elem(alg: FinitePseudoBL, x: int, y: int) -> bool:
    return alg.leq(x, y)


@dataclass
class ValidationReport:
    failures: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def failed_ids(self) -> list[str]:
        return [axiom for axiom, _ in self.failures]


def _check(report: ValidationReport, axiom: str, arity: int, n: int, law) -> None:
    # product() yields tuples in lexicographic order, so the first hit is the smallest witness
    for args in itertools.product(range(n), repeat=arity):
        if not law(*args):
            report.failures.append((axiom, args))
            return


def validate(alg: FinitePseudoBL, a2_literature: bool = True) -> ValidationReport:
    """Check the lattice, monoid and pseudo BL axioms exhaustively.

    ``a2_literature`` selects the divisibility law ``x^y = (x->y)*x = x*(x~>y)``;
    with ``a2_literature=False`` the first equation is read as
    ``x^y = (x->y)->x`` instead.
    """
    n = alg.n
    m, j, p, r, s = alg.meet, alg.join, alg.prod, alg.arrow, alg.sarrow
    o, z = alg.one, alg.zero
    le = alg.leq
    rep = ValidationReport()

    _check(rep, "meet-commutative", 2, n, lambda x, y: m[x][y] == m[y][x])
    _check(rep, "join-commutative", 2, n, lambda x, y: j[x][y] == j[y][x])
    _check(rep, "meet-associative", 3, n, lambda x, y, w: m[m[x][y]][w] == m[x][m[y][w]])
    _check(rep, "join-associative", 3, n, lambda x, y, w: j[j[x][y]][w] == j[x][j[y][w]])
    _check(rep, "absorption", 2, n, lambda x, y: m[x][j[x][y]] == x and j[x][m[x][y]] == x)
    _check(rep, "meet-idempotent", 1, n, lambda x: m[x][x] == x)
    _check(rep, "join-idempotent", 1, n, lambda x: j[x][x] == x)
    _check(rep, "bounded", 1, n, lambda x: m[x][z] == z and j[x][o] == o)
    _check(rep, "prod-associative", 3, n, lambda x, y, w: p[p[x][y]][w] == p[x][p[y][w]])
    _check(rep, "prod-unit", 1, n, lambda x: p[x][o] == x and p[o][x] == x)
    _check(rep, "a1", 3, n,
           lambda x, y, w: le(p[x][y], w) == le(x, r[y][w]) == le(y, s[x][w]))
    if a2_literature:
        _check(rep, "a2", 2, n, lambda x, y: m[x][y] == p[r[x][y]][x] == p[x][s[x][y]])
    else:
        _check(rep, "a2", 2, n, lambda x, y: m[x][y] == r[r[x][y]][x] == p[x][s[x][y]])
    _check(rep, "a3", 2, n, lambda x, y: j[r[x][y]][r[y][x]] == o == j[s[x][y]][s[y][x]])
    return rep


def check_derived_properties(alg: FinitePseudoBL, a2_literature: bool = True) -> ValidationReport:
    """Exhaustively check the ten standard consequences of the axioms."""
    if not validate(alg, a2_literature):
        raise InvalidAlgebra("algebra does not satisfy the pseudo BL axioms")
    n = alg.n
    p, r, s = alg.prod, alg.arrow, alg.sarrow
    o, z = alg.one, alg.zero
    le = alg.leq
    rep = ValidationReport()
    _check(rep, "1", 3, n, lambda x, y, w: r[p[x][y]][w] == r[x][r[y][w]])
    _check(rep, "2", 3, n, lambda x, y, w: s[p[y][x]][w] == s[x][s[y][w]])
    _check(rep, "3", 2, n, lambda x, y: le(x, y) == (r[x][y] == o) == (s[x][y] == o))
    _check(rep, "4", 2, n, lambda x, y: le(s[s[x][y]][x], r[s[x][y]][s[s[x][y]][y]]))
    _check(rep, "5", 3, n, lambda x, y, w: not le(x, y) or le(p[x][w], p[y][w]))
    _check(rep, "6", 3, n, lambda x, y, w: not le(x, y) or le(p[w][x], p[w][y]))
    _check(rep, "7", 2, n, lambda x, y: le(p[x][y], x) and le(p[x][y], y))
    _check(rep, "8", 1, n, lambda x: p[x][z] == z == p[z][x])
    _check(rep, "9", 1, n, lambda x: r[o][x] == x == s[o][x])
    _check(rep, "10", 2, n, lambda x, y: le(y, r[x][y]))
    return rep


# -- generators ---------------------------------------------------------------

def _chain(n: int, prod, arrow, descriptor: str) -> FinitePseudoBL:
    if n < 2:
        raise SizeTooSmall("a chain needs at least two elements")
    idx = range(n)
    meet = [[min(x, y) for y in idx] for x in idx]
    join = [[max(x, y) for y in idx] for x in idx]
    pt = [[prod(x, y) for y in idx] for x in idx]
    at = [[arrow(x, y) for y in idx] for x in idx]
    return FinitePseudoBL(meet, join, pt, at, at, zero=0, one=n - 1, descriptor=descriptor)


def godel_chain(n: int) -> FinitePseudoBL:
    """The n-element Goedel chain: product is min, x -> y is 1 if x <= y else y."""
    top = n - 1
    return _chain(n, min, lambda x, y: top if x <= y else y, f"godel:{n}")


def lukasiewicz_chain(n: int) -> FinitePseudoBL:
    """The n-element Lukasiewicz chain on {0, 1/(n-1), ..., 1}."""
    top = n - 1
    return _chain(n, lambda x, y: max(0, x + y - top), lambda x, y: min(top, top - x + y),
                  f"lukasiewicz:{n}")


def direct_product(a: FinitePseudoBL, b: FinitePseudoBL) -> FinitePseudoBL:
    """Componentwise product; the pair (i, j) gets index ``i * b.n + j``."""
    pairs = [(i, k) for i in a.elements for k in b.elements]

    def table(name: str):
        ta, tb = getattr(a, name), getattr(b, name)
        return [[ta[x1][y1] * b.n + tb[x2][y2] for (y1, y2) in pairs] for (x1, x2) in pairs]

    names = tuple(f"({a.name(i)},{b.name(k)})" for i, k in pairs)
    return FinitePseudoBL(*(table(t) for t in TABLE_NAMES),
                          zero=a.zero * b.n + b.zero, one=a.one * b.n + b.one, names=names,
                          descriptor=f"{a.descriptor}*{b.descriptor}")


# -- crisp filters ------------------------------------------------------------

def mask(subset: Iterable[int]) -> int:
    return sum(1 << x for x in set(subset))


def from_mask(bits: int, n: int) -> CrispSubset:
    return frozenset(x for x in range(n) if bits >> x & 1)


def is_filter(alg: FinitePseudoBL, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s:
        return False
    for x in s:
        for y in s:
            if alg.prod[x][y] not in s:
                return False
        for y in alg.elements:
            if y not in s and alg.leq(x, y):
                return False
    return True


def _implies_pairs(alg: FinitePseudoBL, s: frozenset, premise, conclusion) -> bool:
    for x in alg.elements:
        for y in alg.elements:
            if premise(x, y) in s and conclusion(x, y) not in s:
                return False
    return True


def is_implicative_filter(alg: FinitePseudoBL, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not is_filter(alg, s):
        return False
    r, t = alg.arrow, alg.sarrow
    return (_implies_pairs(alg, s, lambda x, y: t[r[x][y]][x], lambda x, y: x)
            and _implies_pairs(alg, s, lambda x, y: r[t[x][y]][x], lambda x, y: x))


def is_mv_filter(alg: FinitePseudoBL, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not is_filter(alg, s):
        return False
    r, t = alg.arrow, alg.sarrow
    return (_implies_pairs(alg, s, lambda x, y: r[x][y], lambda x, y: r[t[r[y][x]][x]][y])
            and _implies_pairs(alg, s, lambda x, y: t[x][y], lambda x, y: t[r[t[y][x]][x]][y]))


def is_g_filter(alg: FinitePseudoBL, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not is_filter(alg, s):
        return False
    r, t = alg.arrow, alg.sarrow
    return (_implies_pairs(alg, s, lambda x, y: r[x][r[x][y]], lambda x, y: r[x][y])
            and _implies_pairs(alg, s, lambda x, y: t[x][t[x][y]], lambda x, y: t[x][y]))


def enumerate_filters(alg: FinitePseudoBL, cap: int = DEFAULT_FILTER_CAP) -> list[CrispSubset]:
    """All filters, by brute force over subsets containing 1, in ascending bitmask order."""
    n = alg.n
    if n > cap:
        raise CarrierTooLarge(f"carrier of size {n} exceeds the enumeration cap {cap}")
    top = 1 << alg.one
    found = []
    for bits in range(1 << n):
        if bits & top:
            s = from_mask(bits, n)
            if is_filter(alg, s):
                found.append(s)
    return found


# -- text format --------------------------------------------------------------

def dumps(alg: FinitePseudoBL) -> str:
    out = io.StringIO()
    dump(alg, out)
    return out.getvalue()


def dump(alg: FinitePseudoBL, fp: TextIO) -> None:
    fp.write(f"n {alg.n}\n")
    fp.write(f"zero {alg.zero} one {alg.one}\n")
    for name in TABLE_NAMES:
        fp.write(f"{name}\n")
        for row in getattr(alg, name):
            fp.write(" ".join(str(v) for v in row) + "\n")


def loads(text: str, descriptor: str = "table") -> FinitePseudoBL:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    try:
        if lines[0][0] != "n" or len(lines[0]) != 2:
            raise MalformedTables("first line must be 'n <size>'")
        n = int(lines[0][1])
        head = lines[1]
        if len(head) != 4 or head[0] != "zero" or head[2] != "one":
            raise MalformedTables("second line must be 'zero <idx> one <idx>'")
        zero, one = int(head[1]), int(head[3])
        tables = {}
        pos = 2
        for name in TABLE_NAMES:
            if lines[pos] != [name]:
                raise MalformedTables(f"expected block header {name!r}, got {' '.join(lines[pos])!r}")
            tables[name] = [[int(v) for v in row] for row in lines[pos + 1:pos + 1 + n]]
            if len(tables[name]) != n:
                raise MalformedTables(f"{name} block is truncated")
            pos += n + 1
        if pos != len(lines):
            raise MalformedTables("trailing content after the sarrow block")
    except IndexError:
        raise MalformedTables("algebra file is truncated") from None
    except ValueError as exc:
        if isinstance(exc, MalformedTables):
            raise
        raise MalformedTables(str(exc)) from None
    return FinitePseudoBL(**tables, zero=zero, one=one, descriptor=descriptor)


def load(fp: TextIO, descriptor: str = "table") -> FinitePseudoBL:
    return loads(fp.read(), descriptor)
