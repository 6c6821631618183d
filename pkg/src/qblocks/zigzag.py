"""Truncated zigzag path algebra over an open interval of vertices.

Vertices sit at the integers in [-N, N].  Loops E(i) (idempotents) and Z(i)
live at each vertex, arrows X(i): i -> i+1 and Y(i): i+1 -> i join
neighbours, and the only nonzero products of arrows are X(i)*Y(i) = Z(i+1)
and Y(i)*X(i) = Z(i).  The product u*v composes paths as "first v, then u".
Coefficients are exact rationals; every structure constant is 0 or 1.

build() accepts an optional fault name so a checker can prove it actually
detects broken tables; the only fault wired in swaps the two Z targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

_KINDS = ("E", "X", "Y", "Z")
FAULT_SHIFT = "shift"


@dataclass(frozen=True, order=True)
class BasisId:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    @property
    def source(self) -> int:
        return self.index + 1 if self.kind == "Y" else self.index

    @property
    def target(self) -> int:
        return self.index + 1 if self.kind == "X" else self.index

    def text(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class ZigzagElement:
    window: int
    coeffs: tuple[tuple[BasisId, Fraction], ...] = ()

    def __post_init__(self):
        cleaned = {}
        for basis_id, coeff in self.coeffs:
            coeff = Fraction(coeff)
            if coeff:
                cleaned[basis_id] = cleaned.get(basis_id, Fraction(0)) + coeff
        normalized = tuple(sorted(
            (b, c) for b, c in cleaned.items() if c != 0))
        object.__setattr__(self, "coeffs", normalized)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, basis_id: BasisId) -> Fraction:
        return dict(self.coeffs).get(basis_id, Fraction(0))

    def __add__(self, other: "ZigzagElement") -> "ZigzagElement":
        if self.window != other.window:
            raise ValueError("elements of different algebras")
        return ZigzagElement(self.window, self.coeffs + other.coeffs)

    def __neg__(self) -> "ZigzagElement":
        return ZigzagElement(
            self.window, tuple((b, -c) for b, c in self.coeffs))

    def __sub__(self, other: "ZigzagElement") -> "ZigzagElement":
        return self + (-other)

    def scaled(self, factor) -> "ZigzagElement":
        factor = Fraction(factor)
        return ZigzagElement(
            self.window, tuple((b, c * factor) for b, c in self.coeffs))

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for basis_id, coeff in self.coeffs:
            if coeff == 1:
                parts.append(basis_id.text())
            else:
                parts.append(f"{coeff}*{basis_id.text()}")
        return " + ".join(parts)


def _basis_product(u: BasisId, v: BasisId, fault: str | None) -> BasisId | None:
    """Product u*v of two paths (first v, then u); None encodes zero."""
    if u.source != v.target:
        return None
    if u.kind == "E":
        return v
    if v.kind == "E":
        return u
    if u.kind == "Z" or v.kind == "Z":
        return None
    if u.kind == v.kind:
        return None
    if u.kind == "X":
        shift = 0 if fault == FAULT_SHIFT else 1
    else:
        shift = 1 if fault == FAULT_SHIFT else 0
    return BasisId("Z", u.index + shift)


class ZigzagAlgebra:
    """Handle with the precomputed multiplication table.

    Immutable after construction; all products of basis elements are a
    single basis element or zero.
    """

    def __init__(self, window: int, fault: str | None = None):
        if window < 0:
            raise ValueError("window must be nonnegative")
        if fault not in (None, FAULT_SHIFT):
            raise ValueError(f"unknown fault {fault!r}")
        self.window = window
        self.fault = fault
        loops = [BasisId(kind, i)
                 for i in range(-window, window + 1) for kind in ("E", "Z")]
        arrows = [BasisId(kind, i)
                  for i in range(-window, window) for kind in ("X", "Y")]
        self.basis: tuple[BasisId, ...] = tuple(sorted(loops + arrows))
        self._table: dict[tuple[BasisId, BasisId], BasisId | None] = {
            (u, v): _basis_product(u, v, fault)
            for u in self.basis for v in self.basis
        }

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vertices(self) -> range:
        return range(-self.window, self.window + 1)

    def is_boundary(self, i: int) -> bool:
        self._check_vertex(i)
        return abs(i) == self.window

    def _check_vertex(self, i: int):
        if abs(i) > self.window:
            raise ValueError("vertex outside the window")

    def element(self, *pairs) -> ZigzagElement:
        return ZigzagElement(
            self.window, tuple((b, Fraction(c)) for b, c in pairs))

    def basis_element(self, basis_id: BasisId) -> ZigzagElement:
        if basis_id not in self._table_ids():
            raise ValueError(f"{basis_id.text()} is not in this algebra")
        return ZigzagElement(self.window, ((basis_id, Fraction(1)),))

    def _table_ids(self) -> frozenset:
        return frozenset(self.basis)

    def one(self) -> ZigzagElement:
        return ZigzagElement(self.window, tuple(
            (BasisId("E", i), Fraction(1)) for i in self.vertices()))

    def multiply(self, u: ZigzagElement, v: ZigzagElement) -> ZigzagElement:
        if u.window != self.window or v.window != self.window:
            raise ValueError("elements of a different algebra")
        out: dict[BasisId, Fraction] = {}
        for bu, cu in u.coeffs:
            for bv, cv in v.coeffs:
                product = self._table[(bu, bv)]
                if product is not None:
                    out[product] = out.get(product, Fraction(0)) + cu * cv
        return ZigzagElement(self.window, tuple(out.items()))

    def hom_dim(self, i: int, j: int) -> int:
        """dim of paths from vertex i to vertex j."""
        self._check_vertex(i)
        self._check_vertex(j)
        return sum(1 for u in self.basis
                   if u.source == i and u.target == j)

    def radical_series(self) -> list[tuple[BasisId, ...]]:
        """Powers of the radical, computed by product closure.

        The span of the non-idempotent basis is verified to be a two-sided
        ideal with semisimple quotient; successive powers are closed under
        the table until they vanish.
        """
        radical = tuple(sorted(u for u in self.basis if u.kind != "E"))
        for a in self.basis:
            for r in radical:
                for product in (self._table[(a, r)], self._table[(r, a)]):
                    if product is not None and product not in radical:
                        raise AssertionError("radical candidate is not an ideal")
        series = []
        current = radical
        while current:
            series.append(current)
            nxt = {self._table[(a, b)] for a in radical for b in current}
            nxt.discard(None)
            current = tuple(sorted(nxt))
        return series

    def projective_module_basis(self, i: int) -> tuple[BasisId, ...]:
        self._check_vertex(i)
        return tuple(sorted(u for u in self.basis if u.source == i))

    def projective_submodules(self, i: int) -> list[tuple[BasisId, ...]]:
        """All left submodules of the projective at vertex i, as basis
        subsets.

        Every submodule here is spanned by basis vectors: the loop space at
        each vertex of the module is at most one-dimensional apart from the
        top, and any vector with a nonzero top coefficient generates the
        whole module.
        """
        module = self.projective_module_basis(i)
        out = []
        for size in range(len(module) + 1):
            for subset in combinations(module, size):
                chosen = frozenset(subset)
                closed = all(
                    self._table[(a, u)] is None or self._table[(a, u)] in chosen
                    for a in self.basis for u in subset)
                if closed:
                    out.append(tuple(sorted(subset)))
        return out

    def relation_violations(self) -> list[str]:
        """Check the declared presentation against the stored table."""
        problems = []
        for i in self.vertices():
            e = BasisId("E", i)
            if self._table[(e, e)] != e:
                problems.append(f"E({i})*E({i}) is not E({i})")
        for i in range(-self.window, self.window):
            x, y = BasisId("X", i), BasisId("Y", i)
            expect_xy = BasisId("Z", i + 1)
            expect_yx = BasisId("Z", i)
            got_xy = self._table[(x, y)]
            got_yx = self._table[(y, x)]
            if got_xy != expect_xy:
                got = got_xy.text() if got_xy else "0"
                problems.append(
                    f"{x.text()}*{y.text()} = {got}, expected {expect_xy.text()}")
            if got_yx != expect_yx:
                got = got_yx.text() if got_yx else "0"
                problems.append(
                    f"{y.text()}*{x.text()} = {got}, expected {expect_yx.text()}")
        for u in self.basis:
            for v in self.basis:
                if u.kind == v.kind and u.kind in ("X", "Y"):
                    if self._table[(u, v)] is not None:
                        problems.append(
                            f"{u.text()}*{v.text()} should vanish")
                if u.kind != "E" and v.kind != "E":
                    if u.kind == "Z" or v.kind == "Z":
                        if self._table[(u, v)] is not None:
                            problems.append(
                                f"{u.text()}*{v.text()} should vanish")
        return problems

    def table_lines(self) -> list[str]:
        lines = []
        for u in self.basis:
            for v in self.basis:
                product = self._table[(u, v)]
                value = product.text() if product is not None else "0"
                lines.append(f"{u.text()}*{v.text()} = {value}")
        return lines


def build(window: int, fault: str | None = None) -> ZigzagAlgebra:
    """Construct the algebra on vertices [-window, window]."""
    return ZigzagAlgebra(window, fault)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ChartComparison:
    window: int
    checks: tuple[CheckResult, ...]
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def text_lines(self) -> list[str]:
        lines = []
        for check in self.checks:
            status = "pass" if check.passed else "FAIL"
            suffix = f": {check.detail}" if check.detail else ""
            lines.append(f"{status} {check.name}{suffix}")
        lines.extend(f"note: {note}" for note in self.notes)
        return lines


def compare_with_chart(handle: ZigzagAlgebra, chart) -> ChartComparison:
    """Compare the algebra's numerics with a block chart of the same window.

    Interior Cartan rows, quiver adjacency, and the Z-shift pattern of the
    arrow products are checked independently; boundary rows are excluded
    and noted rather than compared.
    """
    if handle.window != chart.window:
        raise ValueError("window sizes differ")
    window = handle.window

    cartan_bad = []
    for i in range(-window + 1, window):
        for j in range(-window, window + 1):
            algebra_dim = handle.hom_dim(i, j)
            chart_dim = chart.hom_dim(i, j)
            if algebra_dim != chart_dim:
                cartan_bad.append(
                    f"C[{i}][{j}]: algebra {algebra_dim}, chart {chart_dim}")
    cartan = CheckResult("cartan-interior", not cartan_bad, "; ".join(cartan_bad))

    algebra_edges = {(i, i + 1) for i in range(-window, window)}
    chart_edges = {tuple(edge) for edge in chart.edges}
    edge_bad = []
    for edge in sorted(algebra_edges - chart_edges):
        edge_bad.append(f"missing edge {edge}")
    for edge in sorted(chart_edges - algebra_edges):
        edge_bad.append(f"extra edge {edge}")
    edges = CheckResult("quiver-edges", not edge_bad, "; ".join(edge_bad))

    relation_bad = [problem for problem in handle.relation_violations()
                    if "expected" in problem]
    relations = CheckResult(
        "relation-shifts", not relation_bad, "; ".join(relation_bad))

    notes = [f"boundary rows -{window} and {window} excluded from the Cartan check"]
    if window == 0:
        notes.append("window 0: every vertex is boundary, all checks vacuous")
    return ChartComparison(window, (cartan, edges, relations), tuple(notes))
