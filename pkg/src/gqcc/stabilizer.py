"""Code parameters, unencoded generator matrices and commutation checks."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .gf2poly import ONE, ZERO, LaurentPoly
from .pauli import PauliElement, symplectic_product_poly

__all__ = [
    "CodeParams",
    "PolyMatrix",
    "GrandfatherCode",
    "build_initial_stabilizer",
    "build_initial_subgroups",
    "initial_code",
    "validate_symplectic",
    "alice_restriction",
]


@dataclass(frozen=True)
class CodeParams:
    """``[n,k,l;r,c]``: qubits per frame, info qubits, classical bits, gauge qubits, ebits."""

    n: int
    k: int
    l: int  # noqa: E741
    r: int
    c: int

    def __post_init__(self) -> None:
        for name in ("n", "k", "l", "r", "c"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.a < 0:
            raise ValueError(
                f"a = n-k-l-c-r = {self.a} must be nonnegative "
                f"(n={self.n}, k={self.k}, l={self.l}, r={self.r}, c={self.c})"
            )

    @property
    def a(self) -> int:
        """Ancilla qubits per frame."""
        return self.n - self.k - self.l - self.c - self.r

    @property
    def num_generators(self) -> int:
        """Rows of the global stabilizer, ``2c + a``."""
        return 2 * self.c + self.a

    # 0-based Alice column blocks, in input-frame order
    @property
    def ebit_columns(self) -> range:
        return range(0, self.c)

    @property
    def ancilla_columns(self) -> range:
        return range(self.c, self.c + self.a)

    @property
    def gauge_columns(self) -> range:
        start = self.c + self.a
        return range(start, start + self.r)

    @property
    def classical_columns(self) -> range:
        start = self.c + self.a + self.r
        return range(start, start + self.l)

    @property
    def info_columns(self) -> range:
        return range(self.n - self.k, self.n)

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.l};{self.r},{self.c}]"


@dataclass(frozen=True)
class PolyMatrix:
    """Generator rows of a common width, displayed in ``[Z|X]`` block layout."""

    width: int
    rows: tuple[PauliElement, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if row.width != self.width:
                raise ValueError(f"row width {row.width} != matrix width {self.width}")

    @classmethod
    def from_blocks(
        cls,
        z: Sequence[Sequence[LaurentPoly | str | int]],
        x: Sequence[Sequence[LaurentPoly | str | int]],
    ) -> PolyMatrix:
        """Build from the ``Z`` and ``X`` blocks; entries may be polynomial text."""
        if len(z) != len(x):
            raise ValueError("Z and X blocks need the same number of rows")
        if not z:
            raise ValueError("use PolyMatrix(width) for an empty matrix")
        width = len(z[0])
        rows = [
            PauliElement(width, [_as_poly(e) for e in zr], [_as_poly(e) for e in xr])
            for zr, xr in zip(z, x)
        ]
        return cls(width, tuple(rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i: int) -> PauliElement:
        return self.rows[i]

    def z_block(self) -> list[list[LaurentPoly]]:
        return [list(r.z) for r in self.rows]

    def x_block(self) -> list[list[LaurentPoly]]:
        return [list(r.x) for r in self.rows]

    def stack(self, other: PolyMatrix) -> PolyMatrix:
        if other.width != self.width:
            raise ValueError("cannot stack matrices of different widths")
        return PolyMatrix(self.width, self.rows + other.rows)

    def shift_equivalent(self, other: PolyMatrix) -> bool:
        """Row-by-row equality up to a unit factor ``D^k`` per row."""
        if self.width != other.width or len(self) != len(other):
            return False
        return all(_row_shift_equal(a, b) for a, b in zip(self.rows, other.rows))

    def format(self) -> str:
        """``[ Z | X ]`` block text, one generator per line, padded columns."""
        if not self.rows:
            return f"[ (no rows, width {self.width}) ]"
        cells = [[p.format() for p in r.z] + [p.format() for p in r.x] for r in self.rows]
        widths = [max(len(row[j]) for row in cells) for j in range(2 * self.width)]
        lines = []
        for row in cells:
            left = " ".join(c.rjust(w) for c, w in zip(row[: self.width], widths))
            right = " ".join(c.rjust(w) for c, w in zip(row[self.width :], widths[self.width :]))
            lines.append(f"[ {left} | {right} ]")
        return "\n".join(lines)


def _as_poly(entry: LaurentPoly | str | int) -> LaurentPoly:
    if isinstance(entry, LaurentPoly):
        return entry
    if isinstance(entry, int):
        return ONE if entry % 2 else ZERO
    return LaurentPoly.parse(entry)


def _row_shift_equal(a: PauliElement, b: PauliElement) -> bool:
    if a == b:
        return True
    sa, sb = a.frames(), b.frames()
    if sa is None or sb is None:
        return False
    return a.shift(sb[0] - sa[0]) == b


@dataclass(frozen=True)
class GrandfatherCode:
    """A grandfather code: global stabilizer plus the four Alice-local subgroups.

    ``stabilizer`` has ``c + n`` columns with Bob's ebit halves first; the
    subgroup matrices are ``n`` wide. ``s_e`` holds ``c`` Z-type rows followed
    by their ``c`` X-type partners, likewise ``s_g`` with ``r``.
    """

    params: CodeParams
    stabilizer: PolyMatrix
    s_e: PolyMatrix
    s_i: PolyMatrix
    s_g: PolyMatrix
    s_c: PolyMatrix

    @property
    def active_rows(self) -> tuple[PauliElement, ...]:
        """Generators of the entanglement and isotropic subgroups."""
        return self.s_e.rows + self.s_i.rows

    @property
    def passive_rows(self) -> tuple[PauliElement, ...]:
        """Generators of the isotropic, gauge and classical subgroups."""
        return self.s_i.rows + self.s_g.rows + self.s_c.rows

    @property
    def local_stabilizer(self) -> PolyMatrix:
        return alice_restriction(self.stabilizer, self.params)

    def structure_problems(self) -> list[str]:
        """Violations of the expected commutation structure; empty when sound."""
        p = self.params
        problems = []
        if not validate_symplectic(self.stabilizer):
            problems.append("global stabilizer rows do not commute under all shifts")
        problems.extend(self._layout_problems())
        c, r = p.c, p.r
        for label, m, half in (("S_E", self.s_e, c), ("S_G", self.s_g, r)):
            for i in range(len(m)):
                for j in range(i, len(m)):
                    prod = symplectic_product_poly(m[i], m[j])
                    expect = ONE if j == i + half else ZERO
                    if prod != expect:
                        problems.append(
                            f"{label} rows {i + 1},{j + 1}: product {prod.format()}, "
                            f"expected {expect.format()}"
                        )
        groups = {"S_E": self.s_e, "S_I": self.s_i, "S_G": self.s_g, "S_C": self.s_c}
        for label in ("S_I", "S_C"):
            for i, row in enumerate(groups[label]):
                for other_label, other in groups.items():
                    for j, o in enumerate(other):
                        if other_label == label and j < i:
                            continue
                        prod = symplectic_product_poly(row, o)
                        if prod:
                            problems.append(
                                f"{label} row {i + 1} vs {other_label} row {j + 1}: "
                                f"product {prod.format()}"
                            )
        # S_E against S_G: distinct pairs must commute
        for i, e in enumerate(self.s_e):
            for j, g in enumerate(self.s_g):
                prod = symplectic_product_poly(e, g)
                if prod:
                    problems.append(f"S_E row {i + 1} vs S_G row {j + 1}: product {prod.format()}")
        return problems

    def _layout_problems(self) -> list[str]:
        # Bob keeps the identity blocks; Alice's columns must restate S_E over S_I
        p = self.params
        m = self.stabilizer
        if m.width != p.c + p.n or len(m) != p.num_generators:
            return [
                f"global stabilizer is {len(m)}x{m.width}, expected {p.num_generators}x{p.c + p.n}"
            ]
        problems = []
        for i, row in enumerate(m):
            bob = row.columns(0, p.c)
            expect = _unit_row(p.c, {i % p.c: "z" if i < p.c else "x"}) if i < 2 * p.c else None
            if expect is None:
                expect = PauliElement.identity(p.c)
            if bob != expect:
                problems.append(f"global row {i + 1}: Bob's columns are not the identity block")
        local = alice_restriction(m, p)
        if local.rows != self.s_e.rows + self.s_i.rows:
            problems.append("Alice's part of the global stabilizer differs from S_E stacked on S_I")
        return problems


def build_initial_stabilizer(params: CodeParams) -> PolyMatrix:
    """Unencoded ``(2c+a) x (c+n)`` stabilizer: ebit ZZ and XX rows, then ancilla Z rows."""
    c, a = params.c, params.a
    width = c + params.n
    rows = []
    for kind in ("z", "x"):
        for j in range(c):
            rows.append(_unit_row(width, {j: kind, c + j: kind}))
    for j in range(a):
        rows.append(_unit_row(width, {2 * c + j: "z"}))
    return PolyMatrix(width, tuple(rows))


def build_initial_subgroups(
    params: CodeParams,
) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]:
    """Unencoded ``(S_E0, S_I0, S_G0, S_C0)``, each ``n`` columns wide."""
    n = params.n
    s_e = [_unit_row(n, {q: kind}) for kind in ("z", "x") for q in params.ebit_columns]
    s_i = [_unit_row(n, {q: "z"}) for q in params.ancilla_columns]
    s_g = [_unit_row(n, {q: kind}) for kind in ("z", "x") for q in params.gauge_columns]
    s_c = [_unit_row(n, {q: "z"}) for q in params.classical_columns]
    return tuple(PolyMatrix(n, tuple(rows)) for rows in (s_e, s_i, s_g, s_c))  # type: ignore[return-value]


def initial_code(params: CodeParams) -> GrandfatherCode:
    s_e, s_i, s_g, s_c = build_initial_subgroups(params)
    return GrandfatherCode(params, build_initial_stabilizer(params), s_e, s_i, s_g, s_c)


def _unit_row(width: int, entries: dict[int, str]) -> PauliElement:
    z = [ZERO] * width
    x = [ZERO] * width
    for col, kind in entries.items():
        (z if kind == "z" else x)[col] = ONE
    return PauliElement(width, z, x)


def validate_symplectic(m: PolyMatrix | Iterable[PauliElement]) -> bool:
    """True iff every pair of rows, a row with itself included, commutes under every shift."""
    rows = list(m)
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if symplectic_product_poly(a, b):
                return False
    return True


def alice_restriction(m: PolyMatrix, params: CodeParams) -> PolyMatrix:
    """Drop Bob's ``c`` leading columns."""
    if m.width != params.c + params.n:
        raise ValueError(f"expected width c+n = {params.c + params.n}, got {m.width}")
    c = params.c
    return PolyMatrix(params.n, tuple(r.columns(c, c + params.n) for r in m.rows))
