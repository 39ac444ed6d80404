"""Pauli sequences (modulo phase) as pairs of polynomial vectors ``(z | x)``.

Qubit ``q`` in frame ``t`` carries the letter read off the ``D^t`` coefficients
of ``z[q]`` and ``x[q]``: ``(0,0)=I``, ``(0,1)=X``, ``(1,0)=Z``, ``(1,1)=Y``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from .gf2poly import ZERO, LaurentPoly

__all__ = [
    "PauliElement",
    "compose",
    "symplectic_product_poly",
    "weight",
]

_LETTER_BITS = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


class PauliElement:
    """A finitely supported Pauli sequence on ``width`` qubits per frame."""

    __slots__ = ("width", "z", "x", "_hash")

    def __init__(
        self,
        width: int,
        z: Sequence[LaurentPoly] | None = None,
        x: Sequence[LaurentPoly] | None = None,
    ) -> None:
        if width < 0:
            raise ValueError("width must be nonnegative")
        z = tuple(z) if z is not None else (ZERO,) * width
        x = tuple(x) if x is not None else (ZERO,) * width
        if len(z) != width or len(x) != width:
            raise ValueError(f"expected {width} z and x entries, got {len(z)} and {len(x)}")
        self.width = width
        self.z: tuple[LaurentPoly, ...] = z
        self.x: tuple[LaurentPoly, ...] = x
        self._hash = hash((width, z, x))

    @classmethod
    def identity(cls, width: int) -> PauliElement:
        return cls(width)

    @classmethod
    def single(cls, width: int, qubit: int, letter: str, frame: int = 0) -> PauliElement:
        """One non-identity letter on ``qubit`` (1-based) of ``frame``."""
        if not 1 <= qubit <= width:
            raise ValueError(f"qubit {qubit} outside 1..{width}")
        s = ["I"] * width
        s[qubit - 1] = letter
        return cls.from_frames({frame: "".join(s)}, width=width)

    @classmethod
    def from_frames(
        cls,
        frames: Mapping[int, str] | Iterable[tuple[int, str]],
        width: int | None = None,
    ) -> PauliElement:
        """Build an element from per-frame strings over ``IXYZ``.

        >>> PauliElement.from_frames({0: "XIIXX", 1: "XIXIX"}).x[0].format()
        '1+D'
        """
        items = list(frames.items()) if isinstance(frames, Mapping) else list(frames)
        if width is None:
            if not items:
                raise ValueError("width is required when no frames are given")
            width = len(items[0][1])
        seen: set[int] = set()
        z_exps: list[list[int]] = [[] for _ in range(width)]
        x_exps: list[list[int]] = [[] for _ in range(width)]
        for t, s in items:
            if t in seen:
                raise ValueError(f"frame {t} given twice")
            seen.add(t)
            if len(s) != width:
                raise ValueError(f"frame {t}: expected {width} letters, got {len(s)}")
            for q, ch in enumerate(s):
                try:
                    zb, xb = _LETTER_BITS[ch]
                except KeyError:
                    raise ValueError(f"frame {t}: invalid Pauli letter {ch!r}") from None
                if zb:
                    z_exps[q].append(t)
                if xb:
                    x_exps[q].append(t)
        return cls(
            width,
            [LaurentPoly(e) for e in z_exps],
            [LaurentPoly(e) for e in x_exps],
        )

    @classmethod
    def parse(cls, text: str, width: int | None = None, start: int = 0) -> PauliElement:
        """Parse ``"XIIXX XIXIX"`` (frames separated by whitespace, ``|`` or ``,``).

        The first string lands in frame ``start``, or in frame ``k`` when the
        text opens with an ``@k`` token.
        """
        parts = text.replace("|", " ").replace(",", " ").split()
        if parts and parts[0].startswith("@"):
            start = int(parts.pop(0)[1:])
        return cls.from_frames({start + i: p.upper() for i, p in enumerate(parts)}, width=width)

    def is_identity(self) -> bool:
        return not any(self.z) and not any(self.x)

    def frames(self) -> tuple[int, int] | None:
        """Inclusive ``(first, last)`` frame of the support, or ``None`` for identity."""
        exps = [e for p in self.z + self.x for e in p.support]
        if not exps:
            return None
        return min(exps), max(exps)

    def letter(self, frame: int, qubit: int) -> str:
        """Letter at ``qubit`` (1-based) of ``frame``."""
        q = qubit - 1
        return _BITS_LETTER[(self.z[q].coefficient(frame), self.x[q].coefficient(frame))]

    def frame_string(self, frame: int) -> str:
        return "".join(self.letter(frame, q) for q in range(1, self.width + 1))

    def to_frames(self) -> dict[int, str]:
        """Frame strings for every frame inside the support span."""
        span = self.frames()
        if span is None:
            return {}
        return {t: self.frame_string(t) for t in range(span[0], span[1] + 1)}

    def format(self) -> str:
        span = self.frames()
        if span is None:
            return "I" * self.width
        body = " ".join(self.to_frames().values())
        return body if span[0] == 0 else f"@{span[0]} {body}"

    def shift(self, k: int) -> PauliElement:
        """Delay by ``k`` frames (multiply every entry by ``D^k``)."""
        return PauliElement(self.width, [p.shift(k) for p in self.z], [p.shift(k) for p in self.x])

    def pad_left(self, columns: int) -> PauliElement:
        """Prepend ``columns`` identity columns (e.g. Bob's ebit halves)."""
        zeros = (ZERO,) * columns
        return PauliElement(self.width + columns, zeros + self.z, zeros + self.x)

    def columns(self, start: int, stop: int) -> PauliElement:
        """Keep 0-based columns ``start:stop``."""
        return PauliElement(stop - start, self.z[start:stop], self.x[start:stop])

    def __mul__(self, other: PauliElement) -> PauliElement:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliElement):
            return NotImplemented
        return self.width == other.width and self.z == other.z and self.x == other.x

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PauliElement({self.format()!r})"


def _check_widths(a: PauliElement, b: PauliElement) -> None:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")


def compose(a: PauliElement, b: PauliElement) -> PauliElement:
    """Product of two Pauli sequences with the phase dropped."""
    _check_widths(a, b)
    return PauliElement(
        a.width,
        [p + q for p, q in zip(a.z, b.z)],
        [p + q for p, q in zip(a.x, b.x)],
    )


def symplectic_product_poly(a: PauliElement, b: PauliElement) -> LaurentPoly:
    """Shifted symplectic product ``sum_q z_a(1/D) x_b(D) + x_a(1/D) z_b(D)``.

    The ``D^k`` coefficient is 1 exactly when ``b`` anticommutes with ``a``
    delayed by ``k`` frames.
    """
    _check_widths(a, b)
    acc = ZERO
    for za, xa, zb, xb in zip(a.z, a.x, b.z, b.x):
        if za and xb:
            acc = acc + za.reciprocal() * xb
        if xa and zb:
            acc = acc + xa.reciprocal() * zb
    return acc


def weight(a: PauliElement) -> int:
    """Number of (frame, qubit) positions carrying a non-identity letter."""
    return sum(len(z.support | x.support) for z, x in zip(a.z, a.x))
