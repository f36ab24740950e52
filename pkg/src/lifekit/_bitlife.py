"""Bit-parallel B3/S23 stepper.

The whole grid is packed into one Python integer: bit index y*pitch + x,
where pitch = width + 1.  The extra column per row is a guard: shifting the
integer by one bit can only push live bits into guard positions, never into
a neighbouring row's cells, so the eight neighbour images are plain shifts.
Neighbour counts are computed with bit-sliced carry-save adders.

Plane grids keep a dead margin around the live cells and are regrown when
the evolution reaches the border (the pattern can grow by at most one cell
per generation in each direction, so a result that touches the border is
still exact).  Torus grids are fixed-size with wraparound shift images.
"""

from __future__ import annotations

from .core import Cell, Pattern, Plane, Topology, Torus

_DEFAULT_MARGIN = 16


def _pack_rows(cells: frozenset[Cell], x0: int, y0: int, pitch: int) -> int:
    rows: dict[int, int] = {}
    for x, y in cells:
        rows[y - y0] = rows.get(y - y0, 0) | (1 << (x - x0))
    bits = 0
    for ry, row in rows.items():
        bits |= row << (ry * pitch)
    return bits


class BitGrid:
    """Mutable stepping engine; load a pattern, advance, read back."""

    __slots__ = (
        "torus", "width", "height", "pitch", "x0", "y0", "bits",
        "_valid", "_col0", "_colw", "_row0", "_roww", "_border",
    )

    def __init__(self, topology: Topology, pattern: Pattern, margin: int = _DEFAULT_MARGIN):
        if isinstance(topology, Torus):
            self.torus = True
            self.x0, self.y0 = 0, 0
            self._build(topology.width, topology.height)
        else:
            self.torus = False
            box = pattern.bounding_box()
            if box is None:
                self.x0, self.y0 = 0, 0
                self._build(2 + 2 * margin, 2 + 2 * margin)
            else:
                bx0, by0, bx1, by1 = box
                self.x0, self.y0 = bx0 - margin, by0 - margin
                self._build(bx1 - bx0 + 1 + 2 * margin, by1 - by0 + 1 + 2 * margin)
        self.bits = _pack_rows(pattern.cells, self.x0, self.y0, self.pitch)

    def _build(self, width: int, height: int) -> None:
        self.width, self.height = width, height
        pitch = width + 1
        self.pitch = pitch
        rowmask = (1 << width) - 1
        # Sum of 2**(y*pitch) over all rows, via a geometric series.
        rep = ((1 << (pitch * height)) - 1) // ((1 << pitch) - 1)
        self._valid = rowmask * rep
        self._col0 = rep
        self._colw = rep << (width - 1)
        self._row0 = rowmask
        self._roww = rowmask << ((height - 1) * pitch)
        self._border = self._col0 | self._colw | self._row0 | self._roww

    # -- stepping ----------------------------------------------------------

    def advance(self) -> None:
        if self.torus:
            self.bits = self._rule(*self._torus_images())
        else:
            new = self._rule(*self._plane_images())
            self.bits = new
            if new & self._border:
                self._regrow()

    def _plane_images(self):
        g = self.bits
        p = self.pitch
        return (
            g << 1, g >> 1,
            g << p, g >> p,
            g << (p + 1), g >> (p + 1),
            g << (p - 1), g >> (p - 1),
        )

    def _torus_images(self):
        g = self.bits
        p = self.pitch
        w, h = self.width, self.height
        valid = self._valid
        east = ((g << 1) | ((g & self._colw) >> (w - 1))) & valid
        west = ((g >> 1) | ((g & self._col0) << (w - 1))) & valid
        vspan = (h - 1) * p

        def up(x: int) -> int:
            return ((x >> p) | ((x & self._row0) << vspan)) & valid

        def down(x: int) -> int:
            return ((x << p) | ((x & self._roww) >> vspan)) & valid

        return (
            east, west, up(g), down(g),
            up(east), down(east), up(west), down(west),
        )

    def _rule(self, n1, n2, n3, n4, n5, n6, n7, n8) -> int:
        # Pairwise half adders: four 2-bit partial sums.
        t0, u0 = n1 ^ n2, n1 & n2
        t1, u1 = n3 ^ n4, n3 & n4
        t2, u2 = n5 ^ n6, n5 & n6
        t3, u3 = n7 ^ n8, n7 & n8
        # Two 3-bit sums.
        a0 = t0 ^ t1
        carry = t0 & t1
        a1 = u0 ^ u1 ^ carry
        a2 = (u0 & u1) | (carry & (u0 ^ u1))
        b0 = t2 ^ t3
        carry = t2 & t3
        b1 = u2 ^ u3 ^ carry
        b2 = (u2 & u3) | (carry & (u2 ^ u3))
        # Final 4-bit neighbour count s3 s2 s1 s0.
        s0 = a0 ^ b0
        carry = a0 & b0
        s1 = a1 ^ b1 ^ carry
        carry = (a1 & b1) | (carry & (a1 ^ b1))
        s2 = a2 ^ b2 ^ carry
        s3 = (a2 & b2) | (carry & (a2 ^ b2))
        low = s1 & ~s2 & ~s3  # count is 2 or 3
        return ((low & s0) | (low & ~s0 & self.bits)) & self._valid

    def _regrow(self) -> None:
        grow = _DEFAULT_MARGIN
        old_pitch, old_height = self.pitch, self.height
        old_bits = self.bits
        rowmask = (1 << self.width) - 1
        self.x0 -= grow
        self.y0 -= grow
        self._build(self.width + 2 * grow, self.height + 2 * grow)
        bits = 0
        shift = grow * self.pitch + grow
        for ry in range(old_height):
            row = (old_bits >> (ry * old_pitch)) & rowmask
            if row:
                bits |= row << (ry * self.pitch + shift)
        self.bits = bits

    # -- inspection --------------------------------------------------------

    @property
    def population(self) -> int:
        return self.bits.bit_count()

    def to_pattern(self) -> Pattern:
        cells = []
        nbytes = (self.pitch * self.height + 7) // 8
        raw = self.bits.to_bytes(nbytes, "little")
        pitch = self.pitch
        for i, byte in enumerate(raw):
            if not byte:
                continue
            base = i * 8
            while byte:
                low = byte & -byte
                pos = base + low.bit_length() - 1
                y, x = divmod(pos, pitch)
                cells.append((self.x0 + x, self.y0 + y))
                byte ^= low
        return Pattern(frozenset(cells))

    # -- int-level helpers for hot loops ------------------------------------

    def mask_for(self, cells: frozenset[Cell]) -> int:
        """Pack absolute cells into this grid's bit layout."""
        for x, y in cells:
            if not (0 <= x - self.x0 < self.width and 0 <= y - self.y0 < self.height):
                raise ValueError("cells outside grid")
        return _pack_rows(cells, self.x0, self.y0, self.pitch)

    def contains_mask(self, mask: int) -> bool:
        return mask & ~self.bits == 0
