"""Dense matrices with polynomial entries and quotient-aware predicates."""

from __future__ import annotations

from .poly import Poly, RingError


class MatrixError(ValueError):
    pass


class PolyMatrix:
    """Rectangular matrix of Poly entries in a single ring.

    Entries are exact; congruence checks take an explicit divisor list
    (defaulting to the ring's relations).
    """

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise MatrixError("ragged rows")
            for r in rows:
                for e in r:
                    if not isinstance(e, Poly) or e.ring is not ring:
                        raise MatrixError("entry outside the ambient ring")
        self.ring = ring
        self.rows = rows

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_strings(cls, ring, rows):
        return cls(ring, [[ring.parse(s) for s in row] for row in rows])

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring, nrows, ncols):
        z = ring.zero
        return cls(ring, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def from_blocks(cls, blocks):
        ring = blocks[0][0].ring
        rows = []
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise MatrixError("block heights differ")
            for i in range(h):
                row = []
                for b in brow:
                    row.extend(b.rows[i])
                rows.append(row)
        return cls(ring, rows)

    @classmethod
    def diag_blocks(cls, *blocks):
        ring = blocks[0].ring
        n = sum(b.nrows for b in blocks)
        out = [[ring.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            if b.nrows != b.ncols:
                raise MatrixError("diagonal blocks must be square")
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(ring, out)

    # -- shape ------------------------------------------------------------

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def entries(self):
        for row in self.rows:
            yield from row

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return PolyMatrix(self.ring, [[a - b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix(self.ring, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Poly):
            return PolyMatrix(self.ring, [[a * other for a in r] for r in self.rows])
        if self.ncols != other.nrows:
            raise MatrixError(f"size mismatch {self.shape} * {other.shape}")
        cols = list(zip(*other.rows))
        zero = self.ring.zero
        out = []
        for r in self.rows:
            out_row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(self.ring, out)

    def _same_shape(self, other):
        if self.shape != other.shape or self.ring is not other.ring:
            raise MatrixError("shape or ring mismatch")

    def transpose(self):
        return PolyMatrix(self.ring, list(zip(*self.rows)))

    def map(self, fn):
        return PolyMatrix(self.ring, [[fn(a) for a in r] for r in self.rows])

    def substitute(self, images, target=None):
        mapped = [[a.substitute(images, target=target) for a in r] for r in self.rows]
        ring = mapped[0][0].ring if mapped and mapped[0] else target
        return PolyMatrix(ring, mapped)

    def trace(self):
        if not self.is_square():
            raise MatrixError("trace of a non-square matrix")
        acc = self.ring.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def submatrix(self, keep_rows, keep_cols):
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in keep_cols]
                                      for i in keep_rows])

    def det(self):
        """Cofactor expansion; intended for the small matrices used here."""
        if not self.is_square():
            raise MatrixError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self.ring.one
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            return self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
        acc = self.ring.zero
        cols = list(range(n))
        for j in range(n):
            minor = self.submatrix(range(1, n), cols[:j] + cols[j + 1:])
            term = self.rows[0][j] * minor.det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def adjugate(self):
        n = self.nrows
        if not self.is_square():
            raise MatrixError("adjugate of a non-square matrix")
        cols = list(range(n))
        rows_idx = list(range(n))
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = self.submatrix(rows_idx[:i] + rows_idx[i + 1:],
                                       cols[:j] + cols[j + 1:])
                c = minor.det()
                out[j][i] = c if (i + j) % 2 == 0 else -c
        return PolyMatrix(self.ring, out)

    def inverse_mod(self, divisors=None):
        """Inverse modulo the divisors; det must reduce to a constant unit."""
        d = self.det().normal_form(divisors)
        if not d.is_constant() or d.is_zero():
            raise MatrixError("matrix is not invertible over the quotient (non-constant det)")
        inv = self.ring.domain.inv(d.constant_coefficient())
        return self.adjugate().map(lambda p: p.scale(inv).normal_form(divisors))

    # -- congruence -------------------------------------------------------

    def normal_form(self, divisors=None):
        return self.map(lambda p: p.normal_form(divisors))

    def is_zero_mod(self, divisors=None):
        return all(p.is_zero_mod(divisors) for p in self.entries())

    def eq_mod(self, other, divisors=None):
        self._same_shape(other)
        return (self - other).is_zero_mod(divisors)

    def first_difference(self, other, divisors=None):
        """(i, j, witness) for the first entry where the two differ mod divisors."""
        self._same_shape(other)
        for i in range(self.nrows):
            for j in range(self.ncols):
                delta = self.rows[i][j] - other.rows[i][j]
                if not delta.is_zero_mod(divisors):
                    cleared, _ = delta.clear_laurent()
                    return i, j, cleared.normal_form(divisors)
        return None

    def is_idempotent_mod(self, divisors=None):
        return (self * self - self).is_zero_mod(divisors)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.ring is other.ring
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.ring), self.rows))

    def format_rows(self):
        return [[p.format() for p in row] for row in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols} over {self.ring!r})"


def sym_form_J(ring, n):
    """The standard symplectic form J_n = ((0, I_n), (-I_n, 0))."""
    one, zero = ring.one, ring.zero
    size = 2 * n
    rows = [[zero] * size for _ in range(size)]
    for i in range(n):
        rows[i][n + i] = one
        rows[n + i][i] = -one
    return PolyMatrix(ring, rows)


def sym_form_H_blocks(ring, n):
    """diag(H, ..., H) with n copies of H = ((0,1),(-1,0))."""
    one, zero = ring.one, ring.zero
    size = 2 * n
    rows = [[zero] * size for _ in range(size)]
    for i in range(n):
        rows[2 * i][2 * i + 1] = one
        rows[2 * i + 1][2 * i] = -one
    return PolyMatrix(ring, rows)


def is_symplectic(M, form, divisors=None):
    """True iff M^T * form * M == form modulo the divisors, with witness.

    Returns (ok, witness) where witness is the first nonzero entry of the
    defect when the check fails.
    """
    if not M.is_square() or M.nrows % 2 != 0:
        raise MatrixError("symplectic test needs an even square matrix")
    if M.shape != form.shape:
        raise MatrixError("form size mismatch")
    defect = M.transpose() * form * M - form
    for i in range(defect.nrows):
        for j in range(defect.ncols):
            if not defect.rows[i][j].is_zero_mod(divisors):
                cleared, _ = defect.rows[i][j].clear_laurent()
                return False, cleared.normal_form(divisors)
    return True, None
