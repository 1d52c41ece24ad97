"""Exact scalars and dense linear algebra over Q and odd prime fields.

Field elements are stored raw (``Fraction`` for Q, ``int`` in ``[0, p)`` for
F_p); the owning :class:`Field` object supplies the arithmetic.  :class:`Scalar`
wraps a raw value together with its field for use at API boundaries.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class FieldMismatch(ValueError):
    pass


class Field:
    """Common interface of :data:`QQ` and :class:`PrimeField`."""

    tag: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def __call__(self, x):
        return self.convert(x)

    def __repr__(self):
        return self.tag


class RationalField(Field):
    tag = "rational"

    def convert(self, x) -> Fraction:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"cannot convert {x.field} element to {self}")
            return x.value
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, float):
            raise TypeError("floating point input is not exact")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


QQ = RationalField()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    """F_p for a prime p >= 5."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 5:
            raise ValueError(f"characteristic {p} excluded: need p >= 5")
        self.p = p
        self.tag = f"fp:{p}"

    def convert(self, x) -> int:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"cannot convert {x.field} element to {self}")
            return x.value
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, float):
            raise TypeError("floating point input is not exact")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def fmt(self, a) -> str:
        return str(a)

    def signed(self, a) -> int:
        """Representative in (-p/2, p/2]."""
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(tag: str) -> Field:
    """``"rational"`` or ``"fp:<p>"``."""
    tag = tag.strip()
    if tag == "rational":
        return QQ
    if tag.startswith("fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r}")


class Scalar:
    """A field element that knows its field.

    Mixing fields in arithmetic raises :class:`FieldMismatch`.  Plain ints
    and Fractions are coerced into the scalar's field.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field: Field):
        self.field = field
        self.value = field.convert(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.add(self.value, o), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.sub(self.value, o), self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.sub(o, self.value), self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.mul(self.value, o), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.div(self.value, o), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field.div(o, self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __pow__(self, k: int):
        if k < 0:
            return Scalar(self.field.inv(self.value), self.field) ** (-k)
        r = self.field.one()
        for _ in range(k):
            r = self.field.mul(r, self.value)
        return Scalar(r, self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.convert(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self.field.fmt(self.value)}, {self.field})"

    def __str__(self):
        return self.field.fmt(self.value)


class Matrix:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("field", "rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable], field: Field, cols: int | None = None):
        conv = field.convert
        e = tuple(tuple(conv(x) for x in row) for row in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        for i, row in enumerate(e):
            if len(row) != cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {cols}")
        self.field = field
        self.rows = len(e)
        self.cols = cols
        self._e = e

    @classmethod
    def _raw(cls, e, field, cols):
        m = cls.__new__(cls)
        m.field = field
        m.rows = len(e)
        m.cols = cols
        m._e = e
        return m

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        z = field.zero()
        return cls._raw(tuple((z,) * cols for _ in range(rows)), field, cols)

    @classmethod
    def diagonal(cls, diag: Sequence, field: Field) -> "Matrix":
        n = len(diag)
        z = field.zero()
        d = [field.convert(x) for x in diag]
        return cls._raw(tuple(tuple(d[i] if i == j else z for j in range(n)) for i in range(n)), field, n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return self._e

    def row(self, i):
        return self._e[i]

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def scalar(self, i, j) -> Scalar:
        return Scalar(self._e[i][j], self.field)

    def tolist(self):
        return [list(r) for r in self._e]

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._e == other._e

    def __hash__(self):
        return hash((self.field, self._e))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.field.add
        return Matrix._raw(
            tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self._e, other._e)),
            self.field,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.convert(c)
        return Matrix._raw(tuple(tuple(F.mul(c, a) for a in r) for r in self._e), F, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = list(zip(*other._e)) if other.rows else [()] * other.cols
        if isinstance(F, PrimeField):
            p = F.p
            e = tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self._e)
        else:
            e = tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self._e)
        return Matrix._raw(e, F, other.cols)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product on raw coordinates."""
        F = self.field
        v = [F.convert(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        if isinstance(F, PrimeField):
            return tuple(sum(a * b for a, b in zip(r, v)) % F.p for r in self._e)
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._e)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._e)) if self.rows else (), self.field, self.rows)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self._e == tuple(zip(*self._e))

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        F = self.field
        aug = Matrix._raw(
            tuple(r + Matrix.identity(n, F)._e[i] for i, r in enumerate(self._e)), F, 2 * n
        )
        red, pivots = rref(aug)
        if tuple(pivots[:n]) != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(tuple(r[n:] for r in red[:n]), F, n)

    def inverse_transpose(self) -> "Matrix":
        return self.inverse().transpose()

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        r = Matrix.identity(self.rows, self.field)
        for _ in range(k):
            r = r @ self
        return r

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in r) for r in self._e)
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"

    # --- file format -------------------------------------------------

    def to_document(self) -> dict:
        return {
            "field": self.field.tag,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[_fmt_entry(x) for x in r] for r in self._e],
        }

    @classmethod
    def from_document(cls, doc: dict, field: Field | None = None) -> "Matrix":
        """Build from the ``{field, rows, cols, entries}`` document.

        ``field`` overrides the document's own tag (e.g. reduce a rational
        matrix mod p).
        """
        for key in ("field", "rows", "cols", "entries"):
            if key not in doc:
                raise MatrixFormatError(f"missing field {key!r}")
        F = field if field is not None else parse_field(str(doc["field"]))
        rows, cols = int(doc["rows"]), int(doc["cols"])
        entries = doc["entries"]
        if len(entries) != rows:
            raise MatrixFormatError(f"expected {rows} rows, found {len(entries)}")
        out = []
        for i, r in enumerate(entries):
            if len(r) != cols:
                raise MatrixFormatError(f"row {i}: expected {cols} entries, found {len(r)}")
            row = []
            for j, s in enumerate(r):
                try:
                    row.append(F.convert(Fraction(str(s).strip())))
                except (ValueError, ZeroDivisionError) as exc:
                    raise MatrixFormatError(f"row {i}, column {j}: cannot parse {s!r} ({exc})") from None
            out.append(tuple(row))
        return cls._raw(tuple(out), F, cols)

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=1)

    @classmethod
    def loads(cls, text: str, field: Field | None = None) -> "Matrix":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"not a matrix document: {exc}") from None
        return cls.from_document(doc, field)


class MatrixFormatError(ValueError):
    pass


def _fmt_entry(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


# --- elimination -------------------------------------------------------


def rref(m: Matrix, col_order: Sequence[int] | None = None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` lists the nonzero rows (raw
    tuples) and ``pivots`` their pivot columns.  ``col_order`` changes the
    order in which columns are scanned for pivots; the result then is the
    echelon form with respect to that column order.
    """
    F = m.field
    A = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    order = range(ncols) if col_order is None else col_order
    pivots = []
    r = 0
    prime = isinstance(F, PrimeField)
    p = F.p if prime else None
    for c in order:
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        if prime:
            A[r] = [x * inv % p for x in A[r]]
        else:
            A[r] = [x * inv for x in A[r]]
        pr = A[r]
        for i in range(nrows):
            if i != r:
                f = A[i][c]
                if f != 0:
                    if prime:
                        A[i] = [(x - f * y) % p for x, y in zip(A[i], pr)]
                    else:
                        A[i] = [x - f * y for x, y in zip(A[i], pr)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in A[:r]], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def det(m: Matrix) -> Scalar:
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    F = m.field
    A = [list(r) for r in m.entries]
    n = m.rows
    d = F.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if not F.is_zero(A[i][c])), None)
        if piv is None:
            return Scalar(F.zero(), F)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            f = F.mul(A[i][c], inv)
            if not F.is_zero(f):
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    return Scalar(d, F)


class Subspace:
    """Subspace of F^n held in canonical reduced echelon form.

    Two subspaces are equal iff their canonical bases are identical.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, vectors: Iterable[Sequence], ambient: int, field: Field):
        vecs = [tuple(field.convert(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        if vecs:
            rows, piv = rref(Matrix._raw(tuple(vecs), field, ambient))
        else:
            rows, piv = [], []
        self.field = field
        self.ambient = ambient
        self.basis = tuple(rows)
        self.pivots = tuple(piv)

    @classmethod
    def full(cls, n: int, field: Field) -> "Subspace":
        return cls(Matrix.identity(n, field).entries, n, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __contains__(self, vec) -> bool:
        F = self.field
        v = [F.convert(x) for x in vec]
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if not F.is_zero(f):
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return all(F.is_zero(x) for x in v)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ambient != other.ambient:
            raise ValueError(f"ambient dimensions differ: {self.ambient} vs {other.ambient}")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.basis + other.basis, self.ambient, self.field)

    def annihilator(self) -> "Subspace":
        """Annihilator under the standard dot pairing."""
        if not self.basis:
            return Subspace.full(self.ambient, self.field)
        return kernel_basis(Matrix._raw(self.basis, self.field, self.ambient))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field})"


def kernel_basis(m: Matrix) -> Subspace:
    """Right kernel ``{x : m x = 0}`` as a canonical subspace."""
    F = m.field
    rows, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    vecs = []
    for fc in free:
        v = [F.zero()] * m.cols
        v[fc] = F.one()
        for row, pc in zip(rows, pivots):
            v[pc] = F.neg(row[fc])
        vecs.append(v)
    return Subspace(vecs, m.cols, F)


class SubspaceOps(NamedTuple):
    intersection: Subspace
    sum: Subspace
    equal: bool


def subspace_ops(a: Subspace, b: Subspace) -> SubspaceOps:
    a._check(b)
    return SubspaceOps(a.intersection(b), a.sum(b), a == b)


# --- random sampling -----------------------------------------------------


def random_vector(n: int, field: Field, rng, nonzero: bool = False, bound: int = 9) -> tuple:
    """Uniform over F_p, or small integers in [-bound, bound] over Q."""
    while True:
        if isinstance(field, PrimeField):
            v = tuple(rng.randrange(field.p) for _ in range(n))
        else:
            v = tuple(field.convert(rng.randint(-bound, bound)) for _ in range(n))
        if not nonzero or any(not field.is_zero(x) for x in v):
            return v


def random_matrix(rows: int, cols: int, field: Field, rng, bound: int = 9) -> Matrix:
    return Matrix([random_vector(cols, field, rng, bound=bound) for _ in range(rows)], field)


def random_sl(n: int, field: Field, rng, shears: tuple[int, int] = (30, 60), bound: int = 3) -> Matrix:
    """Product of random elementary shears I + c·E_ij (i != j); determinant 1."""
    F = field
    A = [list(r) for r in Matrix.identity(n, F).entries]
    for _ in range(rng.randint(*shears)):
        i, j = rng.sample(range(n), 2)
        if isinstance(F, PrimeField):
            c = rng.randrange(1, F.p)
        else:
            c = F.convert(rng.choice([k for k in range(-bound, bound + 1) if k]))
        A[i] = [F.add(x, F.mul(c, y)) for x, y in zip(A[i], A[j])]
    return Matrix(A, F)


def random_invertible(n: int, field: Field, rng, bound: int = 9) -> Matrix:
    while True:
        m = random_matrix(n, n, field, rng, bound)
        if not det(m).is_zero():
            return m
