"""Symmetric functions in the power-sum basis, with exact coefficients.

A PPolynomial is a finite rational linear combination of power-sum
monomials p_lambda, stored sparsely as a map from partition tuples to
nonzero exact coefficients.  The p-basis is the only representation used
anywhere in this package; no basis conversions are performed.

Exactness is a hard requirement: coefficients are ints or
fractions.Fraction, never floats.  Integer coefficients are kept as ints
(Python guarantees hash(n) == hash(Fraction(n)), so mixed maps compare
and hash soundly); this is an optimization, not a semantic change.

Canonical text serialization, used for hashing and reports: one term per
line, "num/den : part,part,...", with terms ordered by degree ascending
and then reverse-lexicographically on parts (larger first part wins).
The zero polynomial serializes to the empty string.  Round-tripping is
bit-exact.
"""

from fractions import Fraction
from types import MappingProxyType

from .partitions import is_partition, merge_parts, z_of


def _as_exact(c):
    """Validate and normalize a coefficient: int stays int, Fraction with
    unit denominator collapses to int, anything inexact is rejected."""
    if isinstance(c, bool):
        raise TypeError("bool is not a valid coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _term_sort_key(parts):
    # degree ascending, then reverse-lex on parts
    return (sum(parts), tuple(-p for p in parts))


class PPolynomial:
    """Immutable sparse polynomial in the power-sum basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for parts, c in dict(terms).items():
                if not is_partition(parts):
                    raise ValueError(f"invalid partition key: {parts!r}")
                c = _as_exact(c)
                if c != 0:
                    clean[parts] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PPolynomial is immutable")

    @property
    def terms(self):
        """Read-only view of the term map."""
        return MappingProxyType(self._terms)

    def coefficient(self, parts):
        """Coefficient of p_parts, 0 if absent."""
        return self._terms.get(tuple(parts), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, PPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, PPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for parts, c in other._terms.items():
            s = out.get(parts, 0) + c
            if s:
                out[parts] = s
            else:
                out.pop(parts, None)
        return _raw(out)

    def __neg__(self):
        return _raw({parts: -c for parts, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Scalar multiple by an exact rational."""
        c = _as_exact(c)
        if c == 0:
            return PPolynomial()
        out = {}
        for parts, v in self._terms.items():
            prod = v * c
            if isinstance(prod, Fraction):
                prod = _as_exact(prod)
            out[parts] = prod
        return _raw(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, PPolynomial):
            return NotImplemented
        out = {}
        for la, ca in self._terms.items():
            for lb, cb in other._terms.items():
                key = merge_parts(la, lb)
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return _raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def partial_derivative(self, j):
        """Formal partial derivative with respect to the indeterminate p_j."""
        if not isinstance(j, int) or j < 1:
            raise ValueError("j must be a positive integer")
        out = {}
        for parts, c in self._terms.items():
            m = parts.count(j)
            if m == 0:
                continue
            reduced = list(parts)
            reduced.remove(j)
            key = tuple(reduced)
            s = out.get(key, 0) + m * c
            if s:
                out[key] = s
            else:
                del out[key]
        return _raw(out)

    def scalar_product(self, other):
        """Hall scalar product: <p_lam, p_mu> = z_lam [lam == mu]."""
        if not isinstance(other, PPolynomial):
            raise TypeError("scalar_product expects a PPolynomial")
        a, b = self._terms, other._terms
        if len(b) < len(a):
            a, b = b, a
        total = Fraction(0)
        for parts, c in a.items():
            d = b.get(parts)
            if d is not None:
                total += Fraction(c) * Fraction(d) * z_of(parts)
        return _as_exact(total)

    def degree(self):
        """Largest part-sum over terms; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(parts) for parts in self._terms)

    def is_homogeneous(self, n=None):
        """True iff every key partition has the same sum (n if given).

        The zero polynomial is vacuously homogeneous of every degree.
        """
        degrees = {sum(parts) for parts in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return n is None or degrees == {n}

    def sorted_terms(self):
        """Terms in canonical order: degree ascending, reverse-lex parts."""
        return sorted(self._terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def serialize(self) -> str:
        lines = []
        for parts, c in self.sorted_terms():
            f = Fraction(c)
            lines.append(f"{f.numerator}/{f.denominator} : {','.join(map(str, parts))}".rstrip())
        return "\n".join(lines)

    @classmethod
    def deserialize(cls, text: str) -> "PPolynomial":
        terms = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            try:
                coeff_s, _, parts_s = line.partition(":")
                num_s, den_s = coeff_s.strip().split("/")
                c = Fraction(int(num_s), int(den_s))
                parts_s = parts_s.strip()
                parts = tuple(int(p) for p in parts_s.split(",")) if parts_s else ()
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"malformed PPolynomial line: {raw!r}") from exc
            if not is_partition(parts):
                raise ValueError(f"malformed partition in line: {raw!r}")
            if parts in terms:
                raise ValueError(f"duplicate partition key: {parts!r}")
            if c != 0:
                terms[parts] = c
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "PPolynomial(0)"
        bits = []
        for parts, c in self.sorted_terms():
            label = "p()" if not parts else "p" + str(tuple(parts)).replace(" ", "")
            bits.append(f"{c}*{label}")
        return "PPolynomial(" + " + ".join(bits) + ")"


def _raw(clean_terms) -> PPolynomial:
    # Internal constructor bypassing validation; callers guarantee canonical
    # keys and nonzero exact coefficients.
    poly = PPolynomial.__new__(PPolynomial)
    object.__setattr__(poly, "_terms", clean_terms)
    return poly


ZERO = PPolynomial()
ONE = PPolynomial({(): 1})


def p_of_partition(parts) -> PPolynomial:
    """The monomial 1 * p_parts.  The empty partition gives the unit."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a valid partition: {parts!r}")
    return _raw({parts: 1})


def add(a: PPolynomial, b: PPolynomial) -> PPolynomial:
    return a + b


def scale(a: PPolynomial, c) -> PPolynomial:
    return a.scale(c if isinstance(c, (int, Fraction)) else Fraction(c))


def multiply(a: PPolynomial, b: PPolynomial) -> PPolynomial:
    return a * b


def partial_derivative(x: PPolynomial, j: int) -> PPolynomial:
    return x.partial_derivative(j)


def scalar_product(a: PPolynomial, b: PPolynomial):
    return a.scalar_product(b)
