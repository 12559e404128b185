"""Finite Puiseux polynomials over the rationals with the t-adic valuation.

Field elements are represented by finite sums ``c * t**q`` with rational
exponents ``q`` and rational coefficients ``c``.  Infinite series are out of
scope: callers enter truncations and guarantee that the truncation order
exceeds every valuation in play.  The valuation of the zero polynomial is
``math.inf``, the only non-Fraction value that ever appears.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd, inf

INF = inf
_ZERO = Fraction(0)


class PuiseuxParseError(ValueError):
    """Text does not describe a Puiseux polynomial."""


class PuiseuxPoly:
    """Immutable finite Puiseux polynomial.

    Terms are kept as a sorted tuple of ``(exponent, coefficient)`` pairs
    with nonzero coefficients and strictly increasing exponents.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for q, c in items:
            q = Fraction(q)
            c = Fraction(c)
            if c:
                acc[q] = acc.get(q, Fraction(0)) + c
        object.__setattr__(
            self, "_terms", tuple(sorted((q, c) for q, c in acc.items() if c != 0))
        )

    @classmethod
    def _from_accumulator(cls, acc):
        # internal fast path: entries are known to be Fractions already
        out = object.__new__(cls)
        object.__setattr__(
            out, "_terms", tuple(sorted((q, c) for q, c in acc.items() if c != 0))
        )
        return out

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxPoly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls(((0, 1),))

    @classmethod
    def constant(cls, c):
        return cls(((0, c),))

    @classmethod
    def t_power(cls, q, c=1):
        return cls(((q, c),))

    @property
    def terms(self):
        return self._terms

    @property
    def is_zero(self):
        return not self._terms

    def val(self):
        """Least exponent with nonzero coefficient; INF for zero."""
        return self._terms[0][0] if self._terms else INF

    def coefficient(self, q):
        q = Fraction(q)
        for e, c in self._terms:
            if e == q:
                return c
        return Fraction(0)

    def max_exponent(self):
        return self._terms[-1][0] if self._terms else -INF

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PuiseuxPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == PuiseuxPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for q, c in other._terms:
            acc[q] = acc.get(q, _ZERO) + c
        return PuiseuxPoly._from_accumulator(acc)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(PuiseuxPoly)
        object.__setattr__(out, "_terms", tuple((q, -c) for q, c in self._terms))
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for q, c in other._terms:
            acc[q] = acc.get(q, _ZERO) - c
        return PuiseuxPoly._from_accumulator(acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return PuiseuxPoly.zero()
        # merge exponents on a common integer grid: int keys hash far
        # faster than Fractions and the grid denominator stays small
        den = 1
        for q, _ in self._terms:
            den = den * q.denominator // gcd(den, q.denominator)
        for q, _ in other._terms:
            den = den * q.denominator // gcd(den, q.denominator)
        left = [(int(q * den), c) for q, c in self._terms]
        right = [(int(q * den), c) for q, c in other._terms]
        acc = {}
        for qa, ca in left:
            for qb, cb in right:
                key = qa + qb
                prior = acc.get(key)
                acc[key] = ca * cb if prior is None else prior + ca * cb
        out = object.__new__(PuiseuxPoly)
        object.__setattr__(
            out,
            "_terms",
            tuple(
                (Fraction(k, den), c) for k, c in sorted(acc.items()) if c != 0
            ),
        )
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = PuiseuxPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        return format_puiseux(self)

    def __repr__(self):
        return "PuiseuxPoly(%r)" % format_puiseux(self)


def _coerce(x):
    if isinstance(x, PuiseuxPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return PuiseuxPoly.constant(x)
    return NotImplemented


def val(p):
    """t-adic valuation: least exponent of ``p``, or INF for the zero element."""
    return p.val()


# ---------------------------------------------------------------------------
# text format: sums of `c*t^(a/b)` terms, e.g. ``1 + 3/2*t^(1/2) - t^2``


def _format_exponent(q):
    if q.denominator == 1:
        if q >= 0:
            return "t" if q == 1 else "t^%d" % q
        return "t^(%d)" % q
    return "t^(%s)" % q


def _format_term(q, c):
    body = "" if q == 0 else _format_exponent(q)
    mag = abs(c)
    if not body:
        return str(mag)
    if mag == 1:
        return body
    return "%s*%s" % (mag, body)


def format_puiseux(p):
    """Canonical text form; :func:`parse_puiseux` round-trips it."""
    if p.is_zero:
        return "0"
    parts = []
    for i, (q, c) in enumerate(p.terms):
        if i == 0:
            head = _format_term(q, c)
            parts.append("-" + head if c < 0 else head)
        else:
            parts.append(("- " if c < 0 else "+ ") + _format_term(q, c))
    return " ".join(parts)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_TPART_RE = re.compile(r"^t(\^(?P<plain>[+-]?\d+)|\^\((?P<paren>[+-]?\d+(/\d+)?)\))?$")


def _split_terms(text):
    """Split on top-level + and -, keeping signs; parens protect exponents."""
    chunks = []
    sign = 1
    pending = False
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PuiseuxParseError("unbalanced ')' in %r" % text)
        if ch in "+-" and depth == 0 and not _sign_binds_right(current):
            if any(c.strip() for c in current):
                chunks.append((sign, "".join(current).strip()))
                current = []
                sign = 1
                pending = False
            elif pending:
                raise PuiseuxParseError("consecutive signs in %r" % text)
            sign *= -1 if ch == "-" else 1
            pending = True
            continue
        current.append(ch)
    if depth != 0:
        raise PuiseuxParseError("unbalanced '(' in %r" % text)
    if any(c.strip() for c in current):
        chunks.append((sign, "".join(current).strip()))
    elif pending or not chunks:
        raise PuiseuxParseError("dangling sign or empty input in %r" % text)
    return chunks


def _sign_binds_right(current):
    # A sign directly after '^' belongs to an exponent (`t^-1`), not a term split.
    for ch in reversed(current):
        if ch.isspace():
            continue
        return ch == "^"
    return False


def parse_puiseux(text):
    """Parse the text format for Puiseux polynomials.

    Accepts sums of terms ``c``, ``c*t^e``, ``t^e``, ``t``, with ``c`` a
    rational ``p/q`` and ``e`` an integer or a parenthesized rational;
    ``t^-1`` is tolerated as a shorthand for ``t^(-1)``.
    """
    if not isinstance(text, str):
        raise PuiseuxParseError("expected a string, got %r" % (text,))
    stripped = text.strip()
    if not stripped:
        raise PuiseuxParseError("empty input")
    terms = []
    for sign, chunk in _split_terms(stripped):
        coeff = Fraction(sign)
        tpart = None
        pieces = [piece.strip() for piece in chunk.split("*")]
        if any(not piece for piece in pieces):
            raise PuiseuxParseError("empty factor in term %r" % chunk)
        if len(pieces) > 2:
            raise PuiseuxParseError("too many factors in term %r" % chunk)
        if len(pieces) == 2:
            coeff_text, tpart = pieces
            if not _RATIONAL_RE.match(coeff_text):
                raise PuiseuxParseError("bad coefficient %r" % coeff_text)
            coeff *= Fraction(coeff_text)
        else:
            piece = pieces[0]
            if _RATIONAL_RE.match(piece):
                coeff *= Fraction(piece)
            else:
                tpart = piece
        if tpart is None:
            terms.append((Fraction(0), coeff))
            continue
        m = _TPART_RE.match(tpart)
        if not m:
            raise PuiseuxParseError("bad t-power %r" % tpart)
        exp_text = m.group("plain") or m.group("paren")
        exponent = Fraction(exp_text) if exp_text is not None else Fraction(1)
        terms.append((exponent, coeff))
    return PuiseuxPoly(terms)


# ---------------------------------------------------------------------------
# exact division and fractions (the field of fractions keeps elimination exact,
# since finite Puiseux polynomials are not closed under division)


def divexact(p, d):
    """Quotient ``p / d`` when the division is exact, else None."""
    if d.is_zero:
        raise ZeroDivisionError("division by the zero Puiseux polynomial")
    if p.is_zero:
        return PuiseuxPoly.zero()
    d_lead_exp, d_lead_c = d.terms[0]
    max_q_exp = p.max_exponent() - d.max_exponent()
    quotient = []
    r = p
    while not r.is_zero:
        e, c = r.terms[0]
        q_exp = e - d_lead_exp
        if q_exp > max_q_exp:
            return None
        q_c = c / d_lead_c
        quotient.append((q_exp, q_c))
        r = r - PuiseuxPoly.t_power(q_exp, q_c) * d
    return PuiseuxPoly(quotient)


class PuiseuxFraction:
    """Quotient of two finite Puiseux polynomials; exact field arithmetic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = PuiseuxPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero:
            shift = min(num.val(), den.val())
            if shift != 0:
                num = PuiseuxPoly.t_power(-shift) * num
                den = PuiseuxPoly.t_power(-shift) * den
            q = divexact(num, den)
            if q is not None:
                num, den = q, PuiseuxPoly.one()
        else:
            den = PuiseuxPoly.one()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxFraction is immutable")

    @property
    def is_zero(self):
        return self.num.is_zero

    def val(self):
        if self.num.is_zero:
            return INF
        return self.num.val() - self.den.val()

    def __add__(self, other):
        return PuiseuxFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return PuiseuxFraction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other):
        return PuiseuxFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("division by zero Puiseux fraction")
        return PuiseuxFraction(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return PuiseuxFraction(-self.num, self.den)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxFraction):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    __hash__ = None

    def __repr__(self):
        return "PuiseuxFraction(%r, %r)" % (
            format_puiseux(self.num),
            format_puiseux(self.den),
        )


# ---------------------------------------------------------------------------
# matrices of Puiseux polynomials


def _check_square(M):
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise ValueError("expected a nonempty square matrix")
    return n


def _det_cofactor(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    out = PuiseuxPoly.zero()
    for j in range(n):
        if M[0][j].is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _det_cofactor(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def _det_bareiss(M):
    # Fraction-free elimination; every division is exact in the polynomial ring.
    n = len(M)
    work = [list(row) for row in M]
    sign = 1
    prev = PuiseuxPoly.one()
    for k in range(n - 1):
        if work[k][k].is_zero:
            pivot_row = None
            for i in range(k + 1, n):
                if not work[i][k].is_zero:
                    pivot_row = i
                    break
            if pivot_row is None:
                return PuiseuxPoly.zero()
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                q = divexact(num, prev)
                if q is None:
                    raise ArithmeticError("non-exact Bareiss division")
                work[i][j] = q
            work[i][k] = PuiseuxPoly.zero()
        prev = work[k][k]
    det = work[n - 1][n - 1]
    return det if sign == 1 else -det


def determinant(M):
    """Exact determinant of a square matrix of Puiseux polynomials.

    Cofactor expansion up to 4x4, fraction-free elimination above; the two
    paths agree (tested), the split is purely about term growth.
    """
    n = _check_square(M)
    if n <= 4:
        return _det_cofactor(M)
    return _det_bareiss(M)


def minor_valuation_profile(M):
    """Minimum valuation over k x k minors, for every k = 1..n at once.

    Submatrix determinants are shared across minor sizes (memoized Laplace
    expansion over row/column bitmasks), which is what makes the n = 4
    invariant-factor path cheap.
    """
    n = _check_square(M)
    dets = {}

    def det(rmask, cmask):
        key = (rmask, cmask)
        cached = dets.get(key)
        if cached is not None:
            return cached
        rows = [i for i in range(n) if rmask >> i & 1]
        cols = [j for j in range(n) if cmask >> j & 1]
        if len(rows) == 1:
            out = M[rows[0]][cols[0]]
        else:
            i = rows[0]
            sub_rmask = rmask & ~(1 << i)
            out = PuiseuxPoly.zero()
            for idx, j in enumerate(cols):
                if M[i][j].is_zero:
                    continue
                term = M[i][j] * det(sub_rmask, cmask & ~(1 << j))
                out = out + term if idx % 2 == 0 else out - term
        dets[key] = out
        return out

    profile = []
    for k in range(1, n + 1):
        best = INF
        for rows in itertools.combinations(range(n), k):
            rmask = sum(1 << i for i in rows)
            for cols in itertools.combinations(range(n), k):
                cmask = sum(1 << j for j in cols)
                v = det(rmask, cmask).val()
                if v < best:
                    best = v
        profile.append(best)
    return profile


def min_minor_valuation(M, k):
    """Minimum t-adic valuation over all k x k minors; INF if all vanish."""
    n = _check_square(M)
    if not 1 <= k <= n:
        raise ValueError("minor size %d out of range 1..%d" % (k, n))
    return minor_valuation_profile(M)[k - 1]
