"""Exact arithmetic in the truncated power-series ring Q[[p,q]]/(p^N, q^N).

Series are stored sparsely as a map from exponent pairs (i, j) to nonzero
rational coefficients.  Coefficients are Python ints whenever the value is an
integer and fractions.Fraction otherwise, so integrality is an assertable
predicate rather than a type distinction.
"""

from fractions import Fraction


class NotAUnit(ArithmeticError):
    """Constant term is zero, so the series has no inverse."""


class NotDivisible(ArithmeticError):
    """A term blocks exact division by a monomial."""


def _norm_coeff(c):
    # collapse Fractions with denominator 1 back to int
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class TruncatedSeries:
    """A residue of a bivariate power series modulo (p^N, q^N)."""

    __slots__ = ("precision", "terms")

    def __init__(self, terms, precision):
        if precision < 1:
            raise ValueError("precision must be >= 1")
        self.precision = precision
        clean = {}
        for (i, j), c in terms.items():
            if i >= precision or j >= precision:
                continue
            if i < 0 or j < 0:
                raise ValueError("negative exponent (%d, %d)" % (i, j))
            c = _norm_coeff(c)
            if c:
                clean[(i, j)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c, precision):
        return cls({(0, 0): c}, precision)

    @classmethod
    def zero(cls, precision):
        return cls({}, precision)

    @classmethod
    def one(cls, precision):
        return cls({(0, 0): 1}, precision)

    @classmethod
    def monomial(cls, i, j, precision, coeff=1):
        return cls({(i, j): coeff}, precision)

    # -- basic queries ------------------------------------------------

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def is_zero(self):
        return not self.terms

    def is_integral(self):
        """True iff every stored coefficient has denominator 1."""
        return all(not isinstance(c, Fraction) for c in self.terms.values())

    def min_exponents(self):
        """Componentwise minimum (i, j) over stored terms; None for zero."""
        if not self.terms:
            return None
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.precision == other.precision and self.terms == other.terms

    def __hash__(self):
        return hash((self.precision, frozenset(self.terms.items())))

    def __repr__(self):
        n = len(self.terms)
        return "TruncatedSeries(N=%d, %d terms)" % (self.precision, n)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return TruncatedSeries(out, n)

    def __neg__(self):
        return TruncatedSeries({k: -c for k, c in self.terms.items()},
                               self.precision)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        # bucket the larger operand by p-exponent, columns sorted, so the
        # truncation cutoff turns into loop breaks instead of per-term tests
        rows = {}
        for (i, j), c in b.items():
            rows.setdefault(i, []).append((j, c))
        rows = sorted((i, sorted(cols)) for i, cols in rows.items())
        out = {}
        get = out.get
        for (i1, j1), c1 in a.items():
            imax = n - i1
            jmax = n - j1
            for i2, cols in rows:
                if i2 >= imax:
                    break
                i = i1 + i2
                for j2, c2 in cols:
                    if j2 >= jmax:
                        break
                    k = (i, j1 + j2)
                    v = get(k)
                    out[k] = c1 * c2 if v is None else v + c1 * c2
        return TruncatedSeries(out, n)

    def inverse(self):
        """Multiplicative inverse in the quotient ring.

        Requires a nonzero constant term; the inverse is then unique and the
        geometric series of the paper trick converges to it, so we may solve
        for it coefficient by coefficient in graded order instead (same
        result, one convolution's worth of work).
        """
        c0 = self.constant_term()
        if not c0:
            raise NotAUnit("constant term is zero")
        n = self.precision
        inv_c0 = _norm_coeff(Fraction(1, 1) / c0)
        rest = [(k, c) for k, c in self.terms.items() if k != (0, 0)]
        out = {(0, 0): inv_c0}
        # acc[(i, j)] accumulates sum of f[a,b] * g[i-a, j-b] over known g
        acc = {}

        def propagate(key, g_val):
            gi, gj = key
            for (fi, fj), fc in rest:
                i, j = gi + fi, gj + fj
                if i >= n or j >= n:
                    continue
                acc[(i, j)] = acc.get((i, j), 0) + fc * g_val
        propagate((0, 0), inv_c0)
        for s in range(1, 2 * n - 1):
            lo = max(0, s - n + 1)
            hi = min(s, n - 1)
            for i in range(lo, hi + 1):
                key = (i, s - i)
                a = acc.pop(key, 0)
                if not a:
                    continue
                g_val = _norm_coeff(-a * inv_c0)
                if g_val:
                    out[key] = g_val
                    propagate(key, g_val)
        return TruncatedSeries(out, n)

    def divide_monomial(self, i, j):
        """Exact quotient by p^i q^j.

        Every term must carry at least that monomial.  The result keeps the
        original precision: the quotient is only trusted to the precision the
        operands had (conservative contract).
        """
        out = {}
        for (a, b), c in self.terms.items():
            if a < i or b < j:
                raise NotDivisible(
                    "term p^%d q^%d not divisible by p^%d q^%d" % (a, b, i, j))
            out[(a - i, b - j)] = c
        return TruncatedSeries(out, self.precision)

    def mul_monomial(self, i, j, coeff=1):
        out = {}
        n = self.precision
        for (a, b), c in self.terms.items():
            if a + i < n and b + j < n:
                out[(a + i, b + j)] = c * coeff
        return TruncatedSeries(out, n)


def exact_ratio(f, g):
    """Quotient f/g after cancelling the largest monomial common to both.

    The common monomial p^i q^j is the componentwise minimum of the minimal
    exponents of f and g; after cancelling it the reduced denominator must be
    a unit.  Integrality of the result is the caller's to assert.
    """
    if g.is_zero():
        raise ZeroDivisionError("zero denominator series")
    if f.is_zero():
        return TruncatedSeries.zero(min(f.precision, g.precision))
    fi, fj = f.min_exponents()
    gi, gj = g.min_exponents()
    i, j = min(fi, gi), min(fj, gj)
    f_red = f.divide_monomial(i, j)
    g_red = g.divide_monomial(i, j)
    if not g_red.constant_term():
        raise NotAUnit("denominator is not a unit after monomial cancellation")
    return f_red * g_red.inverse()


# -- serialization ----------------------------------------------------

def series_to_record(f):
    """JSON-ready record: {precision, terms: sorted [i, j, "num/den"]}."""
    terms = []
    for (i, j) in sorted(f.terms):
        c = f.terms[(i, j)]
        if isinstance(c, Fraction):
            terms.append([i, j, "%d/%d" % (c.numerator, c.denominator)])
        else:
            terms.append([i, j, "%d/1" % c])
    return {"precision": f.precision, "terms": terms}


def series_from_record(rec):
    terms = {}
    for i, j, s in rec["terms"]:
        num, den = s.split("/")
        terms[(int(i), int(j))] = Fraction(int(num), int(den))
    return TruncatedSeries(terms, int(rec["precision"]))
