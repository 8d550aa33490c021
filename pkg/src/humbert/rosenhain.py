"""Restricted Fourier expansions of Gaudry's Rosenhain triple on H_Delta.

    e1 = t1^2 t3^2 / (t2^2 t4^2)
    e2 = t3^2 t8^2 / (t4^2 t10^2)
    e3 = t1^2 t8^2 / (t2^2 t10^2)

t8 and t10 lie in the monomial ideal (p^(1+k) q^(k+l-1)), so the squared
ratio t8^2/t10^2 is computed by exact monomial cancellation followed by a
unit inversion; the result is an integer series with constant term 1.
"""

from dataclasses import dataclass

from .series import TruncatedSeries, exact_ratio
from .theta import Discriminant, NotAdmissible, ThetaChar, restricted_theta


class IntegralityViolation(ArithmeticError):
    """A Rosenhain expansion acquired a non-integer coefficient (a bug)."""


@dataclass(frozen=True)
class RosenhainSeries:
    e1: TruncatedSeries
    e2: TruncatedSeries
    e3: TruncatedSeries
    disc: Discriminant
    precision: int

    def series(self):
        return (self.e1, self.e2, self.e3)

    def is_distinct(self):
        """True iff the e_i are pairwise distinct and != 1 at this precision.

        A truncated series cannot certify distinctness below the order of the
        first separating term (e.g. e1 - 1 starts at p^12 q^12 for Delta=12),
        so this is a queryable predicate rather than a construction invariant.
        """
        one = TruncatedSeries.one(self.precision)
        triple = self.series()
        for i in range(3):
            if (triple[i] - one).is_zero():
                return False
            for j in range(i + 1, 3):
                if (triple[i] - triple[j]).is_zero():
                    return False
        return True


def rosenhain_triple(disc, precision):
    """Compute (e1, e2, e3) on H_Delta to the given per-variable precision.

    Delta = 1 is rejected: there k + l - 1 = 0 and the monomial-cancellation
    bookkeeping degenerates.
    """
    if not isinstance(disc, Discriminant):
        raise TypeError("disc must be a Discriminant")
    if disc.delta < 4:
        raise NotAdmissible("rosenhain_triple requires delta >= 4")
    if precision < 4:
        raise ValueError("precision must be >= 4")
    th = {i: restricted_theta(ThetaChar.from_index(i), disc, precision)
          for i in (1, 2, 3, 4, 8, 10)}
    sq = {i: t * t for i, t in th.items()}
    # cancel the known p^(1+k) q^(k+l-1) ideal factor on t8, t10 before
    # squaring: squaring first would truncate both to zero at small N
    i0, j0 = 1 + disc.k, disc.k + disc.ell - 1
    u8 = th[8].divide_monomial(i0, j0)
    u10 = th[10].divide_monomial(i0, j0)
    ratio = exact_ratio(u8 * u8, u10 * u10)  # constant term (2/-2)^2 = 1
    e1 = sq[1] * sq[3] * (sq[2] * sq[4]).inverse()
    e2 = sq[3] * ratio * sq[4].inverse()
    e3 = sq[1] * ratio * sq[2].inverse()
    triple = (e1, e2, e3)
    for name, e in zip(("e1", "e2", "e3"), triple):
        if not e.is_integral():
            raise IntegralityViolation("%s has a non-integer coefficient"
                                       % name)
        if e.constant_term() != 1:
            raise IntegralityViolation("%s has constant term %r, expected 1"
                                       % (name, e.constant_term()))
    return RosenhainSeries(e1, e2, e3, disc, precision)
