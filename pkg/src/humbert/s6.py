"""The S6 action on Rosenhain coordinates.

A permutation of the six Weierstrass symbols (0, 1, inf, e1, e2, e3) acts on
a level-2 point by permuting the tuple and renormalising the first three
coordinates back to (0, 1, inf) with the unique Moebius transformation

    mu(x) = (x - u1)(u2 - u3) / ((x - u3)(u2 - u1)),

evaluated projectively so that inf needs no special casing.  The images of
the last three coordinates give a triple of rational functions in e1, e2, e3.
"""

import math
import random
from functools import lru_cache
from itertools import permutations

from .degrees import SpecialCase
from .poly import (DegenerateOnly, MultiPoly, RationalTriple,
                   _degenerate_list, _grlex_key, eval_complex, raw_add,
                   raw_mul, raw_scale, substitute_rational, try_divide)
from .theta import humbert_params

SYMBOLS = ("0", "1", "inf", "e1", "e2", "e3")


class Perm6:
    """A bijection of the six symbols, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != sorted(SYMBOLS):
            raise ValueError("not a permutation of %r" % (SYMBOLS,))
        self.images = images

    @classmethod
    def identity(cls):
        return cls(SYMBOLS)

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(mapping.get(s, s) for s in SYMBOLS))

    @classmethod
    def from_cycles(cls, cycles):
        """Build from cycle notation, e.g. [("0", "e1"), ("1", "e2")]."""
        mapping = {}
        for cyc in cycles:
            for s in cyc:
                if s not in SYMBOLS:
                    raise ValueError("unknown symbol %r" % (s,))
                if s in mapping:
                    raise ValueError("symbol %r repeated" % (s,))
            for i, s in enumerate(cyc):
                mapping[s] = cyc[(i + 1) % len(cyc)]
        return cls.from_mapping(mapping)

    @classmethod
    def parse(cls, text):
        """Parse cycle notation like "(0,e1,e3,inf,e2,1)(...)"."""
        text = text.replace(" ", "")
        if text in ("", "()", "id"):
            return cls.identity()
        cycles = []
        pos = 0
        while pos < len(text):
            if text[pos] != "(":
                raise ValueError("expected '(' at %d in %r" % (pos, text))
            end = text.find(")", pos)
            if end < 0:
                raise ValueError("unbalanced cycle in %r" % (text,))
            cyc = tuple(text[pos + 1:end].split(","))
            cycles.append(cyc)
            pos = end + 1
        return cls.from_cycles(cycles)

    def __call__(self, symbol):
        return self.images[SYMBOLS.index(symbol)]

    def __mul__(self, other):
        # (self * other)(x) = self(other(x))
        return Perm6(tuple(self(other(s)) for s in SYMBOLS))

    def inverse(self):
        mapping = {img: s for s, img in zip(SYMBOLS, self.images)}
        return Perm6.from_mapping(mapping)

    def __eq__(self, other):
        if not isinstance(other, Perm6):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        seen = set()
        out = []
        for s in SYMBOLS:
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            t = self(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = self(t)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        return "Perm6(%s)" % (str(self),)

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(%s)" % ",".join(c) for c in cycs)


def all_perms():
    """All 720 permutations, in a fixed deterministic order."""
    return [Perm6(p) for p in permutations(SYMBOLS)]


def mulclose(gens):
    """Closure of a generator list under composition (breadth-first)."""
    els = {Perm6.identity()}
    boundary = list(els)
    gens = list(gens)
    while boundary:
        new = []
        for g in gens:
            for b in boundary:
                c = g * b
                if c not in els:
                    els.add(c)
                    new.append(c)
        boundary = new
    return els


# -- the induced rational maps ------------------------------------------

# finite symbol values as raw trivariate term dicts; inf is the marker None
_VALUE = {
    "0": {},
    "1": {(0, 0, 0): 1},
    "inf": None,
    "e1": {(1, 0, 0): 1},
    "e2": {(0, 1, 0): 1},
    "e3": {(0, 0, 1): 1},
}

_INF = object()  # an (alpha - beta) factor where exactly one side is inf


def _diff(a, b):
    if a is None or b is None:
        return _INF  # inf never meets inf: the six symbols are distinct
    return raw_add(a, raw_scale(b, -1))


def _reduce_pair(num_factors, den_factors):
    """Assemble mu(x) = prod(num)/prod(den) with inf-pair cancellation.

    The cross-ratio always carries the same number of inf factors upstairs
    and downstairs (zero or one of each), and such a pair has limit 1.  The
    surviving factors are constants or degenerate-locus linear forms, so
    content removal plus trial division by that fixed list fully reduces.
    """
    n_inf = num_factors.count(_INF)
    d_inf = den_factors.count(_INF)
    assert n_inf == d_inf <= 1, "unpaired infinity in cross-ratio"
    num = {(0, 0, 0): 1}
    den = {(0, 0, 0): 1}
    for f in num_factors:
        if f is not _INF:
            num = raw_mul(num, f)
    for f in den_factors:
        if f is not _INF:
            den = raw_mul(den, f)
    for g in _degenerate_list():
        while True:
            qn = try_divide(num, g)
            if qn is None:
                break
            qd = try_divide(den, g)
            if qd is None:
                break
            num, den = qn, qd
    return num, den


@lru_cache(maxsize=None)
def induced_map(sigma):
    """The rational-function triple induced by a symbol permutation."""
    u = [_VALUE[sigma(s)] for s in SYMBOLS]
    u1, u2, u3 = u[0], u[1], u[2]
    pairs = []
    for x in u[3:]:
        num, den = _reduce_pair([_diff(x, u1), _diff(u2, u3)],
                                [_diff(x, u3), _diff(u2, u1)])
        if not num or not den:
            # the six symbols are pairwise distinct, so mu can send an
            # e-coordinate to 0 or inf only when sigma moves it onto one of
            # the renormalised slots -- which the tuple layout rules out
            raise AssertionError("cross-ratio image degenerated")
        # joint scaling only: relative sign/scale of num and den matters
        g = 0
        for v in list(num.values()) + list(den.values()):
            g = math.gcd(g, v)
        if den[max(den, key=_grlex_key)] < 0:
            g = -g
        num = {k: v // g for k, v in num.items()}
        den = {k: v // g for k, v in den.items()}
        pairs.append((MultiPoly._unnormalized(num),
                      MultiPoly._unnormalized(den)))
    return RationalTriple(pairs)


def act(sigma, poly):
    """Pull a component polynomial through the induced coordinate change."""
    return substitute_rational(poly, induced_map(sigma))


def orbit(poly):
    """The S6 orbit of a canonical component polynomial."""
    out = {}
    for sigma in all_perms():
        try:
            img = act(sigma, poly)
        except DegenerateOnly:
            continue
        out[img] = sigma
    return set(out)


def _surface_samples(poly, count=3, seed=0):
    """Generic complex points on the hypersurface poly = 0.

    Fixes two coordinates at random and solves the univariate slice for the
    third.  Returns fewer than count points only if poly is constant in
    every variable (impossible for a canonical MultiPoly of degree >= 1).
    """
    import numpy as np
    var = next(v for v in range(3) if poly.degree_in(v) >= 1)
    rng = random.Random(seed)
    points = []
    tries = 0
    while len(points) < count and tries < 200:
        tries += 1
        others = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                  for _ in range(2)]
        coeffs = [0.0] * (poly.degree_in(var) + 1)
        for k, c in poly.terms.items():
            rest = 1.0
            oi = 0
            for v in range(3):
                if v != var:
                    rest *= others[oi] ** k[v]
                    oi += 1
            coeffs[k[var]] += float(c) * rest
        arr = np.array(coeffs[::-1], dtype=complex)
        if abs(arr[0]) < 1e-9:
            continue
        for root in np.roots(arr):
            pt = []
            oi = 0
            for v in range(3):
                if v == var:
                    pt.append(complex(root))
                else:
                    pt.append(others[oi])
                    oi += 1
            # keep well-conditioned points away from the degenerate loci
            if max(abs(x) for x in pt) > 8:
                continue
            if any(abs(eval_complex(g, tuple(pt))) < 0.05
                   for g in _degenerate_list()):
                continue
            points.append(tuple(pt))
            break
    return points


def _maps_surface_to_itself(sigma, poly, points):
    """Loose numeric test that the sigma image of poly = 0 stays on it.

    The residual is measured against the termwise mass of poly at the image
    point, so a small value means genuine cancellation.  The threshold is
    loose on purpose: false positives cost one exact check, false negatives
    would be wrong, and true stabilizers land many orders below it.
    """
    phi = induced_map(sigma)
    for pt in points:
        image = []
        for num, den in zip(phi.nums, phi.dens):
            d = eval_complex(den, pt)
            if abs(d) < 1e-8:
                return True  # cannot screen near a pole; decide exactly
            image.append(eval_complex(num, pt) / d)
        image = tuple(image)
        mass = sum(abs(c) * abs(image[0]) ** k[0] * abs(image[1]) ** k[1]
                   * abs(image[2]) ** k[2] for k, c in poly.terms.items())
        if abs(eval_complex(poly, image)) > 1e-5 * (mass + 1.0):
            return False
    return True


def fixed_group(poly):
    """All permutations fixing the canonical form of poly, as a set.

    A cheap floating-point prescreen (does the induced coordinate change
    map a few sampled points of the hypersurface back onto it?) rules out
    the vast majority of the 720 permutations; survivors are confirmed by
    the exact action, so the result is exact.
    """
    if poly.degree() == 0:
        return set(all_perms())
    points = _surface_samples(poly)
    out = set()
    for sigma in all_perms():
        if points and not _maps_surface_to_itself(sigma, poly, points):
            continue
        try:
            if act(sigma, poly) == poly:
                out.add(sigma)
        except DegenerateOnly:
            continue
    return out


# generator sets quoted from the fixed-group classification
_G_EVEN = ["(0,e1,e3,inf,e2,1)", "(e1,e2)", "(1,e1,e3,e2)"]
_CONJ_EVEN = "(1,inf)(e1,e2,e3)"
_GENS_1MOD8 = ["(0,e1)(1,e2)(inf,e3)", "(1,inf)", "(e1,e2)", "(e2,e3)"]
_GENS_5MOD8 = ["(0,e1)(1,e2)(inf,e3)", "(1,e3,e2,e1,inf)", "(inf,e1,e3,e2)"]


def paper_generators(delta):
    """Fixed-group generators for the component h_Delta, by congruence class.

    Even Delta = 4k: the order-48 group G for odd k, its conjugate by
    g = (1,inf)(e1,e2,e3) for even k.  Under the composition convention
    (sigma * tau)(x) = sigma(tau(x)) used here, the conjugate that fixes
    the even-k components is g * h * g^-1.  Delta = 1 mod 8 gives an
    order-72 group, Delta = 5 mod 8 an order-120 group.
    """
    disc = humbert_params(delta)
    if delta == 1:
        raise SpecialCase("delta=1 fixed group is special")
    if delta % 4 == 0:
        gens = [Perm6.parse(s) for s in _G_EVEN]
        if disc.k % 2 == 0:
            g = Perm6.parse(_CONJ_EVEN)
            ginv = g.inverse()
            gens = [g * h * ginv for h in gens]
        return gens
    if delta % 8 == 1:
        return [Perm6.parse(s) for s in _GENS_1MOD8]
    return [Perm6.parse(s) for s in _GENS_5MOD8]
