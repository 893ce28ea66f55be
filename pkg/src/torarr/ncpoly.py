"""Noncommutative polynomials on words over {a, b} and {c, d}.

Coefficients are exact: Python ints, with Fractions tolerated wherever an
operation introduces them and normalised back to int as soon as they are
whole.  Every value is immutable after construction and every operator is a
pure function, so concurrent read-sharing is safe.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import NonIntegral, NotRepresentable, ParseError


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class WordPoly:
    """Shared machinery for polynomials over a fixed two-letter alphabet."""

    alphabet = ""

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            if not isinstance(word, str) or any(ch not in self.alphabet for ch in word):
                raise ValueError(f"word {word!r} is not over alphabet {self.alphabet!r}")
            if isinstance(coeff, bool) or not isinstance(coeff, (int, Fraction)):
                raise TypeError(f"coefficient {coeff!r} must be an int or Fraction")
            acc[word] = acc.get(word, 0) + coeff
        self._terms = {w: _norm_coeff(c) for w, c in acc.items() if c != 0}

    @classmethod
    def word(cls, w, coeff=1):
        return cls([(w, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([("", 1)])

    @staticmethod
    def word_degree(word):
        raise NotImplementedError

    def _key(self, word):
        # Canonical term order: total degree, then number of second-alphabet
        # letters, then reverse-lexicographic.  This is the flag-vector order
        # (a^n first, b^n last) used for all printing and serialisation.
        return (self.word_degree(word), word.count(self.alphabet[1]),
                [-ord(ch) for ch in word])

    def terms(self):
        """Term list [(word, coeff)] in canonical order."""
        return sorted(self._terms.items(), key=lambda it: self._key(it[0]))

    def coeff(self, word):
        return self._terms.get(word, 0)

    def words(self):
        return set(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __neg__(self):
        return type(self)([(w, -c) for w, c in self._terms.items()])

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return type(self)(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self)([(w, c * other) for w, c in self._terms.items()])
        if type(other) is not type(self):
            return NotImplemented
        acc = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        return type(self)(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = type(self).one()
        for _ in range(k):
            out = out * self
        return out

    def degree(self):
        """Maximal word degree, or -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self.word_degree(w) for w in self._terms)

    def is_homogeneous(self):
        return len({self.word_degree(w) for w in self._terms}) <= 1

    def homogeneous_degree(self):
        degs = {self.word_degree(w) for w in self._terms}
        if len(degs) > 1:
            raise ValueError(f"polynomial has mixed degrees {sorted(degs)}")
        return degs.pop() if degs else -1

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_poly(self)!r})"


class AbPoly(WordPoly):
    """Integer (occasionally rational) combination of words in a and b."""

    alphabet = "ab"

    @staticmethod
    def word_degree(word):
        return len(word)


class CdPoly(WordPoly):
    """Combination of words in c (degree 1) and d (degree 2)."""

    alphabet = "cd"

    @staticmethod
    def word_degree(word):
        return word.count("c") + 2 * word.count("d")


# ---------------------------------------------------------------------------
# printing / parsing
# ---------------------------------------------------------------------------

def _format_word(word):
    if not word:
        return "1"
    out = []
    for ch, run in itertools.groupby(word):
        k = len(list(run))
        out.append(ch if k == 1 else f"{ch}^{k}")
    return "".join(out)


def _format_coeff(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p):
    """Canonical text form, e.g. ``a^2 + 2*ba + 6*ab + 6*b^2``."""
    terms = p.terms()
    if not terms:
        return "0"
    pieces = []
    for i, (word, coeff) in enumerate(terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        wtxt = _format_word(word)
        if wtxt == "1":
            body = _format_coeff(mag)
        elif mag == 1:
            body = wtxt
        else:
            body = f"{_format_coeff(mag)}*{wtxt}"
        if i == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?(?P<word>(?:[a-z](?:\^\d+)?)+)?$"
)


def _parse_terms(text, cls):
    text = text.replace("−", "-").strip()
    if not text:
        raise ParseError("empty polynomial text")
    if text == "0":
        return cls.zero()
    # Signs only ever occur as term separators, so splitting on them is safe.
    pairs = []
    sign = 1
    for token in re.split(r"([+-])", text):
        token = token.strip()
        if token == "":
            continue
        if token == "+":
            sign = 1
            continue
        if token == "-":
            sign = -1
            continue
        m = _TERM_RE.match(token)
        if not m or (not m.group("coeff") and not m.group("word")):
            raise ParseError(f"cannot parse term {token!r}")
        ctext = m.group("coeff")
        if ctext:
            ctext = ctext.replace(" ", "")
            coeff = Fraction(ctext) if "/" in ctext else int(ctext)
        else:
            coeff = 1
        wtext = m.group("word") or ""
        word = ""
        for ch, exp in re.findall(r"([a-z])(?:\^(\d+))?", wtext):
            if ch not in cls.alphabet:
                raise ParseError(f"letter {ch!r} not in alphabet {cls.alphabet!r}")
            word += ch * (int(exp) if exp else 1)
        pairs.append((word, _norm_coeff(sign * coeff)))
        sign = 1
    return cls(pairs)


def parse_ab(text):
    """Parse the canonical text form of an a/b polynomial."""
    return _parse_terms(text, AbPoly)


def parse_cd(text):
    """Parse the canonical text form of a c/d polynomial."""
    return _parse_terms(text, CdPoly)


# ---------------------------------------------------------------------------
# basic operators
# ---------------------------------------------------------------------------

def reverse(p):
    """Reverse every word; a linear involution and an anti-automorphism."""
    return type(p)([(w[::-1], c) for w, c in p._terms.items()])


def a_minus_b_power(m):
    """The expanded polynomial (a - b)^m."""
    return (AbPoly.word("a") - AbPoly.word("b")) ** m


def _split_positions(word, k):
    """All ways to delete k-1 letters from ``word``, as k-tuples of pieces."""
    n = len(word)
    for pos in itertools.combinations(range(n), k - 1):
        parts = []
        prev = -1
        for i in pos:
            parts.append(word[prev + 1:i])
            prev = i
        parts.append(word[prev + 1:])
        yield tuple(parts)


def coproduct_terms(p, k=2):
    """The (k-1)-fold coproduct as a dict mapping k-tuples of words to
    coefficients.  Splitting a word deletes one letter per split."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = {}
    for w, c in p._terms.items():
        if k == 1:
            acc[(w,)] = acc.get((w,), 0) + c
            continue
        if len(w) < k - 1:
            continue
        for parts in _split_positions(w, k):
            acc[parts] = acc.get(parts, 0) + c
    return {t: _norm_coeff(c) for t, c in acc.items() if c != 0}


def coproduct(p):
    """Delete-one-letter coproduct as a list of (left, right) pairs.

    The coefficient of each tensor term rides on the left factor.  The empty
    word splits into nothing, so its coproduct is the empty list.
    """
    out = []
    for w, c in p._terms.items():
        for i in range(len(w)):
            out.append((AbPoly.word(w[:i], c), AbPoly.word(w[i + 1:])))
    return out


def kary_coproduct(p, k):
    """k-fold splitting of ``p``; k = 1 is the identity.

    Returns a list of k-tuples of polynomials with the coefficient on the
    first factor.  Coassociativity makes the association order irrelevant.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return [(p,)]
    out = []
    for parts, c in sorted(coproduct_terms(p, k).items()):
        out.append((AbPoly.word(parts[0], c),)
                   + tuple(AbPoly.word(w) for w in parts[1:]))
    return out


def omega(p):
    """Replace each (necessarily disjoint) ``ab`` factor by 2d, every
    remaining letter by c.

    Scanning left to right is canonical: the pattern is a-then-b, so one
    occurrence can never overlap the next.
    """
    acc = {}
    for w, c in p._terms.items():
        out = []
        coeff = c
        i = 0
        while i < len(w):
            if w[i] == "a" and i + 1 < len(w) and w[i + 1] == "b":
                out.append("d")
                coeff *= 2
                i += 2
            else:
                out.append("c")
                i += 1
        word = "".join(out)
        acc[word] = acc.get(word, 0) + coeff
    return CdPoly(acc)


def _is_run(word, first, second):
    """True when ``word`` is first^m second^k (either run possibly empty)."""
    i = 0
    while i < len(word) and word[i] == first:
        i += 1
    return all(ch == second for ch in word[i:])


def kappa(p):
    """a^m -> (a-b)^m, everything else to zero."""
    out = AbPoly.zero()
    for w, c in p._terms.items():
        if all(ch == "a" for ch in w):
            out = out + a_minus_b_power(len(w)) * c
    return out


def beta(p):
    """b^m -> (a-b)^m, everything else to zero."""
    out = AbPoly.zero()
    for w, c in p._terms.items():
        if all(ch == "b" for ch in w):
            out = out + a_minus_b_power(len(w)) * c
    return out


def eta(p):
    """b^m a^k -> 2*(a-b)^(m+k), everything else to zero."""
    out = AbPoly.zero()
    for w, c in p._terms.items():
        if _is_run(w, "b", "a"):
            out = out + a_minus_b_power(len(w)) * (2 * c)
    return out


def lambda_t(p):
    """b^m -> (a-b)^m and b^m a -> (a-b)^(m+1), everything else to zero."""
    out = AbPoly.zero()
    for w, c in p._terms.items():
        if all(ch == "b" for ch in w):
            out = out + a_minus_b_power(len(w)) * c
        elif w.endswith("a") and all(ch == "b" for ch in w[:-1]):
            out = out + a_minus_b_power(len(w)) * c
    return out


def lambda_ub(p):
    """The unbounded-region letter map eta - 2*beta."""
    return eta(p) - 2 * beta(p)


_LETTER_MAPS = {
    "kappa": kappa,
    "beta": beta,
    "eta": eta,
    "lambda_t": lambda_t,
    "lambda_ub": lambda_ub,
}


def letter_map(kind, p):
    """Dispatch to one of kappa, beta, eta, lambda_t, lambda_ub."""
    try:
        return _LETTER_MAPS[kind](p)
    except KeyError:
        raise ValueError(f"unknown letter map {kind!r}") from None


def h_prime(p):
    """Drop the trailing letter of every word; the empty word goes to zero."""
    acc = {}
    for w, c in p._terms.items():
        if w:
            acc[w[:-1]] = acc.get(w[:-1], 0) + c
    return AbPoly(acc)


def r_map(p):
    """Keep words ending in a (dropping that a); words ending in b and the
    empty word go to zero."""
    acc = {}
    for w, c in p._terms.items():
        if w.endswith("a"):
            acc[w[:-1]] = acc.get(w[:-1], 0) + c
    return AbPoly(acc)


# ---------------------------------------------------------------------------
# the coalgebra-defined operator family
# ---------------------------------------------------------------------------

def _chain_operator(p, last_map):
    """Sum over k >= 1 of kappa(v1).b.eta(v2).b ... b.last(vk), where the
    splitting runs over the k-fold coproduct.  For k = 1 the single slot is
    kappa.  phi uses last = eta; the toric and unbounded variants only swap
    the final slot."""
    if not p:
        return AbPoly.zero()
    if not p.is_homogeneous():
        raise ValueError("operator requires a homogeneous polynomial")
    b = AbPoly.word("b")
    total = kappa(p)
    n = p.homogeneous_degree()
    for k in range(2, n + 2):
        for parts, c in coproduct_terms(p, k).items():
            term = kappa(AbPoly.word(parts[0], c))
            if not term:
                continue
            dead = False
            for mid in parts[1:-1]:
                term = term * b * eta(AbPoly.word(mid))
                if not term:
                    dead = True
                    break
            if dead:
                continue
            term = term * b * last_map(AbPoly.word(parts[-1]))
            total = total + term
    return total


def phi(p):
    """Face-index operator for central arrangements, computed straight from
    the coproduct definition (the closed forms stay available as checks)."""
    return _chain_operator(p, eta)


def phi_t(p):
    """Toric variant of phi: the final slot uses lambda_t."""
    return _chain_operator(p, lambda_t)


def phi_ub(p):
    """Unbounded-region variant of phi: the final slot uses lambda_ub."""
    return _chain_operator(p, lambda_ub)


# ---------------------------------------------------------------------------
# basis changes between the two alphabets
# ---------------------------------------------------------------------------

def cd_to_ab(p):
    """Expand c = a + b and d = ab + ba.  Total and exact."""
    c_exp = AbPoly([("a", 1), ("b", 1)])
    d_exp = AbPoly([("ab", 1), ("ba", 1)])
    out = AbPoly.zero()
    for w, coeff in p._terms.items():
        piece = AbPoly.one()
        for ch in w:
            piece = piece * (c_exp if ch == "c" else d_exp)
        out = out + piece * coeff
    return out


def _decode_min_word(word):
    """Invert ``u -> u with c -> a, d -> ab`` when possible.

    That substitution picks the lexicographically smallest word of each
    c/d-word's expansion (with coefficient exactly 1), so it drives the greedy
    elimination in ab_to_cd.  Returns None when ``word`` is not an image.
    """
    out = []
    i = 0
    while i < len(word):
        if word[i] == "a":
            if i + 1 < len(word) and word[i + 1] == "b":
                out.append("d")
                i += 2
            else:
                out.append("c")
                i += 1
        else:
            return None
    return "".join(out)


def ab_to_cd(p):
    """Rewrite a homogeneous a/b polynomial in c and d, or raise
    NotRepresentable.

    Greedy elimination: the lexicographically least remaining word must be
    the minimal word of a unique c/d-word's expansion; subtract and repeat.
    Every other word of that expansion is lexicographically larger, so the
    minimum strictly increases and the loop terminates.
    """
    if not p:
        return CdPoly.zero()
    if not p.is_homogeneous():
        raise NotRepresentable("mixed-degree polynomial has no c/d form")
    work = dict(p._terms)
    result = {}
    while work:
        w = min(work)
        u = _decode_min_word(w)
        if u is None:
            raise NotRepresentable(f"word {w!r} obstructs a c/d rewriting")
        coeff = work[w]
        if isinstance(coeff, Fraction):
            raise NotRepresentable(f"non-integer c/d coefficient {coeff}")
        result[u] = result.get(u, 0) + coeff
        for ww, cc in cd_to_ab(CdPoly.word(u))._terms.items():
            new = work.get(ww, 0) - coeff * cc
            if new == 0:
                work.pop(ww, None)
            else:
                work[ww] = new
    return CdPoly(result)


def torus_normal_form(p, n):
    """Split ``p`` (homogeneous of degree n+1) as
    ``t * (a-b)^(n+1) + Phi`` with Phi a c/d polynomial free of c^(n+1).

    The coefficient t is read off the a^(n+1) term: no c/d-word other than
    c^(n+1) contains a pure-a word, so requiring Phi to avoid c^(n+1) pins t
    uniquely.  For odd n the power (a-b)^(n+1) = (c^2-2d)^((n+1)/2) is itself
    a c/d polynomial; its own c^(n+1) content is absorbed into t by the same
    rule, which keeps the decomposition unique for both parities.
    """
    if p.homogeneous_degree() not in (-1, n + 1):
        raise ValueError(f"expected a homogeneous polynomial of degree {n + 1}")
    t = p.coeff("a" * (n + 1))
    remainder = p - a_minus_b_power(n + 1) * t
    phi_cd = ab_to_cd(remainder)
    if phi_cd.coeff("c" * (n + 1)) != 0:
        raise NotRepresentable("no decomposition avoiding the pure-c term")
    return t, phi_cd


def half_exact(p):
    """Divide every coefficient by two, demanding integer results."""
    out = {}
    for w, c in p._terms.items():
        half = Fraction(c, 2)
        if half.denominator != 1:
            raise NonIntegral(f"coefficient {c} of {w!r} is odd")
        out[w] = int(half)
    return type(p)(out)


def projective_half(sphere_cd, n):
    """Face index of an antipodal quotient of a centrally symmetric sphere
    subdivision: (expansion of the sphere index + (a-b)^(n+1)) / 2.

    The input must be homogeneous of degree n+1 with pure-c coefficient
    exactly 1; a NonIntegral error means the input cannot come from a
    centrally symmetric subdivision.
    """
    if sphere_cd.homogeneous_degree() != n + 1:
        raise ValueError(f"expected a homogeneous degree-{n + 1} c/d polynomial")
    if sphere_cd.coeff("c" * (n + 1)) != 1:
        raise ValueError("pure-c coefficient must be exactly 1")
    return half_exact(cd_to_ab(sphere_cd) + a_minus_b_power(n + 1))


def format_torus_normal_form(t, phi_cd, n):
    """Display form ``(a-b)^(n+1) + <phi>``; storage stays fully expanded."""
    parts = []
    if t != 0:
        lead = f"(a-b)^{n + 1}"
        parts.append(lead if t == 1 else f"{_format_coeff(t)}*{lead}")
    if phi_cd:
        parts.append(format_poly(phi_cd))
    return " + ".join(parts) if parts else "0"
