"""Exact multivariate Laurent-polynomial arithmetic over the rationals.

A polynomial is a dictionary mapping monomials to nonzero Fraction
coefficients; the zero polynomial has an empty term map, so equality of
term maps is equality of polynomials (canonical form).

Variables are namespaced:

  x  positions          (Laurent: negative exponents allowed)
  p  momenta
  b  family parameters
  a  potential parameters
  c  integral coefficients
  t  auxiliary solver variables

Only x-variables may carry negative exponents; every denominator that
occurs in the computations this package targets is a monomial in the
positions, so a full fraction field is never needed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union

NAMESPACES = ("x", "p", "b", "a", "c", "t")
_NS_RANK = {ns: i for i, ns in enumerate(NAMESPACES)}

# Namespaces whose indices may start at 0 (potential parameters are
# conventionally numbered a0, a1, ...).
_ZERO_INDEXED = ("a", "c")


class SymalgError(Exception):
    """Base class for errors raised by the algebra layer."""


class ParseError(SymalgError):
    """Raised when polynomial text does not conform to the grammar."""


class NonInvertibleSubstitution(SymalgError):
    """Raised when a variable with a negative exponent is bound to a
    replacement that is not an invertible (single-term) monomial."""


class LogarithmicTerm(SymalgError):
    """Raised when integration would produce a logarithm (exponent -1)."""


class VarId(NamedTuple):
    ns: str
    index: int

    def __str__(self) -> str:
        return f"{self.ns}{self.index}"


def var(name: str) -> VarId:
    """Build a VarId from text like ``x1`` or ``b4``."""
    m = re.fullmatch(r"([a-z])(\d+)", name)
    if not m:
        raise ParseError(f"malformed variable name {name!r}")
    v = VarId(m.group(1), int(m.group(2)))
    _check_var(v)
    return v


def _check_var(v: VarId) -> None:
    if v.ns not in _NS_RANK:
        raise ParseError(f"unknown namespace {v.ns!r}")
    lo = 0 if v.ns in _ZERO_INDEXED else 1
    if v.index < lo:
        raise ParseError(f"index of {v.ns}-variable must be >= {lo}")


def _var_key(v: VarId) -> Tuple[int, int]:
    return (_NS_RANK[v.ns], v.index)


class Monomial:
    """A product of variable powers, stored as a sorted tuple of
    (VarId, exponent) pairs with no zero exponents."""

    __slots__ = ("exps",)

    def __init__(self, exps: Union[Mapping[VarId, int], Iterable[Tuple[VarId, int]]]):
        items = exps.items() if isinstance(exps, Mapping) else exps
        kept = []
        for v, e in items:
            if e == 0:
                continue
            if e < 0 and v.ns != "x":
                raise ValueError(f"negative exponent on {v} (only x-variables are Laurent)")
            kept.append((v, int(e)))
        kept.sort(key=lambda it: _var_key(it[0]))
        self.exps = tuple(kept)

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def of(cls, v: VarId, e: int = 1) -> "Monomial":
        return cls(((v, e),))

    def __hash__(self):
        return hash(self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = acc.get(v, 0) + e
        return Monomial(acc)

    def exponent(self, v: VarId) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def variables(self) -> Tuple[VarId, ...]:
        return tuple(v for v, _ in self.exps)

    def split(self, namespaces) -> Tuple["Monomial", "Monomial"]:
        """Split into (part in `namespaces`, remainder)."""
        inside = [(v, e) for v, e in self.exps if v.ns in namespaces]
        outside = [(v, e) for v, e in self.exps if v.ns not in namespaces]
        return Monomial(inside), Monomial(outside)

    def sort_key(self):
        # Graded ordering on the canonical variable sequence; used only
        # for deterministic printing.
        return (-self.degree, tuple((_var_key(v), -e) for v, e in self.exps))

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            parts.append(str(v) if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({str(self)})"


Scalar = Union[int, Fraction]
PolyLike = Union["Poly", int, Fraction]


class Poly:
    """Sparse Laurent polynomial with exact rational coefficients.

    Instances are treated as immutable values; all operations return new
    polynomials in canonical form.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] = ()):
        kept: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, q in items:
            q = Fraction(q)
            if q:
                kept[m] = q
        self.terms = kept

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, q: Scalar) -> "Poly":
        return cls({Monomial.one(): Fraction(q)})

    @classmethod
    def variable(cls, v: Union[VarId, str], e: int = 1) -> "Poly":
        if isinstance(v, str):
            v = var(v)
        return cls({Monomial.of(v, e): Fraction(1)})

    @classmethod
    def term(cls, m: Monomial, q: Scalar) -> "Poly":
        return cls({m: Fraction(q)})

    # ---- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m.exps for m in self.terms)

    def as_fraction(self) -> Fraction:
        """Value of a constant polynomial."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def variables(self) -> Tuple[VarId, ...]:
        seen = set()
        for m in self.terms:
            seen.update(m.variables())
        return tuple(sorted(seen, key=_var_key))

    def degree_in(self, v: VarId) -> int:
        """Largest exponent of v occurring in any term (0 if absent)."""
        return max((m.exponent(v) for m in self.terms), default=0)

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for m in self.terms for _, e in m.exps)

    # ---- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other: PolyLike) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other: PolyLike) -> "Poly":
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, q in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + q
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -q for m, q in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: PolyLike) -> "Poly":
        other = self._coerce(other)
        acc: Dict[Monomial, Fraction] = {}
        for m1, q1 in self.terms.items():
            for m2, q2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, Fraction(0)) + q1 * q2
        return Poly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ---- calculus ------------------------------------------------------

    def diff(self, v: VarId) -> "Poly":
        """Term-wise power-rule derivative with respect to v."""
        acc: Dict[Monomial, Fraction] = {}
        for m, q in self.terms.items():
            e = m.exponent(v)
            if e == 0:
                continue
            rest = dict(m.exps)
            rest[v] = e - 1
            mm = Monomial(rest)
            acc[mm] = acc.get(mm, Fraction(0)) + q * e
        return Poly(acc)

    def integrate(self, v: VarId) -> "Poly":
        """Antiderivative in v with zero integration constant.

        Raises LogarithmicTerm if any term has exponent -1 in v.
        """
        acc: Dict[Monomial, Fraction] = {}
        for m, q in self.terms.items():
            e = m.exponent(v)
            if e == -1:
                raise LogarithmicTerm(f"term {m} integrates to a logarithm in {v}")
            rest = dict(m.exps)
            rest[v] = e + 1
            mm = Monomial(rest)
            acc[mm] = acc.get(mm, Fraction(0)) + q / (e + 1)
        return Poly(acc)

    # ---- substitution and collection ----------------------------------

    def substitute(self, bindings: Mapping[VarId, PolyLike]) -> "Poly":
        """Simultaneous substitution of variables by polynomials.

        A variable occurring with a negative exponent may only be bound
        to a single-term monomial whose inverse is again a valid
        monomial; otherwise NonInvertibleSubstitution is raised.
        """
        binds = {v: self._coerce(p) for v, p in bindings.items()}
        out = Poly.zero()
        for m, q in self.terms.items():
            factor = Poly.const(q)
            untouched = {}
            for v, e in m.exps:
                repl = binds.get(v)
                if repl is None:
                    untouched[v] = e
                elif e >= 0:
                    factor = factor * repl ** e
                else:
                    factor = factor * _invert_power(v, repl, e)
            out = out + factor * Poly.term(Monomial(untouched), 1)
        return out

    def collect(self, namespaces) -> Dict[Monomial, "Poly"]:
        """Group terms by their monomial part in the given namespaces.

        Returns a map whose keys contain only variables from
        `namespaces` and whose values contain none of them; the sum of
        key * value over the map reproduces the polynomial.
        """
        namespaces = frozenset(namespaces)
        out: Dict[Monomial, Poly] = {}
        for m, q in self.terms.items():
            inside, outside = m.split(namespaces)
            out[inside] = out.get(inside, Poly.zero()) + Poly.term(outside, q)
        return {m: p for m, p in out.items() if not p.is_zero()}

    def evaluate(self, point: Mapping[VarId, Scalar]) -> Fraction:
        """Evaluate at a rational point binding every variable."""
        binds = {v: Poly.const(q) for v, q in point.items()}
        return self.substitute(binds).as_fraction()

    # ---- printing ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda it: it[0].sort_key())
        chunks = []
        for i, (m, q) in enumerate(items):
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if not m.exps:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if i == 0:
                chunks.append(body if sign == "+" else f"-{body}")
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"Poly({str(self)})"


def _invert_power(v: VarId, repl: Poly, e: int) -> Poly:
    """repl**e for negative e; repl must be a unit monomial."""
    if len(repl.terms) != 1:
        raise NonInvertibleSubstitution(
            f"{v} occurs with exponent {e} but is bound to the non-monomial {repl}")
    (m, q), = repl.terms.items()
    try:
        inv = Monomial({w: k * e for w, k in m.exps})
    except ValueError as exc:
        raise NonInvertibleSubstitution(
            f"{v} occurs with exponent {e}; inverse of {repl} is not a valid monomial") from exc
    return Poly.term(inv, q ** e)


# ---- text grammar -----------------------------------------------------
#
# poly   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := rational | variable ['^' exponent]
# rational := ['-'] digits ['/' digits]
# exponent := ['-'] digits        (the token '-0' is rejected)

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[a-z]\d+)|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected input at {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", m.group("num")))
        elif m.group("var"):
            out.append(("var", m.group("var")))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_poly(text: str) -> Poly:
    """Parse the interchange text syntax into a Poly."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial text")
    result = Poly.zero()
    i = 0
    n = len(toks)
    while i < n:
        sign = 1
        while i < n and toks[i] == ("op", "+") or i < n and toks[i] == ("op", "-"):
            if toks[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign at end of input")
        coeff = Fraction(sign)
        mono: Dict[VarId, int] = {}
        expect_factor = True
        while i < n:
            kind, val = toks[i]
            if kind == "op" and val in "+-" and not expect_factor:
                break
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                v = var(val)
                e = 1
                i += 1
                if i < n and toks[i] == ("op", "^"):
                    i += 1
                    neg = False
                    if i < n and toks[i] == ("op", "-"):
                        neg = True
                        i += 1
                    if i >= n or toks[i][0] != "num" or "/" in toks[i][1]:
                        raise ParseError(f"malformed exponent after {val}")
                    e = int(toks[i][1])
                    if neg and e == 0:
                        raise ParseError("exponent -0 is not allowed")
                    if neg:
                        e = -e
                    i += 1
                if e < 0 and v.ns != "x":
                    raise ParseError(f"negative exponent on {v} (only x-variables are Laurent)")
                mono[v] = mono.get(v, 0) + e
            else:
                raise ParseError(f"unexpected token {val!r}")
            expect_factor = False
            if i < n and toks[i] == ("op", "*"):
                i += 1
                expect_factor = True
                continue
            if i < n and toks[i][0] == "op" and toks[i][1] in "+-":
                break
            if i < n and toks[i][0] != "op":
                raise ParseError("missing operator between factors")
        if expect_factor:
            raise ParseError("dangling '*' in term")
        result = result + Poly.term(Monomial(mono), coeff)
    return result
