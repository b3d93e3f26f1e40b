"""Exact scalars: rationals and a localized parameter field.

Numeric runs use arbitrary-precision rationals (``gmpy2.mpq`` when available,
``fractions.Fraction`` otherwise).  Symbolic runs use :class:`ParamFraction`,
an element of Q[params][1/m] where the denominator is a monomial in the
parameters a field declares invertible.  Keeping denominators monomial makes
the normal form canonical without any multivariate gcd.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from numbers import Rational as _AbstractRational

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

ROSTER = (
    "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3",
    "d1", "d2", "d3", "u", "v", "P", "Q", "S", "T",
)

_RATIONAL_TYPES = (int, Fraction, type(Rational(0)))


class NotAMonomialUnit(ArithmeticError):
    """Raised when inverting something that is not a unit of the localization."""


class ZeroDenominator(ZeroDivisionError):
    """Raised when an evaluation would divide by zero."""


def as_rational(value):
    """Coerce an int/Fraction/mpq to the package's rational type."""
    if isinstance(value, ParamFraction):
        raise TypeError("expected a rational, got a parameter fraction")
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int or a fraction")
    if isinstance(value, _AbstractRational) or isinstance(value, _RATIONAL_TYPES):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def format_rational(q) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RationalField:
    """The coefficient domain of numeric polynomials."""

    symbolic = False
    name = "QQ"

    def __call__(self, value):
        return as_rational(value)

    @property
    def zero(self):
        return Rational(0)

    @property
    def one(self):
        return Rational(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ParamField:
    """Q[roster] localized at the monomials in the invertible symbols.

    Two fields are equal when both the roster and the invertible set agree;
    arithmetic between elements of different fields is refused.
    """

    symbolic = True

    def __init__(self, invertible=(), roster=ROSTER):
        self.roster = tuple(roster)
        if len(set(self.roster)) != len(self.roster):
            raise ValueError("roster names must be unique")
        self.index = {name: i for i, name in enumerate(self.roster)}
        unknown = set(invertible) - set(self.roster)
        if unknown:
            raise ValueError(f"unknown invertible symbols: {sorted(unknown)}")
        self.invertible = frozenset(invertible)
        self.inv_positions = tuple(sorted(self.index[n] for n in self.invertible))
        self.zero_exp = (0,) * len(self.roster)

    def __eq__(self, other):
        return (isinstance(other, ParamField) and self.roster == other.roster
                and self.invertible == other.invertible)

    def __hash__(self):
        return hash((self.roster, self.invertible))

    def __repr__(self):
        inv = ",".join(n for n in self.roster if n in self.invertible)
        return f"ParamField(invertible={{{inv}}})"

    def __call__(self, value) -> ParamFraction:
        if isinstance(value, ParamFraction):
            if value.field != self:
                raise ValueError("parameter fraction belongs to a different field")
            return value
        q = as_rational(value)
        if not q:
            return ParamFraction(self, {}, self.zero_exp, _trusted=True)
        return ParamFraction(self, {self.zero_exp: q}, self.zero_exp, _trusted=True)

    @property
    def zero(self) -> ParamFraction:
        return self(0)

    @property
    def one(self) -> ParamFraction:
        return self(1)

    def symbol(self, name: str) -> ParamFraction:
        exp = [0] * len(self.roster)
        exp[self.index[name]] = 1
        return ParamFraction(self, {tuple(exp): Rational(1)}, self.zero_exp, _trusted=True)

    def symbols(self, names):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return tuple(self.symbol(n) for n in names)

    def namespace(self) -> dict:
        return {name: self.symbol(name) for name in self.roster}

    def parse(self, text: str, namespace=None) -> ParamFraction:
        """Evaluate an arithmetic expression over this field.

        Names resolve through ``namespace`` first and then the roster.
        """
        env = self.namespace()
        if namespace:
            env.update(namespace)
        return self(evaluate_expression(text, env, self))


def _shift(exp, delta):
    return tuple(a + b for a, b in zip(exp, delta))


class ParamFraction:
    """A numerator polynomial over Q divided by an invertible monomial.

    ``num`` maps exponent tuples (one slot per roster symbol) to nonzero
    rationals; ``den`` is an exponent tuple supported on invertible symbols.
    Instances are immutable and kept in normal form.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: ParamField, num: dict, den: tuple, _trusted=False):
        if not _trusted:
            num = {tuple(e): as_rational(c) for e, c in num.items() if c}
            den = tuple(den)
            for i, e in enumerate(den):
                if e < 0:
                    raise ValueError("denominator exponents must be non-negative")
                if e and field.roster[i] not in field.invertible:
                    raise ValueError(f"{field.roster[i]} is not invertible")
        self.field = field
        self.num, self.den = _normalize(field, num, den)
        self._hash = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_rational(self) -> bool:
        if not any(self.den):
            return not self.num or list(self.num) == [self.field.zero_exp]
        return False

    def to_rational(self):
        if not self.num:
            return Rational(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        return self.num[self.field.zero_exp]

    def is_unit(self) -> bool:
        """True for c * monomial with c != 0 and every symbol invertible."""
        if len(self.num) != 1:
            return False
        (exp,) = self.num
        return all(e == 0 or self.field.roster[i] in self.field.invertible
                   for i, e in enumerate(exp))

    def symbols(self) -> set:
        names = set()
        for exp in list(self.num) + [self.den]:
            names.update(self.field.roster[i] for i, e in enumerate(exp) if e)
        return names

    def _coerce(self, other):
        if isinstance(other, ParamFraction):
            if other.field != self.field:
                raise ValueError("parameter fractions over different fields")
            return other
        if isinstance(other, _RATIONAL_TYPES) or isinstance(other, _AbstractRational):
            return self.field(other)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = dict(self.num)
            for e, c in other.num.items():
                s = num.get(e, 0) + c
                if s:
                    num[e] = s
                else:
                    num.pop(e, None)
            return ParamFraction(self.field, num, self.den, _trusted=True)
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        num = {}
        for src in (self, other):
            lift = tuple(a - b for a, b in zip(den, src.den))
            for e, c in src.num.items():
                k = _shift(e, lift)
                s = num.get(k, 0) + c
                if s:
                    num[k] = s
                else:
                    num.pop(k, None)
        return ParamFraction(self.field, num, den, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return ParamFraction(self.field, {e: -c for e, c in self.num.items()},
                             self.den, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return self.field.zero
        num = {}
        for e1, c1 in self.num.items():
            for e2, c2 in other.num.items():
                k = _shift(e1, e2)
                s = num.get(k, 0) + c1 * c2
                if s:
                    num[k] = s
                else:
                    num.pop(k, None)
        return ParamFraction(self.field, num, _shift(self.den, other.den), _trusted=True)

    __rmul__ = __mul__

    def invert_monomial(self) -> ParamFraction:
        """Return 1/self; only units of the localization can be inverted."""
        if not self.is_unit():
            raise NotAMonomialUnit(f"cannot invert {self}")
        ((exp, c),) = self.num.items()
        return ParamFraction(self.field, {self.den: 1 / c}, exp, _trusted=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            q = other.to_rational()
            if not q:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * other.invert_monomial()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert_monomial() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, ParamFraction) else other
        if not isinstance(other, ParamFraction):
            return NotImplemented
        return (self.field == other.field and self.den == other.den
                and self.num == other.num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.den, frozenset(self.num.items())))
        return self._hash

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment):
        """Exact value at ``assignment`` (symbol name -> rational)."""
        roster = self.field.roster
        values = {}

        def value(i):
            if i not in values:
                name = roster[i]
                if name not in assignment:
                    raise KeyError(f"no value assigned to {name}")
                values[i] = as_rational(assignment[name])
            return values[i]

        den = Rational(1)
        for i, e in enumerate(self.den):
            if e:
                v = value(i)
                if not v:
                    raise ZeroDenominator(f"{roster[i]} assigned 0 but divides {self}")
                den *= v ** e
        total = Rational(0)
        for exp, c in self.num.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    term *= value(i) ** e
            total += term
        return total / den

    def substitute(self, mapping) -> ParamFraction:
        """Replace symbols by field elements (name -> ParamFraction/rational)."""
        env = {n: self.field.symbol(n) for n in self.field.roster}
        for k, v in mapping.items():
            env[k] = self.field(v)
        roster = self.field.roster
        total = self.field.zero
        for exp, c in self.num.items():
            term = self.field(c)
            for i, e in enumerate(exp):
                if e:
                    term = term * env[roster[i]] ** e
            total = total + term
        for i, e in enumerate(self.den):
            if e:
                total = total / env[roster[i]] ** e
        return total

    # -- text --------------------------------------------------------------

    def _monomial_text(self, exp) -> str:
        parts = []
        for i, e in enumerate(exp):
            if e == 1:
                parts.append(self.field.roster[i])
            elif e:
                parts.append(f"{self.field.roster[i]}^{e}")
        return "*".join(parts)

    def _numerator_terms(self):
        for exp in sorted(self.num, reverse=True):
            yield exp, self.num[exp]

    def numerator_text(self) -> str:
        if not self.num:
            return "0"
        pieces = []
        for exp, c in self._numerator_terms():
            mono = self._monomial_text(exp)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __str__(self):
        num = self.numerator_text()
        if not any(self.den):
            return num
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num} / {self._monomial_text(self.den)}"

    def __repr__(self):
        return f"ParamFraction({self})"

    def to_json(self):
        """Lossless structured form: numerator term list and denominator map."""
        roster = self.field.roster
        return {
            "num": [[{roster[i]: e for i, e in enumerate(exp) if e}, format_rational(c)]
                    for exp, c in self._numerator_terms()],
            "den": {roster[i]: e for i, e in enumerate(self.den) if e},
        }


def _normalize(field, num, den):
    if not num:
        return {}, field.zero_exp
    if not any(den):
        return num, den
    cut = [0] * len(den)
    for i in field.inv_positions:
        if den[i]:
            cut[i] = min(den[i], min(e[i] for e in num))
    if not any(cut):
        return num, den
    neg = tuple(-c for c in cut)
    num = {_shift(e, neg): c for e, c in num.items()}
    return num, _shift(den, neg)


def equals(a: ParamFraction, b) -> bool:
    return (a - b).is_zero()


def invert_monomial(a: ParamFraction) -> ParamFraction:
    return a.invert_monomial()


def evaluate(a, assignment):
    if isinstance(a, ParamFraction):
        return a.evaluate(assignment)
    return as_rational(a)


def format_coeff(c):
    """Split a coefficient into (negative, body, is_one) for term printing.

    ``body`` is the magnitude text; composite parameter fractions come back
    parenthesized with ``negative`` False.
    """
    if isinstance(c, ParamFraction):
        if len(c.num) == 1 and not any(c.den):
            ((exp, q),) = c.num.items()
            mono = c._monomial_text(exp)
            mag = abs(q)
            if not mono:
                return q < 0, format_rational(mag), mag == 1
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            return q < 0, body, False
        if len(c.num) == 1:
            ((exp, q),) = c.num.items()
            if q < 0:
                return True, f"({-c})", False
        return False, f"({c})", False
    q = as_rational(c)
    return q < 0, format_rational(abs(q)), abs(q) == 1


def coeff_to_json(c):
    if isinstance(c, ParamFraction):
        return c.to_json()
    return format_rational(c)


# -- expression evaluation ---------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}


def evaluate_expression(text: str, namespace: dict, convert=as_rational):
    """Evaluate ``text`` (``^`` or ``**`` for powers) with exact literals.

    Only names, integer literals and + - * / ** are accepted, so the input is
    never executed as Python.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return convert(node.value)
        if isinstance(node, ast.Name):
            if node.id not in namespace:
                raise NameError(f"unknown name {node.id!r} in {text!r}")
            return namespace[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow):
                right = _exponent(right)
            return _BINOPS[type(node.op)](left, right)
        raise ValueError(f"unsupported syntax in {text!r}: {ast.dump(node)}")

    return ev(tree)


def _exponent(value) -> int:
    if isinstance(value, ParamFraction):
        value = value.to_rational()
    q = as_rational(value)
    if q.denominator != 1:
        raise ValueError("exponents must be integers")
    return int(q.numerator)
