"""c-semiring algebra: boolean, fuzzy and weighted instances plus Cartesian products.

All arithmetic is exact (fractions.Fraction); the weighted carrier carries an
explicit infinity marker.  The induced preference order is exposed only through
the predicates leq / strictly_less / incomparable: for the weighted instance
the preference order is the reverse of the numeric order on costs, and leaking
a numeric score would invite sign bugs.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import CarrierMismatchError, ValidationError


class _Infinity:
    """The weighted semiring's absorbing cost (its 0 element)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()

KINDS = ("boolean", "fuzzy", "weighted", "product")


@dataclass(frozen=True)
class SemiringSpec:
    kind: str
    factors: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError("unknown semiring kind %r" % (self.kind,))
        if self.kind == "product":
            if not self.factors:
                raise ValidationError("product semiring needs at least one factor")
            for f in self.factors:
                if not isinstance(f, SemiringSpec):
                    raise ValidationError("product factor is not a SemiringSpec")
        elif self.factors:
            raise ValidationError("%s semiring takes no factors" % self.kind)


BOOLEAN = SemiringSpec("boolean")
FUZZY = SemiringSpec("fuzzy")
WEIGHTED = SemiringSpec("weighted")


def product(*factors):
    return SemiringSpec("product", tuple(factors))


@dataclass(frozen=True)
class SemiringValue:
    spec: SemiringSpec
    payload: object

    def __repr__(self):
        return "SemiringValue(%s)" % (format_payload(self.payload),)


def _coerce_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        # decimal literals like 0.4 are meant exactly
        return Fraction(str(x))
    raise ValidationError("cannot read %r as an exact rational" % (x,))


def value(spec, payload):
    """Build a validated carrier element of `spec`."""
    return SemiringValue(spec, _check_payload(spec, payload))


def _check_payload(spec, payload):
    if spec.kind == "boolean":
        if payload in (0, 1, False, True):
            return bool(payload)
        raise CarrierMismatchError("boolean carrier is {0,1}, got %r" % (payload,))
    if spec.kind == "fuzzy":
        q = _coerce_rational(payload)
        if not 0 <= q <= 1:
            raise CarrierMismatchError("fuzzy carrier is [0,1], got %s" % (q,))
        return q
    if spec.kind == "weighted":
        if payload is INF:
            return INF
        q = _coerce_rational(payload)
        if q < 0:
            raise CarrierMismatchError("weighted carrier is non-negative, got %s" % (q,))
        return q
    # product
    if not isinstance(payload, (tuple, list)) or len(payload) != len(spec.factors):
        raise CarrierMismatchError(
            "product payload must have arity %d, got %r" % (len(spec.factors), payload)
        )
    parts = []
    for f, p in zip(spec.factors, payload):
        parts.append(_check_payload(f, p.payload if isinstance(p, SemiringValue) else p))
    return tuple(parts)


def zero(spec):
    if spec.kind == "boolean":
        return value(spec, False)
    if spec.kind == "fuzzy":
        return value(spec, 0)
    if spec.kind == "weighted":
        return value(spec, INF)
    return SemiringValue(spec, tuple(zero(f).payload for f in spec.factors))


def one(spec):
    if spec.kind == "boolean":
        return value(spec, True)
    if spec.kind == "fuzzy":
        return value(spec, 1)
    if spec.kind == "weighted":
        return value(spec, 0)
    return SemiringValue(spec, tuple(one(f).payload for f in spec.factors))


def _require(spec, v, side=""):
    if not isinstance(v, SemiringValue) or v.spec != spec:
        raise CarrierMismatchError(
            "value %r does not belong to the %s carrier%s"
            % (v, spec.kind, " (%s)" % side if side else "")
        )


def _combine_payload(spec, a, b):
    if spec.kind == "boolean":
        return a and b
    if spec.kind == "fuzzy":
        return min(a, b)
    if spec.kind == "weighted":
        if a is INF or b is INF:
            return INF
        return a + b
    return tuple(
        _combine_payload(f, x, y) for f, x, y in zip(spec.factors, a, b)
    )


def combine(spec, a, b):
    """The multiplicative operator: and / min / cost sum / componentwise."""
    _require(spec, a, "left")
    _require(spec, b, "right")
    return SemiringValue(spec, _combine_payload(spec, a.payload, b.payload))


def _plus_payload(spec, a, b):
    if spec.kind == "boolean":
        return a or b
    if spec.kind == "fuzzy":
        return max(a, b)
    if spec.kind == "weighted":
        if a is INF:
            return b
        if b is INF:
            return a
        return min(a, b)
    return tuple(_plus_payload(f, x, y) for f, x, y in zip(spec.factors, a, b))


def plus(spec, a, b):
    """The additive operator; induces the preference order a <= b iff a+b = b."""
    _require(spec, a, "left")
    _require(spec, b, "right")
    return SemiringValue(spec, _plus_payload(spec, a.payload, b.payload))


def leq(spec, a, b):
    """a <= b in the induced order (b is at least as preferred as a)."""
    _require(spec, a, "left")
    _require(spec, b, "right")
    return _plus_payload(spec, a.payload, b.payload) == b.payload


def strictly_less(spec, a, b):
    return leq(spec, a, b) and a.payload != b.payload


def incomparable(spec, a, b):
    return not leq(spec, a, b) and not leq(spec, b, a)


def is_linear(spec):
    """Whether the induced order is total."""
    return spec.kind != "product"


def is_strictly_monotonic(spec):
    """Whether a < b implies c x a < c x b.

    Holds for the weighted instance (cost addition), fails for fuzzy (min)
    and boolean (and); products are not linearly ordered so they are out.
    """
    return spec.kind == "weighted"


def combine_all(spec, values):
    acc = one(spec)
    for v in values:
        acc = combine(spec, acc, v)
    return acc


def validate_axioms(spec, sample, combine_op=None, plus_op=None):
    """Check the c-semiring axioms on every pair/triple from `sample`.

    Returns a list of human-readable violations (empty for the built-in
    instances).  Custom operators may be injected to test detection.
    """
    comb = combine_op or (lambda a, b: combine(spec, a, b))
    add = plus_op or (lambda a, b: plus(spec, a, b))
    z, u = zero(spec), one(spec)
    out = []

    def eq(x, y):
        return x.payload == y.payload

    for a in sample:
        if not eq(add(a, a), a):
            out.append("+ not idempotent at %r" % (a,))
        if not eq(add(a, z), a):
            out.append("0 not a unit of + at %r" % (a,))
        if not eq(add(a, u), u):
            out.append("1 not absorbing for + at %r" % (a,))
        if not eq(comb(a, u), a):
            out.append("1 not a unit of x at %r" % (a,))
        if not eq(comb(a, z), z):
            out.append("0 not absorbing for x at %r" % (a,))
    for a in sample:
        for b in sample:
            if not eq(add(a, b), add(b, a)):
                out.append("+ not commutative at %r, %r" % (a, b))
            if not eq(comb(a, b), comb(b, a)):
                out.append("x not commutative at %r, %r" % (a, b))
            for c in sample:
                if not eq(add(add(a, b), c), add(a, add(b, c))):
                    out.append("+ not associative at %r, %r, %r" % (a, b, c))
                if not eq(comb(comb(a, b), c), comb(a, comb(b, c))):
                    out.append("x not associative at %r, %r, %r" % (a, b, c))
                if not eq(comb(a, add(b, c)), add(comb(a, b), comb(a, c))):
                    out.append("x does not distribute over + at %r, %r, %r" % (a, b, c))
    return out


def format_payload(payload):
    """Canonical text form: fractions as p/q, infinity as 'inf'."""
    if isinstance(payload, bool):
        return "1" if payload else "0"
    if payload is INF:
        return "inf"
    if isinstance(payload, Fraction):
        return "%d/%d" % (payload.numerator, payload.denominator) \
            if payload.denominator != 1 else str(payload.numerator)
    if isinstance(payload, tuple):
        return "<" + ",".join(format_payload(p) for p in payload) + ">"
    raise ValidationError("unprintable payload %r" % (payload,))


def parse_payload(spec, text):
    """Inverse of format_payload for non-product specs; products take lists."""
    if spec.kind == "boolean":
        if text in ("0", "1", 0, 1, False, True):
            return _check_payload(spec, int(text))
        raise ValidationError("boolean value must be 0 or 1, got %r" % (text,))
    if spec.kind == "product":
        if not isinstance(text, (list, tuple)) or len(text) != len(spec.factors):
            raise ValidationError("product value must be a list of arity %d" % len(spec.factors))
        return tuple(parse_payload(f, t) for f, t in zip(spec.factors, text))
    if text == "inf":
        if spec.kind != "weighted":
            raise ValidationError("'inf' only belongs to the weighted carrier")
        return INF
    return _check_payload(spec, text)
