"""The quantum algebra on the ordered generators u0, u1, u2, u3.

Elements are finite combinations of normal-ordered monomials
u3^a3 * u2^a2 * u1^a1 * u0^a0 with LaurentQ coefficients.  Multiplication
straightens arbitrary products with the defining relations

    u_i u_{i+1} = q^-2 u_{i+1} u_i                      (i = 0, 1, 2)
    u_i u_{i+2} = q^-2 u_{i+2} u_i + (q^-2 - 1) u_{i+1}^2   (i = 0, 1)
    u_0 u_3     = q^-2 u_3 u_0 + (q^-4 - 1) u_2 u_1

applied left-to-right wherever a lower-index generator stands immediately
left of a higher-index one.  Each rewrite strictly decreases the weighted
inversion count sum(j - i) over inverted pairs, so reduction terminates;
confluence is exercised by the associativity tests.

Exponent vectors are tuples (a3, a2, a1, a0).  The root weight of slot i
is (i+1, i) in the (alpha1, alpha2) coordinates, and products add root
weights, which multiplication preserves.
"""

from __future__ import annotations

from fractions import Fraction

from .qarith import LaurentQ, QFrac, lq_one, qpow, quantum_factorial

Exp = tuple  # (a3, a2, a1, a0)

# root weight of generator i in (alpha1, alpha2) coordinates
ROOT_WEIGHT = ((1, 0), (2, 1), (3, 2), (4, 3))

_ONE = lq_one()
_QM2 = qpow(-2)
_CORR2 = qpow(-2) - 1       # coefficient of u_{i+1}^2 in the distance-2 rule
_CORR3 = qpow(-4) - 1       # coefficient of u_2 u_1 in the distance-3 rule

_ZERO_EXP = (0, 0, 0, 0)


def _slot(i: int) -> int:
    return 3 - i


def _last_letter(a: Exp):
    """Rightmost generator index of the normal word for a, or None."""
    if a[3]:
        return 0
    if a[2]:
        return 1
    if a[1]:
        return 2
    if a[0]:
        return 3
    return None


def _inc(a: Exp, i: int) -> Exp:
    s = _slot(i)
    return a[:s] + (a[s] + 1,) + a[s + 1:]


def _dec(a: Exp, i: int) -> Exp:
    s = _slot(i)
    return a[:s] + (a[s] - 1,) + a[s + 1:]


# straightening memo; writes are idempotent (a key always maps to the same
# value), so concurrent use stays deterministic under the GIL
_GEN_CACHE: dict = {}


def _terms_times_gen(terms: dict, j: int) -> dict:
    out = {}
    for a, c in terms.items():
        for b, d in _mono_times_gen(a, j).items():
            v = out.get(b)
            v = c * d if v is None else v + c * d
            if v:
                out[b] = v
            elif b in out:
                del out[b]
    return out


def _mono_times_gen(a: Exp, j: int) -> dict:
    """Normal form of (normal monomial a) * u_j as an exp -> coeff dict."""
    key = (a, j)
    hit = _GEN_CACHE.get(key)
    if hit is not None:
        return hit
    i = _last_letter(a)
    if i is None or i >= j:
        res = {_inc(a, j): _ONE}
    else:
        head = _dec(a, i)
        res = {b: _QM2 * c for b, c in _terms_times_gen(_mono_times_gen(head, j), i).items()}
        if j - i == 2:
            corr = _terms_times_gen(_terms_times_gen({head: _ONE}, i + 1), i + 1)
            scale = _CORR2
        elif j - i == 3:
            corr = _terms_times_gen(_terms_times_gen({head: _ONE}, 2), 1)
            scale = _CORR3
        else:
            corr = None
            scale = None
        if corr:
            for b, c in corr.items():
                v = res.get(b)
                v = scale * c if v is None else v + scale * c
                if v:
                    res[b] = v
                elif b in res:
                    del res[b]
    _GEN_CACHE[key] = res
    return res


class PbwElement:
    """A linear combination of normal-ordered monomials in u0..u3.

    Coefficients are LaurentQ values; divided powers may carry QFrac
    coefficients, which interoperate but fail the integrality checks the
    dual-canonical pipeline runs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for a, c in terms.items():
                if c:
                    t[a] = c
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        self.terms = terms
        return self

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = scalar(other)
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((a, c) for a, c in self.terms.items()))

    def __neg__(self):
        return PbwElement._raw({a: -c for a, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = scalar(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = out.get(a)
            if v is None:
                out[a] = c
            else:
                v = v + c
                if v:
                    out[a] = v
                else:
                    del out[a]
        return PbwElement._raw(out)

    def __sub__(self, other):
        if isinstance(other, int):
            other = scalar(other)
        return self + (-other)

    def scale(self, c) -> "PbwElement":
        """Multiply by a central coefficient (LaurentQ, QFrac or rational)."""
        if isinstance(c, (int, Fraction)):
            c = LaurentQ.from_rational(c)
        if not c:
            return PbwElement._raw({})
        return PbwElement._raw({a: c * v for a, v in self.terms.items()})

    def scale_qpow(self, k: int) -> "PbwElement":
        """Multiply by q^k."""
        return self.scale(qpow(k))

    def times_gen(self, i: int) -> "PbwElement":
        """Right multiplication by the generator u_i."""
        return PbwElement._raw(_terms_times_gen(self.terms, i))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, (LaurentQ, QFrac, Fraction)):
            return self.scale(other)
        if not isinstance(other, PbwElement):
            return NotImplemented
        out = {}
        for b, c in other.terms.items():
            t = self.terms
            for i, e in zip((3, 2, 1, 0), b):
                for _ in range(e):
                    t = _terms_times_gen(t, i)
            for a, d in t.items():
                v = out.get(a)
                v = c * d if v is None else v + c * d
                if v:
                    out[a] = v
                elif a in out:
                    del out[a]
        return PbwElement._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ, QFrac, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("the algebra has no inverses")
        out = one()
        for _ in range(k):
            out = out * self
        return out

    # -- structure ----------------------------------------------------------

    def root_weight(self):
        """Common root weight of all monomials, or None if inhomogeneous."""
        w = None
        for a in self.terms:
            wa = exp_root_weight(a)
            if w is None:
                w = wa
            elif w != wa:
                return None
        return w

    def is_homogeneous(self) -> bool:
        return not self.terms or self.root_weight() is not None

    def is_integral(self) -> bool:
        return all(isinstance(c, LaurentQ) and c.is_integral() for c in self.terms.values())

    def sigma(self) -> "PbwElement":
        """The ring anti-automorphism with sigma(q) = q^-1 and
        sigma(u_i) = q^(2i) u_i: bar the coefficients, reverse each word and
        re-straighten."""
        out = PbwElement._raw({})
        for a, c in self.terms.items():
            a3, a2, a1, a0 = a
            t = {_ZERO_EXP: _ONE}
            for i, e in zip((0, 1, 2, 3), (a0, a1, a2, a3)):
                for _ in range(e):
                    t = _terms_times_gen(t, i)
            piece = PbwElement._raw(dict(t)).scale(c.bar() * qpow(2 * (3 * a3 + 2 * a2 + a1)))
            out = out + piece
        return out

    def specialize_q1(self):
        """Image in the commutative polynomial ring Q[U0..U3] at q = 1."""
        from . import classical

        out = classical.CPoly()
        for a, c in self.terms.items():
            if isinstance(c, QFrac):
                c = c.as_laurent()
            if not c.is_integral():
                raise ValueError("element has odd half-powers of q; no q = 1 image")
            out = out + classical.u_monomial(a).scale(c.at_q1())
        return out

    # -- text and JSON forms --------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, reverse=True):
            c = self.terms[a]
            mono = _mono_str(a)
            neg = isinstance(c, LaurentQ) and c.terms and all(v < 0 for v in c.terms.values())
            if neg:
                c = -c
            if c == 1:
                body = mono
            elif mono == "1":
                body = f"({c})*1"
            else:
                body = f"({c})*{mono}"
            if not parts:
                parts.append(("-" + body) if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"PbwElement({self})"

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, reverse=True):
            c = self.terms[a]
            mono = "".join(
                f"u_{i}" + (f"^{{{e}}}" if e > 1 else "")
                for i, e in zip((3, 2, 1, 0), a) if e
            ) or "1"
            neg = isinstance(c, LaurentQ) and c.terms and all(v < 0 for v in c.terms.values())
            if neg:
                c = -c
            cl = c.to_latex() if isinstance(c, LaurentQ) else str(c)
            body = mono if c == 1 else f"({cl}){mono}"
            sign = "-" if neg else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"exp": list(a), "coef": str(self.terms[a])}
                for a in sorted(self.terms, reverse=True)
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PbwElement":
        return cls({tuple(t["exp"]): LaurentQ.parse(t["coef"]) for t in data["terms"]})

    @classmethod
    def parse(cls, s: str) -> "PbwElement":
        """Parse the canonical text form produced by ``str``."""
        s = s.strip()
        if s == "0":
            return cls()
        out = {}
        for tok, sign in _split_top(s):
            coef, mono = _parse_term(tok)
            c = coef if sign > 0 else -coef
            prev = out.get(mono)
            out[mono] = c if prev is None else prev + c
        return cls(out)


def _mono_str(a: Exp) -> str:
    parts = []
    for i, e in zip((3, 2, 1, 0), a):
        if e == 1:
            parts.append(f"u{i}")
        elif e > 1:
            parts.append(f"u{i}^{e}")
    return "*".join(parts) if parts else "1"


def _split_top(s: str):
    """Split on top-level ' + ' / ' - ' outside parentheses."""
    tokens = []
    depth = 0
    buf = []
    sign = 1
    i = 0
    if s.startswith("-"):
        sign = -1
        i = 1
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and i > 0 and s[i - 1] == " " and i + 1 < len(s) and s[i + 1] == " ":
            tokens.append(("".join(buf).strip(), sign))
            buf = []
            sign = 1 if ch == "+" else -1
            i += 2
            continue
        buf.append(ch)
        i += 1
    tokens.append(("".join(buf).strip(), sign))
    return tokens


def _parse_term(tok: str):
    coef = _ONE
    rest = tok
    if tok.startswith("("):
        depth = 0
        for i, ch in enumerate(tok):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    coef = LaurentQ.parse(tok[1:i])
                    rest = tok[i + 1:].lstrip("*")
                    break
    a = [0, 0, 0, 0]
    rest = rest.strip()
    if rest and rest != "1":
        for factor in rest.split("*"):
            factor = factor.strip()
            if "^" in factor:
                name, e = factor.split("^")
                e = int(e)
            else:
                name, e = factor, 1
            if not name.startswith("u") or name[1:] not in "0123":
                raise ValueError(f"bad generator {factor!r}")
            a[_slot(int(name[1:]))] += e
    return coef, tuple(a)


# -- constructors -------------------------------------------------------------


def zero() -> PbwElement:
    return PbwElement._raw({})


def one() -> PbwElement:
    return PbwElement._raw({_ZERO_EXP: _ONE})


def scalar(c) -> PbwElement:
    if isinstance(c, (int, Fraction)):
        c = LaurentQ.from_rational(c)
    return PbwElement({_ZERO_EXP: c})


def generator(i: int) -> PbwElement:
    """The generator u_i (0 <= i <= 3)."""
    if not 0 <= i <= 3:
        raise ValueError("generator index must be 0..3")
    return PbwElement._raw({_inc(_ZERO_EXP, i): _ONE})


def monomial(a: Exp, coef=None) -> PbwElement:
    if any(e < 0 for e in a):
        raise ValueError("negative exponent")
    return PbwElement({tuple(a): coef if coef is not None else _ONE})


def p0() -> PbwElement:
    """The quantized frozen variable p0 = u2 u0 - q^2 u1^2."""
    return PbwElement._raw({(0, 1, 0, 1): _ONE, (0, 0, 2, 0): -qpow(2)})


def p1() -> PbwElement:
    """The quantized frozen variable p1 = u3 u1 - q^2 u2^2."""
    return PbwElement._raw({(1, 0, 1, 0): _ONE, (0, 2, 0, 0): -qpow(2)})


def divided_power(i: int, k: int) -> PbwElement:
    """u_i^k / [k]!; the coefficient is a QFrac for k >= 2."""
    if k < 0:
        raise ValueError("needs k >= 0")
    if k == 0:
        return one()
    a = _ZERO_EXP[:_slot(i)] + (k,) + _ZERO_EXP[_slot(i) + 1:]
    coef = QFrac(_ONE, quantum_factorial(k))
    if coef.is_laurent():
        return PbwElement({a: coef.as_laurent()})
    return PbwElement({a: coef})


def exp_total(a: Exp) -> int:
    return a[0] + a[1] + a[2] + a[3]


def exp_root_weight(a: Exp):
    a3, a2, a1, a0 = a
    return (4 * a3 + 3 * a2 + 2 * a1 + a0, 3 * a3 + 2 * a2 + a1)


def word_product(letters) -> PbwElement:
    """Straightened product u_{i_1} u_{i_2} ... for a letter sequence."""
    t = {_ZERO_EXP: _ONE}
    for i in letters:
        t = _terms_times_gen(t, i)
    return PbwElement._raw(dict(t))


def verify_normal_form(seed: int = 0) -> list:
    """Internal consistency of the normal-form calculus: the relation table,
    associativity over all generator triples and seeded random elements
    (an empirical confluence certificate), the p0/p1 commutation table, the
    u1 u3^l identity, and the anti-automorphism laws for sigma."""
    import random

    rng = random.Random(seed)
    report = []

    def entry(identity, ok, n=0):
        report.append({"suite": "straightening", "n": n, "identity": identity, "ok": bool(ok)})

    u = [generator(i) for i in range(4)]
    ok = (u[0] * u[1] == (u[1] * u[0]).scale_qpow(-2)
          and u[1] * u[2] == (u[2] * u[1]).scale_qpow(-2)
          and u[2] * u[3] == (u[3] * u[2]).scale_qpow(-2)
          and u[0] * u[2] == (u[2] * u[0]).scale_qpow(-2) + (u[1] * u[1]).scale(qpow(-2) - 1)
          and u[1] * u[3] == (u[3] * u[1]).scale_qpow(-2) + (u[2] * u[2]).scale(qpow(-2) - 1)
          and u[0] * u[3] == (u[3] * u[0]).scale_qpow(-2) + (u[2] * u[1]).scale(qpow(-4) - 1))
    entry("defining straightening relations", ok)
    ok = all((x * y) * z == x * (y * z) for x in u for y in u for z in u)
    entry("associativity on all 64 generator triples", ok)

    def rand_elem():
        t = {}
        for _ in range(rng.randint(1, 3)):
            a = tuple(rng.randint(0, 2) for _ in range(4))
            t[a] = qpow(rng.randint(-3, 3)) * rng.randint(-4, 4) + qpow(rng.randint(-2, 2))
        return PbwElement(t)

    ok = True
    for _ in range(8):
        x, y, z = rand_elem(), rand_elem(), rand_elem()
        if (x * y) * z != x * (y * z):
            ok = False
        if (x * y).sigma() != y.sigma() * x.sigma() or x.sigma().sigma() != x:
            ok = False
        xw = (x * y).root_weight()
        if x.is_homogeneous() and y.is_homogeneous() and x and y and xw is None:
            ok = False
    entry("randomized associativity, sigma anti-homomorphism, homogeneity", ok)

    q0, q1 = p0(), p1()
    ok = q0 * q1 == (q1 * q0).scale_qpow(-4)
    for p, exps in ((q0, (2, 0, -2, -4)), (q1, (4, 2, 0, -2))):
        for g, e in zip(u, exps):
            ok = ok and p * g == (g * p).scale_qpow(e)
    entry("p0/p1 q-commutation table", ok)

    ok = True
    for l in range(1, 11):
        u3l = monomial((l, 0, 0, 0))
        lhs = u[1] * u3l
        rhs = (u3l * u[1]).scale_qpow(-2 * l) + \
            (monomial((l - 1, 0, 0, 0)) * u[2] * u[2]).scale(qpow(-4 * l + 2) - qpow(-2 * l + 2))
        ok = ok and lhs == rhs
    entry("u1 u3^l = q^(-2l) u3^l u1 + (q^(-4l+2)-q^(-2l+2)) u3^(l-1) u2^2, l <= 10", ok)
    return report
