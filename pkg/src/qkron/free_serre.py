"""Free algebra on E1, E2 and membership testing in the quantum Serre ideal.

This module certifies the straightening relations independently of the
rewrite rules the normal-form calculus adopts: each relation, written in
the free algebra through the commutator construction of the generators,
must lie in the two-sided ideal generated by the two degree-four Serre
relators.  Membership in a fixed weight component is a finite linear
algebra problem over the spanning set {w * S * w' : S in {S1, S2}}.

Exact mode eliminates over the fraction field of Laurent polynomials and
returns a certificate; probabilistic mode solves over Q at several seeded
integer values of q, reporting membership iff every evaluation succeeds.

Words are tuples over the alphabet {1, 2} (the letters E1, E2); the weight
of a word is (#E1, #E2), additive under concatenation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .qarith import LaurentQ, QFrac, lq_one, qpow, quantum_int

E1, E2 = 1, 2


def weight(word) -> tuple:
    return (sum(1 for c in word if c == E1), sum(1 for c in word if c == E2))


class FreeElement:
    """A linear combination of words in E1, E2; coefficients are LaurentQ
    or QFrac values and may be mixed term by term."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in terms.items():
                if c:
                    t[tuple(w)] = c
        self.terms = t

    @classmethod
    def word(cls, letters, coef=None):
        return cls({tuple(letters): coef if coef is not None else lq_one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = QFrac(0)
        return all(
            QFrac(self.terms.get(w, 0)) - QFrac(other.terms.get(w, 0)) == zero
            for w in keys
        )

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        return FreeElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ, QFrac)):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = out.get(w)
                v = c if v is None else v + c
                if v:
                    out[w] = v
                elif w in out:
                    del out[w]
        return FreeElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ, QFrac)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "FreeElement":
        if not c:
            return FreeElement()
        return FreeElement({w: c * v for w, v in self.terms.items()})

    def weight(self):
        """The common weight of all words, or None if inhomogeneous."""
        w = None
        for word in self.terms:
            ww = weight(word)
            if w is None:
                w = ww
            elif w != ww:
                return None
        return w

    def is_homogeneous(self) -> bool:
        return not self.terms or self.weight() is not None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            name = "*".join(f"E{c}" for c in w) if w else "1"
            parts.append(f"({self.terms[w]})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FreeElement({self})"


def serre_relators():
    """The two quantum Serre relators, exactly as printed:
    S1 = E1^3 E2 - [3] E1^2 E2 E1 + [3] E1 E2 E1^2 - E2 E1^3 (weight (3,1)),
    S2 the same with the letters interchanged (weight (1,3))."""
    three = quantum_int(3)
    s1 = FreeElement({
        (1, 1, 1, 2): lq_one(),
        (1, 1, 2, 1): -three,
        (1, 2, 1, 1): three,
        (2, 1, 1, 1): -lq_one(),
    })
    s2 = FreeElement({
        (2, 2, 2, 1): lq_one(),
        (2, 2, 1, 2): -three,
        (2, 1, 2, 2): three,
        (1, 2, 2, 2): -lq_one(),
    })
    return s1, s2


def commutator_element():
    """A = (1/[2]) (E2 E1 - q^-2 E1 E2); the generators are iterated
    commutators with A."""
    inv2 = QFrac(1, quantum_int(2))
    return FreeElement({(2, 1): inv2, (1, 2): -inv2 * qpow(-2)})


def build_generators():
    """The four root vectors in the free algebra: v0 = E1, v1 by the
    printed divided-power formula, and v_{i+1} = A v_i - v_i A."""
    inv2 = QFrac(1, quantum_int(2))
    v0 = FreeElement.word((1,))
    v1 = FreeElement({
        (2, 1, 1): inv2,
        (1, 2, 1): -inv2 * (qpow(-2) + 1),
        (1, 1, 2): inv2 * qpow(-2),
    })
    a = commutator_element()
    v2 = a * v1 - v1 * a
    v3 = a * v2 - v2 * a
    return v0, v1, v2, v3


def scaled_generators():
    """W_i = [2]^i v_i: the same vectors with denominators cleared, so all
    coefficients are honest Laurent polynomials.  Every relation among the
    v_i is equivalent to the same relation among the W_i."""
    one = lq_one()
    w0 = FreeElement.word((1,))
    w1 = FreeElement({
        (2, 1, 1): one,
        (1, 1, 2): qpow(-2),
        (1, 2, 1): -(qpow(-2) + 1),
    })
    a2 = FreeElement({(2, 1): one, (1, 2): -qpow(-2)})
    w2 = a2 * w1 - w1 * a2
    w3 = a2 * w2 - w2 * a2
    return w0, w1, w2, w3


def words_of_weight(n1: int, n2: int):
    """All words with n1 letters E1 and n2 letters E2."""
    n = n1 + n2
    out = []
    for pos in combinations(range(n), n2):
        w = [1] * n
        for p in pos:
            w[p] = 2
        out.append(tuple(w))
    return out


def spanning_set(w: tuple):
    """The spanning elements u * S * u' of the ideal's weight component w.

    Returns a list of (label, element) where the label is
    (relator index, left word, right word)."""
    relators = serre_relators()
    rel_weights = ((3, 1), (1, 3))
    out = []
    for ridx, (s, ws) in enumerate(zip(relators, rel_weights)):
        r1, r2 = w[0] - ws[0], w[1] - ws[1]
        if r1 < 0 or r2 < 0:
            continue
        for a in range(r1 + 1):
            for b in range(r2 + 1):
                for left in words_of_weight(a, b):
                    lf = FreeElement.word(left)
                    for right in words_of_weight(r1 - a, r2 - b):
                        elem = lf * s * FreeElement.word(right)
                        out.append(((ridx, left, right), elem))
    return out


@dataclass
class MembershipResult:
    member: bool
    mode: str
    weight: tuple
    certificate: list | None = None  # exact mode: [(label, QFrac coefficient)]


DEFAULT_WEIGHT_CAP = 12
EXACT_DEFAULT_MAX_TOTAL = 8


def ideal_membership(x: FreeElement, mode: str | None = None, cap: int = DEFAULT_WEIGHT_CAP,
                     seed: int = 0, points: int = 5) -> MembershipResult:
    """Decide membership of a weight-homogeneous element in the two-sided
    quantum Serre ideal, within its weight component.

    mode "exact" eliminates over the fraction field and produces a
    certificate; "probabilistic" solves over Q at `points` seeded integer
    values of q and reports membership iff all evaluations succeed.  The
    default picks exact for total weight <= 8.
    """
    if mode not in (None, "exact", "probabilistic"):
        raise ValueError(f"unknown mode {mode!r}")
    if not x:
        return MembershipResult(True, mode or "exact", (0, 0), certificate=[])
    w = x.weight()
    if w is None:
        raise ValueError("ideal membership needs a weight-homogeneous element")
    if w[0] + w[1] > cap:
        raise ValueError(f"weight {w} exceeds the configured cap {cap}")
    if mode is None:
        mode = "exact" if w[0] + w[1] <= EXACT_DEFAULT_MAX_TOTAL else "probabilistic"
    span = spanning_set(w)
    if not span:
        return MembershipResult(False, mode, w)
    if mode == "exact":
        return _membership_exact(x, span, w)
    return _membership_probabilistic(x, span, w, seed, points)


def _to_laurent(c) -> LaurentQ:
    if isinstance(c, QFrac):
        return c.as_laurent()
    if isinstance(c, LaurentQ):
        return c
    return LaurentQ.from_rational(c)


def _clear_denominators(terms):
    """Scale a row with QFrac entries to pure Laurent coefficients;
    membership is invariant under scaling by a nonzero element.  Returns
    the scaled row and the factor applied."""
    common = lq_one()
    for c in terms.values():
        if isinstance(c, QFrac) and not c.is_laurent():
            try:
                common.exact_div(c.den)
            except ValueError:
                common = common * c.den
    out = {}
    for w, c in terms.items():
        if isinstance(c, QFrac):
            out[w] = c.num * common.exact_div(c.den)
        else:
            out[w] = _to_laurent(c) * common
    return out, common


def _strip_content(dicts):
    """Divide every LaurentQ entry of every dict by their common rational
    content and q-power shift, in place (keeps fraction-free rows small)."""
    from fractions import Fraction as F

    num_gcd = 0
    den_lcm = 1
    shift = None
    for d in dicts:
        for c in d.values():
            for h, v in c.terms.items():
                if shift is None or h < shift:
                    shift = h
                f = F(v)
                num_gcd = gcd(num_gcd, abs(f.numerator))
                den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
    if shift is None:
        return
    scale = F(den_lcm, num_gcd if num_gcd else 1)
    if scale == 1 and shift == 0:
        return
    for d in dicts:
        for k in list(d):
            c = d[k]
            d[k] = LaurentQ({h - shift: v * scale for h, v in c.terms.items()})


def _membership_exact(x, span, w) -> MembershipResult:
    # fraction-free elimination: rows keep LaurentQ entries throughout and
    # every pivot row remembers its expression over the spanning set
    basis = {}  # lead word -> (row dict word->LaurentQ, combo dict idx->LaurentQ)
    one = lq_one()
    for idx, (_label, elem) in enumerate(span):
        row = {word: _to_laurent(c) for word, c in elem.terms.items()}
        combo = {idx: one}
        row, combo, _scale = _laurent_reduce(row, combo, None, basis)
        if row:
            _strip_content((row, combo))
            basis[max(row)] = (row, combo)
    row, cleared = _clear_denominators(x.terms)
    row, combo, scale = _laurent_reduce(row, {}, one, basis)
    if row:
        return MembershipResult(False, "exact", w)
    cert = [(span[i][0], QFrac(-c, scale * cleared)) for i, c in combo.items() if c]
    return MembershipResult(True, "exact", w, certificate=cert)


def _laurent_reduce(row, combo, scale, basis):
    """Cross-multiplied reduction against the echelon basis.  Maintains the
    invariant row = scale * x + sum combo[j] * span_j (scale is None for
    rows that started life inside the span)."""
    while row:
        lw = max(row)
        piv = basis.get(lw)
        if piv is None:
            return row, combo, scale
        prow, pcombo = piv
        a, b = row[lw], prow[lw]
        new_row = {}
        for word, c in row.items():
            new_row[word] = b * c
        for word, c in prow.items():
            v = new_row.get(word, _LZERO) - a * c
            if v:
                new_row[word] = v
            elif word in new_row:
                del new_row[word]
        new_combo = {i: b * c for i, c in combo.items()}
        for i, c in pcombo.items():
            v = new_combo.get(i, _LZERO) - a * c
            if v:
                new_combo[i] = v
            elif i in new_combo:
                del new_combo[i]
        row, combo = new_row, new_combo
        if scale is not None:
            scale = b * scale
            if row:
                dicts = (row, combo, {0: scale})
                _strip_content(dicts)
                scale = dicts[2][0]
        elif row:
            _strip_content((row, combo))
    return row, combo, scale


_LZERO = LaurentQ._raw({})


def expand_certificate(certificate, span_lookup=None) -> FreeElement:
    """Rebuild sum coeff * (left * S * right) from a certificate."""
    s1, s2 = serre_relators()
    total = FreeElement()
    for (ridx, left, right), coef in certificate:
        s = s1 if ridx == 0 else s2
        total = total + (FreeElement.word(left) * s * FreeElement.word(right)).scale(coef)
    return total


def _eval_row_to_int(terms, t) -> dict:
    """Evaluate LaurentQ/QFrac coefficients at q = t and clear denominators
    to integers (scaling a row never changes the span)."""
    vals = {}
    denom_lcm = 1
    for k, c in terms.items():
        v = c.eval_q(t) if isinstance(c, (LaurentQ, QFrac)) else Fraction(c)
        if v:
            vals[k] = v
            denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    out = {}
    for k, v in vals.items():
        out[k] = int(v * denom_lcm)
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def _int_reduce(row, basis):
    """Fraction-free reduction of an integer row against an integer echelon
    basis, with content stripping to keep entries small."""
    while row:
        lw = max(row)
        piv = basis.get(lw)
        if piv is None:
            return row
        a, b = row[lw], piv[lw]
        g = gcd(a, b)
        ca, cb = b // g, a // g
        new = {w: ca * v for w, v in row.items()}
        for w, v in piv.items():
            nv = new.get(w, 0) - cb * v
            if nv:
                new[w] = nv
            elif w in new:
                del new[w]
        row = new
        if row:
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = {w: v // g for w, v in row.items()}
    return row


def _membership_probabilistic(x, span, w, seed, points) -> MembershipResult:
    rng = random.Random(seed)
    used = set()
    tested = 0
    while tested < points:
        t = rng.randint(2, 97)
        if t in used:
            continue
        used.add(t)
        try:
            xrow = _eval_row_to_int(x.terms, t)
        except ZeroDivisionError:
            continue  # evaluation point kills a denominator: resample
        basis = {}
        rows = []
        for _label, elem in span:
            rows.append(_eval_row_to_int(elem.terms, t))
        rows.sort(key=lambda r: max(r) if r else (), reverse=True)
        for row in rows:
            row = _int_reduce(row, basis)
            if row:
                lw = max(row)
                if row[lw] < 0:
                    row = {k: -v for k, v in row.items()}
                basis[lw] = row
        if _int_reduce(xrow, basis):
            return MembershipResult(False, "probabilistic", w)
        tested += 1
    return MembershipResult(True, "probabilistic", w)


# -- the six straightening relations -------------------------------------------


def straightening_differences():
    """LHS - RHS of the six straightening relations among the scaled
    generators (clearing the [2]-power denominators leaves membership
    unchanged): distance one, two and three."""
    w = scaled_generators()
    qm2 = qpow(-2)
    diffs = []
    for i in range(3):
        diffs.append((f"v{i}*v{i + 1} - q^-2*v{i + 1}*v{i}",
                      w[i] * w[i + 1] - (w[i + 1] * w[i]).scale(qm2)))
    corr2 = qpow(-2) - 1
    for i in range(2):
        diffs.append((f"v{i}*v{i + 2} - q^-2*v{i + 2}*v{i} - (q^-2-1)*v{i + 1}^2",
                      w[i] * w[i + 2] - (w[i + 2] * w[i]).scale(qm2)
                      - (w[i + 1] * w[i + 1]).scale(corr2)))
    corr3 = qpow(-4) - 1
    diffs.append(("v0*v3 - q^-2*v3*v0 - (q^-4-1)*v2*v1",
                  w[0] * w[3] - (w[3] * w[0]).scale(qm2) - (w[2] * w[1]).scale(corr3)))
    return diffs


def verify_straightening_mod_serre(mode: str | None = None, seed: int = 0,
                                   cap: int = DEFAULT_WEIGHT_CAP) -> list:
    """Certify all six straightening relations as members of the quantum
    Serre ideal; returns one report entry per relation."""
    report = []
    for name, diff in straightening_differences():
        res = ideal_membership(diff, mode=mode, seed=seed, cap=cap)
        if res.member and res.certificate and diff:
            if expand_certificate(res.certificate) != diff:
                raise AssertionError(f"certificate for {name} does not expand back")
        report.append({"relation": name, "weight": list(res.weight),
                       "mode": res.mode, "member": res.member})
    return report


def u_word_free_difference(letters) -> FreeElement:
    """Cross-oracle against the normal-form calculus: for a word in the
    u-generators, the free-algebra product of the scaled root vectors minus
    the free-algebra image of its computed normal form.  The identity holds
    in the quotient, so the difference must lie in the Serre ideal.

    The rescaling u_i = v_i / (1 - q^-2)^(2i) contributes the same global
    factor to both sides because the E2-count is constant across the normal
    form, so it cancels and the W_i can be used throughout.
    """
    from . import pbw

    ws = scaled_generators()
    lhs = FreeElement({(): lq_one()})
    for i in letters:
        lhs = lhs * ws[i]
    nf = pbw.word_product(letters)
    rhs = FreeElement()
    for a, c in nf.terms.items():
        piece = FreeElement({(): lq_one()})
        for gen_idx, e in zip((3, 2, 1, 0), a):
            for _ in range(e):
                piece = piece * ws[gen_idx]
        rhs = rhs + piece.scale(c)
    return lhs - rhs
