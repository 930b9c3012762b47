"""Level-k vacuum modules over the affinization, as spaces of PBW monomials.

States live in U(g[t^-1] t^-1) applied to a vacuum vector killed by all
nonnegative modes.  A canonical monomial is a tuple of loop factors (n, x)
with x a basis index of the finite algebra and n <= -1, sorted ascending by
(mode, basis index): deeper modes come first, ties follow the frozen basis
order of the finite algebra.  The commutation rule

    x(n) y(m) = y(m) x(n) + [x,y](n+m) + n delta_{n+m,0} (x,y) k

is applied recursively to push every factor into place; between two strictly
negative modes the central term never fires, so straightening of canonical
monomials only produces brackets.  Results of single-factor applications are
memoized per module, keyed by (basis index, mode, monomial tail), which is
what makes repeated singular-vector and certificate computations cheap.

All coefficients are Fraction; there is no floating point anywhere.
"""

from fractions import Fraction
from functools import lru_cache

from . import liealg

_ZERO = Fraction(0)
_ONE = Fraction(1)


class VermaModule:
    """Vacuum module at a fixed level over the affinization of one algebra."""

    def __init__(self, alg, level):
        self.alg = alg
        self.level = Fraction(level)
        self._memo = {}

    def __repr__(self):
        return "VermaModule(%s_%d, k=%s)" % (self.alg.kind, self.alg.l, self.level)

    def vacuum(self, coeff=1):
        return PBWState(self, {(): Fraction(coeff)})

    def zero(self):
        return PBWState(self, {})

    def state(self, terms):
        """State from {monomial: coeff}; monomials must already be canonical."""
        out = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if list(mono) != sorted(mono):
                raise ValueError("monomial %r is not canonical" % (mono,))
            c = Fraction(c)
            if c:
                out[mono] = c
        return PBWState(self, out)

    # ---- the straightening kernel -------------------------------------------

    def _apply_mono(self, x, n, mono):
        """x(n) applied to a canonical monomial; returns ((monomial, coeff), ...)."""
        key = (x, n, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        entry = (n, x)
        if n < 0 and (not mono or entry <= mono[0]):
            result = (((entry,) + mono, _ONE),)
        elif not mono:
            # a nonnegative mode reaches the vacuum and kills it
            result = ()
        else:
            m, y = mono[0]
            rest = mono[1:]
            acc = {}
            # x(n) y(m) = y(m) x(n) + [x,y](n+m) + n delta_{n+m,0} (x,y) k
            for mono1, c1 in self._apply_mono(x, n, rest):
                for mono2, c2 in self._apply_mono(y, m, mono1):
                    acc[mono2] = acc.get(mono2, _ZERO) + c1 * c2
            for z, cz in self.alg.bracket(x, y):
                for mono1, c1 in self._apply_mono(z, n + m, rest):
                    acc[mono1] = acc.get(mono1, _ZERO) + cz * c1
            if n > 0 and n + m == 0:
                cf = self.alg.form(x, y)
                if cf:
                    c = n * cf * self.level
                    acc[rest] = acc.get(rest, _ZERO) + c
            result = tuple((mo, c) for mo, c in acc.items() if c)
        self._memo[key] = result
        return result

    # ---- public operations ---------------------------------------------------

    def apply(self, x, n, state):
        """Act by the loop generator x(n) on a state."""
        if state.module is not self:
            raise ValueError("state belongs to a different module")
        out = {}
        for mono, c in state.terms.items():
            for mono1, c1 in self._apply_mono(x, n, mono):
                out[mono1] = out.get(mono1, _ZERO) + c * c1
        return PBWState(self, out)

    def apply_elem(self, elem, n, state):
        """Act by (sum_i elem[i] x_i)(n); elem is a sparse {index: coeff}."""
        out = self.zero()
        for x, cx in elem.items():
            out = out + cx * self.apply(x, n, state)
        return out

    def act_factors(self, factors, state):
        """Apply a product of loop factors ((index, mode), ...): rightmost first."""
        for x, n in reversed(tuple(factors)):
            state = self.apply(x, n, state)
        return state

    def act(self, word, state):
        """Apply a formal combination [(coeff, factors), ...] to a state."""
        out = self.zero()
        for c, factors in word:
            out = out + Fraction(c) * self.act_factors(factors, state)
        return out

    def normal_form(self, factors):
        """Canonical form of an arbitrary product of loop factors applied to 1."""
        return self.act_factors(factors, self.vacuum())

    def expand_terms(self, terms):
        """Resolve symbolic terms into a concrete word.

        Each term is (coeff, [factor, ...]) with factor one of
            ("e", root, mode)   root vector for a positive root
            ("f", root, mode)
            ("h", root, mode)   the coroot h_root = sum_i (2 c_i/(root,root)) H_i
            ("H", i, mode)      Cartan basis element H_i, 1-based
        and roots are epsilon-coordinate tuples.  "h" factors expand
        multilinearly, so one symbolic term may yield several word terms.
        """
        alg = self.alg
        word = []
        for coeff, factors in terms:
            partial = [(Fraction(coeff), ())]
            for factor in factors:
                role, datum, mode = factor
                if role == "e":
                    options = [(alg.e_index(datum), _ONE)]
                elif role == "f":
                    options = [(alg.f_index(datum), _ONE)]
                elif role == "H":
                    options = [(alg.h_index(datum), _ONE)]
                elif role == "h":
                    options = sorted(alg.coroot_coords(datum).items())
                else:
                    raise ValueError("unknown factor role %r" % (role,))
                partial = [
                    (c * cx, fs + ((idx, mode),))
                    for c, fs in partial
                    for idx, cx in options
                ]
            word.extend(partial)
        return word

    def build(self, terms):
        """normal_form of expand_terms, summed: the state a display denotes."""
        return self.act(self.expand_terms(terms), self.vacuum())


class PBWState:
    """Sparse element of a VermaModule: {canonical monomial: Fraction}.

    Treated as immutable; all arithmetic returns new states.
    """

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PBWState):
            return NotImplemented
        return self.module is other.module and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if other == 0:
            return self
        if not isinstance(other, PBWState) or other.module is not self.module:
            raise ValueError("can only add states of the same module")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, _ZERO) + c
        return PBWState(self.module, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWState(self.module, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return PBWState(self.module, {m: scalar * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), _ZERO)

    def degree(self):
        """Common conformal degree sum(-modes), or None if mixed or zero."""
        degs = {-sum(n for n, _ in m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def weight(self):
        """Common finite h-weight as an epsilon tuple, or None if mixed or zero."""
        alg = self.module.alg
        seen = set()
        for m in self.terms:
            w = [0] * alg.l
            for _, x in m:
                for i, c in enumerate(alg.weight(x)):
                    w[i] += c
            seen.add(tuple(w))
            if len(seen) > 1:
                return None
        return seen.pop() if seen else None

    def multiple_of(self, other):
        """The scalar s with self == s*other, or None if there is none."""
        if not isinstance(other, PBWState) or other.module is not self.module:
            raise ValueError("states of different modules")
        if other.is_zero():
            return None
        mono = min(other.terms)
        c = self.terms.get(mono)
        if c is None:
            s = _ZERO
        else:
            s = c / other.terms[mono]
        return s if self == s * other else None

    # ---- serialization -------------------------------------------------------

    def to_obj(self):
        """JSON-ready form: list of {coeff, monomial}, deterministically sorted.

        Each factor is encoded [role, root-label-or-Cartan-index, mode].
        """
        alg = self.module.alg
        out = []
        for mono in sorted(self.terms):
            enc = []
            for n, x in mono:
                role, datum = alg.basis[x]
                enc.append([role, datum if role == "h" else liealg.root_label(datum), n])
            out.append({"coeff": str(self.terms[mono]), "monomial": enc})
        return out

    @classmethod
    def from_obj(cls, module, obj):
        alg = module.alg
        terms = {}
        for item in obj:
            mono = []
            for role, datum, n in item["monomial"]:
                if role == "h":
                    idx = alg.h_index(datum)
                elif role == "e":
                    idx = alg.e_index(liealg.parse_root_label(datum, alg.l))
                elif role == "f":
                    idx = alg.f_index(liealg.parse_root_label(datum, alg.l))
                else:
                    raise ValueError("bad factor role %r" % (role,))
                mono.append((n, idx))
            mono = tuple(mono)
            if list(mono) != sorted(mono):
                raise ValueError("non-canonical monomial in serialized state")
            terms[mono] = terms.get(mono, _ZERO) + Fraction(item["coeff"])
        return cls(module, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.module.alg
        bits = []
        for mono in sorted(self.terms):
            fac = " ".join("%s(%d)" % (alg.label(x), n) for n, x in mono)
            bits.append("%s * %s|0>" % (self.terms[mono], fac + " " if fac else ""))
        return " + ".join(bits)


@lru_cache(maxsize=None)
def vacuum_module(kind, l, level=None):
    """Cached module; level defaults to -l + 3/2."""
    if level is None:
        level = Fraction(3 - 2 * l, 2)
    return VermaModule(liealg.algebra(kind, l), Fraction(level))
