"""Sugawara conformal vectors and the certificates comparing them.

At level k the conformal vector is 1/(2(k + h)) sum_i a_i(-1) b_i(-1) 1
over a basis and its form-dual basis, with central charge k dim g/(k + h),
h the dual Coxeter number.  At level -l + 3/2 the B_l and D_l central
charges coincide, and the two conformal vectors differ by an element of the
submodule generated by the degree-2 singular vector.  That membership is
certified exactly: both the short-root quadratic relation and the
conformal-vector difference are rational multiples of one explicit
certificate state u, with the ratio of the two scalars forced by the
normalizations 2(k + h) = 2l + 1 and 2l - 1.
"""

from fractions import Fraction

from . import embedding
from . import liealg
from . import singular
from . import verma


def central_charge(alg, level):
    k = Fraction(level)
    if k == -alg.dual_coxeter:
        raise ValueError("critical level has no conformal vector")
    return k * alg.dim / (k + alg.dual_coxeter)


def solve_level_equation(l):
    """All rational levels where the B_l and D_l central charges agree.

    Cross-multiplying c_B(k) = c_D(k) leaves k (a k + b) = 0; poles of
    either charge are excluded from the solution set.
    """
    dim_b, h_b = l * (2 * l + 1), 2 * l - 1
    dim_d, h_d = l * (2 * l - 1), 2 * l - 2
    a = Fraction(dim_d - dim_b)
    b = Fraction(dim_d * h_b - dim_b * h_d)
    roots = {Fraction(0)}
    if a:
        roots.add(-b / a)
    roots -= {Fraction(-h_b), Fraction(-h_d)}
    return sorted(roots)


def sugawara_vector(module):
    """Degree-2 Casimir state 1/(2(k + h)) sum_i a_i(-1) b_i(-1) 1."""
    alg = module.alg
    k = module.level
    if k == -alg.dual_coxeter:
        raise ValueError("critical level has no conformal vector")
    acc = module.zero()
    for idx, dual in alg.dual_basis():
        acc = acc + module.apply(idx, -1, module.apply_elem(dual, -1, module.vacuum()))
    return acc * (1 / (2 * (k + alg.dual_coxeter)))


# ---- certificates in the B module ---------------------------------------------


def quadratic_certificate(bmodule):
    """u = (2l f_s(0)^2 + 4 sum_i f_{e1-ei}(0) f_{e1+ei}(0)).v, v the
    degree-2 singular vector and s the first short root; u spans the
    degree-2 weight-0 slice of the submodule v generates."""
    alg = bmodule.alg
    if alg.kind != "B":
        raise ValueError("certificate lives in the type B module")
    l = alg.l
    terms = [(2 * l, (("f", alg.rs(1), 0), ("f", alg.rs(1), 0)))]
    terms += [
        (4, (("f", alg.rm(1, i), 0), ("f", alg.rp(1, i), 0)))
        for i in range(2, l + 1)
    ]
    return bmodule.act(bmodule.expand_terms(terms), singular.singular_vector(bmodule))


def quadratic_relation_state(bmodule, short_weight=None):
    """Difference of the two sides of the short/long quadratic relation.

    short_weight overrides the coefficient 2l - 1 on the short-root side;
    the override exists purely as a negative control.
    """
    alg = bmodule.alg
    l = alg.l
    if short_weight is None:
        short_weight = 2 * l - 1
    terms = []
    for r in alg.positive_roots:
        e, f = ("e", r, -1), ("f", r, -1)
        if liealg.root_norm(r) == 1:
            terms += [(short_weight, (e, f)), (short_weight, (f, e))]
            terms += [(-1, (("h", r, -1), ("h", r, -1)))]
        else:
            terms += [(-4, (e, f)), (-4, (f, e))]
    return bmodule.build(terms)


def verify_quadratic(l, short_weight=None):
    """Check that the relation state is a nonzero rational multiple of u."""
    bmodule = verma.vacuum_module("B", l)
    u = quadratic_certificate(bmodule)
    rel = quadratic_relation_state(bmodule, short_weight)
    scalar = rel.multiple_of(u)
    ok = scalar is not None and scalar != 0
    out = {
        "certificate_monomials": len(u),
        "relation_monomials": len(rel),
        "degree": u.degree(),
        "scalar": None if scalar is None else str(scalar),
        "passed": ok,
    }
    return out


def verify_equality(l):
    """omega_B - embed(omega_D) must be an exact multiple of u, with the
    scalar tied to the quadratic one by 2(2l+1)(2l-1)."""
    bmodule = verma.vacuum_module("B", l)
    dmodule = verma.vacuum_module("D", l)
    omega_b = sugawara_vector(bmodule)
    omega_d = sugawara_vector(dmodule)
    delta = omega_b - embedding.embed_state(omega_d, bmodule)
    u = quadratic_certificate(bmodule)
    scalar = delta.multiple_of(u)
    quad_scalar = quadratic_relation_state(bmodule).multiple_of(u)
    ratio_ok = (
        scalar is not None and quad_scalar is not None
        and quad_scalar == scalar * 2 * (2 * l + 1) * (2 * l - 1)
    )
    return {
        "difference_monomials": len(delta),
        "scalar": None if scalar is None else str(scalar),
        "ratio_consistent": ratio_ok,
        "passed": scalar is not None and ratio_ok,
    }


def equality_control(l, level):
    """The same difference away from the special level; reports whether it
    is nonzero and whether it still reduces to the certificate."""
    bmodule = verma.vacuum_module("B", l, level)
    dmodule = verma.vacuum_module("D", l, level)
    delta = sugawara_vector(bmodule) - embedding.embed_state(
        sugawara_vector(dmodule), bmodule)
    scalar = delta.multiple_of(quadratic_certificate(bmodule))
    return {
        "level": str(Fraction(level)),
        "nonzero": not delta.is_zero(),
        "proportional": scalar is not None,
    }


def report(l):
    """Combined conformal verdict for one rank."""
    level = Fraction(3 - 2 * l, 2)
    alg_b = liealg.algebra("B", l)
    alg_d = liealg.algebra("D", l)
    c_b = central_charge(alg_b, level)
    c_d = central_charge(alg_d, level)
    quadratic = verify_quadratic(l)
    equality = verify_equality(l)
    charges_ok = c_b == c_d == Fraction(-l * (2 * l - 3))
    levels = solve_level_equation(l)
    levels_ok = levels == sorted([Fraction(0), level])
    return {
        "check": "conformal",
        "l": l,
        "level": str(level),
        "central_charge_B": str(c_b),
        "central_charge_D": str(c_d),
        "level_equation": [str(x) for x in levels],
        "quadratic": quadratic,
        "equality": equality,
        "passed": bool(quadratic["passed"] and equality["passed"]
                       and charges_ok and levels_ok),
    }
