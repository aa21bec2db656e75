"""Built-in exactly-specified example structures.

Everything here is constructed from first principles: the 4-dimensional
Sweedler algebra from its defining relations through a deterministic
word-rewriting normalizer, cyclic group algebras from group structure,
flip and conjugation entwinings from their closed forms.  These objects
are the regression surface for the whole package: every constructor's
output passes its full checker suite.
"""

from __future__ import annotations

from fractions import Fraction

from .exactla import ONE, ZERO, Matrix, Vector, matrix_from_columns_fn, sv_apply, sv_permute
from .entwining import DoubleQuantumGroup, EntwiningMap, HomCA, MonoidalEntwiningDatum
from .hopfcore import (
    AlgebraData,
    BilinearForm,
    CoalgebraData,
    Element,
    Functional,
    HopfAlgebraData,
    dual_hopf,
)
from .report import pipeline


def _ap(pos, op):
    return lambda state: sv_apply(state, pos, op)


def _pm(perm):
    return lambda state: sv_permute(state, perm)


# ---------------------------------------------------------------------------
# Sweedler's 4-dimensional Hopf algebra
# ---------------------------------------------------------------------------

# basis words g^i x^j in normal form; y is the name of the word g*x
_H4_WORDS = ((0, 0), (1, 0), (0, 1), (1, 1))
_H4_NAMES = ("1", "e", "x", "y")


def _h4_mul_words(w1, w2):
    """Normal form of the product of two basis words.

    Rewriting rules: e*e -> 1, x*x -> 0, x*e -> -e*x.  Returns None for
    zero, else (sign, word).
    """
    (i, j), (k, l) = w1, w2
    if j and l:
        return None
    sign = -1 if (j and k) else 1
    return sign, ((i + k) % 2, j + l)


def sweedler_h4() -> HopfAlgebraData:
    """The smallest noncommutative noncocommutative Hopf algebra.

    Generators: a grouplike e with e^2 = 1 and a skew-primitive x with
    x^2 = 0, xe = -ex; the fourth basis vector is y = ex.  The full
    multiplication table is derived by the word normalizer; coproduct
    and antipode are set on generators and extended (anti)multiplicatively.
    """
    index = {w: i for i, w in enumerate(_H4_WORDS)}
    dim = 4

    def mult_col(t):
        r = _h4_mul_words(_H4_WORDS[t[0]], _H4_WORDS[t[1]])
        if r is None:
            return {}
        sign, w = r
        return {(index[w],): Fraction(sign)}

    mult = matrix_from_columns_fn((dim, dim), (dim,), mult_col)

    # coproduct on generators; extended to y = e*x multiplicatively
    one, e, x, y = 0, 1, 2, 3
    delta = {
        one: {(one, one): ONE},
        e: {(e, e): ONE},
        x: {(x, one): ONE, (e, x): ONE},
    }

    def tensor_mul(s1, s2):
        out = {}
        for (a1, a2), c1 in s1.items():
            for (b1, b2), c2 in s2.items():
                r1 = _h4_mul_words(_H4_WORDS[a1], _H4_WORDS[b1])
                r2 = _h4_mul_words(_H4_WORDS[a2], _H4_WORDS[b2])
                if r1 is None or r2 is None:
                    continue
                (s1_, w1), (s2_, w2) = r1, r2
                key = (index[w1], index[w2])
                nv = out.get(key, ZERO) + c1 * c2 * s1_ * s2_
                if nv == 0:
                    out.pop(key, None)
                else:
                    out[key] = nv
        return out

    delta[y] = tensor_mul(delta[e], delta[x])
    comult = matrix_from_columns_fn((dim,), (dim, dim), lambda t: delta[t[0]])
    counit = Matrix([[1, 1, 0, 0]])

    # antipode on generators: S(1) = 1, S(e) = e, S(x) = -y; extended
    # antimultiplicatively, S(e*x) = S(x)*S(e)
    s_gen = {one: {one: ONE}, e: {e: ONE}, x: {y: -ONE}}
    sy = {}
    for wx, cx in s_gen[x].items():
        for we, ce in s_gen[e].items():
            r = _h4_mul_words(_H4_WORDS[wx], _H4_WORDS[we])
            if r is None:
                continue
            sign, w = r
            sy[index[w]] = sy.get(index[w], ZERO) + cx * ce * sign
    s_gen[y] = sy
    antipode = Matrix(
        [[s_gen[j].get(i, ZERO) for j in range(dim)] for i in range(dim)]
    )
    alg = AlgebraData(dim, _H4_NAMES, mult, Vector([1, 0, 0, 0]))
    coa = CoalgebraData(dim, _H4_NAMES, comult, counit)
    return HopfAlgebraData(alg, coa, antipode)


def h4_copivot(h4: HopfAlgebraData) -> Functional:
    "The character taking 1 to 1 and the grouplike generator to -1."
    return Functional(h4, Matrix([[1, -1, 0, 0]]))


# ---------------------------------------------------------------------------
# Cyclic group algebras
# ---------------------------------------------------------------------------


def cyclic_group_algebra(n: int) -> HopfAlgebraData:
    "The group algebra of Z/nZ: grouplike basis, inverse antipode."
    if n < 1:
        raise ValueError("n must be positive")
    names = tuple("1" if i == 0 else f"g{i}" if n > 2 else "g" for i in range(n))
    mult = matrix_from_columns_fn(
        (n, n), (n,), lambda t: {((t[0] + t[1]) % n,): ONE}
    )
    comult = matrix_from_columns_fn((n,), (n, n), lambda t: {(t[0], t[0]): ONE})
    counit = Matrix([[1] * n])
    antipode = matrix_from_columns_fn((n,), (n,), lambda t: {((-t[0]) % n,): ONE})
    alg = AlgebraData(n, names, mult, Vector([1] + [0] * (n - 1)))
    coa = CoalgebraData(n, names, comult, counit)
    return HopfAlgebraData(alg, coa, antipode)


def dual_cyclic_group_algebra(n: int) -> HopfAlgebraData:
    "Functions on Z/nZ: the dual of the cyclic group algebra."
    return dual_hopf(cyclic_group_algebra(n), "plain")


def z2_characters(b: HopfAlgebraData):
    """The two characters of functions-on-Z/2 as elements of b, i.e. the
    grouplike basis (counit-like and sign-like) exhibiting b = kZ2."""
    eps = Vector([1, 1])
    sgn = Vector([1, -1])
    return eps, sgn


def z2_triangular_rmatrix(h: HopfAlgebraData) -> Vector:
    "(1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) on a 2-dim group algebra."
    if h.dim != 2:
        raise ValueError("expected the Z/2 group algebra")
    half = Fraction(1, 2)
    return Vector([half, half, half, -half])


def z2_dual_triangular_form(b: HopfAlgebraData, r: Vector) -> BilinearForm:
    "The coquasitriangular form on the dual obtained by evaluating at R."
    if b.dim != 2 or r.dim != 4:
        raise ValueError("expected the dual Z/2 algebra and a 2x2 R-matrix")
    return BilinearForm(b, b, Matrix([list(r)]))


# ---------------------------------------------------------------------------
# Entwining datums
# ---------------------------------------------------------------------------


def flip_entwining(c: HopfAlgebraData, a: HopfAlgebraData) -> EntwiningMap:
    "The flip map as an entwining: c (x) a -> a (x) c."
    phi = matrix_from_columns_fn(
        (c.dim, a.dim), (a.dim, c.dim), lambda t: {(t[1], t[0]): ONE}
    )
    return EntwiningMap(c, a, phi)


def long_datum(h: HopfAlgebraData, b: HopfAlgebraData) -> MonoidalEntwiningDatum:
    """The flip datum whose entwined modules are module/comodule pairs with
    trivial compatibility (coalgebra side b, algebra side h)."""
    return MonoidalEntwiningDatum(flip_entwining(b, h))


def yd_datum(h: HopfAlgebraData) -> MonoidalEntwiningDatum:
    """The conjugation entwining c (x) a -> a_2 (x) S(a_1) c a_3 whose
    entwined modules are the right-right Yetter-Drinfeld modules."""
    d = h.dim
    phi = matrix_from_columns_fn(
        (d, d),
        (d, d),
        lambda t: pipeline(
            t,
            _ap(1, h.comul_op),       # c a1 a2
            _ap(2, h.comul_op),       # c a1 a2 a3
            _ap(1, h.antipode_op),    # c S(a1) a2 a3
            _pm((2, 1, 0, 3)),        # a2 S(a1) c a3
            _ap(1, h.mul_op),
            _ap(1, h.mul_op),
        ),
    )
    return MonoidalEntwiningDatum(EntwiningMap(h, h, phi))


def yd_dqg(h: HopfAlgebraData) -> DoubleQuantumGroup:
    "The conjugation datum with the braiding map a (x) b -> 1 (x) eps(a) b."
    d = h.dim
    datum = yd_datum(h)
    rmap = matrix_from_columns_fn(
        (d, d),
        (d, d),
        lambda t: pipeline(t, _ap(0, h.counit_op), _ap(0, h.unit_op)),
    )
    return DoubleQuantumGroup(datum, rmap)


def hopf_module_datum(h: HopfAlgebraData) -> EntwiningMap:
    """The entwining x (x) y -> y_1 (x) x y_2 whose entwined modules are the
    Hopf modules; satisfies the basic axioms but is not monoidal."""
    d = h.dim
    phi = matrix_from_columns_fn(
        (d, d),
        (d, d),
        lambda t: pipeline(
            t,
            _ap(1, h.comul_op),  # x y1 y2
            _pm((1, 0, 2)),      # y1 x y2
            _ap(1, h.mul_op),
        ),
    )
    return EntwiningMap(h, h, phi)


def long_dqg(h: HopfAlgebraData, rmatrix: Vector, b: HopfAlgebraData,
             form: BilinearForm) -> DoubleQuantumGroup:
    """Braided structure on the flip datum: the map B (x) B -> H (x) H sends
    a (x) b to beta(a, b) R2 (x) R1 for a quasitriangular (H, R) and a
    coquasitriangular (B, beta)."""
    if rmatrix.dim != h.dim * h.dim:
        raise ValueError("rmatrix must live in H (x) H")
    datum = long_datum(h, b)
    nb, nh = b.dim, h.dim

    def col(t):
        beta = form.value(t[0], t[1])
        out = {}
        if beta == 0:
            return out
        for u in range(nh):
            for v in range(nh):
                x = rmatrix[u * nh + v]
                if x != 0:
                    out[(v, u)] = beta * x
        return out

    rmap = matrix_from_columns_fn((nb, nb), (nh, nh), col)
    return DoubleQuantumGroup(datum, rmap)


def drinfeld_double(h: HopfAlgebraData) -> HopfAlgebraData:
    "The smash product of the conjugation datum: the double of h."
    from .smash import smash_product

    return smash_product(yd_datum(h))


# ---------------------------------------------------------------------------
# Known pivotal / ribbon morphisms on the corpus
# ---------------------------------------------------------------------------


def h4_long_pivotal(d: MonoidalEntwiningDatum) -> HomCA:
    "On the flip datum over the Sweedler algebra: 1 -> e, e -> -e, x, y -> 0."
    return HomCA(d, Matrix([[0, 0, 0, 0], [1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))


def h4_yd_pivotal_pair(d: MonoidalEntwiningDatum) -> tuple[HomCA, HomCA]:
    """The two pivotal morphisms of the conjugation datum over the Sweedler
    algebra: one through the copivot (values in the unit), one through the
    pivot (values on the grouplike)."""
    g1 = HomCA(d, Matrix([[1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))
    g2 = HomCA(d, Matrix([[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))
    return g1, g2


# registry used by the command line `corpus` command
def _corpus_registry():
    from .smash import smash_coproduct

    def entry_hopf(builder):
        return lambda: ("hopf", builder())

    reg = {
        "h4": entry_hopf(sweedler_h4),
        "kz2": entry_hopf(lambda: cyclic_group_algebra(2)),
        "kz3": entry_hopf(lambda: cyclic_group_algebra(3)),
        "dual_kz2": entry_hopf(lambda: dual_cyclic_group_algebra(2)),
        "dual_h4": entry_hopf(lambda: dual_hopf(sweedler_h4(), "plain")),
        "double_h4": entry_hopf(lambda: drinfeld_double(sweedler_h4())),
        "double_kz2": entry_hopf(lambda: drinfeld_double(cyclic_group_algebra(2))),
        "cosmash_yd_h4": entry_hopf(lambda: smash_coproduct(yd_datum(sweedler_h4()))),
        "long_h4": lambda: ("entwining", long_datum(sweedler_h4(), sweedler_h4())),
        "long_kz2": lambda: (
            "entwining",
            long_datum(cyclic_group_algebra(2), cyclic_group_algebra(2)),
        ),
        "yd_h4": lambda: ("entwining", yd_datum(sweedler_h4())),
        "yd_kz2": lambda: ("entwining", yd_datum(cyclic_group_algebra(2))),
        "hopfmod_h4": lambda: ("entwining", hopf_module_datum(sweedler_h4())),
        "yd_dqg_h4": lambda: ("dqg", yd_dqg(sweedler_h4())),
        "yd_dqg_kz2": lambda: ("dqg", yd_dqg(cyclic_group_algebra(2))),
        "long_dqg_kz2": lambda: ("dqg", _long_dqg_kz2()),
        "g1_yd_h4": lambda: ("morphism", h4_yd_pivotal_pair(yd_datum(sweedler_h4()))[0]),
        "g2_yd_h4": lambda: ("morphism", h4_yd_pivotal_pair(yd_datum(sweedler_h4()))[1]),
        "g_long_h4": lambda: ("morphism", h4_long_pivotal(long_datum(sweedler_h4(), sweedler_h4()))),
        "unit_morphism_yd_h4": lambda: ("morphism", _unit_hom(yd_datum(sweedler_h4()))),
        "g_ribbon_long_kz2": lambda: ("morphism", long_kz2_ribbon()),
        "pivot_h4": lambda: ("element", Element(sweedler_h4(), Vector([0, 1, 0, 0]))),
        "copivot_h4": lambda: ("functional", h4_copivot(sweedler_h4())),
        "form_dual_kz2": lambda: (
            "form",
            z2_dual_triangular_form(
                dual_cyclic_group_algebra(2),
                z2_triangular_rmatrix(cyclic_group_algebra(2)),
            ),
        ),
    }
    return reg


def _unit_hom(d: MonoidalEntwiningDatum) -> HomCA:
    from .entwining import conv_unit

    return conv_unit(d)


def _long_dqg_kz2() -> DoubleQuantumGroup:
    h = cyclic_group_algebra(2)
    b = dual_cyclic_group_algebra(2)
    r = z2_triangular_rmatrix(h)
    form = z2_dual_triangular_form(b, r)
    return long_dqg(h, r, b, form)


def long_kz2_ribbon() -> HomCA:
    """The ribbon morphism b -> eps_B(b) 1_H on the braided flip datum over
    Z/2: the ribbon-element/ribbon-character pairing with both trivial."""
    q = _long_dqg_kz2()
    d = q.datum
    from .pivribbon import separable_candidate

    kappa = Element(d.a, d.a.unit)
    rho = Functional(d.c, Matrix([list(d.c.counit.row(0))]))
    return separable_candidate(d, kappa, rho, "ribbon").map


def corpus_names() -> list[str]:
    return sorted(_corpus_registry())


def corpus_build(name: str):
    "Build a corpus object by registry name; returns (kind, object)."
    reg = _corpus_registry()
    if name not in reg:
        raise KeyError(f"unknown corpus name {name!r}; known: {', '.join(sorted(reg))}")
    return reg[name]()


def corpus_monoidal_datums() -> dict[str, MonoidalEntwiningDatum]:
    "The monoidal datums used by cross-cutting property tests."
    h4 = sweedler_h4()
    kz2 = cyclic_group_algebra(2)
    return {
        "long_h4": long_datum(h4, h4),
        "long_kz2": long_datum(kz2, kz2),
        "yd_h4": yd_datum(h4),
        "yd_kz2": yd_datum(kz2),
    }


def corpus_dqgs() -> dict[str, DoubleQuantumGroup]:
    h4 = sweedler_h4()
    kz2 = cyclic_group_algebra(2)
    return {
        "yd_dqg_h4": yd_dqg(h4),
        "yd_dqg_kz2": yd_dqg(kz2),
        "long_dqg_kz2": _long_dqg_kz2(),
    }
