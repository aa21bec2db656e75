"""Entwined modules and the categorical machinery on them.

An entwined module is simultaneously a right module over the algebra
side and a right comodule over the coalgebra side of a datum, with the
two structures compatible through the entwining map.  This module
builds the standard modules on C (x) A and A (x) C, tensor products,
left/right duals with evaluation and coevaluation, double duals on the
canonical basis, and the braiding attached to a double structure.

The double right dual is always presented back on the module's own
basis via the canonical evaluation identification: its action twists by
S_A^2 and its coaction by S_C^{-2}, which keeps pivotal-structure
matrices square.
"""

from __future__ import annotations

from functools import cached_property

from .exactla import (
    Matrix,
    TensorOp,
    Vector,
    kron,
    matrix_from_columns_fn,
    sv_apply,
    sv_permute,
)
from .entwining import DoubleQuantumGroup, MonoidalEntwiningDatum, datums_compatible
from .report import AxiomItem, AxiomReport, Witness, compare_item, pipeline


def _ap(pos, op):
    return lambda state: sv_apply(state, pos, op)


def _pm(perm):
    return lambda state: sv_permute(state, perm)


class EntwinedModule:
    """A right module / right comodule pair over a datum.

    ``action`` is ``dim x (dim*dimA)`` and ``coaction`` ``(dim*dimC) x dim``
    under the global index convention.
    """

    def __init__(self, datum: MonoidalEntwiningDatum, dim: int, action: Matrix,
                 coaction: Matrix, basis_names=None):
        na, nc = datum.a_dim, datum.c_dim
        if action.nrows != dim or action.ncols != dim * na:
            raise ValueError("action must be dim x (dim*dimA)")
        if coaction.nrows != dim * nc or coaction.ncols != dim:
            raise ValueError("coaction must be (dim*dimC) x dim")
        self.datum = datum
        self.dim = dim
        self.action = action
        self.coaction = coaction
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"m{i}" for i in range(dim)
        )

    @cached_property
    def action_op(self) -> TensorOp:
        return TensorOp(self.action, (self.dim, self.datum.a_dim), (self.dim,))

    @cached_property
    def coaction_op(self) -> TensorOp:
        return TensorOp(self.coaction, (self.dim,), (self.dim, self.datum.c_dim))

    def same_structure(self, other: "EntwinedModule") -> bool:
        return (
            self.dim == other.dim
            and self.action == other.action
            and self.coaction == other.coaction
        )


def check_entwined_module(m: EntwinedModule) -> AxiomReport:
    "Module axioms, comodule axioms, and the entwined compatibility square."
    d = m.datum
    dim, na, nc = m.dim, d.a_dim, d.c_dim
    act, coact = m.action_op, m.coaction_op
    items = [
        compare_item(
            "M01_action_assoc",
            (dim, na, na),
            (dim,),
            lambda t: pipeline(t, _ap(1, d.a.mul_op), _ap(0, act)),
            lambda t: pipeline(t, _ap(0, act), _ap(0, act)),
        ),
        compare_item(
            "M02_action_unit",
            (dim,),
            (dim,),
            lambda t: pipeline(t, _ap(1, d.a.unit_op), _ap(0, act)),
            lambda t: pipeline(t),
        ),
        compare_item(
            "M03_coassoc",
            (dim,),
            (dim, nc, nc),
            lambda t: pipeline(t, _ap(0, coact), _ap(0, coact)),
            lambda t: pipeline(t, _ap(0, coact), _ap(1, d.c.comul_op)),
        ),
        compare_item(
            "M04_counit",
            (dim,),
            (dim,),
            lambda t: pipeline(t, _ap(0, coact), _ap(1, d.c.counit_op)),
            lambda t: pipeline(t),
        ),
        compare_item(
            "M05_entwined",
            (dim, na),
            (dim, nc),
            lambda t: pipeline(t, _ap(0, act), _ap(0, coact)),
            lambda t: pipeline(t, _ap(0, coact), _ap(1, d.phi_op), _ap(0, act)),
        ),
    ]
    return AxiomReport(items)


class ModuleMorphism:
    """A linear map between entwined modules over one datum.

    Construction validates both commuting squares exactly and rejects
    invalid maps, so downstream operations may assume morphism-ness.
    """

    def __init__(self, source: EntwinedModule, target: EntwinedModule, map: Matrix):
        if not datums_compatible(source.datum, target.datum):
            raise ValueError("source and target live over different datums")
        if map.nrows != target.dim or map.ncols != source.dim:
            raise ValueError("map must be target.dim x source.dim")
        self.source = source
        self.target = target
        self.map = map
        d = source.datum
        f_op = TensorOp(map, (source.dim,), (target.dim,))
        linear = compare_item(
            "A_linear",
            (source.dim, d.a_dim),
            (target.dim,),
            lambda t: pipeline(t, _ap(0, source.action_op), _ap(0, f_op)),
            lambda t: pipeline(t, _ap(0, f_op), _ap(0, target.action_op)),
        )
        if not linear.passed:
            raise ValueError(f"not module-linear at basis {linear.witness.basis}")
        colinear = compare_item(
            "C_colinear",
            (source.dim,),
            (target.dim, d.c_dim),
            lambda t: pipeline(t, _ap(0, f_op), _ap(0, target.coaction_op)),
            lambda t: pipeline(t, _ap(0, source.coaction_op), _ap(0, f_op)),
        )
        if not colinear.passed:
            raise ValueError(f"not comodule-colinear at basis {colinear.witness.basis}")

    @cached_property
    def op(self) -> TensorOp:
        return TensorOp(self.map, (self.source.dim,), (self.target.dim,))

    def then(self, other: "ModuleMorphism") -> "ModuleMorphism":
        if other.source is not self.target and not other.source.same_structure(self.target):
            raise ValueError("composition mismatch")
        return ModuleMorphism(self.source, other.target, other.map * self.map)


# ---------------------------------------------------------------------------
# Standard modules and tensor products
# ---------------------------------------------------------------------------


def std_module_CA(d: MonoidalEntwiningDatum) -> EntwinedModule:
    "C (x) A with (c (x) a).x = c (x) ax and entwined coaction."
    nc, na = d.c_dim, d.a_dim
    action = matrix_from_columns_fn(
        (nc, na, na), (nc, na), lambda t: pipeline(t, _ap(1, d.a.mul_op))
    )
    coaction = matrix_from_columns_fn(
        (nc, na),
        (nc, na, nc),
        lambda t: pipeline(t, _ap(0, d.c.comul_op), _ap(1, d.phi_op)),
    )
    names = [f"{cn}(x){an}" for cn in d.c.basis_names for an in d.a.basis_names]
    return EntwinedModule(d, nc * na, action, coaction, names)


def std_module_AC(d: MonoidalEntwiningDatum) -> EntwinedModule:
    "A (x) C with (a (x) c).x = a x_phi (x) c^phi and free coaction."
    nc, na = d.c_dim, d.a_dim
    action = matrix_from_columns_fn(
        (na, nc, na),
        (na, nc),
        lambda t: pipeline(t, _ap(1, d.phi_op), _ap(0, d.a.mul_op)),
    )
    coaction = matrix_from_columns_fn(
        (na, nc), (na, nc, nc), lambda t: pipeline(t, _ap(1, d.c.comul_op))
    )
    names = [f"{an}(x){cn}" for an in d.a.basis_names for cn in d.c.basis_names]
    return EntwinedModule(d, na * nc, action, coaction, names)


def extend_MC(module_dim: int, module_action: Matrix, d: MonoidalEntwiningDatum,
              basis_names=None) -> EntwinedModule:
    "Freely extend a plain right module M to the entwined module M (x) C."
    nc, na = d.c_dim, d.a_dim
    act_op = TensorOp(module_action, (module_dim, na), (module_dim,))
    action = matrix_from_columns_fn(
        (module_dim, nc, na),
        (module_dim, nc),
        lambda t: pipeline(t, _ap(1, d.phi_op), _ap(0, act_op)),
    )
    coaction = matrix_from_columns_fn(
        (module_dim, nc), (module_dim, nc, nc), lambda t: pipeline(t, _ap(1, d.c.comul_op))
    )
    return EntwinedModule(d, module_dim * nc, action, coaction, basis_names)


def tensor_unit(d: MonoidalEntwiningDatum) -> EntwinedModule:
    "The monoidal unit: the ground field with counit action and unit coaction."
    action = Matrix([list(d.a.counit.row(0))])
    coaction = Matrix([[c] for c in d.c.unit])
    return EntwinedModule(d, 1, action, coaction, ("1",))


def tensor_modules(m: EntwinedModule, n: EntwinedModule) -> EntwinedModule:
    "Tensor product through the comultiplications; needs a monoidal datum."
    if not datums_compatible(m.datum, n.datum):
        raise ValueError("modules live over different datums")
    d = m.datum
    action = matrix_from_columns_fn(
        (m.dim, n.dim, d.a_dim),
        (m.dim, n.dim),
        lambda t: pipeline(
            t,
            _ap(2, d.a.comul_op),
            _pm((0, 2, 1, 3)),
            _ap(0, m.action_op),
            _ap(1, n.action_op),
        ),
    )
    coaction = matrix_from_columns_fn(
        (m.dim, n.dim),
        (m.dim, n.dim, d.c_dim),
        lambda t: pipeline(
            t,
            _ap(0, m.coaction_op),
            _ap(2, n.coaction_op),
            _pm((0, 2, 1, 3)),
            _ap(2, d.c.mul_op),
        ),
    )
    names = [f"{a}|{b}" for a in m.basis_names for b in n.basis_names]
    return EntwinedModule(d, m.dim * n.dim, action, coaction, names)


# ---------------------------------------------------------------------------
# Duals
# ---------------------------------------------------------------------------


class DualityData:
    "A dual module with its evaluation and coevaluation maps."

    def __init__(self, dual_module: EntwinedModule, ev: Matrix, coev: Matrix, side: str):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.dual_module = dual_module
        self.ev = ev
        self.coev = coev
        self.side = side


def _dual_module(m: EntwinedModule, antipode_a: Matrix, antipode_c: Matrix) -> EntwinedModule:
    """Dual space on the dual basis: action through antipode_a, coaction
    through antipode_c applied to the output leg."""
    d = m.datum
    dim, na, nc = m.dim, d.a_dim, d.c_dim
    act_cols = m.action.sparse_cols()
    sa = antipode_a
    # (f.a)(x) = f(x . sa(a)): column (i, a) of the dual action is row i of
    # the matrix of right action by sa(a).
    rows = [[None] * (dim * na) for _ in range(dim)]
    for a in range(na):
        # matrix of x -> x . sa(e_a) on M
        cols = [[0] * dim for _ in range(dim)]  # cols[j] = image of e_j
        for t in range(na):
            w = sa.entry(t, a)
            if w == 0:
                continue
            for j in range(dim):
                for i, x in act_cols[j * na + t]:
                    cols[j][i] += w * x
        for i in range(dim):
            for j in range(dim):
                rows[j][i * na + a] = cols[j][i]
    action = Matrix(rows)

    coact_op = m.coaction_op
    sc_op = TensorOp(antipode_c, (nc,), (nc,))

    def coact_col(t):
        # f0(x) (x) f1 = f(x0) (x) s_c(x1): gather over all basis x
        out = {}
        (i,) = t
        for j in range(dim):
            for (u, v), c in coact_op.cols((j,)):
                if u != i:
                    continue
                for (s,), w in sc_op.cols((v,)):
                    key = (j, s)
                    nv = out.get(key, 0) + c * w
                    if nv == 0:
                        out.pop(key, None)
                    else:
                        out[key] = nv
        return out

    coaction = matrix_from_columns_fn((dim,), (dim, nc), coact_col)
    names = [f"{n}^" for n in m.basis_names]
    return EntwinedModule(d, dim, action, coaction, names)


def _pairing(dim: int) -> Matrix:
    row = [0] * (dim * dim)
    for i in range(dim):
        row[i * dim + i] = 1
    return Matrix([row])


def _copairing(dim: int) -> Matrix:
    col = [[0] for _ in range(dim * dim)]
    for i in range(dim):
        col[i * dim + i][0] = 1
    return Matrix(col)


def left_dual(m: EntwinedModule) -> DualityData:
    """Left dual: action twisted by S_A^{-1}, coaction by S_C.

    ev: M* (x) M -> 1 is the canonical pairing, coev: 1 -> M (x) M* the
    canonical copairing; snake identities and morphism-ness are checked
    by check_duality.
    """
    d = m.datum
    dual = _dual_module(m, d.a.antipode_inv, d.c.antipode)
    return DualityData(dual, _pairing(m.dim), _copairing(m.dim), "left")


def right_dual(m: EntwinedModule) -> DualityData:
    "Right dual: action twisted by S_A, coaction by S_C^{-1}."
    d = m.datum
    dual = _dual_module(m, d.a.antipode, d.c.antipode_inv)
    return DualityData(dual, _pairing(m.dim), _copairing(m.dim), "right")


def check_duality(m: EntwinedModule, dd: DualityData) -> AxiomReport:
    "Snake identities plus morphism-ness of ev and coev."
    d = m.datum
    dim = m.dim
    dual = dd.dual_module
    I = Matrix.identity(dim)
    if dd.side == "left":
        # (V (x) ev)(coev (x) V) = id_V ; (ev (x) V*)(V* (x) coev) = id_V*
        snake_obj = kron(I, dd.ev) * kron(dd.coev, I)
        snake_dual = kron(dd.ev, I) * kron(I, dd.coev)
        ev_src = tensor_modules(dual, m)
        coev_tgt = tensor_modules(m, dual)
    else:
        # (ev~ (x) V)(V (x) coev~) = id_V ; (V* (x) ev~)(coev~ (x) V*) = id_V*
        snake_obj = kron(dd.ev, I) * kron(I, dd.coev)
        snake_dual = kron(I, dd.ev) * kron(dd.coev, I)
        ev_src = tensor_modules(m, dual)
        coev_tgt = tensor_modules(dual, m)

    def ident_item(axiom_id, got):
        if got.is_identity():
            return AxiomItem(axiom_id, True)
        for j in range(got.ncols):
            col = got.col(j)
            if col != Vector.basis(got.nrows, j):
                return AxiomItem(
                    axiom_id, False, Witness((j,), col, Vector.basis(got.nrows, j))
                )
        raise AssertionError("unreachable")

    items = [
        ident_item("D1_snake_object", snake_obj),
        ident_item("D2_snake_dual", snake_dual),
    ]
    unit = tensor_unit(d)
    try:
        ModuleMorphism(ev_src, unit, dd.ev)
        items.append(AxiomItem("D3_ev_morphism", True))
    except ValueError:
        items.append(AxiomItem("D3_ev_morphism", False,
                               Witness((), Vector.zero(1), Vector.zero(1))))
    try:
        ModuleMorphism(unit, coev_tgt, dd.coev)
        items.append(AxiomItem("D4_coev_morphism", True))
    except ValueError:
        items.append(AxiomItem("D4_coev_morphism", False,
                               Witness((), Vector.zero(1), Vector.zero(1))))
    return AxiomReport(items)


def transpose(f: ModuleMorphism, side: str = "left") -> ModuleMorphism:
    """Transpose of a morphism between the duals, with the matrix transposed
    on dual bases.  For f: Y -> X this is X-dual -> Y-dual."""
    dualize = left_dual if side == "left" else right_dual
    src = dualize(f.target).dual_module
    tgt = dualize(f.source).dual_module
    return ModuleMorphism(src, tgt, f.map.transpose())


def double_right_dual(m: EntwinedModule) -> EntwinedModule:
    """Right dual applied twice, re-identified with m's own basis.

    Under the canonical evaluation identification the action becomes
    twisting by S_A^2 and the coaction by S_C^{-2}; the literal twice
    dualization produces exactly these matrices on the double-dual basis.
    """
    d = m.datum
    action = matrix_from_columns_fn(
        (m.dim, d.a_dim),
        (m.dim,),
        lambda t: pipeline(t, _ap(1, d.a.antipode_sq_op), _ap(0, m.action_op)),
    )
    coaction = matrix_from_columns_fn(
        (m.dim,),
        (m.dim, d.c_dim),
        lambda t: pipeline(t, _ap(0, m.coaction_op), _ap(1, d.c.antipode_inv_sq_op)),
    )
    return EntwinedModule(d, m.dim, action, coaction, m.basis_names)


# ---------------------------------------------------------------------------
# Braiding
# ---------------------------------------------------------------------------


def braiding_columns(m: EntwinedModule, n: EntwinedModule, q: DoubleQuantumGroup):
    "Column function of the braiding M (x) N -> N (x) M."
    if not (datums_compatible(m.datum, q.datum) and datums_compatible(n.datum, q.datum)):
        raise ValueError("modules must live over the double structure's datum")

    def col(t):
        return pipeline(
            t,
            _ap(0, m.coaction_op),   # m0 mc n
            _ap(2, n.coaction_op),   # m0 mc n0 nc
            _pm((0, 2, 1, 3)),       # m0 n0 mc nc
            _ap(2, q.rmap_op),       # m0 n0 R1 R2
            _pm((1, 2, 0, 3)),       # n0 R1 m0 R2
            _ap(0, n.action_op),
            _ap(1, m.action_op),
        )

    return col


def braiding(m: EntwinedModule, n: EntwinedModule, q: DoubleQuantumGroup) -> Matrix:
    "The braiding m (x) n -> n (x) m induced by R, as a dense matrix."
    return matrix_from_columns_fn(
        (m.dim, n.dim), (n.dim, m.dim), braiding_columns(m, n, q)
    )


def braiding_morphism(m, n, q) -> ModuleMorphism:
    "The braiding packaged as a validated morphism between tensor modules."
    return ModuleMorphism(tensor_modules(m, n), tensor_modules(n, m), braiding(m, n, q))


def action_endomorphisms(m: EntwinedModule) -> list[ModuleMorphism]:
    """Deterministic generating family of endomorphisms: the identity plus
    every action-by-basis-element map that happens to be a morphism."""
    out = [ModuleMorphism(m, m, Matrix.identity(m.dim))]
    d = m.datum
    for a in range(d.a_dim):
        cols = []
        for j in range(m.dim):
            state = pipeline((j, a), _ap(0, m.action_op))
            cols.append([state.get((i,), 0) for i in range(m.dim)])
        mat = Matrix.from_cols(cols, m.dim)
        try:
            out.append(ModuleMorphism(m, m, mat))
        except ValueError:
            continue
    return out


def check_braiding_naturality(m: EntwinedModule, n: EntwinedModule,
                              q: DoubleQuantumGroup,
                              morphisms=None) -> AxiomReport:
    """Naturality of the braiding in each slot against a finite family.

    The family is deterministic: the identity and every action-by-basis
    endomorphism that is a morphism, plus any user-supplied morphisms
    (which must start or end at m or n).  One report item per slot.
    """
    br = braiding(m, n, q)
    items = []
    fams = {
        "N1_left_slot": [(f, True) for f in action_endomorphisms(m)],
        "N2_right_slot": [(f, False) for f in action_endomorphisms(n)],
    }
    for f in morphisms or ():
        if f.source.same_structure(m) and f.target.same_structure(m):
            fams["N1_left_slot"].append((f, True))
        elif f.source.same_structure(n) and f.target.same_structure(n):
            fams["N2_right_slot"].append((f, False))
        else:
            raise ValueError("supplied morphism must be an endomorphism of m or n")
    for axiom_id, fam in fams.items():
        bad = None
        for f, left in fam:
            if left:
                lhs = kron(Matrix.identity(n.dim), f.map) * br
                rhs = br * kron(f.map, Matrix.identity(n.dim))
            else:
                lhs = kron(f.map, Matrix.identity(m.dim)) * br
                rhs = br * kron(Matrix.identity(m.dim), f.map)
            if lhs != rhs:
                col = next(j for j in range(lhs.ncols) if lhs.col(j) != rhs.col(j))
                bad = Witness((col,), lhs.col(col), rhs.col(col))
                break
        items.append(AxiomItem(axiom_id, bad is None, bad))
    return AxiomReport(items)


def check_module_over_algebra(alg, dim: int, action: Matrix) -> AxiomReport:
    "Right-module axioms over a plain algebra (used for transported modules)."
    act = TensorOp(action, (dim, alg.dim), (dim,))
    items = [
        compare_item(
            "RM1_assoc",
            (dim, alg.dim, alg.dim),
            (dim,),
            lambda t: pipeline(t, _ap(1, alg.mul_op), _ap(0, act)),
            lambda t: pipeline(t, _ap(0, act), _ap(0, act)),
        ),
        compare_item(
            "RM2_unit",
            (dim,),
            (dim,),
            lambda t: pipeline(t, _ap(1, alg.unit_op), _ap(0, act)),
            lambda t: pipeline(t),
        ),
    ]
    return AxiomReport(items)
