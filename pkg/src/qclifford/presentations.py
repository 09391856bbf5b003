"""Concrete algebra presentations and their representations.

Builds the quantum 2x2 matrix bialgebra, the Clifford-Hopf algebra on
three generators with its central squares, the one-parameter deformation
of that algebra, two-dimensional irreducible representations of the
doubled (affinized) deformation, and the induced action candidates on
su(2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hopf import HopfData
from .linalg import Matrix, anticommutator, matmul, pauli_matrices
from .qgamma import ActionConvention, action_coefficients
from .rewrite import NCPolynomial, RewriteSystem
from .scalars import (
    GaussRational,
    RadicalScalar,
    q_bracket_of,
    qinv,
    qvar,
    sqrt,
)


class DegenerateParams(Exception):
    """Irrep parameters make the deformed bracket ill-defined."""


# ---------------------------------------------------------------------------
# Quantum 2x2 matrices
# ---------------------------------------------------------------------------

GL_NAMES = ("a11", "a12", "a21", "a22")


def build_glq2() -> HopfData:
    """The six-relation quantum matrix bialgebra with matrix coproduct.

    No antipode is assigned (the presentation does not localize the
    quantum determinant).
    """
    q = qvar()
    qi = qinv()
    rules = {
        (1, 0): NCPolynomial.word((0, 1), qi),
        (2, 0): NCPolynomial.word((0, 2), qi),
        (2, 1): NCPolynomial.word((1, 2)),
        (3, 1): NCPolynomial.word((1, 3), qi),
        (3, 2): NCPolynomial.word((2, 3), qi),
        (3, 0): NCPolynomial.word((0, 3)) + NCPolynomial.word((1, 2), -(q - qi)),
    }
    rs = RewriteSystem(GL_NAMES, rules)
    g = rs.size
    # Delta(a_ij) = sum_k a_ik (x) a_kj with a_ij at index 2(i-1)+(j-1)
    def idx(i, j):
        return 2 * (i - 1) + (j - 1)

    coproduct = {}
    for i in (1, 2):
        for j in (1, 2):
            p = NCPolynomial.zero()
            for k in (1, 2):
                p = p + NCPolynomial.word((idx(i, k), g + idx(k, j)))
            coproduct[idx(i, j)] = p
    counit = {
        idx(1, 1): RadicalScalar.one(),
        idx(2, 2): RadicalScalar.one(),
        idx(1, 2): RadicalScalar.zero(),
        idx(2, 1): RadicalScalar.zero(),
    }
    return HopfData(rs, coproduct, counit, antipode={})


# ---------------------------------------------------------------------------
# Clifford-Hopf algebra CH and its deformation
# ---------------------------------------------------------------------------

CH_NAMES = ("E1", "E2", "E3", "G3", "G1", "G2")
CH_E = (0, 1, 2)
CH_G3 = 3
CH_G = (4, 5)


def _central_swap_rules(rules, central, others):
    """Everything in ``others`` moves right past each central generator."""
    for c in central:
        for x in others:
            if x > c:
                rules[(x, c)] = NCPolynomial.word((c, x))


def build_ch2() -> HopfData:
    """Clifford-Hopf algebra: anticommuting G's squaring to central E's."""
    one = RadicalScalar.one()
    rules: dict[tuple[int, int], NCPolynomial] = {}
    # E's commute among themselves and are central
    for j in CH_E:
        for i in CH_E:
            if j > i:
                rules[(j, i)] = NCPolynomial.word((i, j))
    _central_swap_rules(rules, CH_E, (CH_G3, *CH_G))
    # grading generator: G3^2 = 1, anticommutes with G1, G2
    rules[(CH_G3, CH_G3)] = NCPolynomial.unit()
    for gmu in CH_G:
        rules[(gmu, CH_G3)] = NCPolynomial.word((CH_G3, gmu), -1)
    # G1, G2 anticommute; squares are the E's
    rules[(CH_G[1], CH_G[0])] = NCPolynomial.word((CH_G[0], CH_G[1]), -1)
    rules[(CH_G[0], CH_G[0])] = NCPolynomial.gen(CH_E[0])
    rules[(CH_G[1], CH_G[1])] = NCPolynomial.gen(CH_E[1])
    rs = RewriteSystem(CH_NAMES, rules)
    g = rs.size

    coproduct = {}
    counit = {}
    antipode = {}
    for e in CH_E:
        coproduct[e] = NCPolynomial.gen(e) + NCPolynomial.gen(g + e)
        counit[e] = RadicalScalar.zero()
        antipode[e] = NCPolynomial.word((e,), -1)
    coproduct[CH_G3] = NCPolynomial.word((CH_G3, g + CH_G3))
    counit[CH_G3] = one
    antipode[CH_G3] = NCPolynomial.gen(CH_G3)
    for gmu in CH_G:
        coproduct[gmu] = NCPolynomial.gen(gmu) + NCPolynomial.word((CH_G3, g + gmu))
        counit[gmu] = RadicalScalar.zero()
        antipode[gmu] = NCPolynomial.word((gmu, CH_G3))
    return HopfData(rs, coproduct, counit, antipode)


CHQ_NAMES = ("K1", "K1inv", "K2", "K2inv", "E1", "E2", "E3", "G3", "G1", "G2")
CHQ_K = ((0, 1), (2, 3))  # (K, K^{-1}) per deformed direction
CHQ_E = (4, 5, 6)
CHQ_G3 = 7
CHQ_G = (8, 9)


def build_chq2(include_inherited_antipode: bool = False) -> HopfData:
    """One-parameter deformation of the Clifford-Hopf algebra.

    Only the squares of G1, G2 and their coproducts deform; the square
    becomes the q-bracket of the central weight, expressed through the
    adjoined invertible generators K = q^{E/2}.  The antipode of the
    deformed G's is left unassigned unless explicitly requested: the
    undeformed assignment S(G) = G*G3 is consistent with the deformed
    coproduct, but it is reported rather than presumed.
    """
    q = qvar()
    qi = qinv()
    one = RadicalScalar.one()
    rules: dict[tuple[int, int], NCPolynomial] = {}
    central = [k for pair in CHQ_K for k in pair] + list(CHQ_E)
    # central generators commute with everything (including each other)
    for j in range(len(CHQ_NAMES)):
        for i in central:
            if j > i and j not in (i,):
                if (j, i) not in rules:
                    rules[(j, i)] = NCPolynomial.word((i, j))
    # K K^{-1} = K^{-1} K = 1
    for k, kinv in CHQ_K:
        rules[(k, kinv)] = NCPolynomial.unit()
        rules[(kinv, k)] = NCPolynomial.unit()
    rules[(CHQ_G3, CHQ_G3)] = NCPolynomial.unit()
    for gmu in CHQ_G:
        rules[(gmu, CHQ_G3)] = NCPolynomial.word((CHQ_G3, gmu), -1)
    rules[(CHQ_G[1], CHQ_G[0])] = NCPolynomial.word((CHQ_G[0], CHQ_G[1]), -1)
    # G_mu^2 = (K_mu^2 - K_mu^{-2}) / (q - q^{-1})
    denom_inv = (q - qi).inverse()
    for axis, gmu in enumerate(CHQ_G):
        k, kinv = CHQ_K[axis]
        rules[(gmu, gmu)] = NCPolynomial.word((k, k), denom_inv) + NCPolynomial.word(
            (kinv, kinv), -denom_inv
        )
    rs = RewriteSystem(CHQ_NAMES, rules)
    g = rs.size

    coproduct = {}
    counit = {}
    antipode = {}
    for k, kinv in CHQ_K:
        coproduct[k] = NCPolynomial.word((k, g + k))
        coproduct[kinv] = NCPolynomial.word((kinv, g + kinv))
        counit[k] = one
        counit[kinv] = one
        antipode[k] = NCPolynomial.gen(kinv)
        antipode[kinv] = NCPolynomial.gen(k)
    for e in CHQ_E:
        coproduct[e] = NCPolynomial.gen(e) + NCPolynomial.gen(g + e)
        counit[e] = RadicalScalar.zero()
        antipode[e] = NCPolynomial.word((e,), -1)
    coproduct[CHQ_G3] = NCPolynomial.word((CHQ_G3, g + CHQ_G3))
    counit[CHQ_G3] = one
    antipode[CHQ_G3] = NCPolynomial.gen(CHQ_G3)
    for axis, gmu in enumerate(CHQ_G):
        k, kinv = CHQ_K[axis]
        # Delta(G) = G (x) K^{-1} + K G3 (x) G
        coproduct[gmu] = NCPolynomial.word((gmu, g + kinv)) + NCPolynomial.word(
            (k, CHQ_G3, g + gmu)
        )
        counit[gmu] = RadicalScalar.zero()
        if include_inherited_antipode:
            antipode[gmu] = NCPolynomial.word((gmu, CHQ_G3))
    return HopfData(rs, coproduct, counit, antipode)


def build_group_toy() -> HopfData:
    """Single grouplike generator with an explicit inverse; sanity case."""
    rules = {
        (0, 1): NCPolynomial.unit(),
        (1, 0): NCPolynomial.unit(),
    }
    rs = RewriteSystem(("g", "g_inv"), rules)
    one = RadicalScalar.one()
    coproduct = {
        0: NCPolynomial.word((0, 2)),
        1: NCPolynomial.word((1, 3)),
    }
    counit = {0: one, 1: one}
    antipode = {0: NCPolynomial.gen(1), 1: NCPolynomial.gen(0)}
    return HopfData(rs, coproduct, counit, antipode)


# ---------------------------------------------------------------------------
# Two-dimensional irreps of the affinized deformation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrrepParams:
    """Labels (z, lambda_x, lambda_y) of a two-dimensional irrep, exact."""

    z: GaussRational
    lambda_x: GaussRational
    lambda_y: GaussRational

    def __post_init__(self):
        for name in ("z", "lambda_x", "lambda_y"):
            if getattr(self, name).is_zero():
                raise DegenerateParams(f"{name} must be nonzero")


@dataclass(frozen=True)
class CH2Irrep:
    """The five representation matrices plus the weight values per level."""

    params: IrrepParams
    gamma_x0: Matrix
    gamma_y0: Matrix
    gamma_x1: Matrix
    gamma_y1: Matrix
    gamma_3: Matrix

    def gamma(self, level: int, axis: str) -> Matrix:
        return {
            (0, "x"): self.gamma_x0,
            (0, "y"): self.gamma_y0,
            (1, "x"): self.gamma_x1,
            (1, "y"): self.gamma_y1,
        }[(level, axis)]

    def weight(self, level: int, axis: str) -> GaussRational:
        """The value of q^{E} for the given level and axis."""
        lam = self.params.lambda_x if axis == "x" else self.params.lambda_y
        return lam.inverse() if level == 0 else lam

    def bracket(self, level: int, axis: str) -> RadicalScalar:
        """[E]_q = (q^E - q^{-E}) / (q - q^{-1}) as an exact scalar."""
        return q_bracket_of(RadicalScalar.constant(self.weight(level, axis)))


def _flip_matrix(upper, lower) -> Matrix:
    z = RadicalScalar.zero()
    return Matrix.from_rows([[z, upper], [lower, z]])


def build_affine_irrep(params: IrrepParams) -> CH2Irrep:
    """Construct the representation matrices exactly, symbolic in q."""
    z_val = RadicalScalar.constant(params.z)
    z_inv = RadicalScalar.constant(params.z.inverse())
    i_unit = RadicalScalar.constant(GaussRational(0, 1))
    lx = RadicalScalar.constant(params.lambda_x)
    lxi = RadicalScalar.constant(params.lambda_x.inverse())
    ly = RadicalScalar.constant(params.lambda_y)
    lyi = RadicalScalar.constant(params.lambda_y.inverse())
    denom = qvar() - qinv()

    pre_x0 = sqrt((lxi - lx) / denom)
    pre_y0 = sqrt((lyi - ly) / denom)
    pre_x1 = sqrt((lx - lxi) / denom)
    pre_y1 = sqrt((ly - lyi) / denom)

    gamma_x0 = _flip_matrix(z_inv, z_val).scale(pre_x0)
    gamma_y0 = _flip_matrix(-(i_unit * z_inv), i_unit * z_val).scale(pre_y0)
    gamma_x1 = _flip_matrix(z_val, z_inv).scale(pre_x1)
    gamma_y1 = _flip_matrix(-(i_unit * z_val), i_unit * z_inv).scale(pre_y1)
    gamma_3 = Matrix.from_rows([[1, 0], [0, -1]])
    return CH2Irrep(params, gamma_x0, gamma_y0, gamma_x1, gamma_y1, gamma_3)


@dataclass
class IrrepRelationReport:
    """Exact residuals of the deformed relations for one irrep."""

    square_residuals: dict[tuple[int, str], Matrix]
    anticommutator_residuals: dict[tuple[int, str, str], Matrix]
    gamma3_square_residual: Matrix
    cross_level_anticommutators: dict[tuple[str, str], Matrix]

    def all_pass(self) -> bool:
        per_level = all(m.is_zero() for m in self.square_residuals.values()) and all(
            m.is_zero() for m in self.anticommutator_residuals.values()
        )
        return per_level and self.gamma3_square_residual.is_zero()


def verify_irrep_relations(irrep: CH2Irrep) -> IrrepRelationReport:
    """Check the square law and anticommutation per level.

    Cross-level anticommutators are computed and reported but carry no
    expectation: the relations are only required level by level.
    """
    ident = Matrix.identity(2)
    squares = {}
    anticomms = {}
    for level in (0, 1):
        for axis in ("x", "y"):
            g = irrep.gamma(level, axis)
            squares[(level, axis)] = matmul(g, g) - ident.scale(
                irrep.bracket(level, axis)
            )
            anticomms[(level, axis, "3")] = anticommutator(g, irrep.gamma_3)
        anticomms[(level, "x", "y")] = anticommutator(
            irrep.gamma(level, "x"), irrep.gamma(level, "y")
        )
    g3sq = matmul(irrep.gamma_3, irrep.gamma_3) - ident
    cross = {
        ("x", "y"): anticommutator(irrep.gamma(0, "x"), irrep.gamma(1, "y")),
        ("y", "x"): anticommutator(irrep.gamma(0, "y"), irrep.gamma(1, "x")),
        ("x", "x"): anticommutator(irrep.gamma(0, "x"), irrep.gamma(1, "x")),
        ("y", "y"): anticommutator(irrep.gamma(0, "y"), irrep.gamma(1, "y")),
    }
    return IrrepRelationReport(squares, anticomms, g3sq, cross)


def affine_irrep_numeric(
    z: complex, lambda_x: complex, lambda_y: complex, q_value: complex
) -> dict[str, np.ndarray]:
    """Floating-point construction of the same matrices at a numeric q."""
    if q_value in (1, -1):
        raise DegenerateParams("q must differ from +1 and -1")
    if not z or not lambda_x or not lambda_y:
        raise DegenerateParams("parameters must be nonzero")
    denom = q_value - 1.0 / q_value
    import cmath

    def flip(upper, lower):
        return np.array([[0, upper], [lower, 0]], dtype=complex)

    pre_x0 = cmath.sqrt((1.0 / lambda_x - lambda_x) / denom)
    pre_y0 = cmath.sqrt((1.0 / lambda_y - lambda_y) / denom)
    pre_x1 = cmath.sqrt((lambda_x - 1.0 / lambda_x) / denom)
    pre_y1 = cmath.sqrt((lambda_y - 1.0 / lambda_y) / denom)
    return {
        "x0": pre_x0 * flip(1.0 / z, z),
        "y0": pre_y0 * flip(-1j / z, 1j * z),
        "x1": pre_x1 * flip(z, 1.0 / z),
        "y1": pre_y1 * flip(-1j * z, 1j / z),
        "g3": np.diag([1.0 + 0j, -1.0 + 0j]),
    }


# ---------------------------------------------------------------------------
# The induced action candidates on su(2)
# ---------------------------------------------------------------------------


@dataclass
class Su2ActionReport:
    """Computed values for every claim about the mapped Pauli generators."""

    convention: ActionConvention
    level: int
    alpha: list[Matrix]  # images of sigma_1, sigma_2; sigma_3 maps to itself
    residuals: dict[str, Matrix]


def su2_action_report(
    irrep: CH2Irrep, level: int, conv: ActionConvention
) -> Su2ActionReport:
    """Build the mapped generators and evaluate the claimed relations.

    Claims evaluated (none asserted): squares of the mapped sigma_1 and
    sigma_2 vanish; the mapped sigma_3 squares to one; the mixed bracket
    with sigma_3 vanishes; brackets among the first two equal 4.
    """
    s1, s2, s3 = pauli_matrices()
    paulis = (s1, s2)
    mats = (irrep.gamma(level, "x"), irrep.gamma(level, "y"))
    coeffs = [action_coefficients(m, conv) for m in mats]
    alpha = []
    for nu in range(2):
        a = Matrix.zeros(2, 2)
        for mu in range(2):
            a = a + paulis[mu].scale(coeffs[mu][nu])
        alpha.append(a)
    ident = Matrix.identity(2)
    four = ident.scale(4)
    residuals = {
        "alpha1_squared": matmul(alpha[0], alpha[0]),
        "alpha2_squared": matmul(alpha[1], alpha[1]),
        "alpha3_squared_minus_1": matmul(s3, s3) - ident,
        "anticomm_alpha1_sigma3": anticommutator(alpha[0], s3),
        "anticomm_alpha2_sigma3": anticommutator(alpha[1], s3),
        "anticomm_11_minus_4": anticommutator(alpha[0], alpha[0]) - four,
        "anticomm_12_minus_4": anticommutator(alpha[0], alpha[1]) - four,
        "anticomm_22_minus_4": anticommutator(alpha[1], alpha[1]) - four,
    }
    return Su2ActionReport(conv, level, alpha, residuals)


# ---------------------------------------------------------------------------
# Adjoint action
# ---------------------------------------------------------------------------


def adjoint_action(
    h: HopfData, element: NCPolynomial, target: NCPolynomial, budget: int = 10**6
) -> NCPolynomial:
    """h_(1) * x * S(h_(2)), computed through the coproduct normal form."""
    from .hopf import _split_t2_word

    rs = h.rs
    g = rs.size
    dw = h.delta(element, budget)
    out = NCPolynomial.zero()
    for tw, c in dw.terms.items():
        u, v = _split_t2_word(tw, g)
        sv = h.antipode_of(NCPolynomial.word(v), budget)
        piece = rs.multiply(NCPolynomial.word(u), target, budget)
        piece = rs.multiply(piece, sv, budget)
        out = out + piece.scale(c)
    return rs.normal_form(out, budget)
