"""
Embedded Catalog Rows

The classification of cohomogeneity-two commuting Hermann actions on
irreducible rank-two compact symmetric spaces, in its fixed display order.
Parametric rows sit at their preset parameter values. Rows whose root
multiplicities are not printed in the root table carry data read off the
explicit field formula and say so in ``known_inconsistencies``.
"""

import math
from typing import Optional, Tuple

from core.catalog import (
    GoldenPoint,
    HermannActionSpec,
    Multiplicity,
    ParamSpec,
    PositiveRoot,
    RootSystemKind,
    Table31Golden,
)


PI = math.pi
SQRT3 = math.sqrt(3.0)
ARCTAN_THIRD = math.atan(1.0 / 3.0)

_LABELS = {
    "a": (1, 0),
    "b": (0, 1),
    "a+b": (1, 1),
    "2a+b": (2, 1),
    "2a": (2, 0),
    "2a+2b": (2, 2),
    "3a+b": (3, 1),
    "3a+2b": (3, 2),
}

DERIVED_FROM_FORMULA = (
    "no root-table entry in the source; V and H multiplicities are read off the "
    "explicit field formula and totals come from the root system of G/K"
)


def _roots(*entries) -> Tuple[PositiveRoot, ...]:
    """Build roots from (label, total, V, H) tuples, e.g. ("2a+b", 2, 1, "q-2")."""
    return tuple(
        PositiveRoot(*_LABELS[label], Multiplicity.parse(total),
                     Multiplicity.parse(m_v), Multiplicity.parse(m_h))
        for label, total, m_v, m_h in entries
    )


def _point(x1: float, x2: float, exact: bool = False, note: Optional[str] = None) -> GoldenPoint:
    return GoldenPoint(x1, x2, exact, note)


def _uniform(labels, total, m_v, m_h):
    return _roots(*((label, total, m_v, m_h) for label in labels))


A2_LABELS = ("a", "b", "a+b")
B2_LABELS = ("a", "b", "a+b", "2a+b")
BC2_LABELS = ("a", "b", "a+b", "2a+b", "2a", "2a+2b")
G2_LABELS = ("a", "b", "a+b", "2a+b", "3a+b", "3a+2b")

VERTEX_NOT_EDGE = "printed point is a vertex of the orbit simplex; the catalog edge maximizer lies inside the edge"

_RHO1_GOLDEN = Table31Golden(
    interior=_point(PI / 6, 0.0, exact=True),
    edges=(
        _point(0.0, 0.0, exact=True),
        _point(PI / 4, -PI / (4 * SQRT3), exact=True),
        _point(PI / 4, PI / (4 * SQRT3), exact=True),
    ),
)

_NONISO_EDGES = (
    _point(0.0, ARCTAN_THIRD, exact=True,
           note="arctan(1/3) does not zero the boundary field on x1=0; the catalog edge maximizer is (0, π/6)"),
    _point(ARCTAN_THIRD, 0.0, exact=True,
           note="arctan(1/3) does not zero the boundary field on x2=0; the catalog edge maximizer is (π/6, 0)"),
    _point(PI / 4, PI / 4, exact=True),
)

_SO2_SO3_GOLDEN = Table31Golden(
    interior=_point(0.30774, 0.785398),
    edges=(
        _point(0.0, PI / 4, exact=True),
        _point(0.0, 0.0, exact=True, note=VERTEX_NOT_EDGE),
        _point(0.0, PI / 2, exact=True, note=VERTEX_NOT_EDGE),
    ),
)


CATALOG_ROWS: Tuple[HermannActionSpec, ...] = (
    HermannActionSpec(
        id="rho1_SO3_SU3_SO3",
        display_name="ρ1(SO(3)) ↷ SU(3)/SO(3)",
        dual_name="SO_0(1,2) ↷ SL(3,R)/SO(3)",
        l_star_name="(SL(2,R)/SO(2)) × R",
        kind=RootSystemKind.A2,
        roots=_roots(("a", 1, 1, 0), ("b", 1, 0, 1), ("a+b", 1, 0, 1)),
        table31=_RHO1_GOLDEN,
    ),
    HermannActionSpec(
        id="SO6_SU6_Sp3",
        display_name="SO(6) ↷ SU(6)/Sp(3)",
        dual_name="SO*(6) ↷ SU*(6)/Sp(3)",
        l_star_name="SL(3,C)/SU(3)",
        kind=RootSystemKind.A2,
        roots=_uniform(A2_LABELS, 4, 2, 2),
        table31=Table31Golden(
            interior=_point(0.261799, 0.45345),
            edges=(
                _point(0.0, PI / (4 * SQRT3), exact=True),
                _point(PI / 8, PI / (8 * SQRT3), exact=True),
                _point(3 * PI / 8, PI / (8 * SQRT3), exact=True,
                       note="printed point lies outside the orbit simplex (x2 < x1/√3); the edge "
                            "maximizer on α+β=π/2 is (π/8, 3π/(8√3)), the printed pair with its "
                            "numerators swapped"),
            ),
        ),
    ),
    HermannActionSpec(
        id="rho2_Sp3_SU6_Sp3",
        display_name="ρ2(Sp(3)) ↷ SU(6)/Sp(3)",
        dual_name="Sp(1,2) ↷ SU*(6)/Sp(3)",
        l_star_name="(SU*(4)/Sp(2)) × U(1)",
        kind=RootSystemKind.A2,
        roots=_roots(("a", 4, 4, 0), ("b", 4, 0, 4), ("a+b", 4, 0, 4)),
        table31=_RHO1_GOLDEN,
    ),
    HermannActionSpec(
        id="SOq2_SUq2_SU2Uq",
        display_name="SO(q+2) ↷ SU(q+2)/S(U(2)×U(q))",
        dual_name="SO_0(2,q) ↷ SU(2,q)/S(U(2)×U(q))",
        l_star_name="SO_0(2,q)/SO(2)×SO(q)",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", "2q-4", "q-2", "2q-4"),
            ("b", 2, 1, 2),
            ("a+b", "2q-4", "q-2", "2q-4"),
            ("2a+b", 2, 1, 2),
            ("2a", 1, 0, 1),
            ("2a+2b", 2, 0, 2),
        ),
        params=(ParamSpec("q", 3, 3),),
        table31=Table31Golden(
            interior=_point(0.242863, 0.608349,
                            note="not a zero of the catalog field at q=3; catalog interior "
                                 "equilibrium is (0.197898, 0.435605)"),
            edges=(
                _point(0.0, PI / 4, exact=True, note=VERTEX_NOT_EDGE),
                _point(0.0, 0.0, exact=True, note=VERTEX_NOT_EDGE),
                _point(PI / 4, PI / 4, exact=True, note=VERTEX_NOT_EDGE),
            ),
        ),
        known_inconsistencies=(
            "H multiplicities print equal to the totals, so V + H exceeds the total for α, β, α+β and 2α+β",
            "explicit field formula uses H coefficients q-2, 1, q-2, 1 and a tan 2x coefficient of 1 "
            "that no integer multiplicity of 2α produces",
        ),
    ),
    HermannActionSpec(
        id="SO4_SU4_SU2U2",
        display_name="SO(4) ↷ SU(4)/S(U(2)×U(2))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 2, 1, 1), ("b", 1, 0, 1), ("a+b", 2, 1, 1), ("2a+b", 1, 0, 1)),
        table31=Table31Golden(
            interior=_point(0.343408, 0.639725,
                            note="printed point lies outside the orbit simplex of the formula-derived "
                                 "roots; catalog interior equilibrium is (0.477658, 0.477658)"),
            edges=(
                _point(0.0, ARCTAN_THIRD, exact=True,
                       note="catalog edge maximizer on x1=0 is (0, π/6)"),
                _point(0.477658, 0.477658,
                       note="printed point is the catalog interior equilibrium, not an edge point"),
                _point(0.33312, PI / 4,
                       note="printed point is not on the catalog simplex boundary"),
            ),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "x-component of tan(x-y) prints with sign -1 while the y-component also prints -1; "
            "the β pairing (1, -1) is used",
            "printed domain 0 < x < y < π/4 differs from the catalog simplex",
        ),
    ),
    HermannActionSpec(
        id="SUj1Uqj1_SUq2_SU2Uq",
        display_name="S(U(j+1)×U(q-j+1)) ↷ SU(q+2)/S(U(2)×U(q))",
        dual_name="S(U(1,j)×U(1,q-j)) ↷ SU(2,q)/S(U(2)×U(q))",
        l_star_name="(SU(1,j)/S(U(1)×U(j))) × (SU(1,q-j)/S(U(1)×U(q-j)))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", "2q-4", "2j-2", "2q-2j-2"),
            ("b", 2, 0, 2),
            ("a+b", "2q-4", "2q-2j-2", "2j-2"),
            ("2a+b", 2, 0, 2),
            ("2a", 1, 1, 0),
            ("2a+2b", 2, 1, 0),
        ),
        params=(ParamSpec("q", 3, 3), ParamSpec("j", 2, 1)),
        table31=Table31Golden(
            interior=_point(0.40878, 0.660012,
                            note="catalog interior equilibrium at q=3, j=2 is (π/5, π/10)"),
            edges=(
                _point(0.0, 0.31416, note="catalog edge maximizer on x1=0 is (0, 0.361367)"),
                _point(0.560791, 0.560791, note="printed point is not on the catalog simplex boundary"),
                _point(0.428528, PI / 4, note="printed point is not on the catalog simplex boundary"),
            ),
        ),
        known_inconsistencies=(
            "H multiplicity of α prints as 2q-2j-6, negative at q=3, j=2; the catalog uses 2q-2j-2, "
            "the value that makes V + H equal the total",
            "2α+2β prints total 2 with V multiplicity 1 and no H entry",
            "x-component of 2tan(x-y) prints with sign -2 while the y-component also prints -2",
        ),
    ),
    HermannActionSpec(
        id="SU2U2_SU4_SU2U2_nonisotropy",
        display_name="S(U(2)×U(2)) ↷ SU(4)/S(U(2)×U(2)) (non-isotropy)",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 2, 1, 1), ("b", 1, 0, 1), ("a+b", 2, 1, 1), ("2a+b", 1, 0, 1)),
        table31=Table31Golden(interior=_point(0.477658, 0.477658), edges=_NONISO_EDGES),
    ),
    HermannActionSpec(
        id="SOj1SOqj1_SOq2_SO2SOq",
        display_name="SO(j+1)×SO(q-j+1) ↷ SO(q+2)/SO(2)×SO(q)",
        dual_name="SO(1,j)×SO(1,q-j) ↷ SO(2,q)/SO(2)×SO(q)",
        l_star_name="(SO_0(1,j)/SO(j)) × (SO_0(1,q-j)/SO(q-j))",
        kind=RootSystemKind.B2,
        roots=_roots(
            ("a", "q-2", "j-1", "q-j-1"),
            ("b", 1, 0, 1),
            ("a+b", "q-2", "q-j-1", "j-1"),
            ("2a+b", 1, 0, 1),
        ),
        params=(ParamSpec("q", 4, 2), ParamSpec("j", 2, 1)),
        table31=Table31Golden(
            interior=_point(0.669504, 0.430285,
                            note="printed values carry no (q, j); at the preset q=4, j=2 the catalog "
                                 "equilibrium is (0.477658, 0.477658)"),
            edges=_NONISO_EDGES,
        ),
    ),
    HermannActionSpec(
        id="SO4SO4_SO8_U4",
        display_name="SO(4)×SO(4) ↷ SO(8)/U(4)",
        dual_name="SO*(4)×SO*(4) ↷ SO*(8)/U(4)",
        l_star_name="SU(2,2)/S(U(2)×U(2))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 2, 2), ("b", 1, 1, 0), ("a+b", 4, 2, 2), ("2a+b", 1, 1, 0)),
        table31=Table31Golden(
            interior=_point(1.11297, 0.567154,
                            note="printed point lies outside the catalog simplex; catalog interior "
                                 "equilibrium is (0.553574, 1.017222)"),
            edges=(
                _point(0.0, 0.85707, note="catalog edge maximizer on x1=0 is (0, 0.955317)"),
                _point(PI / 4, PI / 4, exact=True),
                _point(1.00685, PI / 2, note="catalog edge maximizer on x2=π/2 is (0.615480, π/2)"),
            ),
        ),
        known_inconsistencies=(
            "cot(x+y) prints with coefficient 2 in both components; 2α+β has V multiplicity 1",
            "printed domain 0 < y < x, x + y < π differs from the catalog simplex",
        ),
    ),
    HermannActionSpec(
        id="rho3_SO4SO4_SO8_U4",
        display_name="ρ3(SO(4)×SO(4)) ↷ SO(8)/U(4)",
        dual_name="SO(4,C) ↷ SO*(8)/U(4)",
        l_star_name="SO(4,C)/SO(4)",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 2, 2), ("b", 1, 0, 1), ("a+b", 4, 2, 2), ("2a+b", 1, 0, 1)),
        table31=Table31Golden(
            interior=_point(0.553574, 0.553574),
            edges=(
                _point(0.0, 1.00685,
                       note="printed point lies outside the catalog simplex; the edge maximizer on "
                            "x1=0 is (0, 0.615480)"),
                _point(0.61548, 0.0),
                _point(PI / 4, PI / 4, exact=True),
            ),
        ),
    ),
    HermannActionSpec(
        id="rho4_U4_SO8_U4",
        display_name="ρ4(U(4)) ↷ SO(8)/U(4)",
        dual_name="U(2,2) ↷ SO*(8)/U(4)",
        l_star_name="(SO*(4)/U(2)) × (SO*(4)/U(2))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 1, 3), ("b", 1, 0, 1), ("a+b", 4, 1, 3), ("2a+b", 1, 0, 1)),
        table31=Table31Golden(
            interior=_point(0.390322, 0.542954,
                            note="root data are symmetric under x1 <-> x2, so the unique equilibrium "
                                 "lies on the diagonal at (0.404724, 0.404724)"),
            edges=(
                _point(0.0, 0.42053),
                _point(0.42053, 0.0),
                _point(PI / 4, PI / 4, exact=True),
            ),
        ),
        known_inconsistencies=(
            "boundary field on x1 + x2 = π/2 is not tangent to the edge",
        ),
    ),
    HermannActionSpec(
        id="SO4SO6_SO10_U5",
        display_name="SO(4)×SO(6) ↷ SO(10)/U(5)",
        dual_name="SO*(4)×SO*(6) ↷ SO*(10)/U(5)",
        l_star_name="SU(2,3)/S(U(2)×U(3))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 4, 2, 2), ("b", 4, 2, 2), ("a+b", 4, 2, 2),
            ("2a+b", 4, 2, 2), ("2a", 1, 1, 0), ("2a+2b", 1, 1, 0),
        ),
        table31=Table31Golden(
            interior=_point(0.443039, 0.785398,
                            note="catalog interior equilibrium is (0.356862, π/4)"),
            edges=(
                _point(0.0, PI / 4, exact=True),
                _point(0.0, 0.0, exact=True, note=VERTEX_NOT_EDGE),
                _point(PI / 4, PI / 4, exact=True, note=VERTEX_NOT_EDGE),
            ),
        ),
        known_inconsistencies=(
            "explicit field formula prints every coefficient at half the catalog value",
            "y-component of cot(x-y) prints -1 where the β pairing requires +1",
        ),
    ),
    HermannActionSpec(
        id="SO5SO5_SO10_U5",
        display_name="SO(5)×SO(5) ↷ SO(10)/U(5)",
        dual_name="SO(5,C) ↷ SO*(10)/U(5)",
        l_star_name="SO(5,C)/SO(5)",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 4, 2, 2), ("b", 4, 2, 2), ("a+b", 4, 2, 2),
            ("2a+b", 4, 2, 2), ("2a", 1, 0, 1), ("2a+2b", 1, 0, 1),
        ),
        table31=Table31Golden(
            interior=_point(0.28557, 0.615128,
                            note="catalog interior equilibrium is (0.266648, 0.611950)"),
            edges=(
                _point(0.0, 0.5916),
                _point(0.44304, 0.44304),
                _point(0.5916, PI / 4, note="catalog edge maximizer on x2=π/4 is (0.281971, π/4)"),
            ),
        ),
        known_inconsistencies=(
            "explicit field formula prints every coefficient at half the catalog value",
            "y-component of cot(x-y) prints -1 where the β pairing requires +1",
        ),
    ),
    HermannActionSpec(
        id="rho5_U5_SO10_U5",
        display_name="ρ5(U(5)) ↷ SO(10)/U(5)",
        dual_name="U(2,3) ↷ SO*(10)/U(5)",
        l_star_name="(SO*(4)/U(2)) × (SO*(6)/U(3))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 4, 4, 0), ("b", 4, 0, 4), ("a+b", 4, 0, 4),
            ("2a+b", 4, 0, 4), ("2a", 1, 1, 0), ("2a+2b", 1, 1, 0),
        ),
        table31=Table31Golden(
            interior=_point(0.622334, 0.234738),
            edges=(
                _point(0.0, 0.36137, note="catalog edge maximizer on x1=0 is (0, 0.270550)"),
                _point(0.64052, 0.0),
                _point(0.54453, 1.02627,
                       note="printed point lies outside the catalog simplex; the edge maximizer on "
                            "x1 + x2 = π/2 is (0.991157, 0.579640)"),
            ),
        ),
    ),
    HermannActionSpec(
        id="SO2sqSO3sq_SO5SO5_SO5",
        display_name="SO(2)²×SO(3)² ↷ (SO(5)×SO(5))/SO(5)",
        dual_name="SO(2,C)×SO(3,C) ↷ SO(5,C)/SO(5)",
        l_star_name="SO_0(2,3)/SO(2)×SO(3)",
        kind=RootSystemKind.B2,
        roots=_uniform(B2_LABELS, 2, 1, 1),
        table31=_SO2_SO3_GOLDEN,
        known_inconsistencies=(
            "y-component of cot(x+y) prints -2 where the 2α+β pairing requires -1",
        ),
    ),
    HermannActionSpec(
        id="rho6_SO5_SO5SO5_SO5",
        display_name="ρ6(SO(5)) ↷ (SO(5)×SO(5))/SO(5)",
        dual_name="SO_0(2,3) ↷ SO(5,C)/SO(5)",
        l_star_name="(SO(2,C)/SO(2)) × (SO(3,C)/SO(3))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 2, 2, 0), ("b", 2, 0, 2), ("a+b", 2, 0, 2), ("2a+b", 2, 0, 2)),
        known_inconsistencies=(DERIVED_FROM_FORMULA,),
    ),
    HermannActionSpec(
        id="rho7_U2_Sp2_U2",
        display_name="ρ7(U(2)) ↷ Sp(2)/U(2)",
        dual_name="U(1,1) ↷ Sp(2,R)/U(2)",
        l_star_name="(Sp(1,R)/U(1)) × (Sp(1,R)/U(1))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 1, 1, 0), ("b", 1, 0, 1), ("a+b", 1, 1, 0), ("2a+b", 1, 0, 1)),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "boundary field is not tangent to the edges x1 = 0 and x2 = 0",
        ),
    ),
    HermannActionSpec(
        id="SUq2_Spq2_Sp2Spq",
        display_name="SU(q+2) ↷ Sp(q+2)/Sp(2)×Sp(q)",
        dual_name="SU(2,q) ↷ Sp(2,q)/Sp(2)×Sp(q)",
        l_star_name="SU(2,q)/S(U(2)×U(q))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", "4q-8", "2q-4", "2q-4"),
            ("b", 4, 2, 2),
            ("a+b", "4q-8", "2q-4", "2q-4"),
            ("2a+b", 4, 2, 2),
            ("2a", 3, 1, 2),
            ("2a+2b", 3, 1, 2),
        ),
        params=(ParamSpec("q", 3, 3),),
        known_inconsistencies=(DERIVED_FROM_FORMULA,),
    ),
    HermannActionSpec(
        id="SU4_Sp4_Sp2Sp2",
        display_name="SU(4) ↷ Sp(4)/Sp(2)×Sp(2)",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 2, 2), ("b", 3, 1, 2), ("a+b", 4, 2, 1), ("2a+b", 3, 1, 3)),
        table31=Table31Golden(
            interior=_point(0.307799, 0.664173),
            edges=(
                _point(0.0, 0.68472),
                _point(0.0, 0.0, exact=True, note=VERTEX_NOT_EDGE),
                _point(0.0, PI / 2, exact=True, note=VERTEX_NOT_EDGE),
            ),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "formula-derived V + H differs from the totals for α+β (3 vs 4) and 2α+β (4 vs 3)",
        ),
    ),
    HermannActionSpec(
        id="U4_Sp4_Sp2Sp2",
        display_name="U(4) ↷ Sp(4)/Sp(2)×Sp(2)",
        dual_name="U*(4) ↷ Sp(2,2)/Sp(2)×Sp(2)",
        l_star_name="Sp(2,C)/Sp(2)",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 2, 2), ("b", 3, 2, 1), ("a+b", 4, 2, 1), ("2a+b", 3, 2, 2)),
        table31=Table31Golden(
            interior=_point(0.293247, 0.840516),
            edges=(
                _point(0.0, 0.88608),
                _point(0.0, 0.0, exact=True, note=VERTEX_NOT_EDGE),
                _point(0.0, PI / 2, exact=True, note=VERTEX_NOT_EDGE),
            ),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "formula-derived V + H differs from the totals for α+β (3 vs 4) and 2α+β (4 vs 3)",
        ),
    ),
    HermannActionSpec(
        id="Spj1Spqj1_Spq2_Sp2Spq",
        display_name="Sp(j+1)×Sp(q-j+1) ↷ Sp(q+2)/Sp(2)×Sp(q)",
        dual_name="Sp(1,j)×Sp(1,q-j) ↷ Sp(2,q)/Sp(2)×Sp(q)",
        l_star_name="(Sp(1,j)/Sp(1)×Sp(j)) × (Sp(1,q-j)/Sp(1)×Sp(q-j))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", "4q-8", "4j-4", "4q-4j-4"),
            ("b", 4, 0, 4),
            ("a+b", "4q-8", "4q-4j-4", "4j-4"),
            ("2a+b", 4, 0, 4),
            ("2a", 3, 3, 0),
            ("2a+2b", 3, 3, 0),
        ),
        params=(ParamSpec("q", 3, 2), ParamSpec("j", 2, 1)),
        table31=Table31Golden(
            interior=_point(0.589609, 0.52777,
                            note="catalog interior equilibrium at q=3, j=2 is (0.633610, 0.366344)"),
            edges=(
                _point(0.0, 0.42053),
                _point(0.67335, 0.0),
                _point(0.0, PI / 2, exact=True, note=VERTEX_NOT_EDGE),
            ),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "printed domain 0 < x < y, x + y < π/2 differs from the catalog simplex",
        ),
    ),
    HermannActionSpec(
        id="Sp2Sp2_Sp4_Sp2Sp2",
        display_name="Sp(2)×Sp(2) ↷ Sp(4)/Sp(2)×Sp(2)",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 4, 3, 1), ("b", 3, 0, 3), ("a+b", 4, 3, 0), ("2a+b", 3, 0, 4)),
        table31=Table31Golden(
            interior=_point(0.462616, 0.8711,
                            note="x2 prints as 0.8711; the catalog value 0.487110 suggests a dropped digit"),
            edges=(
                _point(0.0, 0.57964),
                _point(0.54947, 0.0),
                _point(0.930274, 0.63355,
                       note="catalog edge maximizer on x1 + x2 = π/2 is (0.746899, 0.823898)"),
            ),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "formula-derived V + H differs from the totals for α+β (3 vs 4) and 2α+β (4 vs 3)",
            "printed domain 0 < x < y, x + y < π/2 differs from the catalog simplex",
        ),
    ),
    HermannActionSpec(
        id="SU2sqSO2sq_Sp2Sp2_Sp2",
        display_name="SU(2)²·SO(2)² ↷ (Sp(2)×Sp(2))/Sp(2)",
        dual_name="SL(2,C)·SO(2,C) ↷ Sp(2,C)/Sp(2)",
        l_star_name="Sp(2,R)/U(2)",
        kind=RootSystemKind.B2,
        roots=_uniform(B2_LABELS, 2, 1, 1),
        table31=_SO2_SO3_GOLDEN,
        known_inconsistencies=(DERIVED_FROM_FORMULA,),
    ),
    HermannActionSpec(
        id="rho8_Sp2_Sp2Sp2_Sp2",
        display_name="ρ8(Sp(2)) ↷ (Sp(2)×Sp(2))/Sp(2)",
        dual_name="Sp(2,R) ↷ Sp(2,C)/Sp(2)",
        l_star_name="(SL(2,C)/SU(2)) × (SO(2,C)/SO(2))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 2, 2, 0), ("b", 2, 0, 2), ("a+b", 2, 2, 0), ("2a+b", 2, 0, 2)),
        table31=Table31Golden(interior=_point(PI / 6, PI / 6, exact=True)),
        known_inconsistencies=(DERIVED_FROM_FORMULA,),
    ),
    HermannActionSpec(
        id="rho9_Sp2_Sp2Sp2_Sp2",
        display_name="ρ9(Sp(2)) ↷ (Sp(2)×Sp(2))/Sp(2)",
        dual_name="Sp(1,1) ↷ Sp(2,C)/Sp(2)",
        l_star_name="(Sp(1,C)/Sp(1)) × (Sp(1,C)/Sp(1))",
        kind=RootSystemKind.B2,
        roots=_roots(("a", 2, 2, 0), ("b", 2, 0, 2), ("a+b", 2, 2, 0), ("2a+b", 2, 0, 2)),
        known_inconsistencies=(DERIVED_FROM_FORMULA,),
    ),
    HermannActionSpec(
        id="Sp4_E6_Spin10U1",
        display_name="Sp(4) ↷ E6/Spin(10)·U(1)",
        dual_name="Sp(2,2) ↷ E6^-14/Spin(10)·U(1)",
        l_star_name="Sp(2,2)/Sp(2)×Sp(2)",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 8, 4, 4), ("b", 6, 3, 3), ("a+b", 9, 3, 6),
            ("2a+b", 5, 4, 1), ("2a", 1, 0, 0), ("2a+2b", 1, 0, 0),
        ),
        known_inconsistencies=(
            DERIVED_FROM_FORMULA,
            "explicit field formula has no 2α or 2α+2β terms although both roots have total multiplicity 1",
        ),
    ),
    HermannActionSpec(
        id="SU6SU2_E6_Spin10U1",
        display_name="SU(6)·SU(2) ↷ E6/Spin(10)·U(1)",
        dual_name="SU(2,4)·SU(2) ↷ E6^-14/Spin(10)·U(1)",
        l_star_name="SU(2,4)/S(U(2)×U(4))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 8, 4, 4), ("b", 6, 2, 4), ("a+b", 9, 4, 5),
            ("2a+b", 5, 2, 1), ("2a", 1, 1, 0), ("2a+2b", 1, 1, 0),
        ),
        known_inconsistencies=(
            "H multiplicity of 2α+β prints as 1 but total minus V gives 3, and the explicit "
            "formula's 3tan(x+y) supports 3; the printed 1 is kept",
        ),
    ),
    HermannActionSpec(
        id="rho10_SU6SU2_E6_Spin10U1",
        display_name="ρ10(SU(6)·SU(2)) ↷ E6/Spin(10)·U(1)",
        dual_name="SU(1,5)·SL(2,R) ↷ E6^-14/Spin(10)·U(1)",
        l_star_name="SO*(10)/U(5)",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 8, 4, 4), ("b", 6, 4, 2), ("a+b", 9, 4, 5),
            ("2a+b", 5, 4, 1), ("2a", 1, 1, 0), ("2a+2b", 1, 1, 0),
        ),
    ),
    HermannActionSpec(
        id="rho11_Spin10U1_E6_Spin10U1",
        display_name="ρ11(Spin(10)·U(1)) ↷ E6/Spin(10)·U(1)",
        dual_name="SO*(10)·U(1) ↷ E6^-14/Spin(10)·U(1)",
        l_star_name="(SU(1,5)/S(U(1)×U(5))) × (SL(2,R)/SO(2))",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 8, 8, 0), ("b", 6, 0, 6), ("a+b", 9, 0, 9),
            ("2a+b", 5, 0, 5), ("2a", 1, 1, 0), ("2a+2b", 1, 1, 0),
        ),
    ),
    HermannActionSpec(
        id="rho12_Spin10U1_E6_Spin10U1",
        display_name="ρ12(Spin(10)·U(1)) ↷ E6/Spin(10)·U(1)",
        dual_name="SO_0(2,8)·U(1) ↷ E6^-14/Spin(10)·U(1)",
        l_star_name="SO_0(2,8)/SO(2)×SO(8)",
        kind=RootSystemKind.BC2,
        roots=_roots(
            ("a", 8, 6, 2), ("b", 6, 1, 5), ("a+b", 9, 6, 3),
            ("2a+b", 5, 1, 4), ("2a", 1, 0, 1), ("2a+2b", 1, 0, 1),
        ),
    ),
    HermannActionSpec(
        id="Sp4_E6_F4",
        display_name="Sp(4) ↷ E6/F4",
        dual_name="Sp(1,3) ↷ E6^-26/F4",
        l_star_name="SU*(6)/Sp(3)",
        kind=RootSystemKind.A2,
        roots=_uniform(A2_LABELS, 8, 4, 4),
    ),
    HermannActionSpec(
        id="rho13_F4_E6_F4",
        display_name="ρ13(F4) ↷ E6/F4",
        dual_name="F4^-20 ↷ E6^-26/F4",
        l_star_name="(SO_0(1,9)/SO(9)) × U(1)",
        kind=RootSystemKind.A2,
        roots=_roots(("a", 8, 8, 0), ("b", 8, 0, 8), ("a+b", 8, 0, 8)),
    ),
    HermannActionSpec(
        id="rho14_SO4_G2_SO4",
        display_name="ρ14(SO(4)) ↷ G2/SO(4)",
        dual_name="SL(2,R)×SL(2,R) ↷ G2^2/SO(4)",
        l_star_name="SO(4)/SO(2)×SO(2)",
        kind=RootSystemKind.G2,
        roots=_roots(
            ("a", 1, 1, 0), ("b", 1, 0, 1), ("a+b", 1, 0, 1),
            ("2a+b", 1, 0, 1), ("3a+b", 1, 0, 1), ("3a+2b", 1, 1, 0),
        ),
    ),
    HermannActionSpec(
        id="rho15_SO4_G2_SO4",
        display_name="ρ15(SO(4)) ↷ G2/SO(4)",
        dual_name="ρ15*(SO(4)) ↷ G2^2/SO(4)",
        l_star_name="(SL(2,R)/SO(2)) × (SL(2,R)/SO(2))",
        kind=RootSystemKind.G2,
        roots=_roots(
            ("a", 1, 1, 0), ("b", 1, 0, 1), ("a+b", 1, 0, 1),
            ("2a+b", 1, 0, 1), ("3a+b", 1, 0, 1), ("3a+2b", 1, 1, 0),
        ),
    ),
    HermannActionSpec(
        id="rho16_G2_G2G2_G2",
        display_name="ρ16(G2) ↷ (G2×G2)/G2",
        dual_name="G2^2 ↷ G2^C/G2",
        l_star_name="(SL(2,C)/SU(2)) × (SL(2,C)/SU(2))",
        kind=RootSystemKind.G2,
        roots=_roots(
            ("a", 2, 2, 0), ("b", 2, 0, 2), ("a+b", 2, 0, 2),
            ("2a+b", 2, 0, 2), ("3a+b", 2, 0, 2), ("3a+2b", 2, 2, 0),
        ),
    ),
    HermannActionSpec(
        id="SU2p4_G2G2_G2",
        display_name="SU(2)^4 ↷ (G2×G2)/G2",
        dual_name="SL(2,C)×SL(2,C) ↷ G2^C/G2",
        l_star_name="G2^2/SO(4)",
        kind=RootSystemKind.G2,
        roots=_uniform(G2_LABELS, 2, 1, 1),
    ),
)
