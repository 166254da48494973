"""
Printed Field Formulas

Transcriptions of the explicit mean-curvature field formulas printed for each
catalog row, kept literally (including the terms that no root pairing can
produce). A summand is (coefficient, "tan" | "cot", a, b) and stands for
coefficient * fn(a*x + b*y); parametric coefficients are affine strings in
q and j. Domains are lists of half-planes (a, b, c) meaning a*x + b*y < c.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

PI = math.pi
S3 = math.sqrt(3.0)
T = "tan"
C = "cot"

Coefficient = Union[float, str]
RawSummand = Tuple[Coefficient, str, float, float]
HalfPlane = Tuple[float, float, float]


@dataclass(frozen=True)
class PrintedRow:
    x_terms: Tuple[RawSummand, ...]
    y_terms: Tuple[RawSummand, ...]
    domain: Tuple[HalfPlane, ...]
    domain_text: str
    scale: float = 1.0
    flagged_terms: Tuple[str, ...] = ()


@dataclass(frozen=True)
class BoundaryRow:
    """Printed boundary field on one edge, as functions of (x, y)."""

    wall_label: str
    text: str
    x_terms: Tuple[RawSummand, ...]
    y_terms: Tuple[RawSummand, ...]


D1 = ((-1.0, 0.0, 0.0), (1.0, -1.0, 0.0), (0.0, 1.0, PI / 4))
D1_TEXT = "0 < x < y < π/4"
D2 = ((-1.0, 0.0, 0.0), (0.0, -1.0, 0.0), (1.0, 1.0, PI / 2))
D2_TEXT = "0 < x, 0 < y, x + y < π/2"
D3 = ((-1.0, 0.0, 0.0), (1.0, -1.0, 0.0), (1.0, 1.0, PI / 2))
D3_TEXT = "0 < x < y, x + y < π/2"

A2_WIDE = ((-1.0, 0.0, 0.0), (1 / S3, -1.0, PI / (2 * S3)), (1 / S3, 1.0, PI / (2 * S3)))
A2_WIDE_TEXT = "0 < x, x/√3 - π/(2√3) < y < π/(2√3) - x/√3"
A2_NARROW = ((-1.0, 0.0, 0.0), (1 / S3, -1.0, 0.0), (1 / S3, 1.0, PI / (2 * S3)))
A2_NARROW_TEXT = "0 < x, x/√3 < y < π/(2√3) - x/√3"
G2_DOMAIN = ((-1.0, 0.0, 0.0), (0.0, -1.0, 0.0), (S3, 1.0, PI / (2 * S3)))
G2_DOMAIN_TEXT = "0 < x, 0 < y, √3x + y < π/(2√3)"

_SO2_SO3_X = ((-1, C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), (1, T, 1, 0), (1, T, 1, -1), (1, T, 1, 1))

_RHO8_ROW = PrintedRow(
    x_terms=((-1, C, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
    y_terms=((-1, C, 0, 1), (-1, T, 1, -1), (1, T, 1, 1)),
    domain=D2, domain_text=D2_TEXT, scale=2.0,
)

_G2_X = ((-2, C, 2, 0), (-3, T, 3, -S3), (-1, T, 1, -S3), (1, T, 1, S3), (3, T, 3, S3))
_G2_Y = ((-2 * S3, C, 0, 2 * S3), (-S3, T, 3, -S3), (-S3, T, 1, -S3), (-S3, T, 1, S3), (S3, T, 3, S3))
_G2_FLAGS = (
    "printed -3tan(3x-√3y) in the x-component; the catalog pairing gives +3tan(3x-√3y)",
    "printed -tan(x-√3y) in the x-component; the catalog pairing gives +tan(x-√3y)",
    "printed -√3tan(x+√3y) in the y-component; the catalog pairing gives +√3tan(x+√3y)",
)

PRINTED_ROWS: Dict[str, PrintedRow] = {
    "rho1_SO3_SU3_SO3": PrintedRow(
        x_terms=((1, T, 1, S3), (-2, C, 2, 0), (1, T, 1, -S3)),
        y_terms=((S3, T, 1, S3), (-S3, T, 1, -S3)),
        domain=A2_WIDE, domain_text=A2_WIDE_TEXT,
    ),
    "SO6_SU6_Sp3": PrintedRow(
        x_terms=((-4, C, 2, 0), (-2, C, 1, -S3), (-2, C, 1, S3), (4, T, 2, 0), (2, T, 1, -S3), (2, T, 1, S3)),
        y_terms=((2 * S3, C, 1, -S3), (-2 * S3, C, 1, S3), (-2 * S3, T, 1, -S3), (2 * S3, T, 1, S3)),
        domain=A2_NARROW, domain_text=A2_NARROW_TEXT,
    ),
    "rho2_Sp3_SU6_Sp3": PrintedRow(
        x_terms=((-8, C, 2, 0), (4, T, 1, -S3), (2, T, 1, -S3)),
        y_terms=((4 * S3, T, 1, -S3), (-4 * S3, T, 1, S3)),
        domain=A2_WIDE, domain_text=A2_WIDE_TEXT,
        flagged_terms=(
            "printed 4tan(x-√3y) + 2tan(x-√3y) repeats one argument in the x-component; "
            "the catalog gives 4tan(x-√3y) + 4tan(x+√3y)",
            "printed 4√3tan(x-√3y) - 4√3tan(x+√3y) in the y-component; "
            "the catalog gives -4√3tan(x-√3y) + 4√3tan(x+√3y)",
        ),
    ),
    "SOq2_SUq2_SU2Uq": PrintedRow(
        x_terms=(("-q+2", C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), ("q-2", T, 1, 0),
                 (-1, T, 1, -1), (1, T, 1, 1), (1, T, 2, 0)),
        y_terms=((1, C, 1, -1), ("-q+2", C, 0, 1), (-1, C, 1, 1), (-1, T, 1, -1),
                 ("q-2", T, 0, 1), (1, T, 1, 1), (2, T, 0, 2)),
        domain=D1, domain_text=D1_TEXT,
        flagged_terms=(
            "printed (q-2)tan x, tan(x+y) and tan(x-y) coefficients; the catalog H multiplicities "
            "give (2q-4)tan x, 2tan(x+y) and 2tan(x-y)",
            "printed tan 2x and 2tan 2y; no integer multiplicity of 2α or 2α+2β produces "
            "different coefficients in the two components",
            "printed -tan(x-y) in the x-component; the β pairing gives +tan(x-y)",
        ),
    ),
    "SO4_SU4_SU2U2": PrintedRow(
        x_terms=((-1, C, 1, 0), (1, T, 1, 0), (-1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, C, 0, 1), (-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=D1, domain_text=D1_TEXT,
        flagged_terms=(
            "printed -tan(x-y) in the x-component; the β pairing gives +tan(x-y)",
        ),
    ),
    "SUj1Uqj1_SUq2_SU2Uq": PrintedRow(
        x_terms=(("-2j+2", C, 1, 0), (-2, C, 2, 0), ("2q-2j-2", T, 1, 0), (-2, T, 1, -1), (2, T, 1, 1)),
        y_terms=(("-2q+2j+2", C, 0, 1), (-2, C, 0, 2), (-2, T, 1, -1), ("2j-2", T, 0, 1), (2, T, 1, 1)),
        domain=D1, domain_text=D1_TEXT,
        flagged_terms=(
            "printed -2tan(x-y) in the x-component; the β pairing gives +2tan(x-y)",
        ),
    ),
    "SU2U2_SU4_SU2U2_nonisotropy": PrintedRow(
        x_terms=((-1, C, 1, 0), (1, T, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, C, 0, 1), (-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "SOj1SOqj1_SOq2_SO2SOq": PrintedRow(
        x_terms=(("-j+1", C, 1, 0), ("q-j-1", T, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=(("-q+j+1", C, 0, 1), (-1, T, 1, -1), ("j-1", T, 0, 1), (1, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "SO4SO4_SO8_U4": PrintedRow(
        x_terms=((-2, C, 1, 0), (-1, C, 1, -1), (-2, C, 1, 1), (2, T, 1, 0)),
        y_terms=((1, C, 1, -1), (-2, C, 0, 1), (-2, C, 1, 1), (2, T, 0, 1)),
        domain=((0.0, -1.0, 0.0), (-1.0, 1.0, 0.0), (1.0, 1.0, PI)),
        domain_text="0 < y < x, x + y < π",
        flagged_terms=(
            "printed -2cot(x+y) in both components; the catalog gives -cot(x+y) from 2α+β with V multiplicity 1",
        ),
    ),
    "rho3_SO4SO4_SO8_U4": PrintedRow(
        x_terms=((-2, C, 1, 0), (2, T, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-2, C, 0, 1), (-1, T, 1, -1), (2, T, 0, 1), (1, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "rho4_U4_SO8_U4": PrintedRow(
        x_terms=((-1, C, 1, 0), (3, T, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, C, 0, 1), (-1, T, 1, -1), (3, T, 0, 1), (1, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "SO4SO6_SO10_U5": PrintedRow(
        x_terms=((-1, C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), (-1, C, 2, 0),
                 (1, T, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, C, 1, -1), (-1, C, 0, 1), (-1, C, 1, 1), (-1, C, 0, 2),
                 (-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
        flagged_terms=(
            "every printed coefficient is half the catalog value (V and H multiplicities 2)",
            "printed -cot(x-y) in the y-component; the β pairing gives +cot(x-y)",
        ),
    ),
    "SO5SO5_SO10_U5": PrintedRow(
        x_terms=((-1, C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), (1, T, 1, 0),
                 (1, T, 1, -1), (1, T, 1, 1), (1, T, 2, 0)),
        y_terms=((-1, C, 1, -1), (-1, C, 0, 1), (-1, C, 1, 1), (-1, T, 1, -1),
                 (1, T, 0, 1), (1, T, 1, 1), (1, T, 0, 2)),
        domain=D1, domain_text=D1_TEXT,
        flagged_terms=(
            "every printed coefficient is half the catalog value (V and H multiplicities 2)",
            "printed -cot(x-y) in the y-component; the β pairing gives +cot(x-y)",
        ),
    ),
    "rho5_U5_SO10_U5": PrintedRow(
        x_terms=((-2, C, 1, 0), (-1, C, 2, 0), (2, T, 1, -1), (2, T, 1, 1)),
        y_terms=((-1, C, 0, 2), (-2, T, 1, -1), (2, T, 1, 1), (2, T, 0, 1)),
        domain=D2, domain_text=D2_TEXT, scale=2.0,
    ),
    "SO2sqSO3sq_SO5SO5_SO5": PrintedRow(
        x_terms=_SO2_SO3_X,
        y_terms=((1, C, 1, -1), (-1, C, 0, 1), (-2, C, 1, 1), (-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
        flagged_terms=(
            "printed -2cot(x+y) in the y-component; the x-component and the 2α+β pairing give -cot(x+y)",
        ),
    ),
    "rho6_SO5_SO5SO5_SO5": PrintedRow(
        x_terms=((-1, C, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=((-1.0, 0.0, 0.0), (1.0, -1.0, PI / 2), (1.0, 1.0, PI / 2)),
        domain_text="0 < x, x - π/2 < y < π/2 - x",
        scale=2.0,
    ),
    "rho7_U2_Sp2_U2": PrintedRow(
        x_terms=((-1, C, 1, 0), (1, T, 1, -1), (1, T, 1, 1)),
        y_terms=((-1, C, 0, 1), (-1, T, 1, -1), (1, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "SUq2_Spq2_Sp2Spq": PrintedRow(
        x_terms=(("-2q+4", C, 1, 0), (-2, C, 1, -1), (-2, C, 1, 1), (-2, C, 2, 0),
                 ("2q-4", T, 1, 0), (2, T, 1, -1), (2, T, 1, 1), (4, T, 2, 0)),
        y_terms=((2, C, 1, -1), ("-2q+4", C, 0, 1), (-2, C, 1, 1), (-2, C, 0, 2),
                 (-2, T, 1, -1), ("2q-4", T, 0, 1), (2, T, 1, 1), (4, T, 0, 2)),
        domain=D1, domain_text=D1_TEXT,
    ),
    "SU4_Sp4_Sp2Sp2": PrintedRow(
        x_terms=((-2, C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), (2, T, 1, 0), (2, T, 1, -1), (3, T, 1, 1)),
        y_terms=((1, C, 1, -1), (-2, C, 0, 1), (-1, C, 1, 1), (-2, T, 1, -1), (1, T, 0, 1), (3, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "U4_Sp4_Sp2Sp2": PrintedRow(
        x_terms=((-2, C, 1, 0), (-2, C, 1, -1), (-2, C, 1, 1), (2, T, 1, 0), (1, T, 1, -1), (2, T, 1, 1)),
        y_terms=((2, C, 1, -1), (-2, C, 0, 1), (-2, C, 1, 1), (-1, T, 1, -1), (1, T, 0, 1), (2, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "Spj1Spqj1_Spq2_Sp2Spq": PrintedRow(
        x_terms=(("-4j+4", C, 1, 0), (-6, C, 2, 0), ("4q-4j-4", T, 1, 0), (4, T, 1, -1), (4, T, 1, 1)),
        y_terms=(("-4q+4j+4", C, 0, 1), (-6, C, 0, 2), (-4, T, 1, -1), ("4j-4", T, 0, 1), (4, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "Sp2Sp2_Sp4_Sp2Sp2": PrintedRow(
        x_terms=((-3, C, 1, 0), (1, T, 1, 0), (3, T, 1, -1), (4, T, 1, 1)),
        y_terms=((-3, C, 0, 1), (-3, T, 1, -1), (4, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "SU2sqSO2sq_Sp2Sp2_Sp2": PrintedRow(
        x_terms=_SO2_SO3_X,
        y_terms=((1, C, 1, -1), (-1, C, 0, 1), (-1, C, 1, 1), (-1, T, 1, -1), (1, T, 0, 1), (1, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "rho8_Sp2_Sp2Sp2_Sp2": _RHO8_ROW,
    "rho9_Sp2_Sp2Sp2_Sp2": _RHO8_ROW,
    "Sp4_E6_Spin10U1": PrintedRow(
        x_terms=((-4, C, 1, 0), (-3, C, 1, -1), (-4, C, 1, 1), (4, T, 1, 0), (3, T, 1, -1), (1, T, 1, 1)),
        y_terms=((3, C, 1, -1), (-3, C, 0, 1), (-4, C, 1, 1), (-3, T, 1, -1), (6, T, 0, 1), (1, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "SU6SU2_E6_Spin10U1": PrintedRow(
        x_terms=((-4, C, 1, 0), (-2, C, 1, -1), (-2, C, 1, 1), (-2, C, 2, 0),
                 (4, T, 1, 0), (4, T, 1, -1), (3, T, 1, 1)),
        y_terms=((2, C, 1, -1), (-4, C, 0, 1), (-2, C, 1, 1), (-2, C, 0, 2),
                 (-4, T, 1, -1), (5, T, 0, 1), (3, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
        flagged_terms=(
            "printed 3tan(x+y) in both components; the printed root data give H multiplicity 1 "
            "for 2α+β, so the catalog gives tan(x+y)",
        ),
    ),
    "rho10_SU6SU2_E6_Spin10U1": PrintedRow(
        x_terms=((-4, C, 1, 0), (-4, C, 1, -1), (-4, C, 1, 1), (-2, C, 2, 0),
                 (4, T, 1, 0), (2, T, 1, -1), (1, T, 1, 1)),
        y_terms=((4, C, 1, -1), (-4, C, 0, 1), (-4, C, 1, 1), (-2, C, 0, 2),
                 (-2, T, 1, -1), (5, T, 0, 1), (1, T, 1, 1)),
        domain=D3, domain_text=D3_TEXT,
    ),
    "rho11_Spin10U1_E6_Spin10U1": PrintedRow(
        x_terms=((-8, C, 1, 0), (-2, C, 2, 0), (6, T, 1, -1), (5, T, 1, 1)),
        y_terms=((-2, C, 0, 2), (-6, T, 1, -1), (9, T, 0, 1), (5, T, 1, 1)),
        domain=D2, domain_text=D2_TEXT,
    ),
    "rho12_Spin10U1_E6_Spin10U1": PrintedRow(
        x_terms=((-6, C, 1, 0), (-1, C, 1, -1), (-1, C, 1, 1), (-2, C, 2, 0),
                 (5, T, 1, 0), (4, T, 1, -1), (2, T, 1, 1)),
        y_terms=((1, C, 1, -1), (-6, C, 0, 1), (-1, C, 1, 1), (-5, T, 1, -1),
                 (3, T, 0, 1), (4, T, 1, 1), (2, T, 0, 2)),
        domain=D1, domain_text=D1_TEXT,
        flagged_terms=(
            "printed 5tan x; the catalog gives 2tan x from H multiplicity 2",
            "printed 4tan(x-y) in the x-component against -5tan(x-y) in the y-component; "
            "the catalog gives 5tan(x-y) and -5tan(x-y)",
            "printed 2tan(x+y) in the x-component against 4tan(x+y) in the y-component; "
            "the catalog gives 4tan(x+y) in both",
            "printed -2cot 2x; the catalog gives 2tan 2x from 2α with H multiplicity 1",
        ),
    ),
    "Sp4_E6_F4": PrintedRow(
        x_terms=((-8, C, 2, 0), (-4, C, 1, -S3), (-4, C, 1, S3), (8, T, 2, 0), (4, T, 1, -S3), (4, T, 1, S3)),
        y_terms=((4 * S3, C, 1, -S3), (-4 * S3, C, 1, S3), (-4 * S3, T, 1, -S3), (4 * S3, T, 1, S3)),
        domain=A2_NARROW, domain_text=A2_NARROW_TEXT,
    ),
    "rho13_F4_E6_F4": PrintedRow(
        x_terms=((-16, C, 2, 0), (8, T, 3, -S3), (8, T, 1, -S3)),
        y_terms=((-8 * S3, T, 1, -S3), (8 * S3, T, 1, S3)),
        domain=A2_WIDE, domain_text=A2_WIDE_TEXT,
        flagged_terms=(
            "printed 8tan(3x-√3y) in the x-component; the catalog gives 8tan(x+√3y), "
            "which the printed y-component already uses",
        ),
    ),
    "rho14_SO4_G2_SO4": PrintedRow(
        x_terms=_G2_X, y_terms=_G2_Y, domain=G2_DOMAIN, domain_text=G2_DOMAIN_TEXT,
        flagged_terms=_G2_FLAGS,
    ),
    "rho15_SO4_G2_SO4": PrintedRow(
        x_terms=_G2_X, y_terms=_G2_Y, domain=G2_DOMAIN, domain_text=G2_DOMAIN_TEXT,
        flagged_terms=_G2_FLAGS,
    ),
    "rho16_G2_G2G2_G2": PrintedRow(
        x_terms=_G2_X, y_terms=_G2_Y, domain=G2_DOMAIN, domain_text=G2_DOMAIN_TEXT, scale=2.0,
        flagged_terms=_G2_FLAGS,
    ),
    "SU2p4_G2G2_G2": PrintedRow(
        x_terms=((-2, C, 2, 0), (-3, C, 3, -S3), (-1, C, 1, -S3), (-1, C, 1, S3), (-3, C, 3, S3),
                 (2, T, 2, 0), (3, T, 3, -S3), (1, T, 1, -S3), (1, T, 1, S3), (3, T, 3, S3)),
        y_terms=((S3, C, 3, -S3), (-S3, C, 1, -S3), (-S3, C, 1, S3), (-S3, C, 3, S3), (-2 * S3, C, 0, 2 * S3),
                 (-S3, T, 3, -S3), (-S3, T, 1, -S3), (S3, T, 1, S3), (S3, T, 3, S3), (2 * S3, T, 0, 2 * S3)),
        domain=((-1.0, 0.0, 0.0), (S3, -1.0, 0.0), (0.0, 1.0, PI / (4 * S3))),
        domain_text="0 < x, √3x < y < π/(4√3)",
        flagged_terms=(
            "printed -√3cot(x-√3y) in the y-component; the α+β pairing gives +√3cot(x-√3y)",
        ),
    ),
}

# Boundary fields of the worked rank-one example, functions of the edge point (x, y).
BOUNDARY_ROWS: Dict[str, Tuple[BoundaryRow, ...]] = {
    "rho1_SO3_SU3_SO3": (
        BoundaryRow("α=0", "(0, 2√3 tan √3y)", (), ((2 * S3, T, 0, S3),)),
        BoundaryRow("β=-π/2", "(-3cot 2√3y, -√3cot 2√3y)",
                    ((-3, C, 0, 2 * S3),), ((-S3, C, 0, 2 * S3),)),
        BoundaryRow("α+β=π/2", "(3cot 2√3y, -√3cot 2√3y)",
                    ((3, C, 0, 2 * S3),), ((-S3, C, 0, 2 * S3),)),
    ),
}


def printed_row(action_id: str) -> Optional[PrintedRow]:
    return PRINTED_ROWS.get(action_id.split("[")[0])
