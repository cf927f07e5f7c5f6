"""Hand-transcribed objects used as golden data across the test modules."""

# Order-3 ASTs with their rho values.
ORDER3_ASTS = [
    (((1, 0, 0, 0, 0), (1, 0, 0), (1,)), 3),
    (((1, 0, 0, 0, 0), (0, 0, 1), (1,)), 2),
    (((0, 0, 0, 0, 1), (0, 0, 1), (1,)), 1),
    (((0, 0, 0, 0, 1), (1, 0, 0), (1,)), 2),
    (((0, 0, 0, 1, 0), (1, 0, 0), (1,)), 3),
    (((0, 1, 0, 0, 0), (0, 0, 1), (1,)), 1),
    (((0, 0, 1, 0, 0), (1, -1, 1), (1,)), 2),
]

# (3, 0, 2)-ASPs, cut right column restored as zeros.
ASPS_3_0_2 = [
    (((1, 0, 0, 0, 0), (1, 0, 0), (1,)), 3),
    (((0, 0, 0, 1, 0), (1, 0, 0), (1,)), 3),
    (((0, 0, 1, 0, 0), (1, -1, 1), (1,)), 2),
    (((1, 0, 0, 0, 0), (0, 0, 1), (1,)), 2),
    (((0, 1, 0, 0, 0), (0, 0, 1), (1,)), 1),
]

# (3, 1, 3)-ASPs, cut left column restored as zeros.
ASPS_3_1_3 = [
    (((0, 0, 0, 0, 1), (0, 0, 1), (1,)), 1),
    (((0, 1, 0, 0, 0), (0, 0, 1), (1,)), 1),
    (((0, 0, 0, 0, 1), (1, 0, 0), (1,)), 2),
    (((0, 0, 1, 0, 0), (1, -1, 1), (1,)), 2),
    (((0, 0, 0, 1, 0), (1, 0, 0), (1,)), 3),
]

ASPS_3_1_2 = [
    (((0, 0, 0, 1, 0), (1, 0, 0), (1,)), 3),
    (((0, 0, 1, 0, 0), (1, -1, 1), (1,)), 2),
    (((0, 1, 0, 0, 0), (0, 0, 1), (1,)), 1),
]

# A (6, 3, 8)-ASP; its rho is 3 under the column-class definition.
ASP_6_3_8 = (
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, -1, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0),
    (1, -1, 0, 0, 1),
    (1, -1, 1),
    (1,),
)

ORDER4_AST = ((0, 0, 0, 1, 0, 0, 0), (1, 0, -1, 0, 1), (1, 0, 0), (1,))

# (0, 3, 1, 2) Magog pentagons as (a[2,1], a[3,1]) with tau.
MAGOG_0_3_1_2 = [((1, 1), 3), ((2, 2), 3), ((2, 3), 2), ((1, 2), 2), ((1, 3), 1)]

# (0, 10, 4, 11) Magog pentagon, display rows, tau = 5.
MAGOG_0_10_4_11 = (
    (1, 2, 2, 4, 5, 6, 7, 7, 8, 9),
    (1, 2, 2, 4, 5, 5, 5, 5, 7),
    (2, 2, 4, 4, 4, 4, 5),
    (2, 2, 2, 2, 3),
)

# (0, 4, 2, 2) Magog pentagons as (a[3,1], a[4,1]).
MAGOG_0_4_2_2 = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]

# (0, 4, 2, 3) Gog pentagons as (a[3,2], a[4,1]).
GOG_0_4_2_3 = [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (4, 4)]

# (0, 6, 4, 2) Gog pentagon: full trapezoid and its free cells.
GOG_0_6_4_2_FULL = ((1, 2, 3, 4), (1, 3, 4, 5), (2, 3, 4, 5), (2, 4, 5), (5, 6), (6,))
GOG_0_6_4_2_FREE = ((3, 4), (3, 4, 5), (2, 3, 4, 5), (2, 4, 5), (5, 6), (6,))

ASM_7 = (
    (0, 0, 0, 1, 0, 0, 0),
    (0, 1, 0, -1, 1, 0, 0),
    (1, -1, 0, 1, -1, 1, 0),
    (0, 0, 1, -1, 0, 0, 1),
    (0, 1, -1, 1, 0, 0, 0),
    (0, 0, 1, -1, 1, 0, 0),
    (0, 0, 0, 1, 0, 0, 0),
)

ASM_6 = (
    (0, 0, 1, 0, 0, 0),
    (1, 0, -1, 1, 0, 0),
    (0, 0, 1, -1, 0, 1),
    (0, 1, -1, 1, 0, 0),
    (0, 0, 1, -1, 1, 0),
    (0, 0, 0, 1, 0, 0),
)
ASM_6_TRIANGLE = ((1, 2, 3, 4, 5, 6), (1, 2, 4, 5, 6), (2, 3, 5, 6), (2, 4, 5), (3, 5), (4,))

# The five 3x3 ASMs whose top-right corner entry is zero.
ASMS_3_TR1 = [
    ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
]

# Order-10 path tuple for (l, r) = (1, 12) and its images along the chain.
WORKED_N, WORKED_L, WORKED_R = 10, 1, 12
WORKED_STEPS = ("N", "NE", "NEN", "ENNE", "ENNNE", "EENNNE", "EEENNNN", "NEEENNNE", "EEENENNNN")
# Shifted paths as vertex lists.
WORKED_KISSING = [
    [(0, -1), (0, 0)],
    [(0, -2), (0, -1), (1, -1)],
    [(0, -3), (0, -2), (1, -2), (1, -1)],
    [(0, -4), (1, -4), (1, -3), (1, -2), (2, -2)],
    [(0, -5), (1, -5), (1, -4), (1, -3), (1, -2), (2, -2)],
    [(0, -6), (1, -6), (2, -6), (2, -5), (2, -4), (2, -3), (3, -3)],
    [(0, -7), (1, -7), (2, -7), (3, -7), (3, -6), (3, -5), (3, -4), (3, -3)],
    [(0, -8), (0, -7), (1, -7), (2, -7), (3, -7), (3, -6), (3, -5), (3, -4), (4, -4)],
    [(0, -9), (1, -9), (2, -9), (3, -9), (3, -8), (4, -8), (4, -7), (4, -6), (4, -5), (4, -4)],
]
# GT rows as displayed, left to right.
WORKED_GT = (
    (1,),
    (1, 2),
    (1, 2, 2),
    (1, 2, 2, 4),
    (1, 1, 2, 4, 5),
    (1, 1, 2, 4, 5, 6),
    (1, 1, 1, 2, 4, 5, 7),
    (1, 1, 1, 1, 2, 4, 5, 7),
    (1, 1, 1, 1, 1, 2, 4, 5, 8),
    (1, 1, 1, 1, 1, 1, 3, 5, 7, 9),
)
