"""Hand-checked reference data used by the verification suites.

Three complete residue tables (moduli 6, 6+12*rho and -6+5*rho) list the
reduced representative of every grid point in row-major grid order
(y outer, x inner).  The energy comparison lists the built-in
Gaussian/Eisenstein modulus pairs together with the expected two-decimal
values of the six energy columns
(E gaussian, E eisenstein, E^2 gaussian, E^2 eisenstein,
 Mannheim gaussian, hexagonal eisenstein).
"""

RESIDUE_TABLE_6 = (
    (0, 0), (1, 0), (2, 0), (3, 0), (-2, 0), (-1, 0),
    (0, 1), (1, 1), (2, 1), (3, 1), (-2, 1), (-1, 1),
    (0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (-1, 2),
    (0, -3), (1, 3), (2, 3), (3, 3), (-2, -3), (-1, -3),
    (0, -2), (1, -2), (2, -2), (-3, -2), (-2, -2), (-1, -2),
    (0, -1), (1, -1), (2, -1), (-3, -1), (-2, -1), (-1, -1),
)

RESIDUE_TABLE_6_12 = (
    # y = 0
    (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (0, 6), (1, 6), (2, 6),
    (3, 6), (4, 6), (5, 6), (6, 6), (-5, 0), (-4, 0), (-3, 0), (-2, 0), (-1, 0),
    # y = 1
    (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (-5, -5), (-4, -5),
    (-3, -5), (-2, -5), (-1, -5), (0, -5), (-5, 1), (-4, 1), (-3, 1), (-2, 1), (-1, 1),
    # y = 2
    (0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (-5, -4), (-4, -4),
    (-3, -4), (-2, -4), (-1, -4), (0, -4), (1, -4), (-4, 2), (-3, 2), (-2, 2), (-1, 2),
    # y = 3
    (0, 3), (1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3), (-5, -3), (-4, -3),
    (-3, -3), (-2, -3), (-1, -3), (0, -3), (1, -3), (2, -3), (-3, 3), (-2, 3), (-1, 3),
    # y = 4
    (0, 4), (1, 4), (2, 4), (3, 4), (4, 4), (5, 4), (6, 4), (-5, -2), (-4, -2),
    (-3, -2), (-2, -2), (-1, -2), (0, -2), (1, -2), (2, -2), (3, -2), (-2, 4), (-1, 4),
    # y = 5
    (0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (5, 5), (6, 5), (-5, -1), (-4, -1),
    (-3, -1), (-2, -1), (-1, -1), (0, -1), (1, -1), (2, -1), (3, -1), (4, -1), (-1, 5),
)

RESIDUE_TABLE_M6_5 = (
    (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0),
    (0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (5, 5),
    (-5, -1), (-4, -1), (-3, -1), (-2, -1), (-1, -1), (0, -1), (1, -1), (2, -1),
    (3, -1), (4, -1),
    (-1, 4), (0, 4), (1, 4), (2, 4), (3, 4), (4, 4), (5, 4),
    (-5, -2), (-4, -2), (-3, -2), (-2, -2), (-1, -2), (0, -2), (1, -2), (2, -2),
    (3, -2),
    (-2, 3), (-1, 3), (0, 3), (1, 3), (2, 3), (3, 3), (4, 3), (5, 3),
    (-5, -3), (-4, -3), (-3, -3), (-2, -3), (-1, -3), (0, -3), (1, -3), (2, -3),
    (-3, 2), (-2, 2), (-1, 2), (0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2),
    (-5, -4), (-4, -4), (-3, -4), (-2, -4), (-1, -4), (0, -4), (1, -4),
    (-4, 1), (-3, 1), (-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1),
    (5, 1),
    (-5, -5), (-4, -5), (-3, -5), (-2, -5), (-1, -5), (0, -5),
    (-5, 0), (-4, 0), (-3, 0), (-2, 0), (-1, 0),
)

#: modulus pair -> expected reduced representatives, row-major grid order
RESIDUE_TABLES = {
    (6, 0): RESIDUE_TABLE_6,
    (6, 12): RESIDUE_TABLE_6_12,
    (-6, 5): RESIDUE_TABLE_M6_5,
}

#: (gaussian modulus, eisenstein modulus, size,
#:  E(G), E(E), E2(G), E2(E), EM(G), EHex(E)) for the built-in comparison
ENERGY_TABLE = (
    ((2, 0), (2, 0), 4, "0.85", "0.75", "1.00", "0.75", "1.00", "0.75"),
    ((3, 0), (3, 0), 9, "1.07", "1.05", "1.33", "1.33", "1.33", "1.11"),
    ((2, 3), (3, 4), 13, "1.36", "1.26", "2.15", "1.85", "1.54", "1.38"),
    ((4, 0), (4, 0), 16, "1.59", "1.40", "3.00", "2.25", "2.00", "1.50"),
    ((-3, 4), (5, 5), 25, "1.90", "1.77", "4.16", "3.60", "2.24", "1.92"),
    ((5, 0), (5, 0), 25, "1.87", "1.77", "4.00", "3.60", "2.40", "1.92"),
    ((6, 0), (6, 0), 36, "2.34", "2.11", "6.33", "5.08", "3.00", "2.31"),
    ((6, 1), (7, 3), 37, "2.32", "2.11", "6.16", "5.03", "2.92", "2.27"),
    ((7, 0), (7, 0), 49, "2.70", "2.46", "8.29", "6.86", "3.51", "2.69"),
    ((8, 0), (8, 0), 64, "3.09", "2.82", "11.00", "9.00", "4.00", "3.09"),
    ((8, 3), (8, 9), 73, "3.27", "2.99", "12.16", "10.11", "4.16", "3.29"),
    ((9, 0), (9, 0), 81, "3.55", "3.17", "14.31", "11.33", "4.65", "3.48"),
    ((10, 0), (10, 0), 100, "3.85", "3.51", "17.00", "13.95", "5.00", "3.87"),
    ((11, 0), (11, 0), 121, "4.19", "3.87", "20.00", "16.91", "5.45", "4.26"),
    ((12, 0), (12, 0), 144, "4.61", "4.22", "24.33", "20.08", "6.00", "4.65"),
    ((13, 0), (13, 0), 169, "4.96", "4.57", "28.00", "23.54", "6.46", "5.04"),
    ((-5, 12), (-7, 8), 169, "4.97", "4.55", "28.17", "23.36", "6.30", "4.97"),
    ((14, 0), (14, 0), 196, "5.38", "4.92", "33.00", "27.32", "7.00", "5.43"),
    ((8, 12), (12, 16), 208, "5.52", "5.06", "34.69", "28.90", "6.87", "5.57"),
    ((15, 0), (15, 0), 225, "5.73", "5.27", "37.33", "31.33", "7.47", "5.82"),
    ((16, 0), (16, 0), 256, "6.14", "5.62", "43.00", "35.63", "8.00", "6.21"),
    ((16, 6), (16, 18), 292, "6.54", "6.00", "48.67", "40.57", "8.35", "6.63"),
    ((18, 3), (21, 9), 333, "6.98", "6.40", "55.50", "46.25", "9.06", "7.00"),
)

BUILTIN_PAIRS = tuple((g, e) for g, e, *_ in ENERGY_TABLE)
