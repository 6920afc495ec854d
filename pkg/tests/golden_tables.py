"""Multiplicity tables of the published computation, one row per partition
in decreasing lexicographic order."""

# degree 7 rows: (lambda, d, symm, rank, null, new)
TETRAD7 = [
    ((7,), 1, 0, 1, 1, 1),
    ((6, 1), 6, 4, 3, 9, 5),
    ((5, 2), 14, 12, 8, 20, 8),
    ((5, 1, 1), 15, 16, 6, 24, 8),
    ((4, 3), 14, 12, 7, 21, 9),
    ((4, 2, 1), 35, 36, 18, 52, 16),
    ((4, 1, 1, 1), 20, 24, 10, 30, 6),
    ((3, 3, 1), 21, 20, 9, 33, 13),
    ((3, 2, 2), 21, 20, 12, 30, 10),
    ((3, 2, 1, 1), 35, 36, 17, 53, 17),
    ((3, 1, 1, 1, 1), 15, 16, 9, 21, 5),
    ((2, 2, 2, 1), 14, 12, 7, 21, 9),
    ((2, 2, 1, 1, 1), 14, 12, 6, 22, 10),
    ((2, 1, 1, 1, 1, 1), 6, 4, 3, 9, 5),
    ((1, 1, 1, 1, 1, 1, 1), 1, 0, 0, 2, 2),
]

ANTI7 = [
    ((7,), 1, 2, 0, 2, 0),
    ((6, 1), 6, 8, 3, 9, 1),
    ((5, 2), 14, 16, 8, 20, 4),
    ((5, 1, 1), 15, 14, 6, 24, 10),
    ((4, 3), 14, 16, 7, 21, 5),
    ((4, 2, 1), 35, 34, 18, 52, 18),
    ((4, 1, 1, 1), 20, 16, 10, 30, 14),
    ((3, 3, 1), 21, 22, 9, 33, 11),
    ((3, 2, 2), 21, 22, 12, 30, 8),
    ((3, 2, 1, 1), 35, 34, 17, 53, 19),
    ((3, 1, 1, 1, 1), 15, 14, 9, 21, 7),
    ((2, 2, 2, 1), 14, 16, 7, 21, 5),
    ((2, 2, 1, 1, 1), 14, 16, 6, 22, 6),
    ((2, 1, 1, 1, 1, 1), 6, 8, 3, 9, 1),
    ((1, 1, 1, 1, 1, 1, 1), 1, 2, 0, 2, 0),
]

# degree 10 rows: (lambda, d, symm, old, rank, null, new)
TETRAD10 = [
    ((10,), 1, 0, 7, 1, 7, 0),
    ((9, 1), 9, 30, 68, 4, 68, 0),
    ((8, 2), 35, 140, 260, 20, 260, 0),
    ((8, 1, 1), 36, 166, 272, 16, 272, 0),
    ((7, 3), 75, 342, 565, 35, 565, 0),
    ((7, 2, 1), 160, 784, 1200, 80, 1200, 0),
    ((7, 1, 1, 1), 84, 442, 628, 44, 628, 0),
    ((6, 4), 90, 416, 670, 50, 670, 0),
    ((6, 3, 1), 315, 1594, 2365, 155, 2365, 0),
    ((6, 2, 2), 225, 1150, 1680, 120, 1680, 0),
    ((6, 2, 1, 1), 350, 1878, 2630, 170, 2630, 0),
    ((6, 1, 1, 1, 1), 126, 704, 941, 66, 942, 1),
    ((5, 5), 42, 204, 320, 16, 320, 0),
    ((5, 4, 1), 288, 1456, 2160, 144, 2160, 0),
    ((5, 3, 2), 450, 2330, 3380, 220, 3380, 0),
    ((5, 3, 1, 1), 567, 3008, 4244, 291, 4245, 1),
    ((5, 2, 2, 1), 525, 2808, 3939, 260, 3940, 1),
    ((5, 2, 1, 1, 1), 448, 2464, 3357, 224, 3360, 3),
    ((5, 1, 1, 1, 1, 1), 126, 708, 945, 60, 948, 3),
    ((4, 4, 2), 252, 1282, 1880, 136, 1880, 0),
    ((4, 4, 1, 1), 300, 1582, 2260, 140, 2260, 0),
    ((4, 3, 3), 210, 1092, 1580, 100, 1580, 0),
    ((4, 3, 2, 1), 768, 4032, 5760, 384, 5760, 0),
    ((4, 3, 1, 1, 1), 525, 2802, 3933, 265, 3935, 2),
    ((4, 2, 2, 2), 300, 1562, 2239, 160, 2240, 1),
    ((4, 2, 2, 1, 1), 567, 3022, 4260, 276, 4260, 0),
    ((4, 2, 1, 1, 1, 1), 350, 1870, 2616, 180, 2620, 4),
    ((4, 1, 1, 1, 1, 1, 1), 84, 446, 631, 40, 632, 1),
    ((3, 3, 3, 1), 210, 1080, 1569, 110, 1570, 1),
    ((3, 3, 2, 2), 252, 1302, 1900, 116, 1900, 0),
    ((3, 3, 2, 1, 1), 450, 2322, 3368, 230, 3370, 2),
    ((3, 3, 1, 1, 1, 1), 225, 1164, 1693, 105, 1695, 2),
    ((3, 2, 2, 2, 1), 288, 1456, 2159, 144, 2160, 1),
    ((3, 2, 2, 1, 1, 1), 315, 1588, 2358, 160, 2360, 2),
    ((3, 2, 1, 1, 1, 1, 1), 160, 784, 1198, 80, 1200, 2),
    ((3, 1, 1, 1, 1, 1, 1, 1), 36, 162, 268, 20, 268, 0),
    ((2, 2, 2, 2, 2), 42, 192, 309, 26, 310, 1),
    ((2, 2, 2, 2, 1, 1), 90, 428, 680, 40, 680, 0),
    ((2, 2, 2, 1, 1, 1, 1), 75, 336, 559, 40, 560, 1),
    ((2, 2, 1, 1, 1, 1, 1, 1), 35, 146, 265, 15, 265, 0),
    ((2, 1, 1, 1, 1, 1, 1, 1, 1), 9, 28, 67, 5, 67, 0),
    ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1), 1, 2, 8, 0, 8, 0),
]
ANTI10 = [
    ((10,), 1, 8, 8, 0, 8, 0),
    ((9, 1), 9, 64, 68, 4, 68, 0),
    ((8, 2), 35, 222, 264, 15, 265, 1),
    ((8, 1, 1), 36, 218, 269, 19, 269, 0),
    ((7, 3), 75, 442, 555, 40, 560, 5),
    ((7, 2, 1), 160, 896, 1197, 80, 1200, 3),
    ((7, 1, 1, 1), 84, 446, 632, 40, 632, 0),
    ((6, 4), 90, 524, 677, 40, 680, 3),
    ((6, 3, 1), 315, 1722, 2352, 160, 2360, 8),
    ((6, 2, 2), 225, 1200, 1693, 105, 1695, 2),
    ((6, 2, 1, 1), 350, 1798, 2619, 180, 2620, 1),
    ((6, 1, 1, 1, 1), 126, 612, 948, 60, 948, 0),
    ((5, 5), 42, 236, 309, 26, 310, 1),
    ((5, 4, 1), 288, 1568, 2155, 144, 2160, 5),
    ((5, 3, 2), 450, 2390, 3365, 230, 3370, 5),
    ((5, 3, 1, 1), 567, 2960, 4258, 276, 4260, 2),
    ((5, 2, 2, 1), 525, 2698, 3935, 265, 3935, 0),
    ((5, 2, 1, 1, 1), 448, 2240, 3360, 224, 3360, 0),
    ((5, 1, 1, 1, 1, 1), 126, 604, 942, 66, 942, 0),
    ((4, 4, 2), 252, 1358, 1899, 116, 1900, 1),
    ((4, 4, 1, 1), 300, 1562, 2239, 160, 2240, 1),
    ((4, 3, 3), 210, 1124, 1568, 110, 1570, 2),
    ((4, 3, 2, 1), 768, 4032, 5760, 384, 5760, 0),
    ((4, 3, 1, 1, 1), 525, 2702, 3940, 260, 3940, 0),
    ((4, 2, 2, 2), 300, 1582, 2260, 140, 2260, 0),
    ((4, 2, 2, 1, 1), 567, 2944, 4245, 291, 4245, 0),
    ((4, 2, 1, 1, 1, 1), 350, 1810, 2630, 170, 2630, 0),
    ((4, 1, 1, 1, 1, 1, 1), 84, 442, 627, 44, 628, 1),
    ((3, 3, 3, 1), 210, 1132, 1580, 100, 1580, 0),
    ((3, 3, 2, 2), 252, 1338, 1880, 136, 1880, 0),
    ((3, 3, 2, 1, 1), 450, 2402, 3380, 220, 3380, 0),
    ((3, 3, 1, 1, 1, 1), 225, 1184, 1680, 120, 1680, 0),
    ((3, 2, 2, 2, 1), 288, 1568, 2160, 144, 2160, 0),
    ((3, 2, 2, 1, 1, 1), 315, 1726, 2365, 155, 2365, 0),
    ((3, 2, 1, 1, 1, 1, 1), 160, 896, 1200, 80, 1200, 0),
    ((3, 1, 1, 1, 1, 1, 1, 1), 36, 222, 271, 16, 272, 1),
    ((2, 2, 2, 2, 2), 42, 244, 320, 16, 320, 0),
    ((2, 2, 2, 2, 1, 1), 90, 516, 670, 50, 670, 0),
    ((2, 2, 2, 1, 1, 1, 1), 75, 446, 565, 35, 565, 0),
    ((2, 2, 1, 1, 1, 1, 1, 1), 35, 218, 260, 20, 260, 0),
    ((2, 1, 1, 1, 1, 1, 1, 1, 1), 9, 64, 68, 4, 68, 0),
    ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1), 1, 8, 8, 0, 8, 0),
]
