"""Known index sets (1-based positions in the canonical word) used as fixed expectations."""

GR47 = [
    (1, 2, 3, 5, 6, 7), (1, 2, 3, 5, 6, 12), (1, 2, 5, 6, 8, 12), (1, 2, 3, 5, 11, 12),
    (1, 2, 5, 8, 11, 12), (1, 5, 7, 8, 11, 12), (1, 2, 3, 10, 11, 12), (1, 2, 8, 10, 11, 12),
    (1, 7, 8, 10, 11, 12), (6, 7, 8, 10, 11, 12),
]

GR46 = [(1, 2, 3), (1, 2, 8), (1, 7, 8), (6, 7, 8)]

LG48 = [
    (1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 10), (1, 2, 3, 4, 9, 10), (1, 2, 4, 6, 9, 10),
    (1, 2, 3, 8, 9, 10), (1, 2, 6, 8, 9, 10), (1, 5, 6, 8, 9, 10), (3, 5, 6, 8, 9, 10),
]

OG510 = [(1, 2, 3), (1, 2, 10), (1, 5, 10), (1, 9, 10), (6, 9, 10)]

CAYLEY = [
    (1, 2, 3, 5, 6), (1, 2, 3, 5, 16), (1, 2, 3, 8, 16), (1, 2, 7, 8, 16),
    (1, 2, 3, 15, 16), (1, 2, 7, 15, 16), (1, 2, 10, 15, 16), (1, 9, 10, 15, 16),
    (1, 2, 14, 15, 16), (1, 9, 14, 15, 16), (1, 13, 14, 15, 16), (12, 13, 14, 15, 16),
]

# all 78, in the listed (lexicographic) order
FREUDENTHAL = [
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10), (1, 2, 3, 4, 5, 6, 7, 8, 9, 27), (1, 2, 3, 4, 5, 6, 7, 8, 16, 27),
    (1, 2, 3, 4, 5, 6, 7, 8, 26, 27), (1, 2, 3, 4, 5, 6, 7, 15, 16, 27), (1, 2, 3, 4, 5, 6, 7, 15, 26, 27),
    (1, 2, 3, 4, 5, 6, 7, 18, 26, 27), (1, 2, 3, 4, 5, 6, 7, 25, 26, 27), (1, 2, 3, 4, 5, 6, 13, 15, 16, 27),
    (1, 2, 3, 4, 5, 6, 13, 15, 26, 27), (1, 2, 3, 4, 5, 6, 13, 18, 26, 27), (1, 2, 3, 4, 5, 6, 13, 25, 26, 27),
    (1, 2, 3, 4, 5, 6, 17, 18, 26, 27), (1, 2, 3, 4, 5, 6, 17, 25, 26, 27), (1, 2, 3, 4, 5, 6, 20, 25, 26, 27),
    (1, 2, 3, 4, 5, 6, 24, 25, 26, 27), (1, 2, 3, 4, 5, 12, 13, 15, 16, 27), (1, 2, 3, 4, 5, 12, 13, 15, 26, 27),
    (1, 2, 3, 4, 5, 12, 13, 18, 26, 27), (1, 2, 3, 4, 5, 12, 13, 25, 26, 27), (1, 2, 3, 4, 5, 12, 17, 18, 26, 27),
    (1, 2, 3, 4, 5, 12, 17, 25, 26, 27), (1, 2, 3, 4, 5, 12, 20, 25, 26, 27), (1, 2, 3, 4, 5, 12, 24, 25, 26, 27),
    (1, 2, 3, 4, 5, 19, 20, 25, 26, 27), (1, 2, 3, 4, 5, 19, 24, 25, 26, 27), (1, 2, 3, 4, 5, 23, 24, 25, 26, 27),
    (1, 2, 3, 4, 6, 14, 17, 18, 26, 27), (1, 2, 3, 4, 6, 14, 17, 25, 26, 27), (1, 2, 3, 4, 6, 14, 20, 25, 26, 27),
    (1, 2, 3, 4, 6, 14, 24, 25, 26, 27), (1, 2, 3, 4, 6, 21, 24, 25, 26, 27), (1, 2, 3, 4, 12, 14, 17, 18, 26, 27),
    (1, 2, 3, 4, 12, 14, 17, 25, 26, 27), (1, 2, 3, 4, 12, 14, 20, 25, 26, 27), (1, 2, 3, 4, 12, 14, 24, 25, 26, 27),
    (1, 2, 3, 4, 12, 21, 24, 25, 26, 27), (1, 2, 3, 4, 14, 19, 20, 25, 26, 27), (1, 2, 3, 4, 14, 19, 24, 25, 26, 27),
    (1, 2, 3, 4, 14, 23, 24, 25, 26, 27), (1, 2, 3, 4, 19, 21, 24, 25, 26, 27), (1, 2, 3, 4, 21, 23, 24, 25, 26, 27),
    (1, 2, 3, 7, 12, 14, 17, 18, 26, 27), (1, 2, 3, 7, 12, 14, 17, 25, 26, 27), (1, 2, 3, 7, 12, 14, 20, 25, 26, 27),
    (1, 2, 3, 7, 12, 14, 24, 25, 26, 27), (1, 2, 3, 7, 12, 21, 24, 25, 26, 27), (1, 2, 3, 7, 14, 19, 20, 25, 26, 27),
    (1, 2, 3, 7, 14, 19, 24, 25, 26, 27), (1, 2, 3, 7, 14, 23, 24, 25, 26, 27), (1, 2, 3, 7, 19, 21, 24, 25, 26, 27),
    (1, 2, 3, 7, 21, 23, 24, 25, 26, 27), (1, 2, 3, 13, 14, 19, 20, 25, 26, 27), (1, 2, 3, 13, 14, 19, 24, 25, 26, 27),
    (1, 2, 3, 13, 14, 23, 24, 25, 26, 27), (1, 2, 3, 13, 19, 21, 24, 25, 26, 27), (1, 2, 3, 13, 21, 23, 24, 25, 26, 27),
    (1, 2, 3, 17, 19, 21, 24, 25, 26, 27), (1, 2, 3, 17, 21, 23, 24, 25, 26, 27), (1, 2, 3, 20, 21, 23, 24, 25, 26, 27),
    (1, 2, 8, 13, 14, 19, 20, 25, 26, 27), (1, 2, 8, 13, 14, 19, 24, 25, 26, 27), (1, 2, 8, 13, 14, 23, 24, 25, 26, 27),
    (1, 2, 8, 13, 19, 21, 24, 25, 26, 27), (1, 2, 8, 13, 21, 23, 24, 25, 26, 27), (1, 2, 8, 17, 19, 21, 24, 25, 26, 27),
    (1, 2, 8, 17, 21, 23, 24, 25, 26, 27), (1, 2, 8, 20, 21, 23, 24, 25, 26, 27), (1, 2, 15, 17, 19, 21, 24, 25, 26, 27),
    (1, 2, 15, 17, 21, 23, 24, 25, 26, 27), (1, 2, 15, 20, 21, 23, 24, 25, 26, 27), (1, 2, 18, 20, 21, 23, 24, 25, 26, 27),
    (1, 9, 15, 17, 19, 21, 24, 25, 26, 27), (1, 9, 15, 17, 21, 23, 24, 25, 26, 27), (1, 9, 15, 20, 21, 23, 24, 25, 26, 27),
    (1, 9, 18, 20, 21, 23, 24, 25, 26, 27), (1, 16, 18, 20, 21, 23, 24, 25, 26, 27), (10, 16, 18, 20, 21, 23, 24, 25, 26, 27),
]

# OG(5,10) quiver drawing, arrows as pairs of word positions
OG510_ARROWS = {
    (1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (4, 7),
    (5, 6), (5, 8), (6, 9), (7, 8), (8, 9), (9, 10),
}
