"""Signed-permutation data for the 15 basic orthogonal transforms.

Each transform is a list of (target index, source slot, sign) triples;
target indices are 0-based final labels, source slots are the 1-based
labels of the generating-stage basis (slot 16 is the identity, mapped
to final index 0 by every transform).
"""

TRANSFORM_ENTRIES = {
    1: [(3, 1, -1), (2, 2, 1), (5, 3, -1), (4, 4, 1), (7, 5, 1), (6, 6, 1), (9, 7, 1), (8, 8, 1), (11, 9, -1), (10, 10, 1), (13, 11, 1), (12, 12, 1), (15, 13, -1), (14, 14, 1), (1, 15, -1), (0, 16, 1)],
    2: [(12, 1, -1), (14, 2, 1), (1, 3, -1), (3, 4, 1), (7, 5, 1), (5, 6, -1), (6, 7, 1), (4, 8, 1), (11, 9, -1), (9, 10, -1), (10, 11, 1), (8, 12, -1), (15, 13, -1), (13, 14, -1), (2, 15, -1), (0, 16, 1)],
    3: [(1, 1, 1), (2, 2, 1), (7, 3, -1), (4, 4, 1), (5, 5, -1), (6, 6, 1), (11, 7, 1), (8, 8, 1), (9, 9, 1), (10, 10, 1), (15, 11, 1), (12, 12, 1), (13, 13, 1), (14, 14, 1), (3, 15, -1), (0, 16, 1)],
    4: [(1, 1, 1), (5, 2, -1), (3, 3, 1), (7, 4, -1), (2, 5, -1), (6, 6, 1), (12, 7, 1), (8, 8, 1), (9, 9, -1), (13, 10, 1), (11, 11, 1), (15, 12, 1), (10, 13, 1), (14, 14, 1), (4, 15, -1), (0, 16, 1)],
    5: [(3, 1, 1), (6, 2, 1), (1, 3, 1), (4, 4, 1), (13, 5, -1), (8, 6, 1), (7, 7, -1), (2, 8, 1), (9, 9, 1), (12, 10, 1), (15, 11, -1), (10, 12, 1), (11, 13, 1), (14, 14, -1), (5, 15, -1), (0, 16, 1)],
    6: [(8, 1, -1), (14, 2, -1), (3, 3, 1), (5, 4, -1), (4, 5, 1), (2, 6, -1), (7, 7, 1), (1, 8, 1), (9, 9, 1), (15, 10, 1), (11, 11, 1), (13, 12, 1), (12, 13, 1), (10, 14, 1), (6, 15, -1), (0, 16, 1)],
    7: [(1, 1, 1), (6, 2, -1), (3, 3, 1), (4, 4, 1), (5, 5, -1), (2, 6, 1), (15, 7, 1), (8, 8, 1), (9, 9, 1), (14, 10, -1), (11, 11, 1), (12, 12, -1), (13, 13, 1), (10, 14, 1), (7, 15, -1), (0, 16, 1)],
    8: [(1, 1, 1), (9, 2, -1), (3, 3, 1), (11, 4, -1), (5, 5, 1), (13, 6, -1), (7, 7, 1), (15, 8, 1), (2, 9, 1), (10, 10, 1), (4, 11, 1), (12, 12, -1), (6, 13, 1), (14, 14, -1), (8, 15, -1), (0, 16, 1)],
    9: [(1, 1, 1), (8, 2, 1), (3, 3, 1), (10, 4, 1), (5, 5, 1), (12, 6, 1), (11, 7, -1), (2, 8, 1), (13, 9, -1), (4, 10, 1), (15, 11, -1), (6, 12, 1), (7, 13, 1), (14, 14, -1), (9, 15, -1), (0, 16, 1)],
    10: [(1, 1, 1), (11, 2, 1), (3, 3, 1), (9, 4, -1), (5, 5, 1), (15, 6, -1), (7, 7, 1), (13, 8, -1), (4, 9, 1), (14, 10, 1), (2, 11, 1), (8, 12, 1), (12, 13, -1), (6, 14, 1), (10, 15, -1), (0, 16, 1)],
    11: [(1, 1, 1), (10, 2, -1), (3, 3, 1), (8, 4, 1), (5, 5, 1), (14, 6, 1), (15, 7, -1), (4, 8, 1), (9, 9, 1), (2, 10, 1), (7, 11, 1), (12, 12, 1), (13, 13, 1), (6, 14, 1), (11, 15, -1), (0, 16, 1)],
    12: [(1, 1, 1), (13, 2, 1), (3, 3, 1), (15, 4, 1), (5, 5, 1), (9, 6, -1), (7, 7, 1), (11, 8, 1), (6, 9, 1), (10, 10, 1), (8, 11, -1), (4, 12, 1), (2, 13, 1), (14, 14, 1), (12, 15, -1), (0, 16, 1)],
    13: [(1, 1, 1), (12, 2, -1), (3, 3, 1), (14, 4, -1), (5, 5, 1), (8, 6, 1), (11, 7, 1), (6, 8, 1), (7, 9, 1), (10, 10, 1), (15, 11, -1), (2, 12, 1), (9, 13, -1), (4, 14, 1), (13, 15, -1), (0, 16, 1)],
    14: [(1, 1, 1), (15, 2, -1), (3, 3, 1), (13, 4, 1), (5, 5, 1), (11, 6, -1), (7, 7, 1), (9, 8, -1), (8, 9, 1), (6, 10, 1), (10, 11, -1), (4, 12, 1), (12, 13, 1), (2, 14, 1), (14, 15, -1), (0, 16, 1)],
    15: [(1, 1, 1), (14, 2, 1), (3, 3, 1), (12, 4, -1), (5, 5, 1), (10, 6, 1), (7, 7, 1), (8, 8, -1), (9, 9, -1), (6, 10, 1), (11, 11, -1), (4, 12, 1), (13, 13, 1), (2, 14, 1), (15, 15, -1), (0, 16, 1)],
}
