"""Frozen envelope data: Groebner bases, the multiplication table of the
10-dimensional envelope, its Dickson matrix and central idempotents."""

GROEBNER = {
    'D11': [
        'b^2',
        'a^3',
        'bab',
        'aba^2 + a^2ba - a',
        'ba^2b - b',
    ],
    'C111': [
        'a^2',
        'b^2',
        'c^2',
        'aba',
        'aca',
        'bab',
        'bcb',
        'cac',
        'cbc',
        'acba + abca - a',
        'bcab + bacb - b',
        'cbac + cabc - c',
        'cabca - ca',
    ],
    'B2': [
        'ab',
        'ba',
        'ca - bc',
        'cb - ac',
        'c^2 - b^2 - a^2',
        'a^4 - a',
        'b^4 - b',
        'b^3c + a^3c - c',
    ],
    'A2': [
        'ad',
        'b^2',
        'bd - ab',
        'c^2',
        'cd - ac',
        'da',
        'db - ba',
        'dc - ca',
        'd^2 - cb - bc + a^2',
        'aba',
        'aca',
        'acb + abc - a^3',
        'bab',
        'bca - abc',
        'bcb - ba^2 - a^2b',
        'cac',
        'cba + abc - a^3',
        'cbc - ca^2 - a^2c',
        'a^4 - a',
        'ba^3 + a^3b - b',
        'ba^2b',
        'ca^3 + a^3c - c',
        'ca^2b + ba^2c - d',
        'ca^2c',
        'cabc + a^3c - c',
    ],
    'D-21': [
        'aba^2 - a^2ba',
        'ba^3 - a^3b',
        'baba - abab',
        'b^2a^2 - a^2b^2',
        'b^2ab - bab^2',
        'b^3a - ab^3',
        'a^3ba - a^4b',
        'a^2b^2a - a^3b^2',
        'ba^2ba - a^2bab',
        'ba^2b^2 - a^2b^3',
        'bab^2a - abab^2',
        'bab^3 - ab^4',
        'a^2bab^2 - a^3b^3',
    ],
    'D-12': [
        'c^2',
        'a^3',
        'a^2b',
        'aba',
        'ab^2',
        'aca',
        'ba^2',
        'bab',
        'b^2a',
        'b^3',
        'bca + acb',
        'bcb',
        'cac',
        'cbc',
        'acba + a^2cb - a',
        'bacb + acb^2 - b',
        'cbac - cabc - c',
        'a^2cb^2 - ab',
        'acb^2c - bc',
        'ca^2cb - ca',
    ],
    'C-111': [
        'a^2',
        'b^2',
        'c^2',
        'aba',
        'aca',
        'bab',
        'bcb',
        'cac',
        'cbc',
        'acba - abca - a',
        'bcab - bacb + b',
        'cbac - cabc - c',
        'cabca + ca',
    ],
    'B-3': [
        'aba',
        'aca',
        'ac^2 + ab^2 - a^3',
        'bab',
        'b^2a + ab^2 - a^3',
        'b^3 - ba^2 - a^2b',
        'bca + acb',
        'bcb',
        'bc^2 - a^2b',
        'ca^2 - b^2c',
        'cab + bac',
        'cac',
        'cba + abc',
        'cb^2 - a^2c',
        'cbc',
        'c^2a - ab^2',
        'c^2b - ba^2',
        'c^3 - b^2c - a^2c',
        'a^2cb - a^2bc - a',
        'ab^2c',
        'ba^3 - a^3b - c',
        'ba^2c',
        'bacb + a^3c - b',
        'a^5 + cb - bc',
        'a^4b + ac',
        'a^4c - ab',
        'a^3b^2 + cb',
        'a^3bc +1/2 c^2 -1/2 b^2 +1/2 a^2',
        'ba^2b^2 - ca',
        'ba^2bc + ba',
    ],
    'A-2': [
        'ad',
        'b^2',
        'bd - ab',
        'c^2',
        'cd - ac',
        'da',
        'db - ba',
        'dc - ca',
        'd^2 - cb - bc + a^2',
        'aba',
        'aca',
        'acb + abc - a^3',
        'bab',
        'bca - abc',
        'bcb - ba^2 - a^2b',
        'cac',
        'cba + abc - a^3',
        'cbc - ca^2 - a^2c',
        'a^2bc - 1/2 a^4 - 1/2 a',
        'ba^3 - a^3b + b',
        'ba^2b',
        'ca^3 - a^3c - c',
        'ca^2b - ba^2c - d',
        'ca^2c',
        'cabc - a^3c - c',
        'a^4b - ab',
        'a^4c + ac',
        'a^6 -2 abc + a^3',
    ],
}

# D11: row word times column word; "0" for zero
D11_WORDS = ['1', 'a', 'b', 'a^2', 'ab', 'ba', 'a^2b', 'aba', 'ba^2', 'a^2ba']
D11_TABLE = [
    ['1', '1', 'a', 'b', 'a^2', 'ab', 'ba', 'a^2b', 'aba', 'ba^2', 'a^2ba'],
    ['a', 'a', 'a^2', 'ab', '0', 'a^2b', 'aba', '0', 'a^2ba', '-a^2ba + a', '0'],
    ['b', 'b', 'ba', '0', 'ba^2', '0', '0', 'b', '0', '0', 'ba'],
    ['a^2', 'a^2', '0', 'a^2b', '0', '0', 'a^2ba', '0', '0', 'a^2', '0'],
    ['ab', 'ab', 'aba', '0', '-a^2ba + a', '0', '0', 'ab', '0', '0', 'aba'],
    ['ba', 'ba', 'ba^2', '0', '0', 'b', '0', '0', 'ba', '0', '0'],
    ['a^2b', 'a^2b', 'a^2ba', '0', 'a^2', '0', '0', 'a^2b', '0', '0', 'a^2ba'],
    ['aba', 'aba', '-a^2ba + a', '0', '0', 'ab', '0', '0', 'aba', '0', '0'],
    ['ba^2', 'ba^2', '0', 'b', '0', '0', 'ba', '0', '0', 'ba^2', '0'],
    ['a^2ba', 'a^2ba', 'a^2', '0', '0', 'a^2b', '0', '0', 'a^2ba', '0', '0'],
]

# nonzero entries (1-based row, col) of the Dickson matrix of U(D11)
D11_DICKSON = {
    (1, 1): 10, (1, 7): 3, (1, 8): 3, (1, 9): 3,
    (2, 5): 3, (2, 6): 3, (3, 4): 3, (4, 3): 3, (5, 2): 3, (5, 10): 3,
    (6, 2): 3, (7, 1): 3, (7, 7): 3, (8, 1): 3, (8, 8): 3, (9, 1): 3, (9, 9): 3,
    (10, 5): 3,
}

D11_CENTER = ["1", "a^2b + aba + ba^2"]
D11_IDEMPOTENTS = ["a^2b + aba + ba^2", "1 - a^2b - aba - ba^2"]
# E11, E12, ..., E33 on the left ideal with basis b, ab, a^2b
D11_MATRIX_UNITS = ["ba^2", "ba", "b", "a - a^2ba", "aba", "ab", "a^2", "a^2ba", "a^2b"]

C111_IDEMPOTENTS = ["1 - abc - acb - bac - bca - cab - cba", "abc + bca + cab", "acb + bac + cba"]

A2_CENTER = ["1", "a + d", "bc + cb", "a^3 - abc + bac", "abc + cab", "a - a^2bc + ba^2c",
             "-1/2 a^2 - 1/2 bc + a^3bc"]

# over Q(sqrt(-3)), beta = 1 + sqrt(-3); entries map word -> (x, y) for x + y sqrt(-3)
B2_IDEMPOTENTS = [
    {"": (1, 0), "aaa": (-1, 0), "bbb": (-1, 0)},
    {w: ("1/3", 0) for w in ["a", "b", "aa", "bb", "aaa", "bbb"]},
    {"a": ("-1/6", "-1/6"), "b": ("-1/6", "-1/6"), "aa": ("-1/6", "1/6"), "bb": ("-1/6", "1/6"),
     "aaa": ("1/3", 0), "bbb": ("1/3", 0)},
    {"a": ("-1/6", "1/6"), "b": ("-1/6", "1/6"), "aa": ("-1/6", "-1/6"), "bb": ("-1/6", "-1/6"),
     "aaa": ("1/3", 0), "bbb": ("1/3", 0)},
]

ENVELOPE_DIMS = {"D11": 10, "C111": 19, "B2": 13, "A2": 25, "C-111": 19, "B-3": 28, "A-2": 25,
                 "D-12": 26}
RELATION_COUNTS = {"D11": 10, "C111": 45, "B2": 45, "A2": 136, "C-111": 36, "B-3": 36, "A-2": 120,
                   "D-21": 6, "D-12": 36, "D-31": 36}
CENTER_DIMS = {"D11": 2, "C111": 3, "B2": 4, "A2": 7, "C-111": 3, "B-3": 4, "A-2": 7}
IDEAL_DIMS = {"D11": [1, 9], "C111": [1, 9, 9], "B2": [1, 4, 4, 4], "A2": [1, 4, 4, 4, 4, 4, 4],
              "C-111": [1, 9, 9], "B-3": [1, 9, 9, 9], "A-2": [1, 4, 4, 4, 4, 4, 4]}
COMPOSITIONS_FIRST_ROUND = {"C111": 290, "B2": 533, "A2": 2769, "C-111": 333, "B-3": 385,
                            "A-2": 2821, "D-12": 341}
