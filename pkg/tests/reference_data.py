"""Values transcribed from the C_2, M = 4 worked examples (orthonormal basis (alpha_1, alpha_1 + alpha_2))."""
from fractions import Fraction as Fr


def pts(*pairs):
    return {tuple(Fr(x) for x in p) for p in pairs}


F4_ONE = pts(("0", "0"), ("0", "1/4"), ("0", "1/2"), ("0", "3/4"), ("0", "1"),
             ("1/4", "1/4"), ("1/4", "1/2"), ("1/4", "3/4"), ("1/2", "1/2"))

# (sigma~, sigma) -> (non-reflected part, reflected part)
F4_SETS = {
    ("1", "s"): (F4_ONE, pts(("-1/4", "1/4"), ("-1/4", "1/2"), ("-1/4", "3/4"), ("-1/2", "1/2"))),
    ("1", "e"): (F4_ONE, pts(("-1/4", "1/2"))),
    ("1", "l"): (F4_ONE, pts(("1/4", "0"), ("1/2", "0"), ("3/4", "0"), ("1/2", "1/4"))),
    ("e", "s"): (pts(("0", "1/4"), ("0", "1/2"), ("0", "3/4"), ("1/4", "1/2")), pts(("-1/4", "1/2"))),
    ("l", "e"): (pts(("0", "1/4"), ("0", "1/2"), ("0", "3/4"), ("1/4", "1/4"), ("1/4", "1/2"),
                     ("1/4", "3/4"), ("1/2", "1/2")), pts(("-1/4", "1/2"))),
    ("e", "l"): (pts(("1/4", "1/4"), ("1/4", "1/2"), ("1/4", "3/4"), ("1/2", "1/2")), pts(("1/2", "1/4"))),
}

L4_ONE = pts(("0", "0"), ("0", "1"), ("0", "2"), ("1/2", "1/2"), ("1/2", "3/2"), ("1", "1"),
             ("1", "2"), ("3/2", "3/2"), ("2", "2"))

L4_SETS = {
    ("1", "s"): (L4_ONE, pts(("-1/2", "1/2"), ("-1/2", "3/2"), ("-1", "1"), ("-3/2", "3/2"))),
    ("1", "e"): (L4_ONE, pts(("-1/2", "3/2"))),
    ("1", "l"): (L4_ONE, pts(("1", "0"), ("2", "0"), ("3/2", "1/2"), ("2", "1"))),
    ("e", "s"): (pts(("0", "1"), ("0", "2"), ("1/2", "3/2"), ("1", "2")), pts(("-1/2", "3/2"))),
    ("l", "e"): (pts(("0", "1"), ("0", "2"), ("1/2", "1/2"), ("1/2", "3/2"), ("1", "1"), ("1", "2"),
                     ("3/2", "3/2")), pts(("-1/2", "3/2"))),
    ("e", "l"): (pts(("1/2", "1/2"), ("1/2", "3/2"), ("1", "1"), ("3/2", "3/2")), pts(("3/2", "1/2"))),
}

CARDINALITIES = {("1", "s"): 13, ("1", "e"): 10, ("1", "l"): 13, ("e", "s"): 5, ("l", "e"): 8, ("e", "l"): 5}
