"""The built-in proof script: the full case analysis behind the 14.5 bound.

The script shows that a weighted neighborhood of total weight 15 or more is
impossible at p = 1.409.  Five easy cases pin down (12,0), (0,27), (2,24),
(4,21) and (5,20); the six hard cases cover (6,18) through (11,8).  Every
(m, h) pair with m + h/2 >= 15 dominates one of these eleven, which the
coverage check confirms.

Claim ids follow the case analysis's section.case numbering; auxiliary
capacity claims invented for the chains are named after their annulus
(cap-h-1-1.25 bounds weight-1/2 points in [1, 1.25]).  `expected_margin`
records the printed total minus 360 for cross-checking; `print_precision`
is the number of decimals the printed per-angle values carry, so the
cross-check can reproduce totals that were computed from truncated
multiplicands.  The symbolic endpoints "p", "q", "1+p", "1+q" track the
active threshold, which is what makes the script sweepable.
"""

from __future__ import annotations

from functools import lru_cache

from .bounds import WEIGHT_HALF, WEIGHT_ONE
from .proofcheck import ChainStep, ClaimSpec, ClassSpec, Derivation


def _one(lo, hi, count, label="one"):
    return ClassSpec(WEIGHT_ONE, lo, hi, count, label)


def _half(lo, hi, count, label="half"):
    return ClassSpec(WEIGHT_HALF, lo, hi, count, label)


def _cap(cid, cls, floor=None, margin=None, prec=2, covers=None, notes=()):
    return ClaimSpec(
        id=cid,
        kind="capacity",
        classes=(cls,),
        covers=covers,
        expected_margin=margin,
        expected_floor=floor,
        print_precision=prec,
        notes=tuple(notes),
    )


def _arr(cid, classes, margin=None, floor=None, prec=2, notes=()):
    return ClaimSpec(
        id=cid,
        kind="arrangement",
        classes=tuple(classes),
        expected_margin=margin,
        expected_floor=floor,
        print_precision=prec,
        notes=tuple(notes),
    )


def _chain(cid, m, h, steps, covers, notes=()):
    return ClaimSpec(
        id=cid,
        kind="chain",
        classes=(_one("p", "1+p", m), _half(1, "1+p", h)),
        steps=tuple(steps),
        covers=covers,
        notes=tuple(notes),
    )


def _halves_at_least(just, count, lo, hi, text=""):
    return ChainStep(just, Derivation("halves-at-least", count=count, lo=lo, hi=hi), text)


def _ones_within(just, lo, hi, text=""):
    return ChainStep(just, Derivation("ones-within", lo=lo, hi=hi), text)


def _ones_at_least(just, count, lo, hi, text=""):
    return ChainStep(just, Derivation("ones-at-least", count=count, lo=lo, hi=hi), text)


def _contradiction(just, text=""):
    return ChainStep(just, Derivation("contradiction"), text)


@lru_cache(maxsize=1)
def builtin_script() -> tuple[ClaimSpec, ...]:
    """The full transcription of the case analysis, in dependency order."""
    claims: list[ClaimSpec] = []

    # ---- five easy cases -------------------------------------------------
    claims += [
        _cap("lemma-3.1", _one("p", "1+p", 12), floor=375, covers=(12, 0)),
        _cap("cap-h-1-1.25", _half(1, 1.25, 11), floor=362),
        _cap("cap-h-1.25-top", _half(1.25, "1+p", 17), floor=362),
        _chain(
            "lemma-3.2",
            0,
            27,
            [
                _halves_at_least(
                    "cap-h-1-1.25", 17, 1.25, "1+p",
                    "at most 10 halves fit in [1, 1.25], so at least 17 sit beyond 1.25",
                ),
                _contradiction("cap-h-1.25-top", "but at most 16 halves fit beyond 1.25"),
            ],
            covers=(0, 27),
        ),
        _arr("fact-3.4.1", [_one("p", "1+p", 2), _half(1.32, "1+p", 13)], floor=362),
        _cap("cap-h-1-1.32", _half(1, 1.32, 12), floor=374),
        _chain(
            "lemma-3.3",
            2,
            24,
            [
                _halves_at_least("fact-3.4.1", 12, 1, 1.32,
                                 "at most 12 halves sit beyond 1.32"),
                _contradiction("cap-h-1-1.32", "but 12 halves cannot fit in [1, 1.32]"),
            ],
            covers=(2, 24),
        ),
        _arr("fact-3.6.1", [_one("p", "1+p", 4), _half(1.25, "1+p", 11)], margin=0.23),
        _chain(
            "lemma-3.5",
            4,
            21,
            [
                _halves_at_least("fact-3.6.1", 11, 1, 1.25,
                                 "at most 10 halves sit beyond 1.25"),
                _contradiction("cap-h-1-1.25", "but 11 halves cannot fit in [1, 1.25]"),
            ],
            covers=(4, 21),
        ),
        _arr("fact-3.7.1", [_one("p", "1+p", 5), _half(1.23, "1+p", 10)], margin=2.85),
        _cap("cap-h-1-1.23", _half(1, 1.23, 11), floor=368),
        _chain(
            "lemma-3.7",
            5,
            20,
            [
                _halves_at_least("fact-3.7.1", 11, 1, 1.23,
                                 "at most 9 halves sit beyond 1.23"),
                _contradiction("cap-h-1-1.23", "but 11 halves cannot fit in [1, 1.23]"),
            ],
            covers=(5, 20),
        ),
    ]

    # ---- 6 ones + 18 halves ----------------------------------------------
    claims += [
        _arr("fact-4.1", [_one("p", "1+p", 6), _half(1.259, "1+p", 8)], margin=1.09,
             notes=("the statement prints the half-half bound as 21.59; "
                    "recomputation gives 21.53, matching the printed arithmetic",)),
        _cap("fact-4.2", _half(1, 1.259, 11), margin=0.16),
        _chain(
            "lemma-4.3",
            6,
            18,
            [
                _halves_at_least("fact-4.1", 11, 1, 1.259,
                                 "at most 7 halves sit beyond 1.259"),
                _contradiction("fact-4.2", "but 11 halves cannot fit in [1, 1.259]"),
            ],
            covers=(6, 18),
        ),
    ]

    # ---- 7 ones + 16 halves ----------------------------------------------
    claims += [
        _arr("fact-5.1", [_one("p", "1+p", 7), _half(1.2, "1+p", 8)], margin=3.83),
        _arr("fact-5.2", [_half(1, 1.2, 9, "red"), _half(1, 1.33, 2, "blue")],
             margin=4.606, prec=3),
        _arr("fact-5.3", [_one("p", "1+p", 7), _half(1.33, "1+p", 6)], margin=0.79),
        _chain(
            "lemma-5.4",
            7,
            16,
            [
                _halves_at_least("fact-5.1", 9, 1, 1.2,
                                 "at most 7 halves sit beyond 1.2"),
                _halves_at_least("fact-5.2", 6, 1.33, "1+p",
                                 "at most 10 halves fit in [1, 1.33] when 9 are in [1, 1.2]"),
                _contradiction("fact-5.3", "but 6 halves beyond 1.33 are impossible"),
            ],
            covers=(7, 16),
        ),
    ]

    # ---- 8 ones + 14 halves ----------------------------------------------
    claims += [
        _arr("fact-6.1", [_one("p", "1+p", 8), _half(1.21, "1+p", 6)], margin=2.86),
        _arr("fact-6.2", [_one("p", 1.88, 1), _half(1, 1.21, 9)], margin=0.82),
        _arr("fact-6.3", [_one(1.88, "1+p", 8), _half(1.29, "1+p", 4)], margin=0.88,
             notes=("the printed one-one bound 34.008 is the bound evaluated from "
                    "the stated annulus [1.88, 1+p], not from [p, 1.88]",)),
        _arr("fact-6.4", [_half(1, 1.21, 9, "red"), _half(1, 1.29, 2, "blue")],
             margin=6.49),
        _chain(
            "lemma-6.5",
            8,
            14,
            [
                _halves_at_least("fact-6.1", 9, 1, 1.21,
                                 "at most 5 halves sit beyond 1.21"),
                _ones_within("fact-6.2", 1.88, "1+p",
                             "no weight-1 point can sit below 1.88"),
                _halves_at_least("fact-6.3", 11, 1, 1.29,
                                 "at most 3 halves sit beyond 1.29"),
                _contradiction("fact-6.4",
                               "but 11 halves in [1, 1.29] with 9 in [1, 1.21] are impossible"),
            ],
            covers=(8, 14),
        ),
    ]

    # ---- 9 ones + 12 halves ----------------------------------------------
    claims += [
        _arr("fact-7.1", [_one("p", "1+p", 9), _half(1.22, "1+p", 4)], margin=2.01,
             notes=("printed total 362.01 is an arithmetic slip: the printed "
                    "multiplicands give 360.01, and recomputation gives 360.09",)),
        _arr("fact-7.2", [_one("p", 1.85, 1), _half(1, 1.22, 9)], margin=0.08),
        _arr("fact-7.3", [_one(1.85, "1+p", 9), _half(1.45, "1+p", 2)], margin=0.07,
             notes=("one-one bound printed as 34.008 evaluates from [1.85, 1+p]",)),
        _arr("fact-7.4", [_one(1.85, "1+p", 9), _half(1.24, "1+p", 3)], margin=1.8,
             prec=1, notes=("one-one bound printed as 34.008 evaluates from [1.85, 1+p]",)),
        _arr("fact-7.5", [_one(1.85, "1+p", 9), _half(1.19, "1+p", 4)], margin=2.0,
             prec=0, notes=("one-one bound printed as 34.008 evaluates from [1.85, 1+p]",)),
        _arr("fact-7.6", [_half(1, 1.19, 9, "red"), _half(1, 1.24, 1, "blue"),
                          _half(1, 1.45, 1, "green")], margin=1.2, prec=1),
        _chain(
            "lemma-7.7",
            9,
            12,
            [
                _halves_at_least("fact-7.1", 9, 1, 1.22,
                                 "at most 3 halves sit beyond 1.22"),
                _ones_within("fact-7.2", 1.85, "1+p",
                             "no weight-1 point can sit below 1.85"),
                _halves_at_least("fact-7.3", 11, 1, 1.45,
                                 "at most 1 half sits beyond 1.45"),
                _halves_at_least("fact-7.4", 10, 1, 1.24,
                                 "at most 2 halves sit beyond 1.24"),
                _halves_at_least("fact-7.5", 9, 1, 1.19,
                                 "at most 3 halves sit beyond 1.19"),
                _contradiction("fact-7.6",
                               "but 11 halves in [1, 1.45] with 10 in [1, 1.24] and "
                               "9 in [1, 1.19] are impossible"),
            ],
            covers=(9, 12),
        ),
    ]

    # ---- 10 ones + 10 halves (the delicate case) --------------------------
    claims += [
        _arr("fact-8.1", [_one("p", "1+p", 10), _half(1.2931, "1+p", 2)],
             margin=0.0015, prec=4),
        _arr("fact-8.2", [_one("p", 1.59, 1), _half(1, 1.2931, 9)],
             margin=0.0482, prec=4),
        _arr("fact-8.3a", [_one(1.59, "1+p", 10), _half(1.2571, "1+p", 1)],
             margin=0.0067, prec=4),
        _arr("fact-8.3b", [_one(1.59, "1+p", 10), _half(1.1513, "1+p", 2)],
             margin=0.022, prec=3,
             notes=("the printed half-half bound cites 1.153; the stated annulus "
                    "has 1.1513",)),
        _arr("fact-8.3c", [_one(1.59, "1+p", 10), _half(1.1254, "1+p", 3)],
             margin=0.021, prec=3),
        _arr("fact-8.3d", [_one(1.59, "1+p", 10), _half(1.1138, "1+p", 4)],
             margin=0.036, prec=3),
        _arr("fact-8.3e", [_one(1.59, "1+p", 10), _half(1.1072, "1+p", 5)],
             margin=0.033, prec=3),
        _arr("lemma-8.3-final",
             [_half(1, 1.1072, 6, "red"), _half(1, 1.1138, 1, "blue1"),
              _half(1, 1.1254, 1, "blue2"), _half(1, 1.1513, 1, "blue3"),
              _half(1, 1.2571, 1, "blue4")],
             margin=0.0047, prec=4,
             notes=("the printed sum cites 1.072 and 1153; the annuli are "
                    "1.1072 and 1.1513",)),
        _chain(
            "lemma-8.3",
            10,
            10,
            [
                _halves_at_least("fact-8.1", 9, 1, 1.2931,
                                 "at most 1 half sits beyond 1.2931"),
                _ones_within("fact-8.2", 1.59, "1+p",
                             "no weight-1 point can sit below 1.59"),
                _halves_at_least("fact-8.3a", 10, 1, 1.2571,
                                 "no half sits beyond 1.2571"),
                _halves_at_least("fact-8.3b", 9, 1, 1.1513,
                                 "at most 1 half sits beyond 1.1513"),
                _halves_at_least("fact-8.3c", 8, 1, 1.1254,
                                 "at most 2 halves sit beyond 1.1254"),
                _halves_at_least("fact-8.3d", 7, 1, 1.1138,
                                 "at most 3 halves sit beyond 1.1138"),
                _halves_at_least("fact-8.3e", 6, 1, 1.1072,
                                 "at most 4 halves sit beyond 1.1072"),
                _contradiction("lemma-8.3-final",
                               "but 6 red and 4 staggered blue halves are impossible"),
            ],
            covers=(10, 10),
            notes=("the prose states all 10 halves lie in [1, 1.12571]; the bound "
                   "actually derived is [1, 1.2571]",),
        ),
    ]

    # ---- 11 ones + 8 halves ----------------------------------------------
    claims += [
        _arr("fact-9.1a", [_one("p", "1+p", 11), _half(1.2, "1+p", 1)], margin=1.64),
        _arr("fact-9.1b", [_one("p", "1+p", 11), _half(1.12, "1+p", 2)], margin=1.09),
        _cap("fact-9.2", _one(1.5, "1+p", 11), margin=1.88),
        _arr("fact-9.3", [_one("p", 1.5, 1), _half(1, 1.12, 7, "red"),
                          _half(1, 1.2, 1, "blue")],
             margin=5.72,
             notes=("printed total 365.72 does not re-derive; the printed "
                    "multiplicands give 365.57 (digit transposition)",)),
        _chain(
            "lemma-9.4",
            11,
            8,
            [
                _halves_at_least("fact-9.1a", 8, 1, 1.2, "no half sits beyond 1.2"),
                _halves_at_least("fact-9.1b", 7, 1, 1.12,
                                 "at most 1 half sits beyond 1.12"),
                _ones_at_least("fact-9.2", 1, "p", 1.5,
                               "not all 11 weight-1 points fit beyond 1.5"),
                _contradiction("fact-9.3",
                               "but a weight-1 point in [p, 1.5] with 7 halves in "
                               "[1, 1.12] and another in [1, 1.2] is impossible"),
            ],
            covers=(11, 8),
        ),
    ]

    return tuple(claims)


# The eleven (m, h) pairs the script proves impossible; the coverage check
# confirms they dominate every pair of total weight >= 15.
IMPOSSIBLE_PAIRS = frozenset(
    {(12, 0), (0, 27), (2, 24), (4, 21), (5, 20), (6, 18),
     (7, 16), (8, 14), (9, 12), (10, 10), (11, 8)}
)
