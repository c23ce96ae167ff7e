"""Embedded transcriptions of the published tables and matrix listings.

Everything in this module is data copied verbatim from the source text so
that the computed structures can be diffed against it.  Nothing here is
used as an input to the constructions themselves; the library derives the
group, the representations and the spectra from first principles and then
reports where the printed values disagree.

Group element matrices are given in the lattice basis with the column
convention: column j holds the coordinates of the image of the j-th basis
vector.
"""

from __future__ import annotations

import cmath
import math

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

#: Labels in the row/column order used by the published multiplication table.
LABEL_ORDER = (
    "I", "A", "B", "C", "D", "E", "F", "G", "H", "J", "K", "L",
    "M", "N", "O", "P", "Q", "R", "S", "T", "U", "V", "W", "X",
)

#: The 24 printed element matrices (verbatim, including any misprints).
ELEMENT_MATRICES_PRINTED = {
    "A": ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    "B": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "C": ((-1, -1, -1), (0, 1, 0), (1, 0, 0)),
    "D": ((0, 0, 1), (0, 1, 0), (-1, -1, -1)),
    "E": ((1, 0, 0), (-1, -1, -1), (0, 1, 0)),
    "F": ((1, 0, 0), (0, 0, 1), (-1, -1, -1)),
    "G": ((-1, -1, -1), (1, 0, 0), (0, 0, 1)),
    "H": ((0, 1, 0), (-1, -1, -1), (0, 0, 1)),
    "I": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "J": ((-1, -1, -1), (0, 0, 1), (0, 1, 0)),
    "K": ((0, 1, 0), (1, 0, 0), (-1, -1, -1)),
    "L": ((0, 0, 1), (-1, -1, -1), (1, 0, 0)),
    "M": ((1, -1, 1), (0, -1, 0), (0, 0, -1)),
    "N": ((0, 0, -1), (1, 1, 1), (0, -1, 0)),
    "O": ((0, -1, 0), (0, 0, -1), (1, 1, 1)),
    "P": ((-1, 0, 0), (0, -1, 0), (1, 1, 1)),
    "Q": ((0, 0, -1), (0, -1, 0), (-1, 0, 0)),
    "R": ((1, 1, 1), (-1, 0, 0), (0, -1, 0)),
    "S": ((1, 1, 1), (0, 0, -1), (-1, 0, 0)),
    "T": ((-1, 0, 0), (1, 1, 1), (0, 0, -1)),
    "U": ((0, -1, 0), (-1, 0, 0), (0, 0, -1)),
    "V": ((-1, 0, 0), (0, 0, -1), (0, -1, 0)),
    "W": ((0, -1, 0), (1, 1, 1), (-1, 0, 0)),
    "X": ((0, 0, -1), (-1, 0, 0), (1, 1, 1)),
}

#: Published 24x24 multiplication table; row label times column label.
MULTIPLICATION_TABLE_PRINTED = {
    "I": "I A B C D E F G H J K L M N O P Q R S T U V W X",
    "A": "A B I E J K G L D H C F N O M R V W T X Q U P S",
    "B": "B I A K H C L F J D E G O M N W U P X S V Q R T",
    "C": "C G J D I L B K E F A H P T V Q M X O W R S N U",
    "D": "D K F I C H J A L B G E Q W S M P U V N X O T R",
    "E": "E L H J A F I C K G B D R X U V N S M P W T O Q",
    "F": "F D K G L I E J B C H A S Q W T X M R V O P U N",
    "G": "G J C L F A K H I E D B T V P X S N W U M R Q O",
    "H": "H E L B K J D I G A F C U R X O W V Q M T N S P",
    "J": "J C G A E D H B F I L K V P T N R Q U O S M X W",
    "K": "K F D H B G A E C L I J W S Q U O T N R P X M V",
    "L": "L H E F G B C D A K J I X U R S T O P Q N W V M",
    "M": "M R S Q P N O U T V X W I E F D C A B H G J L K",
    "N": "N W T V R O M Q X U S P A K G J E B I D L H F C",
    "O": "O P X U W M N V S Q T R B C L H K I A J F D G E",
    "P": "P X O M Q T V R W S U N C L B I D G J E K F H A",
    "Q": "Q U V P M W S X N O R T D H J C I K F L A B E G",
    "R": "R S M N V X U W P T Q O E F I A J L H K C G D B",
    "S": "S M R X T Q W O V P N U F I E L G D K B J C A H",
    "T": "T N W S X V P M U R O Q G A K F L J C I H E B D",
    "U": "U V Q W O R X T M N P S H J D K B E L G I A C F",
    "V": "V Q U R N P T S O M W X J D H E A C G F B I K L",
    "W": "W T N O U S Q P R X V M K G A B H F D C E L J I",
    "X": "X O P T S U R N Q W M V L B C G F H E A D K I J",
}

#: Candidate subgroups listed in the text, as label sets.
SUBGROUP_CANDIDATES_PRINTED = (
    ("I", "A", "B"),
    ("I", "C", "D"),
    ("I", "E", "F"),
    ("I", "G", "H"),
    ("I", "W", "J", "X"),
    ("I", "A", "B", "U", "V", "Q"),
    ("A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L"),
    ("I", "J"),
    ("I", "K"),
    ("I", "L"),
    ("I", "T"),
    ("I", "U"),
    ("I", "V"),
    ("I", "M"),
)

#: Published Cartesian coordinates of the three spatial basis vectors.
BASIS_CARTESIAN = (
    (1.0, 0.0, 0.0),
    (0.5, SQRT3 / 2.0, 0.0),
    (0.5, 1.0 / (2.0 * SQRT3), math.sqrt(2.0 / 3.0)),
)

#: Published basis-change matrices (lattice coordinates <-> Cartesian).
U_MATRIX = (
    (1.0, -1.0 / SQRT3, -1.0 / math.sqrt(6.0)),
    (0.0, 2.0 / SQRT3, -1.0 / math.sqrt(6.0)),
    (0.0, 0.0, math.sqrt(1.5)),
)
U_INVERSE = (
    (1.0, 0.5, 0.5),
    (0.0, SQRT3 / 2.0, 1.0 / (2.0 * SQRT3)),
    (0.0, 0.0, math.sqrt(2.0 / 3.0)),
)

#: Published images of the two generators under the 3d unitary representation.
UNITARY3_PRINTED = {
    "M": ((1.0, 0.0, 0.0), (0.0, -1.0, 0.0), (0.0, 0.0, -1.0)),
    "N": (
        (0.5, -1.0 / (2.0 * SQRT3), -math.sqrt(2.0 / 3.0)),
        (SQRT3 / 2.0, 1.0 / 6.0, SQRT2 / 3.0),
        (0.0, -2.0 * SQRT2 / 3.0, 1.0 / 3.0),
    ),
}

#: Eigenvector example for the 3-cycle element, lattice coordinates.
EIGEN_EXAMPLE_A = (
    (1.0, (1, 1, 1)),
    (cmath.exp(2j * math.pi / 3), (cmath.exp(2j * math.pi / 3), 1, cmath.exp(-2j * math.pi / 3))),
    (cmath.exp(-2j * math.pi / 3), (cmath.exp(-2j * math.pi / 3), 1, cmath.exp(2j * math.pi / 3))),
)


def _e(x: float) -> complex:
    """exp(i*pi*x)."""
    return cmath.exp(1j * math.pi * x)


def _m(scale: complex, rows) -> tuple:
    return tuple(tuple(scale * v for v in row) for row in rows)


#: The 24 printed spinor matrices, transcribed verbatim.  Several entries of
#: this listing are internally inconsistent in the source (they fail the
#: required [[a, b], [-conj(b), conj(a)]] shape or have determinant != 1);
#: they are kept as printed and classified by the comparison report.
SPINOR_PRINTED = {
    "A": _m(1j / SQRT3, [[_e(1 / 3), SQRT2 * _e(-1 / 6)], [SQRT2 * _e(1 / 6), -_e(-1 / 3)]]),
    "B": _m(-1 / SQRT3, [[_e(1 / 6), SQRT2 * _e(1 / 3)], [-SQRT2 * _e(-1 / 3), _e(-1 / 6)]]),
    "C": _m(1 / SQRT3, [[_e(5 / 6), -SQRT2], [SQRT2, _e(-1 / 6)]]),
    "D": _m(-1 / SQRT3, [[_e(1 / 6), -SQRT2], [SQRT2, _e(-1 / 6)]]),
    "E": _m(1j / SQRT3, [[-_e(-1 / 3), SQRT2 * _e(1 / 6)], [SQRT2 * _e(-1 / 6), _e(1 / 3)]]),
    "F": _m(1 / SQRT3, [[_e(5 / 6), SQRT2 * _e(2 / 3)], [-SQRT2 * _e(-2 / 3), _e(-5 / 6)]]),
    "G": _m(1j, [[_e(1 / 6), 0.0], [0.0, -_e(-1 / 6)]]),
    "H": _m(1j, [[-_e(-1 / 6), 0.0], [0.0, -_e(1 / 6)]]),
    "I": ((1.0 + 0j, 0j), (0j, 1.0 + 0j)),
    "J": _m(1 / SQRT3, [[-1j, -SQRT2], [SQRT2, 1j]]),
    "K": _m(1 / SQRT3, [[_e(-1 / 2), SQRT2 * _e(1 / 3)], [-SQRT2 * _e(-1 / 3), _e(1 / 2)]]),
    "L": _m(-1 / SQRT3, [[_e(1 / 2), SQRT2 * _e(2 / 3)], [-SQRT2 * _e(-2 / 3), _e(-1 / 2)]]),
    "M": _m(1j, [[0.0, 1.0], [1.0, 0.0]]),
    "N": _m(1 / SQRT3, [[SQRT2 * _e(-1 / 6), _e(1 / 3)], [-_e(-1 / 3), SQRT2 * _e(1 / 6)]]),
    "O": _m(1 / SQRT3, [[SQRT2 * _e(-1 / 6), _e(-1 / 3)], [-_e(1 / 3), SQRT2 * _e(1 / 6)]]),
    "P": _m(1j / SQRT3, [[SQRT2, _e(-1 / 6)], [_e(1 / 6), -SQRT2]]),
    "Q": _m(1j / SQRT3, [[SQRT2, -_e(-1 / 6)], [-_e(1 / 6), -SQRT2]]),
    # the (2,2) entry is printed with a real exponent ("e^{-pi/6}"), kept as is
    "R": _m(-1 / SQRT3, [[SQRT2 * _e(1 / 6), -_e(-1 / 3)], [_e(1 / 3), SQRT2 * math.exp(-math.pi / 6)]]),
    "S": _m(1 / SQRT3, [[SQRT2 * _e(1 / 6), -_e(1 / 3)], [-_e(1 / 6), -SQRT2]]),
    "T": ((0j, -_e(1 / 6)), (_e(-1 / 6), 0j)),
    "U": ((0j, -_e(-1 / 6)), (_e(1 / 6), 0j)),
    "V": _m(1 / SQRT3, [[1j * SQRT2, 1.0], [-1.0, -1j * SQRT2]]),
    "W": _m(1 / SQRT3, [[SQRT2 * _e(5 / 6), 1.0], [-1.0, SQRT2 * _e(-5 / 6)]]),
    "X": _m(1j / SQRT3, [[SQRT2 * _e(1 / 6), 1.0], [-1.0, SQRT2 * _e(-1 / 6)]]),
}

#: Published average-speed lists, stored as the squared spatial norms Q with
#: s = sqrt(Q)/t.  Ellipses in the source are expanded to consecutive runs.
SPEED_Q_PRINTED = {
    1: tuple(range(0, 2)),
    2: tuple(range(0, 5)),
    3: tuple(range(0, 10)),
    4: (0,) + tuple(range(3, 17)),
    5: (0, 1, 2, 4, 6, 7, 9) + tuple(range(12, 26)),
}

#: Published list of attainable squared spatial norms up to 49.
SPATIAL_NORMSQ_PRINTED = (
    tuple(range(0, 14))
    + (16, 18, 19, 21)
    + tuple(range(23, 29))
    + (31, 33)
    + tuple(range(35, 40))
    + (43, 49)
)

#: Published mass-squared table, rows indexed by the energy component.
MASS_SQ_TABLE_PRINTED = {
    0: (0,),
    1: (0, 1),
    2: (0, 1, 2, 3, 4),
    3: tuple(range(0, 10)),
    4: (0,) + tuple(range(3, 17)),
    5: (0, 1, 2, 4, 6, 7, 9) + tuple(range(12, 26)),
    6: (0, 1, 3, 5) + tuple(range(8, 14)) + (15, 17, 18, 20) + tuple(range(23, 37)),
    7: (0, 6) + tuple(range(10, 15)) + (16, 18) + tuple(range(21, 27))
       + (28, 30, 31, 33) + tuple(range(36, 50)),
}

#: Diophantine solution families quoted in the no-boost argument,
#: as (t0, t1, t2, t3) coordinate tuples.
BOOST_EQ_TIME_FAMILIES = ((2, 1, 1, 0), (3, 2, 2, -2))
BOOST_EQ_SPACE_FAMILIES = ((1, 1, 1, -1), (2, 2, 1, -1))
