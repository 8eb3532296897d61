"""Published expected values, transcribed literally, used as regression fixtures.

Rows of the cell tables follow ``INPUT_ORDER`` (ABC = 000 .. 111); each entry
is a two-character string ``"<Sum><Cout>"``. Decimal values that are compared
to printed precision are kept as strings so the number of printed digits is
not lost.
"""
from __future__ import annotations

from decimal import Decimal


def _rows(text: str) -> tuple[tuple[int, int], ...]:
    return tuple((int(p[0]), int(p[1])) for p in text.split())


IMPLY_TRUTH = {(0, 0): 1, (0, 1): 1, (1, 0): 0, (1, 1): 1}

COUT_FLIP_TABLES = {
    "AFA1": _rows("01 10 10 01 10 01 01 01"),
    "AFA2": _rows("10 01 10 01 10 01 01 01"),
    "AFA3": _rows("10 10 01 01 10 01 01 01"),
    "AFA4": _rows("10 10 10 10 10 01 01 01"),
    "AFA5": _rows("10 10 10 01 01 01 01 01"),
    "AFA6": _rows("10 10 10 01 10 10 01 01"),
    "AFA7": _rows("10 10 10 01 10 01 10 01"),
    "AFA8": _rows("10 10 10 01 10 01 01 10"),
}
COUT_FLIP_ED = {name: 3 for name in COUT_FLIP_TABLES}

SUM_FLIP_TABLES = {
    "AFA9": _rows("10 10 10 01 10 01 01 10"),
    "AFA10": _rows("01 01 10 01 10 01 01 10"),
    "AFA11": _rows("01 10 01 01 10 01 01 10"),
    "AFA12": _rows("01 10 10 10 10 01 01 10"),
    "AFA13": _rows("01 10 10 01 01 01 01 10"),
    "AFA14": _rows("01 10 10 01 10 10 01 10"),
    "AFA15": _rows("01 10 10 01 10 01 10 10"),
    "AFA16": _rows("01 10 10 01 10 01 01 01"),
}
SUM_FLIP_ED = {"AFA9": 3, "AFA16": 3, **{f"AFA{k}": 5 for k in range(10, 16)}}

ACCEPTED = {"cout-flip": ("AFA1", "AFA2", "AFA3", "AFA5", "AFA8"), "sum-flip": ("AFA9", "AFA16")}

ECIS_TABLE = _rows("10 10 10 01 10 01 01 01")

# cell: (steps, memristors, ED, MED, NMED)
CELL_SUMMARY = {
    "ICIS1": (6, 4, 3, 0.375, 0.125),
    "ICIS2": (6, 4, 3, 0.375, 0.125),
    "ICIS3": (6, 4, 3, 0.375, 0.125),
    "ECIS": (12, 5, 2, 0.25, 0.0833),
}
WORK_REGISTERS = {"ICIS1": 1, "ICIS2": 1, "ICIS3": 1, "ECIS": 2}

EXACT_RCA_STEPS = {"Exact 1": 176, "Exact 2": 184}
RCA_MEMRISTORS_8BIT = 19
# scenario -> cell -> total steps at n = 8
RCA_STEPS = {
    1: {"SIAFA1": 134, "SIAFA2": 140, "SIAFA3": 134, "SIAFA4": 134, "SAFAN": 131,
        "ICIS1": 128, "ICIS2": 128, "ICIS3": 128, "ECIS": 146},
    2: {"SIAFA1": 120, "SIAFA2": 128, "SIAFA3": 120, "SIAFA4": 120, "SAFAN": 116,
        "ICIS1": 112, "ICIS2": 112, "ICIS3": 112, "ECIS": 136},
    3: {"SIAFA1": 106, "SIAFA2": 116, "SIAFA3": 106, "SIAFA4": 106, "SAFAN": 101,
        "ICIS1": 96, "ICIS2": 96, "ICIS3": 96, "ECIS": 126},
}

# per-cell average energy, nJ
CELL_ENERGY_NJ = {
    "Exact 1": 1.90859, "Exact 2": 2.00727,
    "SIAFA1": 0.67221, "SIAFA2": 0.86032, "SIAFA3": 0.67221, "SIAFA4": 0.67086,
    "SAFAN": 0.64282,
    "ICIS1": 0.50709, "ICIS2": 0.50705, "ICIS3": 0.50705, "ECIS": 1.02631,
}
# steps per cell of the prior-art approximate cells (alpha)
PRIOR_ART_STEPS = {"SIAFA1": 8, "SIAFA2": 10, "SIAFA3": 8, "SIAFA4": 8, "SAFAN": 7}

# scenario -> cell -> (MED, NMED) as printed
ERROR_METRICS = {
    1: {"SIAFA1": ("2.062", "0.004"), "SIAFA2": ("2.656", "0.0052"),
        "SIAFA3": ("2.062", "0.004"), "SIAFA4": ("2.625", "0.0051"),
        "SAFAN": ("2.9375", "0.0057"),
        "ICIS1": ("2.156", "0.0042"), "ICIS2": ("2.25", "0.0044"),
        "ICIS3": ("2.25", "0.0044"), "ECIS": ("1.718", "0.0033")},
    2: {"SIAFA1": ("4.351", "0.0085"), "SIAFA2": ("6.1718", "0.0121"),
        "SIAFA3": ("4.351", "0.0085"), "SIAFA4": ("5.3125", "0.0104"),
        "SAFAN": ("5.78125", "0.0113"),
        "ICIS1": ("4.7265", "0.0092"), "ICIS2": ("4.4687", "0.0087"),
        "ICIS3": ("4.4687", "0.0087"), "ECIS": ("3.6171", "0.007")},
    3: {"SIAFA1": ("8.8554", "0.0173"), "SIAFA2": ("13.498", "0.0264"),
        "SIAFA3": ("8.8554", "0.0173"), "SIAFA4": ("10.6562", "0.0208"),
        "SAFAN": ("11.04687", "0.02166"),
        "ICIS1": ("9.8886", "0.0193"), "ICIS2": ("8.9121", "0.0174"),
        "ICIS3": ("8.9121", "0.0174"), "ECIS": ("7.3769", "0.0144")},
}

# application -> scenario -> cell -> (PSNR dB, SSIM, MSSIM)
IMAGE_QUALITY = {
    "add": {
        1: {"SIAFA1": (44.5148, 0.9899, 0.99), "SIAFA2": (41.9674, 0.9858, 0.9861),
            "SIAFA3": (44.5222, 0.9898, 0.99), "SIAFA4": (43.7483, 0.9878, 0.988),
            "SAFAN": (41.8917, 0.994, 0.994),
            "ICIS1": (44.1644, 0.9909, 0.991), "ICIS2": (43.9423, 0.9888, 0.9889),
            "ICIS3": (43.9769, 0.9886, 0.9887), "ECIS": (45.1444, 0.9918, 0.9919)},
        2: {"SIAFA1": (38.67, 0.9644, 0.9649), "SIAFA2": (35.4576, 0.9425, 0.9436),
            "SIAFA3": (38.8399, 0.9638, 0.9644), "SIAFA4": (37.8083, 0.959, 0.9597),
            "SAFAN": (36.6395, 0.9793, 0.9796),
            "ICIS1": (38.2287, 0.9654, 0.966), "ICIS2": (38.545, 0.9632, 0.9636),
            "ICIS3": (38.4096, 0.961, 0.9615), "ECIS": (39.4711, 0.9702, 0.9706)},
        3: {"SIAFA1": (32.9823, 0.8974, 0.8996), "SIAFA2": (28.2504, 0.8156, 0.8166),
            "SIAFA3": (32.6497, 0.8905, 0.8915), "SIAFA4": (32.0442, 0.8931, 0.8956),
            "SAFAN": (30.5866, 0.9297, 0.9298),
            "ICIS1": (32.0474, 0.9006, 0.9027), "ICIS2": (32.9714, 0.896, 0.8978),
            "ICIS3": (33.0242, 0.8927, 0.8956), "ECIS": (33.7765, 0.9128, 0.9143)},
    },
    "sub": {
        1: {"SIAFA1": (41.5919, 0.7711, 0.7901), "SIAFA2": (43.5407, 0.9678, 0.9874),
            "SIAFA3": (41.8705, 0.7905, 0.8103), "SIAFA4": (45.5121, 0.9534, 0.9693),
            "SAFAN": (49.7504, 0.9863, 0.9905),
            "ICIS1": (45.564, 0.9703, 0.9886), "ICIS2": (45.8315, 0.9685, 0.9863),
            "ICIS3": (45.8356, 0.9682, 0.9861), "ECIS": (46.1802, 0.9661, 0.9811)},
        2: {"SIAFA1": (37.4131, 0.6405, 0.6705), "SIAFA2": (37.5605, 0.9338, 0.9652),
            "SIAFA3": (36.8613, 0.5993, 0.6302), "SIAFA4": (40.3861, 0.9131, 0.9423),
            "SAFAN": (44.0205, 0.9798, 0.9857),
            "ICIS1": (40.3774, 0.9409, 0.9713), "ICIS2": (40.5783, 0.9351, 0.968),
            "ICIS3": (40.715, 0.9349, 0.9685), "ECIS": (40.7888, 0.9303, 0.9588)},
        3: {"SIAFA1": (32.6121, 0.508, 0.5404), "SIAFA2": (31.6441, 0.8991, 0.9265),
            "SIAFA3": (32.4096, 0.4747, 0.5094), "SIAFA4": (35.0436, 0.8664, 0.902),
            "SAFAN": (37.5336, 0.9667, 0.9727),
            "ICIS1": (34.928, 0.9104, 0.9421), "ICIS2": (35.2479, 0.8956, 0.9363),
            "ICIS3": (35.3686, 0.8959, 0.937), "ECIS": (35.3095, 0.8873, 0.9226)},
    },
    "gray": {
        1: {"SIAFA1": (47.1982, 0.9911, 0.999), "SIAFA2": (43.1339, 0.9833, 0.9977),
            "SIAFA3": (47.2496, 0.9914, 0.999), "SIAFA4": (43.0565, 0.9841, 0.997),
            "SAFAN": (42.2449, 0.9905, 0.9974),
            "ICIS1": (44.7574, 0.9878, 0.9984), "ICIS2": (45.4874, 0.9911, 0.9987),
            "ICIS3": (44.9761, 0.9903, 0.9986), "ECIS": (47.5379, 0.9925, 0.9991)},
        2: {"SIAFA1": (41.4201, 0.9693, 0.9957), "SIAFA2": (35.9998, 0.9263, 0.9874),
            "SIAFA3": (41.2315, 0.9684, 0.9956), "SIAFA4": (36.9634, 0.9451, 0.989),
            "SAFAN": (36.0101, 0.9625, 0.9886),
            "ICIS1": (37.9719, 0.9474, 0.9911), "ICIS2": (40.1764, 0.9693, 0.9953),
            "ICIS3": (39.9446, 0.9679, 0.9952), "ECIS": (41.9064, 0.973, 0.9966)},
        3: {"SIAFA1": (35.5671, 0.9019, 0.9778), "SIAFA2": (28.4883, 0.7576, 0.9317),
            "SIAFA3": (35.3588, 0.8916, 0.9794), "SIAFA4": (31.5146, 0.8525, 0.9589),
            "SAFAN": (28.9472, 0.8633, 0.9482),
            "ICIS1": (30.3889, 0.8163, 0.9441), "ICIS2": (33.9817, 0.9011, 0.973),
            "ICIS3": (34.4268, 0.8992, 0.9782), "ECIS": (35.8643, 0.9094, 0.9814)},
    },
}

# averaged batch runs, scenario 3
BATCH_QUALITY = {
    "add": {"ICIS1": (31.8257, 0.8941, 0.8955), "ICIS2": (32.8602, 0.8881, 0.8898),
            "ICIS3": (32.986, 0.8898, 0.8908), "ECIS": (33.5536, 0.9064, 0.9051)},
    "gray": {"ICIS1": (30.8058, 0.8262, 0.886), "ICIS2": (34.14, 0.8957, 0.9337),
             "ICIS3": (34.0658, 0.8886, 0.9328), "ECIS": (35.7012, 0.9031, 0.941)},
}

FOM1 = {"SIAFA1": 29.06734, "SIAFA2": 40.55279, "SIAFA3": 29.2824, "SIAFA4": 29.9061,
        "SAFAN": 28.61973, "ICIS1": 24.91743, "ICIS2": 23.69175, "ICIS3": 23.54914,
        "ECIS": 39.67634}
FOM2 = {"SIAFA1": 183.102, "SIAFA2": 101.546, "SIAFA3": 180.42, "SIAFA4": 174.169,
        "SAFAN": 184.944, "ICIS1": 219.784, "ICIS2": 242.164, "ICIS3": 245.104,
        "ECIS": 100.483}

PROPOSED_NAMES = ("ICIS1", "ICIS2", "ICIS3", "ECIS")


def last_digit_unit(printed: str) -> float:
    """Value of one unit in the last printed decimal place ("2.156" -> 0.001)."""
    exponent = Decimal(printed).as_tuple().exponent
    return float(Decimal(1).scaleb(exponent))


def within_printed(value: float, printed: str, units: int = 1) -> bool:
    return abs(value - float(printed)) <= units * last_digit_unit(printed) + 1e-12


def same_sig_digits(value: float, expected: float, digits: int = 4) -> bool:
    """Relative-error form: ``|value - expected| / |expected| < 5 * 10**-digits``."""
    return abs(value - expected) < 5 * 10.0 ** -digits * abs(expected)
