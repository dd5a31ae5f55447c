"""Golden boundary matrices for the generic m = 4 and m = 3 Apery resolutions, keyed by "i,A" labels."""
import re

from aperyres.ring import Polynomial

M4_B = {"b11": 1, "b22": 7, "b33": 2, "b12": 3, "b13": 5, "b23": 4}
M3_B = {"b11": 1, "b22": 2, "b12": 3}

M4_D1 = {
    "1,1": "x1^2 - x2 y^b11",
    "2,2": "x2^2 - y^b22",
    "3,3": "x3^2 - x2 y^b33",
    "2,1": "x1 x2 - x3 y^b12",
    "3,1": "x1 x3 - y^b13",
    "3,2": "x2 x3 - x1 y^b23",
}

_D2_COLS = ["1,12", "1,13", "2,12", "2,23", "3,13", "3,23", "2,13", "3,12"]
_D2_ROWS = {
    "1,1": ["-x2", "-x3", "", "", "", "", "y^b23", "y^b23"],
    "2,2": ["-y^b11", "", "x1", "-x3", "", "y^b33", "", ""],
    "3,3": ["", "", "", "", "x1", "x2", "-y^b12", ""],
    "2,1": ["x1", "", "-x2", "y^b23", "y^b33", "", "-x3", ""],
    "3,1": ["y^b12", "x1", "", "", "-x3", "-y^b23", "", "-x2"],
    "3,2": ["", "-y^b11", "-y^b12", "x2", "", "-x3", "x1", "x1"],
}
M4_D2 = {(r, c): v for r, row in _D2_ROWS.items() for c, v in zip(_D2_COLS, row) if v}

_D3_COLS = ["1,[3]", "2,[3]", "3,[3]"]
_D3_ROWS = {
    "1,12": ["x3", "-y^b23", ""],
    "1,13": ["-x2", "", "y^b23"],
    "2,12": ["", "x3", "-y^b33"],
    "2,23": ["-y^b11", "x1", ""],
    "3,13": ["y^b12", "", "-x2"],
    "3,23": ["", "-y^b12", "x1"],
    "2,13": ["x1", "-x2", ""],
    "3,12": ["-x1", "", "x3"],
}
M4_D3 = {(r, c): v for r, row in _D3_ROWS.items() for c, v in zip(_D3_COLS, row) if v}

M3_D1 = {"1,1": "x1^2 - x2 y^b11", "2,2": "x2^2 - x1 y^b22", "2,1": "x1 x2 - y^b12"}
M3_D2 = {
    ("1,1", "1,12"): "-x2", ("1,1", "2,12"): "y^b22",
    ("2,2", "1,12"): "-y^b11", ("2,2", "2,12"): "x1",
    ("2,1", "1,12"): "x1", ("2,1", "2,12"): "-x2",
}


def parse_entry(s, b, nvars):
    """Parse "x1 x2 - x3 y^b12" style strings with the given b values."""
    out = Polynomial.zero()
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", s.replace(" - ", " -").replace(" + ", " +")):
        mono = [0] * nvars
        for factor in body.split():
            name, _, exp = factor.partition("^")
            e = b[exp] if exp in b else int(exp or 1)
            mono[0 if name == "y" else int(name[1:])] += e
        out = out + Polynomial.monomial(mono, -1 if sign == "-" else 1)
    return out
