"""Named PD diagrams shipped with the package.

Several knots appear through more than one diagram; ``KNOT_OF`` maps each
file stem to the knot it draws so diagram-independence can be checked.
"""

from importlib import resources

from ..diagram import PlanarDiagram, parse_pd

KNOT_OF = {
    "unknot": "0_1",
    "unknot_kink": "0_1",
    "unknot_twist3": "0_1",
    "trefoil": "3_1",
    "trefoil_pretzel": "3_1",
    "figure8": "4_1",
    "figure8_pretzel": "4_1",
    "knot_6_2": "6_2",
    "pretzel_3_3_m3": "P(3,3,-3)",
    "pretzel_m2_3_7": "P(-2,3,7)",
}

DETERMINANTS = {"0_1": 1, "3_1": 3, "4_1": 5, "6_2": 11, "P(3,3,-3)": 9, "P(-2,3,7)": 1}


def names() -> list[str]:
    return sorted(KNOT_OF)


def path(name: str):
    return resources.files(__name__) / f"{name}.pd"


def text(name: str) -> str:
    return path(name).read_text()


def load(name: str) -> PlanarDiagram:
    if name not in KNOT_OF:
        raise KeyError(f"no corpus diagram named {name!r}; have {', '.join(names())}")
    return parse_pd(text(name))


def by_knot() -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for stem, knot in sorted(KNOT_OF.items()):
        out.setdefault(knot, []).append(stem)
    return out
