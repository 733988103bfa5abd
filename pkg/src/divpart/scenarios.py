"""Worked examples with fixed, byte-stable output.

Each scenario has a ``*_data`` function returning plain values (exact
rationals as :class:`Fraction`) and a text renderer. Output depends only on
the package version.
"""
from __future__ import annotations

from fractions import Fraction

from divpart import __version__
from divpart.diversity import diversity, epsilon_of_partition, hill_number, min_diversity
from divpart.report import format_float, ratio_to_json

SCENARIOS = ("islands", "table1", "tentative")

POPULATION = (12, 16, 20)
TYPE_NAMES = ("blue", "green", "pink")
HOMOGENEOUS = [(12, 0, 0), (0, 16, 0), (0, 0, 20)]
MIXED = [(3, 4, 5), (3, 4, 5), (6, 8, 10)]

# Relative abundances as integer counts; the last column is the index value
# listed with the original comparison table.
ABUNDANCE_TABLE = [
    ("S1", (1, 1, 1, 1), "4.00"),
    ("S2", (1, 1, 1, 1, 1), "5.00"),
    ("S3", (24, 24, 24, 24, 4), "4.48"),
    ("S4", (249, 249, 249, 249, 4), "4.08"),
    ("S5", (50, 30, 10, 7, 3), "3.42"),
    ("S6", (50, 30, 10, 7, 1, 1, 1), "3.53"),
]

TENTATIVE = [
    ("balanced split of (6, 14, 21)", (6, 14, 21), [(3, 7, 10), (3, 7, 11)]),
    ("improved split of (6, 14, 21)", (6, 14, 21), [(3, 6, 10), (3, 8, 11)]),
    ("floor split of (6, 15, 21)", (6, 15, 21), [(3, 7, 10), (3, 8, 11)]),
    ("perfect split of (6, 15, 21)", (6, 15, 21), [(2, 5, 7), (4, 10, 14)]),
]


def _header(name: str) -> str:
    return f"divpart {__version__} - scenario: {name}"


def _survivors(config):
    return tuple(map(sum, zip(*config[1:])))


def islands_data() -> dict:
    gamma = diversity(POPULATION)
    out = {"gamma": gamma}
    for key, config in (("gamma_prime", HOMOGENEOUS), ("gamma_double_prime", MIXED)):
        left = _survivors(config)
        out[key] = diversity(left)
        out[key + "_survivors"] = left
    return out


def islands_text() -> str:
    data = islands_data()
    gamma = data["gamma"]
    lines = [
        _header("islands"),
        f"population ({', '.join(TYPE_NAMES)}) = {POPULATION}",
        f"global diversity gamma = {gamma} = {format_float(gamma)}",
        "",
    ]
    for title, config in (
        ("configuration 1 (one type per island)", HOMOGENEOUS),
        ("configuration 2 (mixed islands)", MIXED),
    ):
        lines.append(title)
        for i, island in enumerate(config, 1):
            lines.append(f"  island {i}: {island}  D = {format_float(diversity(island))}")
    lines.append("")
    lines.append("island 1 is wiped out:")
    for n, key, label in ((1, "gamma_prime", "gamma'"), (2, "gamma_double_prime", "gamma''")):
        value = data[key]
        loss = 1 - value / gamma
        lines.append(
            f"  configuration {n}: survivors {data[key + '_survivors']}  "
            f"{label} = {value} = {format_float(value)}  loss {float(loss):.1%}"
        )
    return "\n".join(lines) + "\n"


def table1_data() -> list[dict]:
    rows = []
    for name, counts, listed in ABUNDANCE_TABLE:
        rows.append(
            {
                "name": name,
                "counts": counts,
                "simpson": diversity(counts),
                "hill_q1": hill_number(counts, 1),
                "listed": listed,
            }
        )
    return rows


def table1_text() -> str:
    lines = [
        _header("table1"),
        f"{'group':<6}{'Simpson (q=2)':>15}{'Hill q=1':>11}{'listed':>9}",
    ]
    mismatched = []
    for row in table1_data():
        simpson = f"{float(row['simpson']):.2f}"
        hill = f"{row['hill_q1']:.2f}"
        lines.append(f"{row['name']:<6}{simpson:>15}{hill:>11}{row['listed']:>9}")
        if simpson != row["listed"]:
            mismatched.append(row["name"])
    lines.append("")
    lines.append(
        "note: the listed index agrees with the order-1 Hill number (exp-Shannon) "
        "in every row; it differs from the order-2 Simpson value for "
        + ", ".join(mismatched)
        + "."
    )
    return "\n".join(lines) + "\n"


def tentative_data() -> list[dict]:
    rows = []
    for label, budget, parts in TENTATIVE:
        global_div = diversity(budget)
        rows.append(
            {
                "label": label,
                "budget": budget,
                "parts": parts,
                "global": global_div,
                "epsilon": epsilon_of_partition(parts, budget),
                "worst_ratio": min_diversity(parts) / global_div,
            }
        )
    return rows


def tentative_text() -> str:
    lines = [_header("tentative")]
    for row in tentative_data():
        eps: Fraction = row["epsilon"]
        lines.append("")
        lines.append(f"{row['label']}: D(b) = {row['global']} = {format_float(row['global'])}")
        for p in row["parts"]:
            d = diversity(p)
            lines.append(f"  part {p}: D = {d} = {format_float(d)}")
        lines.append(f"  min D / D(b) = {format_float(row['worst_ratio'])}")
        lines.append(f"  epsilon = {eps}" if eps.denominator == 1 else f"  epsilon = {eps} = {format_float(eps)}")
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return ratio_to_json(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def scenario_data(name: str):
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")
    data = {"islands": islands_data, "table1": table1_data, "tentative": tentative_data}[name]()
    return _jsonable(data)


def scenario_text(name: str) -> str:
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")
    return {"islands": islands_text, "table1": table1_text, "tentative": tentative_text}[name]()
