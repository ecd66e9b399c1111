import json
import random

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester

import projcad

CIRCLE = "vars: x, y\nx^2 + y^2 - 1\n"


def test_circle_counts():
    assert projcad.cell_count(CIRCLE) == 13
    assert projcad.cell_count(CIRCLE, method="collins") == 13


def test_order_invariance_adds_cells():
    src = "vars: x, y, z\nz*y - x^2\n"
    assert projcad.cell_count(src) == 21
    assert projcad.cell_count(src, final_oi=True) == 23


def test_json_output():
    doc = json.loads(projcad.compute(CIRCLE))
    assert list(doc)[:4] == ["variables", "method", "finalOI", "cellCount"]
    assert doc["cellCount"] == len(doc["cells"]) == 13
    assert doc["variables"] == ["x", "y"]


def test_count_output():
    assert projcad.compute(CIRCLE, output="count").strip() == "13"


def test_warning_and_strict_mode():
    src = "vars: x, y, z, w\ny*w + x\n"
    assert projcad.warnings(src) == [([2, 2, 1], "w*y + x")]
    assert projcad.warnings(src, final_oi=False) == []
    with pytest.raises(projcad.NotWellOriented):
        projcad.compute(src, final_oi=True, strict=True)


def test_parse_errors():
    with pytest.raises(projcad.ParseError):
        projcad.compute("vars: x\nx^-1\n")
    with pytest.raises(projcad.Error):
        projcad.compute("vars: x\nx*q\n")


def test_examples_pass():
    results = projcad.run_examples()
    assert {r["name"] for r in results} >= {"circle", "w-example"}
    assert all(r["passed"] for r in results)


def _random_poly(rng, syms, degree):
    terms = []
    for _ in range(4):
        mono = sympy.Integer(rng.randint(-5, 5))
        for _ in range(rng.randint(0, degree)):
            mono *= rng.choice(syms)
        terms.append(mono)
    return sympy.expand(sum(terms))


def _to_input(expr):
    return str(expr).replace("**", "^")


def test_resultant_and_discriminant_against_sympy():
    x, y = sympy.symbols("x y")
    rng = random.Random(5)
    checked = 0
    while checked < 40:
        f = _random_poly(rng, [x, y], 3)
        g = _random_poly(rng, [x, y], 3)
        if sympy.degree(f, y) < 1 or sympy.degree(g, y) < 1:
            continue
        ours = sympy.sympify(projcad.resultant(_to_input(f), _to_input(g), "y", ["x", "y"]).replace("^", "**"))
        # sympy.resultant differs in sign when deg f < deg g, so compare
        # against the Sylvester determinant itself.
        assert sympy.expand(ours - sylvester(f, g, y, 1).det()) == 0
        if sympy.degree(f, y) >= 2:
            d = sympy.sympify(projcad.discriminant(_to_input(f), "y", ["x", "y"]).replace("^", "**"))
            assert sympy.expand(d - sympy.discriminant(f, y)) == 0
        checked += 1
