import pytest

from scrollink.expr import ExpressionError, evaluate, parse, tokenize
from scrollink.scroll import ResolvedClass, make_scroll

S003 = make_scroll([0, 0, 3])


@pytest.mark.parametrize(
    "text, value",
    [
        ("(2H+R)*H*H", 7),
        ("H*H*H", 3),
        ("H*H*R", 1),
        ("R*R*H", 0),
        ("(H-2R)*(H - 2R)*H", 3 - 4),
        ("(-H+R)*H*H", -3 + 1),
        ("(2H−R)*H*H", 5),
        ("3H*H*H", 9),
        ("(0H+R)*H*H", 1),
    ],
)
def test_evaluate(text, value):
    assert evaluate(S003, text) == value


def test_parse_structure():
    prod = parse("(2H+R)*H*3R")
    assert [f.to_class() for f in prod.factors] == [ResolvedClass(2, 1), ResolvedClass(1, 0), ResolvedClass(0, 3)]


@pytest.mark.parametrize(
    "text, pos",
    [
        ("2*H*H", 0),
        ("(H+1)*H*H", 0),
        ("H*H*H*(R+2)", 6),
        ("H*H*(2)", 4),
        ("H*H*", 4),
        ("H*X*H", 2),
        ("(H+R*H*H", 4),
        ("H*H H", 4),
    ],
)
def test_rejects_with_position(text, pos):
    with pytest.raises(ExpressionError) as exc:
        evaluate(S003, text)
    assert exc.value.pos == pos
    assert f"position {pos}" in str(exc.value)


def test_wrong_factor_count():
    with pytest.raises(ExpressionError) as exc:
        evaluate(S003, "H*H")
    assert "dimension 3" in str(exc.value)
    assert evaluate(make_scroll([1, 2]), "H*H") == 3


def test_tokenize_positions():
    toks = tokenize(" 2H + R")
    assert [(t.kind, t.text, t.pos) for t in toks] == [
        ("int", "2", 1), ("sym", "H", 2), ("op", "+", 4), ("sym", "R", 6), ("end", "", 7)
    ]
