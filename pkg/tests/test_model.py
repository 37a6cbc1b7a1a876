import random

import pytest

from quivercone import (
    LabeledFamily,
    QuiverFileError,
    Subfamily,
    ValidationError,
    canonicalize,
    format_subfamily,
    parse_quiver,
    parse_subfamily,
    subfamily_literal,
    subquotient,
)
from quivercone.model import Quiver

from conftest import A2_TEXT, STAR_TEXT


def test_parse_a2():
    quiver, fam = parse_quiver(A2_TEXT)
    assert quiver.vertices == ("x", "y")
    assert quiver.arrows == (("x", "y"),)
    assert fam["x"] == (1, 2)
    assert fam["y"] == (1, 2)


def test_parse_star():
    quiver, fam = parse_quiver(STAR_TEXT)
    assert quiver.vertices == ("x1", "x2", "y")
    assert quiver.arrows == (("x1", "y"), ("x2", "y"))


def test_parse_preserves_order_and_parallel_arrows():
    quiver, _ = parse_quiver(
        "vertex b 1\nvertex a 1\narrow b a\narrow b a\n"
    )
    assert quiver.vertices == ("b", "a")
    assert quiver.arrows == (("b", "a"), ("b", "a"))


def test_parse_self_loop_is_cycle():
    with pytest.raises(QuiverFileError, match="line 2.*cycle"):
        parse_quiver("vertex x 1\narrow x x\n")


def test_parse_two_cycle():
    with pytest.raises(QuiverFileError, match="cycle"):
        parse_quiver("vertex x 1\nvertex y 1\narrow x y\narrow y x\n")


def test_parse_duplicate_vertex():
    with pytest.raises(QuiverFileError, match="line 2.*duplicate vertex"):
        parse_quiver("vertex x 1\nvertex x 2\n")


def test_parse_unknown_vertex_in_arrow():
    with pytest.raises(QuiverFileError, match="line 2.*unknown vertex 'z'"):
        parse_quiver("vertex x 1\narrow x z\n")


def test_parse_duplicate_label():
    with pytest.raises(QuiverFileError, match="line 1.*duplicate label 2"):
        parse_quiver("vertex x 1 2 2\n")


def test_parse_malformed_line():
    with pytest.raises(QuiverFileError, match="line 3"):
        parse_quiver("vertex x 1\nvertex y 1\nfrobnicate x y\n")
    with pytest.raises(QuiverFileError, match="line 1"):
        parse_quiver("arrow x\n")
    with pytest.raises(QuiverFileError, match="line 1"):
        parse_quiver("vertex x one\n")


def test_parse_comments_and_blanks():
    quiver, fam = parse_quiver("\n# hi\nvertex x 1 2  # trailing\n\n")
    assert quiver.vertices == ("x",)
    assert fam["x"] == (1, 2)


def test_quiver_rejects_cycles_directly():
    with pytest.raises(ValidationError, match="cycle"):
        Quiver(("x", "y"), (("x", "y"), ("y", "x")))


def test_random_dags_parse_and_backedge_rejected():
    rng = random.Random(12345)
    for _ in range(50):
        n = rng.randint(2, 5)
        names = [f"v{i}" for i in range(n)]
        lines = [f"vertex {v} 1" for v in names]
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.45:
                    edges.append((names[i], names[j]))
        for s, d in edges:
            lines.append(f"arrow {s} {d}")
        text = "\n".join(lines) + "\n"
        quiver, _ = parse_quiver(text)
        assert len(quiver.arrows) == len(edges)
        if edges:
            # one reversed edge closes a cycle
            s, d = edges[rng.randrange(len(edges))]
            with pytest.raises(QuiverFileError, match="cycle"):
                parse_quiver(text + f"arrow {d} {s}\n")


def test_canonicalize_examples():
    fam = LabeledFamily({"x": (2, 5, 7)})
    assert canonicalize(fam)["x"] == (1, 2, 3)
    fam2 = LabeledFamily({"x": (1, 2)})
    assert canonicalize(fam2) == fam2
    fam3 = LabeledFamily({"x": ()})
    assert canonicalize(fam3)["x"] == ()


def test_canonicalize_idempotent():
    rng = random.Random(7)
    for _ in range(30):
        labels = {}
        for v in ("a", "b", "c"):
            size = rng.randint(0, 4)
            labels[v] = sorted(rng.sample(range(1, 20), size))
        fam = LabeledFamily(labels)
        once = canonicalize(fam)
        assert canonicalize(once) == once


def test_subquotient_examples():
    fam = LabeledFamily({"x": (1, 2, 3)})
    sub = Subfamily(fam, {"x": (2,)})
    s, q = subquotient(fam, sub)
    assert s["x"] == (2,)
    assert q["x"] == (1, 3)

    full = Subfamily(fam, {"x": (1, 2, 3)})
    _, q2 = subquotient(fam, full)
    assert q2["x"] == ()

    with pytest.raises(ValidationError):
        Subfamily(LabeledFamily({"x": (1, 2)}), {"x": (4,)})


def test_subquotient_partitions_labels():
    rng = random.Random(99)
    for _ in range(30):
        labels = {v: sorted(rng.sample(range(1, 15), rng.randint(0, 5))) for v in "ab"}
        fam = LabeledFamily(labels)
        chosen = {v: [l for l in labels[v] if rng.random() < 0.5] for v in "ab"}
        sub = Subfamily(fam, chosen)
        s, q = subquotient(fam, sub)
        for v in "ab":
            assert sorted(s[v] + q[v]) == list(labels[v])
            assert not (set(s[v]) & set(q[v]))


def test_labeled_family_validation():
    with pytest.raises(ValidationError):
        LabeledFamily({"x": (0,)})
    with pytest.raises(ValidationError):
        LabeledFamily({"x": (2, 1)})
    with pytest.raises(ValidationError):
        LabeledFamily({"x": (1, 1)})


def test_subfamily_literal_round_trip(a2):
    _, fam = a2
    sub = parse_subfamily("x:1;y:", fam)
    assert sub["x"] == (1,)
    assert sub["y"] == ()
    assert format_subfamily(sub) == "x:{1};y:{}"
    assert subfamily_literal(sub) == "x:1;y:"
    # omitted vertices mean empty
    sub2 = parse_subfamily("y:1,2", fam)
    assert sub2["x"] == ()
    assert sub2["y"] == (1, 2)


def test_subfamily_literal_errors(a2):
    _, fam = a2
    with pytest.raises(ValidationError):
        parse_subfamily("z:1", fam)
    with pytest.raises(QuiverFileError):
        parse_subfamily("x:frog", fam)
    with pytest.raises(ValidationError):
        parse_subfamily("x:3", fam)
    with pytest.raises(QuiverFileError):
        parse_subfamily("x:1;x:2", fam)
