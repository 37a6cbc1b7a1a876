import random

from quivercone import (
    LabeledFamily,
    Quiver,
    Subfamily,
    Weight,
    dim_compatible,
    dim_hom_space,
    eul,
    euler_form,
    kappa,
    subquotient,
)

from conftest import canon


def brute_compatible(quiver, fam_v, fam_w):
    """Independent oracle: enumerate elementary maps pair by pair."""
    total = 0
    for x in quiver.vertices:
        for k in fam_v[x]:
            for j in fam_w[x]:
                if j <= k:
                    total += 1
    return total


def test_euler_form_examples(a2_quiver):
    assert euler_form(a2_quiver, {"x": 1, "y": 1}, {"x": 1, "y": 1}) == 1
    assert euler_form(a2_quiver, {"x": 1, "y": 0}, {"x": 0, "y": 1}) == -1
    no_arrow = Quiver(("x", "y"), ())
    assert euler_form(no_arrow, {"x": 2, "y": 3}, {"x": 4, "y": 5}) == 23


def test_dim_hom_space_examples(a2_quiver):
    assert dim_hom_space(a2_quiver, {"x": 1, "y": 1}, {"x": 2, "y": 2}) == 2
    kron = Quiver(("x", "y"), (("x", "y"), ("x", "y")))
    assert dim_hom_space(kron, {"x": 1, "y": 0}, {"x": 0, "y": 3}) == 6
    no_arrow = Quiver(("x", "y"), ())
    assert dim_hom_space(no_arrow, {"x": 5, "y": 5}, {"x": 5, "y": 5}) == 0


def test_dim_compatible_examples(a2_quiver, a2_family):
    sub = Subfamily(a2_family, {"x": (2,), "y": (1, 2)})
    s, q = subquotient(a2_family, sub)
    assert dim_compatible(a2_quiver, s, q) == 1
    assert dim_compatible(a2_quiver, s, q) == brute_compatible(a2_quiver, s, q)

    # identical canonical families: all pairs j <= k
    fam = canon(a2_quiver, 3, 2)
    assert dim_compatible(a2_quiver, fam, fam) == 3 * 4 // 2 + 2 * 3 // 2

    sub2 = Subfamily(a2_family, {"x": (1,), "y": (1,)})
    s2, q2 = subquotient(a2_family, sub2)
    assert dim_compatible(a2_quiver, s2, q2) == 0


def test_eul_examples(a2_quiver, a2_family):
    cases = {
        ("x:1", "y:2"): 0,
        ("x:1", "y:1"): -1,
    }
    for (cx, cy), expected in cases.items():
        sub = Subfamily(
            a2_family,
            {"x": [int(t) for t in cx[2:].split(",") if t], "y": [int(t) for t in cy[2:].split(",") if t]},
        )
        s, q = subquotient(a2_family, sub)
        assert eul(a2_quiver, s, q) == expected
    full = Subfamily(a2_family, {"x": (1, 2), "y": (1, 2)})
    s, q = subquotient(a2_family, full)
    assert eul(a2_quiver, s, q) == 0


def test_compatible_bounds_and_relabel_invariance(a2_quiver):
    rng = random.Random(31)
    for _ in range(40):
        lv = {v: sorted(rng.sample(range(1, 12), rng.randint(0, 4))) for v in "xy"}
        lw = {v: sorted(rng.sample(range(1, 12), rng.randint(0, 4))) for v in "xy"}
        fv, fw = LabeledFamily(lv), LabeledFamily(lw)
        d = dim_compatible(a2_quiver, fv, fw)
        assert d == brute_compatible(a2_quiver, fv, fw)
        assert d <= sum(len(lv[v]) * len(lw[v]) for v in "xy")
        assert eul(a2_quiver, fv, fw) <= euler_form(a2_quiver, fv.dims(), fw.dims())

        # joint order-preserving relabeling leaves the counts alone
        remap = {}
        for v in "xy":
            axis = sorted(set(lv[v]) | set(lw[v]))
            images = sorted(rng.sample(range(1, 40), len(axis)))
            remap[v] = dict(zip(axis, images))
        fv2 = LabeledFamily({v: [remap[v][l] for l in lv[v]] for v in "xy"})
        fw2 = LabeledFamily({v: [remap[v][l] for l in lw[v]] for v in "xy"})
        assert dim_compatible(a2_quiver, fv2, fw2) == d
        assert eul(a2_quiver, fv2, fw2) == eul(a2_quiver, fv, fw)


def test_subquotient_count_is_strict(a2_quiver, a2_family):
    rng = random.Random(5)
    for _ in range(25):
        chosen = {v: [l for l in a2_family[v] if rng.random() < 0.5] for v in "xy"}
        sub = Subfamily(a2_family, chosen)
        s, q = subquotient(a2_family, sub)
        strict = sum(
            1
            for v in "xy"
            for k in s[v]
            for j in q[v]
            if j < k
        )
        assert dim_compatible(a2_quiver, s, q) == strict


def test_kappa_examples(a2_quiver, a2_family):
    full = Subfamily(a2_family, {"x": (1, 2), "y": (1, 2)})
    assert kappa(a2_quiver, a2_family, full).is_zero()

    sub = Subfamily(a2_family, {"x": (1,), "y": (2,)})
    w = kappa(a2_quiver, a2_family, sub)
    assert w == Weight({("x", 1): 1, ("y", 2): -1})

    empty = Subfamily(a2_family, {})
    assert kappa(a2_quiver, a2_family, empty).is_zero()


def test_kappa_coefficients_sum_to_zero(star2):
    quiver, fam = star2
    rng = random.Random(17)
    for _ in range(40):
        chosen = {v: [l for l in fam[v] if rng.random() < 0.5] for v in fam.vertices}
        sub = Subfamily(fam, chosen)
        w = kappa(quiver, fam, sub)
        assert w.coefficient_sum() == 0
        pairs = {(v, l) for v in fam.vertices for l in fam[v]}
        assert w.support() <= pairs


def test_weight_algebra():
    a = Weight({("x", 1): 1})
    b = Weight({("x", 1): -1, ("y", 2): 2})
    assert (a + b) == Weight({("y", 2): 2})
    assert (a - a).is_zero()
    assert a[("x", 1)] == 1
    assert a[("zz", 9)] == 0
