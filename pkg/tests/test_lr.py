import itertools

import pytest

from quivercone import (
    Partition,
    ValidationError,
    lr_coefficient,
    lr_expansion,
    multi_lr,
    star_cone_check,
    star_quiver,
)


# --- independent oracle: straight-shape tableaux and polynomial arithmetic ---


def ssyt_monomials(shape, nvars):
    """Monomial multiset of the Schur polynomial, via column-strict tableaux."""
    shape = tuple(shape)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    counts = {}
    grid = {}

    def fill(pos):
        if pos == len(cells):
            key = tuple(
                sum(1 for v in grid.values() if v == i + 1) for i in range(nvars)
            )
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for val in range(lo, nvars + 1):
            grid[(r, c)] = val
            fill(pos + 1)
            del grid[(r, c)]

    fill(0)
    return counts


def poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def schur_expand(poly, nvars):
    """Greedy expansion of a symmetric polynomial in the Schur basis."""
    poly = dict(poly)
    out = {}
    while poly:
        lead = max(poly)  # lex-leading exponent is a partition
        coeff = poly[lead]
        assert list(lead) == sorted(lead, reverse=True)
        out[lead] = coeff
        for k, v in ssyt_monomials(lead, nvars).items():
            key = tuple(k)
            poly[key] = poly.get(key, 0) - coeff * v
            if poly[key] == 0:
                del poly[key]
    return out


def products_via_characters(lam, mu, nvars):
    sa = ssyt_monomials(lam, nvars)
    sb = ssyt_monomials(mu, nvars)
    return schur_expand(poly_mul(sa, sb), nvars)


def partitions_upto(max_part, max_rows):
    vals = range(max_part, -1, -1)
    for combo in itertools.combinations_with_replacement(vals, max_rows):
        yield tuple(sorted(combo, reverse=True))


# --- tests ---


def test_partition_basics():
    p = Partition((3, 1, 0, 0))
    assert p.parts == (3, 1)
    assert p.size() == 4
    assert p.padded(3) == (3, 1, 0)
    assert Partition.parse("2,1") == Partition((2, 1))
    assert Partition.parse("") == Partition(())
    with pytest.raises(ValidationError):
        Partition((1, 2))
    with pytest.raises(ValidationError):
        Partition((-1,))
    with pytest.raises(ValidationError):
        Partition((1,)).padded(0)


def test_pieri_examples():
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((1,), (1,), (2,)) == 1


def test_adjoint_squared():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_unit_and_degree():
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((2, 1), (), (3,)) == 0
    assert lr_coefficient((1,), (1,), (3,)) == 0  # degree mismatch


def test_symmetry_small_range():
    parts = list(partitions_upto(2, 2))
    for lam in parts:
        for mu in parts:
            for nu in partitions_upto(4, 4):
                assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_against_character_oracle():
    nvars = 3
    parts = [p for p in partitions_upto(2, 3)]
    for lam in parts:
        for mu in parts:
            expected = products_via_characters(lam, mu, nvars)
            got = {
                nu.padded(nvars): c
                for nu, c in lr_expansion(lam, mu)
                if nu.length() <= nvars
            }
            assert got == expected, (lam, mu)


def test_multi_lr_examples():
    assert multi_lr([(2, 1)], (2, 1)) == 1
    assert multi_lr([(2, 1)], (3,)) == 0
    assert multi_lr([(1,), (1,)], (1, 1)) == lr_coefficient((1,), (1,), (1, 1))
    assert multi_lr([(1,), (1,), (1,)], (1, 1, 1)) == 1
    assert multi_lr([(1,), (1,), (1,)], (2, 1)) == 2
    assert multi_lr([(1,), (1,), (1,)], (3,)) == 1


def test_star_cone_check_examples():
    # scalars
    res = star_cone_check(1, 2, [(2,), (3,)], (5,))
    assert res.lr_positive and res.cone_member and res.agree
    # Pieri
    res = star_cone_check(2, 2, [(1,), (1,)], (1, 1))
    assert res.lr_positive and res.cone_member and res.agree
    # degree mismatch: both sides reject
    res = star_cone_check(2, 2, [(1,), (1,)], (2, 1))
    assert not res.lr_positive and not res.cone_member and res.agree
    # a vanishing coefficient with matching degree
    res = star_cone_check(2, 2, [(2,), (1, 1)], (2, 2))
    assert not res.lr_positive and not res.cone_member and res.agree


def test_star_cone_check_row_bound():
    with pytest.raises(ValidationError, match="rows"):
        star_cone_check(2, 2, [(1, 1, 1), (1,)], (2, 1))
    with pytest.raises(ValidationError, match="source partitions"):
        star_cone_check(2, 2, [(1,)], (1,))


def test_star_quiver_shape():
    q = star_quiver(3)
    assert q.vertices == ("x1", "x2", "x3", "y")
    assert q.arrows == (("x1", "y"), ("x2", "y"), ("x3", "y"))
