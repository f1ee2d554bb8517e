import pytest

from symreduce import atlas
from symreduce.atlas import (
    Family,
    alternating,
    display_name,
    enumerate_catalog,
    facts,
    g2,
    linear,
    load_sporadic_table,
    order,
    order_lower_bound_holds,
    orthogonal_minus,
    orthogonal_odd,
    orthogonal_plus,
    out4_candidates,
    out4_scan,
    out_order,
    out_order_bound_holds,
    parse_group,
    ree_f4,
    ree_g2,
    sporadic,
    steinberg_3d4,
    suzuki,
    symplectic,
    tits,
    unitary,
)
from symreduce.errors import DomainError, TailCheckFailed

# Orders cross-checked against standard published tables.
ORDER_ANCHORS = [
    ("A5", 60),
    ("A6", 360),
    ("A7", 2520),
    ("A8", 20160),
    ("L2(7)", 168),
    ("L2(8)", 504),
    ("L2(11)", 660),
    ("L3(3)", 5616),
    ("L3(4)", 20160),
    ("L5(2)", 9999360),
    ("U3(3)", 6048),
    ("U3(4)", 62400),
    ("U4(2)", 25920),
    ("S6(2)", 1451520),
    ("O7(3)", 4585351680),
    ("O+8(2)", 174182400),
    ("O-8(2)", 197406720),
    ("G2(3)", 4245696),
    ("G2(4)", 251596800),
    ("2B2(8)", 29120),
    ("2B2(32)", 32537600),
    ("2G2(27)", 10073444472),
    ("3D4(2)", 211341312),
    ("F4(2)", 3311126603366400),
    ("2F4(2)'", 17971200),
    ("M11", 7920),
    ("M12", 95040),
    ("M24", 244823040),
    ("J2", 604800),
]

OUT_ANCHORS = [
    ("A5", 2),
    ("A6", 4),
    ("A7", 2),
    ("L2(7)", 2),
    ("L2(8)", 3),
    ("L2(9)", 4),
    ("L3(4)", 12),
    ("L4(3)", 4),
    ("U3(3)", 2),
    ("U4(3)", 8),
    ("U6(2)", 6),
    ("S4(4)", 4),
    ("S6(2)", 1),
    ("O7(3)", 2),
    ("O+8(2)", 6),
    ("O+8(3)", 24),
    ("O-10(2)", 2),
    ("G2(3)", 2),
    ("G2(4)", 2),
    ("F4(2)", 2),
    ("2E6(2)", 6),
    ("3D4(2)", 3),
    ("2B2(8)", 3),
    ("2G2(27)", 3),
    ("E6(2)", 2),
    ("E7(2)", 1),
    ("E8(2)", 1),
    ("M12", 2),
    ("M24", 1),
    ("2F4(2)'", 2),
]


@pytest.mark.parametrize("name,expected", ORDER_ANCHORS)
def test_order_anchors(name, expected):
    assert order(parse_group(name)) == expected


@pytest.mark.parametrize("name,expected", OUT_ANCHORS)
def test_out_anchors(name, expected):
    assert out_order(parse_group(name)) == expected


def test_same_order_different_groups():
    a8 = parse_group("A8")
    l34 = parse_group("L3(4)")
    assert a8 != l34
    assert order(a8) == order(l34) == 20160


def test_aliases_canonicalize():
    assert parse_group("L2(4)") == parse_group("A5")
    assert parse_group("L2(5)") == parse_group("A5")
    assert parse_group("L2(9)") == parse_group("A6")
    assert parse_group("L4(2)") == parse_group("A8")
    assert parse_group("L3(2)") == parse_group("L2(7)")
    assert parse_group("S4(3)") == parse_group("U4(2)")
    assert linear(2, 4) == alternating(5)
    assert symplectic(4, 3) == unitary(4, 2)


def test_display_names():
    assert display_name(alternating(5)) == "A5"
    assert display_name(linear(3, 4)) == "L3(4)"
    assert display_name(orthogonal_plus(8, 2)) == "O+8(2)"
    assert display_name(orthogonal_minus(8, 2)) == "O-8(2)"
    assert display_name(suzuki(8)) == "2B2(8)"
    assert display_name(ree_g2(27)) == "2G2(27)"
    assert display_name(steinberg_3d4(2)) == "3D4(2)"
    assert display_name(tits()) == "2F4(2)'"
    assert display_name(sporadic("M11")) == "M11"


def test_parse_display_roundtrip():
    names = [n for n, _ in ORDER_ANCHORS]
    for name in names:
        gid = parse_group(name)
        # Aliases parse to a canonical group; everything in the anchor
        # table is already canonical.
        assert display_name(gid) == name


def test_parse_rejects_junk():
    for bad in ["A4", "L1(5)", "L2(2)", "L2(3)", "L2(6)", "U2(3)", "U3(2)",
                "S4(2)", "S3(3)", "O5(3)", "O6(3)", "O+6(2)", "O-7(3)",
                "G2(2)", "2B2(4)", "2B2(16)", "2G2(3)", "2G2(9)", "2F4(4)",
                "X3(2)", "A", "", "L3", "M99"]:
        with pytest.raises(DomainError):
            parse_group(bad)


def test_constructor_domains():
    with pytest.raises(DomainError):
        alternating(4)
    with pytest.raises(DomainError):
        linear(2, 2)
    with pytest.raises(DomainError):
        linear(2, 3)
    with pytest.raises(DomainError):
        linear(2, 6)  # not a prime power
    with pytest.raises(DomainError):
        unitary(3, 2)
    with pytest.raises(DomainError):
        symplectic(4, 2)
    with pytest.raises(DomainError):
        symplectic(5, 3)  # odd dimension
    with pytest.raises(DomainError):
        orthogonal_odd(7, 2)  # q must be odd
    with pytest.raises(DomainError):
        orthogonal_odd(5, 3)
    with pytest.raises(DomainError):
        orthogonal_plus(6, 2)
    with pytest.raises(DomainError):
        g2(2)  # has a normal subgroup of index 2
    with pytest.raises(DomainError):
        suzuki(2)
    with pytest.raises(DomainError):
        suzuki(16)  # even exponent
    with pytest.raises(DomainError):
        ree_g2(3)
    with pytest.raises(DomainError):
        ree_f4(2)
    with pytest.raises(DomainError):
        sporadic("Zz")


def test_g2_smallest_is_3():
    assert order(g2(3)) == 4245696
    assert order_lower_bound_holds(g2(3))


def test_sporadic_table_contents():
    table = load_sporadic_table()
    assert len(table) == 27
    assert table["M11"].order == 7920 and table["M11"].out_order == 1
    assert table["B"].out_order == 1
    assert table["M"].order % 2**46 == 0
    assert table["2F4(2)'"].order == 17971200


def test_sporadic_table_override(tmp_path):
    custom = tmp_path / "table.txt"
    custom.write_text("# test table\nXy1, 5040, 3\n")
    gid = parse_group("Xy1", sporadic_table=str(custom))
    assert order(gid, sporadic_table=str(custom)) == 5040
    assert out_order(gid, sporadic_table=str(custom)) == 3
    with pytest.raises(DomainError):
        parse_group("M11", sporadic_table=str(custom))


def test_sporadic_table_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("M11, 7920\n")
    with pytest.raises(DomainError):
        load_sporadic_table(str(bad))
    dup = tmp_path / "dup.txt"
    dup.write_text("M11, 7920, 1\nM11, 7920, 1\n")
    with pytest.raises(DomainError):
        load_sporadic_table(str(dup))


def test_catalog_bound_200():
    names = [display_name(g) for g, _ in enumerate_catalog(200)]
    assert names == ["A5", "L2(7)"]


def test_catalog_bound_59():
    assert enumerate_catalog(59) == []


def test_catalog_bound_400():
    names = [display_name(g) for g, _ in enumerate_catalog(400)]
    assert names == ["A5", "L2(7)", "A6"]
    assert names.count("A6") == 1
    assert "L2(9)" not in names


def test_catalog_order_and_dedup():
    cat = enumerate_catalog(30000)
    names = [display_name(g) for g, _ in cat]
    assert len(names) == len(set(names))
    orders = [f.order for _, f in cat]
    assert orders == sorted(orders)
    # A8 and L3(4) share order 20160; family order breaks the tie
    i_a8, i_l34 = names.index("A8"), names.index("L3(4)")
    assert i_a8 + 1 == i_l34
    assert "U4(2)" in names and "S4(3)" not in names
    assert "M11" in names
    assert "2B2(8)" in names


def test_catalog_includes_borderline():
    cat = enumerate_catalog(10_000_000)
    names = [display_name(g) for g, _ in cat]
    assert "L5(2)" in names  # order 9999360
    by_name = {display_name(g): f for g, f in cat}
    assert by_name["L5(2)"].order == 9999360
    assert all(f.order <= 10_000_000 for _, f in cat)


def test_catalog_excludes_sporadic_when_table_empty(tmp_path):
    empty = tmp_path / "none.txt"
    empty.write_text("# no rows\n")
    names = [display_name(g) for g, _ in enumerate_catalog(10**5, sporadic_table=str(empty))]
    assert "M11" not in names
    assert "A5" in names


def test_facts_consistency():
    for name, expected in ORDER_ANCHORS:
        gid = parse_group(name)
        f = facts(gid)
        assert f.order == expected
        assert f.out_order == out_order(gid)


# q = 4, 5, 9 are missing: those cells canonicalize to alternating groups,
# and the bound predicate is only defined for Lie identifiers.
@pytest.mark.parametrize("q", [7, 8, 11, 13, 16, 25, 27, 32, 64])
def test_linear2_lower_bound(q):
    assert order_lower_bound_holds(linear(2, q))


def _lie_grid(n_max, q_max):
    # Cells whose constructor canonicalizes them into the alternating
    # family (L2(4), L2(5), L2(9), L4(2)) drop out: the cited bounds are
    # stated for Lie identifiers only.
    from symreduce.intmath import prime_powers_upto

    out = []
    for q in prime_powers_upto(q_max):
        for ctor in (suzuki, ree_g2, ree_f4, g2, steinberg_3d4):
            try:
                out.append(ctor(q))
            except DomainError:
                pass
        for n in range(2, n_max + 1):
            for ctor in (linear, unitary, symplectic, orthogonal_odd,
                         orthogonal_plus, orthogonal_minus):
                try:
                    gid = ctor(n, q)
                except DomainError:
                    continue
                if gid.family is not Family.ALTERNATING:
                    out.append(gid)
    return out


def test_order_lower_bounds_sweep():
    # |T| exceeds the per-family bound used to cut off catalog iteration,
    # for every group in a sizeable box.
    checked = 0
    for gid in _lie_grid(12, 64):
        assert order_lower_bound_holds(gid), display_name(gid)
        checked += 1
    assert checked > 400


def test_out_order_bounds_sweep():
    for gid in _lie_grid(12, 64):
        assert out_order_bound_holds(gid), display_name(gid)


def test_out4_scan_reference_bounds():
    scan = out4_scan(12, 1024)
    assert [display_name(g) for g in scan.candidates] == ["L3(4)"]
    assert scan.ok
    assert all(c.ok for c in scan.checks)
    l34 = scan.candidates[0]
    assert order(l34) == 20160 and out_order(l34) == 12
    assert 20160 < 12**4


def test_out4_scan_no_alias_candidates():
    scan = out4_scan(12, 1024)
    names = {display_name(g) for g in scan.candidates}
    for alias in ["A5", "A6", "A8", "U4(2)"]:
        assert alias not in names


def test_out4_scan_unitary_only():
    scan = out4_scan(12, 1024, families=frozenset({Family.UNITARY}))
    assert scan.candidates == ()
    assert scan.ok


def test_out4_scan_small_box_fails_tails():
    scan = out4_scan(6, 3, include_sporadic=False)
    assert scan.candidates == ()
    assert not scan.ok
    failing = {c.family for c in scan.failing_checks()}
    assert failing  # the box is genuinely too small
    # families whose smallest admissible q exceeds 3 contribute no checks,
    # hence no failures
    assert not failing & {Family.SUZUKI, Family.REE_G2, Family.REE_F4}


def test_out4_candidates_raises_on_small_box():
    with pytest.raises(TailCheckFailed) as exc_info:
        out4_candidates(6, 3, sporadic=False)
    assert exc_info.value.result is not None
    assert not exc_info.value.result.ok
    # the scan itself found nothing: emptiness holds, the box just cannot
    # vouch for anything beyond itself
    assert exc_info.value.result.candidates == ()


def test_out4_candidates_reference():
    got = out4_candidates(12, 1024)
    assert [display_name(g) for g in got] == ["L3(4)"]


def test_out4_scan_rejects_tiny_bounds():
    with pytest.raises(DomainError):
        out4_scan(4, 1024)
    with pytest.raises(DomainError):
        out4_scan(12, 1)


def test_tail_check_shapes():
    scan = out4_scan(12, 1024)
    axes = {(c.family, c.axis) for c in scan.checks}
    # classical families are checked along both axes
    assert (Family.LINEAR, "n") in axes and (Family.LINEAR, "q") in axes
    assert (Family.UNITARY, "n") in axes and (Family.UNITARY, "q") in axes
    # exceptional families only along q
    assert (Family.G2, "q") in axes and (Family.G2, "n") not in axes
    assert (Family.ALTERNATING, "n") in axes
    for c in scan.checks:
        assert c.boundary_ratio < 1
