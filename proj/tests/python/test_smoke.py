import catkit


def test_hecke():
    assert catkit.hecke_mul("213", "132") == "231"
    assert catkit.bruhat_ideal("231") == ["123", "132", "213", "231"]
    assert len(catkit.hecke_idempotents(4)) == 8
    assert catkit.fold(1, "({1,3},{2,4})") == "({2,3},{1,4})"


def test_dcm():
    assert [catkit.dc_size(n) for n in range(1, 6)] == [1, 2, 6, 23, 103]
    assert catkit.count_avoiders(5, "4321") == 103
    assert catkit.catalan_size(4) == 14
    assert catkit.self_dual_count(4) == 9
    assert catkit.psi("231") == ["111", "111", "011"]
    f = catkit.fiber(["1111"] * 4)
    assert f["tau"] == "4231" and f["maximal"] == ["4321"] and f["convex"]
    r = catkit.verify_presentation(4)
    assert r["presented_size"] == 23 and r["matches"] and r["stable"]


def test_dyck():
    assert catkit.kreweras_derivative("UDUDUD") == "UDUDUD"
    assert catkit.is_admissible("UUDUDD", "UUUDDD")
    assert not catkit.is_admissible("UUDUDD", "UUDUDD")
    assert catkit.prec("UUDUDD", "UUUDDD")


def test_coxeter_and_modules():
    assert catkit.coxeter_size("B3") == 48
    r = catkit.min_dim_report("A3")
    assert r["claimed"] == r["constructed_dim"] == 11 and r["effective"]
    assert catkit.dc_min_dim(4) == {"dim": 6, "monoid_size": 23, "effective": True}


def test_errors():
    try:
        catkit.dc_size(9)
    except catkit.CapExceeded:
        pass
    else:
        raise AssertionError("expected CapExceeded")


def test_verify_all():
    results = catkit.verify_all(3, 1, 100)
    assert results and all(r["passed"] for r in results)
