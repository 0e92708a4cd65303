"""Smoke test for the pykkwreath extension module."""

import json
from pathlib import Path

import pykkwreath as kw

FIXTURES = Path(__file__).resolve().parents[1] / "crates" / "core" / "fixtures"


def main():
    z2, z4 = kw.Group.cyclic(2), kw.Group.cyclic(4)
    ext = kw.Extension(z2, z4, z2, [0, 2], [0, 1, 0, 1])
    assert len(ext.sections()) == 4
    assert ext.splitting() is None
    for s in ext.sections():
        r = ext.kk_embed(s)
        assert r["injective"] and r["diagram_ok"], r
        assert r["wreath_order"] == 8 and r["image_order"] == 4

    assert kw.wreath_order(kw.Group.cyclic(3), z2) == 18
    s3 = kw.Group.from_permutations("S3", [[1, 2, 0], [1, 0, 2]])
    assert s3.order() == 6 and not s3.is_abelian()
    assert kw.Group.from_json(s3.to_json()).table() == s3.table()

    split = kw.Extension.from_json((FIXTURES / "s3_split.json").read_text())
    assert split.splitting() is not None

    free = kw.Extension(kw.Group.cyclic(1), z2, z2, [0], [0, 1])
    words = free.kernel_words(4)
    for w in words:
        assert free.pres_to_word(free.word_to_pres(w)) == w
    print(f"{len(words)} kernel words round-trip")

    solvable = json.dumps({"dim": 2, "brackets": [[0, 1, ["0", "1"]]]})
    terms = dict((tuple(m), c) for m, c in kw.pbw_straighten(solvable, [1, 0], 3))
    assert terms == {(0, 1): "1", (1,): "-1"}, terms

    checks = kw.lie_embed((FIXTURES / "aff1.json").read_text(), 3)
    assert all(c["status"] == "pass" for c in checks), checks

    try:
        kw.Group.from_table("bad", [[0, 1], [0, 1]])
    except ValueError as e:
        print("rejected:", e)
    else:
        raise AssertionError("invalid table accepted")

    code, report = kw.run_suite()
    assert code == 0, report["summary"]
    print("suite:", report["summary"])
    print("smoke test passed")


if __name__ == "__main__":
    main()
