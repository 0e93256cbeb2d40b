"""Smoke test for the matroid_liaison extension module."""

import matroid_liaison as ml

tri = ml.Matroid.uniform(2, 3)
assert tri.n == 3 and tri.rank == 2
assert sorted(tri.bases) == [[1, 2], [1, 3], [2, 3]]
assert tri.dual() == ml.Matroid.uniform(1, 3)
assert ml.Matroid.graphic(3, [(1, 2), (1, 3), (2, 3)]) == tri

try:
    ml.Matroid(3, [[1], [2, 3]])
except ValueError as e:
    assert "exchange" in str(e)
else:
    raise AssertionError("non-matroid accepted")

j2 = tri.ideal(side="cover", l=2)
assert len(j2) == 4
assert j2.contains([1, 1, 1]) and not j2.contains([1, 1, 0])
assert sorted(tri.ideal(l=2, colon="x3").gens_text()) == ["x1*x2", "x1^2*x3", "x2^2*x3"]

cert = j2.cm_check(field="fp:2")
assert cert["cm"] is True and cert["field"] == "F2"

edges = ml.MonomialIdeal(["a", "b", "c", "d"], [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]])
assert not ml.is_cohen_macaulay(edges)

chain = tri.glicci(side="cover", l=2)
assert chain["status"] == "verified-shallow"
assert chain["terminal"]["kind"] == "complete-intersection"
assert [s["verdicts"]["sum_before"] for s in chain["steps"]] == [6, 4]

print("smoke test passed:", ml.__version__, j2)
