from fractions import Fraction

import pytest

qhopf = pytest.importorskip("qhopf")


def test_normal_forms():
    assert qhopf.nf("x[2,1]*x[1,1]") == "q^-1*x[1,1]*x[2,1]"
    assert qhopf.nf("theta*theta") == "0"
    assert qhopf.nf("U*Uinv") == "1"
    assert qhopf.nf("rho[2]*rho[1]", n=2) == "q^-2*rho[1]*rho[2]"


def test_eval():
    assert qhopf.eval("q + q^-1", 2) == Fraction(5, 2)
    assert qhopf.eval("(q-1)*(q-q^-2)", 1) == 0
    assert qhopf.eval("absx", Fraction(7, 5), u=4) == 2


def test_errors():
    with pytest.raises(qhopf.QhopfError, match="col 8"):
        qhopf.nf("x[1,1]**")
    with pytest.raises(qhopf.QhopfError, match="NotSpecializable"):
        qhopf.eval("x[1,1]", 2)
    with pytest.raises(qhopf.QhopfError, match="UnknownSuite"):
        qhopf.verify("nosuch")


def test_verify():
    r = qhopf.verify(["tensors", "gauge.inst"], q_numeric=Fraction(7, 5))
    assert r["schema"] == 1
    assert r["summary"]["fail"] == 0
    assert len(r["suites"][0]["checks"]) >= 8
    assert "timing" not in r
    checks = [c for s in r["suites"] for c in s["checks"] if c.get("numeric")]
    assert checks and all(c["numeric"]["zero"] for c in checks)


def test_tensors_and_confluence():
    k, unique = qhopf.resolve_k()
    assert unique and k == "-q^-1 + q"
    assert qhopf.confluence("braided", n=2)["ok"]
    names = [name for name, _ in qhopf.suites()]
    assert "gauge.u2" in names
