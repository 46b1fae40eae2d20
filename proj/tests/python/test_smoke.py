import pytest

import topt

TOFFOLI = "qubits 3\nH q2\nCCZ q0 q1 q2\nH q2\n"


def test_parse_round_trip():
    text = topt.parse_and_emit("qubits 2\nCNOT q0 q1\nT q1\n")
    assert topt.parse_and_emit(text) == text
    assert topt.t_count(text) == 1


def test_parse_error():
    with pytest.raises(topt.ParseError):
        topt.parse_and_emit("qubits 1\nFOO q0\n")


def test_compile_t_count_and_verify():
    res = topt.compile("qubits 2\nT q0\nT q0\nCNOT q0 q1\nT q1\n")
    assert res["t_before"] == 3
    assert res["t_after"] == 1
    assert topt.verify("qubits 2\nT q0\nT q0\nCNOT q0 q1\nT q1\n", res["circuit"])


def test_toffoli_is_seven():
    res = topt.compile(TOFFOLI)
    assert res["t_after"] == 7
    assert res["h"] == 0
    assert topt.verify(TOFFOLI, res["circuit"])


@pytest.mark.parametrize("optimizer", ["re", "tool-f", "tool-nf", "todd", "rm"])
def test_optimizers_preserve_signature(optimizer):
    bits = topt.random_signature(5, 3)
    cols = topt.optimize_signature(5, bits, optimizer, 1)
    assert topt.signature_of_columns(5, cols) == bits


def test_fit_scaling():
    slope, _ = topt.fit_scaling([2, 4, 8], [4.0, 16.0, 64.0])
    assert slope == pytest.approx(2.0)
