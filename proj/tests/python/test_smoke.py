# Copyright 2026 The amegraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import math
import random

import pytest

import amegraph


def c4():
    return amegraph.Graph(2, 4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)])


def test_weighted_square_is_ame_for_odd_primes():
    quad = amegraph.Graph.builtin("quad_weighted")
    assert quad.p == 3 and quad.n == 4
    for p in (3, 5, 7, 11):
        assert amegraph.is_ame(quad.with_prime(p))


def test_c4_report():
    report = amegraph.ame_report(c4())
    assert not report.is_ame
    assert report.witness == [0, 3]
    assert amegraph.cut_edits(c4(), [0, 3]) == 1
    assert str(report).startswith("AME no\nWITNESS 1,4\n")


def test_text_round_trip():
    g = amegraph.Graph.builtin("ame6_2")
    assert amegraph.Graph.parse(g.to_text()) == g
    assert g.to_circuit().splitlines()[0] == "PREP_ALL |0bar>"


def test_rank_matches_dense_entropy():
    g = amegraph.Graph.builtin("c5").with_prime(3)
    for k in ([0], [0, 2], [1, 2, 4]):
        assert math.isclose(amegraph.dense_cut_entropy(g, k), amegraph.cut_edits(g, k), abs_tol=1e-9)


def test_rewrites_preserve_cut_rank():
    g = amegraph.Graph.builtin("quad_weighted").with_prime(5)
    h = amegraph.op_star(amegraph.op_mult(g, 1, 3), 0, 2)
    assert amegraph.cut_edits(h, [0, 1]) == amegraph.cut_edits(g, [0, 1])


def test_errors_carry_codes():
    with pytest.raises(amegraph.AmegraphError) as info:
        amegraph.Graph(2, 3, [(0, 0, 1)])
    assert info.value.code == "SelfLoop"
    with pytest.raises(amegraph.AmegraphError):
        amegraph.search(5, 2, mode="random")


def test_exhaustive_four_qubits():
    r = amegraph.search(4, 2)
    assert r.examined == 64
    assert r.witnesses == []
    assert r.stats().startswith("examined=64 pruned=0 witnesses=0")


def test_random_search_finds_six_qubit_witness():
    r = amegraph.search(6, 2, mode="random", seed=1)
    assert len(r.witnesses) == 1
    assert amegraph.is_ame(r.witnesses[0])


def test_code_to_graph():
    assert amegraph.is_ame(amegraph.code_to_graph("hamming433"))
    assert amegraph.code_to_graph("grs:7,6,3").n == 6


def test_threshold_sharing_recovers_secret():
    rng = random.Random(3)
    amps = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3)]
    norm = math.sqrt(sum(abs(a) ** 2 for a in amps))
    secret = [a / norm for a in amps]
    quad = amegraph.Graph.builtin("quad_weighted")
    assert amegraph.run_threshold(quad, secret, [1, 2], g=1, h=2) == pytest.approx(1.0, abs=1e-9)


def test_ramp_sharing_recovers_two_qubits():
    secret = [cmath.exp(1j * t) / 2 for t in (0.1, 0.7, 1.9, 2.3)]
    g = amegraph.Graph.builtin("ame6_2")
    assert amegraph.run_ramp(g, secret, [2, 3, 4], [0, 1]) == pytest.approx(1.0, abs=1e-9)


def test_composite():
    ok, text = amegraph.composite_report(4, 4)
    assert ok
    assert text.startswith("COMPOSITE n=4 d=4 factors=2^2")
    assert amegraph.factorize(12) == [2, 2, 3]


def test_acceptance_criterion_entry_point():
    ok, line = amegraph.run_criterion(5)
    assert ok
    assert line == "PASS 5 prime-discriminator: rank_mod5=2 rank_mod7=1"
