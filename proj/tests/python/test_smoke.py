# Copyright (c) 2026, the infosyn authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python extension module."""

import pytest

import infosyn as isy


def test_entropy_of_the_running_example():
    tt = isy.TruthTable.from_truth_vectors(["10001111"])
    assert isy.entropy(tt, 0) == pytest.approx(0.9544, abs=1e-3)
    assert isy.conditional_entropy(tt, 0, 0) == pytest.approx(0.4056, abs=1e-3)
    assert isy.conditional_entropy(tt, 0, 1) == pytest.approx(0.9056, abs=1e-3)
    assert isy.conditional_entropy_given(tt, 0, [0, 1, 2]) == 0.0
    assert isy.output_probability(tt, 0, True) == pytest.approx(0.625)
    assert isy.network_information(tt) == pytest.approx(3 - 0.954434, abs=1e-4)


def test_gate_measures():
    assert isy.gate_info_measure(isy.and_gate()) == pytest.approx(1.19, abs=1e-2)
    assert isy.gate_info_measure(isy.not_gate()) == 0.0
    assert isy.gate_transmission(isy.and_gate(), 0) == pytest.approx(0.5)
    lib = isy.make_library("NOT,AND,OR")
    assert isy.library_capacity(lib) == pytest.approx(2.38, abs=1e-2)
    assert isy.cell_capacity(lib) == pytest.approx(1.1887, abs=1e-3)


def test_geometry_capacity_table():
    lib = isy.make_library("NOT,AND,OR")
    geom = isy.Geometry(3, 3, 3, 1, 1)
    report = isy.geometry_capacity(geom, lib)
    assert report.total_bits == pytest.approx(6.2475, abs=1e-3)
    flat = isy.geometry_capacity(geom, lib, isy.CapacityMode.flat)
    assert flat.total_bits == pytest.approx(3 * 3 * 1.19, abs=1e-3)


def test_advise_prefers_the_smaller_denser_geometry():
    candidates = [
        isy.GeometryCandidate(isy.Geometry(3, 3, 3, 4, 2), isy.make_library("NOT,EXOR")),
        isy.GeometryCandidate(isy.Geometry(2, 2, 2, 4, 2), isy.make_library("NOT,AND,OR")),
    ]
    ranked = isy.advise(isy.TargetShape(4, 2), candidates)
    assert ranked[0].geometry.levels == 2
    assert ranked[0].effective_bits == pytest.approx(3.57, abs=1e-3)
    assert ranked[1].effective_bits == pytest.approx(3.5, abs=1e-3)


def test_simulate_hand_built_half_adder():
    ha = isy.Netlist(
        2,
        [
            isy.NetGate(isy.exor_gate(), [isy.Source(0), isy.Source(1)]),
            isy.NetGate(isy.and_gate(), [isy.Source(0), isy.Source(1)]),
        ],
        [2, 3],
    )
    sim = isy.simulate(ha)
    assert sim.column_string(0) == "0110"
    assert sim.column_string(1) == "0001"
    assert isy.logical_work(ha) == pytest.approx(2.19, abs=1e-2)


def test_evolution_is_deterministic_and_verified():
    target = isy.TruthTable.from_truth_vectors(["0110", "0001"])
    geom = isy.Geometry(2, 2, 2, 2, 2)
    params = isy.SearchParams()
    params.seed = 7
    params.max_evaluations = 50000
    params.stagnation_window = 2000

    first = isy.evolve(target, geom, isy.standard_library(), params)
    second = isy.evolve(target, geom, isy.standard_library(), params)
    assert isy.emit_netlist_json(first.best) == isy.emit_netlist_json(second.best)
    assert first.best_fitness.functionality == 1.0
    assert isy.simulate(first.best) == target

    metrics = isy.compute_metrics(first.best, first.history, target)
    assert metrics.information_potential_bits is not None
    assert metrics.vitality == pytest.approx(
        metrics.information_potential_bits / isy.joint_output_entropy(target)
    )


def test_netlist_json_and_pla_round_trips():
    pla = "\n".join(
        [".i 2", ".o 2", "00 00", "01 10", "10 10", "11 01", ".e", ""]
    )
    target = isy.parse_pla(pla)
    assert target.column_string(0) == "0110"

    text = isy.emit_truth_vectors(target)
    assert isy.parse_truth_vectors(text) == target

    lib = isy.standard_library()
    rng = isy.Rng(3)
    nl = isy.decode(isy.random_genotype(isy.Geometry(2, 2, 2, 2, 2), lib, 11))
    back = isy.parse_netlist_json(isy.emit_netlist_json(nl), lib)
    assert back == nl


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        isy.TruthTable(0, 1)
    with pytest.raises(RuntimeError):
        isy.parse_pla(".i 1\n.o 1\n- 1\n")
    with pytest.raises(ValueError):
        isy.vitality(1.0, isy.TruthTable(2, 1))
