/*
 * Copyright (c) 2026, the infosyn authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include <infosyn/genotype.hpp>
#include <infosyn/geometry.hpp>
#include <infosyn/io.hpp>
#include <infosyn/metrics.hpp>
#include <infosyn/netlist.hpp>
#include <infosyn/rng.hpp>
#include <infosyn/search.hpp>
#include <infosyn/truth_table.hpp>

namespace py = pybind11;
using namespace infosyn;

PYBIND11_MODULE( _core, m )
{
  m.doc() = "Information measures of Boolean functions, gate libraries and circuit "
            "geometries, and geometry-driven evolutionary gate-level synthesis.";

  // -- truth tables and entropy ------------------------------------------
  py::class_<TruthTable>( m, "TruthTable" )
      .def( py::init<uint32_t, uint32_t>(), py::arg( "n_inputs" ), py::arg( "n_outputs" ) )
      .def_static( "from_truth_vectors", &TruthTable::from_truth_vectors, py::arg( "columns" ),
                   "Build from one truth-vector string per output; character j is row j "
                   "and the first input is the most significant bit of the row index." )
      .def_property_readonly( "n_inputs", &TruthTable::n_inputs )
      .def_property_readonly( "n_outputs", &TruthTable::n_outputs )
      .def_property_readonly( "n_rows", &TruthTable::n_rows )
      .def( "get", &TruthTable::get, py::arg( "output" ), py::arg( "row" ) )
      .def( "set", &TruthTable::set, py::arg( "output" ), py::arg( "row" ), py::arg( "value" ) )
      .def( "ones_count", &TruthTable::ones_count, py::arg( "output" ) )
      .def( "column_string", &TruthTable::column_string, py::arg( "output" ) )
      .def( py::self == py::self )
      .def( "__repr__", []( TruthTable const& tt ) {
        return "<TruthTable " + std::to_string( tt.n_inputs() ) + " inputs, " + std::to_string( tt.n_outputs() ) + " outputs>";
      } );

  py::class_<Distribution>( m, "Distribution" )
      .def_readonly( "labels", &Distribution::labels )
      .def_readonly( "probabilities", &Distribution::probabilities );

  m.def( "binary_entropy", &binary_entropy, py::arg( "p" ) );
  m.def( "output_probability", &output_probability, py::arg( "tt" ), py::arg( "output" ), py::arg( "value" ) );
  m.def( "output_distribution", &output_distribution, py::arg( "tt" ), py::arg( "output" ) );
  m.def( "entropy", py::overload_cast<TruthTable const&, uint32_t>( &entropy ), py::arg( "tt" ), py::arg( "output" ) );
  m.def( "input_entropy", &input_entropy, py::arg( "n_inputs" ) );
  m.def( "conditional_entropy", py::overload_cast<TruthTable const&, uint32_t, uint32_t>( &conditional_entropy ),
         py::arg( "tt" ), py::arg( "output" ), py::arg( "var" ) );
  m.def(
      "conditional_entropy_given",
      []( TruthTable const& tt, uint32_t output, std::vector<uint32_t> const& vars ) {
        return conditional_entropy( tt, output, std::span<uint32_t const>( vars ) );
      },
      py::arg( "tt" ), py::arg( "output" ), py::arg( "vars" ) );
  m.def( "joint_output_entropy", &joint_output_entropy, py::arg( "tt" ) );

  // -- gates and libraries -----------------------------------------------
  py::class_<GateKind>( m, "GateKind" )
      .def_static( "from_truth_vector", &GateKind::from_truth_vector, py::arg( "name" ), py::arg( "bits" ) )
      .def_readonly( "name", &GateKind::name )
      .def_readonly( "arity", &GateKind::arity )
      .def( "truth_vector", &GateKind::truth_vector )
      .def( "output", &GateKind::output, py::arg( "row" ) )
      .def( py::self == py::self )
      .def( "__repr__", []( GateKind const& g ) { return "<GateKind " + g.name + "=[" + g.truth_vector() + "]>"; } );

  m.def( "not_gate", &not_gate );
  m.def( "and_gate", &and_gate );
  m.def( "or_gate", &or_gate );
  m.def( "exor_gate", &exor_gate );

  py::class_<GateLibrary>( m, "GateLibrary" )
      .def( py::init( []( std::vector<GateKind> gates, bool allow_inverted_inputs ) {
              GateLibrary lib{ std::move( gates ), allow_inverted_inputs };
              validate_library( lib );
              return lib;
            } ),
            py::arg( "gates" ), py::arg( "allow_inverted_inputs" ) = true )
      .def_readonly( "gates", &GateLibrary::gates )
      .def_readonly( "allow_inverted_inputs", &GateLibrary::allow_inverted_inputs )
      .def( "max_arity", &GateLibrary::max_arity )
      .def( "__len__", &GateLibrary::size )
      .def( py::self == py::self );

  m.def( "standard_library", &standard_library );
  m.def( "gate_output_entropy", &gate_output_entropy, py::arg( "gate" ) );
  m.def( "gate_info_measure", &gate_info_measure, py::arg( "gate" ) );
  m.def( "gate_transmission", &gate_transmission, py::arg( "gate" ), py::arg( "input" ) );

  // -- geometry and capacity ----------------------------------------------
  py::class_<Geometry>( m, "Geometry" )
      .def( py::init( &Geometry::of ), py::arg( "levels" ), py::arg( "gates_per_level" ),
            py::arg( "levels_back" ), py::arg( "n_inputs" ), py::arg( "n_outputs" ) )
      .def_readonly( "levels", &Geometry::levels )
      .def_readonly( "gates_per_level", &Geometry::gates_per_level )
      .def_readonly( "levels_back", &Geometry::levels_back )
      .def_readonly( "n_inputs", &Geometry::n_inputs )
      .def_readonly( "n_outputs", &Geometry::n_outputs )
      .def_property_readonly( "total_cells", &Geometry::total_cells )
      .def( py::self == py::self )
      .def( "__repr__", []( Geometry const& g ) {
        return "<Geometry " + std::to_string( g.levels ) + "x" + std::to_string( g.gates_per_level ) + " lb=" + std::to_string( g.levels_back ) + ">";
      } );

  py::enum_<CapacityMode>( m, "CapacityMode" )
      .value( "attenuated", CapacityMode::attenuated )
      .value( "flat", CapacityMode::flat );

  py::class_<CapacityReport>( m, "CapacityReport" )
      .def_readonly( "geometry", &CapacityReport::geometry )
      .def_readonly( "mode", &CapacityReport::mode )
      .def_readonly( "library_capacity_bits", &CapacityReport::library_capacity_bits )
      .def_readonly( "cell_capacity_bits", &CapacityReport::cell_capacity_bits )
      .def_readonly( "per_level_cell_bits", &CapacityReport::per_level_cell_bits )
      .def_readonly( "total_bits", &CapacityReport::total_bits );

  m.def( "library_capacity", &library_capacity, py::arg( "library" ) );
  m.def( "cell_capacity", &cell_capacity, py::arg( "library" ) );
  m.def( "tabulated_cell_capacity", &tabulated_cell_capacity, py::arg( "library" ) );
  m.def( "geometry_capacity", &geometry_capacity, py::arg( "geometry" ), py::arg( "library" ),
         py::arg( "mode" ) = CapacityMode::attenuated );

  py::class_<CellCoord>( m, "CellCoord" )
      .def( py::init<uint32_t, uint32_t>(), py::arg( "level" ), py::arg( "pos" ) )
      .def_readonly( "level", &CellCoord::level )
      .def_readonly( "pos", &CellCoord::pos );

  m.def(
      "effective_capacity",
      []( Geometry const& geom, GateLibrary const& lib, std::vector<CellCoord> const& used ) {
        return effective_capacity( geom, lib, std::span<CellCoord const>( used ) );
      },
      py::arg( "geometry" ), py::arg( "library" ), py::arg( "used_cells" ) );

  py::class_<TargetShape>( m, "TargetShape" )
      .def( py::init<uint32_t, uint32_t>(), py::arg( "n_inputs" ), py::arg( "n_outputs" ) )
      .def_readonly( "n_inputs", &TargetShape::n_inputs )
      .def_readonly( "n_outputs", &TargetShape::n_outputs );

  py::class_<GeometryCandidate>( m, "GeometryCandidate" )
      .def( py::init( []( Geometry geom, GateLibrary lib ) { return GeometryCandidate{ geom, std::move( lib ) }; } ),
            py::arg( "geometry" ), py::arg( "library" ) )
      .def_readonly( "geometry", &GeometryCandidate::geometry )
      .def_readonly( "library", &GeometryCandidate::library );

  py::class_<RankedCandidate>( m, "RankedCandidate" )
      .def_readonly( "rank", &RankedCandidate::rank )
      .def_readonly( "geometry", &RankedCandidate::geometry )
      .def_readonly( "library", &RankedCandidate::library )
      .def_readonly( "report", &RankedCandidate::report )
      .def_readonly( "effective_bits", &RankedCandidate::effective_bits )
      .def_readonly( "utilized_per_level", &RankedCandidate::utilized_per_level )
      .def_readonly( "feasible", &RankedCandidate::feasible );

  m.def(
      "advise",
      []( TargetShape const& shape, std::vector<GeometryCandidate> const& candidates ) {
        return advise( shape, std::span<GeometryCandidate const>( candidates ) );
      },
      py::arg( "target" ), py::arg( "candidates" ) );

  // -- netlists, simulation, fitness ---------------------------------------
  py::class_<Source>( m, "Source" )
      .def( py::init<uint32_t, bool>(), py::arg( "id" ), py::arg( "inverted" ) = false )
      .def_readonly( "id", &Source::id )
      .def_readonly( "inverted", &Source::inverted );

  py::class_<NetGate>( m, "NetGate" )
      .def( py::init( []( GateKind kind, std::vector<Source> sources ) {
              return NetGate{ std::move( kind ), std::move( sources ) };
            } ),
            py::arg( "kind" ), py::arg( "sources" ) )
      .def_readonly( "kind", &NetGate::kind )
      .def_readonly( "sources", &NetGate::sources );

  py::class_<Netlist>( m, "Netlist" )
      .def( py::init( []( uint32_t n_inputs, std::vector<NetGate> gates, std::vector<uint32_t> outputs ) {
              Netlist nl{ n_inputs, std::move( gates ), std::move( outputs ) };
              validate_netlist( nl );
              return nl;
            } ),
            py::arg( "n_inputs" ), py::arg( "gates" ), py::arg( "outputs" ) )
      .def_readonly( "n_inputs", &Netlist::n_inputs )
      .def_readonly( "gates", &Netlist::gates )
      .def_readonly( "outputs", &Netlist::outputs )
      .def_property_readonly( "active_gate_count", &Netlist::active_gate_count )
      .def( py::self == py::self );

  m.def( "simulate", &simulate, py::arg( "netlist" ) );

  py::class_<Fitness>( m, "Fitness" )
      .def_readonly( "functionality", &Fitness::functionality )
      .def_readonly( "active_gates", &Fitness::active_gates )
      .def( "__repr__", []( Fitness const& f ) {
        return "<Fitness functionality=" + std::to_string( f.functionality ) + " gates=" + std::to_string( f.active_gates ) + ">";
      } );

  m.def( "fitness", &fitness, py::arg( "netlist" ), py::arg( "target" ) );
  m.def( "fitness_info", &fitness_info, py::arg( "netlist" ), py::arg( "target" ) );
  m.def( "offspring_replaces", &offspring_replaces, py::arg( "offspring" ), py::arg( "incumbent" ) );

  // -- genotypes and evolution ---------------------------------------------
  py::class_<Rng>( m, "Rng" )
      .def( py::init<uint64_t>(), py::arg( "seed" ) )
      .def( "below", &Rng::below, py::arg( "bound" ) )
      .def( "unit_real", &Rng::unit_real )
      .def( "bernoulli", &Rng::bernoulli, py::arg( "p" ) );

  py::class_<Genotype>( m, "Genotype" )
      .def_property_readonly( "geometry", &Genotype::geometry )
      .def_property_readonly( "library", []( Genotype const& g ) { return g.library(); } )
      .def_property_readonly( "genes", &Genotype::genes )
      .def( "__eq__", []( Genotype const& a, Genotype const& b ) { return a == b; } );

  m.def(
      "random_genotype",
      []( Geometry const& geom, GateLibrary const& lib, uint64_t seed ) {
        return random_genotype( geom, std::make_shared<GateLibrary const>( lib ), seed );
      },
      py::arg( "geometry" ), py::arg( "library" ), py::arg( "seed" ) );
  m.def(
      "random_genotype",
      []( Geometry const& geom, GateLibrary const& lib, Rng& rng ) {
        return random_genotype( geom, std::make_shared<GateLibrary const>( lib ), rng );
      },
      py::arg( "geometry" ), py::arg( "library" ), py::arg( "rng" ) );
  m.def( "mutate", &mutate, py::arg( "genotype" ), py::arg( "rate" ), py::arg( "rng" ) );
  m.def( "crossover", &crossover, py::arg( "a" ), py::arg( "b" ), py::arg( "rng" ) );
  m.def( "grow_one_level", &grow_one_level, py::arg( "genotype" ), py::arg( "rng" ) );
  m.def( "shrink_one_level", &shrink_one_level, py::arg( "genotype" ) );
  m.def( "resize_mutation", &resize_mutation, py::arg( "genotype" ), py::arg( "rng" ),
         py::arg( "rate" ) = 0.02, py::arg( "max_levels" ) = 0 );
  m.def( "decode", &decode, py::arg( "genotype" ) );
  m.def( "is_valid", &is_valid, py::arg( "genotype" ) );

  py::class_<SearchParams>( m, "SearchParams" )
      .def( py::init<>() )
      .def_readwrite( "seed", &SearchParams::seed )
      .def_readwrite( "lambda_", &SearchParams::lambda )
      .def_readwrite( "mutation_rate", &SearchParams::mutation_rate )
      .def_readwrite( "max_evaluations", &SearchParams::max_evaluations )
      .def_readwrite( "stagnation_window", &SearchParams::stagnation_window )
      .def_readwrite( "use_crossover", &SearchParams::use_crossover )
      .def_readwrite( "use_resize", &SearchParams::use_resize )
      .def_readwrite( "resize_rate", &SearchParams::resize_rate )
      .def_readwrite( "max_levels", &SearchParams::max_levels );

  py::class_<HistoryEntry>( m, "HistoryEntry" )
      .def_readonly( "generation", &HistoryEntry::generation )
      .def_readonly( "evaluations", &HistoryEntry::evaluations )
      .def_readonly( "functionality", &HistoryEntry::functionality )
      .def_readonly( "active_gates", &HistoryEntry::active_gates )
      .def_readonly( "output_entropy_bits", &HistoryEntry::output_entropy_bits )
      .def_readonly( "logical_work_bits", &HistoryEntry::logical_work_bits );

  py::class_<SearchResult>( m, "SearchResult" )
      .def_readonly( "best", &SearchResult::best )
      .def_readonly( "best_fitness", &SearchResult::best_fitness )
      .def_readonly( "best_genotype", &SearchResult::best_genotype )
      .def_readonly( "history", &SearchResult::history )
      .def_readonly( "evaluations", &SearchResult::evaluations )
      .def_readonly( "evaluations_to_functional", &SearchResult::evaluations_to_functional );

  m.def( "evolve", &evolve, py::arg( "target" ), py::arg( "geometry" ), py::arg( "library" ), py::arg( "params" ) );

  // -- run metrics -----------------------------------------------------------
  py::class_<NetworkMetrics>( m, "NetworkMetrics" )
      .def_readonly( "network_information_bits", &NetworkMetrics::network_information_bits )
      .def_readonly( "logical_work_bits", &NetworkMetrics::logical_work_bits )
      .def_readonly( "information_potential_bits", &NetworkMetrics::information_potential_bits )
      .def_readonly( "vitality", &NetworkMetrics::vitality );

  py::class_<HtPoint>( m, "HtPoint" )
      .def_readonly( "generation", &HtPoint::generation )
      .def_readonly( "h_best", &HtPoint::h_best )
      .def_readonly( "t_running", &HtPoint::t_running );

  m.def( "network_information", &network_information, py::arg( "target" ) );
  m.def( "logical_work", &logical_work, py::arg( "netlist" ) );
  m.def(
      "information_potential",
      []( std::vector<HistoryEntry> const& history ) {
        return information_potential( std::span<HistoryEntry const>( history ) );
      },
      py::arg( "history" ) );
  m.def( "vitality", &vitality, py::arg( "potential_bits" ), py::arg( "target" ) );
  m.def(
      "compute_metrics",
      []( Netlist const& best, std::vector<HistoryEntry> const& history, TruthTable const& target ) {
        return compute_metrics( best, std::span<HistoryEntry const>( history ), target );
      },
      py::arg( "best" ), py::arg( "history" ), py::arg( "target" ) );
  m.def(
      "ht_trace",
      []( std::vector<HistoryEntry> const& history, TruthTable const& target ) {
        return ht_trace( std::span<HistoryEntry const>( history ), target );
      },
      py::arg( "history" ), py::arg( "target" ) );

  // -- file formats -----------------------------------------------------------
  m.def( "parse_pla", []( std::string const& text ) { return parse_pla( text ); }, py::arg( "text" ) );
  m.def( "parse_truth_vectors", []( std::string const& text ) { return parse_truth_vectors( text ); }, py::arg( "text" ) );
  m.def( "emit_truth_vectors", &emit_truth_vectors, py::arg( "tt" ) );
  m.def( "parse_function", []( std::string const& text ) { return parse_function( text ); }, py::arg( "text" ) );
  m.def( "emit_netlist_json", &emit_netlist_json, py::arg( "netlist" ) );
  m.def( "parse_netlist_json", []( std::string const& text, GateLibrary const& lib ) { return parse_netlist_json( text, lib ); },
         py::arg( "text" ), py::arg( "library" ) );
  m.def( "parse_gate_definitions", []( std::string const& text ) { return parse_gate_definitions( text ); }, py::arg( "text" ) );
  m.def(
      "make_library",
      []( std::string const& names_csv, std::vector<GateKind> const& extra, bool allow_inverted_inputs ) {
        return make_library( names_csv, std::span<GateKind const>( extra ), allow_inverted_inputs );
      },
      py::arg( "names_csv" ) = "", py::arg( "extra" ) = std::vector<GateKind>{}, py::arg( "allow_inverted_inputs" ) = true );
  m.def(
      "history_csv",
      []( std::vector<HistoryEntry> const& history, TruthTable const& target ) {
        return history_csv( std::span<HistoryEntry const>( history ), target );
      },
      py::arg( "history" ), py::arg( "target" ) );

#ifdef INFOSYN_VERSION
  m.attr( "__version__" ) = INFOSYN_VERSION;
#else
  m.attr( "__version__" ) = "0.1.0";
#endif
}
