#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdmt/channel.hpp"
#include "pdmt/complex_matrix.hpp"
#include "pdmt/pdm.hpp"

namespace pdmt {

// JSON-facing channel description. Matrices are row-major nested arrays with
// complex entries as [re, im] pairs.
struct ChannelDescriptor {
    enum class Kind { identity, unitary, depolarizing, decoherence, discard_prepare, pauli, rank2, kraus };

    Kind kind = Kind::identity;
    std::size_t qubits = 1;                  // identity
    std::optional<double> eta;               // depolarizing; empty = swept
    std::optional<ComplexMatrix> matrix;     // unitary / discard_prepare state
    std::vector<double> pauli_p;             // pauli
    double u = 0.0, v = 0.0;                 // rank2
    std::vector<ComplexMatrix> kraus_ops;    // kraus

    // Build the channel; swept_eta fills a depolarizing descriptor whose eta
    // was omitted. Throws std::invalid_argument on inconsistency.
    QuantumChannel to_channel(std::optional<double> swept_eta = std::nullopt) const;
};

// Grid description for mutual-information surfaces over the initial state
// diag(p, 1-p) and the depolarizing strength eta.
struct SweepSpec {
    std::size_t n_times = 3;
    std::vector<ChannelDescriptor> channels;  // n_times - 1 entries
    std::vector<double> p_grid;
    std::vector<double> eta_grid;
    std::size_t cut = 1;
};

struct SweepRow {
    double p, eta, mi;
};

ComplexMatrix json_to_matrix(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

ChannelDescriptor parse_channel_descriptor(const nlohmann::json& j);
nlohmann::json channel_descriptor_to_json(const ChannelDescriptor& d);

SweepSpec parse_sweep_spec(const nlohmann::json& j);

// The four stock surface configurations:
//   a: 3 slots, both links depolarizing, cut 1
//   b: 3 slots, depolarizing then identity, cut 1
//   c: 4 slots, identity/depolarizing/identity, cut 2
//   d: 4 slots, depolarizing/identity/depolarizing, cut 2
// with uniform grid_points×grid_points grids on [0,1]².
SweepSpec preset_sweep(const std::string& config, std::size_t grid_points = 51);

// Mutual information of the chain PDM with initial state diag(p, 1-p) at
// every (p, eta) grid point, in row-major grid order (p outer, eta inner).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

// Full PDM serialization: dims plus row-major matrix.
nlohmann::json pdm_to_json(const Pdm& p);
Pdm pdm_from_json(const nlohmann::json& j);

// A named two-time demonstration case with its reference value.
struct DemoCase {
    Pdm pdm;
    std::size_t cut;
    double reference_mi;
    double tolerance;                         // window for |I - reference_mi|
    std::vector<double> reference_spectrum;   // empty when not pinned
};

// Names: dual-state, qubit-two-times, discard-prepare, decoherence.
// (The multi-time-a..d cases are grid sweeps; see preset_sweep.)
DemoCase demo_case(const std::string& name);

}  // namespace pdmt
