#include "pdmt/descriptor.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pdmt/entropy.hpp"

namespace pdmt {

using nlohmann::json;

ComplexMatrix json_to_matrix(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix JSON: expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw std::invalid_argument("matrix JSON: empty first row");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("matrix JSON: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                throw std::invalid_argument("matrix JSON: entries must be [re, im] number pairs");
            }
            m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ChannelDescriptor parse_channel_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw std::invalid_argument("channel descriptor: missing string field 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    ChannelDescriptor d;
    if (kind == "identity") {
        d.kind = ChannelDescriptor::Kind::identity;
        d.qubits = j.value("qubits", 1);
    } else if (kind == "unitary") {
        d.kind = ChannelDescriptor::Kind::unitary;
        if (!j.contains("matrix")) throw std::invalid_argument("unitary descriptor: missing 'matrix'");
        d.matrix = json_to_matrix(j["matrix"]);
    } else if (kind == "depolarizing") {
        d.kind = ChannelDescriptor::Kind::depolarizing;
        if (j.contains("eta")) d.eta = j["eta"].get<double>();
    } else if (kind == "decoherence") {
        d.kind = ChannelDescriptor::Kind::decoherence;
    } else if (kind == "discard_prepare") {
        d.kind = ChannelDescriptor::Kind::discard_prepare;
        if (!j.contains("state")) {
            throw std::invalid_argument("discard_prepare descriptor: missing 'state'");
        }
        d.matrix = json_to_matrix(j["state"]);
    } else if (kind == "pauli") {
        d.kind = ChannelDescriptor::Kind::pauli;
        if (!j.contains("p") || !j["p"].is_array() || j["p"].size() != 4) {
            throw std::invalid_argument("pauli descriptor: 'p' must be a 4-element array");
        }
        for (const auto& w : j["p"]) d.pauli_p.push_back(w.get<double>());
    } else if (kind == "rank2") {
        d.kind = ChannelDescriptor::Kind::rank2;
        if (!j.contains("u") || !j.contains("v")) {
            throw std::invalid_argument("rank2 descriptor: missing 'u' or 'v'");
        }
        d.u = j["u"].get<double>();
        d.v = j["v"].get<double>();
    } else if (kind == "kraus") {
        d.kind = ChannelDescriptor::Kind::kraus;
        if (!j.contains("operators") || !j["operators"].is_array() || j["operators"].empty()) {
            throw std::invalid_argument("kraus descriptor: 'operators' must be a non-empty array");
        }
        for (const auto& op : j["operators"]) d.kraus_ops.push_back(json_to_matrix(op));
    } else {
        throw std::invalid_argument("channel descriptor: unknown kind '" + kind + "'");
    }
    return d;
}

json channel_descriptor_to_json(const ChannelDescriptor& d) {
    json j;
    switch (d.kind) {
        case ChannelDescriptor::Kind::identity:
            j["kind"] = "identity";
            j["qubits"] = d.qubits;
            break;
        case ChannelDescriptor::Kind::unitary:
            j["kind"] = "unitary";
            j["matrix"] = matrix_to_json(*d.matrix);
            break;
        case ChannelDescriptor::Kind::depolarizing:
            j["kind"] = "depolarizing";
            if (d.eta) j["eta"] = *d.eta;
            break;
        case ChannelDescriptor::Kind::decoherence:
            j["kind"] = "decoherence";
            break;
        case ChannelDescriptor::Kind::discard_prepare:
            j["kind"] = "discard_prepare";
            j["state"] = matrix_to_json(*d.matrix);
            break;
        case ChannelDescriptor::Kind::pauli:
            j["kind"] = "pauli";
            j["p"] = d.pauli_p;
            break;
        case ChannelDescriptor::Kind::rank2:
            j["kind"] = "rank2";
            j["u"] = d.u;
            j["v"] = d.v;
            break;
        case ChannelDescriptor::Kind::kraus: {
            j["kind"] = "kraus";
            json ops = json::array();
            for (const auto& op : d.kraus_ops) ops.push_back(matrix_to_json(op));
            j["operators"] = std::move(ops);
            break;
        }
    }
    return j;
}

QuantumChannel ChannelDescriptor::to_channel(std::optional<double> swept_eta) const {
    switch (kind) {
        case Kind::identity:
            return QuantumChannel::identity(qubits);
        case Kind::unitary:
            return QuantumChannel::unitary(*matrix);
        case Kind::depolarizing: {
            if (eta) return QuantumChannel::depolarizing(*eta);
            if (swept_eta) return QuantumChannel::depolarizing(*swept_eta);
            throw std::invalid_argument("depolarizing descriptor: eta neither fixed nor swept");
        }
        case Kind::decoherence:
            return QuantumChannel::decoherence();
        case Kind::discard_prepare:
            return QuantumChannel::discard_prepare(DensityMatrix(*matrix));
        case Kind::pauli:
            return QuantumChannel::pauli_channel(pauli_p[0], pauli_p[1], pauli_p[2], pauli_p[3]);
        case Kind::rank2:
            return QuantumChannel::rank2_channel(u, v);
        case Kind::kraus: {
            const std::size_t dout = kraus_ops[0].rows(), din = kraus_ops[0].cols();
            return QuantumChannel(din, dout, kraus_ops);
        }
    }
    throw std::logic_error("ChannelDescriptor: unreachable kind");
}

namespace {

std::vector<double> uniform_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return g;
}

void validate_sweep_spec(const SweepSpec& s) {
    if (s.channels.size() + 1 != s.n_times) {
        throw std::invalid_argument("sweep spec: need n_times - 1 channel descriptors");
    }
    if (s.p_grid.empty() || s.eta_grid.empty()) {
        throw std::invalid_argument("sweep spec: empty grid");
    }
    for (double p : s.p_grid) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("sweep spec: p outside [0,1]");
    }
    for (double e : s.eta_grid) {
        if (e < 0.0 || e > 1.0) throw std::invalid_argument("sweep spec: eta outside [0,1]");
    }
    if (s.cut == 0 || s.cut >= s.n_times) {
        throw std::invalid_argument("sweep spec: cut must satisfy 1 <= cut < n_times");
    }
}

}  // namespace

SweepSpec parse_sweep_spec(const json& j) {
    SweepSpec s;
    if (!j.is_object()) throw std::invalid_argument("sweep spec: expected a JSON object");
    s.n_times = j.at("n_times").get<std::size_t>();
    if (!j.contains("channels") || !j["channels"].is_array()) {
        throw std::invalid_argument("sweep spec: 'channels' must be an array");
    }
    for (const auto& cd : j["channels"]) s.channels.push_back(parse_channel_descriptor(cd));
    s.p_grid = j.at("p_grid").get<std::vector<double>>();
    s.eta_grid = j.at("eta_grid").get<std::vector<double>>();
    s.cut = j.at("cut").get<std::size_t>();

    validate_sweep_spec(s);
    return s;
}

SweepSpec preset_sweep(const std::string& config, std::size_t grid_points) {
    SweepSpec s;
    s.p_grid = uniform_grid(grid_points);
    s.eta_grid = uniform_grid(grid_points);
    ChannelDescriptor depol;
    depol.kind = ChannelDescriptor::Kind::depolarizing;  // eta left swept
    ChannelDescriptor ident;
    ident.kind = ChannelDescriptor::Kind::identity;

    if (config == "a") {
        s.n_times = 3;
        s.cut = 1;
        s.channels = {depol, depol};
    } else if (config == "b") {
        s.n_times = 3;
        s.cut = 1;
        s.channels = {depol, ident};
    } else if (config == "c") {
        s.n_times = 4;
        s.cut = 2;
        s.channels = {ident, depol, ident};
    } else if (config == "d") {
        s.n_times = 4;
        s.cut = 2;
        s.channels = {depol, ident, depol};
    } else {
        throw std::invalid_argument("preset_sweep: config must be one of a, b, c, d");
    }
    return s;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate_sweep_spec(spec);
    std::vector<SweepRow> rows;
    rows.reserve(spec.p_grid.size() * spec.eta_grid.size());
    for (double p : spec.p_grid) {
        const DensityMatrix rho(ComplexMatrix{{p, 0.0}, {0.0, 1.0 - p}});
        for (double eta : spec.eta_grid) {
            std::vector<QuantumChannel> chain;
            chain.reserve(spec.channels.size());
            for (const auto& cd : spec.channels) chain.push_back(cd.to_channel(eta));
            const Pdm r = multi_time_pdm(rho, chain);
            rows.push_back({p, eta, mutual_information(r, spec.cut)});
        }
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "p,eta,mi\n";
    std::ostringstream line;
    line.precision(12);
    for (const auto& row : rows) {
        line.str("");
        line << row.p << "," << row.eta << "," << row.mi << "\n";
        out << line.str();
    }
}

json pdm_to_json(const Pdm& p) {
    json j;
    j["dims"] = p.dims();
    j["matrix"] = matrix_to_json(p.matrix());
    return j;
}

Pdm pdm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
        throw std::invalid_argument("pdm JSON: need 'dims' and 'matrix'");
    }
    const std::vector<std::size_t> dims = j["dims"].get<std::vector<std::size_t>>();
    return Pdm(dims, HermitianOperator(json_to_matrix(j["matrix"])));
}

DemoCase demo_case(const std::string& name) {
    if (name == "dual-state") {
        // Correlated-but-separable two-qubit state: positive, so it reads as
        // a spatial state and as a temporal two-slot operator.
        ComplexMatrix m(4, 4);
        m(0, 0) = 13.0 / 24.0;
        m(1, 1) = 5.0 / 24.0;
        m(2, 2) = 5.0 / 24.0;
        m(3, 3) = 1.0 / 24.0;
        m(1, 2) = -1.0 / 6.0;
        m(2, 1) = -1.0 / 6.0;
        return DemoCase{Pdm({2, 2}, HermitianOperator(m)), 1, 0.2315, 1e-3,
                        {13.0 / 24.0, 3.0 / 8.0, 1.0 / 24.0, 1.0 / 24.0}};
    }
    if (name == "qubit-two-times") {
        const DensityMatrix mixed(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
        return DemoCase{star_product(QuantumChannel::identity(), mixed), 1, 1.0, 1e-9,
                        {0.5, 0.5, 0.5, -0.5}};
    }
    if (name == "discard-prepare") {
        const DensityMatrix rho(ComplexMatrix{{0.7, 0.0}, {0.0, 0.3}});
        const DensityMatrix sig(
            ComplexMatrix{{0.4, Complex{0.1, 0.15}}, {Complex{0.1, -0.15}, 0.6}});
        return DemoCase{star_product(QuantumChannel::discard_prepare(sig), rho), 1, 0.0,
                        1e-9, {}};
    }
    if (name == "decoherence") {
        const DensityMatrix minus(ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}});
        const double hi = (1.0 + std::sqrt(2.0)) / 4.0;
        const double lo = (1.0 - std::sqrt(2.0)) / 4.0;
        return DemoCase{star_product(QuantumChannel::decoherence(), minus), 1, 0.79824,
                        1e-4, {hi, hi, lo, lo}};
    }
    throw std::invalid_argument("unknown demo case '" + name +
                                "' (two-time cases: dual-state, qubit-two-times, "
                                "discard-prepare, decoherence)");
}

}  // namespace pdmt
