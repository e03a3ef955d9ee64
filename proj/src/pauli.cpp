#include "pdmt/pauli.hpp"

#include <array>
#include <stdexcept>

namespace pdmt {

const ComplexMatrix& sigma(std::size_t k) {
    static const std::array<ComplexMatrix, 4> paulis = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (k >= 4) throw std::invalid_argument("sigma: label must be in 0..3");
    return paulis[k];
}

ComplexMatrix pauli_string(const std::vector<std::size_t>& labels) {
    if (labels.empty()) throw std::invalid_argument("pauli_string: empty label list");
    ComplexMatrix out = sigma(labels[0]);
    for (std::size_t i = 1; i < labels.size(); ++i) out = tensor(out, sigma(labels[i]));
    return out;
}

std::vector<ComplexMatrix> pauli_strings(std::size_t m) {
    if (m == 0) throw std::invalid_argument("pauli_strings: m must be positive");
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= 4;
    std::vector<ComplexMatrix> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::size_t> labels(m);
        std::size_t c = code;
        for (std::size_t i = m; i-- > 0;) {
            labels[i] = c % 4;
            c /= 4;
        }
        out.push_back(pauli_string(labels));
    }
    return out;
}

}  // namespace pdmt
