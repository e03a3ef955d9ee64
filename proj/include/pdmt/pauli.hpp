#pragma once

#include <cstddef>
#include <vector>

#include "pdmt/complex_matrix.hpp"

namespace pdmt {

// Single-qubit Pauli matrix: sigma(0)=I, sigma(1)=X, sigma(2)=Y, sigma(3)=Z.
const ComplexMatrix& sigma(std::size_t k);

// Tensor product sigma(labels[0]) ⊗ sigma(labels[1]) ⊗ ... (slot 0 most significant).
ComplexMatrix pauli_string(const std::vector<std::size_t>& labels);

// All 4^m Pauli strings on m qubits in lexicographic label order
// (0..0, 0..1, ..., 3..3).
std::vector<ComplexMatrix> pauli_strings(std::size_t m);

}  // namespace pdmt
