#pragma once

#include <cstddef>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/complex_matrix.hpp"
#include "pdmt/linalg.hpp"

namespace pdmt {

// Pseudo-density matrix over an ordered list of time slots: Hermitian and
// unit-trace, with every single-slot marginal a genuine density matrix,
// but possibly indefinite across slots.
class Pdm {
  public:
    Pdm(std::vector<std::size_t> dims, HermitianOperator op);

    const std::vector<std::size_t>& dims() const { return dims_; }
    const HermitianOperator& op() const { return op_; }
    const ComplexMatrix& matrix() const { return op_.matrix(); }
    std::size_t slots() const { return dims_.size(); }

  private:
    std::vector<std::size_t> dims_;
    HermitianOperator op_;
};

// Correlation of a Pauli measurement of alpha at the input with a Pauli
// measurement of beta at the output of ch:
//   Tr[ch(P⁺ρP⁺)σ_β] − Tr[ch(P⁻ρP⁻)σ_β],  P^± = (I ± σ_α)/2.
double two_time_expectation(const DensityMatrix& rho, const QuantumChannel& ch,
                            const std::vector<std::size_t>& alpha,
                            const std::vector<std::size_t>& beta);

// (1/4^m) Σ_{α,β} ⟨σ_α,σ_β⟩ σ_α ⊗ σ_β over all Pauli strings; m ≤ 2 qubits.
Pdm pdm_from_expectations(const DensityMatrix& rho, const QuantumChannel& ch);

// ½{ρ ⊗ I, J[ch]} where J is the jamiolkowski matrix; agrees with
// pdm_from_expectations on qubit systems.
Pdm star_product(const QuantumChannel& ch, const DensityMatrix& rho);

// n-slot extension: each step applies the next channel to the newest slot
// while carrying all earlier slots along,
//   R_{1..k+1} = ½{R_{1..k} ⊗ I, J[ch_k ∘ trace-out-of-slots-1..k-1]}.
Pdm multi_time_pdm(const DensityMatrix& rho, const std::vector<QuantumChannel>& chs);

// Trace out all slots not listed in keep (0-based, strictly increasing).
Pdm marginal(const Pdm& p, const std::vector<std::size_t>& keep);

// True iff the matrix is PSD within -1e-9, i.e. also a valid quantum state.
bool is_dual_state(const Pdm& p);

namespace detail {
// Jamiolkowski matrix Σ_{ij} |i⟩⟨j| ⊗ map(|j⟩⟨i|) of the composite map that
// discards slots 0..n_slots-2 of a dims-shaped system and applies ch to the
// final slot.
ComplexMatrix jamiolkowski_of_tail_map(const std::vector<std::size_t>& dims,
                                       const QuantumChannel& ch);
}  // namespace detail

}  // namespace pdmt
