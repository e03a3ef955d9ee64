#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pdmt/complex_matrix.hpp"
#include "pdmt/linalg.hpp"

namespace pdmt {

// Completely positive trace-preserving map in Kraus form.
class QuantumChannel {
  public:
    QuantumChannel(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> kraus);

    static QuantumChannel identity(std::size_t num_qubits = 1);
    static QuantumChannel unitary(const ComplexMatrix& u);
    // eta*rho + (1-eta)*Tr[rho]*I/2, expressed as a Pauli mixture.
    static QuantumChannel depolarizing(double eta);
    // Zero all off-diagonal entries in the computational basis.
    static QuantumChannel decoherence();
    // rho -> Tr[rho]*sigma_out.
    static QuantumChannel discard_prepare(const DensityMatrix& sigma_out);
    // rho -> sum_i p_i sigma_i rho sigma_i.
    static QuantumChannel pauli_channel(double p0, double p1, double p2, double p3);
    // Two-Kraus qubit channel with Bloch translation (0,0,sin u sin v)
    // and distortion diag(cos u, cos v, cos u cos v).
    static QuantumChannel rank2_channel(double u, double v);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

    ComplexMatrix apply(const ComplexMatrix& rho) const;
    // Composition (*this) after inner: rho -> this(inner(rho)).
    QuantumChannel compose_after(const QuantumChannel& inner) const;

  private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    std::vector<ComplexMatrix> kraus_;
};

// Affine Bloch-space action of a qubit map: r -> t + T r.
struct PauliTransfer {
    std::array<double, 3> t{};
    std::array<std::array<double, 3>, 3> T{};
};

// Factorization ch = v_post ∘ n_d ∘ u_pre with diagonal middle distortion.
struct CanonicalForm {
    QuantumChannel u_pre;
    PauliTransfer n_d;
    QuantumChannel v_post;
};

// Σ_{ij} |i⟩⟨j| ⊗ ch(|j⟩⟨i|); for the identity qubit channel this is SWAP.
HermitianOperator jamiolkowski(const QuantumChannel& ch);

// Σ_{ij} |i⟩⟨j| ⊗ ch(|i⟩⟨j|); PSD for CP maps, partial trace over slot 2 = identity.
HermitianOperator choi(const QuantumChannel& ch);

// Number of Choi eigenvalues above 1e-9.
std::size_t choi_rank(const QuantumChannel& ch);

// True iff ch maps the identity to the identity within 1e-9.
bool is_unital(const QuantumChannel& ch);

// t_i = Tr[sigma_i ch(I)]/2, T_ij = Tr[sigma_i ch(sigma_j)]/2 (qubit channels only).
PauliTransfer pauli_transfer(const QuantumChannel& ch);

// rho -> (Tr[rho]*I + (t*Tr[rho] + T r)·sigma)/2 where r is the Bloch vector of rho.
ComplexMatrix apply_pauli_transfer(const PauliTransfer& n, const ComplexMatrix& rho);

// Signed-SVD factorization of a qubit channel's Bloch distortion into
// SO(3) rotations (lifted to unitaries) around a diagonal middle map.
CanonicalForm canonical_form(const QuantumChannel& ch);

namespace detail {
// SU(2) element U with U sigma_j U† = Σ_i R_ij sigma_i for R ∈ SO(3).
ComplexMatrix su2_from_so3(const std::array<std::array<double, 3>, 3>& r);
}  // namespace detail

}  // namespace pdmt
