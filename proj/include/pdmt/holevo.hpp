#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pdmt/channel.hpp"
#include "pdmt/entropy.hpp"
#include "pdmt/linalg.hpp"
#include "pdmt/pdm.hpp"
#include "pdmt/theorems.hpp"

namespace pdmt {

// Classical-quantum source: state states[i] is emitted with probability
// probs[i]; all states share one dimension.
struct CqEnsemble {
    ProbabilityVector probs;
    std::vector<DensityMatrix> states;

    CqEnsemble(ProbabilityVector p, std::vector<DensityMatrix> s);
    std::size_t size() const { return states.size(); }
    std::size_t state_dim() const { return states.empty() ? 0 : states[0].dim(); }
    // Σ p_i rho_i.
    DensityMatrix average_state() const;
};

// Measurement with effects PSD within -1e-9 summing to the identity within 1e-9.
struct Povm {
    std::vector<HermitianOperator> effects;

    explicit Povm(std::vector<HermitianOperator> e);
    std::size_t size() const { return effects.size(); }
    std::size_t dim() const { return effects.empty() ? 0 : effects[0].dim(); }
};

// Joint distribution over a label i and two successive outcomes (j, k);
// nonnegative, sums to 1 within 1e-10.
class JointDistribution3 {
  public:
    JointDistribution3(std::size_t ni, std::size_t nj, std::size_t nk,
                       std::vector<double> p_ijk);
    double operator()(std::size_t i, std::size_t j, std::size_t k) const;
    std::size_t ni() const { return ni_; }
    std::size_t nj() const { return nj_; }
    std::size_t nk() const { return nk_; }

  private:
    std::size_t ni_, nj_, nk_;
    std::vector<double> p_;  // flat, index (i*nj + j)*nk + k
};

// Three-slot operator Σ_i p_i |i⟩⟨i| ⊗ (ch ⋆ rho_i): a classical label slot
// of dimension k followed by the input and output slots of the channel.
Pdm cq_pdm(const CqEnsemble& ens, const QuantumChannel& ch);

// Left: mutual information of cq_pdm across the cut after the label slot.
// Right: S(Σ p_i R_i) − Σ p_i S(R_i) over the two-slot blocks R_i = ch ⋆ rho_i.
std::pair<double, double> theorem3_mi(const CqEnsemble& ens, const QuantumChannel& ch);

// S(Σ p_i rho_i) − Σ p_i S(rho_i).
double holevo_chi(const CqEnsemble& ens);

// p_ijk = p_i · Tr[U √M_j rho_i √M_j U† N_k]: measure m, evolve by the
// unitary u, measure n.
JointDistribution3 sequential_distribution(const CqEnsemble& ens, const Povm& m,
                                           const Povm& n, const QuantumChannel& u);

// H(X) + H(Y1,Y2) − H(X,Y1,Y2) in bits for the (i | j,k) split.
double classical_mi_x_y1y2(const JointDistribution3& d);

// Asserts the two-measurement classical mutual information never exceeds the
// ensemble's Holevo quantity, nor (for unitary intermediate evolution) the
// temporal mutual information across the label cut.
VerificationReport check_sequential_holevo(const CqEnsemble& ens, const Povm& m,
                                           const Povm& n, const QuantumChannel& u);

namespace detail {
// PSD square root with eigenvalues clamped at -1e-9 -> 0.
ComplexMatrix psd_sqrt(const HermitianOperator& m);
}  // namespace detail

}  // namespace pdmt
