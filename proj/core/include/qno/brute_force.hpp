// brute_force.hpp — Exact-diagonalization cross-check for the perturbative spectrum

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qno/params.hpp"
#include "qno/vanvleck.hpp"

namespace qno {

// How the quartic term enters the diagonalized Hamiltonian.
//   exact:       Omega*B^dag*B + (alpha/4)(B+B^dag)^4 with exact ladder
//                matrices in the linear-oscillator basis; the coupling uses
//                the bare ladder B+B^dag.
//   first_order: the oscillator part is replaced by its first-order
//                spectrum diag(Omega*j + 1.5*alpha*j*(j+1)) and the coupling
//                uses the first-order perturbed ladder elements, i.e. the
//                same matrix the doublet expansion starts from, kept to all
//                orders in g.
enum class QuarticMode { exact, first_order };

struct BruteForceResult {
    SystemParams params;
    QuarticMode mode = QuarticMode::exact;
    int n_trunc = 0;                 // oscillator levels in the basis
    Eigen::VectorXd energies;        // ascending
    Eigen::MatrixXd states;          // column k belongs to energies[k]
    Eigen::MatrixXd position;        // <a|(B+B^dag)|b> in the eigenbasis
};

// Dense symmetric diagonalization of the coupled Hamiltonian with n_trunc
// oscillator levels (basis dimension 2*n_trunc).  Requires n_trunc >= 12.
BruteForceResult brute_force_spectrum(const SystemParams& p, int n_trunc,
                                      QuarticMode mode = QuarticMode::exact);

// Doubles n_trunc until the lowest `levels` eigenvalues move by < tol,
// then returns the converged result.
BruteForceResult converged_brute_force(const SystemParams& p, int n_trunc,
                                       int levels, double tol = 1e-9,
                                       QuarticMode mode = QuarticMode::exact);

// Label assignment: oracle eigenvector for each doublet-labelled state,
// chosen by maximum overlap.  overlap2[n] = |<oracle|n>|^2 for the matched
// column.  Throws errc::degenerate_match_ambiguity when the two best
// overlaps for some state differ by < 1e-6.
struct MatchedSpectrum {
    std::vector<int> oracle_index;   // oracle column matched to label n
    std::vector<double> energies;    // oracle energies in label order
    std::vector<double> overlap2;
    Eigen::MatrixXd position;        // oracle y_nm reordered to label order
};

MatchedSpectrum match_labels(const BruteForceResult& oracle, const EnergySpectrum& vv);

} // namespace qno
