// basis.hpp — Index conventions for the coupled qubit-oscillator problem
//
// Product basis: |j g>, |j e> interleaved as index = 2*j + (excited ? 1 : 0).
// Coupled eigenstates: n = 0 is the perturbed ground state; n = 2j+1 and
// n = 2j+2 form the j-th quasi-degenerate doublet built from |(j+1) g> and
// |j e>.

#pragma once

namespace qno {
namespace basis {

inline int prod_index(int j, bool excited) { return 2 * j + (excited ? 1 : 0); }
inline int prod_level(int idx) { return idx / 2; }
inline bool prod_excited(int idx) { return (idx % 2) != 0; }

// Doublet index of eigenstate n (>= 1); n = 2j+1 or 2j+2 -> j.
inline int doublet_of(int n) { return (n - 1) / 2; }

// Lower/upper member labels of doublet j.
inline int doublet_lower(int j) { return 2 * j + 1; }
inline int doublet_upper(int j) { return 2 * j + 2; }

// Number of eigenstates when doublets 0..j_max are retained.
inline int state_count(int j_max) { return 2 * j_max + 3; }

} // namespace basis
} // namespace qno
