#pragma once

#include "laumon/bialgebra.hpp"

namespace laumon {

// Relations are checked mode-wise on Upsilon-images: "the relation holds"
// means its image vanishes in A^+ (Theorem iso), never as a formal
// distribution identity.

// (z - w q^{c_ij}) e_i(z) e_j(w) = (z q^{c_ij} - w) e_j(w) e_i(z), mode (a, b);
// mutate_c replaces c_ij (for the mutation oracle).
bool check_quadratic(int n, int i, int j, int a, int b, bool exact = false, int trials = 10,
                     const int *mutate_c = nullptr);

// Cubic Serre relation, modes (a, a2) on e_i and b on e_{i±sign}; the
// middle coefficient q + q^{-1} can be mutated for the oracle.
bool check_serre(int n, int i, int sign, int a, int a2, int b, bool exact = false,
                 int trials = 10, const Scalar *mutate_coeff = nullptr);

ShuffleElement root_vector(int n, int i, int j);       // P_[i;j]
ShuffleElement antipode_partner(int n, int i, int j);  // tau(P_[i;j])

// Delta_0(P_[i;j]) = sum_k (psi_k / psi_{j+1}) P_[i;k-1] (x) P_[k;j]
bool check_root_coproduct(int n, int i, int j);
// Delta_0(tau P_[i;j]) = sum_k (psi_i / psi_k) tau(P_[k;j]) (x) tau(P_[i;k-1])
bool check_antipode_coproduct(int n, int i, int j);
// (tau P, tau P) = q - q^{-1}, via a word expansion of tau P
bool check_antipode_pairing(int n, int i, int j, int mode_window = 3);

// g-element characterization (Prop dety): Delta_0-level identity and the
// pairing values (g_[i;j], e_[i;j]).
bool check_g_coproduct(int n, const DegreeVector &k);
bool check_g_pairing(int n, int i, int j);
Scalar g_pairing_expected(int n, int i, int j);

// RTT relation R T_1 T_2 = T_2 T_1 R on an s-period window of entries;
// zero_offdiag drops the (q - q^{-1}) part of R (mutation oracle).
bool check_rtt_consistency(int n, int s, bool zero_offdiag = false, int max_vars = 4);

}  // namespace laumon
