#pragma once

#include <optional>

#include "laumon/extended.hpp"

namespace laumon {

// Word-combination carrier for the first pairing slot: the pairing is
// defined on products of degree-one generators; arbitrary first arguments
// must be supplied as word combinations by the caller.
struct WordTerm {
    Scalar c;
    PsiMono psi;
    GenWord w;
};

struct WordExpr {
    int n = 1;
    std::vector<WordTerm> terms;

    static WordExpr word(int n, const GenWord &w) { return {n, {{Rat(1), PsiMono::zero(n), w}}}; }
    static WordExpr psi(int n, const PsiMono &m) { return {n, {{Rat(1), m, GenWord{}}}}; }
};

DegreeVector word_degree_vector(int n, const GenWord &w);
int word_degree(const GenWord &w);

// The bialgebra pairing (eqn:copy), calibrated with the du/(2 pi i u)
// measure in the region |u_1| << ... << |u_k|, so that
// (z_i^c, z_i^c) = q - q^{-1}.  A startup self-test asserts the calibration.
Scalar pair(const WordExpr &A, const ExtendedElement &B);
Scalar pair_word_shuffle(const GenWord &w, const ShuffleElement &B);

// (word, psi^beta phi^B Q) -- needed for pairing against coproduct
// components, which carry phi-dressing on the left tensor factor.
Scalar pair_word_ext(int n, const GenWord &w, const PsiMono &beta, const PhiMono &B,
                     const ShuffleElement &Q);

// Pairing of pure Cartan monomials (phi modes with multiplicity, psi powers)
// via the generating series of eqn:pairtor.
Scalar pair_cartan(int n, const PsiMono &alpha, const std::vector<std::pair<int, int>> &left_modes,
                   const PsiMono &beta, const PhiMono &right);

// Evaluation map phi of the slope subalgebra: P(q^{-i},...,q^{-j}) divided
// by prod_{a<b} omega(q^{-b}, q^{-a}), zeros and poles cancelled
// symbolically before substitution.
Scalar eval_phi(const ShuffleElement &P, int i, int j);

// Staggered evaluation of the represented function at z_a = q^{-a} (joint
// limit, poles cancelled); nullopt if a genuine pole remains.
std::optional<Scalar> staggered_eval(const ShuffleElement &P, int i, int j);

// (P^d_{[i;j]}, Q) by the evaluation formula; the constant is calibrated so
// that (P^d, P^d) = q - q^{-1} under the measure convention above.
Scalar pair_hyde(int n, int i, int j, int d, const ShuffleElement &Q);
// psi-dressed right slot: (P^d, psi^a Q) = q^{chi} (P^d, Q)
Scalar pair_hyde_ext(int n, int i, int j, int d, const ExtendedElement &Q);

// Coproduct machinery -----------------------------------------------------

// The (left bidegree (l, shift))-component of Delta(P).
TensorElement coproduct_component(const ShuffleElement &P, const DegreeVector &l, int shift);

// Slope-leading coproduct Delta_mu (eqn:radu2); requires slope <= mu.
TensorElement coproduct_leading(const ShuffleElement &P, long mu_num, long mu_den);

// (a*b, c) = (a (x) b, Delta(c)) with Delta computed by
// coproduct_component over all contributing splittings.
bool verify_bialgebra(int n, const GenWord &a, const GenWord &b, const ShuffleElement &c,
                      int trials = 10);

// Slope filtration combinatorics -------------------------------------------

struct IntervalPart {
    int i, j, d;
    bool operator<(const IntervalPart &o) const {
        return std::tie(i, j, d) < std::tie(o.i, o.j, o.d);
    }
    bool operator==(const IntervalPart &o) const {
        return i == o.i && j == o.j && d == o.d;
    }
};

// Unordered collections {(i_a, j_a, d_a)} with sum [i_a;j_a] = k,
// d_a = mu (j_a - i_a + 1) integral for all a (the viable collections).
std::vector<std::vector<IntervalPart>> viable_partitions(int n, const DegreeVector &k,
                                                         long mu_num, long mu_den);

// Pairing of a product of minimal elements against a slope-mu element, by
// iterated Delta_mu and the evaluation formula.
Scalar pair_min_product(int n, const std::vector<IntervalPart> &factors,
                        const ExtendedElement &Y, long mu_num, long mu_den);

// Express a shuffle element as a word combination (modes within the given
// window); exact linear solve, nullopt if the window is too small.
std::optional<WordExpr> solve_in_words(const ShuffleElement &Q, int mode_lo, int mode_hi);

}  // namespace laumon
