#pragma once

#include <optional>
#include <vector>

#include "laumon/series.hpp"

namespace laumon {

// Degree vectors in N^n with the cyclic bilinear forms <k,l> and (k,l).
struct DegreeVector {
    std::vector<int> k;

    int n() const { return (int)k.size(); }
    int total() const;
    int operator[](int i) const { return k[((i - 1) % n() + n()) % n()]; }  // 1-based, cyclic
    bool operator==(const DegreeVector &o) const { return k == o.k; }
    bool operator<=(const DegreeVector &o) const;
    DegreeVector operator+(const DegreeVector &o) const;
    DegreeVector operator-(const DegreeVector &o) const;

    static DegreeVector zero(int n) { return {std::vector<int>(n, 0)}; }
    static DegreeVector unit(int n, int i);  // varsigma_i, i taken mod n
};

long pair_asym(const DegreeVector &a, const DegreeVector &b);  // <a,b>
long pair_sym(const DegreeVector &a, const DegreeVector &b);   // (a,b)
int b_matrix(int n, int i, int j);                             // <s_i, s_j>
int c_matrix(int n, int i, int j);                             // (s_i, s_j)

// Interval [i;j] of integers, weights taken mod n.
struct Interval {
    int i, j;  // i <= j
    int length() const { return j - i + 1; }
    DegreeVector degree_vector(int n) const;
    int c_plus(int n) const;   // #{x in [i..j] : x == j+1 mod n}
    int c_minus(int n) const;  // #{x in [i..j] : x == i mod n}
};

// Word in the degree-one generators: letters (weight i, mode c).
struct GenWord {
    std::vector<std::pair<int, int>> letters;
    int size() const { return (int)letters.size(); }
};

int reduce_weight(int a, int n);  // into 1..n

// omega(x, y) per weight case; returned as numerator/denominator pair.
struct OmegaParts {
    Poly num, den;  // both 1 when the weights are unrelated
};
OmegaParts omega_parts(const Poly &x, const Poly &y, int wx, int wy, int n);
Rat omega(const Poly &x, const Poly &y, int wx, int wy, int n);

// Element of the shuffle algebra A^+ in canonical form: the symmetric
// Laurent polynomial numerator p (over the parameter field), with the
// standard prefactor and cross-weight denominator regenerated on demand.
class ShuffleElement {
  public:
    ShuffleElement() : n_(1), k_(DegreeVector::zero(1)), d_(0), p_(Rat(1)) {}
    ShuffleElement(int n, DegreeVector k, int d, Rat p);

    static ShuffleElement unit(int n);
    static ShuffleElement zero(int n) { return ShuffleElement(n, DegreeVector::zero(n), 0, Rat(0)); }

    int n() const { return n_; }
    const DegreeVector &k() const { return k_; }
    int d() const { return d_; }
    const Rat &p() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_unit_degree() const { return k_.total() == 0; }

    // variables of weight w: sym_z(w, 1..k_w)
    std::vector<Sym> vars_of_weight(int w) const;
    std::vector<Sym> all_vars() const;

    // The represented rational function Pref * p / Den, factored.
    FR represented() const;
    Rat represented_rat() const;

  private:
    int n_;
    DegreeVector k_;
    int d_;
    Rat p_;  // numerator polynomial over a parameter-only denominator
};

// Canonicalize a factored rational function in the z_(w,j) variables into a
// ShuffleElement; fails (nullopt or throw, see flag) when the required
// denominator factors do not divide out -- the input was outside A^+.
std::optional<ShuffleElement> canonicalize(int n, const DegreeVector &k, const FR &f,
                                           bool throw_on_failure = false);

ShuffleElement shuffle_mul(const ShuffleElement &A, const ShuffleElement &B);
ShuffleElement shuffle_add(const ShuffleElement &A, const ShuffleElement &B);  // same bidegree
ShuffleElement shuffle_scale(const ShuffleElement &A, const Scalar &c);
ShuffleElement tau(const ShuffleElement &A);
bool wheel_check(const ShuffleElement &A);

ShuffleElement expand_word(int n, const GenWord &w);
// Direct formula Sym[ prod z^c prod omega ] -- test oracle for expand_word.
ShuffleElement expand_word_direct(int n, const GenWord &w);

// X_m for a Laurent polynomial m in position variables z_i..z_j; `m` uses
// symbols returned by interval_position_vars.
std::vector<Sym> interval_position_vars(int i, int j);
ShuffleElement build_X(int n, const Poly &m, int i, int j);
ShuffleElement build_P(int n, int i, int j, int d);
ShuffleElement build_Y(int n, const DegreeVector &k);
std::vector<int> p_multiset(int i, int j, int d);  // S_{i,j,d} of the minimal elements

bool slope_leq(const ShuffleElement &A, long mu_num, long mu_den);

bool elements_equal(const ShuffleElement &A, const ShuffleElement &B, bool exact = false,
                    int trials = 10, uint64_t seed = 0x5eed);

}  // namespace laumon
