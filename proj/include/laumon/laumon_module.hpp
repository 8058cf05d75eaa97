#pragma once

#include <map>

#include "laumon/series.hpp"
#include "laumon/shuffle.hpp"

namespace laumon {

// Torus fixed point of an affine Laumon space: one finitely supported
// non-increasing column per residue class, rows periodic mod n.
struct FixedPoint {
    int n = 1;
    std::vector<std::vector<int>> cols;  // cols[c-1][r-c] = d_{r,c} for rows r >= c

    int d(int row, int col) const;  // periodic lift d_{row+n, col+n} = d_{row, col}
    DegreeVector degree() const;
    int size() const;  // |d|
    bool operator==(const FixedPoint &o) const { return n == o.n && cols == o.cols; }
    bool operator<(const FixedPoint &o) const { return cols < o.cols; }
    std::string str() const;
};

std::vector<FixedPoint> enumerate_fixed_points(int n, const DegreeVector &deg);

// Virtual T-character: monomials in q, qp, t_1..t_n with integer multiplicity.
using Character = std::map<Mono, long>;

Mono t_bar(int n, int l, int power);  // (t_l)^power with t_{l+n} = t_l * qp
void char_add(Character &c, const Mono &m, long mult);
Character char_dual(const Character &c);
Character char_sub(const Character &a, const Character &b);
Character char_mul(const Character &a, const Character &b);
long char_rank(const Character &c);
bool char_contains_trivial(const Character &c);

// eqn:tautfixed0 / eqn:nu / eqn:tw / eqn:tanfixed / eqn:tan / eqn:e
Character taut_character(const FixedPoint &p, int k);
Character w_character(const FixedPoint &p, int k);
Character w_character_via_tw(const FixedPoint &p, int k);
Character tangent_character(const FixedPoint &p);
Character tangent_character_via_tan(const FixedPoint &p);
Character ext_character(const FixedPoint &p1, const FixedPoint &p2);
Character ext_character_via_tan(const FixedPoint &p1, const FixedPoint &p2);

// Lambda(c, 1) with identical monomials cancelled first; throws if a
// negative-multiplicity trivial monomial remains.
Scalar lambda_at_one(const Character &c);

// Exact rational evaluation context: substitutes random integers for the
// parameters so that oracle sweeps run over Q instead of the full symbolic
// field.  Entries computed under a context are exact numbers for that
// assignment (Schwartz-Zippel style check with an exact arithmetic core).
struct NumCtx {
    std::map<Sym, Poly> values;

    static NumCtx random(int n, uint64_t seed);
    void set(Sym s, long v);
    Rat mono(const Mono &m) const;
    Rat ratpoly(const Poly &p, const std::vector<Sym> &keep) const;
    Rat rat(const Rat &x) const;
    FR fr(const FR &f, const std::vector<Sym> &keep) const;
};

// Sparse graded operator between localized fixed-point bases.
struct ModuleOperator {
    int n = 1;
    DegreeVector src{{0}}, dst{{0}};
    std::map<std::pair<int, int>, Scalar> entries;  // (to, from)

    void add(int to, int from, const Scalar &v);
    bool is_zero_probe(int trials = 6, uint64_t seed = 0x5eed) const;
};

ModuleOperator op_add(const ModuleOperator &a, const ModuleOperator &b);
ModuleOperator op_scale(const ModuleOperator &a, const Scalar &c);
ModuleOperator op_compose(const ModuleOperator &a, const ModuleOperator &b);  // a after b
bool op_equal_probe(const ModuleOperator &a, const ModuleOperator &b, int trials = 6,
                    uint64_t seed = 0x5eed);

// Theorem act operators on K_d (source degree d).
ModuleOperator psi_matrix(int n, int i, const DegreeVector &d);
ModuleOperator phi_matrix(int n, int i, int mode, int sign, const DegreeVector &d);
ModuleOperator e_matrix(int n, int i, int mode, const DegreeVector &d);
ModuleOperator f_matrix(int n, int i, int mode, const DegreeVector &d);

// The Theorem act identity on Lambda-class products with formal S-families
// (the defining contract of the e/f matrices).
bool check_act_identity_e(int n, int i, int mode, const DegreeVector &d,
                          const std::vector<int> &s_sizes, uint64_t seed = 1);
bool check_act_identity_f(int n, int i, int mode, const DegreeVector &d,
                          const std::vector<int> &s_sizes, uint64_t seed = 1);

// Normal-ordered residue action of a shuffle element (eqn:normal1/normal2);
// with a NumCtx the entries are evaluated at its parameter assignment.
ModuleOperator act_shuffle(const ShuffleElement &P, int sign, const DegreeVector &d,
                           const NumCtx *ctx = nullptr);

// Ordered-contour integral action of X_m (eqn:y1/y2).
ModuleOperator act_X(int n, const Poly &m, int i, int j, int sign, const DegreeVector &d,
                     const NumCtx *ctx = nullptr);

// Carlsson-Okounkov style Ext operator (Prop co).
ModuleOperator ext_operator(int n, const DegreeVector &k, int sign, const DegreeVector &d);

// Single-box push-forward along the simple correspondence (Prop push1):
// localization route and the integral route; returns both operators.
std::pair<ModuleOperator, ModuleOperator> push1_operators(int n, int i, int sign,
                                                          const DegreeVector &dsrc,
                                                          const Poly &m_of_u);

// gamma constants of Theorem geom.
Scalar gamma_plus(int n, int i, int j);
Scalar gamma_minus(int n, int i, int j);

}  // namespace laumon
