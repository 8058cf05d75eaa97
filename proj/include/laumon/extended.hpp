#pragma once

#include <map>
#include <vector>

#include "laumon/shuffle.hpp"

namespace laumon {

// Monomial in the invertible Cartan generators psi_1..psi_n.
struct PsiMono {
    std::vector<int> e;  // size n

    static PsiMono zero(int n) { return {std::vector<int>(n, 0)}; }
    // prod_i psi_{i+shift}^{k_i} for a degree vector k (indices mod n)
    static PsiMono from_degree(const DegreeVector &k, int shift);
    PsiMono mul(const PsiMono &o) const;
    PsiMono inv() const;
    bool is_one() const;
    bool operator==(const PsiMono &o) const { return e == o.e; }
    bool operator<(const PsiMono &o) const { return e < o.e; }
};

// Multiset of phi_{i,k} modes with k >= 1 (phi_{i,0} is psi_i/psi_{i+1} and
// is stored on the psi side).
struct PhiMono {
    std::vector<std::pair<int, int>> modes;  // sorted (weight, mode>=1)

    static PhiMono one() { return {}; }
    PhiMono mul(const PhiMono &o) const;
    int total_mode() const;
    bool is_one() const { return modes.empty(); }
    bool operator==(const PhiMono &o) const { return modes == o.modes; }
    bool operator<(const PhiMono &o) const { return modes < o.modes; }
};

// Term c * psi * phi * shuffle-part, already in normal order.
struct ExtTerm {
    Scalar c;
    PsiMono psi;
    PhiMono phi;
    ShuffleElement sh;

    // bidegree of the full term
    DegreeVector kdeg() const { return sh.k(); }
    int ddeg() const { return sh.d() + phi.total_mode(); }
};

class ExtendedElement {
  public:
    explicit ExtendedElement(int n) : n_(n) {}
    static ExtendedElement from_shuffle(const ShuffleElement &s);
    static ExtendedElement psi_power(int n, const PsiMono &m);

    int n() const { return n_; }
    const std::vector<ExtTerm> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ExtTerm t);  // merges with matching (psi, phi, bidegree)
    ExtendedElement operator+(const ExtendedElement &o) const;
    ExtendedElement operator-() const;
    ExtendedElement scale(const Scalar &c) const;
    // product with eqn:comm0 normal ordering (psi and phi moved left)
    ExtendedElement operator*(const ExtendedElement &o) const;

  private:
    int n_;
    std::vector<ExtTerm> terms_;
};

bool extended_equal(const ExtendedElement &a, const ExtendedElement &b, int trials = 10,
                    uint64_t seed = 0x5eed);

// Finite tensor: sum of c * (left term) x (right term), with unit scalars
// inside the factor terms.
struct TensorTerm {
    Scalar c;
    ExtTerm left, right;
};

class TensorElement {
  public:
    explicit TensorElement(int n) : n_(n) {}
    int n() const { return n_; }
    const std::vector<TensorTerm> &terms() const { return terms_; }
    void add_term(TensorTerm t);
    TensorElement operator+(const TensorElement &o) const;
    // componentwise product (left*left') x (right*right')
    TensorElement operator*(const TensorElement &o) const;

  private:
    int n_;
    std::vector<TensorTerm> terms_;
};

bool tensor_equal(const TensorElement &a, const TensorElement &b, int trials = 10,
                  uint64_t seed = 0x5eed);

// Moving a single phi_{i,k} mode from the right of a shuffle element to the
// left: P * phi_{i,k} = sum_m phi_{i,k-m} * (P . C_m), with C(z) the
// omega-ratio correction of eqn:comm0 expanded at z -> infinity.
std::vector<std::pair<int, ShuffleElement>> move_phi_left(const ShuffleElement &P, int i, int k);

}  // namespace laumon
