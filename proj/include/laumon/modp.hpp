#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "laumon/poly.hpp"
#include "laumon/symbols.hpp"

namespace laumon {

// 62-bit prime used by the probe backend.  Schwartz-Zippel over F_p: a
// nonzero rational identity of total degree D is detected with failure
// probability <= D/p per trial.
constexpr uint64_t kProbePrime = 4611686018427387847ull;

uint64_t addp(uint64_t a, uint64_t b);
uint64_t subp(uint64_t a, uint64_t b);
uint64_t mulp(uint64_t a, uint64_t b);
uint64_t powp(uint64_t a, long e);
uint64_t invp(uint64_t a);

// One random assignment of symbols to nonzero residues.  q is resampled
// until its multiplicative order exceeds 64, so factors q^m - 1 with
// m <= 64 cannot vanish.
class ProbeAssignment {
  public:
    explicit ProbeAssignment(uint64_t seed);

    uint64_t value(Sym s);                    // assigns lazily
    std::optional<uint64_t> eval(const Rat &f);  // nullopt if a denominator vanishes
    uint64_t eval_poly(const Poly &f);

    const std::map<Sym, uint64_t> &values() const { return values_; }

  private:
    std::mt19937_64 rng_;
    std::map<Sym, uint64_t> values_;
};

// Probabilistic equality of rational functions: `trials` independent
// assignments; pole hits are resampled, never reported.
bool probe_equal(const Rat &f, const Rat &g, int trials = 10, uint64_t seed = 0x5eed);

// Rank of a matrix of Scalars under one probe assignment (resampling on
// singular denominators).
int probe_rank(const std::vector<std::vector<Rat>> &m, uint64_t seed = 0x5eed);

// Dimension of the joint kernel of a list of matrices (columns = source
// basis), all over the probe field.
int probe_joint_kernel_dim(const std::vector<std::vector<std::vector<Rat>>> &mats, int cols,
                           uint64_t seed = 0x5eed);

}  // namespace laumon
