#include "laumon/modp.hpp"

#include <stdexcept>

namespace laumon {

uint64_t addp(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= kProbePrime || s < a) s -= kProbePrime;
    return s;
}

uint64_t subp(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kProbePrime - b; }

uint64_t mulp(uint64_t a, uint64_t b) {
    return (uint64_t)((__uint128_t)a * b % kProbePrime);
}

uint64_t powp(uint64_t a, long e) {
    if (e < 0) return powp(invp(a), -e);
    uint64_t r = 1, b = a % kProbePrime;
    uint64_t ee = (uint64_t)e;
    while (ee) {
        if (ee & 1) r = mulp(r, b);
        b = mulp(b, b);
        ee >>= 1;
    }
    return r;
}

uint64_t invp(uint64_t a) {
    if (a == 0) throw std::domain_error("invp(0)");
    return powp(a, (long)(kProbePrime - 2));
}

ProbeAssignment::ProbeAssignment(uint64_t seed) : rng_(seed) {}

uint64_t ProbeAssignment::value(Sym s) {
    auto it = values_.find(s);
    if (it != values_.end()) return it->second;
    std::uniform_int_distribution<uint64_t> dist(2, kProbePrime - 2);
    uint64_t v = dist(rng_);
    if (s == sym_q()) {
        // require multiplicative order > 64
        for (;;) {
            bool small_order = false;
            uint64_t ppow = v;
            for (int m = 1; m <= 64; ++m) {
                if (ppow == 1) {
                    small_order = true;
                    break;
                }
                ppow = mulp(ppow, v);
            }
            if (!small_order) break;
            v = dist(rng_);
        }
    }
    values_.emplace(s, v);
    return v;
}

uint64_t ProbeAssignment::eval_poly(const Poly &f) {
    std::map<Sym, uint64_t> assign;
    for (Sym s : f.symbols()) assign[s] = value(s);
    return f.eval_mod(assign, kProbePrime);
}

std::optional<uint64_t> ProbeAssignment::eval(const Rat &f) {
    uint64_t d = eval_poly(f.den());
    if (d == 0) return std::nullopt;
    uint64_t n = eval_poly(f.num());
    return mulp(n, invp(d));
}

bool probe_equal(const Rat &f, const Rat &g, int trials, uint64_t seed) {
    int done = 0;
    uint64_t s = seed;
    int attempts = 0;
    while (done < trials) {
        if (++attempts > trials * 20 + 100)
            throw std::runtime_error("probe_equal: persistent pole collisions");
        ProbeAssignment asg(s++);
        auto a = asg.eval(f);
        auto b = asg.eval(g);
        if (!a || !b) continue;  // pole: resample
        if (*a != *b) return false;
        ++done;
    }
    return true;
}

namespace {

// Gaussian elimination over F_p; returns rank.
int rank_fp(std::vector<std::vector<uint64_t>> m) {
    int rows = (int)m.size();
    if (rows == 0) return 0;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        uint64_t inv = invp(m[rank][c]);
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = mulp(m[rank][cc], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            uint64_t f = m[r][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] = subp(m[r][cc], mulp(f, m[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::vector<uint64_t>>> eval_matrix(
    const std::vector<std::vector<Rat>> &m, ProbeAssignment &asg) {
    std::vector<std::vector<uint64_t>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) {
            auto v = asg.eval(m[i][j]);
            if (!v) return std::nullopt;
            r[i][j] = *v;
        }
    }
    return r;
}

}  // namespace

int probe_rank(const std::vector<std::vector<Rat>> &m, uint64_t seed) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ProbeAssignment asg(seed + attempt);
        auto ev = eval_matrix(m, asg);
        if (!ev) continue;
        return rank_fp(*ev);
    }
    throw std::runtime_error("probe_rank: persistent pole collisions");
}

int probe_joint_kernel_dim(const std::vector<std::vector<std::vector<Rat>>> &mats, int cols,
                           uint64_t seed) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ProbeAssignment asg(seed + attempt);
        std::vector<std::vector<uint64_t>> stacked;
        bool ok = true;
        for (auto &m : mats) {
            auto ev = eval_matrix(m, asg);
            if (!ev) {
                ok = false;
                break;
            }
            for (auto &row : *ev) {
                if ((int)row.size() != cols) throw std::invalid_argument("kernel: column mismatch");
                stacked.push_back(row);
            }
        }
        if (!ok) continue;
        if (stacked.empty()) return cols;
        return cols - rank_fp(stacked);
    }
    throw std::runtime_error("probe_joint_kernel_dim: persistent pole collisions");
}

}  // namespace laumon
