#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace laumon {

// Interned symbol id. Ids are dense and stable for the lifetime of the
// process; polynomials store ids, never names.
using Sym = int32_t;

class SymbolTable {
  public:
    static SymbolTable &instance();

    Sym intern(const std::string &name);
    const std::string &name(Sym s) const;
    bool lookup(const std::string &name, Sym &out) const;
    int size() const;

  private:
    SymbolTable() = default;
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Sym> ids_;
};

inline Sym intern(const std::string &name) { return SymbolTable::instance().intern(name); }
inline const std::string &sym_name(Sym s) { return SymbolTable::instance().name(s); }

// The coefficient field is Q(q, qp, t1..tn).  q and qp are the square roots
// of the torus weights; tl for l outside 1..n is tl = t_{r} * qp^m with
// l = r + n*m, r in 1..n.
Sym sym_q();
Sym sym_qp();
Sym sym_t(int l_base);  // t1, t2, ... (base index >= 1)

// Main variables z_{w,j} (weight w in 1..n, slot j >= 1) and helpers for
// scratch symbols used by integration / substitution.
Sym sym_z(int weight, int slot);
Sym sym_u(int a);
Sym sym_aux(const std::string &prefix, int a);

bool is_param_symbol(Sym s, int n);

}  // namespace laumon
