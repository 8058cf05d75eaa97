#include "laumon/symbols.hpp"

#include <stdexcept>

namespace laumon {

SymbolTable &SymbolTable::instance() {
    static SymbolTable tab;
    return tab;
}

Sym SymbolTable::intern(const std::string &name) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Sym id = static_cast<Sym>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

const std::string &SymbolTable::name(Sym s) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (s < 0 || s >= static_cast<Sym>(names_.size())) throw std::out_of_range("bad symbol id");
    return names_[s];
}

bool SymbolTable::lookup(const std::string &name, Sym &out) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = ids_.find(name);
    if (it == ids_.end()) return false;
    out = it->second;
    return true;
}

int SymbolTable::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return static_cast<int>(names_.size());
}

Sym sym_q() {
    static Sym s = intern("q");
    return s;
}

Sym sym_qp() {
    static Sym s = intern("qp");
    return s;
}

Sym sym_t(int l_base) {
    if (l_base < 1) throw std::invalid_argument("t index must be >= 1");
    return intern("t" + std::to_string(l_base));
}

Sym sym_z(int weight, int slot) {
    return intern("z_" + std::to_string(weight) + "_" + std::to_string(slot));
}

Sym sym_u(int a) { return intern("u" + std::to_string(a)); }

Sym sym_aux(const std::string &prefix, int a) { return intern(prefix + std::to_string(a)); }

bool is_param_symbol(Sym s, int n) {
    if (s == sym_q() || s == sym_qp()) return true;
    for (int l = 1; l <= n; ++l)
        if (s == sym_t(l)) return true;
    return false;
}

}  // namespace laumon
