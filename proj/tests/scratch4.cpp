#include <cassert>
#include <chrono>
#include <iostream>

#include "laumon/bialgebra.hpp"
#include "laumon/expr.hpp"

using namespace laumon;
using Clock = std::chrono::steady_clock;
static Clock::time_point T0 = Clock::now();
static void tic(const char *what) {
    auto t1 = Clock::now();
    std::cout << what << ": " << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - T0).count()
              << " ms" << std::endl;
    T0 = t1;
}

int main() {
    int n = 2;
    std::vector<GenWord> ws = {GenWord{{{1, 0}, {2, 0}}}, GenWord{{{2, 0}, {1, 0}}},
                               GenWord{{{1, 1}, {2, -1}}}, GenWord{{{2, 2}, {1, -2}}}};
    for (auto &w1 : ws)
        for (auto &w2 : ws) {
            Scalar p12 = pair_word_shuffle(w1, expand_word(n, w2));
            Scalar p21 = pair_word_shuffle(w2, expand_word(n, w1));
            assert(p12 == p21);
        }
    tic("bowie 16 pairs");

    GenWord a{{{1, 0}}}, b{{{2, 0}}};
    ShuffleElement c = expand_word(n, GenWord{{{1, 0}, {2, 0}}});
    TensorElement comp = coproduct_component(c, word_degree_vector(n, b), 0);
    tic("coproduct_component");
    std::cout << "component terms: " << comp.terms().size() << std::endl;
    bool ok = verify_bialgebra(n, a, b, c);
    tic("verify_bialgebra");
    std::cout << "base case: " << ok << std::endl;
    return 0;
}
