#include <iostream>

#include "laumon/bialgebra.hpp"
#include "laumon/expr.hpp"

using namespace laumon;

int main() {
    // battery over verify_bialgebra as now frozen
    int passed = 0, total = 0;
    for (int n : {2, 3}) {
        std::vector<GenWord> cw = {
            GenWord{{{1, 0}, {2, 0}}},  GenWord{{{2, 0}, {1, 0}}},  GenWord{{{1, 1}, {2, -1}}},
            GenWord{{{1, 0}, {1, 0}}},  GenWord{{{1, 2}, {1, 0}}},
            GenWord{{{1, 0}, {2, 1}, {1, -1}}}, GenWord{{{2, 0}, {2, 1}, {1, 0}}},
            GenWord{{{1, 1}, {1, 0}, {1, -1}}}, GenWord{{{3, 2}, {1, 0}}},
        };
        for (auto &w : cw) {
            ShuffleElement c = expand_word(n, w);
            for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
                GenWord a, b;
                a.letters.assign(w.letters.begin(), w.letters.begin() + cut);
                b.letters.assign(w.letters.begin() + cut, w.letters.end());
                ++total;
                if (verify_bialgebra(n, a, b, c)) ++passed;
            }
        }
    }
    std::cout << "bialgebra battery: " << passed << "/" << total << std::endl;

    int n = 2;
    ShuffleElement P = build_P(n, 1, 2, 0);
    auto words = solve_in_words(P, -2, 2);
    std::cout << "P in words: " << (words ? (int)words->terms.size() : -1) << std::endl;
    Scalar pp = pair(*words, ExtendedElement::from_shuffle(P));
    std::cout << "(P,P)_copy = " << print_scalar(pp) << std::endl;
    // basic values
    ShuffleElement zc(n, DegreeVector::unit(n, 1), 2, Rat(Poly::var(sym_z(1, 1), 2)));
    std::cout << "(z^2,z^2) = " << print_scalar(pair_word_shuffle(GenWord{{{1, 2}}}, zc)) << std::endl;
    // bowie
    GenWord w1{{{1, 0}, {2, 0}}}, w2{{{2, 0}, {1, 0}}};
    std::cout << "(w,w') = " << print_scalar(pair_word_shuffle(w1, expand_word(n, w2)))
              << " ; (w',w) = " << print_scalar(pair_word_shuffle(w2, expand_word(n, w1))) << std::endl;
    return 0;
}
