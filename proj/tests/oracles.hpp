#pragma once

// Test-only oracles, independent of the library implementation paths they
// check.

#include <algorithm>
#include <vector>

#include "cw/clifford.hpp"

namespace cw::oracle {

/// Brute-force Clifford monomial product: keeps the index word explicitly and
/// bubble-sorts, contracting equal neighbours with gamma^2 = -1.
inline std::pair<Mono, int> mono_mul_bruteforce(Mono a, Mono b) {
    std::vector<int> word;
    for (int i = 1; i <= 9; ++i)
        if (a & (1u << (i - 1))) word.push_back(i);
    for (int i = 1; i <= 9; ++i)
        if (b & (1u << (i - 1))) word.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] == word[k + 1]) {
                sign = -sign;  // gamma^2 = -1
                word.erase(word.begin() + k, word.begin() + k + 2);
                changed = true;
                break;
            }
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    Mono m = 0;
    for (int i : word) m |= Mono(1u << (i - 1));
    return {m, sign};
}

}  // namespace cw::oracle
