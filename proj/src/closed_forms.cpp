// closed_forms.cpp

#include "adfa/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace adfa {

namespace {

BigInt pw(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

BigInt madfa_formula(int n, int k) {
    if (k < 1) throw std::invalid_argument("formula needs k >= 1");
    BigInt p2 = pw(2, k), p3 = pw(3, k);
    switch (n) {
        case 2: return 2 * (p2 - 1);
        case 3: return 4 * (p3 - p2) * (p2 - 1);
        default:
            throw UnsupportedNError("no closed form for minimal automata with n = " +
                                    std::to_string(n));
    }
}

BigInt adfa_formula(int n, int k) {
    if (k < 1) throw std::invalid_argument("formula needs k >= 1");
    BigInt p2 = pw(2, k), p3 = pw(3, k), p4 = pw(4, k);
    switch (n) {
        case 2: return madfa_formula(2, k);
        case 3: return madfa_formula(3, k) + (p3 - 2 * p2 + 1);
        case 4: {
            BigInt t1 = 8 * (p4 - p3) * (p3 - p2) * (p2 - 1);
            BigInt t2 = 4 * (p4 - 2 * p3 + p2) * (p2 - 1) * (p2 - 1);
            BigInt t3 = 2 * (p4 - p3) * (p3 - 2 * p2 + 1);
            BigInt t4_num = p4 - 3 * p3 + 3 * p2 - 1;
            if (t4_num % 3 != 0)
                throw std::logic_error("inclusion-exclusion term not divisible by 3");
            return t1 + t2 + t3 + t4_num / 3;
        }
        default:
            throw UnsupportedNError("no closed form for automata with n = " +
                                    std::to_string(n));
    }
}

} // namespace adfa
