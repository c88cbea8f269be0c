#include "kummer/serialize.hpp"

#include <vector>

namespace kummer {

std::string to_string(const GaussianRational& q) {
    if (q.is_rational()) return q.real().get_str();
    return "(i " + q.real().get_str() + " " + q.imag().get_str() + ")";
}

std::string to_string(const Poly& p) {
    std::string s = "(p";
    // Lex-descending: reverse traversal of the ordered term map.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        s += " (m " + std::to_string(it->first.da) + " " + std::to_string(it->first.db) + " " +
             to_string(it->second) + ")";
    }
    s += ")";
    return s;
}

std::string to_string(const Rat& r) { return "(/ " + to_string(r.num()) + " " + to_string(r.den()) + ")"; }

std::string monomial_name(int mask) {
    if (mask == 0) return "1";
    static const char* kNames[4] = {"sa", "s1a", "sb", "s1b"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (!(mask & (1 << k))) continue;
        if (!s.empty()) s += "*";
        s += kNames[k];
    }
    return s;
}

std::string to_string(const FieldElement& f) {
    std::string s = "(fe";
    for (int a_idx = 0; a_idx < 4; ++a_idx) {
        for (int b_idx = 0; b_idx < 4; ++b_idx) {
            int mask = a_idx | (b_idx << 2);
            if (f.coeff(mask).is_zero()) continue;
            s += " (" + monomial_name(mask) + " " + to_string(f.coeff(mask)) + ")";
        }
    }
    s += ")";
    return s;
}

}  // namespace kummer
