#include "kummer/permutation.hpp"

#include <algorithm>

namespace kummer {

template <int N>
std::vector<Perm<N>> Perm<N>::all() {
    std::array<uint8_t, N> img;
    for (int k = 0; k < N; ++k) img[k] = static_cast<uint8_t>(k);
    std::vector<Perm<N>> out;
    do {
        out.push_back(Perm<N>(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

template <int N>
std::string Perm<N>::str(const std::array<const char*, N>& labels) const {
    if (is_identity()) return "id";
    std::string s;
    bool seen[N] = {};
    for (int start = 0; start < N; ++start) {
        if (seen[start] || img_[start] == start) continue;
        s += '(';
        int x = start;
        bool first = true;
        do {
            seen[x] = true;
            if (!first) s += ' ';
            s += labels[x];
            first = false;
            x = img_[x];
        } while (x != start);
        s += ')';
    }
    return s;
}

template class Perm<3>;
template class Perm<4>;

std::string perm3_str(const Perm3& p) { return p.str({"0", "1", "oo"}); }
std::string perm4_str(const Perm4& p) { return p.str({"0", "1", "1/c", "oo"}); }

Perm4 embed_fixing_quarter(const Perm3& p) {
    // Relabel {0,1,oo} indices {0,1,2} into Sigma indices {0,1,3}; 2 = 1/c is fixed.
    auto r = [](int x) { return x == 2 ? 3 : x; };
    std::array<uint8_t, 4> img;
    img[2] = 2;
    for (int x = 0; x < 3; ++x) img[r(x)] = static_cast<uint8_t>(r(p(x)));
    return Perm4(img);
}

}  // namespace kummer
