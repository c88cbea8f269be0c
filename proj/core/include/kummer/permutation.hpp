#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kummer {

/// Permutation of a small indexed set.  Index conventions used throughout:
///   Perm3 acts on {0, 1, oo} as indices {0, 1, 2};
///   Perm4 acts on Sigma = {0, 1, 1/c, oo} as indices {0, 1, 2, 3}.
template <int N>
class Perm {
public:
    Perm() {
        for (int k = 0; k < N; ++k) img_[k] = static_cast<uint8_t>(k);
    }
    explicit Perm(const std::array<uint8_t, N>& img) : img_(img) {}

    static Perm identity() { return Perm(); }

    uint8_t operator()(int x) const { return img_[x]; }

    bool is_identity() const {
        for (int k = 0; k < N; ++k)
            if (img_[k] != k) return false;
        return true;
    }

    /// Composition as maps: (x * y)(v) = x(y(v)); y acts first.
    friend Perm operator*(const Perm& x, const Perm& y) {
        Perm r;
        for (int k = 0; k < N; ++k) r.img_[k] = x.img_[y.img_[k]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        for (int k = 0; k < N; ++k) r.img_[img_[k]] = static_cast<uint8_t>(k);
        return r;
    }

    int sign() const {
        int s = 1;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }

    friend bool operator==(const Perm& x, const Perm& y) { return x.img_ == y.img_; }
    friend bool operator!=(const Perm& x, const Perm& y) { return !(x == y); }
    friend bool operator<(const Perm& x, const Perm& y) { return x.img_ < y.img_; }

    /// All N! permutations in lexicographic order of the image array.
    static std::vector<Perm> all();

    /// Cycle notation with the given point labels, "id" for the identity.
    std::string str(const std::array<const char*, N>& labels) const;

private:
    std::array<uint8_t, N> img_;
};

using Perm3 = Perm<3>;
using Perm4 = Perm<4>;

std::string perm3_str(const Perm3& p);
std::string perm4_str(const Perm4& p);

/// The inclusion S({0,1,oo}) into S(Sigma) that fixes the section 1/c.
Perm4 embed_fixing_quarter(const Perm3& p);

extern template class Perm<3>;
extern template class Perm<4>;

}  // namespace kummer
