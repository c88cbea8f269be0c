#pragma once

#include <random>

#include "kummer/branch_point.hpp"
#include "kummer/field_element.hpp"
#include "kummer/group.hpp"

namespace kummer::testing {

// Deterministic sampling helpers shared by the suites.  All draws go through
// one mt19937_64 so a fixed seed reproduces a run exactly.
class TestRng {
public:
    explicit TestRng(uint64_t seed) : rng_(seed) {}

    long pick(long lo, long hi) { return lo + static_cast<long>(rng_() % (hi - lo + 1)); }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
    }

    GaussianRational gaussian() {
        return GaussianRational(mpq_class(pick(-4, 4), pick(1, 3)),
                                mpq_class(pick(-2, 2), pick(1, 2)));
    }

    Poly poly(int max_deg = 2, int terms = 3) {
        Poly p;
        for (int t = 0; t < terms; ++t)
            p.add_term(Mono{static_cast<int>(pick(0, max_deg)), static_cast<int>(pick(0, max_deg))},
                       gaussian());
        return p;
    }

    Poly nonzero_poly(int max_deg = 2, int terms = 3) {
        for (;;) {
            Poly p = poly(max_deg, terms);
            if (!p.is_zero()) return p;
        }
    }

    Rat rat() { return Rat(poly(), nonzero_poly()); }

    FieldElement field_element(int slots = 3) {
        FieldElement f;
        for (int s = 0; s < slots; ++s) f.set_coeff(static_cast<int>(pick(0, 15)), rat());
        return f;
    }

    FieldElement nonzero_field_element(int slots = 3) {
        for (;;) {
            FieldElement f = field_element(slots);
            if (!f.is_zero()) return f;
        }
    }

    const GXElement& gx() {
        const auto& all = gx_all();
        return all[rng_() % all.size()];
    }

    /// Point in the base region a, b in (-2, -0.2), optionally with random
    /// branch signs.
    BranchPoint branch_point(bool random_signs = true) {
        for (;;) {
            double a = uniform(-2.0, -0.2), b = uniform(-2.0, -0.2);
            try {
                BranchPoint p = BranchPoint::principal(a, b);
                if (!random_signs) return p;
                return p.with_flipped_roots(static_cast<int>(pick(0, 15)));
            } catch (const std::exception&) {
                // excluded locus; redraw
            }
        }
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace kummer::testing
