#pragma once

#include <array>

#include "kummer/field_element.hpp"

namespace kummer {

/// Ring homomorphism F -> F given by images of the six generators.  The
/// images of a and b must be rational (mask-0) and the root images must
/// square to the corresponding images of a, 1-a, b, 1-b; both conditions are
/// checked exactly on construction.
class FieldHom {
public:
    FieldHom();  // identity

    FieldHom(Rat image_a, Rat image_b, FieldElement image_sqrt_a, FieldElement image_sqrt_1ma,
             FieldElement image_sqrt_b, FieldElement image_sqrt_1mb);

    static FieldHom identity() { return FieldHom(); }

    const Rat& image_a() const { return image_a_; }
    const Rat& image_b() const { return image_b_; }
    const FieldElement& root_image(int bit_index) const { return root_images_[bit_index]; }

    FieldElement apply(const FieldElement& x) const;
    Rat apply(const Rat& r) const;

    /// Pullback composition: the hom whose action is h.apply(g.apply(.)),
    /// i.e. the comorphism of the point map g followed by h.
    static FieldHom compose(const FieldHom& g, const FieldHom& h);

    friend bool operator==(const FieldHom& x, const FieldHom& y);

private:
    Rat image_a_, image_b_;
    std::array<FieldElement, 4> root_images_;
};

}  // namespace kummer
