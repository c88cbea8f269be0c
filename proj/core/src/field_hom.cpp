#include "kummer/field_hom.hpp"

#include <stdexcept>

namespace kummer {

FieldHom::FieldHom()
    : image_a_(Rat::variable(Var::A)),
      image_b_(Rat::variable(Var::B)),
      root_images_{FieldElement::root(kSqrtA), FieldElement::root(kSqrtOneMinusA),
                   FieldElement::root(kSqrtB), FieldElement::root(kSqrtOneMinusB)} {}

FieldHom::FieldHom(Rat image_a, Rat image_b, FieldElement image_sqrt_a,
                   FieldElement image_sqrt_1ma, FieldElement image_sqrt_b,
                   FieldElement image_sqrt_1mb)
    : image_a_(std::move(image_a)),
      image_b_(std::move(image_b)),
      root_images_{std::move(image_sqrt_a), std::move(image_sqrt_1ma), std::move(image_sqrt_b),
                   std::move(image_sqrt_1mb)} {
    const FieldElement fa(image_a_), fb(image_b_);
    const FieldElement targets[4] = {fa, FieldElement(1) - fa, fb, FieldElement(1) - fb};
    for (int k = 0; k < 4; ++k) {
        if (!(root_images_[k] * root_images_[k] == targets[k]))
            throw std::invalid_argument("FieldHom: root image square mismatch");
    }
}

Rat FieldHom::apply(const Rat& r) const {
    return r.substitute(image_a_.num(), image_a_.den(), image_b_.num(), image_b_.den());
}

FieldElement FieldHom::apply(const FieldElement& x) const {
    FieldElement out;
    for (int m = 0; m < FieldElement::kSlots; ++m) {
        if (x.coeff(m).is_zero()) continue;
        FieldElement term(apply(x.coeff(m)));
        for (int k = 0; k < 4; ++k)
            if (m & (1 << k)) term = term * root_images_[k];
        out += term;
    }
    return out;
}

FieldHom FieldHom::compose(const FieldHom& g, const FieldHom& h) {
    // Image of each generator under "g then h".
    FieldElement ia = h.apply(FieldElement(g.image_a_));
    FieldElement ib = h.apply(FieldElement(g.image_b_));
    return FieldHom(ia.coeff(0), ib.coeff(0), h.apply(g.root_images_[0]),
                    h.apply(g.root_images_[1]), h.apply(g.root_images_[2]),
                    h.apply(g.root_images_[3]));
}

bool operator==(const FieldHom& x, const FieldHom& y) {
    return x.image_a_ == y.image_a_ && x.image_b_ == y.image_b_ &&
           x.root_images_[0] == y.root_images_[0] && x.root_images_[1] == y.root_images_[1] &&
           x.root_images_[2] == y.root_images_[2] && x.root_images_[3] == y.root_images_[3];
}

}  // namespace kummer
