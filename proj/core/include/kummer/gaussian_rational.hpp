#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>

#include "kummer/errors.hpp"

namespace kummer {

/// An element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        // mpq_class(n, d) does not reduce; GMP arithmetic requires canonical
        // operands.
        re_.canonicalize();
        im_.canonicalize();
    }
    explicit GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    /// i^k for k mod 4; covers all of mu_4.
    static GaussianRational root_of_unity(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return {mpq_class(0), mpq_class(-1)};
        }
    }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
    friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
    friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }

    GaussianRational inverse() const {
        if (is_zero()) throw ZeroInverse("GaussianRational: inverse of zero");
        mpq_class n = re_ * re_ + im_ * im_;
        return {re_ / n, -im_ / n};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        return x * y.inverse();
    }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

    /// Total order used only for canonical term normalization.
    friend bool operator<(const GaussianRational& x, const GaussianRational& y) {
        int c = cmp(x.re_, y.re_);
        if (c != 0) return c < 0;
        return cmp(x.im_, y.im_) < 0;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    std::string str() const;

private:
    mpq_class re_, im_;
};

}  // namespace kummer
