#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ncps {

using Rat = boost::multiprecision::cpp_rational;

/// Structural misuse of an interface (mismatched tables, bad tensors, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation left its mathematical domain (non-terminating exponential, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact complex number with rational real and imaginary parts.
/// All arithmetic is exact; equality is canonical because cpp_rational
/// keeps fractions reduced.
class EC {
public:
    EC() = default;
    EC(Rat re, Rat im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    EC(long re) : re_(re) {}
    EC(int re) : re_(re) {}

    static EC i() { return EC(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    EC operator-() const { return EC(-re_, -im_); }

    EC& operator+=(const EC& o) { re_ += o.re_; im_ += o.im_; return *this; }
    EC& operator-=(const EC& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

    friend EC operator+(EC a, const EC& b) { a += b; return a; }
    friend EC operator-(EC a, const EC& b) { a -= b; return a; }

    friend EC operator*(const EC& a, const EC& b) {
        return EC(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    EC& operator*=(const EC& o) { *this = *this * o; return *this; }

    friend EC operator/(const EC& a, const EC& b) {
        Rat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n == 0) throw DomainError("division by zero exact complex");
        return EC((a.re_ * b.re_ + a.im_ * b.im_) / n,
                  (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    EC& operator/=(const EC& o) { *this = *this / o; return *this; }

    EC conj() const { return EC(re_, -im_); }

    friend bool operator==(const EC& a, const EC& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const EC& a, const EC& b) { return !(a == b); }

    /// Canonical text: "a/b", "a/b*i" or "(a/b+c/d*i)"; integers drop "/1".
    std::string text() const;

private:
    Rat re_ = 0;
    Rat im_ = 0;
};

std::string rat_text(const Rat& r);

/// Parses "a" or "a/b" (optionally signed). Throws StructuralError on junk.
Rat rat_parse(const std::string& s);

} // namespace ncps
