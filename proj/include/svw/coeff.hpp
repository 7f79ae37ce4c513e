#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace svw {

using Rat = mpq_class;

std::string rat_str(const Rat& q);

// Canonical n/d (mpq_class(n, d) alone is not reduced).
inline Rat Q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};
struct DivByZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Gaussian rational re + i*im.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(const Rat& re, const Rat& im = 0) : re_(re), im_(im) { re_.canonicalize(); im_.canonicalize(); }

    static GaussRat i() { return {0, 1}; }
    static GaussRat frac(long num, long den) { return GaussRat(Q(num, den)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    // "3/2", "-i", "1/2+3/2*i"
    std::string str() const;
    static GaussRat parse(std::string_view s);

private:
    Rat re_{0}, im_{0};
};

// Monomial over named parameters: sorted by name, positive exponents only.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(const std::string& name, unsigned e = 1);

    const std::vector<std::pair<std::string, unsigned>>& factors() const { return f_; }
    unsigned degree() const;
    unsigned degree_in(std::string_view name) const;
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial& o) const;
    // nullopt-like: returns false when o does not divide *this
    bool divide(const Monomial& o, Monomial& out) const;
    Monomial without(std::string_view name) const;

    std::string str() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<std::string, unsigned>> f_;
};

// Graded order, highest first: larger total degree, then larger exponent of
// the alphabetically earlier parameter.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class CoeffPoly {
public:
    using Terms = std::map<Monomial, GaussRat, MonoOrder>;

    CoeffPoly() = default;
    CoeffPoly(long v) : CoeffPoly(GaussRat(v)) {}
    CoeffPoly(const Rat& v) : CoeffPoly(GaussRat(v)) {}
    CoeffPoly(const GaussRat& v);
    CoeffPoly(const Monomial& m, const GaussRat& c);

    static CoeffPoly var(const std::string& name) { return CoeffPoly(Monomial::var(name), GaussRat(1)); }
    static CoeffPoly frac(long num, long den) { return CoeffPoly(Q(num, den)); }
    static CoeffPoly parse(std::string_view text);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    GaussRat constant_term() const;
    // Only valid when is_constant().
    GaussRat as_constant() const { return constant_term(); }
    unsigned total_degree() const;
    unsigned degree_in(std::string_view name) const;
    std::set<std::string> variables() const;
    const std::pair<const Monomial, GaussRat>& leading() const { return *t_.begin(); }

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }
    CoeffPoly& operator*=(const GaussRat& s);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator*(CoeffPoly a, const GaussRat& s) { return a *= s; }
    friend CoeffPoly operator*(const GaussRat& s, CoeffPoly a) { return a *= s; }
    CoeffPoly operator-() const;
    CoeffPoly pow(unsigned e) const;

    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.t_ == b.t_; }

    // Replace a parameter by a polynomial.
    CoeffPoly subs(const std::string& name, const CoeffPoly& value) const;
    // Coefficient of name^e, as a polynomial in the other parameters.
    CoeffPoly coeff_of(const std::string& name, unsigned e) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const GaussRat& c);
    Terms t_;
};

// q with q*b == a; throws NotDivisible / DivByZero.
CoeffPoly exact_div(const CoeffPoly& a, const CoeffPoly& b);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);
    static PolyMatrix from_rows(const std::vector<std::vector<CoeffPoly>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    CoeffPoly& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const CoeffPoly& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<CoeffPoly> e_;
};

// Fraction-free elimination; throws NonSquare.
CoeffPoly bareiss_det(const PolyMatrix& m);

}  // namespace svw
