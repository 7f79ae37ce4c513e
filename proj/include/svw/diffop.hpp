#pragma once

#include "svw/coeff.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace svw {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// c * x^a * d^b over n coordinates: key = (a_0..a_{n-1}, b_0..b_{n-1}), a Laurent, b >= 0.
// Coefficients are written to the left of derivatives.
class ScalarOp {
public:
    using Key = std::vector<int>;
    using Terms = std::map<Key, CoeffPoly>;

    ScalarOp() = default;
    explicit ScalarOp(std::size_t ncoords) : n_(ncoords) {}

    static ScalarOp constant(std::size_t n, const CoeffPoly& c);
    static ScalarOp coord(std::size_t n, std::size_t i);
    static ScalarOp partial(std::size_t n, std::size_t i, unsigned k = 1);
    static ScalarOp monomial(std::size_t n, const std::vector<int>& x, const std::vector<int>& d,
                             const CoeffPoly& c);

    std::size_t ncoords() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Key& k, const CoeffPoly& c);
    // highest total derivative order; -1 for the zero operator
    int order() const;
    // Coefficient of d^b (b given as derivative multi-index), as a zero-order operator.
    ScalarOp coefficient_of(const std::vector<int>& d) const;

    ScalarOp& operator+=(const ScalarOp& o);
    ScalarOp& operator-=(const ScalarOp& o);
    ScalarOp& operator*=(const CoeffPoly& s);
    friend ScalarOp operator+(ScalarOp a, const ScalarOp& b) { return a += b; }
    friend ScalarOp operator-(ScalarOp a, const ScalarOp& b) { return a -= b; }
    friend ScalarOp operator*(ScalarOp a, const CoeffPoly& s) { return a *= s; }
    friend ScalarOp operator*(const CoeffPoly& s, ScalarOp a) { return a *= s; }
    ScalarOp operator-() const { return *this * CoeffPoly(-1); }
    // composition, Leibniz-expanded
    friend ScalarOp operator*(const ScalarOp& a, const ScalarOp& b);
    friend bool operator==(const ScalarOp&, const ScalarOp&) = default;

    ScalarOp subs(const std::string& name, const CoeffPoly& v) const;
    std::string str(const std::vector<std::string>& coords) const;

private:
    std::size_t n_ = 0;
    Terms t_;
};

// k x k matrix of scalar operators on named coordinates.
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(std::vector<std::string> coords, std::size_t k);

    static DiffOp scalar(std::vector<std::string> coords, const ScalarOp& s, std::size_t k = 1);  // s (x) Id
    // s (x) m for a constant or parameter matrix m
    static DiffOp tensor(std::vector<std::string> coords, const ScalarOp& s, const PolyMatrix& m);
    static DiffOp identity(std::vector<std::string> coords, std::size_t k);

    const std::vector<std::string>& coords() const { return c_; }
    std::size_t ncoords() const { return c_.size(); }
    std::size_t size() const { return k_; }
    ScalarOp& at(std::size_t i, std::size_t j) { return e_[i * k_ + j]; }
    const ScalarOp& at(std::size_t i, std::size_t j) const { return e_[i * k_ + j]; }

    bool is_zero() const;
    int order() const;
    // Entry (i,j) nonzero?
    bool has_entry(std::size_t i, std::size_t j) const { return !at(i, j).is_zero(); }

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const CoeffPoly& s);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const CoeffPoly& s) { return a *= s; }
    friend DiffOp operator*(const CoeffPoly& s, DiffOp a) { return a *= s; }
    DiffOp operator-() const { return *this * CoeffPoly(-1); }
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp&, const DiffOp&) = default;

    DiffOp subs(const std::string& name, const CoeffPoly& v) const;
    // Canonical text: "[i,j] term + term; ..." (scalar operators print without the slot).
    std::string str() const;

private:
    void check_same(const DiffOp& o) const;
    std::vector<std::string> c_;
    std::size_t k_ = 0;
    std::vector<ScalarOp> e_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Formal Laplace transform in the mass: the parameter `mass` is replaced by d/d(new_coord),
// which is appended to the coordinate list (it commutes with everything else).
DiffOp laplace_mass(const DiffOp& a, const std::string& mass, const std::string& new_coord);

// Express an operator with polynomial coefficients in new linear coordinates y = A x.
// inverse[mu] gives x_mu as a linear form in y; A[a][mu] = dy_a/dx_mu.
DiffOp linear_change(const DiffOp& a, const std::vector<std::string>& new_coords,
                     const std::vector<std::vector<GaussRat>>& A, const std::vector<std::vector<GaussRat>>& inverse);

}  // namespace svw
