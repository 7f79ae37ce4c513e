#include "svw/diffop.hpp"

#include <sstream>

namespace svw {

namespace {

// c (c-1) ... (c-k+1)
Rat falling(int c, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= c - i;
    return r;
}

Rat binom(int n, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::string coeff_text(const CoeffPoly& c, bool& negative) {
    std::string s = c.str();
    negative = false;
    if (c.terms().size() == 1 && !s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    } else if (c.terms().size() > 1) {
        s = "(" + s + ")";
    }
    return s;
}

}  // namespace

ScalarOp ScalarOp::constant(std::size_t n, const CoeffPoly& c) {
    ScalarOp s(n);
    s.add(Key(2 * n, 0), c);
    return s;
}

ScalarOp ScalarOp::coord(std::size_t n, std::size_t i) {
    Key k(2 * n, 0);
    k[i] = 1;
    ScalarOp s(n);
    s.add(k, 1);
    return s;
}

ScalarOp ScalarOp::partial(std::size_t n, std::size_t i, unsigned k) {
    Key key(2 * n, 0);
    key[n + i] = static_cast<int>(k);
    ScalarOp s(n);
    s.add(key, 1);
    return s;
}

ScalarOp ScalarOp::monomial(std::size_t n, const std::vector<int>& x, const std::vector<int>& d, const CoeffPoly& c) {
    Key key(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        key[i] = i < x.size() ? x[i] : 0;
        key[n + i] = i < d.size() ? d[i] : 0;
    }
    ScalarOp s(n);
    s.add(key, c);
    return s;
}

void ScalarOp::add(const Key& k, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

int ScalarOp::order() const {
    int best = -1;
    for (const auto& [k, c] : t_) {
        int o = 0;
        for (std::size_t i = 0; i < n_; ++i) o += k[n_ + i];
        best = std::max(best, o);
    }
    return best;
}

ScalarOp ScalarOp::coefficient_of(const std::vector<int>& d) const {
    ScalarOp out(n_);
    for (const auto& [k, c] : t_) {
        bool match = true;
        for (std::size_t i = 0; i < n_ && match; ++i) match = k[n_ + i] == (i < d.size() ? d[i] : 0);
        if (!match) continue;
        Key z = k;
        for (std::size_t i = 0; i < n_; ++i) z[n_ + i] = 0;
        out.add(z, c);
    }
    return out;
}

ScalarOp& ScalarOp::operator+=(const ScalarOp& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw SizeMismatch("coordinate count mismatch");
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

ScalarOp& ScalarOp::operator-=(const ScalarOp& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw SizeMismatch("coordinate count mismatch");
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

ScalarOp& ScalarOp::operator*=(const CoeffPoly& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, c] : t_) c = c * s;
    return *this;
}

// (x^a d^b)(x^c d^e) = sum_k prod_i C(b_i,k_i) (c_i)_{k_i} x^{a+c-k} d^{b+e-k}
ScalarOp operator*(const ScalarOp& a, const ScalarOp& b) {
    std::size_t n = a.n_ ? a.n_ : b.n_;
    if (a.n_ && b.n_ && a.n_ != b.n_) throw SizeMismatch("coordinate count mismatch");
    ScalarOp out(n);
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            CoeffPoly cc = ca * cb;
            std::vector<int> kk(n, 0);
            while (true) {
                Rat w = 1;
                for (std::size_t i = 0; i < n && w != 0; ++i)
                    w *= binom(ka[n + i], kk[i]) * falling(kb[i], kk[i]);
                if (w != 0) {
                    ScalarOp::Key key(2 * n);
                    for (std::size_t i = 0; i < n; ++i) {
                        key[i] = ka[i] + kb[i] - kk[i];
                        key[n + i] = ka[n + i] + kb[n + i] - kk[i];
                    }
                    out.add(key, cc * GaussRat(w));
                }
                std::size_t i = 0;
                while (i < n && kk[i] == ka[n + i]) kk[i++] = 0;
                if (i == n) break;
                ++kk[i];
            }
        }
    }
    return out;
}

ScalarOp ScalarOp::subs(const std::string& name, const CoeffPoly& v) const {
    ScalarOp out(n_);
    for (const auto& [k, c] : t_) out.add(k, c.subs(name, v));
    return out;
}

std::string ScalarOp::str(const std::vector<std::string>& coords) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        std::string mono;
        auto append = [&](const std::string& s) {
            if (!mono.empty()) mono += "*";
            mono += s;
        };
        for (std::size_t i = 0; i < n_; ++i)
            if (k[i] != 0) append(k[i] == 1 ? coords[i] : coords[i] + "^" + std::to_string(k[i]));
        for (std::size_t i = 0; i < n_; ++i)
            if (k[n_ + i] != 0)
                append(k[n_ + i] == 1 ? "d_" + coords[i] : "d_" + coords[i] + "^" + std::to_string(k[n_ + i]));
        bool neg = false;
        std::string cs = coeff_text(c, neg);
        std::string term;
        if (mono.empty()) term = cs;
        else if (cs == "1") term = mono;
        else term = cs + "*" + mono;
        if (first) os << (neg ? "-" : "") << term;
        else os << (neg ? " - " : " + ") << term;
        first = false;
    }
    return os.str();
}

DiffOp::DiffOp(std::vector<std::string> coords, std::size_t k) : c_(std::move(coords)), k_(k) {
    e_.assign(k * k, ScalarOp(c_.size()));
}

DiffOp DiffOp::scalar(std::vector<std::string> coords, const ScalarOp& s, std::size_t k) {
    DiffOp d(std::move(coords), k);
    for (std::size_t i = 0; i < k; ++i) d.at(i, i) = s;
    return d;
}

DiffOp DiffOp::tensor(std::vector<std::string> coords, const ScalarOp& s, const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("matrix must be square");
    DiffOp d(std::move(coords), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) d.at(i, j) = s * m.at(i, j);
    return d;
}

DiffOp DiffOp::identity(std::vector<std::string> coords, std::size_t k) {
    std::size_t n = coords.size();
    return scalar(std::move(coords), ScalarOp::constant(n, 1), k);
}

bool DiffOp::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

int DiffOp::order() const {
    int o = -1;
    for (const auto& s : e_) o = std::max(o, s.order());
    return o;
}

void DiffOp::check_same(const DiffOp& o) const {
    if (c_ != o.c_ || k_ != o.k_) throw SizeMismatch("operators on different coordinates or matrix sizes");
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

DiffOp& DiffOp::operator*=(const CoeffPoly& s) {
    for (auto& e : e_) e *= s;
    return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    a.check_same(b);
    DiffOp out(a.c_, a.k_);
    for (std::size_t i = 0; i < a.k_; ++i)
        for (std::size_t l = 0; l < a.k_; ++l) {
            if (a.at(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < a.k_; ++j)
                if (!b.at(l, j).is_zero()) out.at(i, j) += a.at(i, l) * b.at(l, j);
        }
    return out;
}

DiffOp DiffOp::subs(const std::string& name, const CoeffPoly& v) const {
    DiffOp out(c_, k_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].subs(name, v);
    return out;
}

std::string DiffOp::str() const {
    if (is_zero()) return "0";
    if (k_ == 1) return e_[0].str(c_);
    std::string out;
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j) {
            if (at(i, j).is_zero()) continue;
            if (!out.empty()) out += "; ";
            out += "[" + std::to_string(i) + "," + std::to_string(j) + "] " + at(i, j).str(c_);
        }
    return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp laplace_mass(const DiffOp& a, const std::string& mass, const std::string& new_coord) {
    auto coords = a.coords();
    coords.push_back(new_coord);
    std::size_t n = a.ncoords(), m = n + 1;
    DiffOp out(coords, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (const auto& [k, c] : a.at(i, j).terms()) {
                unsigned top = c.degree_in(mass);
                for (unsigned e = 0; e <= top; ++e) {
                    CoeffPoly ce = c.coeff_of(mass, e);
                    if (ce.is_zero()) continue;
                    ScalarOp::Key key(2 * m, 0);
                    for (std::size_t q = 0; q < n; ++q) {
                        key[q] = k[q];
                        key[m + q] = k[n + q];
                    }
                    key[m + n] = static_cast<int>(e);
                    out.at(i, j).add(key, ce);
                }
            }
    return out;
}

DiffOp linear_change(const DiffOp& a, const std::vector<std::string>& new_coords,
                     const std::vector<std::vector<GaussRat>>& A, const std::vector<std::vector<GaussRat>>& inverse) {
    std::size_t n = a.ncoords(), m = new_coords.size();
    std::vector<ScalarOp> x(n, ScalarOp(m)), dx(n, ScalarOp(m));
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t q = 0; q < m; ++q) {
            if (!inverse[mu][q].is_zero()) x[mu] += ScalarOp::coord(m, q) * CoeffPoly(inverse[mu][q]);
            if (!A[q][mu].is_zero()) dx[mu] += ScalarOp::partial(m, q) * CoeffPoly(A[q][mu]);
        }
    DiffOp out(new_coords, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (const auto& [k, c] : a.at(i, j).terms()) {
                ScalarOp t = ScalarOp::constant(m, c);
                for (std::size_t mu = 0; mu < n; ++mu) {
                    if (k[mu] < 0) throw std::invalid_argument("linear_change needs polynomial coefficients");
                    for (int e = 0; e < k[mu]; ++e) t = t * x[mu];
                }
                for (std::size_t mu = 0; mu < n; ++mu)
                    for (int e = 0; e < k[n + mu]; ++e) t = t * dx[mu];
                out.at(i, j) += t;
            }
    return out;
}

}  // namespace svw
