#include "svw/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace svw {

std::string rat_str(const Rat& q) { return q.get_str(); }

GaussRat GaussRat::inverse() const {
    Rat n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw DivByZero("division by zero");
    return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussRat::str() const {
    if (is_real()) return rat_str(re_);
    std::string ims;
    if (im_ == 1) ims = "i";
    else if (im_ == -1) ims = "-i";
    else ims = rat_str(im_) + "*i";
    if (sgn(re_) == 0) return ims;
    if (ims[0] == '-') return rat_str(re_) + ims;
    return rat_str(re_) + "+" + ims;
}

GaussRat GaussRat::parse(std::string_view s) {
    CoeffPoly p = CoeffPoly::parse(s);
    if (!p.is_constant()) throw ParseError("not a constant: " + std::string(s));
    return p.constant_term();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const std::string& name, unsigned e) {
    Monomial m;
    if (e) m.f_.emplace_back(name, e);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto& [_, e] : f_) d += e;
    return d;
}

unsigned Monomial::degree_in(std::string_view name) const {
    for (auto& [n, e] : f_)
        if (n == name) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) r.f_.push_back(*a++);
        else if (a == f_.end() || b->first < a->first) r.f_.push_back(*b++);
        else {
            r.f_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
    Monomial r;
    auto a = f_.begin();
    for (auto& [n, e] : o.f_) {
        while (a != f_.end() && a->first < n) r.f_.push_back(*a++);
        if (a == f_.end() || a->first != n || a->second < e) return false;
        if (a->second > e) r.f_.emplace_back(n, a->second - e);
        ++a;
    }
    while (a != f_.end()) r.f_.push_back(*a++);
    out = std::move(r);
    return true;
}

Monomial Monomial::without(std::string_view name) const {
    Monomial r;
    for (auto& p : f_)
        if (p.first != name) r.f_.push_back(p);
    return r;
}

std::string Monomial::str() const {
    std::string s;
    for (auto& [n, e] : f_) {
        if (!s.empty()) s += '*';
        s += n;
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto& fa = a.factors();
    auto& fb = b.factors();
    auto ia = fa.begin(), ib = fb.begin();
    while (ia != fa.end() && ib != fb.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return ia != fa.end() && ib == fb.end();
}

// --------------------------------------------------------------- CoeffPoly

CoeffPoly::CoeffPoly(const GaussRat& v) {
    if (!v.is_zero()) t_.emplace(Monomial{}, v);
}

CoeffPoly::CoeffPoly(const Monomial& m, const GaussRat& c) {
    if (!c.is_zero()) t_.emplace(m, c);
}

void CoeffPoly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

GaussRat CoeffPoly::constant_term() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? GaussRat{} : it->second;
}

unsigned CoeffPoly::total_degree() const { return t_.empty() ? 0 : t_.begin()->first.degree(); }

unsigned CoeffPoly::degree_in(std::string_view name) const {
    unsigned d = 0;
    for (auto& [m, _] : t_) d = std::max(d, m.degree_in(name));
    return d;
}

std::set<std::string> CoeffPoly::variables() const {
    std::set<std::string> v;
    for (auto& [m, _] : t_)
        for (auto& [n, e] : m.factors()) v.insert(n);
    return v;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const GaussRat& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly r;
    if (a.is_constant() && b.is_constant()) return CoeffPoly(a.constant_term() * b.constant_term());
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

CoeffPoly CoeffPoly::pow(unsigned e) const {
    CoeffPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

CoeffPoly CoeffPoly::subs(const std::string& name, const CoeffPoly& value) const {
    CoeffPoly r;
    for (auto& [m, c] : t_) {
        unsigned e = m.degree_in(name);
        CoeffPoly term(m.without(name), c);
        r += e ? term * value.pow(e) : term;
    }
    return r;
}

CoeffPoly CoeffPoly::coeff_of(const std::string& name, unsigned e) const {
    CoeffPoly r;
    for (auto& [m, c] : t_)
        if (m.degree_in(name) == e) r.add_term(m.without(name), c);
    return r;
}

std::string CoeffPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
        std::string cs;
        bool neg = false;
        if (c.is_real()) {
            neg = sgn(c.re()) < 0;
            Rat a = abs(c.re());
            if (a != 1 || m.is_one()) cs = rat_str(a);
        } else if (sgn(c.re()) == 0) {
            neg = sgn(c.im()) < 0;
            Rat a = abs(c.im());
            cs = (a == 1 ? std::string() : rat_str(a) + "*") + "i";
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        s += cs;
        if (!m.is_one()) {
            if (!cs.empty()) s += '*';
            s += m.str();
        }
    }
    return s;
}

// ------------------------------------------------------------------ parser

namespace {

struct Parser {
    std::string_view s;
    std::size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(p) + " in '" + std::string(s) + "'");
    }

    CoeffPoly expr() {
        CoeffPoly r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    CoeffPoly term() {
        CoeffPoly r = power();
        for (;;) {
            if (eat('*')) r *= power();
            else if (eat('/')) {
                CoeffPoly d = power();
                if (d.is_zero()) throw DivByZero("division by zero in '" + std::string(s) + "'");
                r = d.is_constant() ? r * d.constant_term().inverse() : exact_div(r, d);
            } else
                return r;
        }
    }
    CoeffPoly power() {
        CoeffPoly b = atom();
        if (eat('^')) {
            ws();
            std::size_t q = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (q == p) fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(std::string(s.substr(q, p - q)))));
        }
        return b;
    }
    CoeffPoly atom() {
        ws();
        if (p >= s.size()) fail("unexpected end");
        char c = s[p];
        if (c == '(') {
            ++p;
            CoeffPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++p;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            return CoeffPoly(Rat(mpz_class(std::string(s.substr(q, p - q)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t q = p;
            while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
            std::string id(s.substr(q, p - q));
            if (id == "i") return CoeffPoly(GaussRat::i());
            return CoeffPoly::var(id);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

CoeffPoly CoeffPoly::parse(std::string_view text) {
    Parser ps{text};
    CoeffPoly r = ps.expr();
    ps.ws();
    if (ps.p != text.size()) ps.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------- division

CoeffPoly exact_div(const CoeffPoly& a, const CoeffPoly& b) {
    if (b.is_zero()) throw DivByZero("exact_div by zero");
    if (b.is_constant()) return a * b.constant_term().inverse();
    const auto& [lm, lc] = b.leading();
    GaussRat inv = lc.inverse();
    CoeffPoly rem = a, q;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        Monomial qm;
        if (!rm.divide(lm, qm)) throw NotDivisible(a.str() + " is not divisible by " + b.str());
        CoeffPoly t(qm, rc * inv);
        q += t;
        rem -= t * b;
    }
    return q;
}

// ------------------------------------------------------------------ matrix

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CoeffPoly(1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<CoeffPoly>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    PolyMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap(at(a, j), at(b, j));
}

CoeffPoly bareiss_det(const PolyMatrix& in) {
    if (in.rows() != in.cols())
        throw NonSquare("determinant of a " + std::to_string(in.rows()) + "x" + std::to_string(in.cols()) +
                        " matrix");
    const std::size_t n = in.rows();
    if (n == 0) return CoeffPoly(1);
    PolyMatrix m = in;
    CoeffPoly prev(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return CoeffPoly();
            m.swap_rows(k, piv);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                CoeffPoly v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(v, prev);
            }
            m.at(i, k) = CoeffPoly();
        }
        prev = m.at(k, k);
    }
    CoeffPoly d = m.at(n - 1, n - 1);
    return neg ? -d : d;
}

}  // namespace svw
