#include "svw/realize.hpp"

#include "svw/linalg.hpp"


#include <functional>

namespace svw {

// ---------------------------------------------------------------- Laurent

Laurent laurent(int e, const CoeffPoly& c) {
    Laurent f;
    if (!c.is_zero()) f[e] = c;
    return f;
}

namespace {
void add_to(Laurent& f, int e, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = f.find(e);
    if (it == f.end()) {
        f.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
}
}  // namespace

Laurent deriv(const Laurent& f, unsigned k) {
    Laurent out;
    for (const auto& [e, c] : f) {
        Rat w = 1;
        for (unsigned i = 0; i < k; ++i) w *= e - static_cast<int>(i);
        add_to(out, e - static_cast<int>(k), c * GaussRat(w));
    }
    return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    for (const auto& [e, c] : b) add_to(out, e, c);
    return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    for (const auto& [e, c] : b) add_to(out, e, -c);
    return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_to(out, ea + eb, ca * cb);
    return out;
}

Laurent operator*(const CoeffPoly& s, const Laurent& a) {
    Laurent out;
    for (const auto& [e, c] : a) add_to(out, e, s * c);
    return out;
}

bool is_zero(const Laurent& f) { return f.empty(); }

CoeffPoly residue(const Laurent& f) {
    auto it = f.find(-1);
    return it == f.end() ? CoeffPoly() : it->second;
}

std::string str(const Laurent& f, const std::string& var) {
    if (f.empty()) return "0";
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        std::string c = it->second.str();
        if (it->second.terms().size() > 1) c = "(" + c + ")";
        std::string mono = it->first == 0 ? "" : it->first == 1 ? var : var + "^" + std::to_string(it->first);
        std::string term = mono.empty() ? c : c == "1" ? mono : c == "-1" ? "-" + mono : c + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

// ---------------------------------------------------------------- function-form generators

FuncGen func_of(const GenSymbol& g) {
    FuncGen f;
    int n = g.twice / 2;
    switch (g.fam) {
        case Fam::L: f = {0, laurent(n + 1)}; break;
        case Fam::Y:
            if (g.twice % 2 == 0) throw InvalidSymbol("integral Y mode has no function form t^{m+1/2}: " + g.str());
            f = {1, laurent((g.twice + 1) / 2)};
            f.i = g.i;
            break;
        case Fam::M: f = {2, laurent(n)}; break;
        case Fam::R:
            f = {3, laurent(n)};
            f.i = g.i;
            f.j = g.j;
            break;
        case Fam::Z: throw InvalidSymbol("central generator has no vector-field image");
    }
    return f;
}

std::string str(const FuncGen& g) {
    static const char* names[] = {"L", "Y", "M", "R"};
    std::string s = g.k <= 3 ? names[g.k] : "L^(" + std::to_string(g.k) + ")";
    if (g.k == 3) s += std::to_string(g.i) + std::to_string(g.j);
    else if (g.k == 1 && g.i) s += std::to_string(g.i);
    return s + "[" + str(g.f) + "]";
}

std::vector<FuncGen> md_bracket(const CoeffPoly& eps, int d, const FuncGen& a, const FuncGen& b) {
    if (a.k + b.k >= d) return {};
    Laurent h;
    if (a.k == 0) h = (CoeffPoly(1) + CoeffPoly(b.k) * eps) * (deriv(a.f) * b.f) - a.f * deriv(b.f);
    else if (b.k == 0) h = b.f * deriv(a.f) - (CoeffPoly(1) + CoeffPoly(a.k) * eps) * (deriv(b.f) * a.f);
    else h = deriv(a.f) * b.f - a.f * deriv(b.f);
    if (is_zero(h)) return {};
    return {FuncGen{a.k + b.k, h}};
}

// ---------------------------------------------------------------- helpers

namespace {

const CoeffPoly kM = CoeffPoly::var(kMass);

std::vector<std::string> tr_coords() { return {"t", "r"}; }
std::vector<std::string> trz_coords() { return {"t", "r", "zeta"}; }

std::vector<std::string> pi_tilde_coords(int d) {
    if (d == 1) return trz_coords();
    std::vector<std::string> c{"t"};
    for (int i = 1; i <= d; ++i) c.push_back("r" + std::to_string(i));
    c.push_back("zeta");
    return c;
}

std::vector<std::string> md_coords(int d) {
    if (d == 2) return tr_coords();
    if (d == 3) return trz_coords();
    std::vector<std::string> c;
    for (int i = 0; i < d; ++i) c.push_back("t" + std::to_string(i));
    return c;
}

// s * f(t) * x^xs * d^ds, t = coordinate 0
ScalarOp fmul(std::size_t n, const Laurent& f, std::vector<int> xs = {}, std::vector<int> ds = {},
              const CoeffPoly& s = CoeffPoly(1)) {
    xs.resize(n, 0);
    ds.resize(n, 0);
    ScalarOp out(n);
    for (const auto& [e, c] : f) {
        auto x = xs;
        x[0] += e;
        out += ScalarOp::monomial(n, x, ds, c * s);
    }
    return out;
}

std::vector<int> unit(std::size_t n, std::size_t i, int v = 1) {
    std::vector<int> u(n, 0);
    u[i] = v;
    return u;
}

PolyMatrix mat(std::size_t k, std::initializer_list<std::tuple<std::size_t, std::size_t, CoeffPoly>> entries) {
    PolyMatrix m(k, k);
    for (const auto& [i, j, v] : entries) m.at(i, j) = v;
    return m;
}

PolyMatrix diag(const std::vector<CoeffPoly>& v) {
    PolyMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, i) = v[i];
    return m;
}

PolyMatrix mat_comm(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t k = a.rows();
    PolyMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            CoeffPoly s;
            for (std::size_t l = 0; l < k; ++l) s += a.at(i, l) * b.at(l, j) - b.at(i, l) * a.at(l, j);
            out.at(i, j) = s;
        }
    return out;
}

PolyMatrix mat_scale(const PolyMatrix& a, const CoeffPoly& s) {
    PolyMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) * s;
    return out;
}

std::string mat_str(const PolyMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m.at(i, j).str();
    }
    return s + "]";
}

// Zero-order operator of degree <= 2 in coordinate ri -> (coefficient of r^2, r, 1) as Laurent in t.
PotTriple potential_of(const ScalarOp& s, std::size_t ri = 1) {
    if (s.order() > 0) throw NotFirstOrder("not a potential: " + s.str({"t", "r", "zeta"}));
    PotTriple out;
    std::size_t n = s.ncoords();
    for (const auto& [k, c] : s.terms()) {
        for (std::size_t q = 1; q < n; ++q)
            if (q != ri && k[q] != 0) throw NotFirstOrder("potential depends on a spatial coordinate other than r");
        if (k[ri] < 0 || k[ri] > 2) throw NotFirstOrder("potential of degree > 2 in r");
        add_to(out[2 - k[ri]], k[0], c);
    }
    return out;
}

ScalarOp potential_op(std::size_t n, const PotTriple& V, std::size_t ri = 1) {
    return fmul(n, V[0], unit(n, ri, 2)) + fmul(n, V[1], unit(n, ri, 1)) + fmul(n, V[2]);
}

std::string triple_str(const PotTriple& v) { return "(" + str(v[0]) + ", " + str(v[1]) + ", " + str(v[2]) + ")"; }

bool triple_eq(const PotTriple& a, const PotTriple& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

// Generator monomials: sv families with t^e, the e range covering modes |2 index| <= window.
std::vector<FuncGen> sv_func_window(int window) {
    std::vector<FuncGen> out;
    for (const auto& g : symbols_in_window(AlgebraId::sv(), window)) out.push_back(func_of(g));
    return out;
}

// Rank of a family of operators over constant coefficients.
std::size_t op_rank(const std::vector<DiffOp>& ops) {
    std::map<std::pair<std::size_t, ScalarOp::Key>, std::size_t> idx;
    for (const auto& op : ops)
        for (std::size_t e = 0; e < op.size() * op.size(); ++e)
            for (const auto& [k, c] : op.at(e / op.size(), e % op.size()).terms()) idx.emplace(std::pair{e, k}, 0);
    std::size_t col = 0;
    for (auto& [k, v] : idx) v = col++;
    std::vector<Row> rows;
    for (const auto& op : ops) {
        Row r(col);
        for (std::size_t e = 0; e < op.size() * op.size(); ++e)
            for (const auto& [k, c] : op.at(e / op.size(), e % op.size()).terms()) {
                if (!c.is_constant()) throw std::invalid_argument("op_rank needs constant coefficients");
                r[idx.at({e, k})] = c.as_constant();
            }
        rows.push_back(std::move(r));
    }
    return rref(rows, col).rank();
}

std::string fam_name(const GenSymbol& g) {
    switch (g.fam) {
        case Fam::L: return "L";
        case Fam::Y: return "Y";
        case Fam::M: return "M";
        case Fam::R: return "R";
        default: return "Z";
    }
}

// Evaluate f on all pairs (in parallel), then report per group the first failure in pair order.
template <class Gen>
void pair_checks(SuiteReport& rep, const std::string& prefix, const std::vector<Gen>& gens,
                 const std::function<std::string(const Gen&)>& group_of, const std::function<std::string(const Gen&)>& name,
                 const std::function<std::string(const Gen&, const Gen&)>& defect) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) pairs.emplace_back(i, j);
    std::vector<std::string> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t p = 0; p < pairs.size(); ++p) out[p] = defect(gens[pairs[p].first], gens[pairs[p].second]);
    std::map<std::string, std::pair<std::size_t, std::string>> groups;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& a = gens[pairs[p].first];
        const auto& b = gens[pairs[p].second];
        auto g1 = group_of(a), g2 = group_of(b);
        if (g2 < g1) std::swap(g1, g2);
        auto& g = groups[g1 + "," + g2];
        ++g.first;
        if (!out[p].empty() && g.second.empty())
            g.second = "(" + name(a) + ", " + name(b) + ") -> " + out[p];
    }
    for (const auto& [key, g] : groups)
        rep.add(prefix + "[" + key + "]", g.second.empty(),
                g.second.empty() ? std::to_string(g.first) + " pairs" : g.second);
}

}  // namespace

// ---------------------------------------------------------------- coinduced presets

CoinducedRho rho_scalar(const CoeffPoly& lambda) {
    return {"scalar", mat(1, {{0, 0, -lambda}}), PolyMatrix(1, 1), PolyMatrix(1, 1)};
}

CoinducedRho rho_spinor(const CoeffPoly& lambda) {
    return {"spinor", diag({CoeffPoly::frac(1, 4) - lambda, CoeffPoly::frac(-1, 4) - lambda}), mat(2, {{1, 0, -1}}),
            PolyMatrix(2, 2)};
}

CoinducedRho rho_rank3() {
    return {"rank3", diag({-1, CoeffPoly::frac(-1, 2), 0}), PolyMatrix(3, 3), PolyMatrix(3, 3)};
}

CoinducedRho rho_rank3_nabla(bool as_displayed) {
    CoeffPoly s = as_displayed ? 1 : -1;
    return {as_displayed ? "rank3_nabla_displayed" : "rank3_nabla", diag({-1, CoeffPoly::frac(-1, 2), 0}),
            mat(3, {{0, 1, s}, {1, 2, s}}), mat(3, {{0, 2, s}})};
}

// [L_0, Y_{1/2}] = -Y_{1/2}/2, [L_0, M_1] = -M_1, [Y_{1/2}, M_1] = 0 (and [Y_{1/2}, Y_{1/2}] = 0 trivially).
std::string rho_relation_defect(const CoinducedRho& rho) {
    std::string out;
    auto chk = [&](const std::string& what, const PolyMatrix& lhs, const PolyMatrix& rhs) {
        if (!(lhs == rhs)) out += (out.empty() ? "" : "; ") + what + ": " + mat_str(lhs) + " != " + mat_str(rhs);
    };
    chk("[L0,Y]", mat_comm(rho.L0, rho.Y), mat_scale(rho.Y, CoeffPoly::frac(-1, 2)));
    chk("[L0,M]", mat_comm(rho.L0, rho.M), mat_scale(rho.M, -1));
    chk("[Y,M]", mat_comm(rho.Y, rho.M), PolyMatrix(rho.L0.rows(), rho.L0.rows()));
    return out;
}

// ---------------------------------------------------------------- RepId

RepId RepId::pi_tilde(int d) {
    RepId r;
    r.kind = RepKind::PiTilde;
    r.d = d;
    return r;
}
RepId RepId::pi_lambda(const CoeffPoly& lambda) {
    RepId r;
    r.kind = RepKind::PiLambda;
    r.lambda = lambda;
    return r;
}
RepId RepId::dirac_sigma(const CoeffPoly& lambda, const CoeffPoly& e10) {
    RepId r;
    r.kind = RepKind::DiracSigma;
    r.lambda = lambda;
    r.e10 = e10;
    return r;
}
RepId RepId::md(const CoeffPoly& eps, int d) {
    if (d < 2 || d > 5) throw std::invalid_argument("md: d must be in 2..5");
    RepId r;
    r.kind = RepKind::Md;
    r.eps = eps;
    r.d = d;
    return r;
}
RepId RepId::coinduced(CoinducedRho rho) {
    auto defect = rho_relation_defect(rho);
    if (!defect.empty()) throw std::invalid_argument("rho does not represent <L0, Y1/2, M1>: " + defect);
    RepId r;
    r.kind = RepKind::Coinduced;
    r.rho = std::move(rho);
    return r;
}
RepId RepId::conformal(int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("conformal: d must be 1, 2 or 3");
    RepId r;
    r.kind = RepKind::Conformal;
    r.d = d;
    return r;
}

std::string RepId::name() const {
    switch (kind) {
        case RepKind::PiTilde: return "pi_tilde(" + std::to_string(d) + ")";
        case RepKind::PiLambda: return "pi_lambda(" + lambda.str() + ")";
        case RepKind::DiracSigma: return "dirac_sigma(" + lambda.str() + ")";
        case RepKind::Md: return "md(" + eps.str() + "," + std::to_string(d) + ")";
        case RepKind::Coinduced: return "coinduced(" + rho.name + ")";
        case RepKind::Conformal: return "conformal(" + std::to_string(d) + ")";
    }
    return "?";
}

RepId RepId::parse(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon), arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto num = [&](int dflt) { return arg.empty() ? dflt : std::stoi(arg); };
    CoeffPoly lam = CoeffPoly::var("lambda"), eps = CoeffPoly::var("eps");
    if (head == "pi_tilde") return pi_tilde(num(1));
    if (head == "pi_lambda") return pi_lambda(lam);
    if (head == "dirac") return dirac_sigma(lam);
    if (head == "md") return md(eps, num(3));
    if (head == "conformal") return conformal(num(1));
    if (head == "coinduced") {
        if (arg == "scalar") return coinduced(rho_scalar(lam));
        if (arg == "spinor") return coinduced(rho_spinor(lam));
        if (arg == "rank3") return coinduced(rho_rank3());
        if (arg == "rank3_nabla") return coinduced(rho_rank3_nabla());
        if (arg == "rank3_nabla_displayed") return coinduced(rho_rank3_nabla(true));
    }
    throw std::invalid_argument("unknown representation '" + s + "'");
}

AlgebraId rep_algebra(const RepId& rep) {
    switch (rep.kind) {
        case RepKind::PiTilde: return AlgebraId::sv(rep.d);
        case RepKind::Conformal: return AlgebraId::sch(rep.d);
        case RepKind::Md: throw InvalidSymbol("md reps are checked in function form");
        default: return AlgebraId::sv();
    }
}

// ---------------------------------------------------------------- generators

namespace {

DiffOp pi_tilde_gen(int d, int rot_sign, const FuncGen& g) {
    auto coords = pi_tilde_coords(d);
    std::size_t n = coords.size(), z = n - 1;
    ScalarOp s(n);
    switch (g.k) {
        case 0:
            s = -fmul(n, g.f, {}, unit(n, 0));
            for (int i = 1; i <= d; ++i) {
                s -= fmul(n, deriv(g.f), unit(n, i), unit(n, i), CoeffPoly::frac(1, 2));
                s -= fmul(n, deriv(g.f, 2), unit(n, i, 2), unit(n, z), CoeffPoly::frac(1, 4));
            }
            break;
        case 1: {
            std::size_t i = d == 1 ? 1 : g.i;
            if (i < 1 || i > static_cast<std::size_t>(d)) throw InvalidSymbol("bad Y component");
            s = -fmul(n, g.f, {}, unit(n, i)) - fmul(n, deriv(g.f), unit(n, i), unit(n, z));
            break;
        }
        case 2: s = -fmul(n, g.f, {}, unit(n, z)); break;
        case 3:
            if (d < 2 || g.i < 1 || g.j > d || g.i >= g.j) throw InvalidSymbol("bad rotation");
            s = fmul(n, g.f, unit(n, g.i), unit(n, g.j), rot_sign) - fmul(n, g.f, unit(n, g.j), unit(n, g.i), rot_sign);
            break;
        default: throw InvalidSymbol("bad family");
    }
    return DiffOp::scalar(coords, s);
}

// The mass-dependent scalar part shared by pi_lambda and the Dirac representation (lambda = 0).
ScalarOp pi0_scalar(const FuncGen& g) {
    std::size_t n = 2;
    switch (g.k) {
        case 0:
            return -fmul(n, g.f, {}, {1, 0}) - fmul(n, deriv(g.f), {0, 1}, {0, 1}, CoeffPoly::frac(1, 2)) -
                   fmul(n, deriv(g.f, 2), {0, 2}, {}, kM * CoeffPoly::frac(1, 4));
        case 1: return -fmul(n, g.f, {}, {0, 1}) - fmul(n, deriv(g.f), {0, 1}, {}, kM);
        case 2: return -fmul(n, g.f, {}, {}, kM);
        default: throw InvalidSymbol("bad family for the d = 1 realization");
    }
}

DiffOp md_gen(const CoeffPoly& eps, int d, const FuncGen& g) {
    auto coords = md_coords(d);
    std::size_t n = d;
    if (g.k < 0 || g.k >= d) throw InvalidSymbol("md family out of range");
    const Laurent& f = g.f;
    if (d == 2 || d == 3) {
        ScalarOp s(n);
        PolyMatrix m(n, n);
        CoeffPoly one(1);
        if (g.k == 0) {
            s = -fmul(n, f, {}, unit(n, 0)) - fmul(n, deriv(f), unit(n, 1), unit(n, 1), one + eps);
            if (d == 3) {
                s -= fmul(n, deriv(f), unit(n, 2), unit(n, 2), one + CoeffPoly(2) * eps);
                s -= fmul(n, deriv(f, 2), unit(n, 1, 2), unit(n, 2), (one + eps) * CoeffPoly::frac(1, 2));
            }
            DiffOp op = DiffOp::scalar(coords, s, n);
            std::vector<CoeffPoly> lam;
            for (int i = d - 1; i >= 0; --i) lam.push_back(CoeffPoly(i) * eps);
            return op + DiffOp::tensor(coords, fmul(n, deriv(f)), diag(lam));
        }
        if (g.k == 1) {
            s = -fmul(n, f, {}, unit(n, 1));
            if (d == 3) s -= fmul(n, deriv(f), unit(n, 1), unit(n, 2));
        } else {
            s = -fmul(n, f, {}, unit(n, 2));
        }
        return DiffOp::scalar(coords, s, n);
    }
    if (!eps.is_zero()) throw NoSolution("md_eps^d with eps != 0 and d >= 4 only exists with f0'' = 0");
    // L^(k)_g is the vector field whose t_m-component is the s^m coefficient of -g(t_0 + xi) s^k, xi = sum_{j>=1} t_j s^j,
    // truncated at s^d: -sum over multisets {j_1..j_i} with sum m - k of g^(i) prod t_j^{a_j} / a_j!.
    // Up to d = 4 this is the displayed formula (t_1 powers plus one t_j, j >= 2); from d = 5 on terms such as
    // g'' t_2^2 / 2 appear as well.
    int k = g.k;
    ScalarOp s(n);
    std::vector<int> mult(n, 0);
    std::function<void(int, int, int, Rat)> rec = [&](int jmin, int left, int i, Rat w) {
        if (left == 0) {
            int m = k;
            for (int j = 1; j < d; ++j) m += j * mult[j];
            s -= fmul(n, deriv(f, i), mult, unit(n, m), CoeffPoly(GaussRat(w)));
            return;
        }
        for (int j = jmin; j <= left; ++j) {
            ++mult[j];
            rec(j, left - j, i + 1, w / mult[j]);
            --mult[j];
        }
    };
    for (int m = k; m < d; ++m) rec(1, m - k, 0, Rat(1));
    return DiffOp::scalar(coords, s, n);
}

DiffOp coinduced_gen(const CoinducedRho& rho, const FuncGen& g) {
    auto coords = trz_coords();
    std::size_t n = 3, k = rho.L0.rows();
    const Laurent& f = g.f;
    auto T = [&](const ScalarOp& s, const PolyMatrix& m) { return DiffOp::tensor(coords, s, m); };
    switch (g.k) {
        case 0:
            return DiffOp::scalar(coords,
                                  -fmul(n, f, {}, unit(n, 0)) -
                                      fmul(n, deriv(f), unit(n, 1), unit(n, 1), CoeffPoly::frac(1, 2)) -
                                      fmul(n, deriv(f, 2), unit(n, 1, 2), unit(n, 2), CoeffPoly::frac(1, 4)),
                                  k) +
                   T(fmul(n, deriv(f)), rho.L0) + T(fmul(n, deriv(f, 2), unit(n, 1), {}, CoeffPoly::frac(1, 2)), rho.Y) +
                   T(fmul(n, deriv(f, 3), unit(n, 1, 2), {}, CoeffPoly::frac(1, 4)), rho.M);
        case 1:
            return DiffOp::scalar(coords, -fmul(n, f, {}, unit(n, 1)) - fmul(n, deriv(f), unit(n, 1), unit(n, 2)), k) +
                   T(fmul(n, deriv(f)), rho.Y) + T(fmul(n, deriv(f, 2), unit(n, 1)), rho.M);
        case 2: return DiffOp::scalar(coords, -fmul(n, f, {}, unit(n, 2)), k) + T(fmul(n, deriv(f)), rho.M);
        default: throw InvalidSymbol("bad family for a coinduced representation");
    }
}

}  // namespace

DiffOp rep_generator(const RepId& rep, const FuncGen& g) {
    switch (rep.kind) {
        case RepKind::PiTilde: return pi_tilde_gen(rep.d, rep.rot_sign, g);
        case RepKind::PiLambda: {
            DiffOp op = DiffOp::scalar(tr_coords(), pi0_scalar(g));
            if (g.k == 0) op -= DiffOp::scalar(tr_coords(), fmul(2, deriv(g.f), {}, {}, rep.lambda));
            return op;
        }
        case RepKind::DiracSigma: {
            auto c = tr_coords();
            DiffOp op = DiffOp::scalar(c, pi0_scalar(g), 2);
            if (g.k == 0) {
                op -= DiffOp::tensor(c, fmul(2, deriv(g.f)),
                                     diag({rep.lambda - CoeffPoly::frac(1, 4), rep.lambda + CoeffPoly::frac(1, 4)}));
                op -= DiffOp::tensor(c, fmul(2, deriv(g.f, 2), {0, 1}, {}, CoeffPoly::frac(1, 2) * rep.e10),
                                     mat(2, {{1, 0, 1}}));
            } else if (g.k == 1) {
                op -= DiffOp::tensor(c, fmul(2, deriv(g.f), {}, {}, rep.e10), mat(2, {{1, 0, 1}}));
            }
            return op;
        }
        case RepKind::Md: return md_gen(rep.eps, rep.d, g);
        case RepKind::Coinduced: return coinduced_gen(rep.rho, g);
        case RepKind::Conformal: throw InvalidSymbol("the conformal images are defined on modes only");
    }
    throw InvalidSymbol("unknown representation");
}

DiffOp rep_generator(const RepId& rep, const GenSymbol& g) {
    if (rep.kind == RepKind::Conformal) return conformal_image(rep.d, g);
    validate(rep_algebra(rep), g);
    return rep_generator(rep, func_of(g));
}

DiffOp rep_image(const RepId& rep, const LieElement& x) {
    DiffOp out;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        DiffOp t = rep_generator(rep, g) * c;
        if (first) out = t;
        else out += t;
        first = false;
    }
    if (first) {
        // zero element: shape from a harmless generator
        DiffOp shape = rep.kind == RepKind::Conformal ? conformal_image(rep.d, GenSymbol::L(0))
                                                      : rep_generator(rep, GenSymbol::L(0));
        return shape * CoeffPoly(0);
    }
    return out;
}

DiffOp rep_defect(const RepId& rep, const GenSymbol& a, const GenSymbol& b) {
    DiffOp ra = rep_generator(rep, a), rb = rep_generator(rep, b);
    LieElement br = bracket(rep_algebra(rep), a, b);
    return commutator(ra, rb) - rep_image(rep, br);
}

DiffOp rep_defect(const RepId& rep, const FuncGen& a, const FuncGen& b) {
    CoeffPoly eps = rep.kind == RepKind::Md ? rep.eps : CoeffPoly::frac(-1, 2);
    int d = rep.kind == RepKind::Md ? rep.d : 3;
    if (rep.kind == RepKind::Conformal || (rep.kind == RepKind::PiTilde && rep.d != 1))
        throw InvalidSymbol("function-form bracket only for the d = 1 realizations and md");
    DiffOp out = commutator(rep_generator(rep, a), rep_generator(rep, b));
    for (const auto& c : md_bracket(eps, d, a, b)) out -= rep_generator(rep, c);
    return out;
}

SuiteReport verify_rep(const RepId& rep, int window) {
    SuiteReport r;
    r.suite = "rep-check";
    r.config = {{"rep", rep.name()}, {"window", std::to_string(window)}};
    if (rep.kind == RepKind::Md) {
        std::vector<FuncGen> gens;
        for (int k = 0; k < rep.d; ++k)
            for (int e = -window / 2; e <= window / 2 + 1; ++e) gens.push_back({k, laurent(e)});
        pair_checks<FuncGen>(
            r, rep.name(), gens, [](const FuncGen& g) { return "L" + std::to_string(g.k); },
            [](const FuncGen& g) { return str(g); },
            [&](const FuncGen& a, const FuncGen& b) {
                DiffOp d = rep_defect(rep, a, b);
                return d.is_zero() ? std::string() : d.str();
            });
        return r;
    }
    auto syms = symbols_in_window(rep_algebra(rep), window);
    pair_checks<GenSymbol>(
        r, rep.name(), syms, fam_name, [](const GenSymbol& g) { return g.str(); },
        [&](const GenSymbol& a, const GenSymbol& b) {
            DiffOp d = rep_defect(rep, a, b);
            return d.is_zero() ? std::string() : d.str();
        });
    return r;
}

// ---------------------------------------------------------------- Schrodinger operators

DiffOp delta0() {
    return DiffOp::scalar(tr_coords(), ScalarOp::partial(2, 0) * (CoeffPoly(2) * kM) - ScalarOp::partial(2, 1, 2));
}

SchBracket schrodinger_bracket(const CoeffPoly& lambda, const FuncGen& g) {
    DiffOp X = rep_generator(RepId::pi_lambda(lambda + CoeffPoly::frac(1, 4)), g);
    DiffOp C = commutator(X, delta0());
    SchBracket out;
    ScalarOp phi_t = C.at(0, 0).coefficient_of({1, 0});
    ScalarOp phi(2);
    for (const auto& [k, c] : phi_t.terms()) phi.add(k, exact_div(c, CoeffPoly(2) * kM));
    for (const auto& [k, c] : phi.terms()) {
        if (k[1] != 0) throw NotFirstOrder("scaling factor depends on r");
        add_to(out.scaling, k[0], c);
    }
    ScalarOp V = C.at(0, 0) - phi * delta0().at(0, 0);
    out.potential = potential_of(V);
    return out;
}

SchBracket schrodinger_bracket_formula(const CoeffPoly& lambda, const FuncGen& g) {
    SchBracket out;
    CoeffPoly M2 = kM * kM;
    switch (g.k) {
        case 0:
            out.scaling = deriv(g.f);
            out.potential[0] = (M2 * CoeffPoly::frac(1, 2)) * deriv(g.f, 3);
            out.potential[2] = (CoeffPoly(2) * kM * lambda) * deriv(g.f, 2);
            break;
        case 1: out.potential[1] = (CoeffPoly(2) * M2) * deriv(g.f, 2); break;
        case 2: out.potential[2] = (CoeffPoly(2) * M2) * deriv(g.f); break;
        default: throw NotFirstOrder("generator outside L, Y, M");
    }
    return out;
}

namespace {
// S_X(D) = pi_{l + 1}(X) D - D pi_l(X)
DiffOp left_right(const RepId& left, const RepId& right, const FuncGen& g, const DiffOp& D) {
    return rep_generator(left, g) * D - D * rep_generator(right, g);
}
}  // namespace

PotTriple schrodinger_vector_action(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& D) {
    DiffOp op = delta0() + DiffOp::scalar(tr_coords(), potential_op(2, D));
    CoeffPoly l = lambda + CoeffPoly::frac(1, 4);
    DiffOp S = left_right(RepId::pi_lambda(l + CoeffPoly(1)), RepId::pi_lambda(l), g, op);
    return potential_of(S.at(0, 0));
}

PotTriple schrodinger_vector_action_formula(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& D) {
    const Laurent& f = g.f;
    Laurent f1 = deriv(f), f2 = deriv(f, 2), f3 = deriv(f, 3);
    CoeffPoly M2 = kM * kM, h(CoeffPoly::frac(1, 2)), m1(-1);
    PotTriple out;
    switch (g.k) {
        case 0:
            out[0] = m1 * ((-M2 * h) * f3 + CoeffPoly(2) * (f1 * D[0]) + f * deriv(D[0]));
            out[1] = m1 * (f * deriv(D[1]) + CoeffPoly::frac(3, 2) * (f1 * D[1]));
            out[2] = m1 * (f * deriv(D[2]) + f1 * D[2] - (CoeffPoly(2) * kM * lambda) * f2);
            break;
        case 1:
            out[1] = m1 * (CoeffPoly(2) * (f * D[0]) - (CoeffPoly(2) * M2) * f2);
            out[2] = m1 * (f * D[1]);
            break;
        case 2: out[2] = (CoeffPoly(2) * M2) * f1; break;
        default: throw NotFirstOrder("generator outside L, Y, M");
    }
    return out;
}

namespace {
PotTriple generic_potential() {
    // g0 = a t^2 + b t^-1, g1 = c t^3, g2 = e t + k: symbolic coefficients keep every term visible
    PotTriple D;
    D[0] = laurent(2, CoeffPoly::var("a")) + laurent(-1, CoeffPoly::var("b"));
    D[1] = laurent(3, CoeffPoly::var("c"));
    D[2] = laurent(1, CoeffPoly::var("e")) + laurent(0, CoeffPoly::var("k"));
    return D;
}

// coadjoint formula with its central parameter (declared below)
DualTriple coadjoint_displayed(const FuncGen& X, const DualTriple& G, const CoeffPoly& c);
}  // namespace

SuiteReport verify_schrodinger(int window) {
    SuiteReport r;
    r.suite = "schrodinger";
    r.config = {{"window", std::to_string(window)}};
    CoeffPoly lam = CoeffPoly::var("lambda");
    auto gens = sv_func_window(window);
    PotTriple D = generic_potential();

    std::string bad_br, bad_vec, bad_res;
    for (const auto& g : gens) {
        auto a = schrodinger_bracket(lam, g), b = schrodinger_bracket_formula(lam, g);
        if (bad_br.empty() && !(a.scaling == b.scaling && triple_eq(a.potential, b.potential)))
            bad_br = str(g) + ": " + str(a.scaling) + " | " + triple_str(a.potential);
        auto v = schrodinger_vector_action(lam, g, D), w = schrodinger_vector_action_formula(lam, g, D);
        if (bad_vec.empty() && !triple_eq(v, w)) bad_vec = str(g) + ": " + triple_str(v) + " vs " + triple_str(w);
        if (g.k == 0) {
            // restriction to Vect(S^1) at lambda = 0: the coadjoint-type density actions with c = -M^2/2, opposite sign
            auto s = schrodinger_vector_action(CoeffPoly(0), g, D);
            auto ad = coadjoint_displayed(g, D, -(kM * kM) * CoeffPoly::frac(1, 2));
            PotTriple neg{CoeffPoly(-1) * ad[0], CoeffPoly(-1) * ad[1], CoeffPoly(-1) * ad[2]};
            if (bad_res.empty() && !triple_eq(s, neg)) bad_res = str(g) + ": " + triple_str(s);
        }
    }
    r.add("[pi(X), Delta0] = phi Delta0 + V matches the three identities", bad_br.empty(), bad_br);
    r.add("vector action on Delta0 + V matches the displayed triples", bad_vec.empty(), bad_vec);
    r.add("d sigma_{1/4}(L_f) = -ad*(L_f) with c = -M^2/2 on all three densities", bad_res.empty(), bad_res);

    // S_[X,Y] = [S_X, S_Y] on operators Delta0 + V
    std::string bad_hom;
    DiffOp op = delta0() + DiffOp::scalar(tr_coords(), potential_op(2, D));
    CoeffPoly l = lam + CoeffPoly::frac(1, 4);
    RepId left = RepId::pi_lambda(l + CoeffPoly(1)), right = RepId::pi_lambda(l);
    std::vector<FuncGen> small = sv_func_window(std::min(window, 4));
    for (std::size_t i = 0; i < small.size() && bad_hom.empty(); ++i)
        for (std::size_t j = i + 1; j < small.size() && bad_hom.empty(); ++j) {
            const auto &x = small[i], &y = small[j];
            DiffOp lhs = left_right(left, right, x, left_right(left, right, y, op)) -
                         left_right(left, right, y, left_right(left, right, x, op));
            DiffOp rhs = op * CoeffPoly(0);
            for (const auto& c : md_bracket(CoeffPoly::frac(-1, 2), 3, x, y)) rhs += left_right(left, right, c, op);
            if (!(lhs - rhs).is_zero()) bad_hom = "(" + str(x) + ", " + str(y) + ") -> " + (lhs - rhs).str();
        }
    r.add("d sigma is an action on the affine space (generator pairs)", bad_hom.empty(), bad_hom);
    return r;
}

// ---------------------------------------------------------------- Dirac

DiffOp dirac0() {
    auto c = tr_coords();
    DiffOp d(c, 2);
    d.at(0, 0) = ScalarOp::partial(2, 1);
    d.at(0, 1) = ScalarOp::constant(2, CoeffPoly(-2) * kM);
    d.at(1, 0) = ScalarOp::partial(2, 0);
    d.at(1, 1) = -ScalarOp::partial(2, 1);
    return d;
}

PotTriple dirac_vector_action(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& V, const CoeffPoly& e10) {
    DiffOp op = dirac0();
    op.at(1, 0) += potential_op(2, V);
    DiffOp S = left_right(RepId::dirac_sigma(lambda + CoeffPoly(1), e10),
                          RepId::dirac_sigma(lambda + CoeffPoly::frac(1, 2), e10), g, op);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!(i == 1 && j == 0) && S.has_entry(i, j))
                throw NotFirstOrder("not a Dirac potential: entry [" + std::to_string(i) + "," + std::to_string(j) +
                                    "] = " + S.at(i, j).str(S.coords()));
    return potential_of(S.at(1, 0));
}

SuiteReport dirac_checks(int window) {
    SuiteReport r;
    r.suite = "dirac";
    r.config = {{"window", std::to_string(window)}};
    DiffOp sq = dirac0() * dirac0();
    DiffOp target = DiffOp::scalar(tr_coords(), -delta0().at(0, 0), 2);
    r.add("D0^2 = -Delta0 Id", sq == target, sq.str());

    CoeffPoly lam = CoeffPoly::var("lambda");
    PotTriple V = generic_potential();
    // As displayed (E_10 scale 1) the left-and-right action leaves first-order and diagonal terms as soon as
    // f'' != 0; halving the E_10 terms (conjugation by diag(1, 2), an equivalent representation) repairs it.
    std::string bad_printed;
    for (const auto& g : sv_func_window(window)) try {
            dirac_vector_action(0, g, V);
        } catch (const NotFirstOrder& e) {
            bad_printed = str(g) + ": " + e.what();
            break;
        }
    r.add_expected_fail("displayed E_10 normalization: d sigma(X)(D0 + V) leaves the Dirac potentials",
                        !bad_printed.empty(), bad_printed);

    std::string bad_shape, bad_rel;
    const CoeffPoly half = CoeffPoly::frac(1, 2);
    for (const auto& g : sv_func_window(window)) {
        PotTriple got;
        try {
            got = dirac_vector_action(lam, g, V, half);
        } catch (const NotFirstOrder& e) {
            if (bad_shape.empty()) bad_shape = str(g) + ": " + e.what();
            continue;
        }
        // Schrodinger formulas at the same lambda, M- and M^2-proportional terms divided by 2M
        PotTriple lin = schrodinger_vector_action_formula(lam, g, V);
        PotTriple aff = schrodinger_vector_action_formula(lam, g, PotTriple{});
        PotTriple want;
        for (int i = 0; i < 3; ++i) {
            Laurent a;
            for (const auto& [e, c] : aff[i]) a[e] = exact_div(c, CoeffPoly(2) * kM);
            want[i] = (lin[i] - aff[i]) + a;
        }
        if (bad_rel.empty() && !triple_eq(got, want))
            bad_rel = str(g) + ": " + triple_str(got) + " vs " + triple_str(want);
    }
    r.add("halved E_10: d sigma(X)(D0 + V) is a Dirac potential of degree <= 2", bad_shape.empty(), bad_shape);
    r.add("halved E_10: Schrodinger action formulas with the affine terms divided by 2M", bad_rel.empty(), bad_rel);

    DiffOp m = left_right(RepId::dirac_sigma(1), RepId::dirac_sigma(CoeffPoly::frac(1, 2)), FuncGen{2, laurent(2)},
                          dirac0());
    r.add("d sigma(M_{t^2})(D0) = M h' E_10", m.str() == "[1,0] 2*M*t", m.str());
    return r;
}

// ---------------------------------------------------------------- multi-diagonal operators

DiffOp nabla(int d) {
    DiffOp n(md_coords(d), d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) n.at(i, j) = ScalarOp::partial(d, i - j + d - 1);
    return n;
}

namespace {
// C - A(C) nabla with A_{il} = coefficient of d_{t_{d-1}} in C_{il}
std::pair<DiffOp, DiffOp> nabla_residual(int d, const DiffOp& X) {
    DiffOp N = nabla(d);
    DiffOp C = commutator(X, N);
    DiffOp A(N.coords(), d);
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) A.at(i, l) = C.at(i, l).coefficient_of(unit(d, d - 1));
    return {C - A * N, A};
}
}  // namespace

DiffOp nabla_conjugation(int d, const DiffOp& X) {
    auto [res, A] = nabla_residual(d, X);
    if (!res.is_zero()) throw NoSolution("[X, nabla] is not of the form A nabla: residual " + res.str());
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) {
            if (l < i && A.has_entry(i, l)) throw NoSolution("A is not upper-triangular");
            if (i > 0 && l > 0 && !(A.at(i, l) == A.at(i - 1, l - 1))) throw NoSolution("A is not multi-diagonal");
        }
    return A;
}

DiffOp nabla_conjugation(int d, const CoeffPoly& eps, const FuncGen& g) {
    return nabla_conjugation(d, rep_generator(RepId::md(eps, d), g));
}

std::optional<DiffOp> md_ansatz(int d, const CoeffPoly& eps, const Laurent& f0, int max_deg) {
    if (!eps.is_constant()) throw std::invalid_argument("md_ansatz needs a numeric eps");
    auto coords = md_coords(d);
    std::size_t n = d;
    std::vector<CoeffPoly> lam;
    for (int i = d - 1; i >= 0; --i) lam.push_back(CoeffPoly(i) * eps);
    DiffOp X0 = DiffOp::scalar(coords, fmul(n, f0, {}, unit(n, 0)), n) -
                DiffOp::tensor(coords, fmul(n, deriv(f0)), diag(lam));
    std::vector<DiffOp> basis;
    std::vector<int> x(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t q, int left) {
        if (q == n) {
            for (int i = 1; i < d; ++i)
                basis.push_back(DiffOp::scalar(coords, ScalarOp::monomial(n, x, unit(n, i), 1), n));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            x[q] = e;
            rec(q + 1, left - e);
        }
        x[q] = 0;
    };
    rec(0, max_deg);
    auto R0 = nabla_residual(d, X0).first;
    std::vector<DiffOp> Ru(basis.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t u = 0; u < basis.size(); ++u) Ru[u] = nabla_residual(d, basis[u]).first;
    std::map<std::pair<std::size_t, ScalarOp::Key>, std::size_t> idx;
    auto collect = [&](const DiffOp& op) {
        for (std::size_t e = 0; e < n * n; ++e)
            for (const auto& [k, c] : op.at(e / n, e % n).terms()) idx.emplace(std::pair{e, k}, idx.size());
    };
    collect(R0);
    for (const auto& R : Ru) collect(R);
    std::vector<Row> m(idx.size(), Row(basis.size()));
    Row rhs(idx.size());
    for (std::size_t e = 0; e < n * n; ++e) {
        for (const auto& [k, c] : R0.at(e / n, e % n).terms()) rhs[idx.at({e, k})] = -c.as_constant();
        for (std::size_t u = 0; u < basis.size(); ++u)
            for (const auto& [k, c] : Ru[u].at(e / n, e % n).terms()) m[idx.at({e, k})][u] = c.as_constant();
    }
    auto sol = solve(m, rhs, basis.size());
    if (!sol) return std::nullopt;
    DiffOp X = X0;
    for (std::size_t u = 0; u < basis.size(); ++u)
        if (!(*sol)[u].is_zero()) X += basis[u] * CoeffPoly((*sol)[u]);
    return X;
}

SuiteReport verify_nabla(int d, const CoeffPoly& eps, int window) {
    SuiteReport r;
    r.suite = "nabla";
    r.config = {{"d", std::to_string(d)}, {"eps", eps.str()}, {"window", std::to_string(window)}};
    bool exists = d <= 3 || eps.is_zero();
    if (exists) {
        RepId md = RepId::md(eps, d);
        std::string bad;
        for (int k = 0; k < d && bad.empty(); ++k)
            for (int e = -window / 2; e <= window / 2 + 1 && bad.empty(); ++e) try {
                    nabla_conjugation(d, eps, FuncGen{k, laurent(e)});
                } catch (const NoSolution& ex) {
                    bad = "L^(" + std::to_string(k) + ")_{t^" + std::to_string(e) + "}: " + ex.what();
                }
        r.add("[X, nabla] = A(X) nabla with A upper-triangular multi-diagonal", bad.empty(), bad);
        r.append(verify_rep(md, window));
    }
    if (eps.is_constant()) {
        auto X = md_ansatz(d, eps, laurent(2), 3);
        if (exists) r.add("ansatz: X with f0 = t^2 preserving Ker nabla exists", X.has_value());
        else
            r.add_expected_fail("ansatz: no X with f0 = t^2 preserves Ker nabla (eps != 0, d >= 4)", !X.has_value(),
                                X ? X->str() : "inconsistent linear system, degree <= 3");
    }
    if (d == 3) {
        // intertwining with the coinduced operators of the rank-3 example
        RepId rho = RepId::coinduced(rho_rank3()), sigma = RepId::coinduced(rho_rank3_nabla()),
              shown = RepId::coinduced(rho_rank3_nabla(true));
        DiffOp N = nabla(3);
        std::string bad, bad_shown, bad_id;
        for (const auto& g : sv_func_window(window)) {
            DiffOp def = rep_generator(sigma, g) * N - N * rep_generator(rho, g);
            if (bad.empty() && !def.is_zero()) bad = str(g) + ": " + def.str();
            DiffOp def2 = rep_generator(shown, g) * N - N * rep_generator(rho, g);
            if (bad_shown.empty() && !def2.is_zero()) bad_shown = str(g) + ": " + def2.str();
            if (bad_id.empty() && !(rep_generator(rho, g) == md_gen(CoeffPoly::frac(-1, 2), 3, g)))
                bad_id = str(g);
        }
        r.add("d pi^nabla(X) nabla - nabla d pi^(3,0)(X) = 0 with d pi^nabla = d pi^(3,0) - A", bad.empty(), bad);
        r.add_expected_fail("with the displayed signs (+A) the intertwining fails", !bad_shown.empty(), bad_shown);
        r.add("d pi^(3,0) = md_{-1/2}^3 = coinduced(rank3)", bad_id.empty(), bad_id);
    }
    return r;
}

// ---------------------------------------------------------------- Cartan prolongation

std::vector<ProlongLevel> cartan_prolong(int max_level) {
    auto coords = trz_coords();
    std::size_t n = 3;
    auto vf = [&](std::vector<int> x, std::size_t b, const CoeffPoly& c) {
        return DiffOp::scalar(coords, ScalarOp::monomial(n, x, unit(n, b), c));
    };
    std::vector<ProlongLevel> out;
    out.push_back({-1, {vf({}, 0, 1), vf({}, 1, 1), vf({}, 2, 1)}, true});
    out.push_back({0,
                   {vf({1, 0, 0}, 0, 1) + vf({0, 1, 0}, 1, CoeffPoly::frac(1, 2)), vf({1, 0, 0}, 1, 1) + vf({0, 1, 0}, 2, 1),
                    vf({1, 0, 0}, 2, 1)},
                   true});
    RepId pt = RepId::pi_tilde(1);
    for (int lev = 1; lev <= max_level; ++lev) {
        const auto& prev = out.back().basis;
        std::vector<DiffOp> unknowns;
        for (int a = lev + 1; a >= 0; --a)
            for (int b = lev + 1 - a; b >= 0; --b)
                for (std::size_t q = 0; q < 3; ++q) unknowns.push_back(vf({a, b, lev + 1 - a - b}, q, 1));
        std::size_t nx = unknowns.size(), ny = 3 * prev.size();
        // columns: x (vector field coefficients), then y_{c,q}; rows: (translation c, term)
        std::vector<std::vector<DiffOp>> col_ops(nx + ny, std::vector<DiffOp>(3));
        DiffOp zero = vf({}, 0, 0);
        for (std::size_t u = 0; u < nx; ++u)
            for (std::size_t c = 0; c < 3; ++c) col_ops[u][c] = commutator(unknowns[u], vf({}, c, 1));
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t q = 0; q < prev.size(); ++q) {
                for (std::size_t c2 = 0; c2 < 3; ++c2) col_ops[nx + 3 * q + c][c2] = zero;
                col_ops[nx + 3 * q + c][c] = -prev[q];
            }
        std::map<std::tuple<std::size_t, ScalarOp::Key>, std::size_t> idx;
        for (const auto& col : col_ops)
            for (std::size_t c = 0; c < 3; ++c)
                for (const auto& [k, v] : col[c].at(0, 0).terms()) idx.emplace(std::tuple{c, k}, idx.size());
        std::vector<Row> m(idx.size(), Row(nx + ny));
        for (std::size_t u = 0; u < nx + ny; ++u)
            for (std::size_t c = 0; c < 3; ++c)
                for (const auto& [k, v] : col_ops[u][c].at(0, 0).terms()) m[idx.at({c, k})][u] = v.as_constant();
        auto ker = nullspace(m, nx + ny);
        std::vector<Row> proj;
        for (const auto& v : ker) proj.emplace_back(v.begin(), v.begin() + nx);
        Echelon ech = rref(proj, nx);
        ProlongLevel L;
        L.level = lev;
        for (const auto& row : ech.rows) {
            DiffOp X = zero;
            for (std::size_t u = 0; u < nx; ++u)
                if (!row[u].is_zero()) X += unknowns[u] * CoeffPoly(row[u]);
            L.basis.push_back(X);
        }
        std::vector<DiffOp> images{rep_generator(pt, GenSymbol::L(lev)), rep_generator(pt, GenSymbol::Yt(2 * lev + 1)),
                                   rep_generator(pt, GenSymbol::M(lev + 1))};
        std::vector<DiffOp> both = L.basis;
        both.insert(both.end(), images.begin(), images.end());
        L.matches_pi_tilde = L.basis.size() == 3 && op_rank(images) == 3 && op_rank(both) == 3;
        out.push_back(std::move(L));
    }
    return out;
}

SuiteReport verify_prolongation(int max_level) {
    SuiteReport r;
    r.suite = "prolong";
    r.config = {{"max_level", std::to_string(max_level)}};
    auto levels = cartan_prolong(max_level);
    RepId pt = RepId::pi_tilde(1);
    {
        std::vector<DiffOp> img0{rep_generator(pt, GenSymbol::L(0)), rep_generator(pt, GenSymbol::Yt(1)),
                                 rep_generator(pt, GenSymbol::M(1))};
        auto both = img0;
        both.insert(both.end(), levels[1].basis.begin(), levels[1].basis.end());
        r.add("level 0 = pi_tilde(sv_0)", op_rank(both) == 3);
    }
    for (const auto& L : levels) {
        if (L.level < 1) continue;
        std::string id = "level " + std::to_string(L.level);
        r.add(id + ": dim = 3", L.basis.size() == 3, "dim " + std::to_string(L.basis.size()));
        r.add(id + ": span = pi_tilde(L_k, Y_{k+1/2}, M_{k+1})", L.matches_pi_tilde);
    }
    std::string bad;
    for (const auto& A : levels)
        for (const auto& B : levels) {
            int s = A.level + B.level;
            if (s < -1 || s > max_level || A.level > B.level) continue;
            const auto& target = levels[s + 1].basis;
            std::size_t base = op_rank(target);
            for (const auto& x : A.basis)
                for (const auto& y : B.basis) {
                    DiffOp c = commutator(x, y);
                    if (c.is_zero()) continue;
                    auto ext = target;
                    ext.push_back(c);
                    if (op_rank(ext) != base && bad.empty())
                        bad = "[" + x.str() + ", " + y.str() + "] = " + c.str() + " not in level " + std::to_string(s);
                }
        }
    r.add("direct sum closes under brackets", bad.empty(), bad);
    return r;
}

// ---------------------------------------------------------------- coadjoint

namespace {
DualTriple coadjoint_displayed(const FuncGen& X, const DualTriple& G, const CoeffPoly& c) {
    const Laurent& f = X.f;
    Laurent f1 = deriv(f);
    DualTriple out;
    switch (X.k) {
        case 0:
            out[0] = c * deriv(f, 3) + CoeffPoly(2) * (f1 * G[0]) + f * deriv(G[0]);
            out[1] = f * deriv(G[1]) + CoeffPoly::frac(3, 2) * (f1 * G[1]);
            out[2] = f * deriv(G[2]) + f1 * G[2];
            break;
        case 1:
            out[0] = CoeffPoly::frac(3, 2) * (G[1] * f1) + CoeffPoly::frac(1, 2) * (deriv(G[1]) * f);
            out[1] = CoeffPoly(2) * (G[2] * f1) + deriv(G[2]) * f;
            break;
        case 2: out[0] = CoeffPoly(-1) * (G[2] * f1); break;
        default: throw InvalidSymbol("coadjoint: family out of range");
    }
    return out;
}
}  // namespace

DualTriple coadjoint_apply(const FuncGen& X, const DualTriple& G, const CoeffPoly& lambda) {
    return coadjoint_displayed(X, G, lambda);
}

CoeffPoly pairing(const DualTriple& G, const FuncGen& Z) {
    if (Z.k < 0 || Z.k > 2) return CoeffPoly();
    return residue(G[Z.k] * Z.f);
}

CoeffPoly vir_cocycle(const FuncGen& X, const FuncGen& Z) {
    if (X.k != 0 || Z.k != 0) return CoeffPoly();
    return residue(deriv(X.f, 3) * Z.f);
}

SuiteReport verify_coadjoint(int window) {
    SuiteReport r;
    r.suite = "coadjoint";
    r.config = {{"window", std::to_string(window)}};
    CoeffPoly lam = CoeffPoly::var("lambda");
    auto gens = sv_func_window(window);
    std::vector<DualTriple> duals;
    for (int comp = 0; comp < 3; ++comp)
        for (int a = -window - 4; a <= window + 4; ++a) {
            DualTriple G;
            G[comp] = laurent(a);
            duals.push_back(G);
        }
    // sign[k]: 0 unknown, +-1 fixed by the first nonzero pair
    int sign[3] = {0, 0, 0};
    std::size_t nonzero[3] = {0, 0, 0};
    std::string bad[3];
    for (const auto& X : gens)
        for (const auto& G : duals) {
            DualTriple ad = coadjoint_apply(X, G, lam);
            for (const auto& Z : gens) {
                CoeffPoly lhs = pairing(ad, Z);
                CoeffPoly rhs = CoeffPoly(0) - lam * vir_cocycle(X, Z);
                for (const auto& c : md_bracket(CoeffPoly::frac(-1, 2), 3, X, Z)) rhs -= pairing(G, c);
                if (lhs.is_zero() && rhs.is_zero()) continue;
                ++nonzero[X.k];
                int s = lhs == rhs ? 1 : lhs == -rhs ? -1 : 0;
                if (sign[X.k] == 0 && s != 0) sign[X.k] = s;
                if ((s == 0 || s != sign[X.k]) && bad[X.k].empty())
                    bad[X.k] = "X=" + str(X) + ", G=(" + str(G[0], "z") + ", " + str(G[1], "z") + ", " + str(G[2], "z") +
                               "), Z=" + str(Z) + ": " + lhs.str() + " vs " + rhs.str();
            }
        }
    const char* fam[] = {"L", "Y", "M"};
    for (int k = 0; k < 3; ++k)
        r.add(std::string("ad*(") + fam[k] + ") agrees with the pairing duality up to one sign",
              bad[k].empty() && nonzero[k] > 0,
              bad[k].empty() ? "sign " + std::to_string(sign[k]) + ", " + std::to_string(nonzero[k]) + " nonzero pairs"
                             : bad[k]);
    // the convention recorded once: displayed ad*(L), ad*(Y) are minus the duality action, ad*(M) equals it
    r.add("recorded sign convention (L, Y, M) = (-1, -1, +1)", sign[0] == -1 && sign[1] == -1 && sign[2] == 1,
          std::to_string(sign[0]) + ", " + std::to_string(sign[1]) + ", " + std::to_string(sign[2]));
    return r;
}

// ---------------------------------------------------------------- conformal embedding

namespace {
std::vector<std::string> xi_coords(int d) {
    std::vector<std::string> c;
    for (int i = 1; i <= d + 2; ++i) c.push_back("x" + std::to_string(i));
    return c;
}
}  // namespace

DiffOp conformal_image(int d, const GenSymbol& g) {
    auto coords = xi_coords(d);
    std::size_t n = d + 2;
    auto op = [&](const ScalarOp& s) { return DiffOp::scalar(coords, s); };
    auto P = [&](int mu) { return ScalarOp::partial(n, mu - 1); };
    auto X = [&](int mu) { return ScalarOp::coord(n, mu - 1); };
    auto Mr = [&](int mu, int nu) { return X(mu) * P(nu) - X(nu) * P(mu); };
    ScalarOp D(n), r2(n);
    for (int mu = 1; mu <= static_cast<int>(n); ++mu) {
        D += X(mu) * P(mu);
        r2 += X(mu) * X(mu);
    }
    auto K = [&](int mu) { return ScalarOp::constant(n, 2) * X(mu) * D - r2 * P(mu); };
    GaussRat i = GaussRat::i();
    auto c = [](const GaussRat& v) { return CoeffPoly(v); };
    int a = d + 1, b = d + 2;
    switch (g.fam) {
        case Fam::L:
            if (g.twice == -2) return op((P(b) - P(a) * c(i)) * c(i));
            if (g.twice == 0) return op(D * CoeffPoly::frac(-1, 2) + Mr(b, a) * c(GaussRat(0, Q(1, 2))));
            if (g.twice == 2) return op((K(b) + K(a) * c(i)) * c(GaussRat(0, Q(-1, 4))));
            break;
        case Fam::Y: {
            int j = d == 1 ? 1 : g.i;
            if (j < 1 || j > d) break;
            if (g.twice == -1) return op(P(j) * c(GaussRat(-1, 1)));  // -(1 - i) P_j
            if (g.twice == 1) return op((Mr(b, j) + Mr(a, j) * c(i)) * c(GaussRat(Q(-1, 2), Q(-1, 2))));
            break;
        }
        case Fam::M:
            if (g.twice == 0) {
                // not displayed: fixed by [Y_{-1/2}, Y_{1/2}] = -M_0
                GenSymbol ym = GenSymbol::Yt(-1, d == 1 ? 0 : 1), yp = GenSymbol::Yt(1, d == 1 ? 0 : 1);
                return -commutator(conformal_image(d, ym), conformal_image(d, yp));
            }
            break;
        case Fam::R:
            if (g.twice == 0 && g.i >= 1 && g.j <= d && g.i < g.j) return op(Mr(g.i, g.j));
            break;
        default: break;
    }
    throw InvalidSymbol("no conformal image for " + g.str());
}

SuiteReport conformal_embedding_check(int d) {
    SuiteReport r;
    r.suite = "conformal";
    r.config = {{"d", std::to_string(d)}};
    RepId rep = RepId::conformal(d);
    r.append(verify_rep(rep, 2));
    DiffOp lhs = commutator(conformal_image(d, GenSymbol::L(1)), conformal_image(d, GenSymbol::L(-1)));
    r.add("[X_1, X_-1] = 2 X_0", lhs == conformal_image(d, GenSymbol::L(0)) * CoeffPoly(2), lhs.str());
    if (d >= 2) {
        DiffOp m1 = -commutator(conformal_image(d, GenSymbol::Yt(-1, 1)), conformal_image(d, GenSymbol::Yt(1, 1)));
        DiffOp m2 = -commutator(conformal_image(d, GenSymbol::Yt(-1, 2)), conformal_image(d, GenSymbol::Yt(1, 2)));
        r.add("M_0 image independent of the component", m1 == m2, m1.str() + " vs " + m2.str());
    }

    // coordinate change: t = (-x_{d+1} + i x_{d+2})/2, r_j = (1+i)/2 x_j, zeta = k (x_{d+1} + i x_{d+2})/2.
    // With k = 1 every d_zeta coefficient comes out multiplied by -i; k = i gives pi_tilde exactly.
    auto change = [&](const GaussRat& k) {
        std::size_t n = d + 2;
        std::vector<std::vector<GaussRat>> A(n, std::vector<GaussRat>(n));
        A[0][d] = GaussRat(Q(-1, 2));
        A[0][d + 1] = GaussRat(0, Q(1, 2));
        for (int j = 1; j <= d; ++j) A[j][j - 1] = GaussRat(Q(1, 2), Q(1, 2));
        A[n - 1][d] = k * GaussRat(Q(1, 2));
        A[n - 1][d + 1] = k * GaussRat(0, Q(1, 2));
        return A;
    };
    // first failing non-rotation image, first failing rotation image
    auto compare = [&](const GaussRat& k) {
        std::size_t n = d + 2;
        auto A = change(k);
        std::vector<Row> rows(A.begin(), A.end());
        std::vector<std::vector<GaussRat>> inv(n, std::vector<GaussRat>(n));  // inv[mu][a]: x_mu = sum inv y_a
        for (std::size_t a = 0; a < n; ++a) {
            Row e(n);
            e[a] = 1;
            auto col = solve(rows, e, n);
            for (std::size_t mu = 0; mu < n; ++mu) inv[mu][a] = (*col)[mu];
        }
        RepId pt = RepId::pi_tilde(d);
        pt.rot_sign = 1;
        std::pair<std::string, std::string> bad;
        for (const auto& g : symbols_in_window(AlgebraId::sch(d), 2)) {
            DiffOp img = linear_change(conformal_image(d, g), pi_tilde_coords(d), A, inv);
            DiffOp want = rep_generator(pt, g);
            if (img == want) continue;
            if (g.fam == Fam::R) {
                if (bad.second.empty()) bad.second = g.str() + ": " + img.str();
            } else if (bad.first.empty()) {
                bad.first = g.str() + ": " + img.str() + " vs " + want.str();
            }
        }
        return bad;
    };
    auto shown = compare(GaussRat(1)).first;
    r.add_expected_fail("displayed coordinate change: images differ from pi_tilde^d in the d_zeta terms", !shown.empty(),
                        shown);
    auto [bad, bad_rot] = compare(GaussRat::i());
    r.add("coordinate change with zeta -> i zeta maps the images to pi_tilde^d (vector fields, no weight term)",
          bad.empty(), bad);
    if (d >= 2) r.add("coordinate change maps R_jk to +(r_j d_k - r_k d_j)", bad_rot.empty(), bad_rot);
    return r;
}

// ---------------------------------------------------------------- coinduced examples

SuiteReport verify_coinduced(int window) {
    SuiteReport r;
    r.suite = "coinduced";
    r.config = {{"window", std::to_string(window)}};
    CoeffPoly lam = CoeffPoly::var("lambda");
    for (const auto& rho :
         {rho_scalar(lam), rho_spinor(lam), rho_rank3(), rho_rank3_nabla(), rho_rank3_nabla(true)}) {
        auto def = rho_relation_defect(rho);
        r.add(rho.name + ": rho represents <L0, Y1/2, M1>", def.empty(), def);
        r.append(verify_rep(RepId::coinduced(rho), window));
    }
    auto gens = sv_func_window(window);
    RepId sc = RepId::coinduced(rho_scalar(lam)), sp = RepId::coinduced(rho_spinor(lam));
    std::string bad1, bad3, bad4;
    for (const auto& g : gens) {
        DiffOp a = rep_generator(sc, g), b = laplace_mass(rep_generator(RepId::pi_lambda(lam), g), kMass, "zeta");
        if (bad1.empty() && !(a == b)) bad1 = str(g) + ": " + a.str() + " vs " + b.str();
        DiffOp c = rep_generator(sp, g), e = laplace_mass(rep_generator(RepId::dirac_sigma(lam), g), kMass, "zeta");
        if (bad3.empty() && !(c == e)) bad3 = str(g) + ": " + c.str() + " vs " + e.str();
        if (bad4.empty() && !(rep_generator(RepId::coinduced(rho_rank3()), g) ==
                              rep_generator(RepId::md(CoeffPoly::frac(-1, 2), 3), g)))
            bad4 = str(g);
    }
    r.add("coinduced(scalar) = Laplace transform of pi_lambda", bad1.empty(), bad1);
    r.add("coinduced(spinor) = Laplace transform of the Dirac representation", bad3.empty(), bad3);
    r.add("coinduced(rank3) = d pi^(3,0)", bad4.empty(), bad4);

    // linear part of the Schrodinger action = coinduced rho_l on g0 r^2 + g1 r + g2
    PotTriple D = generic_potential();
    auto linear_part_matches = [&](const CoeffPoly& l) {
        RepId rep = RepId::coinduced(rho_scalar(l));
        for (const auto& g : gens) {
            PotTriple full = schrodinger_vector_action(lam, g, D), aff = schrodinger_vector_action(lam, g, PotTriple{});
            PotTriple lin{full[0] - aff[0], full[1] - aff[1], full[2] - aff[2]};
            DiffOp op = rep_generator(rep, g);
            ScalarOp applied = (op.at(0, 0) * potential_op(3, D)).coefficient_of({0, 0, 0});
            if (!triple_eq(potential_of(applied), lin)) return str(g) + ": " + triple_str(potential_of(applied));
        }
        return std::string();
    };
    auto w1 = linear_part_matches(1);
    r.add("linear part of the action on S^aff_{<=2} = coinduced with rho(L0) = -1", w1.empty(), w1);
    auto wm = linear_part_matches(-1);
    r.add_expected_fail("coinduced with rho(L0) = +1 (the rho_{-1} label) does not match", !wm.empty(), wm);

    // The displayed d pi^nabla has no d_zeta terms; compare it with coinduced sigma minus those terms.
    std::string bad35;
    RepId sig = RepId::coinduced(rho_rank3_nabla(true));
    for (const auto& g : gens) {
        DiffOp s = rep_generator(sig, g);
        DiffOp stripped(s.coords(), 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (const auto& [k, c] : s.at(i, j).terms())
                    if (k[5] == 0) stripped.at(i, j).add(k, c);
        DiffOp disp(s.coords(), 3);
        const Laurent& f = g.f;
        PolyMatrix N = mat(3, {{0, 1, 1}, {1, 2, 1}}), N2 = mat(3, {{0, 2, 1}});
        if (g.k == 0)
            disp = DiffOp::scalar(s.coords(),
                                  -fmul(3, f, {}, unit(3, 0)) - fmul(3, deriv(f), unit(3, 1), unit(3, 1), CoeffPoly::frac(1, 2)),
                                  3) +
                   DiffOp::tensor(s.coords(), fmul(3, deriv(f)), diag({-1, CoeffPoly::frac(-1, 2), 0})) +
                   DiffOp::tensor(s.coords(), fmul(3, deriv(f, 2), unit(3, 1), {}, CoeffPoly::frac(1, 2)), N) +
                   DiffOp::tensor(s.coords(), fmul(3, deriv(f, 3), unit(3, 1, 2), {}, CoeffPoly::frac(1, 4)), N2);
        else if (g.k == 1)
            disp = DiffOp::scalar(s.coords(), -fmul(3, f, {}, unit(3, 1)), 3) +
                   DiffOp::tensor(s.coords(), fmul(3, deriv(f)), N) +
                   DiffOp::tensor(s.coords(), fmul(3, deriv(f, 2), unit(3, 1)), N2);
        else
            disp = DiffOp::tensor(s.coords(), fmul(3, deriv(f)), N2);
        if (bad35.empty() && !(disp == stripped)) bad35 = str(g) + ": " + disp.str() + " vs " + stripped.str();
    }
    r.add("displayed d pi^nabla = coinduced(displayed sigma) without its d_zeta terms", bad35.empty(), bad35);
    return r;
}

}  // namespace svw
