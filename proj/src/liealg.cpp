#include "svw/liealg.hpp"

#include "svw/linalg.hpp"

#include <algorithm>
#include <regex>

namespace svw {

namespace {

CoeffPoly half(int twice) { return CoeffPoly(Q(twice, 2)); }

std::string twice_str(int t) { return t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2"; }

}  // namespace

std::string DoubledIndex::str() const { return twice_str(twice); }

std::string GenSymbol::str() const {
    switch (fam) {
        case Fam::L: return "L_" + twice_str(twice);
        case Fam::M: return "M_" + twice_str(twice);
        case Fam::Y: return "Y" + (i ? std::to_string(i) : std::string()) + "_" + twice_str(twice);
        case Fam::R: return "R" + std::to_string(i) + std::to_string(j) + "_" + twice_str(twice);
        case Fam::Z: return i ? "Z" + std::to_string(i) : "Z";
    }
    return "?";
}

GenSymbol GenSymbol::parse(const std::string& s) {
    static const std::regex re(R"(^([LYMR])(\d*)_(-?\d+)(/2)?$)");
    if (s == "Z") return Z(0);
    if (s == "Z1") return Z(1);
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidSymbol("cannot parse generator '" + s + "'");
    int num = std::stoi(m[3]);
    int tw = m[4].matched ? num : 2 * num;
    GenSymbol g;
    g.twice = tw;
    std::string sub = m[2];
    switch (m[1].str()[0]) {
        case 'L': g.fam = Fam::L; break;
        case 'M': g.fam = Fam::M; break;
        case 'Y':
            g.fam = Fam::Y;
            if (!sub.empty()) g.i = static_cast<unsigned char>(std::stoi(sub));
            break;
        case 'R':
            g.fam = Fam::R;
            if (sub.size() != 2) throw InvalidSymbol("rotation generator needs two digits: '" + s + "'");
            g.i = static_cast<unsigned char>(sub[0] - '0');
            g.j = static_cast<unsigned char>(sub[1] - '0');
            break;
    }
    if (g.fam != Fam::Y && g.fam != Fam::R && !sub.empty()) throw InvalidSymbol("unexpected component in '" + s + "'");
    return g;
}

// -------------------------------------------------------------- LieElement

CoeffPoly LieElement::coeff(const GenSymbol& g) const {
    auto it = t_.find(g);
    return it == t_.end() ? CoeffPoly() : it->second;
}

void LieElement::add(const GenSymbol& g, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (auto& [g, c] : o.t_) add(g, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (auto& [g, c] : o.t_) add(g, -c);
    return *this;
}

LieElement& LieElement::operator*=(const CoeffPoly& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
        it->second *= s;
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
    return *this;
}

LieElement LieElement::subs(const std::string& name, const CoeffPoly& v) const {
    LieElement r;
    for (auto& [g, c] : t_) r.add(g, c.subs(name, v));
    return r;
}

std::string LieElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [g, c] : t_) {
        if (!s.empty()) s += " + ";
        if (c == CoeffPoly(1)) s += g.str();
        else s += "(" + c.str() + ")*" + g.str();
    }
    return s;
}

// -------------------------------------------------------------- algebras

AlgebraId AlgebraId::sv(int d) {
    AlgebraId a;
    a.d = d;
    return a;
}

AlgebraId AlgebraId::tsv() {
    AlgebraId a;
    a.twisted = true;
    return a;
}

AlgebraId AlgebraId::sv_eps(const CoeffPoly& eps, bool twisted) {
    AlgebraId a;
    a.eps = eps;
    a.twisted = twisted;
    return a;
}

AlgebraId AlgebraId::tsv_def(const CoeffPoly& lambda, const CoeffPoly& mu, const CoeffPoly& nu, bool twisted) {
    AlgebraId a;
    a.eps = lambda;
    a.mu = mu;
    a.nu = nu;
    a.twisted = twisted;
    return a;
}

AlgebraId AlgebraId::vir_f0(bool central) {
    AlgebraId a;
    a.kind = AlgKind::VirF0;
    a.central = central;
    return a;
}

AlgebraId AlgebraId::sch(int d) {
    AlgebraId a;
    a.kind = AlgKind::Sch;
    a.d = d;
    return a;
}

std::string AlgebraId::name() const {
    std::string s;
    switch (kind) {
        case AlgKind::VirF0: s = "vir-f0"; break;
        case AlgKind::Sch: s = "sch" + std::to_string(d); break;
        case AlgKind::SV:
            if (!mu.is_zero() || !nu.is_zero())
                s = std::string(twisted ? "tsv" : "sv") + "-def(" + eps.str() + "," + mu.str() + "," + nu.str() + ")";
            else if (!eps.is_zero())
                s = std::string(twisted ? "tsv" : "sv") + "-eps(" + eps.str() + ")";
            else
                s = twisted ? "tsv" : "sv";
            if (d > 1) s += "^" + std::to_string(d);
            break;
    }
    if (central) s += "+central";
    if (extra) s += "+" + extra_name;
    return s;
}

std::vector<std::string> AlgebraId::parameters() const {
    std::set<std::string> v;
    for (auto* p : {&eps, &mu, &nu})
        for (auto& n : p->variables()) v.insert(n);
    return {v.begin(), v.end()};
}

bool is_valid(const AlgebraId& alg, const GenSymbol& g) {
    bool even = g.twice % 2 == 0;
    switch (g.fam) {
        case Fam::Z: return g.twice == 0 && (g.i == 0 || (g.i == 1 && alg.extra));
        case Fam::L:
            if (!even) return false;
            return alg.kind != AlgKind::Sch || (g.twice >= -2 && g.twice <= 2);
        case Fam::M:
            if (!even) return false;
            return alg.kind != AlgKind::Sch || g.twice == 0;
        case Fam::Y:
            if (alg.kind == AlgKind::VirF0) return false;
            if (alg.d == 1 ? g.i != 0 : (g.i < 1 || g.i > alg.d)) return false;
            if (alg.kind == AlgKind::Sch) return g.twice == 1 || g.twice == -1;
            return alg.twisted ? even : !even;
        case Fam::R:
            if (alg.kind == AlgKind::VirF0 || alg.d < 2 || alg.d > 3) return false;
            if (!(g.i >= 1 && g.i < g.j && g.j <= alg.d)) return false;
            return even && (alg.kind != AlgKind::Sch || g.twice == 0);
    }
    return false;
}

void validate(const AlgebraId& alg, const GenSymbol& g) {
    if (!is_valid(alg, g)) throw InvalidSymbol(g.str() + " is not a generator of " + alg.name());
}

namespace {

int rank(Fam f) { return static_cast<int>(f); }

// R^{ab} with the convention R^{ba} = -R^{ab}, R^{aa} = 0.
void add_rot(LieElement& out, int a, int b, int twice, const CoeffPoly& c) {
    if (a == b || c.is_zero()) return;
    if (a < b) out.add(GenSymbol{Fam::R, twice, (unsigned char)a, (unsigned char)b}, c);
    else out.add(GenSymbol{Fam::R, twice, (unsigned char)b, (unsigned char)a}, -c);
}

// a, b with rank(a.fam) <= rank(b.fam).
LieElement ordered_bracket(const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b) {
    LieElement r;
    const int s = a.twice + b.twice;
    const CoeffPoly n = half(a.twice), m = half(b.twice);
    switch (a.fam) {
        case Fam::L:
            switch (b.fam) {
                case Fam::L:
                    r.add(GenSymbol{Fam::L, s}, n - m);
                    r.add(GenSymbol{Fam::M, s}, alg.nu * (m - n));
                    if (alg.central && s == 0) {
                        Rat k(a.twice / 2);
                        r.add(GenSymbol::Z(0), CoeffPoly(k * (k * k - 1)));
                    }
                    break;
                case Fam::Y:
                    r.add(GenSymbol{Fam::Y, s, b.i}, (CoeffPoly(1) + alg.eps) * n * CoeffPoly::frac(1, 2) - m - alg.mu);
                    break;
                case Fam::M: r.add(GenSymbol{Fam::M, s}, alg.eps * n - m - CoeffPoly(2) * alg.mu); break;
                case Fam::R: r.add(GenSymbol{Fam::R, s, b.i, b.j}, -m); break;
                case Fam::Z: break;
            }
            break;
        case Fam::Y:
            switch (b.fam) {
                case Fam::Y:
                    if (a.i == b.i) r.add(GenSymbol{Fam::M, s}, n - m);
                    break;
                case Fam::R: {
                    // [Y^k, R^{ij}] = -(delta_jk Y^i - delta_ik Y^j)
                    if (b.j == a.i) r.add(GenSymbol{Fam::Y, s, b.i}, CoeffPoly(-1));
                    if (b.i == a.i) r.add(GenSymbol{Fam::Y, s, b.j}, CoeffPoly(1));
                    break;
                }
                default: break;
            }
            break;
        case Fam::R:
            if (b.fam == Fam::R) {
                int i = a.i, j = a.j, k = b.i, l = b.j;
                CoeffPoly one(1), neg(-1);
                if (j == k) add_rot(r, i, l, s, one);
                if (i == l) add_rot(r, j, k, s, one);
                if (j == l) add_rot(r, i, k, s, neg);
                if (i == k) add_rot(r, j, l, s, neg);
            }
            break;
        default: break;
    }
    return r;
}

}  // namespace

LieElement bracket(const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b) {
    validate(alg, a);
    validate(alg, b);
    LieElement r = rank(a.fam) <= rank(b.fam) ? ordered_bracket(alg, a, b) : -ordered_bracket(alg, b, a);
    if (alg.extra && a.fam != Fam::Z && b.fam != Fam::Z) r.add(GenSymbol::Z(1), alg.extra(a, b));
    return r;
}

LieElement bracket(const AlgebraId& alg, const LieElement& a, const GenSymbol& b) {
    LieElement r;
    for (auto& [g, c] : a.terms()) r += c * bracket(alg, g, b);
    return r;
}

LieElement bracket(const AlgebraId& alg, const LieElement& a, const LieElement& b) {
    LieElement r;
    for (auto& [g, c] : b.terms()) r += c * bracket(alg, a, g);
    return r;
}

LieElement jacobi_defect(const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b, const GenSymbol& c) {
    return bracket(alg, bracket(alg, a, b), c) + bracket(alg, bracket(alg, b, c), a) +
           bracket(alg, bracket(alg, c, a), b);
}

namespace {

std::string fam_tag(const GenSymbol& g) {
    switch (g.fam) {
        case Fam::L: return "L";
        case Fam::Y: return "Y";
        case Fam::M: return "M";
        case Fam::R: return "R";
        case Fam::Z: return "Z";
    }
    return "?";
}

// One check per sorted family tuple; the witness is the first failure in index order.
void grouped(SuiteReport& rep, const std::string& prefix, const std::vector<std::vector<GenSymbol>>& cases,
             const std::vector<std::string>& defects) {
    std::map<std::string, std::pair<std::size_t, std::string>> groups;
    for (std::size_t p = 0; p < cases.size(); ++p) {
        std::vector<std::string> tags;
        std::string names;
        for (const auto& g : cases[p]) {
            tags.push_back(fam_tag(g));
            names += (names.empty() ? "" : ", ") + g.str();
        }
        std::sort(tags.begin(), tags.end());
        std::string key;
        for (const auto& t : tags) key += (key.empty() ? "" : ",") + t;
        auto& g = groups[key];
        ++g.first;
        if (!defects[p].empty() && g.second.empty()) g.second = "(" + names + ") -> " + defects[p];
    }
    for (const auto& [key, g] : groups)
        rep.add(prefix + "[" + key + "]", g.second.empty(), g.second.empty() ? std::to_string(g.first) + " cases" : g.second);
}

}  // namespace

SuiteReport verify_jacobi(const AlgebraId& alg, int window, Exec exec) {
    SuiteReport rep;
    rep.suite = "jacobi";
    rep.config = {{"algebra", alg.name()}, {"window", std::to_string(window)}};
    auto syms = symbols_in_window(alg, window);
    const std::size_t n = syms.size();

    std::vector<std::vector<GenSymbol>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.push_back({syms[i], syms[j]});
    std::vector<std::string> pd(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        LieElement s = bracket(alg, pairs[p][0], pairs[p][1]) + bracket(alg, pairs[p][1], pairs[p][0]);
        if (!s.is_zero()) pd[p] = s.str();
    }
    grouped(rep, "antisymmetry", pairs, pd);

    // Jacobi is alternating once antisymmetry holds, so strictly increasing triples suffice.
    std::vector<std::vector<GenSymbol>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) triples.push_back({syms[i], syms[j], syms[k]});
    std::vector<std::string> td(triples.size());
    auto one = [&](std::size_t p) {
        LieElement d = jacobi_defect(alg, triples[p][0], triples[p][1], triples[p][2]);
        if (!d.is_zero()) td[p] = d.str();
    };
    if (exec == Exec::Serial) {
        for (std::size_t p = 0; p < triples.size(); ++p) one(p);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::size_t p = 0; p < triples.size(); ++p) one(p);
    }
    grouped(rep, "jacobi", triples, td);
    return rep;
}

std::vector<GenSymbol> symbols_in_window(const AlgebraId& alg, int window) {
    std::vector<GenSymbol> out;
    int lo = -window, hi = window;
    for (int t = lo; t <= hi; ++t) {
        out.push_back({Fam::L, t});
        out.push_back({Fam::M, t});
        if (alg.d == 1) out.push_back({Fam::Y, t, 0});
        for (int c = 1; c <= alg.d && alg.d > 1; ++c) out.push_back({Fam::Y, t, (unsigned char)c});
        for (int i = 1; i <= alg.d; ++i)
            for (int j = i + 1; j <= alg.d; ++j) out.push_back({Fam::R, t, (unsigned char)i, (unsigned char)j});
    }
    std::erase_if(out, [&](const GenSymbol& g) { return !is_valid(alg, g); });
    std::sort(out.begin(), out.end());
    return out;
}

// -------------------------------------------------------------- gradings

Rat graduation_weight(Grading which, const GenSymbol& g) {
    Rat n = g.index();
    if (which == Grading::Delta1 || g.fam == Fam::Z) return n;
    switch (g.fam) {
        case Fam::Y: return n - Q(1, 2);
        case Fam::M: return n - 1;
        default: return n;
    }
}

LieElement apply_grading(Grading which, const LieElement& x) {
    LieElement r;
    for (auto& [g, c] : x.terms()) r.add(g, c * CoeffPoly(graduation_weight(which, g)));
    return r;
}

LieElement derivation_defect(Grading which, const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b) {
    LieElement ab = bracket(alg, a, b);
    CoeffPoly wa(graduation_weight(which, a)), wb(graduation_weight(which, b));
    return apply_grading(which, ab) - (wa + wb) * ab;
}

// ---------------------------------------------------------------- Poisson

std::string PoissonMonomial::str() const { return "z^" + z.str() + "*d^" + d.str(); }

PoissonElement poisson_bracket(const PoissonMonomial& a, const PoissonMonomial& b) {
    // {z^a d^k, z^b d^l} = (k b - l a) z^{a+b-1} d^{k+l-1}
    Rat c = Q(a.d.twice * b.z.twice - b.d.twice * a.z.twice, 4);
    PoissonElement r;
    if (sgn(c) != 0) r[{{a.z.twice + b.z.twice - 2}, {a.d.twice + b.d.twice - 2}}] = c;
    return r;
}

std::string str(const PoissonElement& e) {
    if (e.empty()) return "0";
    std::string s;
    for (auto& [m, c] : e) {
        if (!s.empty()) s += " + ";
        s += "(" + rat_str(c) + ")*" + m.str();
    }
    return s;
}

namespace {
void padd(PoissonElement& e, const PoissonMonomial& m, const Rat& c) {
    Rat& v = e[m];
    v += c;
    if (sgn(v) == 0) e.erase(m);
}
}  // namespace

PoissonElement poisson_image(const GenSymbol& g) {
    PoissonElement r;
    switch (g.fam) {
        case Fam::L: r[{{g.twice + 2}, {2}}] = -1; break;
        case Fam::Y: r[{{g.twice + 1}, {1}}] = 1; break;
        case Fam::M: r[{{g.twice}, {0}}] = Q(-1, 2); break;
        default: throw InvalidSymbol("no Poisson image for " + g.str());
    }
    return r;
}

PoissonElement poisson_image(const LieElement& x) {
    PoissonElement r;
    for (auto& [g, c] : x.terms()) {
        if (!c.is_constant() || !c.constant_term().is_real()) throw InvalidSymbol("non-numeric coefficient");
        for (auto& [m, v] : poisson_image(g)) padd(r, m, v * c.constant_term().re());
    }
    return r;
}

PoissonEmbeddingReport verify_sv_poisson_embedding_defect(int window) {
    AlgebraId sv = AlgebraId::sv();
    auto syms = symbols_in_window(sv, window);
    PoissonEmbeddingReport rep;
    for (std::size_t x = 0; x < syms.size(); ++x) {
        for (std::size_t y = x; y < syms.size(); ++y) {
            const auto &a = syms[x], &b = syms[y];
            PoissonElement lhs;
            for (auto& [ma, ca] : poisson_image(a))
                for (auto& [mb, cb] : poisson_image(b))
                    for (auto& [m, c] : poisson_bracket(ma, mb)) padd(lhs, m, c * ca * cb);
            PoissonElement rhs = poisson_image(bracket(sv, a, b));
            PoissonElement defect = lhs;
            for (auto& [m, c] : rhs) padd(defect, m, -c);
            PairCheck pc{a, b};
            pc.match = defect.empty();
            for (auto& [m, c] : defect)
                if (m.d.twice >= 0) pc.defect_negative_density = false;
            pc.defect = str(defect);
            if (!pc.match) {
                ++rep.mismatches;
                bool ym = (a.fam == Fam::Y && b.fam == Fam::M) || (a.fam == Fam::M && b.fam == Fam::Y);
                if (!ym) rep.mismatches_only_on_YM = false;
            }
            if (!pc.defect_negative_density) rep.quotient_homomorphism = false;
            rep.pairs.push_back(std::move(pc));
        }
    }
    return rep;
}

// ---------------------------------------------------------------- no-go

NogoReport verify_nogo(int n_window, int pm_window) {
    // a_{p,m} = lambda p + mu m, unknowns (lambda, mu); Jacobi on (L_n, Y+_m, Y-_p):
    // (m - n/2) a_{p,n+m} + (n - m - p) a_{p,m} + (p - n/2) a_{p+n,m} = 0
    auto a = [](const Rat& p, const Rat& m) { return Row{GaussRat(p), GaussRat(m)}; };
    std::vector<Row> rows;
    for (int n = -n_window; n <= n_window; ++n)
        for (int tp = -pm_window; tp <= pm_window; ++tp)
            for (int tm = -pm_window; tm <= pm_window; ++tm) {
                Rat N(n), p(tp, 2), m(tm, 2);
                Row r(2);
                auto acc = [&](const Rat& k, const Row& coeffs) {
                    for (int u = 0; u < 2; ++u) r[u] += GaussRat(k) * coeffs[u];
                };
                acc(m - N / 2, a(p, N + m));
                acc(N - m - p, a(p, m));
                acc(p - N / 2, a(p + N, m));
                rows.push_back(std::move(r));
            }
    NogoReport rep;
    rep.equations = rows.size();
    rep.rank = rref(rows, 2).rank();
    rep.solutions = nullspace(rows, 2);
    return rep;
}

SuiteReport nogo_suite(int n_window, int pm_window) {
    SuiteReport rep;
    rep.suite = "nogo";
    rep.config = {{"n_window", std::to_string(n_window)}, {"pm_window", std::to_string(pm_window)}};
    NogoReport r = verify_nogo(n_window, pm_window);
    std::string w = std::to_string(r.equations) + " equations, rank " + std::to_string(r.rank);
    rep.add_expected_fail("[Y+_m, Y-_p] = (lambda p + mu m) L_{m+p} admits a nonzero solution", r.only_trivial(), w);
    return rep;
}

SuiteReport poisson_suite(int window) {
    SuiteReport rep;
    rep.suite = "poisson";
    rep.config = {{"window", std::to_string(window)}};
    auto r = verify_sv_poisson_embedding_defect(window);
    std::string first;
    for (const auto& pc : r.pairs)
        if (!pc.match) {
            first = "[" + pc.a.str() + ", " + pc.b.str() + "] -> " + pc.defect;
            break;
        }
    rep.add_expected_fail("the symbol map is a homomorphism into the Poisson algebra", r.mismatches > 0,
                          std::to_string(r.mismatches) + " mismatching pairs, e.g. " + first);
    rep.add("the map preserves every bracket except [Y, M]", r.mismatches_only_on_YM);
    rep.add("every defect lies in densities of negative weight (homomorphism modulo them)", r.quotient_homomorphism);
    return rep;
}

}  // namespace svw
