#include "svw/cohomology.hpp"

#include "svw/linalg.hpp"

#include <algorithm>
#include <set>

namespace svw {

namespace {

int rank(Fam f) { return static_cast<int>(f); }
Rat idx(const GenSymbol& g) { return g.index(); }
CoeffPoly cp(const Rat& r) { return CoeffPoly(r); }

std::string triple_str(const GenSymbol& a, const GenSymbol& b, const GenSymbol& e) {
    return "(" + a.str() + ", " + b.str() + ", " + e.str() + ")";
}

}  // namespace

BracketFn bracket_of(const AlgebraId& alg) {
    return [alg](const GenSymbol& a, const GenSymbol& b) { return bracket(alg, a, b); };
}

LieElement bracket_ext(const BracketFn& br, const LieElement& a, const LieElement& b) {
    LieElement r;
    for (auto& [x, cx] : a.terms())
        for (auto& [y, cy] : b.terms()) r += (cx * cy) * br(x, y);
    return r;
}

Cochain2 antisym(Cochain2 rule) {
    return [rule = std::move(rule)](const GenSymbol& a, const GenSymbol& b) {
        return rank(a.fam) <= rank(b.fam) ? rule(a, b) : -rule(b, a);
    };
}

Scalar2 antisym(Scalar2 rule) {
    return [rule = std::move(rule)](const GenSymbol& a, const GenSymbol& b) {
        return rank(a.fam) <= rank(b.fam) ? rule(a, b) : -rule(b, a);
    };
}

LieElement evaluate(const Cochain1& c, const LieElement& x) {
    LieElement r;
    for (auto& [g, k] : x.terms())
        if (g.fam != Fam::Z) r += k * c(g);
    return r;
}

LieElement evaluate(const Cochain2& c, const LieElement& x, const GenSymbol& b) {
    LieElement r;
    for (auto& [g, k] : x.terms())
        if (g.fam != Fam::Z) r += k * c(g, b);
    return r;
}

CoeffPoly evaluate(const Scalar2& c, const LieElement& x, const GenSymbol& b) {
    CoeffPoly r;
    for (auto& [g, k] : x.terms())
        if (g.fam != Fam::Z) r += k * c(g, b);
    return r;
}

LieElement coboundary0(const BracketFn& br, const LieElement& x, const GenSymbol& a) {
    return bracket_ext(br, LieElement(a), x);
}

LieElement coboundary1(const BracketFn& br, const Cochain1& c, const GenSymbol& a, const GenSymbol& b) {
    return bracket_ext(br, LieElement(a), c(b)) - bracket_ext(br, LieElement(b), c(a)) - evaluate(c, br(a, b));
}

Cochain2 coboundary1(const BracketFn& br, const Cochain1& c) {
    return [br, c](const GenSymbol& a, const GenSymbol& b) { return coboundary1(br, c, a, b); };
}

LieElement coboundary2(const BracketFn& br, const Cochain2& c, const GenSymbol& a, const GenSymbol& b,
                       const GenSymbol& e) {
    LieElement r = bracket_ext(br, LieElement(a), c(b, e)) - bracket_ext(br, LieElement(b), c(a, e)) +
                   bracket_ext(br, LieElement(e), c(a, b));
    r -= evaluate(c, br(a, b), e);
    r += evaluate(c, br(a, e), b);
    r -= evaluate(c, br(b, e), a);
    return r;
}

CoeffPoly coboundary2(const BracketFn& br, const Scalar2& c, const GenSymbol& a, const GenSymbol& b,
                      const GenSymbol& e) {
    return evaluate(c, br(b, e), a) - evaluate(c, br(a, e), b) + evaluate(c, br(a, b), e);
}

LieElement nr_bracket_component(const Cochain2& c, const Cochain2& d, const GenSymbol& a, const GenSymbol& b,
                                const GenSymbol& e) {
    LieElement r;
    const GenSymbol t[3] = {a, b, e};
    for (int k = 0; k < 3; ++k) {
        const GenSymbol &x = t[k], &y = t[(k + 1) % 3], &z = t[(k + 2) % 3];
        r += evaluate(c, d(x, y), z) + evaluate(d, c(x, y), z);
    }
    return r;
}

std::optional<std::string> first_nonzero_triple(
    const std::vector<GenSymbol>& syms,
    const std::function<std::string(const GenSymbol&, const GenSymbol&, const GenSymbol&)>& f) {
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j)
            for (std::size_t k = j + 1; k < syms.size(); ++k) triples.push_back({i, j, k});
    std::vector<char> bad(triples.size(), 0);
    const long n = static_cast<long>(triples.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long t = 0; t < n; ++t) {
        auto [i, j, k] = triples[t];
        bad[t] = !f(syms[i], syms[j], syms[k]).empty();
    }
    auto it = std::find(bad.begin(), bad.end(), 1);
    if (it == bad.end()) return std::nullopt;
    auto [i, j, k] = triples[it - bad.begin()];
    return triple_str(syms[i], syms[j], syms[k]) + " -> " + f(syms[i], syms[j], syms[k]);
}

// ---------------------------------------------------------------- named cochains

Cochain2 deformation_cocycle(int which, bool printed_sign) {
    const long s = printed_sign ? -1 : 1;
    switch (which) {
        case 1:
            return antisym(Cochain2([s](const GenSymbol& a, const GenSymbol& b) {
                LieElement r;
                if (a.fam != Fam::L) return r;
                if (b.fam == Fam::Y) r.add(GenSymbol{Fam::Y, a.twice + b.twice, b.i}, cp(idx(a) / 2 * s));
                if (b.fam == Fam::M) r.add(GenSymbol::M((a.twice + b.twice) / 2), cp(idx(a) * s));
                return r;
            }));
        case 2:
            return antisym(Cochain2([s](const GenSymbol& a, const GenSymbol& b) {
                LieElement r;
                if (a.fam != Fam::L) return r;
                if (b.fam == Fam::Y) r.add(GenSymbol{Fam::Y, a.twice + b.twice, b.i}, CoeffPoly(-s));
                if (b.fam == Fam::M) r.add(GenSymbol::M((a.twice + b.twice) / 2), CoeffPoly(-2 * s));
                return r;
            }));
        case 3:
            return antisym(Cochain2([](const GenSymbol& a, const GenSymbol& b) {
                LieElement r;
                if (a.fam == Fam::L && b.fam == Fam::L)
                    r.add(GenSymbol::M((a.twice + b.twice) / 2), cp(idx(b) - idx(a)));
                return r;
            }));
    }
    throw std::invalid_argument("deformation cocycle index must be 1, 2 or 3");
}

Scalar2 virasoro_cocycle() {
    return antisym(Scalar2([](const GenSymbol& a, const GenSymbol& b) {
        if (a.fam != Fam::L || b.fam != Fam::L || a.twice + b.twice != 0) return CoeffPoly();
        Rat n = idx(a);
        return cp(n * (n * n - 1));
    }));
}

std::vector<CentralCase> central_cases() {
    auto delta = [](const GenSymbol& a, const GenSymbol& b) { return a.twice + b.twice == 0; };
    std::vector<CentralCase> v;
    // twisted family
    v.push_back({"tsv-lambda=-3:c(L,Y)=delta", true, -3, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     return a.fam == Fam::L && b.fam == Fam::Y && delta(a, b) ? CoeffPoly(1) : CoeffPoly();
                 }))});
    v.push_back({"tsv-lambda=-3:c(L,Y)=n*delta", true, -3, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     return a.fam == Fam::L && b.fam == Fam::Y && delta(a, b) ? cp(idx(a)) : CoeffPoly();
                 }))});
    v.push_back({"tsv-lambda=-1:c(L,Y)=n^2*delta", true, -1, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     Rat n = idx(a);
                     return a.fam == Fam::L && b.fam == Fam::Y && delta(a, b) ? cp(n * n) : CoeffPoly();
                 }))});
    v.push_back({"tsv-lambda=1:c1(L,Y)=n^3*delta", true, 1, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     Rat n = idx(a);
                     return a.fam == Fam::L && b.fam == Fam::Y && delta(a, b) ? cp(n * n * n) : CoeffPoly();
                 }))});
    v.push_back({"tsv-lambda=1:c2(L,M)=c2(Y,Y)=n^3*delta", true, 1, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     Rat n = idx(a);
                     bool hit = (a.fam == Fam::L && b.fam == Fam::M) || (a.fam == Fam::Y && b.fam == Fam::Y);
                     return hit && delta(a, b) ? cp(n * n * n) : CoeffPoly();
                 }))});
    // half-integral family
    v.push_back({"sv-lambda=1:c1(Y,Y)=c1(L,M)=p^3*delta", false, 1, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     Rat p = idx(a);
                     bool hit = (a.fam == Fam::L && b.fam == Fam::M) || (a.fam == Fam::Y && b.fam == Fam::Y);
                     return hit && delta(a, b) ? cp(p * p * p) : CoeffPoly();
                 }))});
    v.push_back({"sv-lambda=-3:c1(Y,Y)=delta/p", false, -3, 0,
                 antisym(Scalar2([=](const GenSymbol& a, const GenSymbol& b) {
                     return a.fam == Fam::Y && b.fam == Fam::Y && delta(a, b) ? cp(1 / idx(a)) : CoeffPoly();
                 }))});
    return v;
}

Cochain1 h1_cocycle(const std::string& name) {
    if (name == "c1")
        return [](const GenSymbol& g) { return g.fam == Fam::L ? LieElement(GenSymbol{Fam::M, g.twice}) : LieElement(); };
    if (name == "c2")
        return [](const GenSymbol& g) {
            return g.fam == Fam::L ? LieElement(GenSymbol{Fam::M, g.twice}, cp(idx(g))) : LieElement();
        };
    if (name == "l")
        return [](const GenSymbol& g) {
            if (g.fam == Fam::Y) return LieElement(g);
            if (g.fam == Fam::M) return LieElement(g, CoeffPoly(2));
            return LieElement();
        };
    throw std::invalid_argument("unknown H^1 cocycle " + name);
}

// ---------------------------------------------------------------- tsv_1 model

BracketFn tsv1_model_bracket(const CoeffPoly& mu) {
    return [mu](const GenSymbol& a, const GenSymbol& b) {
        auto level = [](Fam f) { return f == Fam::L ? 0 : f == Fam::Y ? 1 : f == Fam::M ? 2 : -1; };
        int la = level(a.fam), lb = level(b.fam);
        if (la < 0 || lb < 0 || a.twice % 2 || b.twice % 2)
            throw InvalidSymbol("not a generator of the eps-model: " + a.str() + ", " + b.str());
        // z^{n+1} (z^{m+1})' - z^{m+1} (z^{n+1})' = (m-n) z^{n+m+1}
        Rat coef = idx(b) - idx(a);
        int s = (a.twice + b.twice) / 2;
        int lev = la + lb;
        CoeffPoly c = cp(coef);
        if (lev >= 3) {
            c *= mu;
            lev -= 3;
        }
        static const Fam fams[3] = {Fam::L, Fam::Y, Fam::M};
        return LieElement(GenSymbol{fams[lev], 2 * s}, c);
    };
}

Cochain2 tsv1_deformation_cocycle() {
    return antisym(Cochain2([](const GenSymbol& a, const GenSymbol& b) {
        LieElement r;
        int s = a.twice + b.twice;
        Rat k = idx(b) - idx(a);
        if (a.fam == Fam::Y && b.fam == Fam::M) r.add(GenSymbol{Fam::L, s}, cp(k));
        if (a.fam == Fam::M && b.fam == Fam::M) r.add(GenSymbol{Fam::Y, s}, cp(k));
        return r;
    }));
}

Cochain1 tsv1_cbar() {
    return [](const GenSymbol& g) { return g.fam == Fam::M ? LieElement(GenSymbol{Fam::L, g.twice}) : LieElement(); };
}

// ---------------------------------------------------------------- S^aff_{<=2}

namespace {

void hl_add(HalfLaurent& h, int e, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = h.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) h.erase(it);
    }
}

HalfLaurent hl_mono(int e, const Rat& c = 1) {
    HalfLaurent h;
    hl_add(h, e, c);
    return h;
}

HalfLaurent hl_deriv(const HalfLaurent& f) {
    HalfLaurent r;
    for (auto& [e, c] : f) hl_add(r, e - 2, c * Q(e, 2));
    return r;
}

HalfLaurent hl_mul(const HalfLaurent& f, const HalfLaurent& g) {
    HalfLaurent r;
    for (auto& [a, x] : f)
        for (auto& [b, y] : g) hl_add(r, a + b, x * y);
    return r;
}

HalfLaurent hl_lin(const Rat& a, const HalfLaurent& f, const Rat& b, const HalfLaurent& g) {
    HalfLaurent r;
    for (auto& [e, c] : f) hl_add(r, e, a * c);
    for (auto& [e, c] : g) hl_add(r, e, b * c);
    return r;
}

// Function attached to a mode: L_n -> t^{n+1}, Y_m -> t^{m+1/2}, M_p -> t^p (doubled exponents).
HalfLaurent mode_function(const GenSymbol& g) {
    switch (g.fam) {
        case Fam::L: return hl_mono(g.twice + 2);
        case Fam::Y: return hl_mono(g.twice + 1);
        case Fam::M: return hl_mono(g.twice);
        default: throw InvalidSymbol("no function form for " + g.str());
    }
}

}  // namespace

AffTriple affine_action(const GenSymbol& g, const AffTriple& v) {
    HalfLaurent f = mode_function(g);
    AffTriple r;
    if (g.fam == Fam::L) {
        // L_f . phi = lambda f' phi - f phi' on F_lambda, lambda = -2, -3/2, -1
        static const Rat weight[3] = {Q(-2), Q(-3, 2), Q(-1)};
        HalfLaurent fp = hl_deriv(f);
        for (int k = 0; k < 3; ++k) r[k] = hl_lin(weight[k], hl_mul(fp, v[k]), -1, hl_mul(f, hl_deriv(v[k])));
    } else if (g.fam == Fam::Y) {
        r[1] = hl_lin(2, hl_mul(f, v[0]), 0, {});
        r[2] = hl_mul(f, v[1]);
    }
    return r;
}

AffTriple affine_cocycle(int which, const GenSymbol& g, bool printed_m_sign) {
    HalfLaurent f = mode_function(g);
    AffTriple r;
    if (which == 1) {
        if (g.fam == Fam::L) r[0] = hl_lin(Q(1, 2), hl_deriv(hl_deriv(hl_deriv(f))), 0, {});
        if (g.fam == Fam::Y) r[1] = hl_lin(-2, hl_deriv(hl_deriv(f)), 0, {});
        if (g.fam == Fam::M) r[2] = hl_lin(printed_m_sign ? -2 : 2, hl_deriv(f), 0, {});
    } else if (which == 2) {
        if (g.fam == Fam::L) r[2] = hl_deriv(hl_deriv(f));
    } else {
        throw std::invalid_argument("affine cocycle index must be 1 or 2");
    }
    return r;
}

bool is_zero(const AffTriple& v) { return v[0].empty() && v[1].empty() && v[2].empty(); }

std::string str(const AffTriple& v) {
    std::string s = "(";
    for (int k = 0; k < 3; ++k) {
        if (k) s += ", ";
        if (v[k].empty()) s += "0";
        bool first = true;
        for (auto& [e, c] : v[k]) {
            if (!first) s += " + ";
            first = false;
            s += rat_str(c) + "*t^" + (e % 2 ? std::to_string(e) + "/2" : std::to_string(e / 2));
        }
    }
    return s + ")";
}

// ---------------------------------------------------------------- bounded-ansatz certificates

namespace {

// Linear system over unknowns indexed 0..N-1; one row per (equation key, output symbol).
struct LinSys {
    std::map<std::pair<std::size_t, GenSymbol>, std::map<std::size_t, Rat>> rows;
    std::map<std::pair<std::size_t, GenSymbol>, Rat> rhs;

    void add(std::size_t eq, const GenSymbol& out, std::size_t unknown, const Rat& c) {
        if (sgn(c) == 0) return;
        rows[{eq, out}][unknown] += c;
    }
    void add_rhs(std::size_t eq, const LieElement& x) {
        for (auto& [g, c] : x.terms()) {
            if (!c.is_constant() || !c.as_constant().is_real())
                throw std::invalid_argument("ansatz solver needs rational right-hand sides");
            rhs[{eq, g}] += c.as_constant().re();
            rows[{eq, g}];
        }
    }
    bool solvable(std::size_t unknowns) const {
        std::vector<Row> m;
        Row b;
        for (auto& [key, r] : rows) {
            Row row(unknowns);
            for (auto& [u, c] : r) row[u] = GaussRat(c);
            auto it = rhs.find(key);
            m.push_back(std::move(row));
            b.push_back(it == rhs.end() ? GaussRat(0) : GaussRat(it->second));
        }
        return solve(m, b, unknowns).has_value();
    }
};

Rat rational(const CoeffPoly& c) {
    if (!c.is_constant() || !c.as_constant().is_real())
        throw std::invalid_argument("ansatz solver needs numeric structure constants, got " + c.str());
    return c.as_constant().re();
}

}  // namespace

bool h1_exact_in_ansatz(const AlgebraId& alg, const Cochain1& c, int window, int shift_window) {
    auto unknowns = symbols_in_window(alg, shift_window);
    auto br = bracket_of(alg);
    LinSys sys;
    auto syms = symbols_in_window(alg, window);
    for (std::size_t e = 0; e < syms.size(); ++e) {
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            {
                LieElement x = br(syms[e], unknowns[u]);
                for (auto& [g, k] : x.terms()) sys.add(e, g, u, rational(k));
            }
        sys.add_rhs(e, c(syms[e]));
    }
    return sys.solvable(unknowns.size());
}

bool scalar_exact_in_ansatz(const AlgebraId& alg, const Scalar2& sc, int window, int shift_window) {
    auto unknowns = symbols_in_window(alg, shift_window);
    std::map<GenSymbol, std::size_t> pos;
    for (std::size_t u = 0; u < unknowns.size(); ++u) pos[unknowns[u]] = u;
    static const GenSymbol one = GenSymbol::Z(0);
    LinSys sys;
    auto syms = symbols_in_window(alg, window);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j, ++eq) {
            const LieElement ab = bracket(alg, syms[i], syms[j]);
            for (auto& [g, k] : ab.terms()) {
                auto it = pos.find(g);
                if (it != pos.end()) sys.add(eq, one, it->second, -rational(k));
            }
            CoeffPoly v = sc(syms[i], syms[j]);
            sys.add_rhs(eq, v.is_zero() ? LieElement() : LieElement(one, v));
            sys.rows[{eq, one}];
        }
    return sys.solvable(unknowns.size());
}

bool h2_exact_in_ansatz(const AlgebraId& alg, const Cochain2& c, int window, int max_shift, int max_deg) {
    if (!alg.twisted) throw std::invalid_argument("the 1-cochain ansatz is set up for integral Y modes");
    static const Fam fams[3] = {Fam::L, Fam::Y, Fam::M};
    const int nk = 2 * max_shift + 1, nd = max_deg + 1;
    auto unknown = [&](int x, int f, int k, int e) { return (((std::size_t)x * 3 + f) * nk + (k + max_shift)) * nd + e; };
    const std::size_t total = 9 * (std::size_t)nk * nd;
    auto fam_idx = [](Fam f) { return f == Fam::L ? 0 : f == Fam::Y ? 1 : 2; };
    // b(X_n) as (unknown, symbol, coefficient)
    auto b_of = [&](const GenSymbol& g) {
        std::vector<std::tuple<std::size_t, GenSymbol, Rat>> out;
        int x = fam_idx(g.fam);
        Rat n = idx(g);
        for (int f = 0; f < 3; ++f)
            for (int k = -max_shift; k <= max_shift; ++k) {
                Rat pw = 1;
                for (int e = 0; e <= max_deg; ++e, pw *= n)
                    out.emplace_back(unknown(x, f, k, e), GenSymbol{fams[f], g.twice + 2 * k}, pw);
            }
        return out;
    };
    auto br = bracket_of(alg);
    auto syms = symbols_in_window(alg, window);
    // The ad(L_0)-weight shift k of each unknown is read off from the output symbol, so the system
    // splits into independent blocks by k; solve each block separately.
    std::map<int, LinSys> blocks;
    std::size_t eq = 0;
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j, ++eq) {
            const GenSymbol &a = syms[i], &b = syms[j];
            int base = a.twice + b.twice;
            auto put = [&](std::size_t u, const LieElement& x, const Rat& s) {
                for (auto& [g, k] : x.terms()) blocks[(g.twice - base) / 2].add(eq, g, u, s * rational(k));
            };
            for (auto& [u, g, w] : b_of(b)) put(u, br(a, g), w);
            for (auto& [u, g, w] : b_of(a)) put(u, br(b, g), -w);
            const LieElement ab = br(a, b), cab = c(a, b);
            for (auto& [h, k] : ab.terms())
                if (h.fam != Fam::Z)
                    for (auto& [u, g, w] : b_of(h)) put(u, LieElement(g), -w * rational(k));
            for (auto& [g, k] : cab.terms()) {
                LieElement one(g, k);
                blocks[(g.twice - base) / 2].add_rhs(eq, one);
            }
        }
    for (auto& [k, sys] : blocks)
        if (!sys.solvable(total)) return false;
    return true;
}

// ---------------------------------------------------------------- suites

namespace {

std::string nonzero_str(const LieElement& x) { return x.is_zero() ? std::string() : x.str(); }
std::string nonzero_str(const CoeffPoly& x) { return x.is_zero() ? std::string() : x.str(); }

void add_closed(SuiteReport& rep, const std::string& id, const std::vector<GenSymbol>& syms,
                const std::function<std::string(const GenSymbol&, const GenSymbol&, const GenSymbol&)>& f) {
    auto w = first_nonzero_triple(syms, f);
    rep.add(id, !w, w.value_or(""));
}

}  // namespace

SuiteReport verify_deformation_cocycles(int window) {
    SuiteReport rep;
    rep.suite = "deformation";
    rep.config = {{"window", std::to_string(window)}};
    for (bool twisted : {true, false}) {
        AlgebraId alg = twisted ? AlgebraId::tsv() : AlgebraId::sv();
        auto br = bracket_of(alg);
        auto syms = symbols_in_window(alg, window);
        std::string pre = alg.name() + ":";
        for (int i = 1; i <= 3; ++i)
            for (bool printed : {false, true}) {
                if (i == 3 && printed) continue;
                auto c = deformation_cocycle(i, printed);
                add_closed(rep, pre + "dc" + std::to_string(i) + (printed ? "(printed signs)" : "") + "=0", syms,
                           [&](auto& a, auto& b, auto& e) { return nonzero_str(coboundary2(br, c, a, b, e)); });
            }
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j) {
                auto ci = deformation_cocycle(i), cj = deformation_cocycle(j);
                add_closed(rep, pre + "[c" + std::to_string(i) + ",c" + std::to_string(j) + "]=0", syms,
                           [&](auto& a, auto& b, auto& e) { return nonzero_str(nr_bracket_component(ci, cj, a, b, e)); });
            }
    }
    // the deformed bracket is the sum of the three cocycles
    {
        CoeffPoly l = CoeffPoly::var("lambda"), m = CoeffPoly::var("mu"), n = CoeffPoly::var("nu");
        AlgebraId def = AlgebraId::tsv_def(l, m, n), base = AlgebraId::tsv();
        auto c1 = deformation_cocycle(1), c2 = deformation_cocycle(2), c3 = deformation_cocycle(3);
        auto syms = symbols_in_window(base, window);
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms) {
                LieElement d = bracket(def, a, b) - bracket(base, a, b) - l * c1(a, b) - m * c2(a, b) - n * c3(a, b);
                if (!d.is_zero() && w.empty()) w = "(" + a.str() + ", " + b.str() + ") -> " + d.str();
            }
        rep.add("tsv-def=tsv+lambda*c1+mu*c2+nu*c3", w.empty(), w);
    }
    // not coboundaries of mode-local 1-cochains
    {
        AlgebraId alg = AlgebraId::tsv();
        int w = std::min(window, 8);
        for (int i = 1; i <= 3; ++i) {
            bool exact = h2_exact_in_ansatz(alg, deformation_cocycle(i), w, 4, 4);
            rep.add("tsv:c" + std::to_string(i) + " not exact (|k|<=4, deg<=4)", !exact,
                    exact ? "a primitive exists in the ansatz" : "");
        }
        // sanity: a genuine coboundary is recognised
        Cochain1 b = [](const GenSymbol& g) {
            return g.fam == Fam::L ? LieElement(GenSymbol{Fam::Y, g.twice}, cp(idx(g) * idx(g))) : LieElement();
        };
        bool exact = h2_exact_in_ansatz(alg, coboundary1(bracket_of(alg), b), w, 4, 4);
        rep.add("tsv:d(L_n -> n^2 Y_n) recognised as exact", exact);
    }
    return rep;
}

SuiteReport verify_central_extensions(int window) {
    SuiteReport rep;
    rep.suite = "central";
    rep.config = {{"window", std::to_string(window)}};
    auto vir = virasoro_cocycle();
    for (Rat lam : {Q(-3), Q(-1), Q(0), Q(1), Q(1, 2)})
        for (bool twisted : {true, false}) {
            AlgebraId alg = AlgebraId::sv_eps(cp(lam), twisted);
            auto br = bracket_of(alg);
            add_closed(rep, alg.name() + ":virasoro", symbols_in_window(alg, window),
                       [&](auto& a, auto& b, auto& e) { return nonzero_str(coboundary2(br, vir, a, b, e)); });
        }
    for (auto& cc : central_cases()) {
        AlgebraId exc = AlgebraId::sv_eps(cp(cc.lambda), cc.twisted);
        auto br = bracket_of(exc);
        auto w = first_nonzero_triple(symbols_in_window(exc, window), [&](auto& a, auto& b, auto& e) {
            return nonzero_str(coboundary2(br, cc.cocycle, a, b, e));
        });
        rep.add(cc.id + ":closed", !w, w.value_or(""));
        bool exact = scalar_exact_in_ansatz(exc, cc.cocycle, window, window);
        rep.add(cc.id + ":not a coboundary", !exact, exact ? "a primitive exists" : "");

        // At the control value the class must disappear: either the identity fails, or it is exact.
        AlgebraId ctl = AlgebraId::sv_eps(cp(cc.control), cc.twisted);
        auto brc = bracket_of(ctl);
        auto wc = first_nonzero_triple(symbols_in_window(ctl, window), [&](auto& a, auto& b, auto& e) {
            return nonzero_str(coboundary2(brc, cc.cocycle, a, b, e));
        });
        std::string id = cc.id + ":lambda=" + rat_str(cc.control);
        if (wc)
            rep.add_expected_fail(id + " not closed", true, *wc);
        else
            rep.add(id + " closed but a coboundary", scalar_exact_in_ansatz(ctl, cc.cocycle, window, window));
    }
    return rep;
}

SuiteReport verify_affine_cocycles(int window) {
    SuiteReport rep;
    rep.suite = "affine";
    rep.config = {{"window", std::to_string(window)}};
    AlgebraId alg = AlgebraId::sv();
    auto syms = symbols_in_window(alg, window);
    // test vectors: basis monomials of each component
    std::vector<AffTriple> vecs;
    for (int k = 0; k < 3; ++k)
        for (int e = -4; e <= 4; ++e) {
            AffTriple v;
            v[k] = hl_mono(k == 1 ? 2 * e + 1 : 2 * e);
            vecs.push_back(v);
        }
    auto act_elem = [](const LieElement& x, const AffTriple& v) {
        AffTriple r;
        for (auto& [g, c] : x.terms()) {
            Rat k = rational(c);
            AffTriple t = affine_action(g, v);
            for (int i = 0; i < 3; ++i) r[i] = hl_lin(1, r[i], k, t[i]);
        }
        return r;
    };
    auto sub = [](const AffTriple& a, const AffTriple& b) {
        AffTriple r;
        for (int i = 0; i < 3; ++i) r[i] = hl_lin(1, a[i], -1, b[i]);
        return r;
    };
    {
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms)
                for (auto& v : vecs) {
                    AffTriple d = sub(sub(affine_action(a, affine_action(b, v)), affine_action(b, affine_action(a, v))),
                                      act_elem(bracket(alg, a, b), v));
                    if (!is_zero(d) && w.empty()) w = "(" + a.str() + ", " + b.str() + ") on " + str(v) + " -> " + str(d);
                }
        rep.add("linear action is a representation", w.empty(), w);
    }
    // m_sign = -1 evaluates the cocycle identity for the opposite normalization [Y_f, Y_g] = M_{fg' - f'g}
    auto cocycle_defect = [&](int which, bool printed, int m_sign) {
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms) {
                AffTriple cab;
                const LieElement ab = bracket(alg, a, b);
                for (auto& [g, k] : ab.terms()) {
                    AffTriple t = affine_cocycle(which, g, printed);
                    Rat s = rational(k) * (a.fam == Fam::Y && b.fam == Fam::Y ? m_sign : 1);
                    for (int i = 0; i < 3; ++i) cab[i] = hl_lin(1, cab[i], s, t[i]);
                }
                AffTriple d = sub(sub(affine_action(a, affine_cocycle(which, b, printed)),
                                      affine_action(b, affine_cocycle(which, a, printed))),
                                  cab);
                if (!is_zero(d) && w.empty()) w = "(" + a.str() + ", " + b.str() + ") -> " + str(d);
            }
        return w;
    };
    for (int which : {1, 2}) {
        std::string w = cocycle_defect(which, false, 1);
        rep.add("c" + std::to_string(which) + " is a 1-cocycle", w.empty(), w);
    }
    {
        std::string w = cocycle_defect(1, true, 1);
        rep.add_expected_fail("c1 with M-component -2f' fails for [Y_f,Y_g] = M_{f'g-fg'}", !w.empty(), w);
        w = cocycle_defect(1, true, -1);
        rep.add("c1 with M-component -2f' closes for [Y_f,Y_g] = M_{fg'-f'g}", w.empty(), w);
    }
    return rep;
}

SuiteReport verify_h1(int window) {
    SuiteReport rep;
    rep.suite = "h1";
    rep.config = {{"window", std::to_string(window)}};
    AlgebraId alg = AlgebraId::tsv();
    auto br = bracket_of(alg);
    auto syms = symbols_in_window(alg, window);
    for (std::string name : {"c1", "c2", "l"}) {
        auto c = h1_cocycle(name);
        std::string w;
        for (std::size_t i = 0; i < syms.size() && w.empty(); ++i)
            for (std::size_t j = i + 1; j < syms.size() && w.empty(); ++j) {
                auto d = coboundary1(br, c, syms[i], syms[j]);
                if (!d.is_zero()) w = "(" + syms[i].str() + ", " + syms[j].str() + ") -> " + d.str();
            }
        rep.add(name + " closed", w.empty(), w);
        bool exact = h1_exact_in_ansatz(alg, c, window, 8);
        rep.add(name + " not ad(x) for x in span of modes |2k|<=8", !exact, exact ? "a primitive exists" : "");
    }
    // l against the graduations: the observed relation is l = -2(delta2 - delta1)
    {
        std::string w;
        for (auto& g : syms) {
            Rat k = -2 * (graduation_weight(Grading::Delta2, g) - graduation_weight(Grading::Delta1, g));
            LieElement lhs = h1_cocycle("l")(g), rhs = sgn(k) ? LieElement(g, cp(k)) : LieElement();
            if (!(lhs == rhs) && w.empty()) w = g.str();
        }
        rep.add("l = -2(delta2 - delta1)", w.empty(), w);
    }
    // a true coboundary is recognised, so the negative answers above are meaningful
    {
        LieElement x(GenSymbol::M(2), CoeffPoly(3));
        x.add(GenSymbol::Yt(-2), CoeffPoly(1));
        Cochain1 ad = [br, x](const GenSymbol& a) { return coboundary0(br, x, a); };
        rep.add("ad(3 M_2 + Y_-1) recognised as exact", h1_exact_in_ansatz(alg, ad, window, 8));
    }
    return rep;
}

SuiteReport verify_tsv1_deformation(int window) {
    SuiteReport rep;
    rep.suite = "tsv1-def";
    rep.config = {{"window", std::to_string(window)}};
    CoeffPoly mu = CoeffPoly::var("mu");
    auto deformed = tsv1_model_bracket(mu);
    auto base = tsv1_model_bracket(CoeffPoly());
    AlgebraId tsv = AlgebraId::tsv();
    auto syms = symbols_in_window(tsv, window);
    auto C = tsv1_deformation_cocycle();

    add_closed(rep, "jacobi of the eps^3=mu bracket (symbolic mu)", syms, [&](auto& a, auto& b, auto& e) {
        LieElement j = bracket_ext(deformed, bracket_ext(deformed, LieElement(a), LieElement(b)), LieElement(e)) +
                       bracket_ext(deformed, bracket_ext(deformed, LieElement(b), LieElement(e)), LieElement(a)) +
                       bracket_ext(deformed, bracket_ext(deformed, LieElement(e), LieElement(a)), LieElement(b));
        return nonzero_str(j);
    });
    {
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms) {
                LieElement d = deformed(a, b) - base(a, b) - mu * C(a, b);
                if (!d.is_zero() && w.empty()) w = "(" + a.str() + ", " + b.str() + ") -> " + d.str();
            }
        rep.add("eps-model bracket = base + mu*C", w.empty(), w);
    }
    {
        // x -> -x identifies the eps-model at mu = 0 with the lambda = 1 twisted algebra
        AlgebraId t1 = AlgebraId::sv_eps(CoeffPoly(1), true);
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms) {
                LieElement d = base(a, b) + bracket(t1, a, b);
                if (!d.is_zero() && w.empty()) w = "(" + a.str() + ", " + b.str() + ") -> " + d.str();
            }
        rep.add("mu=0 model is tsv_1 (up to x -> -x)", w.empty(), w);
    }
    add_closed(rep, "dC=0", syms, [&](auto& a, auto& b, auto& e) { return nonzero_str(coboundary2(base, C, a, b, e)); });
    add_closed(rep, "[C,C]=0", syms,
               [&](auto& a, auto& b, auto& e) { return nonzero_str(nr_bracket_component(C, C, a, b, e)); });
    {
        // the coboundary of cbar(M_n) = L_n, computed honestly
        auto cb = coboundary1(base, tsv1_cbar());
        std::string w;
        for (auto& a : syms)
            for (auto& b : syms) {
                LieElement expect;
                Rat k = idx(b) - idx(a);
                int s = a.twice + b.twice;
                if (a.fam == Fam::Y && b.fam == Fam::M) expect.add(GenSymbol{Fam::Y, s}, cp(k));
                if (a.fam == Fam::M && b.fam == Fam::Y) expect.add(GenSymbol{Fam::Y, s}, cp(k));
                if (a.fam == Fam::M && b.fam == Fam::M) expect.add(GenSymbol{Fam::M, s}, cp(2 * k));
                if (a.fam == Fam::Y && b.fam == Fam::Y) expect.add(GenSymbol{Fam::L, s}, cp(-k));
                if (!(cb(a, b) == expect) && w.empty())
                    w = "(" + a.str() + ", " + b.str() + ") -> " + cb(a, b).str();
            }
        rep.add("d(cbar): (Y,M)->(m-n)Y, (M,M)->2(m-n)M, (Y,Y)->(n-m)L, (L,M)->0", w.empty(), w);
    }
    return rep;
}

}  // namespace svw
