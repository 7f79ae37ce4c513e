#include "svw/verma.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace svw {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> c) : counts(std::move(c)) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

int Partition::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) d += int(i + 1) * counts[i];
    return d;
}

int Partition::width() const {
    int w = 0;
    for (int c : counts) w += c;
    return w;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i ? "," : "") + std::to_string(counts[i]);
    return s + ")";
}

bool partition_less(const Partition& a, const Partition& b) {
    if (a.width() != b.width()) return a.width() > b.width();
    return a.counts < b.counts;
}

namespace {

// All count vectors with sum_i weight(i) * a^i = total, parts 1..max_part.
void enumerate(int total, int part, const std::function<int(int)>& weight, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (total == 0) {
        out.emplace_back(cur);
        return;
    }
    if (part == 0) return;
    int w = weight(part);
    for (int k = 0; k * w <= total; ++k) {
        cur[part - 1] = k;
        enumerate(total - k * w, part - 1, weight, cur, out);
    }
    cur[part - 1] = 0;
}

std::vector<Partition> enumerate_sorted(int total, int max_part, const std::function<int(int)>& weight) {
    std::vector<Partition> out;
    if (total < 0) return out;
    std::vector<int> cur(std::max(max_part, 0), 0);
    enumerate(total, max_part, weight, cur, out);
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    return enumerate_sorted(n, n, [](int i) { return i; });
}

std::vector<Partition> shifted_partitions_of(int twice_s) {
    return enumerate_sorted(twice_s, (twice_s + 1) / 2, [](int i) { return 2 * i - 1; });
}

long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[k] += p[k - part];
    return p[n];
}

bool refinement_leq(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("refinement of " + a.str() + " and " + b.str() + " with different degrees");
    // Distribute the parts of a into bins given by the parts of b.
    std::vector<int> bins;
    for (std::size_t i = b.counts.size(); i-- > 0;) bins.insert(bins.end(), b.counts[i], int(i + 1));
    std::vector<int> parts;
    for (std::size_t i = a.counts.size(); i-- > 0;) parts.insert(parts.end(), a.counts[i], int(i + 1));
    std::vector<int> room = bins;
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == parts.size()) return true;
        for (std::size_t j = 0; j < room.size(); ++j) {
            if (room[j] < parts[k]) continue;
            // bins with equal remaining room are interchangeable
            bool seen = false;
            for (std::size_t i = 0; i < j && !seen; ++i) seen = room[i] == room[j] && bins[i] == bins[j];
            if (seen) continue;
            room[j] -= parts[k];
            bool ok = place(k + 1);
            room[j] += parts[k];
            if (ok) return true;
        }
        return false;
    };
    return place(0);
}

// ---------------------------------------------------------------- algebras and bases

std::string VermaAlgebra::name() const { return kind == VermaKind::SV ? "sv" : "vir-f0"; }

AlgebraId VermaAlgebra::lie() const {
    AlgebraId a = kind == VermaKind::SV ? AlgebraId::sv() : AlgebraId::vir_f0(central);
    a.central = central;
    return a;
}

std::vector<GenSymbol> PBWVector::word() const {
    std::vector<GenSymbol> w;
    for (std::size_t i = 0; i < A.counts.size(); ++i) w.insert(w.end(), A.counts[i], GenSymbol::L(-int(i + 1)));
    for (std::size_t i = 0; i < B.counts.size(); ++i) w.insert(w.end(), B.counts[i], GenSymbol::Yt(-int(2 * i + 1)));
    for (std::size_t i = 0; i < C.counts.size(); ++i) w.insert(w.end(), C.counts[i], GenSymbol::M(-int(i + 1)));
    return w;
}

std::string PBWVector::str() const {
    std::string s;
    auto w = word();
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        s += w[i].str();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        s += " ";
        i = j;
    }
    return s + "psi";
}

std::vector<PBWVector> pbw_basis(const VermaAlgebra& alg, int twice_n, Ordering ord) {
    if (twice_n < 0) throw std::invalid_argument("negative degree");
    bool sv = alg.kind == VermaKind::SV;
    if (!sv && twice_n % 2) throw std::invalid_argument("vir-f0 degrees are integral");
    std::vector<PBWVector> out;
    for (int deg_c = twice_n / 2; deg_c >= 0; --deg_c) {
        int rest = twice_n - 2 * deg_c;
        for (const auto& C : partitions_of(deg_c))
            for (int kappa = sv ? rest : 0; kappa >= 0; --kappa) {
                if ((rest - kappa) % 2) continue;
                auto As = partitions_of((rest - kappa) / 2);
                for (const auto& B : shifted_partitions_of(kappa))
                    for (auto A = As.rbegin(); A != As.rend(); ++A) out.push_back({*A, B, C});
            }
    }
    if (ord == Ordering::L)
        for (auto& v : out) v = v.swapped();
    return out;
}

// ---------------------------------------------------------------- vacuum expectations

namespace {

// Polynomials in h, mu, c with rational coefficients; exponents indexed h, mu, c.
using Expo = std::array<unsigned char, 3>;
using HPoly = std::map<Expo, Rat>;

void axpy(HPoly& acc, const Rat& s, const HPoly& x, int shift_var = -1) {
    for (const auto& [e, q] : x) {
        Expo f = e;
        if (shift_var >= 0) ++f[shift_var];
        Rat& slot = acc[f];
        slot += s * q;
        if (sgn(slot) == 0) acc.erase(f);
    }
}

CoeffPoly to_coeff(const HPoly& p) {
    static const char* names[3] = {"h", "mu", "c"};
    CoeffPoly r;
    for (const auto& [e, q] : p) {
        Monomial m;
        for (int v = 0; v < 3; ++v)
            if (e[v]) m = m * Monomial::var(names[v], e[v]);
        r += CoeffPoly(m, GaussRat(q));
    }
    return r;
}

// Letters are two chars: family (0 L, 1 Y, 2 M) and twice the index.
enum : char { kL = 0, kY = 1, kM = 2 };

struct Term {
    char fam;
    int twice;
    Rat coeff;
    bool central;  // the Virasoro cocycle value (coefficient of c/12); no letter
};

// Structure constants of sv / vir-f0, same convention as liealg.
std::vector<Term> letter_bracket(bool central, char fa, int ta, char fb, int tb) {
    std::vector<Term> r;
    int s = ta + tb;
    Rat n = Q(ta, 2), m = Q(tb, 2);
    auto add = [&](char f, const Rat& q) {
        if (sgn(q) != 0) r.push_back({f, s, q, false});
    };
    if (fa > fb) {
        for (auto& t : letter_bracket(central, fb, tb, fa, ta)) {
            t.coeff = -t.coeff;
            r.push_back(t);
        }
        return r;
    }
    if (fa == kL && fb == kL) {
        add(kL, n - m);
        if (central && s == 0 && ta != 0) {
            Rat k = n;
            r.push_back({0, 0, (k * k * k - k) / 12, true});
        }
    } else if (fa == kL && fb == kY) {
        add(kY, n / 2 - m);
    } else if (fa == kL && fb == kM) {
        add(kM, -m);
    } else if (fa == kY && fb == kY) {
        add(kM, n - m);
    }
    return r;
}

class Evaluator {
public:
    explicit Evaluator(const VermaAlgebra& alg) : central_(alg.central) {}

    HPoly eval(const std::string& w) {
        if (w.empty()) return one();
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        HPoly r = compute(w);
        memo_.emplace(w, r);
        return r;
    }

    static std::string encode(const std::vector<GenSymbol>& word) {
        std::string w;
        for (const auto& g : word) {
            char f = g.fam == Fam::L ? kL : g.fam == Fam::Y ? kY : g.fam == Fam::M ? kM : -1;
            if (f < 0) throw InvalidSymbol(g.str() + " in a Verma word");
            w += f;
            w += char(g.twice);
        }
        return w;
    }

private:
    static HPoly one() { return {{Expo{0, 0, 0}, Rat(1)}}; }

    static int zero_mode_var(char fam) { return fam == kL ? 0 : 1; }

    HPoly compute(const std::string& w) {
        const std::size_t len = w.size() / 2;
        int total = 0;
        for (std::size_t i = 0; i < len; ++i) total += w[2 * i + 1];
        if (total != 0) return {};
        // <psi| X_{-n} = 0 and X_n |psi> = 0 for n > 0; zero modes act by scalars at either end.
        int first = w[1], last = w[2 * len - 1];
        if (first < 0 || last > 0) return {};
        if (first == 0) {
            HPoly r;
            axpy(r, 1, eval(w.substr(2)), zero_mode_var(w[0]));
            return r;
        }
        if (last == 0) {
            HPoly r;
            axpy(r, 1, eval(w.substr(0, w.size() - 2)), zero_mode_var(w[2 * len - 2]));
            return r;
        }
        // Move the rightmost annihilator a to the right: a v_1..v_m psi = sum_j v_1..[a,v_j]..v_m psi.
        std::size_t k = len;
        while (k-- > 0)
            if (w[2 * k + 1] > 0) break;
        const char fa = w[2 * k];
        const int ta = w[2 * k + 1];
        std::string base = w.substr(0, 2 * k) + w.substr(2 * k + 2);
        HPoly r;
        for (std::size_t j = k; j + 1 < len; ++j) {
            const std::size_t pos = 2 * j;  // position of v_j in base
            for (const auto& t : letter_bracket(central_, fa, ta, base[pos], base[pos + 1])) {
                if (t.central) {
                    axpy(r, t.coeff, eval(base.substr(0, pos) + base.substr(pos + 2)), 2);
                } else {
                    std::string nw = base;
                    nw[pos] = t.fam;
                    nw[pos + 1] = char(t.twice);
                    axpy(r, t.coeff, eval(nw));
                }
            }
        }
        return r;
    }

    bool central_;
    std::unordered_map<std::string, HPoly> memo_;
};

std::vector<GenSymbol> adjoint(std::vector<GenSymbol> w) {
    std::reverse(w.begin(), w.end());
    for (auto& g : w) g.twice = -g.twice;
    return w;
}

std::string pair_word(const PBWVector& x, const PBWVector& y) {
    auto w = adjoint(x.word());
    auto wy = y.word();
    w.insert(w.end(), wy.begin(), wy.end());
    return Evaluator::encode(w);
}

// Fills m(i, j) = <left(i, j) | right(i, j)>.
template <class Left, class Right>
PolyMatrix fill(const VermaAlgebra& alg, std::size_t n, Left left, Right right, Exec exec) {
    std::vector<HPoly> vals(n * n);
    auto run = [&](Evaluator& ev, std::size_t p) {
        vals[p] = ev.eval(pair_word(left(p / n, p % n), right(p / n, p % n)));
    };
    if (exec == Exec::Serial) {
        Evaluator ev(alg);
        for (std::size_t p = 0; p < n * n; ++p) run(ev, p);
    } else {
#pragma omp parallel
        {
            Evaluator ev(alg);
#pragma omp for schedule(dynamic)
            for (std::size_t p = 0; p < n * n; ++p) run(ev, p);
        }
    }
    PolyMatrix m(n, n);
    for (std::size_t p = 0; p < n * n; ++p) m.at(p / n, p % n) = to_coeff(vals[p]);
    return m;
}

}  // namespace

CoeffPoly vacuum_expect(const VermaAlgebra& alg, const std::vector<GenSymbol>& word) {
    Evaluator ev(alg);
    return to_coeff(ev.eval(Evaluator::encode(word)));
}

CoeffPoly form(const VermaAlgebra& alg, const PBWVector& x, const PBWVector& y) {
    Evaluator ev(alg);
    return to_coeff(ev.eval(pair_word(x, y)));
}

PolyMatrix gram_matrix(const VermaAlgebra& alg, int twice_n, Exec exec) {
    auto H = pbw_basis(alg, twice_n, Ordering::M);
    auto V = pbw_basis(alg, twice_n, Ordering::L);
    return fill(
        alg, H.size(), [&](std::size_t, std::size_t j) -> const PBWVector& { return H[j]; },
        [&](std::size_t i, std::size_t) -> const PBWVector& { return V[i]; }, exec);
}

PolyMatrix plain_gram_matrix(const VermaAlgebra& alg, int twice_n, Exec exec) {
    auto X = pbw_basis(alg, twice_n, Ordering::M);
    return fill(
        alg, X.size(), [&](std::size_t i, std::size_t) -> const PBWVector& { return X[i]; },
        [&](std::size_t, std::size_t j) -> const PBWVector& { return X[j]; }, exec);
}

// ---------------------------------------------------------------- Kac determinants

namespace {

long width_sum(int n) {
    long s = 0;
    for (const auto& A : partitions_of(n)) s += A.width();
    return s;
}

// Exponent of the L/M determinant at degree k: 2 sum_i p(k-i) W(i).
long lm_exponent(int k) {
    long s = 0;
    for (int i = 0; i <= k; ++i) s += partition_count(k - i) * width_sum(i);
    return 2 * s;
}

long lm_pairs(int k) {
    long s = 0;
    for (int i = 0; i <= k; ++i) s += partition_count(i) * partition_count(k - i);
    return s;
}

// Single term in mu only, with its exponent.
bool mu_power(const CoeffPoly& p, long& e) {
    if (p.terms().size() != 1) return false;
    const auto& [m, c] = p.leading();
    if (!c.is_real()) return false;
    for (const auto& [name, k] : m.factors())
        if (name != "mu") return false;
    e = m.degree_in("mu");
    return true;
}

int perm_sign(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::string half_str(int twice) { return twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2); }

}  // namespace

long kac_exponent(const VermaAlgebra& alg, int twice_n) {
    long s = 0;
    for (const auto& v : pbw_basis(alg, twice_n, Ordering::M)) s += v.width();
    return s;
}

long printed_kac_exponent(const VermaAlgebra& alg, int twice_n) {
    if (alg.kind == VermaKind::VirF0) return lm_exponent(twice_n / 2);
    long s = 0;
    for (int tj = 0; tj <= twice_n; ++tj)
        for (const auto& B : shifted_partitions_of(tj)) {
            s += B.width();
            if ((twice_n - tj) % 2 == 0) s += lm_exponent((twice_n - tj) / 2);
        }
    return s;
}

long closed_kac_exponent(const VermaAlgebra& alg, int twice_n) {
    if (alg.kind == VermaKind::VirF0) return lm_exponent(twice_n / 2);
    long s = 0;
    for (int tj = twice_n % 2; tj <= twice_n; tj += 2) {
        int k = (twice_n - tj) / 2;
        for (const auto& B : shifted_partitions_of(tj)) s += B.width() * lm_pairs(k) + lm_exponent(k);
    }
    return s;
}

GramReport kac_det(const VermaAlgebra& alg, int twice_n, const KacBudget& budget, Exec exec) {
    int limit = alg.kind == VermaKind::SV ? budget.sv_twice : budget.vir_twice;
    if (twice_n > limit)
        throw BudgetExceeded(alg.name() + " degree " + half_str(twice_n) + " exceeds the budget " + half_str(limit));
    GramReport r;
    r.algebra = alg.name();
    r.degree_times_2 = twice_n;
    auto H = pbw_basis(alg, twice_n, Ordering::M);
    r.dim = H.size();

    PolyMatrix plain = plain_gram_matrix(alg, twice_n, exec);
    PolyMatrix mixed = gram_matrix(alg, twice_n, exec);
    r.det = bareiss_det(plain);

    r.triangular = true;
    for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < i; ++j) r.triangular = r.triangular && mixed.at(i, j).is_zero();
    r.diagonal_law = true;
    CoeffPoly diag(1);
    for (std::size_t i = 0; i < r.dim; ++i) {
        const CoeffPoly& e = mixed.at(i, i);
        long k = -1;
        r.diagonal_law = r.diagonal_law && mu_power(e, k) && k == H[i].width() && sgn(e.leading().second.re()) > 0;
        diag *= e;
    }
    CoeffPoly mixed_det = r.triangular ? diag : bareiss_det(mixed);

    // Row i of the mixed matrix is the M-ordered vector at position perm[i].
    std::vector<std::size_t> perm(r.dim);
    for (std::size_t i = 0; i < r.dim; ++i)
        perm[i] = std::find(H.begin(), H.end(), H[i].swapped()) - H.begin();
    r.sign_swap_reading = perm_sign(perm);
    r.sign_dim_reading = r.dim % 2 ? -1 : 1;
    r.mixed_matches = mixed_det == CoeffPoly(r.sign_swap_reading) * r.det;

    r.is_mu_power = mu_power(r.det, r.exponent);
    if (!r.is_mu_power) r.exponent = -1;
    r.h_free = r.det.degree_in("h") == 0;
    r.c_free = r.det.degree_in("c") == 0;
    if (r.det.terms().size() == 1 && r.det.leading().second.is_real()) r.sign = sgn(r.det.leading().second.re());
    r.predicted = kac_exponent(alg, twice_n);
    r.printed = printed_kac_exponent(alg, twice_n);
    return r;
}

std::string GramReport::json() const {
    nlohmann::ordered_json j;
    j["algebra"] = algebra;
    j["degree_times_2"] = degree_times_2;
    j["dim"] = dim;
    j["det"] = det.str();
    j["exponent"] = exponent;
    j["is_mu_power"] = is_mu_power;
    j["h_free"] = h_free;
    j["c_free"] = c_free;
    j["triangular"] = triangular;
    j["predicted_exponent"] = predicted;
    j["printed_exponent"] = printed;
    j["diagonal_law"] = diagonal_law;
    j["mixed_matches"] = mixed_matches;
    j["sign"] = sign;
    j["sign_dim_reading"] = sign_dim_reading;
    j["sign_swap_reading"] = sign_swap_reading;
    return j.dump(2);
}

SuiteReport kac_suite(const VermaAlgebra& alg, int max_twice, const KacBudget& budget) {
    SuiteReport rep;
    rep.suite = "kac";
    rep.config = {{"algebra", alg.name()}, {"max_degree", half_str(max_twice)}, {"central", alg.central ? "yes" : "no"}};
    int step = alg.kind == VermaKind::SV ? 1 : 2;
    for (int t = 0; t <= max_twice; t += step) {
        GramReport g = kac_det(alg, t, budget);
        std::string p = "degree " + half_str(t) + ": ";
        std::string det = "det = " + g.det.str();
        rep.add(p + "det is a nonzero rational times a power of mu", g.is_mu_power, det);
        rep.add(p + "det is independent of h", g.h_free, det);
        rep.add(p + "det is independent of c", g.c_free, det);
        rep.add(p + "mu exponent is the sum of widths over the PBW basis", g.exponent == g.predicted,
                "observed " + std::to_string(g.exponent) + ", sum of widths " + std::to_string(g.predicted));
        rep.add(p + "mixed-ordering matrix is upper triangular", g.triangular);
        rep.add(p + "diagonal entries are positive multiples of mu^(wid A + wid B + wid C)", g.diagonal_law);
        rep.add(p + "mixed-ordering det equals the Gram det up to the A<->C permutation sign", g.mixed_matches);
        rep.add(p + "sign of det is the sign of the A<->C involution", g.sign == g.sign_swap_reading,
                "sign " + std::to_string(g.sign) + ", involution " + std::to_string(g.sign_swap_reading));
        long closed = closed_kac_exponent(alg, t);
        rep.add(p + "closed form of the diagonal product equals the sum of widths", closed == g.predicted,
                std::to_string(closed) + " vs " + std::to_string(g.predicted));
        std::string pw = "printed " + std::to_string(g.printed) + ", Gram " + std::to_string(g.exponent);
        if (g.printed == g.exponent)
            rep.add(p + "printed closed-form exponent", true, pw);
        else
            rep.add_expected_fail(p + "printed closed-form exponent (j over all half-integers) disagrees", true, pw);
        std::string sw = "observed " + std::to_string(g.sign) + ", (-1)^dim = " + std::to_string(g.sign_dim_reading);
        if (g.sign == g.sign_dim_reading)
            rep.add(p + "sign prefactor (-1)^dim", true, sw);
        else
            rep.add_expected_fail(p + "sign prefactor (-1)^dim disagrees", true, sw);
    }
    return rep;
}

// ---------------------------------------------------------------- lemmas

namespace {

PBWVector Lv(const Partition& a) { return {a, {}, {}}; }
PBWVector Yv(const Partition& b) { return {{}, b, {}}; }
PBWVector Mv(const Partition& c) { return {{}, {}, c}; }

struct Tally {
    std::size_t n = 0;
    std::string witness;
    void check(bool ok, const std::function<std::string()>& why) {
        ++n;
        if (!ok && witness.empty()) witness = why();
    }
    void report(SuiteReport& rep, const std::string& id) const {
        rep.add(id, witness.empty(), witness.empty() ? std::to_string(n) + " cases" : witness);
    }
};

bool positive_mu_power(const CoeffPoly& p, long e) {
    long k = -1;
    return mu_power(p, k) && k == e && sgn(p.leading().second.re()) > 0;
}

Rat lemma64_constant(const Partition& B) {
    Rat c(1);
    for (std::size_t j = 0; j < B.counts.size(); ++j)
        for (int k = 1; k <= B.counts[j]; ++k) c *= Rat(k) * Rat(long(2 * j + 1));
    return c;
}

}  // namespace

SuiteReport lemma_checks(int sv_twice, int vir_twice) {
    SuiteReport rep;
    rep.suite = "lemmas";
    rep.config = {{"sv_max_degree", half_str(sv_twice)}, {"vir_max_degree", half_str(vir_twice)}};

    for (auto alg : {VermaAlgebra::vir_f0(), VermaAlgebra::sv()}) {
        const int top = (alg.kind == VermaKind::SV ? sv_twice : vir_twice) / 2;
        const std::string tag = alg.name() + ": ";
        Tally vanish, positive, split0, split;
        for (int n = 0; n <= top; ++n) {
            auto parts = partitions_of(n);
            for (const auto& A : parts)
                for (const auto& C : parts) {
                    CoeffPoly v = form(alg, Lv(A), Mv(C));
                    auto why = [&] { return "<L^-" + A.str() + "|M^-" + C.str() + "> = " + v.str(); };
                    if (refinement_leq(A, C))
                        positive.check(positive_mu_power(v, C.width()), why);
                    else
                        vanish.check(v.is_zero(), why);
                }
        }
        // <L^-C2 M^-A2 | L^-A1 M^-C1> with deg A1 + deg C1 = deg A2 + deg C2
        for (int n = 0; n <= top; ++n)
            for (int a1 = 0; a1 <= n; ++a1)
                for (int a2 = a1; a2 <= n; ++a2)
                    for (const auto& A1 : partitions_of(a1))
                        for (const auto& C1 : partitions_of(n - a1))
                            for (const auto& A2 : partitions_of(a2))
                                for (const auto& C2 : partitions_of(n - a2)) {
                                    PBWVector left{C2, {}, A2}, right{A1, {}, C1};
                                    CoeffPoly v = form(alg, left, right);
                                    auto why = [&] { return "<" + left.str() + "|" + right.str() + "> = " + v.str(); };
                                    if (a1 < a2) {
                                        split0.check(v.is_zero(), why);
                                    } else {
                                        CoeffPoly f = form(alg, Lv(C2), Mv(C1)) * form(alg, Mv(A2), Lv(A1));
                                        split.check(v == f, why);
                                    }
                                }
        vanish.report(rep, tag + "<L^-A|M^-C> = 0 unless A refines C");
        positive.report(rep, tag + "<L^-A|M^-C> = positive * mu^wid(C) when A refines C");
        split0.report(rep, tag + "<L^-C2 M^-A2|L^-A1 M^-C1> = 0 when deg A1 < deg A2");
        split.report(rep, tag + "<L^-C2 M^-A2|L^-A1 M^-C1> factorizes when deg A1 = deg A2");
    }

    const auto sv = VermaAlgebra::sv();
    const int top = sv_twice;
    Tally wick, central, six0, six, sym;
    for (int t = 0; t <= top; ++t) {
        auto Bs = shifted_partitions_of(t);
        for (const auto& B : Bs)
            for (const auto& B2 : Bs) {
                CoeffPoly v = form(sv, Yv(B), Yv(B2));
                CoeffPoly expect = B == B2 ? CoeffPoly(lemma64_constant(B)) * CoeffPoly::var("mu").pow(B.width())
                                           : CoeffPoly();
                wick.check(v == expect, [&] { return "<Y^-" + B.str() + "|Y^-" + B2.str() + "> = " + v.str(); });
            }
        // Y/M strings with some M present
        std::vector<PBWVector> ym;
        for (const auto& v : pbw_basis(sv, t, Ordering::M))
            if (v.A.empty()) ym.push_back(v);
        for (const auto& x : ym)
            for (const auto& y : ym) {
                if (x.C.empty() && y.C.empty()) continue;
                CoeffPoly v = form(sv, x, y);
                central.check(v.is_zero(), [&] { return "<" + x.str() + "|" + y.str() + "> = " + v.str(); });
            }
        auto basis = pbw_basis(sv, t, Ordering::M);
        for (const auto& x : basis)      // L^-A1 Y^-B1 M^-C1
            for (const auto& y : basis) {  // L^-C2 Y^-B2 M^-A2
                CoeffPoly v = form(sv, y, x);
                auto why = [&] { return "<" + y.str() + "|" + x.str() + "> = " + v.str(); };
                sym.check(v == form(sv, x, y), why);
                const int a1 = x.A.degree(), c1 = x.C.degree(), a2 = y.C.degree(), c2 = y.A.degree();
                if (a1 < a2 || c2 < c1) {
                    six0.check(v.is_zero(), why);
                } else if (a1 == a2 && c1 == c2) {
                    CoeffPoly f = form(sv, Yv(y.B), Yv(x.B)) * form(sv, Mv(y.C), Lv(x.A)) * form(sv, Lv(y.A), Mv(x.C));
                    six.check(v == f, why);
                }
            }
    }
    wick.report(rep, "sv: <Y^-B|Y^-B'> = delta_BB' prod (b_j)! (2j-1)^b_j mu^wid(B)");
    central.report(rep, "sv: <Y^-B1 M^-C1|Y^-B2 M^-C2> = 0 when C1 or C2 is nonempty");
    six0.report(rep, "sv: <L^-C2 Y^-B2 M^-A2|L^-A1 Y^-B1 M^-C1> = 0 when deg A1 < deg A2 or deg C2 < deg C1");
    six.report(rep, "sv: <L^-C2 Y^-B2 M^-A2|L^-A1 Y^-B1 M^-C1> factorizes into Y, M|L and L|M pairings");
    sym.report(rep, "sv: the contravariant form is symmetric");
    return rep;
}

}  // namespace svw
