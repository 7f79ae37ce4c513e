#pragma once

#include "svw/coeff.hpp"
#include "svw/report.hpp"

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace svw {

struct InvalidSymbol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// n stored as 2n so half-integer modes stay exact.
struct DoubledIndex {
    int twice = 0;
    static DoubledIndex of_int(int n) { return {2 * n}; }
    Rat value() const { return Q(twice, 2); }
    bool is_int() const { return twice % 2 == 0; }
    std::string str() const;
    auto operator<=>(const DoubledIndex&) const = default;
};

enum class Fam : unsigned char { L, Y, M, R, Z };

struct GenSymbol {
    Fam fam = Fam::L;
    int twice = 0;
    // Y: spatial component (0 when d = 1); R: the pair i < j; Z: which central generator.
    unsigned char i = 0, j = 0;

    static GenSymbol L(int n) { return {Fam::L, 2 * n}; }
    static GenSymbol M(int n) { return {Fam::M, 2 * n}; }
    static GenSymbol Yt(int twice, unsigned char comp = 0) { return {Fam::Y, twice, comp}; }
    static GenSymbol R(unsigned char i, unsigned char j, int n) { return {Fam::R, 2 * n, i, j}; }
    static GenSymbol Z(unsigned char which = 0) { return {Fam::Z, 0, which}; }

    Rat index() const { return Q(twice, 2); }
    GenSymbol shifted(int dtwice) const {
        GenSymbol g = *this;
        g.twice += dtwice;
        return g;
    }
    std::string str() const;
    static GenSymbol parse(const std::string& s);
    auto operator<=>(const GenSymbol&) const = default;
};

class LieElement {
public:
    using Terms = std::map<GenSymbol, CoeffPoly>;
    LieElement() = default;
    LieElement(const GenSymbol& g, CoeffPoly c = CoeffPoly(1)) { add(g, c); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    CoeffPoly coeff(const GenSymbol& g) const;
    void add(const GenSymbol& g, const CoeffPoly& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const CoeffPoly& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const CoeffPoly& s, LieElement a) { return a *= s; }
    LieElement operator-() const { return (*this) * CoeffPoly(-1); }
    friend LieElement operator*(LieElement a, const CoeffPoly& s) { return a *= s; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    LieElement subs(const std::string& name, const CoeffPoly& v) const;
    std::string str() const;

private:
    Terms t_;
};

enum class AlgKind { SV, VirF0, Sch };

// One record covers the whole sv family: sv^d, tsv, sv_eps, the deformed
// tsv bracket, Vir x F_0 and the finite Schrodinger algebra.
struct AlgebraId {
    AlgKind kind = AlgKind::SV;
    int d = 1;
    bool twisted = false;  // Y modes integral
    CoeffPoly eps, mu, nu;  // deformation parameters (all zero for sv)
    bool central = false;   // Virasoro term n(n^2-1) Z on [L_n, L_-n]
    // Optional extra central cocycle on ordered symbol pairs, landing on Z(1).
    std::function<CoeffPoly(const GenSymbol&, const GenSymbol&)> extra;
    std::string extra_name;

    static AlgebraId sv(int d = 1);
    static AlgebraId tsv();
    static AlgebraId sv_eps(const CoeffPoly& eps, bool twisted = false);
    static AlgebraId tsv_def(const CoeffPoly& lambda, const CoeffPoly& mu, const CoeffPoly& nu,
                             bool twisted = true);
    static AlgebraId vir_f0(bool central = true);
    static AlgebraId sch(int d = 1);

    std::string name() const;
    // Parameters appearing in the structure constants.
    std::vector<std::string> parameters() const;
};

void validate(const AlgebraId& alg, const GenSymbol& g);
bool is_valid(const AlgebraId& alg, const GenSymbol& g);

LieElement bracket(const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b);
LieElement bracket(const AlgebraId& alg, const LieElement& a, const GenSymbol& b);
LieElement bracket(const AlgebraId& alg, const LieElement& a, const LieElement& b);

LieElement jacobi_defect(const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b, const GenSymbol& c);

// All valid non-central symbols with |2 index| <= window.
std::vector<GenSymbol> symbols_in_window(const AlgebraId& alg, int window);

// Antisymmetry on all pairs and Jacobi on all triples of the window, one check
// per family pair / triple with the first failing case as witness.
SuiteReport verify_jacobi(const AlgebraId& alg, int window, Exec exec = Exec::Parallel);

enum class Grading { Delta1, Delta2 };
Rat graduation_weight(Grading which, const GenSymbol& g);
LieElement apply_grading(Grading which, const LieElement& x);
LieElement derivation_defect(Grading which, const AlgebraId& alg, const GenSymbol& a, const GenSymbol& b);

// ---- Poisson algebra of symbols z^a d^k with a, k in Z/2

struct PoissonMonomial {
    DoubledIndex z, d;
    std::string str() const;
    auto operator<=>(const PoissonMonomial&) const = default;
};
using PoissonElement = std::map<PoissonMonomial, Rat>;

PoissonElement poisson_bracket(const PoissonMonomial& a, const PoissonMonomial& b);
std::string str(const PoissonElement& e);

// Image of an sv generator: L_n -> -z^{n+1}d, Y_m -> z^{m+1/2}d^{1/2}, M_n -> -1/2 z^n.
PoissonElement poisson_image(const GenSymbol& g);
PoissonElement poisson_image(const LieElement& x);

struct PairCheck {
    GenSymbol a, b;
    bool match = true;
    bool defect_negative_density = true;  // defect lies in densities of negative weight
    std::string defect;
};
struct PoissonEmbeddingReport {
    std::vector<PairCheck> pairs;
    std::size_t mismatches = 0;
    bool mismatches_only_on_YM = true;
    bool quotient_homomorphism = true;
};
PoissonEmbeddingReport verify_sv_poisson_embedding_defect(int window);

// ---- the no-go computation for a bracket [Y+_m, Y-_p] = a_{p,m} L_{m+p}

struct NogoReport {
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::vector<std::vector<GaussRat>> solutions;  // basis of (lambda, mu) solutions
    bool only_trivial() const { return solutions.empty(); }
};
// Equations for all n with |n| <= n_window and p, m in Z/2 with |2p|, |2m| <= pm_window.
NogoReport verify_nogo(int n_window, int pm_window);

SuiteReport nogo_suite(int n_window, int pm_window);
SuiteReport poisson_suite(int window);

}  // namespace svw
