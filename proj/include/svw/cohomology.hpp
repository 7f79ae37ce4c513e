#pragma once

#include "svw/liealg.hpp"
#include "svw/report.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svw {

using BracketFn = std::function<LieElement(const GenSymbol&, const GenSymbol&)>;
BracketFn bracket_of(const AlgebraId& alg);
LieElement bracket_ext(const BracketFn& br, const LieElement& a, const LieElement& b);

using Cochain1 = std::function<LieElement(const GenSymbol&)>;
using Cochain2 = std::function<LieElement(const GenSymbol&, const GenSymbol&)>;
using Scalar2 = std::function<CoeffPoly(const GenSymbol&, const GenSymbol&)>;

// Antisymmetric extension of a rule given for fam(a) <= fam(b) (families ordered L, Y, M, R, Z).
// On equal families the rule itself must be antisymmetric.
Cochain2 antisym(Cochain2 rule);
Scalar2 antisym(Scalar2 rule);

LieElement evaluate(const Cochain1& c, const LieElement& x);
LieElement evaluate(const Cochain2& c, const LieElement& x, const GenSymbol& b);
CoeffPoly evaluate(const Scalar2& c, const LieElement& x, const GenSymbol& b);

// (dx)(a) = [a, x]
LieElement coboundary0(const BracketFn& br, const LieElement& x, const GenSymbol& a);
// (dc)(a,b) = [a,c(b)] - [b,c(a)] - c([a,b])
LieElement coboundary1(const BracketFn& br, const Cochain1& c, const GenSymbol& a, const GenSymbol& b);
Cochain2 coboundary1(const BracketFn& br, const Cochain1& c);
LieElement coboundary2(const BracketFn& br, const Cochain2& c, const GenSymbol& a, const GenSymbol& b,
                       const GenSymbol& e);
// Trivial coefficients: the action terms drop.
CoeffPoly coboundary2(const BracketFn& br, const Scalar2& c, const GenSymbol& a, const GenSymbol& b,
                      const GenSymbol& e);
// sum over cyclic (a,b,e) of c(d(a,b),e) + d(c(a,b),e)
LieElement nr_bracket_component(const Cochain2& c, const Cochain2& d, const GenSymbol& a, const GenSymbol& b,
                                const GenSymbol& e);

// First triple a<b<e from syms on which f is nonzero, as "(a, b, e) -> value"; nullopt when none.
// Evaluated in parallel, the reported witness is the smallest failing triple.
std::optional<std::string> first_nonzero_triple(const std::vector<GenSymbol>& syms,
                                                const std::function<std::string(const GenSymbol&, const GenSymbol&,
                                                                                const GenSymbol&)>& f);

// ---- named cochains (sv bracket convention, see README)

// Deformation cocycles c1, c2, c3 of the twisted algebra. printed_sign flips c1, c2
// to the L -> -L convention in which the deformed bracket is usually displayed.
Cochain2 deformation_cocycle(int which, bool printed_sign = false);
Scalar2 virasoro_cocycle();

struct CentralCase {
    std::string id;
    bool twisted = true;  // tsv_lambda vs sv_lambda
    Rat lambda;           // exceptional value
    Rat control;          // a value where the cocycle must not close
    Scalar2 cocycle;
};
std::vector<CentralCase> central_cases();

// H^1 generators of the twisted algebra with adjoint coefficients.
Cochain1 h1_cocycle(const std::string& name);  // "c1", "c2", "l"

// ---- the algebra Vect(S^1) (x) R[eps]/(eps^3 = mu): L_n = z^{n+1}, Y_n = eps z^{n+1}, M_n = eps^2 z^{n+1},
// bracket f g' - g f' (twisted symbols, integral indices).
BracketFn tsv1_model_bracket(const CoeffPoly& mu);
Cochain2 tsv1_deformation_cocycle();  // C(Y_n,M_m) = (m-n)L, C(M_n,M_m) = (m-n)Y
Cochain1 tsv1_cbar();                 // cbar(M_n) = L_n

// ---- the module S^aff_{<=2} = F_{-2} + F_{-3/2} + F_{-1} of triples of Laurent series in t^{1/2}
using HalfLaurent = std::map<int, Rat>;  // doubled exponent -> coefficient
using AffTriple = std::array<HalfLaurent, 3>;
AffTriple affine_action(const GenSymbol& g, const AffTriple& v);
// c1 = (f0'''/2, -2 f1'', 2 f2'), c2 = (0, 0, f0''). printed_m_sign uses -2 f2' instead, which is the
// cocycle for the opposite sign of [Y, Y].
AffTriple affine_cocycle(int which, const GenSymbol& g, bool printed_m_sign = false);
bool is_zero(const AffTriple& v);
std::string str(const AffTriple& v);

// ---- non-exactness certificates within bounded ansatz classes

// Is c = d x for x in the span of generators F_k, |2k| <= shift_window? (0-cochain ansatz)
bool h1_exact_in_ansatz(const AlgebraId& alg, const Cochain1& c, int window, int shift_window);
// Is c = d b for b(X_n) = sum_{F, |k|<=max_shift, e<=max_deg} a n^e F_{n+k}? (twisted algebra)
bool h2_exact_in_ansatz(const AlgebraId& alg, const Cochain2& c, int window, int max_shift, int max_deg);
// Is s = d f for a linear form f supported on modes |2k| <= shift_window? ((df)(a,b) = -f([a,b]))
bool scalar_exact_in_ansatz(const AlgebraId& alg, const Scalar2& s, int window, int shift_window);

// ---- suites
SuiteReport verify_deformation_cocycles(int window);
SuiteReport verify_central_extensions(int window);
SuiteReport verify_affine_cocycles(int window);
SuiteReport verify_h1(int window);
SuiteReport verify_tsv1_deformation(int window);

}  // namespace svw
