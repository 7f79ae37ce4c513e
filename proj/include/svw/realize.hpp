#pragma once

#include "svw/diffop.hpp"
#include "svw/liealg.hpp"
#include "svw/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svw {

// ---- Laurent polynomials in one variable (functions on S^1, or of t)
using Laurent = std::map<int, CoeffPoly>;
Laurent laurent(int e, const CoeffPoly& c = CoeffPoly(1));
Laurent deriv(const Laurent& f, unsigned k = 1);
Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator*(const CoeffPoly& s, const Laurent& a);
bool is_zero(const Laurent& f);
// coefficient of z^{-1}
CoeffPoly residue(const Laurent& f);
std::string str(const Laurent& f, const std::string& var = "t");

// ---- generators in function form: family k (0 = L, 1 = Y, 2 = M, ...) with coefficient function f.
// For sv with d = 1: L_n <-> t^{n+1}, Y_m <-> t^{m+1/2}, M_n <-> t^n.
struct FuncGen {
    int k = 0;
    Laurent f;
    unsigned char i = 0, j = 0;  // Y component / rotation pair (sv^d)
};
FuncGen func_of(const GenSymbol& g);
std::string str(const FuncGen& g);

// The Lie algebra md_eps^d in function form:
// [L^(0)_f, L^(j)_g] = L^(j)_{(1+j eps) f'g - f g'}, [L^(i)_f, L^(j)_g] = L^(i+j)_{f'g - f g'} (i, j >= 1), zero past d-1.
// With eps = -1/2, d = 3 this is sv: [L_f,Y_g] = Y_{f'g/2 - fg'}, [L_f,M_h] = M_{-fh'}, [Y_f,Y_g] = M_{f'g-fg'}.
std::vector<FuncGen> md_bracket(const CoeffPoly& eps, int d, const FuncGen& a, const FuncGen& b);

// ---- representations
struct CoinducedRho {
    std::string name;
    PolyMatrix L0, Y, M;  // d rho(L_0), d rho(Y_{1/2}), d rho(M_1)
};
// scalar: rho(L_0) = -lambda on R; spinor: the Dirac data on R^2; rank3 / rank3_nabla: rho and sigma on R^3.
CoinducedRho rho_scalar(const CoeffPoly& lambda);
CoinducedRho rho_spinor(const CoeffPoly& lambda);
CoinducedRho rho_rank3();
// sigma = rho - A: nilpotent blocks -(E01 + E12), -E02. The displayed version has them with + (and is not
// an intertwiner for nabla).
CoinducedRho rho_rank3_nabla(bool as_displayed = false);
// Commutation relations of <L_0, Y_{1/2}, M_1>; empty when satisfied, else a description.
std::string rho_relation_defect(const CoinducedRho& rho);

enum class RepKind { PiTilde, PiLambda, DiracSigma, Md, Coinduced, Conformal };

struct RepId {
    RepKind kind = RepKind::PiTilde;
    int d = 1;
    CoeffPoly lambda, eps;
    CoinducedRho rho;
    // The rotation image is displayed as -k(z)(r_i d_j - r_j d_i); rot_sign = -1 reproduces that.
    int rot_sign = -1;
    // Dirac representation: scale of the E_10 terms (1 as displayed).
    CoeffPoly e10 = CoeffPoly(1);

    static RepId pi_tilde(int d = 1);
    static RepId pi_lambda(const CoeffPoly& lambda);
    static RepId dirac_sigma(const CoeffPoly& lambda, const CoeffPoly& e10 = CoeffPoly(1));
    static RepId md(const CoeffPoly& eps, int d);
    static RepId coinduced(CoinducedRho rho);
    static RepId conformal(int d);
    std::string name() const;
    // Parse "pi_tilde", "pi_tilde:2", "pi_lambda", "dirac", "md:3", "coinduced:scalar|spinor|rank3|rank3_nabla|rank3_nabla_displayed", "conformal:1".
    // Free parameters stay symbolic (lambda, eps).
    static RepId parse(const std::string& s);
};

// Mass parameter of the (t, r) realizations.
inline const char* kMass = "M";

DiffOp rep_generator(const RepId& rep, const FuncGen& g);
DiffOp rep_generator(const RepId& rep, const GenSymbol& g);  // throws InvalidSymbol
DiffOp rep_image(const RepId& rep, const LieElement& x);
// The algebra the mode form of rep realizes (sv, sv^d or sch_d).
AlgebraId rep_algebra(const RepId& rep);

// [rho(a), rho(b)] - rho([a, b])
DiffOp rep_defect(const RepId& rep, const GenSymbol& a, const GenSymbol& b);
DiffOp rep_defect(const RepId& rep, const FuncGen& a, const FuncGen& b);  // md: function-form bracket

// Checks every generator pair in the window (modes for sv reps, monomials t^e, |e| <= window/2 for md).
SuiteReport verify_rep(const RepId& rep, int window);

// ---- Schrodinger operators Delta_0 + V, V = g0 r^2 + g1 r + g2
DiffOp delta0();  // 2 M d_t - d_r^2 on (t, r)
struct SchBracket {
    Laurent scaling;                 // phi with [X, Delta_0] = phi Delta_0 + V
    std::array<Laurent, 3> potential;  // coefficients of r^2, r, 1
};
struct NotFirstOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// [d pi_{lambda+1/4}(g), Delta_0] decomposed.
SchBracket schrodinger_bracket(const CoeffPoly& lambda, const FuncGen& g);
// The displayed identities: f' Delta_0 + (M^2/2) f''' r^2 + 2 M lambda f'' etc.
SchBracket schrodinger_bracket_formula(const CoeffPoly& lambda, const FuncGen& g);

using PotTriple = std::array<Laurent, 3>;
// d sigma_{lambda+1/4}(g)(Delta_0 + V), computed as d pi_{lambda+5/4}(g) D - D d pi_{lambda+1/4}(g).
// Throws NotFirstOrder when the result is not a potential of degree <= 2 in r.
PotTriple schrodinger_vector_action(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& D);
PotTriple schrodinger_vector_action_formula(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& D);
SuiteReport verify_schrodinger(int window);

// ---- Dirac-Levy-Leblond operators
DiffOp dirac0();  // [[d_r, -2M], [d_t, -d_r]]
// d pi^sigma_{lambda+1}(g) (D_0 + V E_10) - (D_0 + V E_10) d pi^sigma_{lambda+1/2}(g); lower-left entry.
PotTriple dirac_vector_action(const CoeffPoly& lambda, const FuncGen& g, const PotTriple& V,
                              const CoeffPoly& e10 = CoeffPoly(1));
SuiteReport dirac_checks(int window);

// ---- multi-diagonal operators
DiffOp nabla(int d);  // (nabla)_{ij} = d_{t_{i-j+d-1}}, i <= j
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A with [X, nabla^d] = A nabla^d (A upper-triangular multi-diagonal); throws NoSolution.
DiffOp nabla_conjugation(int d, const DiffOp& X);
DiffOp nabla_conjugation(int d, const CoeffPoly& eps, const FuncGen& g);
// Is there X = (f0 d_0 + sum_i f_i(t) d_i) (x) Id - eps f0' Lambda_0 preserving Ker nabla^d with f_i
// polynomial of degree <= max_deg? Returns the operator, or nullopt (eps must be a constant).
std::optional<DiffOp> md_ansatz(int d, const CoeffPoly& eps, const Laurent& f0, int max_deg);
SuiteReport verify_nabla(int d, const CoeffPoly& eps, int window);

// ---- Cartan prolongation of <d_t, d_r, d_zeta> + sv_0 (polynomial vector fields on t, r, zeta)
struct ProlongLevel {
    int level = 0;
    std::vector<DiffOp> basis;
    bool matches_pi_tilde = false;
};
std::vector<ProlongLevel> cartan_prolong(int max_level);
SuiteReport verify_prolongation(int max_level);

// ---- coadjoint action on sv* = F_{-2} + F_{-3/2} + F_{-1}, pairing sum res(gamma_i f_i)
using DualTriple = std::array<Laurent, 3>;
// The displayed formulas with c = lambda.
DualTriple coadjoint_apply(const FuncGen& X, const DualTriple& G, const CoeffPoly& lambda);
CoeffPoly pairing(const DualTriple& G, const FuncGen& Z);
// Central term res(f''' g) on (L_f, L_g), zero otherwise.
CoeffPoly vir_cocycle(const FuncGen& X, const FuncGen& Z);
// Sign s(family) with s <ad*(X) G, Z> = -<G, [X, Z]> - lambda omega(X, Z) on the window; reports consistency.
SuiteReport verify_coadjoint(int window);

// ---- conformal embedding of sch_d into conf_{d+2} (complexified)
// Images of the sch_d generators as vector fields on xi_1..xi_{d+2}.
DiffOp conformal_image(int d, const GenSymbol& g);
SuiteReport conformal_embedding_check(int d);

// ---- coinduced examples against the direct realizations
SuiteReport verify_coinduced(int window);

}  // namespace svw
