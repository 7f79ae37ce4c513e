#include <doctest.h>

#include "svw/realize.hpp"

using namespace svw;

namespace {
CoeffPoly P(const char* s) { return CoeffPoly::parse(s); }
GenSymbol G(const char* s) { return GenSymbol::parse(s); }
FuncGen F(int k, int e) { return FuncGen{k, laurent(e)}; }
const CoeffPoly lam = CoeffPoly::var("lambda");

bool all_pass(const SuiteReport& r) {
    for (const auto& c : r.checks)
        if (c.status == Status::Fail) {
            MESSAGE(c.id << ": " << c.witness);
            return false;
        }
    return true;
}

Status status_of(const SuiteReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.id.rfind(prefix, 0) == 0) return c.status;
    FAIL("no check " << prefix);
    return Status::Fail;
}
}  // namespace

TEST_CASE("differential operator algebra") {
    std::vector<std::string> c{"t", "r", "zeta"};
    DiffOp dt = DiffOp::scalar(c, ScalarOp::partial(3, 0)), t = DiffOp::scalar(c, ScalarOp::coord(3, 0));
    CHECK(commutator(dt, t) == DiffOp::identity(c, 1));
    CHECK(commutator(t, t).is_zero());
    // Leibniz: d_r^2 r^2 = r^2 d_r^2 + 4 r d_r + 2
    DiffOp r2 = DiffOp::scalar(c, ScalarOp::monomial(3, {0, 2, 0}, {0, 0, 0}, 1));
    CHECK((DiffOp::scalar(c, ScalarOp::partial(3, 1, 2)) * r2).str() == "2 + 4*r*d_r + r^2*d_r^2");
    // negative powers: d_t t^-1 = t^-1 d_t - t^-2
    DiffOp ti = DiffOp::scalar(c, ScalarOp::monomial(3, {-1, 0, 0}, {0, 0, 0}, 1));
    CHECK((dt * ti).str() == "-t^-2 + t^-1*d_t");
    DiffOp two(c, 2);
    CHECK_THROWS_AS(commutator(dt, two), SizeMismatch);
    // associativity on a sample
    auto pt = RepId::pi_tilde(1);
    DiffOp a = rep_generator(pt, G("L_2")), b = rep_generator(pt, G("Y_-3/2")), e = rep_generator(pt, G("M_1"));
    CHECK((a * b) * e == a * (b * e));
}

TEST_CASE("pi_tilde generators and the L_1, L_-1 bracket") {
    auto pt = RepId::pi_tilde(1);
    CHECK(rep_generator(pt, G("M_2")).str() == "-t^2*d_zeta");
    CHECK(rep_generator(pt, G("M_-1")).str() == "-t^-1*d_zeta");
    DiffOp l1 = rep_generator(pt, G("L_1"));
    CHECK(l1.str() == "-1/2*r^2*d_zeta - t*r*d_r - t^2*d_t");
    CHECK(commutator(l1, rep_generator(pt, G("L_-1"))) == rep_generator(pt, G("L_0")) * CoeffPoly(2));
    CHECK(rep_defect(pt, G("L_2"), G("Y_-3/2")).is_zero());
    CHECK_THROWS_AS(rep_generator(pt, G("R12_0")), InvalidSymbol);
}

TEST_CASE("displayed generator formulas") {
    CHECK(rep_generator(RepId::pi_lambda(lam), F(1, 1)).str() == "-M*r - t*d_r");
    CHECK(rep_generator(RepId::dirac_sigma(lam), F(2, 0)).str() == "[0,0] -M; [1,1] -M");
    CHECK(rep_generator(RepId::pi_lambda(lam), F(0, 1)).str() == "-lambda - 1/2*r*d_r - t*d_t");
}

TEST_CASE("homomorphism checks over windows") {
    CHECK(all_pass(verify_rep(RepId::pi_tilde(1), 8)));
    CHECK(all_pass(verify_rep(RepId::pi_lambda(lam), 8)));
    CHECK(all_pass(verify_rep(RepId::dirac_sigma(lam), 6)));
    CHECK(all_pass(verify_rep(RepId::dirac_sigma(lam, P("1/2")), 4)));
    CHECK(all_pass(verify_rep(RepId::md(CoeffPoly::var("eps"), 2), 6)));
    CHECK(all_pass(verify_rep(RepId::md(CoeffPoly::var("eps"), 3), 6)));
    CHECK(all_pass(verify_rep(RepId::md(CoeffPoly(0), 5), 4)));
    CHECK(rep_defect(RepId::md(CoeffPoly::var("eps"), 3), F(0, 2), F(1, 1)).is_zero());
    for (auto name : {"coinduced:scalar", "coinduced:spinor", "coinduced:rank3", "coinduced:rank3_nabla",
                      "coinduced:rank3_nabla_displayed"})
        CHECK_MESSAGE(all_pass(verify_rep(RepId::parse(name), 6)), name);
    CHECK(rep_defect(RepId::coinduced(rho_scalar(lam)), F(0, 2), F(0, 0)).is_zero());
}

TEST_CASE("rotations in pi_tilde^2") {
    auto shown = RepId::pi_tilde(2);
    CHECK_FALSE(rep_defect(shown, G("Y1_1/2"), G("R12_0")).is_zero());
    auto pt = RepId::pi_tilde(2);
    pt.rot_sign = 1;
    CHECK(rep_defect(pt, G("Y1_1/2"), G("R12_0")).is_zero());
    CHECK(rep_defect(pt, G("Y2_-3/2"), G("R12_0")).is_zero());
    CHECK(rep_defect(pt, G("L_1"), G("R12_0")).is_zero());
    // time-dependent rotations cannot close, whatever the sign
    CHECK_FALSE(rep_defect(pt, G("Y1_-1/2"), G("R12_-1")).is_zero());
    CHECK_FALSE(rep_defect(shown, G("Y1_-1/2"), G("R12_-1")).is_zero());
}

TEST_CASE("coinduced presets validate their relations") {
    CHECK(rho_relation_defect(rho_scalar(lam)).empty());
    CHECK(rho_relation_defect(rho_spinor(lam)).empty());
    CHECK(rho_relation_defect(rho_rank3_nabla(true)).empty());
    CoinducedRho bad = rho_rank3();
    bad.Y.at(0, 0) = CoeffPoly(1);
    CHECK_FALSE(rho_relation_defect(bad).empty());
    CHECK_THROWS_AS(RepId::coinduced(bad), std::invalid_argument);
    CHECK_THROWS_AS(RepId::parse("coinduced:nope"), std::invalid_argument);
}

TEST_CASE("Schrodinger bracket") {
    // f = t^3: f' = 3t^2, (M^2/2) f''' r^2 = 3 M^2 r^2, 2 M lambda f'' = 12 M lambda t
    auto b = schrodinger_bracket(lam, F(0, 3));
    CHECK(str(b.scaling) == "3*t^2");
    CHECK(str(b.potential[0]) == "3*M^2");
    CHECK(b.potential[1].empty());
    CHECK(str(b.potential[2]) == "12*M*lambda*t");
    auto y = schrodinger_bracket(lam, F(1, 2));
    CHECK(y.scaling.empty());
    CHECK(str(y.potential[1]) == "4*M^2");
    auto m = schrodinger_bracket(lam, F(2, 0));
    CHECK((m.scaling.empty() && m.potential[0].empty() && m.potential[1].empty() && m.potential[2].empty()));
    for (int k = 0; k < 3; ++k)
        for (int e = -2; e <= 4; ++e) {
            auto a = schrodinger_bracket(lam, F(k, e)), f = schrodinger_bracket_formula(lam, F(k, e));
            CHECK(a.scaling == f.scaling);
            CHECK(a.potential == f.potential);
        }
}

TEST_CASE("Schrodinger vector action") {
    PotTriple D{laurent(1, P("a")), laurent(2, P("b")), laurent(-1, P("c"))};
    auto m = schrodinger_vector_action(lam, F(2, 3), D);
    CHECK(m[0].empty());
    CHECK(m[1].empty());
    CHECK(str(m[2]) == "6*M^2*t^2");
    auto y = schrodinger_vector_action(lam, F(1, 0), PotTriple{});
    CHECK((y[0].empty() && y[1].empty() && y[2].empty()));
    auto l = schrodinger_vector_action(lam, F(0, 2), PotTriple{});
    CHECK((l[0].empty() && l[1].empty()));
    CHECK(str(l[2]) == "4*M*lambda");
    CHECK(all_pass(verify_schrodinger(6)));
}

TEST_CASE("Dirac-Levy-Leblond operators") {
    CHECK(dirac0() * dirac0() == DiffOp::scalar({"t", "r"}, -delta0().at(0, 0), 2));
    auto r = dirac_checks(6);
    CHECK(all_pass(r));
    CHECK(status_of(r, "displayed E_10 normalization") == Status::ExpectedFail);
    auto m = dirac_vector_action(CoeffPoly(0), F(2, 2), PotTriple{}, P("1/2"));
    CHECK(str(m[2]) == "2*M*t");
    // f = t: upper-right entry stays 0, no potential
    auto l = dirac_vector_action(CoeffPoly(0), F(0, 1), PotTriple{}, P("1/2"));
    CHECK((l[0].empty() && l[1].empty() && l[2].empty()));
    CHECK_THROWS_AS(dirac_vector_action(CoeffPoly(0), F(0, 3), PotTriple{}), NotFirstOrder);
}

TEST_CASE("multi-diagonal operators") {
    auto eps = P("-1/2");
    CHECK(nabla(3).str() == "[0,0] d_zeta; [0,1] d_r; [0,2] d_t; [1,1] d_zeta; [1,2] d_r; [2,2] d_zeta");
    CHECK(nabla_conjugation(3, eps, F(2, 2)).str() == "[0,2] 2*t");
    DiffOp a = nabla_conjugation(3, eps, F(1, 2));
    CHECK(a.at(0, 1).str({"t", "r", "zeta"}) == "2*t");
    CHECK(a.at(0, 2).str({"t", "r", "zeta"}) == "2*r");
    CHECK(nabla_conjugation(3, CoeffPoly::var("eps"), F(0, 3)).has_entry(0, 1));
    CHECK_FALSE(md_ansatz(4, CoeffPoly(1), laurent(2), 3).has_value());
    CHECK(md_ansatz(3, CoeffPoly(1), laurent(2), 3).has_value());
    CHECK(md_ansatz(4, CoeffPoly(0), laurent(2), 3).has_value());
}

TEST_CASE("md with eps != 0 and d >= 4 has no realization") {
    CHECK_THROWS_AS(rep_generator(RepId::md(CoeffPoly(1), 4), F(0, 2)), NoSolution);
}

TEST_CASE("nabla suites") {
    auto r3 = verify_nabla(3, P("-1/2"), 4);
    CHECK(all_pass(r3));
    CHECK(status_of(r3, "with the displayed signs") == Status::ExpectedFail);
    CHECK(all_pass(verify_nabla(3, CoeffPoly::var("eps"), 4)));
    CHECK(all_pass(verify_nabla(4, CoeffPoly(0), 4)));
    auto r4 = verify_nabla(4, CoeffPoly(1), 2);
    CHECK(status_of(r4, "ansatz") == Status::ExpectedFail);
}

TEST_CASE("Cartan prolongation") {
    auto lv = cartan_prolong(4);
    REQUIRE(lv.size() == 6);
    CHECK(lv[1].basis[0].str() == "1/2*r*d_r + t*d_t");
    for (std::size_t i = 2; i < lv.size(); ++i) {
        CHECK(lv[i].basis.size() == 3);
        CHECK(lv[i].matches_pi_tilde);
    }
    CHECK(lv[2].basis[2].str() == "t^2*d_zeta");
    CHECK(all_pass(verify_prolongation(4)));
}

TEST_CASE("coadjoint action") {
    DualTriple G{Laurent{}, Laurent{}, laurent(-1)};
    auto m = coadjoint_apply(F(2, 2), G, lam);
    CHECK(str(m[0]) == "-2");
    CHECK((m[1].empty() && m[2].empty()));
    DualTriple G0{laurent(3), Laurent{}, Laurent{}};
    auto y = coadjoint_apply(F(1, 0), G0, lam);
    CHECK((y[0].empty() && y[1].empty() && y[2].empty()));
    // duality on (L_{z^2}, M_{z^-1}), Gamma = (0, 0, z^-1): both sides are +-1, the L-family sign is -1
    CoeffPoly lhs = pairing(coadjoint_apply(F(0, 2), G, lam), F(2, -1));
    CoeffPoly rhs = CoeffPoly(0);
    for (const auto& c : md_bracket(P("-1/2"), 3, F(0, 2), F(2, -1))) rhs -= pairing(G, c);
    CHECK(lhs == CoeffPoly(1));
    CHECK(rhs == CoeffPoly(-1));
    CHECK(vir_cocycle(F(0, 2), F(0, -2)).is_zero());
    CHECK(vir_cocycle(F(0, 3), F(0, -1)) == CoeffPoly(6));
    CHECK(all_pass(verify_coadjoint(6)));
}

TEST_CASE("conformal embedding") {
    for (int d : {1, 2}) {
        auto r = conformal_embedding_check(d);
        CHECK(all_pass(r));
        CHECK(status_of(r, "displayed coordinate change") == Status::ExpectedFail);
        CHECK(commutator(conformal_image(d, G("L_1")), conformal_image(d, G("L_-1"))) ==
              conformal_image(d, G("L_0")) * CoeffPoly(2));
    }
    auto cf = RepId::conformal(2);
    for (auto x : {"L_-1", "L_0", "L_1"}) CHECK(rep_defect(cf, G(x), G("R12_0")).is_zero());
    CHECK(commutator(conformal_image(2, G("L_1")), conformal_image(2, G("R12_0"))).is_zero());
    // [Y_-1/2, Y_1/2] = -M_0 by construction; the value is a constant-coefficient field
    CHECK(conformal_image(1, G("M_0")).str() == "d_x3 + i*d_x2");
    CHECK_THROWS_AS(conformal_image(1, G("L_2")), InvalidSymbol);
}

TEST_CASE("coinduced representations against the direct realizations") {
    auto r = verify_coinduced(6);
    CHECK(all_pass(r));
    CHECK(status_of(r, "coinduced with rho(L0) = +1") == Status::ExpectedFail);
    DiffOp lap = laplace_mass(rep_generator(RepId::pi_lambda(lam), F(2, 1)), kMass, "zeta");
    CHECK(lap.str() == "-t*d_zeta");
}

TEST_CASE("parsing and errors") {
    CHECK(RepId::parse("pi_tilde:2").name() == "pi_tilde(2)");
    CHECK(RepId::parse("md:3").name() == "md(eps,3)");
    CHECK(RepId::parse("conformal:1").name() == "conformal(1)");
    CHECK_THROWS_AS(RepId::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(rep_generator(RepId::pi_tilde(1), G("Y_1")), InvalidSymbol);
    CHECK_THROWS_AS(schrodinger_bracket(lam, FuncGen{3, laurent(0)}), InvalidSymbol);
}
