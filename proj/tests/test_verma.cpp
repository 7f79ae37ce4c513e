#include <doctest.h>

#include "svw/verma.hpp"

using namespace svw;

namespace {
CoeffPoly P(const char* s) { return CoeffPoly::parse(s); }
GenSymbol G(const char* s) { return GenSymbol::parse(s); }
Partition Pt(std::vector<int> c) { return Partition(std::move(c)); }

std::vector<std::string> strs(const std::vector<PBWVector>& vs) {
    std::vector<std::string> r;
    for (auto& v : vs) r.push_back(v.str());
    return r;
}
}  // namespace

TEST_CASE("partitions") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(p0[0].width() == 0);
    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Pt({2}));
    CHECK(p2[1] == Pt({0, 1}));
    CHECK(p2[0].width() == 2);
    CHECK(p2[1].width() == 1);
    for (int n = 0; n <= 12; ++n) CHECK(long(partitions_of(n).size()) == partition_count(n));
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(10) == 42);
    CHECK(Pt({1, 0, 0}).counts.size() == 1);
    CHECK(Pt({0, 2, 1}).str() == "(0,2,1)");
    CHECK(Pt({}).str() == "()");
}

TEST_CASE("shifted partitions") {
    auto s1 = shifted_partitions_of(2);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Pt({2}));
    CHECK(shifted_partitions_of(1) == std::vector<Partition>{Pt({1})});
    auto s3 = shifted_partitions_of(3);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == Pt({3}));
    CHECK(s3[1] == Pt({0, 1}));
    CHECK(Pt({0, 1}).shifted_degree_twice() == 3);
    CHECK(shifted_partitions_of(0).size() == 1);
    for (int t = 0; t <= 10; ++t)
        for (auto& b : shifted_partitions_of(t)) CHECK(b.shifted_degree_twice() == t);
}

TEST_CASE("refinement") {
    CHECK(refinement_leq(Pt({2}), Pt({0, 1})));
    CHECK_FALSE(refinement_leq(Pt({0, 1}), Pt({2})));
    CHECK(refinement_leq(Pt({0, 1}), Pt({0, 1})));
    CHECK_THROWS_AS(refinement_leq(Pt({1}), Pt({2})), DegreeMismatch);
    // 1+1+2+2 refines 3+3 (3 = 1+2 twice); 2+2+2 does not
    CHECK(refinement_leq(Pt({2, 2}), Pt({0, 0, 2})));
    CHECK_FALSE(refinement_leq(Pt({0, 3}), Pt({0, 0, 2})));
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        Partition ones({n});
        std::vector<int> top(n, 0);
        top[n - 1] = 1;
        for (auto& a : ps) {
            CHECK(refinement_leq(ones, a));
            CHECK(refinement_leq(a, Partition(top)));
            for (auto& b : ps)
                if (refinement_leq(a, b)) CHECK_FALSE(partition_less(b, a));  // linear extension
        }
    }
}

TEST_CASE("pbw bases") {
    auto sv = VermaAlgebra::sv();
    CHECK(strs(pbw_basis(sv, 0, Ordering::M)) == std::vector<std::string>{"psi"});
    CHECK(strs(pbw_basis(sv, 2, Ordering::M)) == std::vector<std::string>{"M_-1 psi", "Y_-1/2^2 psi", "L_-1 psi"});
    CHECK(strs(pbw_basis(sv, 4, Ordering::M)) ==
          std::vector<std::string>{"M_-1^2 psi", "M_-2 psi", "Y_-1/2^2 M_-1 psi", "L_-1 M_-1 psi", "Y_-1/2^4 psi",
                                   "Y_-1/2 Y_-3/2 psi", "L_-1 Y_-1/2^2 psi", "L_-2 psi", "L_-1^2 psi"});
    CHECK(strs(pbw_basis(sv, 2, Ordering::L)) == std::vector<std::string>{"L_-1 psi", "Y_-1/2^2 psi", "M_-1 psi"});
    CHECK(pbw_basis(sv, 6, Ordering::M).size() == 23);
    CHECK(pbw_basis(sv, 5, Ordering::M).size() == 12);
    CHECK(pbw_basis(sv, 4, Ordering::M).size() == 9);
    auto vir = VermaAlgebra::vir_f0();
    CHECK(strs(pbw_basis(vir, 4, Ordering::M)) ==
          std::vector<std::string>{"M_-1^2 psi", "M_-2 psi", "L_-1 M_-1 psi", "L_-2 psi", "L_-1^2 psi"});
    CHECK_THROWS(pbw_basis(vir, 3, Ordering::M));
    for (int t = 0; t <= 6; ++t) {
        auto b = pbw_basis(sv, t, Ordering::M);
        for (auto& v : b) CHECK(v.degree_twice() == t);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) CHECK_FALSE(b[i] == b[j]);
    }
}

TEST_CASE("vacuum expectations") {
    auto sv = VermaAlgebra::sv();
    CHECK(vacuum_expect(sv, {G("Y_1/2"), G("Y_-1/2")}) == P("mu"));
    CHECK(vacuum_expect(sv, {G("Y_1/2"), G("Y_1/2"), G("Y_-1/2"), G("Y_-1/2")}) == P("2*mu^2"));
    CHECK(vacuum_expect(sv, {G("L_0")}) == P("h"));
    CHECK(vacuum_expect(sv, {G("L_1"), G("L_-1")}) == P("2*h"));
    CHECK(vacuum_expect(sv, {G("L_-1"), G("L_1")}).is_zero());
    CHECK(vacuum_expect(sv, {G("Y_1/2"), G("Y_-3/2")}).is_zero());
    CHECK(vacuum_expect(VermaAlgebra::vir_f0(), {G("L_2"), G("L_-2")}) == P("4*h + 1/2*c"));
    CHECK(vacuum_expect(VermaAlgebra::vir_f0(false), {G("L_2"), G("L_-2")}) == P("4*h"));
    CHECK(vacuum_expect(sv, {G("L_1"), G("L_1"), G("M_-2")}) == P("2*mu"));
    CHECK_THROWS_AS(vacuum_expect(sv, {GenSymbol::Z()}), InvalidSymbol);
}

// The evaluator's own structure constants agree with the bracket table: the
// vacuum value of a word with one commutator replaced by its bracket equals
// the difference of the two orderings.
TEST_CASE("vacuum expectations follow the bracket table") {
    for (auto alg : {VermaAlgebra::sv(), VermaAlgebra::vir_f0()}) {
        auto lie = alg.lie();
        auto syms = symbols_in_window(lie, 4);
        for (auto& a : syms)
            for (auto& b : syms) {
                for (auto& x : syms) {
                    if (a.twice + b.twice + x.twice != 0) continue;
                    auto lhs = vacuum_expect(alg, {x, a, b}) - vacuum_expect(alg, {x, b, a});
                    CoeffPoly rhs;
                    auto br = bracket(lie, a, b);
                    for (auto& [g, c] : br.terms()) {
                        if (g.fam == Fam::Z)
                            rhs += c * CoeffPoly::frac(1, 12) * P("c") * vacuum_expect(alg, {x});
                        else
                            rhs += c * vacuum_expect(alg, {x, g});
                    }
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("gram matrices") {
    auto vir = VermaAlgebra::vir_f0();
    CHECK(gram_matrix(vir, 2) == PolyMatrix::from_rows({{P("mu"), P("2*h")}, {P("0"), P("mu")}}));
    CHECK(gram_matrix(vir, 4) == PolyMatrix::from_rows({
                                     {P("2*mu^2"), P("2*mu"), P("2*mu*(1+2*h)"), P("6*h"), P("4*h*(2*h+1)")},
                                     {P("0"), P("2*mu"), P("3*mu"), P("4*h + c/2"), P("6*h")},
                                     {P("0"), P("0"), P("mu^2"), P("3*mu"), P("2*mu*(1+2*h)")},
                                     {P("0"), P("0"), P("0"), P("2*mu"), P("2*mu")},
                                     {P("0"), P("0"), P("0"), P("0"), P("2*mu^2")},
                                 }));
    auto sv = VermaAlgebra::sv();
    CHECK(gram_matrix(sv, 1) == PolyMatrix::from_rows({{P("mu")}}));
    CHECK(plain_gram_matrix(sv, 2) ==
          PolyMatrix::from_rows({{P("0"), P("0"), P("mu")}, {P("0"), P("2*mu^2"), P("mu")}, {P("mu"), P("mu"), P("2*h")}}));
    for (int t = 0; t <= 5; ++t) {
        CHECK(gram_matrix(sv, t, Exec::Serial) == gram_matrix(sv, t, Exec::Parallel));
        CHECK(plain_gram_matrix(sv, t, Exec::Serial) == plain_gram_matrix(sv, t, Exec::Parallel));
    }
}

TEST_CASE("kac determinants") {
    auto sv = VermaAlgebra::sv();
    auto vir = VermaAlgebra::vir_f0();
    CHECK(kac_det(sv, 0).det == P("1"));
    CHECK(kac_det(sv, 1).det == P("mu"));
    auto d1 = kac_det(sv, 2);
    CHECK(d1.det.str() == "-2*mu^4");
    CHECK(d1.exponent == 4);
    CHECK(d1.dim == 3);
    CHECK(kac_det(vir, 2).det.str() == "-mu^2");
    CHECK(kac_det(vir, 4).det.str() == "16*mu^8");
    auto d2 = kac_det(sv, 4);
    CHECK(d2.exponent == 20);
    CHECK(d2.is_mu_power);
    CHECK(d2.h_free);
    CHECK(d2.c_free);
    CHECK(d2.triangular);
    CHECK(d2.diagonal_law);
    CHECK(d2.mixed_matches);
    CHECK_THROWS_AS(kac_det(sv, 7), BudgetExceeded);
    CHECK_THROWS_AS(kac_det(vir, 10), BudgetExceeded);
    CHECK(kac_det(sv, 7, KacBudget{7, 8}).exponent == kac_exponent(sv, 7));
    // no central charge: same determinant
    CHECK(kac_det(VermaAlgebra::vir_f0(false), 4).det == kac_det(vir, 4).det);
    auto j = d1.json();
    CHECK(j.find("\"det\": \"-2*mu^4\"") != std::string::npos);
    CHECK(j.find("\"degree_times_2\": 2") != std::string::npos);
}

TEST_CASE("kac exponents") {
    auto sv = VermaAlgebra::sv();
    auto vir = VermaAlgebra::vir_f0();
    CHECK(kac_exponent(sv, 2) == 4);
    CHECK(kac_exponent(sv, 4) == 20);
    CHECK(kac_exponent(vir, 4) == 8);
    CHECK(printed_kac_exponent(vir, 4) == 8);
    for (int t = 0; t <= 10; t += 2) CHECK(printed_kac_exponent(vir, t) == kac_exponent(vir, t));
    for (int t = 0; t <= 10; ++t) CHECK(closed_kac_exponent(sv, t) == kac_exponent(sv, t));
    // the printed sv formula, read literally, overcounts at degrees 1, 3/2, 2
    CHECK(printed_kac_exponent(sv, 2) == 5);
    CHECK(printed_kac_exponent(sv, 3) == 9);
    CHECK(printed_kac_exponent(sv, 4) == 23);
    CHECK(printed_kac_exponent(sv, 1) == 1);
}

TEST_CASE("determinant signs") {
    auto vir = VermaAlgebra::vir_f0();
    auto d1 = kac_det(vir, 2);
    CHECK(d1.sign == -1);
    CHECK(d1.sign_swap_reading == -1);
    CHECK(d1.sign_dim_reading == 1);
    auto d2 = kac_det(vir, 4);
    CHECK(d2.sign == 1);
    CHECK(d2.sign_dim_reading == -1);
}

TEST_CASE("suites") {
    auto lem = lemma_checks(4, 6);
    CHECK(lem.ok());
    CHECK(lem.count(Status::Pass) == lem.checks.size());
    auto kac = kac_suite(VermaAlgebra::sv(), 4);
    CHECK(kac.ok());
    CHECK(kac.count(Status::ExpectedFail) > 0);
}
