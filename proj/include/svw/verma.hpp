#pragma once

#include "svw/coeff.hpp"
#include "svw/liealg.hpp"
#include "svw/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace svw {

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiplicities (a^1, a^2, ...): a^i stacks of height i. Trailing zeros trimmed.
struct Partition {
    std::vector<int> counts;

    Partition() = default;
    explicit Partition(std::vector<int> c);

    int degree() const;
    int width() const;
    // 2 * (degree - width/2): the degree of the Y string Y_{-1/2}^{a^1} Y_{-3/2}^{a^2} ...
    int shifted_degree_twice() const { return 2 * degree() - width(); }
    bool empty() const { return counts.empty(); }
    std::string str() const;  // "(2,0,1)", "()" for the empty partition
    friend bool operator==(const Partition&, const Partition&) = default;
};

// The fixed linear extension of refinement: width descending, then counts
// lexicographically ascending. Finer partitions come first.
bool partition_less(const Partition& a, const Partition& b);

// Both lists are increasing for partition_less.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> shifted_partitions_of(int twice_s);
long partition_count(int n);

// a is obtained from b by splitting stacks. Throws DegreeMismatch.
bool refinement_leq(const Partition& a, const Partition& b);

enum class VermaKind { SV, VirF0 };

struct VermaAlgebra {
    VermaKind kind = VermaKind::SV;
    bool central = true;  // Virasoro cocycle with Z acting as c/12

    static VermaAlgebra sv(bool central = true) { return {VermaKind::SV, central}; }
    static VermaAlgebra vir_f0(bool central = true) { return {VermaKind::VirF0, central}; }
    std::string name() const;  // "sv" | "vir-f0"
    AlgebraId lie() const;
};

// L^{-A} Y^{-B} M^{-C} psi.
struct PBWVector {
    Partition A, B, C;

    int degree_twice() const { return 2 * A.degree() + B.shifted_degree_twice() + 2 * C.degree(); }
    int width() const { return A.width() + B.width() + C.width(); }
    PBWVector swapped() const { return {C, B, A}; }
    std::vector<GenSymbol> word() const;  // creation operators, left to right
    std::string str() const;              // "L_-1 Y_-1/2^2 psi"
    friend bool operator==(const PBWVector&, const PBWVector&) = default;
};

enum class Ordering { M, L };

// M-ordering: blocks by decreasing deg C, then C increasing, then s-deg B
// decreasing, then B increasing, then A decreasing. The L-ordering puts
// L^{-C}Y^{-B}M^{-A} where the M-ordering has L^{-A}Y^{-B}M^{-C}.
std::vector<PBWVector> pbw_basis(const VermaAlgebra& alg, int twice_n, Ordering ord);

// <psi| w_1 ... w_k |psi> in the parameters h (L_0), mu (M_0), c (central charge).
CoeffPoly vacuum_expect(const VermaAlgebra& alg, const std::vector<GenSymbol>& word);
// Contravariant form with X_n^* = X_{-n}.
CoeffPoly form(const VermaAlgebra& alg, const PBWVector& x, const PBWVector& y);

// Entry (i, j) = <H_j | V_i>, H in M-ordering, V in L-ordering.
PolyMatrix gram_matrix(const VermaAlgebra& alg, int twice_n, Exec exec = Exec::Parallel);
// Entry (i, j) = <x_i | x_j> in the M-ordered basis.
PolyMatrix plain_gram_matrix(const VermaAlgebra& alg, int twice_n, Exec exec = Exec::Parallel);

struct KacBudget {
    int sv_twice = 6;   // sv up to degree 3
    int vir_twice = 8;  // vir-f0 up to degree 4
};

struct GramReport {
    std::string algebra;
    int degree_times_2 = 0;
    std::size_t dim = 0;
    CoeffPoly det;              // det of the plain Gram matrix (fraction-free elimination)
    long exponent = -1;         // observed power of mu; -1 unless is_mu_power
    long predicted = 0;         // sum over the basis of wid A + wid B + wid C
    long printed = 0;           // the printed closed form, evaluated literally
    bool is_mu_power = false;
    bool h_free = false, c_free = false;
    bool triangular = false;    // mixed-ordering matrix
    bool diagonal_law = false;  // each diagonal entry is positive * mu^{wid}
    bool mixed_matches = false; // sign(P) * prod(diagonal) == det
    int sign = 0;               // sign of the coefficient of det
    int sign_dim_reading = 0;   // (-1)^dim
    int sign_swap_reading = 0;  // sign of the A <-> C involution on the basis

    std::string json() const;
};

GramReport kac_det(const VermaAlgebra& alg, int twice_n, const KacBudget& budget = {}, Exec exec = Exec::Parallel);

// Sum of widths over the PBW basis (the diagonal-product exponent).
long kac_exponent(const VermaAlgebra& alg, int twice_n);
// The printed closed forms. For sv, j runs over all of 0, 1/2, ..., n.
long printed_kac_exponent(const VermaAlgebra& alg, int twice_n);
// Closed form of the diagonal product for sv: sum over B of wid(B) * #(A, C) + a'_{n - s-deg B}.
long closed_kac_exponent(const VermaAlgebra& alg, int twice_n);

// Lemmas on vacuum expectations of L/M strings (vir-f0 up to vir_twice/2)
// and of L/Y/M strings (sv up to sv_twice/2).
SuiteReport lemma_checks(int sv_twice = 6, int vir_twice = 8);

// kac_det for every degree up to max_twice, as checks.
SuiteReport kac_suite(const VermaAlgebra& alg, int max_twice, const KacBudget& budget = {});

}  // namespace svw
