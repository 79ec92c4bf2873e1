#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/forms.hpp"
#include "quartic/interval.hpp"

namespace quartic {

struct PAdicContext {
    i64 p = 5;
    int precision_k = 4;

    PAdicContext() = default;
    PAdicContext(i64 prime, int k = 4);
    i64 pk() const { return ipow(p, precision_k); }
};

// ---- Hilbert symbols and Hasse invariants -------------------------------------

int hilbert_symbol(const Rat& a, const Rat& b, i64 p);
int hilbert_symbol(i128 a, i128 b, i64 p);

// q given by its Gram matrix (any rational scaling is fine: the ternary Hasse
// invariant is unchanged by scaling the form)
int hasse_invariant(const Mat3<Rat>& gram, const PAdicContext& ctx);
int hasse_invariant(const Mat3<Int>& gram, const PAdicContext& ctx);
bool is_isotropic(const Mat3<Rat>& gram, const PAdicContext& ctx);

// Fast path for integer symmetric matrices with small entries: leading-minor
// diagonalization in 128-bit arithmetic. Returns 0 if det = 0.
int hasse_fast(const Mat3<i64>& m, i64 p);

// ---- maximality --------------------------------------------------------------

struct MaximalityWitness {
    bool maximal = true;
    std::string shape;  // "span", "T1", "SW2", "SW2'" or ""
};

bool is_maximal_at_p(const Pair& x, const PAdicContext& ctx);
MaximalityWitness maximality_witness(const Pair& x, const PAdicContext& ctx);
int m1_count(const Pair& x, const PAdicContext& ctx);

// Same predicates on coordinates already reduced mod p^2 (no discriminant check).
struct ModP2Pair {
    std::array<i64, 6> a, b;  // coordinate order a11,a12,a13,a22,a23,a33
};
ModP2Pair reduce_mod_p2(const Coords& c, i64 p);
MaximalityWitness maximality_mod_p2(const ModP2Pair& x, i64 p);
int m1_count_mod_p2(const ModP2Pair& x, i64 p);

int cubic_index_valuation(const Cubic& f, const PAdicContext& ctx);
Cubic maximalize(const Cubic& f, const PAdicContext& ctx);

// number of roots of f in P^1(Q_p), f with nonzero discriminant
int count_padic_roots(const Cubic& f, i64 p);
// roots of f in P^1(F_p) with multiplicity pattern, e.g. {1,1,1}, {2,1}, {3}, {1}, {}
std::vector<int> residual_root_pattern(const Cubic& f, i64 p);

// ---- splitting types ---------------------------------------------------------

enum class SplittingType {
    t1111,
    t112,
    t22,
    t4,
    t13,
    t1sq11,
    t1sq2,
    t1cu1,
    t2sq_C2sq,
    t2sq_C4,
    t1sq1sq_eq,
    t1sq1sq_neq,
    t1q4
};

constexpr std::array<SplittingType, 13> kAllTypes = {
    SplittingType::t1111,      SplittingType::t112,        SplittingType::t22,
    SplittingType::t4,         SplittingType::t13,         SplittingType::t1sq11,
    SplittingType::t1sq2,      SplittingType::t1cu1,       SplittingType::t2sq_C2sq,
    SplittingType::t2sq_C4,    SplittingType::t1sq1sq_eq,  SplittingType::t1sq1sq_neq,
    SplittingType::t1q4};

std::string label(SplittingType t);
std::optional<SplittingType> parse_type(const std::string& s);
// |Delta|_p / #Aut summed over the algebras of this type
Rat mass(SplittingType t, i64 p);
int disc_valuation(SplittingType t);
Rat total_maximal_mass(i64 p);  // 1 + 1/p + 2/p^2 + 1/p^3

// Representative resolvent cubic of each type (row of the D-table).
enum class ResolventRow { r111, r12, r3, r1sq1, r1cu, rC2sq, rC4, r1q4 };
ResolventRow resolvent_row(SplittingType t);
std::string row_label(ResolventRow r);
Cubic row_form(ResolventRow r, i64 p);

SplittingType classify_splitting(const Pair& x, const PAdicContext& ctx);

// density of G(Z_p)-orbits: (1-1/p) Vol(SL2) Vol(SL3) * mass
Rat vol_sl(int n, i64 p);
Rat orbit_density(SplittingType t, i64 p);

// ---- LocalFactor -------------------------------------------------------------

using Poly = std::vector<Rat>;  // coefficients, lowest degree first

Poly poly_trim(Poly a);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);

// rational function in t = p^{-s}
struct LocalFactor {
    Poly num{Rat(0)};
    Poly den{Rat(1)};

    static LocalFactor constant(const Rat& c);
    static LocalFactor poly(Poly p);
    // c * t^k / (1 - sigma * t / p)
    static LocalFactor geometric(const Rat& c, int k, i64 p, int sigma);

    LocalFactor operator+(const LocalFactor& o) const;
    LocalFactor operator-(const LocalFactor& o) const;
    LocalFactor operator*(const LocalFactor& o) const;
    LocalFactor operator*(const Rat& c) const;

    std::vector<Rat> series(int n) const;  // coefficients of t^0 .. t^{n-1}
    Rat eval(const Rat& t) const;
    Interval eval(const Interval& t) const;
    bool operator==(const LocalFactor& o) const;  // as rational functions
    std::string str() const;
};

// ---- tables --------------------------------------------------------------------

// exact count of primitive (a,b) mod p^{m+1} with v(f(a,b)) = m, divided by p^{2(m+1)}
Rat d_table(ResolventRow r, int m, const PAdicContext& ctx);
Rat d_closed_form(ResolventRow r, int m, i64 p);  // self-consistent closed form
Rat d_printed(ResolventRow r, int m, i64 p);      // value as printed in the table

// mass-weighted local integral, per splitting type
LocalFactor local_integral(SplittingType t, bool twisted, const PAdicContext& ctx);
// the summary-table cell exactly as printed; for the over-ramified rows both
// sub-labels share one printed cell
LocalFactor printed_table_cell(SplittingType t, bool twisted, i64 p);
// unweighted integral (without the mass prefactor)
LocalFactor bare_integral(SplittingType t, bool twisted, i64 p);
// the same closed forms with no check on p (used for the formal factors at 2 and 3)
LocalFactor bare_integral_formal(SplittingType t, bool twisted, i64 p);

// ---- brute-force oracle ----------------------------------------------------------

// One explicit local algebra: monic quartic g with v_p(disc g) equal to the
// algebra's discriminant exponent, together with its weight |Delta|_p/#Aut.
struct LocalAlgebra {
    SplittingType type;
    std::array<i64, 4> g;  // t^4 + g0 t^3 + g1 t^2 + g2 t + g3
    Rat weight;
};
std::vector<LocalAlgebra> local_algebras(SplittingType t, i64 p);
Pair pair_from_quartic(const std::array<i64, 4>& g);

struct BruteIntegral {
    std::vector<Rat> coeff;  // mass-weighted coefficient of t^m, m <= M
    Rat tail_measure;        // mass-weighted measure with v > M
};
BruteIntegral brute_coefficients(SplittingType t, bool twisted, i64 p, int M);
// value at real s (s > -1 required for the tail bound); t = p^{-s}
Interval brute_local_integral(SplittingType t, bool twisted, double s, i64 p, int M);
Interval brute_interval_at(const BruteIntegral& b, const Interval& t);
// for 1 <= t < p: assumes the level measures beyond the truncation decay by a
// factor 1/p per level (true once M exceeds the root valuations of the row form)
Interval brute_interval_decay(const BruteIntegral& b, const Interval& t, i64 p);

// isotropy ratios at the multiple root for the over-ramified types
struct IsotropyCount {
    Rat isotropic, anisotropic;
};
// weighted by the measure of the full pair (A,B)
IsotropyCount isotropy_pair_weighted(SplittingType t, i64 p, int det_val);
// counting forms A mod p^3 with A mod p a rank-1 form, p^2 || det A, nondegenerate
// residual binary form (each such A counted once)
IsotropyCount isotropy_forms_only(i64 p);

// ---- symmetric matrix zeta ---------------------------------------------------------

LocalFactor symmetric_local_zeta(bool twisted, const PAdicContext& ctx);
struct SymmetricBrute {
    std::vector<Rat> coeff;  // measure (or eps-signed measure) of v(det) = m, m < k
    Rat tail_measure;
};
SymmetricBrute symmetric_zeta_brute(bool twisted, i64 p, int k);

// ---- linear algebra over F_p used by the tangent-space reductions ------------------

struct Complement {
    int rank = 0;
    std::vector<std::vector<i64>> basis;  // unit vectors spanning a complement
};
Complement complement_mod_p(std::vector<std::vector<i64>> rows, int n, i64 p);

}  // namespace quartic
