#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/forms.hpp"
#include "quartic/padic.hpp"

namespace quartic {

// ---- box enumeration -----------------------------------------------------------

// Calls f(x, mult) for every pair with coordinates in [-bound, bound] that is
// lexicographically minimal among {x, -x, swap(x), -swap(x)}; mult is the size
// of that set. Coordinates are sharded by the first coordinate: shard i of n
// handles first coordinates c with (c + bound) % n == i.
void enumerate_box(int bound, const std::function<void(const Coords&, int)>& f, int shard = 0,
                   int shards = 1);
// canonical representative of x under negation and A<->B swap
Coords symmetry_canonical(const Coords& x);
i128 discriminant(const Coords& x);

// ---- exhaustive counts over V(Z/p^2) --------------------------------------------

struct Census {
    i64 p = 5;
    Rat nonmaximal;                        // density of nonmaximal x mod p^2
    std::map<SplittingType, Rat> by_type;  // density of maximal x of each type
    Rat type_unstable;  // maximal x whose type changed under a p^2 perturbation
    i64 reductions = 0;   // pairs x0 mod p visited
    i64 lifts = 0;        // coset representatives examined
};
// p >= 5. Uses GL3(F_p) classes of A mod p and tangent-space cosets of the lifts.
Census census_mod_p2(i64 p);

struct BoxMaximality {
    i64 pairs = 0;       // with multiplicity
    i64 degenerate = 0;  // Delta = 0
    i64 m1_positive = 0;
    i64 m1_positive_but_maximal = 0;
    i64 m1_multiple = 0;
    i64 m1_multiple_without_p4 = 0;
    i64 nonmaximal = 0;
};
BoxMaximality box_maximality(int bound, i64 p, int shard = 0, int shards = 1);

// ---- splitting fingerprints -------------------------------------------------------

// splitting pattern at p not dividing Delta: "1111", "112", "13", "22" or "4"
std::string unramified_pattern(const Coords& x, i64 p);
// factorization pattern of a monic quartic t^4 + g0 t^3 + g1 t^2 + g2 t + g3 mod p,
// with exponents, e.g. "1^2 2" (degrees sorted)
std::string poly_pattern(const std::array<i64, 4>& g, i64 p);
// Dedekind criterion: Z_p[t]/g is the maximal order of Q_p[t]/g
bool dedekind_maximal(const std::array<i64, 4>& g, i64 p);

struct Fingerprint {
    i64 disc = 0;
    std::vector<std::string> patterns;  // odd primes 3..47; "" where p | disc
    bool certified_field = false;
    std::string key() const;
};
// A quartic algebra is certified to be a field when some unramified prime is
// inert, or when one prime has no degree-1 place and another has pattern 13.
bool certify_field(const std::vector<std::string>& patterns);
extern const std::vector<i64> kFingerprintPrimes;
Fingerprint pair_fingerprint(const Coords& x);
i128 poly_disc(const std::array<i64, 4>& g);
Fingerprint poly_fingerprint(const std::array<i64, 4>& g);

// ---- orbits -------------------------------------------------------------------------

struct OrbitRecord {
    Coords rep{};  // lexicographically minimal box point of the component
    i64 disc = 0;
    int stabilizer = 0;                     // #Stab / 2 (the kernel (1, -1) acts trivially)
    std::map<i64, std::string> splitting;   // at 5, 7, 11: label, "nonmaximal" or "unramified:..."
    bool maximal = false;                   // at every prime
    bool field = false;                     // certified
    bool unresolved = false;
    i64 box_points = 0;                     // with symmetry multiplicity
    std::string fingerprint;
};

// box points with 0 < |Delta| <= max_disc, symmetry-canonical, with multiplicity
std::vector<std::pair<Coords, int>> collect_box(int bound, i64 max_disc);

struct OrbitStats {
    i64 groups = 0, orbits = 0, unresolved_groups = 0;
};
std::vector<OrbitRecord> orbit_reduce(const std::vector<std::pair<Coords, int>>& pairs, int radius,
                                      int bound, OrbitStats* stats = nullptr);
int stabilizer_size(const Coords& x);
bool maximal_everywhere(const Coords& x);

// ---- polynomial oracle ----------------------------------------------------------------

struct OracleAlgebra {
    i64 disc = 0;
    std::array<i64, 4> g{};  // first generator found
    std::string fingerprint;
    bool field = false;
};
// monic quartics of height <= height whose ring Z[t]/g is maximal everywhere, with
// 0 < |disc| <= max_disc, deduplicated by (disc, fingerprint)
std::vector<OracleAlgebra> polynomial_oracle(i64 max_disc, int height);

}  // namespace quartic
