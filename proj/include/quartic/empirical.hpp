#pragma once

#include <vector>

#include "quartic/constants.hpp"
#include "quartic/enumeration.hpp"

namespace quartic {

// number of real embeddings taken in complex pairs: 0 (R^4), 1 (R^2 x C) or 2 (C^2)
int real_signature(const Coords& x);

// largest |Delta| for which every quartic field is known to have a pair in the box
// (calibrated against the polynomial oracle); 0 when the bound is unsupported
i64 box_coverage(int bound);

struct EmpiricalOptions {
    int bound = 2;
    int radius = 6;
    bool zeta_weighted = false;  // weight 1/#Stab instead of 1
};

struct EmpiricalOrbit {
    OrbitRecord record;
    int signature = 0;
    double weight = 0;  // psi(|Delta|/X), divided by #Stab if zeta weighted
};

struct EmpiricalResult {
    double count = 0;
    i64 box_pairs = 0;  // canonical pairs with 0 < |Delta| <= v X
    i64 candidates = 0;  // after field / maximality / local filters
    OrbitStats stats;
    i64 unresolved = 0;  // accepted records flagged unresolved
    std::vector<EmpiricalOrbit> orbits;  // records passing every filter, psi > 0 or not
};

// does a maximal field orbit satisfy the local conditions at infinity and at the constrained primes
bool passes_specification(const LocalSpecification& spec, const Coords& x, int signature);

// canonical box pairs with 0 < |Delta| <= max_disc that are certified fields, maximal
// everywhere and of an allowed type at every unramified constrained prime
struct EmpiricalCandidates {
    int bound = 0;
    i64 max_disc = 0;
    i64 box_pairs = 0;
    std::vector<std::pair<Coords, int>> pairs;
};
EmpiricalCandidates empirical_candidates(const LocalSpecification& spec, i64 max_disc, int bound);
// orbit reduction and weighting of a candidate set; no coverage check
EmpiricalResult empirical_from_candidates(const LocalSpecification& spec, const SmoothWeight& w, double X,
                                          const EmpiricalCandidates& cand, const EmpiricalOptions& opt = {});

// sum over quartic field orbits in the box passing the filters of psi(|Delta| / X)
EmpiricalResult empirical_count(const LocalSpecification& spec, const SmoothWeight& w, double X,
                                const EmpiricalOptions& opt = {});

}  // namespace quartic
