#ifndef BERK_INSTANCES_HPP
#define BERK_INSTANCES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "berk/classifier.hpp"
#include "berk/ratfunc.hpp"

namespace berk {

struct Instance {
    std::string name;
    CubicCoefficients coeffs;
    CaseLabel intended;
    bool satisfiable = true;   // false: the leaf is empty under heart+club
    std::string note;
    std::string file_json;     // equivalent instance-file content
};

// one instance per satisfiable taxonomy leaf plus the six deep subcases;
// the empty leaf 1-2-1-2 is reported with satisfiable = false
std::vector<Instance> taxonomy_instances(const Rat& working_span = kDefaultWorkingPrecision);

// heart+club leave (a3, a2, b2) free: b1 = 3a3+2a2-2b2, b0 = -2a3-a2+b2
CubicCoefficients tuple_from_free(const Series& a3, const Series& a2, const Series& b2);

// random exact series with exponents on the given lattice
Series random_series(std::mt19937& rng, int max_terms = 3, long lattice_den = 2);

// random validated tuple (retries internally)
CubicCoefficients random_valid_tuple(std::mt19937& rng);

}  // namespace berk

#endif
