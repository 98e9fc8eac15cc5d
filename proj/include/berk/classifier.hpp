#ifndef BERK_CLASSIFIER_HPP
#define BERK_CLASSIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "berk/berkovich.hpp"
#include "berk/ratfunc.hpp"

namespace berk {

struct CaseLabel {
    std::string path;                      // leaf of the Figure-1/2 trees
    std::optional<int> deep_subcase = {};  // 1..6, only for 2-2-2-2-1-1

    std::string str() const {
        return deep_subcase ? path + " case " + std::to_string(*deep_subcase) : path;
    }
    bool operator==(const CaseLabel& o) const {
        return path == o.path && deep_subcase == o.deep_subcase;
    }
};

// One of the two non-normalized critical points. Valuation data is always
// exact (Newton polygons); the lifted value is present only when the root
// lies in the Q-coefficient model.
struct RootDescriptor {
    std::optional<Series> lifted;
    Rat v;            // v(c)
    Rat v_one_minus;  // v(1 - c)
    Series rep;       // rational center representative toward c
    Rat rep_depth;    // v(rep - c) >= rep_depth
    std::string note; // residue data when not liftable
};

struct CriticalPair {
    RootDescriptor c1, c2;  // ordered by (valuation, v(1-c), residue)
    Rat v_diff;             // v(c1 - c2)
};

CriticalPair solve_psi(const CubicCoefficients& c,
                       const Rat& working_span = kDefaultWorkingPrecision);

// p = beta - 1/2 and q = gamma - 1 recovered from the coefficients
// (deep case only)
struct DeepCaseParams {
    Series p, q;
    int subcase = 0;  // 1..6
};
DeepCaseParams deep_case_params(const CubicCoefficients& c,
                                const Rat& working_span = kDefaultWorkingPrecision);

CaseLabel classify_case(const CubicCoefficients& c,
                        const Rat& working_span = kDefaultWorkingPrecision);

HullTree critical_hull(const CriticalPair& roots);

struct LocusDescription {
    bool connected = true;
    HullTree hull;
    CaseLabel label;
    // populated when !connected: the two segments as leaf-index pairs with
    // the valuation of the difference of their endpoints
    std::array<std::array<int, 2>, 2> segments{};
    std::array<Rat, 2> segment_exp{};
    std::string figure_tag;  // Fig3..Fig10 when the shape matches, else empty
};

// verdict table of sections 2.1-2.4 as printed (pairing read off the hull)
LocusDescription decide_locus_symbolic(const CubicCoefficients& c, const CaseLabel& label,
                                       const CriticalPair& roots);

// multiplicity-oracle verdict: star hull or central-edge midpoint test
LocusDescription decide_locus_oracle(const CubicCoefficients& c, const HullTree& hull,
                                     const CaseLabel& label,
                                     std::vector<std::string>* notes = nullptr);

// Theorem 1 bullet matcher
struct BulletMatch {
    std::vector<std::string> connected;  // matched connected bullets
    std::vector<std::string> two_segments;
    // implied verdict when exactly one side matched
    std::optional<bool> implies_connected() const {
        if (!connected.empty() && two_segments.empty()) return true;
        if (connected.empty() && !two_segments.empty()) return false;
        return std::nullopt;
    }
};
BulletMatch theorem1_match(const CubicCoefficients& c, const CaseLabel& label,
                           const Rat& working_span = kDefaultWorkingPrecision);

struct CrossReport {
    CaseLabel label;
    std::optional<LocusDescription> symbolic;
    std::string symbolic_error;  // set when the symbolic table could not apply
    LocusDescription oracle;     // authoritative
    BulletMatch bullets;
    bool agreement = false;
    std::vector<std::string> notes;
};

CrossReport cross_check(const CubicCoefficients& c,
                        const Rat& working_span = kDefaultWorkingPrecision);

// deep-case construction from p, q with |p|, |q| < 1
CubicCoefficients from_pq(const Series& p, const Series& q,
                          const Rat& working_span = kDefaultWorkingPrecision);

}  // namespace berk

#endif
