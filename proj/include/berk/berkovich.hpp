#ifndef BERK_BERKOVICH_HPP
#define BERK_BERKOVICH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "berk/poly.hpp"
#include "berk/series.hpp"

namespace berk {

// A point of the Berkovich line: classical value, infinity, or the disk
// point zeta_{center, rho^radius_exp}.
struct BerkPoint {
    enum class Kind { Classical, Infinity, Disk };
    Kind kind = Kind::Classical;
    Series value;    // classical value or disk center
    Rat radius_exp;  // disks only

    static BerkPoint classical(Series v) { return {Kind::Classical, std::move(v), Rat(0)}; }
    static BerkPoint infinity() { return {Kind::Infinity, Series::zero(), Rat(0)}; }
    static BerkPoint disk(Series center, Rat e) { return {Kind::Disk, std::move(center), std::move(e)}; }

    bool is_gauss() const;
    bool same_point(const BerkPoint& o) const;  // disk equality per the disk model
    std::string str() const;
};

// join of two distinct classical points in the tree rooted at infinity
BerkPoint join(const BerkPoint& a, const BerkPoint& b);
// meeting point of the three pairwise paths
BerkPoint med(const BerkPoint& a, const BerkPoint& b, const BerkPoint& c);

// Quartet hull. Junction centers are exact representatives; validity_depth
// bounds the exponents at which the center still names a point of the tree
// (lifted roots are only known to their precision).
struct HullJunction {
    Series center;
    Rat radius_exp;
    Rat validity_depth;
};

struct HullTree {
    std::array<std::string, 4> names;   // "0", "1", "c1", "c2"
    std::array<Series, 4> leaf_center;  // representative toward each leaf
    std::array<Rat, 4> leaf_depth;      // validity depth of that representative
    std::array<bool, 4> leaf_exact;     // true when leaf_center is the leaf itself

    bool star = false;
    HullJunction jA, jB;                // star: only jA
    std::array<int, 2> pairA{0, 1}, pairB{2, 3};  // leaf indices (caterpillar)
    std::array<int, 4> attach;          // junction index (0=jA, 1=jB) per leaf
    std::array<std::array<Rat, 4>, 4> pairwise{};  // v(leaf_i - leaf_j)

    const HullJunction& junction(int idx) const { return idx == 0 ? jA : jB; }
    std::string pairing_str() const;
};

// hull of four pairwise-distinct finite classical points
HullTree hull_of_quartet(const std::array<BerkPoint, 4>& pts,
                         const std::array<std::string, 4>& names = {"0", "1", "c1", "c2"});

// The central edge dips through the join of the two junction centers when
// that join is shallower than both junctions (e.g. a path through the Gauss
// point). Returns its exponent in that case.
std::optional<Rat> central_bend_exp(const HullTree& h);

// hull from the pairwise valuation matrix (for roots known only by
// valuations); reps give usable centers toward c1/c2 with their depths
struct QuartetValuations {
    // indices: 0, 1, c1, c2
    Rat v01, v0c1, v0c2, v1c1, v1c2, vc1c2;
};
HullTree hull_from_valuations(const QuartetValuations& q,
                              const std::array<Series, 2>& c_reps,
                              const std::array<Rat, 2>& c_depths,
                              const std::array<std::optional<Series>, 2>& c_exact,
                              const std::array<std::string, 4>& names = {"0", "1", "c1", "c2"});

// Local degree of F/G at a disk point: conjugate the point to the Gauss
// point, then reduce; Moebius post-compositions peel off constant
// reductions. Also exposes the final reduced map.
struct LocalDegree {
    int degree = 0;
    QPoly red_num, red_den;
    int iterations = 0;
};

LocalDegree reduced_map_at(const SeriesPoly& F, const SeriesPoly& G, const BerkPoint& x,
                           int iteration_cap = 10000);
int multiplicity_at(const SeriesPoly& F, const SeriesPoly& G, const BerkPoint& x,
                    int iteration_cap = 10000);

// one sampled point of the hull
struct TraceSample {
    BerkPoint point;
    std::string edge;              // "central", "leaf:<name>", "junction"
    std::optional<int> multiplicity;
    std::string error;             // set when the oracle failed on this sample
    bool interior_central = false; // strictly inside the central edge
};

std::vector<TraceSample> trace_locus(const SeriesPoly& F, const SeriesPoly& G,
                                     const HullTree& hull, int samples_per_edge);

}  // namespace berk

#endif
