#ifndef M22_CYLINDER_HPP
#define M22_CYLINDER_HPP

#include <map>
#include <vector>

#include "m22/bigint.hpp"
#include "m22/graph.hpp"

namespace m22 {

// Exact rational point on the unit cylinder x^2 + y^2 = 1, via the rational
// parametrization x = (1-t^2)/(1+t^2), y = 2t/(1+t^2).
struct CylinderPoint {
    Rational x, y, z;
    static CylinderPoint from_t_z(const Rational& t, const Rational& z);
};

using Realization = std::map<VertexId, CylinderPoint>;

// Distinct random rationals with numerator and denominator bounded by 1e4;
// deterministic per seed.
Realization sample_generic_realization(const Graph& g, unsigned long long seed);

// (|E|+|V|) x 3|V| exact matrix: one difference row per edge, then one
// surface-normal row (x_i, y_i, 0) per vertex.
struct RigidityMatrix {
    int num_edges = 0;
    int num_vertices = 0;
    std::vector<std::vector<Rational>> rows;
};

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& p);

// Rank over the rationals by fraction-free elimination; no tolerances.
int exact_rank(const RigidityMatrix& m);

struct RankReport {
    int numeric_rank = 0;        // exact_rank(full matrix) - |V|
    int combinatorial_rank = 0;  // pebble (2,2) rank
    bool agrees = false;
    int samples_used = 0;
};

// Compares the numeric edge-matroid rank against the pebble rank. On
// disagreement resamples once with a derived seed and keeps the larger
// numeric rank (a random sample only ever undershoots the generic rank).
RankReport edge_matroid_rank(const Graph& g, unsigned long long seed);

bool is_inf_rigid(const Graph& g, unsigned long long seed);

}  // namespace m22

#endif
