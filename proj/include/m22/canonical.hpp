#ifndef M22_CANONICAL_HPP
#define M22_CANONICAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "m22/graph.hpp"

namespace m22 {

inline constexpr int kDefaultCanonicalCap = 16;
inline constexpr int kHardCanonicalCap = 32;  // bitmask rows

// Canonical representative of a graph's isomorphism class: the relabeling
// to 0..n-1, its sorted edge list, and the labeling that achieves it.
struct CanonicalForm {
    int n = 0;
    std::vector<Edge> edges;                  // on labels 0..n-1, sorted
    std::map<VertexId, VertexId> labeling;    // original id -> canonical id

    bool same_class(const CanonicalForm& other) const {
        return n == other.n && edges == other.edges;
    }
    // Comparable key, usable in ordered containers.
    std::vector<int> key() const;
};

// Deterministic canonical form via partition refinement with individualization.
// Isomorphic inputs map to identical (n, edges). Throws PreconditionError when
// |V| exceeds the cap.
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

bool is_isomorphic(const Graph& g1, const Graph& g2);

// Edge-preserving bijection from g1's vertices onto g2's, when one exists.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& g1,
                                                             const Graph& g2);

}  // namespace m22

#endif
