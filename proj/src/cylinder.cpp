#include "m22/cylinder.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "m22/pebble.hpp"

namespace m22 {

CylinderPoint CylinderPoint::from_t_z(const Rational& t, const Rational& z) {
    Rational one(1);
    Rational t2 = t * t;
    Rational denom = one + t2;
    return {(one - t2) / denom, (Rational(2) * t) / denom, z};
}

Realization sample_generic_realization(const Graph& g, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        long long num = static_cast<long long>(rng() % 20001) - 10000;
        long long den = static_cast<long long>(rng() % 10000) + 1;
        return Rational(BigInt(num), BigInt(den));
    };
    Realization p;
    std::set<std::string> used_t;
    for (VertexId v : g.vertices()) {
        Rational t = draw();
        while (!used_t.insert(t.to_string()).second) t = draw();
        p[v] = CylinderPoint::from_t_z(t, draw());
    }
    return p;
}

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& p) {
    for (VertexId v : g.vertices())
        if (!p.count(v))
            throw PreconditionError("realization missing vertex " + std::to_string(v));
    const int n = g.vertex_count();
    RigidityMatrix m;
    m.num_edges = g.edge_count();
    m.num_vertices = n;
    std::map<VertexId, int> col;
    for (int i = 0; i < n; ++i) col[g.vertices()[i]] = 3 * i;
    for (const auto& [u, v] : g.edges()) {
        std::vector<Rational> row(3 * n);
        const CylinderPoint& pu = p.at(u);
        const CylinderPoint& pv = p.at(v);
        row[col[u] + 0] = pu.x - pv.x;
        row[col[u] + 1] = pu.y - pv.y;
        row[col[u] + 2] = pu.z - pv.z;
        row[col[v] + 0] = pv.x - pu.x;
        row[col[v] + 1] = pv.y - pu.y;
        row[col[v] + 2] = pv.z - pu.z;
        m.rows.push_back(std::move(row));
    }
    for (VertexId v : g.vertices()) {
        std::vector<Rational> row(3 * n);
        row[col[v] + 0] = p.at(v).x;
        row[col[v] + 1] = p.at(v).y;
        // normal to the cylinder has no axial component
        m.rows.push_back(std::move(row));
    }
    return m;
}

int exact_rank(const RigidityMatrix& m) {
    if (m.rows.empty()) return 0;
    const size_t cols = m.rows.front().size();
    // clear denominators per row; row scaling leaves the rank unchanged
    std::vector<std::vector<BigInt>> a;
    for (const auto& row : m.rows) {
        BigInt scale(1);
        for (const auto& x : row)
            if (!x.is_zero()) scale = lcm(scale, x.den());
        std::vector<BigInt> irow;
        bool nonzero = false;
        for (const auto& x : row) {
            irow.push_back(x.num() * (scale / x.den()));
            nonzero = nonzero || !x.is_zero();
        }
        if (nonzero) a.push_back(std::move(irow));
    }
    const size_t rows = a.size();
    // Bareiss elimination with full pivoting; pivot chosen smallest by limb
    // count to slow coefficient growth
    int rank = 0;
    BigInt prev(1);
    size_t r = 0;
    std::vector<size_t> col_of(cols);
    for (size_t i = 0; i < cols; ++i) col_of[i] = i;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = rows, pc = cols;
        size_t best = SIZE_MAX;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (!a[i][col_of[j]].is_zero() && a[i][col_of[j]].limb_count() < best) {
                    best = a[i][col_of[j]].limb_count();
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[r], a[pr]);
        std::swap(col_of[c], col_of[pc]);
        const BigInt pivot = a[r][col_of[c]];
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                a[i][col_of[j]] =
                    (a[i][col_of[j]] * pivot - a[i][col_of[c]] * a[r][col_of[j]]) / prev;
            }
            a[i][col_of[c]] = BigInt(0);
        }
        prev = pivot;
        ++rank;
        ++r;
    }
    return rank;
}

RankReport edge_matroid_rank(const Graph& g, unsigned long long seed) {
    RankReport report;
    report.combinatorial_rank = pebble_rank(g).rank;
    auto numeric = [&g](unsigned long long s) {
        auto p = sample_generic_realization(g, s);
        return exact_rank(rigidity_matrix(g, p)) - g.vertex_count();
    };
    report.numeric_rank = numeric(seed);
    report.samples_used = 1;
    if (report.numeric_rank != report.combinatorial_rank) {
        report.numeric_rank = std::max(report.numeric_rank, numeric(seed * 0x9e3779b97f4a7c15ull + 1));
        report.samples_used = 2;
    }
    report.agrees = report.numeric_rank == report.combinatorial_rank;
    return report;
}

bool is_inf_rigid(const Graph& g, unsigned long long seed) {
    const int target = 3 * g.vertex_count() - 2;
    auto rank_at = [&g](unsigned long long s) {
        auto p = sample_generic_realization(g, s);
        return exact_rank(rigidity_matrix(g, p));
    };
    int r = rank_at(seed);
    if (r < target) r = std::max(r, rank_at(seed * 0x9e3779b97f4a7c15ull + 1));
    return r == target;
}

}  // namespace m22
