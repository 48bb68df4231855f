#include "kirwan/weightlat.hpp"

#include <algorithm>
#include <stdexcept>

namespace kirwan {

std::vector<Weight> WeightSystem::support() const {
    std::set<Weight> s;
    for (const auto& e : weights) s.insert(e.w);
    return {s.begin(), s.end()};
}

namespace {

Rat cross(const Weight& a, const Weight& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Weight& a, const Weight& b) { return a.x * b.x + a.y * b.y; }

bool segment_through_origin(const Weight& a, const Weight& b) {
    return cross(a, b).is_zero() && dot(a, b).sign() <= 0;
}

bool triangle_contains_origin(const Weight& a, const Weight& b,
                              const Weight& c) {
    const int s1 = cross(a, b).sign();
    const int s2 = cross(b, c).sign();
    const int s3 = cross(c, a).sign();
    // Degenerate triangles are covered by the segment tests.
    if (s1 == 0 || s2 == 0 || s3 == 0) return false;
    return s1 == s2 && s2 == s3;
}

// Projection of the origin onto the segment [a,b] in the gram metric.
Weight project_segment(const Gram& g, const Weight& a, const Weight& b) {
    const Weight dir = b - a;
    const Rat dd = g.norm2(dir);
    if (dd.is_zero()) return a;
    Rat s = -g.inner(a, dir) / dd;
    if (s.sign() < 0) s = Rat(0);
    if (s > Rat(1)) s = Rat(1);
    return a + dir * s;
}

} // namespace

bool hull_contains_origin(const std::vector<Weight>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        if (points[i].is_zero()) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (segment_through_origin(points[i], points[j])) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (triangle_contains_origin(points[i], points[j], points[k]))
                    return true;
    return false;
}

Weight closest_point(const WeightSystem& ws,
                     const std::vector<Weight>& subset) {
    if (subset.empty())
        throw std::invalid_argument("closest_point: empty subset");
    if (hull_contains_origin(subset)) return Weight(0, 0);
    std::optional<Weight> best;
    Rat best_norm(0);
    auto consider = [&](const Weight& cand) {
        const Rat n = ws.gram.norm2(cand);
        if (!best || n < best_norm) {
            best = cand;
            best_norm = n;
        }
    };
    for (std::size_t i = 0; i < subset.size(); ++i) {
        consider(subset[i]);
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            consider(project_segment(ws.gram, subset[i], subset[j]));
    }
    return *best;
}

std::set<Weight> index_set(const WeightSystem& ws, const ChamberDesc& chamber) {
    const std::vector<Weight> pts = ws.support();
    std::set<Weight> out;
    auto admit = [&](const Weight& w) {
        if (chamber.contains(w)) out.insert(w);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        admit(closest_point(ws, {pts[i]}));
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            admit(closest_point(ws, {pts[i], pts[j]}));
    }
    if (hull_contains_origin(pts)) admit(Weight(0, 0));
    return out;
}

int n_beta(const WeightSystem& ws, const Weight& beta) {
    if (beta.is_zero())
        throw std::domain_error("n_beta: beta must be nonzero");
    const Rat nn = ws.gram.norm2(beta);
    int count = 0;
    for (const auto& e : ws.weights)
        if (ws.gram.inner(e.w, beta) < nn) count += e.multiplicity;
    return count;
}

int codim(const WeightSystem& ws, const Weight& beta,
          const std::vector<Weight>& positive_roots) {
    int above = 0;
    for (const auto& g : positive_roots)
        if (ws.gram.inner(g, beta).sign() > 0) ++above;
    const int d = n_beta(ws, beta) - above;
    if (d < 0)
        throw std::runtime_error("codim: negative codimension at beta=" +
                                 beta.str() + " (inconsistent root data)");
    return d;
}

std::vector<WeightEntry> wall_support(const WeightSystem& ws,
                                      const Weight& beta) {
    const Rat nn = ws.gram.norm2(beta);
    std::vector<WeightEntry> out;
    for (const auto& e : ws.weights)
        if (ws.gram.inner(e.w, beta) == nn) out.push_back(e);
    return out;
}

} // namespace kirwan
