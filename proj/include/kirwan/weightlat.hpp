#pragma once

#include "kirwan/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kirwan {

// Point of the rank-2 weight lattice (index points may be non-integral).
struct Weight {
    Rat x, y;

    Weight() = default;
    Weight(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    Weight(long long x_, long long y_) : x(x_), y(y_) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Weight operator-() const { return {-x, -y}; }
    friend Weight operator-(const Weight& a, const Weight& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend Weight operator+(const Weight& a, const Weight& b) {
        return {a.x + b.x, a.y + b.y};
    }
    Weight operator*(const Rat& s) const { return {x * s, y * s}; }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

// Symmetric positive-definite 2x2 pairing on the weight lattice.
struct Gram {
    Rat a = Rat(1), b = Rat(0), d = Rat(1); // [[a, b], [b, d]]

    static Gram identity() { return {}; }
    Rat inner(const Weight& u, const Weight& v) const {
        return a * u.x * v.x + b * (u.x * v.y + u.y * v.x) + d * u.y * v.y;
    }
    Rat norm2(const Weight& u) const { return inner(u, u); }
    bool positive_definite() const {
        return a.sign() > 0 && (a * d - b * b).sign() > 0;
    }
};

struct WeightEntry {
    std::string label;
    Weight w;
    int multiplicity = 1;
};

struct WeightSystem {
    std::vector<WeightEntry> weights;
    Gram gram = Gram::identity();

    int total_multiplicity() const {
        int m = 0;
        for (const auto& e : weights) m += e.multiplicity;
        return m;
    }
    // Ambient projective dimension of P(span of the weights).
    int ambient_dim() const { return total_multiplicity() - 1; }
    std::vector<Weight> support() const;
};

// Closed convex cone {x : l(x) >= 0 for all functionals l}. Functionals are
// plain linear forms (p, q) |-> p*x + q*y, independent of the gram pairing.
struct ChamberDesc {
    std::vector<std::pair<Rat, Rat>> halfspaces;

    bool contains(const Weight& w) const {
        for (const auto& [p, q] : halfspaces)
            if ((p * w.x + q * w.y).sign() < 0) return false;
        return true;
    }
    static ChamberDesc everything() { return {}; }
};

// Exact test for 0 in conv(points): a zero point, a segment through the
// origin, or a triangle containing it (Caratheodory in rank 2).
bool hull_contains_origin(const std::vector<Weight>& points);

// Gram-metric projection of the origin onto conv(subset). The minimizer lies
// on a vertex or an edge; edge parameters are clamped to [0,1].
Weight closest_point(const WeightSystem& ws, const std::vector<Weight>& subset);

// All closest-point values over nonempty subsets of the support, filtered to
// the chamber. Singletons and pairs suffice in rank <= 2; 0 enters exactly
// when some hull contains the origin.
std::set<Weight> index_set(const WeightSystem& ws, const ChamberDesc& chamber);

// Count of weights alpha (with multiplicity) with <alpha,beta> < <beta,beta>.
int n_beta(const WeightSystem& ws, const Weight& beta);

// Stratum codimension n(beta) - #{positive roots gamma : <gamma,beta> > 0}.
int codim(const WeightSystem& ws, const Weight& beta,
          const std::vector<Weight>& positive_roots);

// Weights on the wall <alpha,beta> = <beta,beta>, with entries preserved.
std::vector<WeightEntry> wall_support(const WeightSystem& ws,
                                      const Weight& beta);

} // namespace kirwan
