#pragma once

#include "kirwan/qseries.hpp"
#include "kirwan/weightlat.hpp"

#include <map>
#include <string>
#include <vector>

namespace kirwan {

// 2x2 rational matrix acting on the Cartan algebra, [[a,b],[c,d]].
struct Mat2 {
    Rat a = Rat(1), b = Rat(0), c = Rat(0), d = Rat(1);

    static Mat2 identity() { return {}; }
    static Mat2 diag(Rat p, Rat q) { return {p, Rat(0), Rat(0), q}; }
    static Mat2 swap_axes() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }
    static Mat2 neg_swap() { return {Rat(0), Rat(-1), Rat(-1), Rat(0)}; }

    Weight apply(const Weight& w) const {
        return {a * w.x + b * w.y, c * w.x + d * w.y};
    }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator<(const Mat2& m, const Mat2& n) {
        if (m.a != n.a) return m.a < n.a;
        if (m.b != n.b) return m.b < n.b;
        if (m.c != n.c) return m.c < n.c;
        return m.d < n.d;
    }
};

// Closure of a generating set under multiplication; throws past the cap.
std::vector<Mat2> matrix_group_closure(const std::vector<Mat2>& generators,
                                       std::size_t cap = 64);

// Reductive-group descriptor. Group theory (normalisers, covers, component
// groups) is encoded as data; the classifying action carries H^*(B-) with the
// pi0 action on its generators, while weyl_gens/pi0_gens carry the action on
// the Cartan algebra that drives stratification bookkeeping.
struct GroupDesc {
    std::string name;
    std::string display; // human-readable identity; defaults to name
    int dim = 0;
    int rank = 0;
    std::vector<Weight> positive_roots;
    GradedAction classifying;
    int pi0_order = 1;
    int central_torus_rank = 0;
    std::vector<Mat2> weyl_gens; // Cartan action of the Weyl group of G^0
    std::vector<Mat2> pi0_gens;  // Cartan action of non-identity components

    // Full finite symmetry group on the Cartan: Weyl(G^0) extended by pi0.
    // Returns (matrix, lies in the identity-component Weyl group).
    std::vector<std::pair<Mat2, bool>> cartan_symmetry() const;
};

QRationalFunction classifying_series(const GroupDesc& g);

struct GroupCatalog {
    std::map<std::string, GroupDesc> entries;
    // Names eligible as stabilizer (Levi) identifications, in match order.
    std::vector<std::string> levi_candidates;

    const GroupDesc& get(const std::string& name) const;
    bool has(const std::string& name) const {
        return entries.count(name) != 0;
    }
    void add(const GroupDesc& g) { entries[g.name] = g; }

    // Built-in cast: the curve-counting group G = (SL2 x SL2) x| Z2 and the
    // tori, double covers, normalisers and slice groups the computation uses.
    static GroupCatalog builtin();
};

// Levi of the parabolic attached to beta: the torus, root subgroups for
// positive roots orthogonal to beta, and the component elements whose Cartan
// action fixes beta. Throws when the shape matches no catalog pattern.
GroupDesc stabilizer_of(const GroupDesc& g, const Weight& beta,
                        const GroupCatalog& catalog,
                        const Gram& gram = Gram::identity());

} // namespace kirwan
