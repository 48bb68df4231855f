#include "kirwan/grouprep.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kirwan {

std::vector<Mat2> matrix_group_closure(const std::vector<Mat2>& generators,
                                       std::size_t cap) {
    std::set<Mat2> seen;
    seen.insert(Mat2::identity());
    for (const auto& g : generators) seen.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat2> cur(seen.begin(), seen.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                if (seen.insert(a * b).second) grew = true;
                if (seen.size() > cap)
                    throw std::runtime_error(
                        "matrix_group_closure: generated group exceeds cap");
            }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<Mat2, bool>> GroupDesc::cartan_symmetry() const {
    std::vector<Mat2> gens = weyl_gens;
    gens.insert(gens.end(), pi0_gens.begin(), pi0_gens.end());
    const std::vector<Mat2> full = matrix_group_closure(gens);
    const std::vector<Mat2> inner = matrix_group_closure(weyl_gens);
    std::set<Mat2> inner_set(inner.begin(), inner.end());
    std::vector<std::pair<Mat2, bool>> out;
    out.reserve(full.size());
    for (const auto& m : full)
        out.emplace_back(m, inner_set.count(m) != 0);
    return out;
}

QRationalFunction classifying_series(const GroupDesc& g) {
    return molien(g.classifying);
}

const GroupDesc& GroupCatalog::get(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end())
        throw std::runtime_error("GroupCatalog: unknown group \"" + name +
                                 "\"");
    return it->second;
}

namespace {

std::vector<std::vector<Rat>> identity_matrix(std::size_t n) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

std::vector<std::vector<Rat>> mat2_as_matrix(const Mat2& m) {
    return {{m.a, m.b}, {m.c, m.d}};
}

GradedAction action_from_cartan(int rank, const std::vector<Mat2>& elements) {
    GradedAction a;
    a.generator_degrees.assign(rank, 2);
    std::set<std::vector<std::vector<Rat>>> mats;
    mats.insert(identity_matrix(rank));
    for (const auto& m : elements) {
        if (rank == 2) {
            mats.insert(mat2_as_matrix(m));
        } else {
            // Rank-1 problems live on the x-axis of the ambient lattice.
            mats.insert({{m.a}});
        }
    }
    a.elements.assign(mats.begin(), mats.end());
    return a;
}

int fixed_subspace_dim(const std::vector<Mat2>& mats) {
    // Intersection of ker(m - I) over the listed matrices, inside Q^2.
    // Track a basis of the running fixed space.
    std::vector<Weight> basis = {Weight(1, 0), Weight(0, 1)};
    for (const auto& m : mats) {
        std::vector<Weight> next;
        if (basis.empty()) break;
        if (basis.size() == 2) {
            // Full plane: fixed space of m directly.
            const Rat a = m.a - Rat(1), b = m.b, c = m.c, d = m.d - Rat(1);
            if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) {
                next = basis;
            } else if ((a * d - b * c).is_zero()) {
                // One-dimensional kernel of (m - I).
                if (!a.is_zero() || !b.is_zero())
                    next = {Weight(-b, a)};
                else
                    next = {Weight(-d, c)};
            }
        } else {
            const Weight v = basis[0];
            if (m.apply(v) == v) next = basis;
        }
        basis = next;
    }
    return static_cast<int>(basis.size());
}

Mat2 reflection_matrix(const Weight& root, const Gram& gram) {
    // s(x) = x - 2 <x,root>/<root,root> root
    const Rat nn = gram.norm2(root);
    const Rat gx = gram.inner(Weight(1, 0), root);
    const Rat gy = gram.inner(Weight(0, 1), root);
    const Rat two(2);
    return {Rat(1) - two * gx * root.x / nn, -two * gy * root.x / nn,
            -two * gx * root.y / nn, Rat(1) - two * gy * root.y / nn};
}

bool same_structure(const GroupDesc& a, const GroupDesc& b) {
    if (a.rank != b.rank) return false;
    if (a.positive_roots.size() != b.positive_roots.size()) return false;
    auto degs = [](const GroupDesc& g) {
        auto d = g.classifying.generator_degrees;
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    auto pi0_set = [](const GroupDesc& g) {
        return std::set<Mat2>(g.pi0_gens.begin(), g.pi0_gens.end());
    };
    return pi0_set(a) == pi0_set(b);
}

} // namespace

GroupCatalog GroupCatalog::builtin() {
    GroupCatalog cat;
    const Mat2 refl_x = Mat2::diag(Rat(-1), Rat(1)); // (x,y) -> (-x,y)
    const Mat2 refl_y = Mat2::diag(Rat(1), Rat(-1)); // (x,y) -> (x,-y)
    const Mat2 swap = Mat2::swap_axes();
    const Mat2 nswap = Mat2::neg_swap(); // iota: (x,y) -> (-y,-x)
    const Mat2 neg = Mat2::diag(Rat(-1), Rat(-1));

    auto id1 = identity_matrix(1);
    auto id2 = identity_matrix(2);
    const std::vector<std::vector<Rat>> m_swap = {{Rat(0), Rat(1)},
                                                  {Rat(1), Rat(0)}};
    const std::vector<std::vector<Rat>> m_nswap = {{Rat(0), Rat(-1)},
                                                   {Rat(-1), Rat(0)}};
    const std::vector<std::vector<Rat>> m_neg = {{Rat(-1), Rat(0)},
                                                 {Rat(0), Rat(-1)}};
    const std::vector<std::vector<Rat>> m_neg1 = {{Rat(-1)}};

    {
        // G = (SL2 x SL2) x| Z2; the extension swaps the two deg-4 classes.
        GroupDesc g;
        g.name = "G";
        g.display = "(SL(2,C) x SL(2,C)) : Z2";
        g.dim = 6;
        g.rank = 2;
        g.positive_roots = {Weight(2, 0), Weight(0, -2)};
        g.classifying.generator_degrees = {4, 4};
        g.classifying.elements = {id2, m_swap};
        g.pi0_order = 2;
        g.weyl_gens = {refl_x, refl_y};
        g.pi0_gens = {swap};
        cat.add(g);
    }
    {
        GroupDesc g;
        g.name = "G0"; // connected part of G
        g.display = "SL(2,C) x SL(2,C)";
        g.dim = 6;
        g.rank = 2;
        g.positive_roots = {Weight(2, 0), Weight(0, -2)};
        g.classifying = GradedAction::trivial({4, 4});
        g.weyl_gens = {refl_x, refl_y};
        cat.add(g);
    }
    {
        GroupDesc g;
        g.name = "T"; // maximal torus (C*)^2
        g.display = "T";
        g.dim = 2;
        g.rank = 2;
        g.classifying = GradedAction::trivial({2, 2});
        g.central_torus_rank = 2;
        cat.add(g);
    }
    {
        // <T,iota>, double cover of T; iota acts by (c1,c2) -> (-c2,-c1).
        GroupDesc g;
        g.name = "T_iota";
        g.display = "<T, iota>";
        g.dim = 2;
        g.rank = 2;
        g.classifying.generator_degrees = {2, 2};
        g.classifying.elements = {id2, m_nswap};
        g.pi0_order = 2;
        g.pi0_gens = {nswap};
        g.central_torus_rank = 1;
        cat.add(g);
    }
    {
        // T x| Z2 with the plain coordinate swap (inside N(R_D)).
        GroupDesc g;
        g.name = "T_swap";
        g.display = "T : Z2";
        g.dim = 2;
        g.rank = 2;
        g.classifying.generator_degrees = {2, 2};
        g.classifying.elements = {id2, m_swap};
        g.pi0_order = 2;
        g.pi0_gens = {swap};
        g.central_torus_rank = 1;
        cat.add(g);
    }
    {
        GroupDesc g;
        g.name = "CxSL2";
        g.display = "C* x SL(2,C)";
        g.dim = 4;
        g.rank = 2;
        g.positive_roots = {Weight(0, -2)};
        g.classifying = GradedAction::trivial({2, 4});
        g.weyl_gens = {refl_y};
        g.central_torus_rank = 1;
        cat.add(g);
    }
    {
        GroupDesc g;
        g.name = "SL2";
        g.display = "SL(2,C)";
        g.dim = 3;
        g.rank = 1;
        g.positive_roots = {Weight(2, 0)};
        g.classifying = GradedAction::trivial({4});
        g.weyl_gens = {refl_x};
        cat.add(g);
    }
    {
        GroupDesc g;
        g.name = "C*";
        g.display = "C*";
        g.dim = 1;
        g.rank = 1;
        g.classifying = GradedAction::trivial({2});
        g.central_torus_rank = 1;
        cat.add(g);
    }
    {
        // C* x| Z2 with the component acting by inversion.
        GroupDesc g;
        g.name = "Cstar_inv";
        g.display = "C* : Z2";
        g.dim = 1;
        g.rank = 1;
        g.classifying.generator_degrees = {2};
        g.classifying.elements = {id1, m_neg1};
        g.pi0_order = 2;
        g.pi0_gens = {refl_x};
        cat.add(g);
    }
    {
        // N(R_C) = H x| Z2; rationally H^*(B-) = H^*(B PGL2)^(Z2) = Q[c4].
        GroupDesc g;
        g.name = "N_RC";
        g.display = "N(R_C) = H : Z2";
        g.dim = 3;
        g.rank = 1;
        g.positive_roots = {Weight(2, 0)};
        g.classifying = GradedAction::trivial({4});
        g.pi0_order = 2;
        g.weyl_gens = {refl_x};
        cat.add(g);
    }
    {
        // N(R_D) = S x| Z2, identity component T, pi0 = Z2 x Z2 acting on
        // (c1,c2) by -I and the swap.
        GroupDesc g;
        g.name = "N_RD";
        g.display = "N(R_D) = S : Z2";
        g.dim = 2;
        g.rank = 2;
        g.classifying.generator_degrees = {2, 2};
        g.classifying.elements = {id2, m_neg, m_swap,
                                  {{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}}};
        g.pi0_order = 4;
        g.pi0_gens = {neg, swap};
        cat.add(g);
    }
    {
        // N(R_A) = S, identity component T, pi0 = Z2 negating the Cartan.
        GroupDesc g;
        g.name = "N_RA";
        g.display = "N(R_A) = S";
        g.dim = 2;
        g.rank = 2;
        g.classifying.generator_degrees = {2, 2};
        g.classifying.elements = {id2, m_neg};
        g.pi0_order = 2;
        g.pi0_gens = {neg};
        cat.add(g);
    }
    {
        // (H cap S) x| Z2: stabiliser of the twisted cubic inside N(R_D);
        // the nontrivial part inverts the deg-2 class.
        GroupDesc g;
        g.name = "HS_Z2";
        g.display = "(H cap S) : Z2";
        g.dim = 1;
        g.rank = 1;
        g.classifying.generator_degrees = {2};
        g.classifying.elements = {id1, m_neg1};
        g.pi0_order = 2;
        g.pi0_gens = {refl_x};
        cat.add(g);
    }
    {
        // That1 x| Z2: double cover of T1 extended by the ruling swap, which
        // fixes the diagonal torus pointwise, so the deg-2 class survives.
        GroupDesc g;
        g.name = "That1_Z2";
        g.display = "That_1 : Z2";
        g.dim = 1;
        g.rank = 1;
        g.classifying = GradedAction::trivial({2});
        g.pi0_order = 2;
        cat.add(g);
    }
    // Slice subgroups R: the diagonal SL2 and the two one-parameter tori.
    {
        GroupDesc g = cat.get("SL2");
        g.name = "R_C";
        g.display = "R_C = SL(2,C), diagonal";
        cat.add(g);
    }
    {
        GroupDesc g = cat.get("C*");
        g.name = "R_D";
        g.display = "R_D = C*, diagonal one-parameter torus";
        cat.add(g);
    }
    {
        GroupDesc g = cat.get("C*");
        g.name = "R_A";
        g.display = "R_A = C*, (1,3) one-parameter torus";
        cat.add(g);
    }
    {
        GroupDesc g = cat.get("C*");
        g.name = "T1";
        g.display = "T_1 = C*, diagonal one-parameter torus";
        cat.add(g);
    }

    cat.levi_candidates = {"T",   "T_iota", "T_swap",    "CxSL2",
                           "C*",  "SL2",    "Cstar_inv"};
    return cat;
}

GroupDesc stabilizer_of(const GroupDesc& g, const Weight& beta,
                        const GroupCatalog& catalog, const Gram& gram) {
    if (beta.is_zero())
        throw std::domain_error("stabilizer_of: beta must be nonzero");
    std::vector<Weight> ortho;
    for (const auto& root : g.positive_roots)
        if (gram.inner(root, beta).is_zero()) ortho.push_back(root);

    std::vector<Mat2> fixing; // non-identity-component elements fixing beta
    for (const auto& [m, inner] : g.cartan_symmetry())
        if (!inner && m.apply(beta) == beta) fixing.push_back(m);

    GroupDesc stab;
    stab.rank = g.rank;
    if (ortho.empty()) {
        stab.dim = g.rank;
        stab.classifying = action_from_cartan(g.rank, fixing);
        stab.pi0_gens = fixing;
        stab.pi0_order = static_cast<int>(
            matrix_group_closure(fixing).size());
    } else if (ortho.size() == 1 && fixing.empty()) {
        stab.dim = g.rank + 2;
        stab.positive_roots = {ortho[0]};
        stab.weyl_gens = {reflection_matrix(ortho[0], gram)};
        std::vector<int> degs(g.rank - 1, 2);
        degs.push_back(4);
        stab.classifying = GradedAction::trivial(degs);
    } else {
        std::ostringstream os;
        os << "stabilizer_of: no configured pattern for beta=" << beta.str()
           << " in " << g.name << " (orthogonal roots:";
        for (const auto& r : ortho) os << " " << r.str();
        os << ", fixing components: " << fixing.size() << ")";
        throw std::runtime_error(os.str());
    }
    {
        std::vector<Mat2> all = stab.weyl_gens;
        all.insert(all.end(), stab.pi0_gens.begin(), stab.pi0_gens.end());
        stab.central_torus_rank = fixed_subspace_dim(all);
    }

    for (const auto& name : catalog.levi_candidates) {
        if (!catalog.has(name)) continue;
        if (same_structure(stab, catalog.get(name))) {
            stab.name = name;
            stab.display = catalog.get(name).display;
            return stab;
        }
    }
    std::ostringstream os;
    os << "stabilizer_of: stabiliser of beta=" << beta.str() << " in "
       << g.name << " matches no catalog entry (rank " << stab.rank << ", "
       << stab.positive_roots.size() << " roots, pi0 order " << stab.pi0_order
       << ")";
    throw std::runtime_error(os.str());
}

} // namespace kirwan
