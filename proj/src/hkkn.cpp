#include "kirwan/hkkn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kirwan {

namespace {

constexpr int kMaxRecursionDepth = 8;

QPolynomial truncated_h_algebra(int n, int sign) {
    // 1 + s t^2 + s^2 t^4 + ... + s^n t^{2n}
    QPolynomial p;
    Rat c(1);
    for (int j = 0; j <= n; ++j) {
        p.set(2 * j, c);
        c = c * Rat(sign);
    }
    return p;
}

bool multiset_invariant(const WeightSystem& ws, const Mat2& m) {
    std::map<Weight, int> a, b;
    for (const auto& e : ws.weights) {
        a[e.w] += e.multiplicity;
        b[m.apply(e.w)] += e.multiplicity;
    }
    return a == b;
}

bool lex_less(const Weight& a, const Weight& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct Orbit {
    std::vector<Weight> members;
    Weight rep;
};

bool is_dominant(const Weight& w, const GroupDesc& g, const Gram& gram) {
    for (const auto& root : g.positive_roots)
        if (gram.inner(root, w).sign() < 0) return false;
    return true;
}

std::vector<Orbit> nonzero_orbits(const StratificationProblem& p,
                                  std::vector<std::string>* warnings) {
    const auto symmetry = p.group.cartan_symmetry();
    if (warnings)
        for (const auto& [m, inner] : symmetry)
            if (!multiset_invariant(p.ws, m)) {
                warnings->push_back(
                    "weight system is not invariant under the group's Cartan "
                    "symmetry; the stratification has no equivariant meaning");
                break;
            }

    const std::set<Weight> index = index_set(p.ws, ChamberDesc::everything());
    std::set<Weight> remaining(index.begin(), index.end());
    remaining.erase(Weight(0, 0));

    std::vector<Orbit> orbits;
    while (!remaining.empty()) {
        const Weight seed = *remaining.begin();
        std::set<Weight> members;
        for (const auto& [m, inner] : symmetry) members.insert(m.apply(seed));
        for (const auto& w : members) remaining.erase(w);

        Orbit o;
        o.members.assign(members.begin(), members.end());
        // Representatives must themselves be index points; for an invariant
        // weight system the whole orbit qualifies, otherwise (already warned
        // about) only part of it does.
        std::optional<Weight> rep, fallback;
        for (const auto& w : o.members) {
            if (!index.count(w)) continue;
            if (!fallback || lex_less(*fallback, w)) fallback = w;
            const bool ok = p.chamber ? p.chamber->contains(w)
                                      : is_dominant(w, p.group, p.ws.gram);
            if (!ok) continue;
            if (!rep || lex_less(*rep, w)) rep = w;
        }
        if (!rep) rep = fallback;
        if (!rep)
            throw std::runtime_error(
                "stratify: no representative in the orbit of " + seed.str());
        o.rep = *rep;
        orbits.push_back(std::move(o));
    }
    return orbits;
}

StrataResult stratify_impl(const StratificationProblem& p,
                           const GroupCatalog& catalog, int depth) {
    if (depth > kMaxRecursionDepth)
        throw std::logic_error("stratify: recursion depth exceeded");

    StrataResult out;
    out.total = total_series(p);
    out.semistable = out.total;

    std::vector<Orbit> orbits = nonzero_orbits(p, &out.warnings);
    for (const auto& orbit : orbits) {
        StratumRecord rec;
        rec.beta = orbit.rep;
        rec.support = wall_support(p.ws, rec.beta);
        rec.n = n_beta(p.ws, rec.beta);
        rec.d = codim(p.ws, rec.beta, p.group.positive_roots);
        rec.stab = stabilizer_of(p.group, rec.beta, catalog, p.ws.gram);

        StratificationProblem sub;
        sub.ws.gram = p.ws.gram;
        for (const auto& e : rec.support)
            sub.ws.weights.push_back({e.label, e.w - rec.beta, e.multiplicity});
        sub.group = rec.stab;
        const StrataResult sub_result =
            stratify_impl(sub, catalog, depth + 1);
        rec.series = sub_result.semistable;
        // An empty semistable sub-locus just contributes zero; only genuine
        // inconsistencies of the sub-problem are worth surfacing.
        for (const auto& w : sub_result.warnings)
            if (w.find("not invariant") != std::string::npos ||
                w.find("negative coefficient") != std::string::npos)
                out.warnings.push_back("sub-problem at beta=" +
                                       rec.beta.str() + ": " + w);

        const int check_order = std::max(19, 2 * p.ws.ambient_dim() + 2);
        if (!rec.series.expand(check_order).nonnegative())
            out.warnings.push_back(
                "stratum series at beta=" + rec.beta.str() +
                " has a negative coefficient (inconsistent configuration)");

        out.semistable =
            out.semistable -
            rec.series * QPolynomial::monomial(2 * rec.d);
        out.records.push_back(std::move(rec));
    }

    std::sort(out.records.begin(), out.records.end(),
              [&](const StratumRecord& a, const StratumRecord& b) {
                  const Rat na = p.ws.gram.norm2(a.beta);
                  const Rat nb = p.ws.gram.norm2(b.beta);
                  if (na != nb) return nb < na;
                  return lex_less(b.beta, a.beta);
              });

    if (out.semistable.is_zero())
        out.warnings.push_back("semistable locus is empty (zero series)");
    return out;
}

} // namespace

QRationalFunction total_series(const StratificationProblem& p) {
    const int n = p.ws.ambient_dim();
    if (n < 0)
        throw std::invalid_argument("total_series: empty weight system");
    const std::size_t ne = p.group.classifying.size();
    std::vector<int> signs = p.h_signs;
    if (signs.empty()) signs.assign(ne, 1);
    if (signs.size() != ne)
        throw std::invalid_argument(
            "total_series: h_signs size must match the classifying action");
    std::vector<QPolynomial> factors;
    factors.reserve(ne);
    for (std::size_t g = 0; g < ne; ++g) {
        if (signs[g] != 1 && signs[g] != -1)
            throw std::invalid_argument("total_series: h_signs entries are +-1");
        factors.push_back(truncated_h_algebra(n, signs[g]));
    }
    return molien(p.group.classifying, factors);
}

StrataResult stratify(const StratificationProblem& p,
                      const GroupCatalog& catalog) {
    return stratify_impl(p, catalog, 0);
}

std::vector<StratumRecord> strata_table(const StratificationProblem& p,
                                        const GroupCatalog& catalog) {
    return stratify(p, catalog).records;
}

QRationalFunction semistable_series(const StratificationProblem& p,
                                    const GroupCatalog& catalog) {
    return stratify(p, catalog).semistable;
}

QRationalFunction stratum_series(const StratificationProblem& p,
                                 const Weight& beta,
                                 const GroupCatalog& catalog) {
    if (beta.is_zero())
        throw std::domain_error("stratum_series: beta must be nonzero");
    StratificationProblem sub;
    sub.ws.gram = p.ws.gram;
    for (const auto& e : wall_support(p.ws, beta))
        sub.ws.weights.push_back({e.label, e.w - beta, e.multiplicity});
    if (sub.ws.weights.empty())
        throw std::invalid_argument("stratum_series: beta has empty support");
    sub.group = stabilizer_of(p.group, beta, catalog, p.ws.gram);
    return semistable_series(sub, catalog);
}

} // namespace kirwan
