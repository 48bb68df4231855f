#pragma once

#include "kirwan/grouprep.hpp"
#include "kirwan/qseries.hpp"
#include "kirwan/weightlat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kirwan {

// A linearised action: the group acts on P(span of weights) with the listed
// torus weights. The chamber, when given, selects stratum representatives;
// without one, representatives are dominant and lexicographically maximal.
struct StratificationProblem {
    WeightSystem ws;
    GroupDesc group;
    std::optional<ChamberDesc> chamber;
    // Per classifying element sign of the action on the hyperplane class;
    // empty means the component group fixes it.
    std::vector<int> h_signs;
};

struct StratumRecord {
    Weight beta;
    std::vector<WeightEntry> support; // weights on the wall <alpha,beta>=|beta|^2
    int n = 0;
    int d = 0;
    GroupDesc stab;
    QRationalFunction series; // equivariant series of the stratum
};

struct StrataResult {
    QRationalFunction total;
    std::vector<StratumRecord> records; // one per symmetry orbit of nonzero beta
    QRationalFunction semistable;
    std::vector<std::string> warnings;
};

// Invariant part of (classifying ring (x) H^*(P^n)) under the component
// group, as a closed form.
QRationalFunction total_series(const StratificationProblem& p);

// Full run: total, one record per orbit sorted by |beta|^2 descending, and
// the semistable series total - sum t^{2d} * stratum.
StrataResult stratify(const StratificationProblem& p,
                      const GroupCatalog& catalog);

std::vector<StratumRecord> strata_table(const StratificationProblem& p,
                                        const GroupCatalog& catalog);

QRationalFunction semistable_series(const StratificationProblem& p,
                                    const GroupCatalog& catalog);

// Series of the stratum indexed by beta: the sub-problem places the wall
// support, translated by -beta, under the stabiliser of beta.
QRationalFunction stratum_series(const StratificationProblem& p,
                                 const Weight& beta,
                                 const GroupCatalog& catalog);

} // namespace kirwan
