#pragma once

#include "kirwan/desing.hpp"
#include "kirwan/grouprep.hpp"
#include "kirwan/hkkn.hpp"
#include "kirwan/slicerep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kirwan {

// How a configured series is obtained: straight from a catalog classifying
// ring, or as the blow-up of a linear section along an orbit whose
// equivariant series is itself a catalog classifying ring.
struct SeriesSpec {
    enum class Kind { Classifying, BlowupOfSection } kind =
        Kind::Classifying;
    std::string group;          // classifying source
    WeightSystem section;       // BlowupOfSection: the linear section
    std::string section_group;  // group acting on the section
    std::string center_group;   // classifying of the centre inside it
    int rank = 2;               // normal rank of that centre
};

struct CenterConfig {
    std::string name;
    std::string r_group;
    std::string n_group;
    int z_dim = 0;
    SeriesSpec z_series;
    BiForm base_point{3};       // slice base point
    OnePsg psg;
    std::vector<BiForm> extras; // family directions beyond the orbit
    int w = 1;
    SeriesSpec extra_base;
    std::string r_invariant_group; // classifying of R invariant under pi0 N
    enum class Fiber { InvariantIp, Nested } fiber = Fiber::InvariantIp;
    NestedCenter nested;        // when fiber == Nested
};

struct PipelineConfig {
    WeightSystem ws;
    ChamberDesc chamber;
    std::string group = "G";
    // Signs of the component-group action on the hyperplane class, aligned
    // with the group's classifying elements; empty means trivial.
    std::vector<int> h_signs;
    std::vector<CenterConfig> centers; // blow-up order
    int truncation_order = 19;
};

// The shipped flagship configuration: bidegree-(3,3) curves on P^1 x P^1
// under (SL2 x SL2) x| Z2 with the triple-conic, D-curve and A-curve centres.
PipelineConfig flagship_config();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // expected-vs-got diff when failing
};

struct CenterReport {
    std::string name;
    WeightMultiset ambient_weights, tangent_weights, slice_weights;
    int rank = 0;
    QRationalFunction z_series, main, extra, a_term;
    QPolynomial base_poly;
    QPolynomial fiber_poly;
    int fiber_dim = 0;
    QPolynomial b_term;
    std::optional<NestedIpResult> nested;
    // quantity -> "computed" or "configured (group-theory input)"
    std::map<std::string, std::string> provenance;
};

struct OrdinaryRanges {
    // H^i of the quotient equals IH^i near the top; H^i of the stable-orbit
    // space equals IH^i near the bottom.
    std::map<int, long long> quotient_top;
    std::map<int, long long> stable_bottom;
};

struct PipelineReport {
    int truncation_order = 19;
    QRationalFunction total;
    std::vector<StratumRecord> strata;
    QRationalFunction semistable;
    std::vector<CenterReport> centers;
    QRationalFunction blowup_series;          // semistable + sum of A_R
    std::optional<QPolynomial> blowup_poly;   // Betti polynomial upstairs
    std::optional<QPolynomial> ip;            // blowup_poly - sum of B_R
    std::optional<QPolynomial> ip_alt;        // semistable + sum (A_R - B_R)
    std::optional<OrdinaryRanges> ordinary;
    std::vector<CheckResult> checks;          // structural consistency checks
    std::vector<std::string> warnings;
};

PipelineReport run_pipeline(const PipelineConfig& config,
                            const GroupCatalog& catalog);

OrdinaryRanges ordinary_ranges(const QPolynomial& ip);

// Frozen flagship expectations, one pass/fail per quantity; failures carry
// an expected-vs-got diff. All exact.
std::vector<CheckResult> golden_checks(const PipelineReport& report);

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace kirwan
