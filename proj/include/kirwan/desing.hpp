#pragma once

#include "kirwan/grouprep.hpp"
#include "kirwan/hkkn.hpp"
#include "kirwan/qseries.hpp"
#include "kirwan/slicerep.hpp"

#include <map>
#include <string>

namespace kirwan {

// Configuration error in blow-up data.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// rk N^R = dim X - (dim G + dim Z - dim N); the orbit of the fixed locus is
// G x_{N(R)} Z_R^ss.
int normal_rank(int dim_x, int dim_g, int dim_z, int dim_n);

// z_series * (t^2 + ... + t^{2(rank-1)})
QRationalFunction main_term(const QRationalFunction& z_series, int rank);

// base + center * (t^2 + ... + t^{2(rank-1)})
QRationalFunction blowup_cohomology(const QRationalFunction& base,
                                    const QRationalFunction& center, int rank);

// One blow-up centre R with its slice representation and the data feeding
// the extra term: w(beta',R,G) counts and the factorized stratum series
// P^{N cap Stab beta'}(Z_{beta',R}^ss) = stab_base * P(Z_{beta',rho}).
struct BlowupCenter {
    std::string name;
    GroupDesc R;                 // rank-1 slice group (a torus or SL2)
    GroupDesc N;                 // normaliser, for dimension counts
    int z_dim = 0;               // dim Z_R^ss
    QRationalFunction z_series;  // P^N of (the strict transform of) Z_R^ss
    int rank = 0;                // rk of the normal bundle
    WeightMultiset slice;        // slice representation weights
    int w_default = 1;
    std::map<int, int> w_count;  // per-beta' override of w(beta',R,G)
    QRationalFunction stab_base; // base factor of the degenerate fibration
    std::map<int, QRationalFunction> stab_series; // per-beta' override

    int w_of(int beta) const {
        auto it = w_count.find(beta);
        return it == w_count.end() ? w_default : it->second;
    }
};

WeightSystem line_system_from_multiset(const WeightMultiset& weights);

// Sum over nonzero beta' in B(rho) of
//   (1/w) t^{2 d(PN,beta')} P^{N cap Stab beta'}(Z_{beta',R}^ss).
QRationalFunction extra_term(const BlowupCenter& center,
                             const GroupCatalog& catalog);

// A_R(t) = main term - extra term.
QRationalFunction error_term(const BlowupCenter& center,
                             const GroupCatalog& catalog);

// pi0-invariant intersection series of the slice quotient P(N) // R for a
// torus R with no strictly semistable points (no zero slice weight); the
// result is a polynomial. `invariant` selects the component-group-invariant
// part (inversion on the torus) versus the plain series.
QPolynomial invariant_ip_series(const WeightMultiset& slice,
                                const GroupCatalog& catalog,
                                bool invariant = true);

// Decomposition-theorem term: coefficient of t^i is
//   sum_{p+q=i} base[p] * fiber[q_hat],
// q_hat = q-2 for q <= fiber_dim and q_hat = q above it.
struct BlowdownInput {
    QPolynomial base_series;        // P of Z_R-hat // N, a polynomial
    QPolynomial fiber_ih_invariant; // invariant IP of P(N_x) // R
    int fiber_dim = 0;              // dim P(N_x) // R
};

QPolynomial blowdown_term(const BlowdownInput& input);

// Nested desingularization of the triple-conic slice quotient P^11 // SL2:
// blow up the stratum of the internal one-parameter torus first, then take
// the decomposition-theorem correction back off.
struct NestedCenter {
    WeightMultiset slice; // slice of the internal torus orbit
    int w = 2;
    QPolynomial b_poly;   // configured blow-down term of the internal centre
};

struct NestedIpResult {
    QRationalFunction semistable;   // P^R((P^11)^ss)
    QRationalFunction a_internal;   // error term of the internal blow-up
    QPolynomial blowup_poly;        // P of the desingularized quotient
    QPolynomial ip;                 // final intersection series
};

NestedIpResult nested_ip(const WeightMultiset& outer_slice,
                         const GroupDesc& R, const NestedCenter& internal,
                         const GroupCatalog& catalog);

} // namespace kirwan
