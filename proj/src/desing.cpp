#include "kirwan/desing.hpp"

#include <sstream>

namespace kirwan {

int normal_rank(int dim_x, int dim_g, int dim_z, int dim_n) {
    const int rank = dim_x - (dim_g + dim_z - dim_n);
    if (rank <= 0) {
        std::ostringstream os;
        os << "normal_rank: nonpositive rank " << rank << " from dim X="
           << dim_x << ", dim G=" << dim_g << ", dim Z=" << dim_z
           << ", dim N=" << dim_n;
        throw ConfigError(os.str());
    }
    return rank;
}

QRationalFunction main_term(const QRationalFunction& z_series, int rank) {
    if (rank < 2)
        throw ConfigError("main_term: normal rank must be at least 2");
    return z_series * QPolynomial::even_range(1, rank - 1);
}

QRationalFunction blowup_cohomology(const QRationalFunction& base,
                                    const QRationalFunction& center,
                                    int rank) {
    if (rank < 2)
        throw ConfigError("blowup_cohomology: normal rank must be at least 2");
    return base + center * QPolynomial::even_range(1, rank - 1);
}

WeightSystem line_system_from_multiset(const WeightMultiset& weights) {
    WeightSystem ws;
    for (const auto& [w, mult] : weights)
        ws.weights.push_back({std::to_string(w), Weight(w, 0), mult});
    return ws;
}

namespace {

// Dominant cone of the rank-1 slice group: the positive-root side for SL2,
// everything for a torus.
ChamberDesc slice_chamber(const GroupDesc& r) {
    ChamberDesc c;
    for (const auto& root : r.positive_roots)
        c.halfspaces.push_back({root.x, root.y});
    return c;
}

} // namespace

QRationalFunction extra_term(const BlowupCenter& center,
                             const GroupCatalog& catalog) {
    (void)catalog;
    const WeightSystem ws = line_system_from_multiset(center.slice);
    if (multiset_size(center.slice) != center.rank)
        throw ConfigError("extra_term(" + center.name +
                          "): slice size differs from the normal rank");
    const std::set<Weight> index = index_set(ws, slice_chamber(center.R));
    QRationalFunction sum = QRationalFunction::zero();
    for (const Weight& beta : index) {
        if (beta.is_zero()) continue;
        if (!beta.x.is_integer() || !beta.y.is_zero())
            throw ConfigError("extra_term(" + center.name +
                              "): unexpected index point " + beta.str());
        const int value = static_cast<int>(beta.x.num());
        const int w = center.w_of(value);
        // w counts points of B(rho) inside one ambient Weyl orbit {+-beta'}.
        if (w <= 0 || 2 % w != 0)
            throw ConfigError("extra_term(" + center.name + "): w(" +
                              std::to_string(value) +
                              ") does not divide the Weyl orbit size");
        const int d = codim(ws, beta, center.R.positive_roots);
        if (d < 1)
            throw ConfigError("extra_term(" + center.name +
                              "): stratum of codimension < 1 at beta'=" +
                              std::to_string(value));
        QRationalFunction stratum;
        auto it = center.stab_series.find(value);
        if (it != center.stab_series.end()) {
            stratum = it->second;
        } else {
            int mult = 0;
            for (const auto& e : wall_support(ws, beta)) mult += e.multiplicity;
            stratum = center.stab_base * QPolynomial::even_range(0, mult - 1);
        }
        sum = sum + stratum * QPolynomial::monomial(2 * d) * Rat(1, w);
    }
    return sum;
}

QRationalFunction error_term(const BlowupCenter& center,
                             const GroupCatalog& catalog) {
    return main_term(center.z_series, center.rank) -
           extra_term(center, catalog);
}

QPolynomial invariant_ip_series(const WeightMultiset& slice,
                                const GroupCatalog& catalog, bool invariant) {
    if (slice.count(0))
        throw ConfigError(
            "invariant_ip_series: zero slice weight means strictly semistable "
            "points exist; route through the nested desingularization");
    StratificationProblem p;
    p.ws = line_system_from_multiset(slice);
    p.group = catalog.get(invariant ? "Cstar_inv" : "C*");
    const QRationalFunction s = semistable_series(p, catalog);
    QPolynomial poly = s.to_polynomial("the slice quotient series");
    return poly;
}

QPolynomial blowdown_term(const BlowdownInput& input) {
    const QPolynomial& base = input.base_series;
    const QPolynomial& fiber = input.fiber_ih_invariant;
    for (const QPolynomial* p : {&base, &fiber})
        for (const auto& [d, c] : p->coeffs())
            if (d % 2 != 0 || c.sign() < 0)
                throw ConfigError(
                    "blowdown_term: base and fiber series must have "
                    "nonnegative coefficients in even degrees");
    auto fiber_hat = [&](int q) {
        const int q_hat = q <= input.fiber_dim ? q - 2 : q;
        return q_hat < 0 ? Rat(0) : fiber.coeff(q_hat);
    };
    const int top = base.degree() + fiber.degree() + 2;
    QPolynomial out;
    for (int i = 0; i <= top; ++i) {
        Rat c(0);
        for (const auto& [p, bp] : base.coeffs()) {
            const int q = i - p;
            if (q >= 0) c += bp * fiber_hat(q);
        }
        out.set(i, c);
    }
    return out;
}

NestedIpResult nested_ip(const WeightMultiset& outer_slice,
                         const GroupDesc& R, const NestedCenter& internal,
                         const GroupCatalog& catalog) {
    NestedIpResult out;

    StratificationProblem outer;
    outer.ws = line_system_from_multiset(outer_slice);
    outer.group = R;
    out.semistable = semistable_series(outer, catalog);

    // The internal centre is the fixed locus of the one-parameter torus:
    // the zero-weight coordinates of the outer slice.
    auto zero_it = outer_slice.find(0);
    if (zero_it == outer_slice.end() || zero_it->second < 2)
        throw ConfigError(
            "nested_ip: the outer slice has no positive-dimensional "
            "zero-weight locus to blow up");
    const int z_mult = zero_it->second;
    StratificationProblem fixed;
    fixed.ws.weights.push_back({"0", Weight(0, 0), z_mult});

    // P^{N_R(T1)}(Z^ss): the Weyl flip inverts the torus.
    fixed.group = catalog.get("Cstar_inv");
    const QRationalFunction z_series = semistable_series(fixed, catalog);
    // P^{T1}(Z^ss): base factor of the internal extra term.
    fixed.group = catalog.get("C*");
    const QRationalFunction stab_base = semistable_series(fixed, catalog);

    const int dim_p = multiset_size(outer_slice) - 1;
    const int rank =
        normal_rank(dim_p, R.dim, z_mult - 1, /*dim N_R(T1)=*/1);

    BlowupCenter t1;
    t1.name = "internal torus";
    t1.R = catalog.get("T1");
    t1.z_dim = z_mult - 1;
    t1.z_series = z_series;
    t1.rank = rank;
    t1.slice = internal.slice;
    t1.w_default = internal.w;
    t1.stab_base = stab_base;
    out.a_internal = error_term(t1, catalog);

    const QRationalFunction blowup = out.semistable + out.a_internal;
    out.blowup_poly =
        blowup.to_polynomial("the desingularized slice quotient");
    const QRationalFunction ip =
        QRationalFunction(out.blowup_poly) - QRationalFunction(internal.b_poly);
    out.ip = ip.to_polynomial("the slice intersection series");
    return out;
}

} // namespace kirwan
