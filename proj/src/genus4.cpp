#include "kirwan/genus4.hpp"

#include <algorithm>
#include <sstream>

namespace kirwan {

namespace {

QPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    QPolynomial p;
    for (const auto& [d, c] : terms) p.set(d, Rat(c));
    return p;
}

WeightMultiset ms(std::initializer_list<std::pair<int, int>> entries) {
    WeightMultiset m;
    for (const auto& [w, mult] : entries) m[w] = mult;
    return m;
}

BiForm mono(int i, int j, long long c = 1) {
    BiForm f(3);
    f.set(i, j, Rat(c));
    return f;
}

WeightSystem antidiagonal_section() {
    WeightSystem ws;
    ws.weights = {{"a", Weight(3, -3), 1},
                  {"b", Weight(1, -1), 1},
                  {"c", Weight(-1, 1), 1},
                  {"d", Weight(-3, 3), 1}};
    return ws;
}

} // namespace

PipelineConfig flagship_config() {
    PipelineConfig cfg;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            cfg.ws.weights.push_back({"(" + std::to_string(i) + "," +
                                          std::to_string(j) + ")",
                                      Weight(3 - 2 * i, 3 - 2 * j), 1});
    cfg.chamber.halfspaces.push_back({Rat(0), Rat(-1)}); // -y >= 0
    cfg.chamber.halfspaces.push_back({Rat(1), Rat(1)});  // x + y >= 0
    cfg.group = "G";

    {
        CenterConfig c;
        c.name = "R_C";
        c.r_group = "R_C";
        c.n_group = "N_RC";
        c.z_dim = 0;
        c.z_series = {SeriesSpec::Kind::Classifying, "N_RC", {}, "", "", 2};
        // Triple conic (x0 y1 - x1 y0)^3.
        c.base_point = BiForm(3);
        c.base_point.set(3, 0, Rat(1));
        c.base_point.set(2, 1, Rat(-3));
        c.base_point.set(1, 2, Rat(3));
        c.base_point.set(0, 3, Rat(-1));
        c.psg = {1, 1};
        c.w = 1;
        c.extra_base = {SeriesSpec::Kind::Classifying, "That1_Z2", {}, "", "",
                        2};
        c.r_invariant_group = "SL2";
        c.fiber = CenterConfig::Fiber::Nested;
        c.nested.slice =
            ms({{6, 1}, {4, 2}, {2, 1}, {-2, 1}, {-4, 2}, {-6, 1}});
        c.nested.w = 2;
        c.nested.b_poly = poly(
            {{2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 3}, {12, 2}, {14, 1}});
        cfg.centers.push_back(std::move(c));
    }
    {
        CenterConfig c;
        c.name = "R_D";
        c.r_group = "R_D";
        c.n_group = "N_RD";
        c.z_dim = 3;
        c.z_series = {SeriesSpec::Kind::BlowupOfSection, "",
                      antidiagonal_section(), "N_RD", "HS_Z2", 2};
        // Generic D-curve x0^3 y1^3 + x1^3 y0^3 with the two family
        // directions of the A,B deformation.
        c.base_point = BiForm(3);
        c.base_point.set(3, 0, Rat(1));
        c.base_point.set(0, 3, Rat(1));
        c.psg = {1, 1};
        c.extras = {mono(2, 1), mono(1, 2)};
        c.w = 2;
        c.extra_base = {SeriesSpec::Kind::BlowupOfSection, "",
                        antidiagonal_section(), "T_swap", "C*", 2};
        c.r_invariant_group = "Cstar_inv";
        c.fiber = CenterConfig::Fiber::InvariantIp;
        cfg.centers.push_back(std::move(c));
    }
    {
        CenterConfig c;
        c.name = "R_A";
        c.r_group = "R_A";
        c.n_group = "N_RA";
        c.z_dim = 1;
        c.z_series = {SeriesSpec::Kind::Classifying, "Cstar_inv", {}, "", "",
                      2};
        // A-curve y0 y1 (x0^3 y1 + x1^3 y0).
        c.base_point = BiForm(3);
        c.base_point.set(3, 1, Rat(1));
        c.base_point.set(0, 2, Rat(1));
        c.psg = {1, 3};
        c.w = 2;
        c.extra_base = {SeriesSpec::Kind::Classifying, "C*", {}, "", "", 2};
        c.r_invariant_group = "Cstar_inv";
        c.fiber = CenterConfig::Fiber::InvariantIp;
        cfg.centers.push_back(std::move(c));
    }
    return cfg;
}

namespace {

QRationalFunction resolve_series(const SeriesSpec& spec,
                                 const GroupCatalog& catalog,
                                 std::string* provenance) {
    switch (spec.kind) {
        case SeriesSpec::Kind::Classifying:
            if (provenance) *provenance = "configured (group-theory input)";
            return classifying_series(catalog.get(spec.group));
        case SeriesSpec::Kind::BlowupOfSection: {
            if (provenance) *provenance = "computed";
            StratificationProblem p;
            p.ws = spec.section;
            p.group = catalog.get(spec.section_group);
            const QRationalFunction base = semistable_series(p, catalog);
            return blowup_cohomology(
                base, classifying_series(catalog.get(spec.center_group)),
                spec.rank);
        }
    }
    throw ConfigError("resolve_series: unknown kind");
}

std::string check_diff(const std::string& expected, const std::string& got) {
    return "expected " + expected + ", got " + got;
}

void add_check(std::vector<CheckResult>& checks, const std::string& name,
               bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, pass ? "" : detail});
}

std::string poly_str(const std::optional<QPolynomial>& p) {
    return p ? p->str() : "(not a polynomial)";
}

} // namespace

OrdinaryRanges ordinary_ranges(const QPolynomial& ip) {
    OrdinaryRanges out;
    const int top = ip.degree();
    for (int i = top - 6; i <= top; ++i)
        out.quotient_top[i] = ip.coeff(i).num();
    for (int i = 0; i <= 6; ++i) out.stable_bottom[i] = ip.coeff(i).num();
    return out;
}

PipelineReport run_pipeline(const PipelineConfig& config,
                            const GroupCatalog& catalog) {
    PipelineReport rep;
    rep.truncation_order = config.truncation_order;

    StratificationProblem problem;
    problem.ws = config.ws;
    problem.group = catalog.get(config.group);
    problem.chamber = config.chamber;
    problem.h_signs = config.h_signs;
    const StrataResult strata = stratify(problem, catalog);
    rep.total = strata.total;
    rep.strata = strata.records;
    rep.semistable = strata.semistable;
    rep.warnings = strata.warnings;

    const int dim_x = config.ws.ambient_dim();
    QRationalFunction a_sum = QRationalFunction::zero();

    for (const auto& cc : config.centers) {
        CenterReport cr;
        cr.name = cc.name;
        const GroupDesc& R = catalog.get(cc.r_group);
        const GroupDesc& N = catalog.get(cc.n_group);

        cr.ambient_weights = ambient_weights(cc.base_point.bidegree(), cc.psg);
        cr.tangent_weights = tangent_weights(cc.base_point, cc.psg, cc.extras);
        cr.slice_weights = slice_weights(cr.ambient_weights, cr.tangent_weights);
        cr.provenance["slice weights"] = "computed";

        cr.rank = normal_rank(dim_x, catalog.get(config.group).dim, cc.z_dim,
                              N.dim);
        if (multiset_size(cr.slice_weights) != cr.rank)
            throw ConfigError(cc.name +
                              ": slice weight count differs from the normal "
                              "rank");

        cr.z_series =
            resolve_series(cc.z_series, catalog, &cr.provenance["z series"]);

        BlowupCenter center;
        center.name = cc.name;
        center.R = R;
        center.N = N;
        center.z_dim = cc.z_dim;
        center.z_series = cr.z_series;
        center.rank = cr.rank;
        center.slice = cr.slice_weights;
        center.w_default = cc.w;
        cr.provenance["w count"] = "configured (group-theory input)";
        center.stab_base = resolve_series(cc.extra_base, catalog,
                                          &cr.provenance["extra base"]);

        cr.main = main_term(center.z_series, center.rank);
        cr.extra = extra_term(center, catalog);
        cr.a_term = cr.main - cr.extra;
        a_sum = a_sum + cr.a_term;

        rep.centers.push_back(std::move(cr));
    }

    rep.blowup_series = rep.semistable + a_sum;
    if (auto p = rep.blowup_series.as_polynomial()) rep.blowup_poly = *p;
    add_check(rep.checks, "desingularized series is a polynomial",
              rep.blowup_poly.has_value(),
              check_diff("a polynomial", rep.blowup_series.str()));

    // Blow-down stage.
    QRationalFunction ab_sum = a_sum; // running sum of A_R - B_R
    QPolynomial b_total;
    bool blowdown_ok = true;
    for (std::size_t i = 0; i < config.centers.size(); ++i) {
        const CenterConfig& cc = config.centers[i];
        CenterReport& cr = rep.centers[i];
        try {
            const GroupDesc& R = catalog.get(cc.r_group);
            const QRationalFunction r_inv =
                classifying_series(catalog.get(cc.r_invariant_group));
            cr.base_poly =
                (cr.z_series / r_inv).to_polynomial("the centre quotient");
            cr.provenance["blow-down base"] = "computed";

            cr.fiber_dim = cr.rank - 1 - R.dim;
            if (cc.fiber == CenterConfig::Fiber::Nested) {
                cr.nested = nested_ip(cr.slice_weights, R, cc.nested, catalog);
                cr.fiber_poly = cr.nested->ip;
                cr.provenance["fiber series"] =
                    "computed (internal blow-down term configured)";
            } else {
                cr.fiber_poly = invariant_ip_series(cr.slice_weights, catalog);
                cr.provenance["fiber series"] = "computed";
            }
            cr.b_term = blowdown_term(
                {cr.base_poly, cr.fiber_poly, cr.fiber_dim});
            b_total = b_total + cr.b_term;
            ab_sum = ab_sum - QRationalFunction(cr.b_term);
        } catch (const std::exception& e) {
            blowdown_ok = false;
            rep.warnings.push_back(cc.name + ": blow-down failed: " +
                                   e.what());
        }
    }
    add_check(rep.checks, "blow-down terms computable", blowdown_ok,
              "see warnings");

    if (rep.blowup_poly && blowdown_ok) {
        rep.ip = *rep.blowup_poly - b_total;
        const QRationalFunction alt = rep.semistable + ab_sum;
        if (auto p = alt.as_polynomial()) rep.ip_alt = *p;
        add_check(rep.checks, "both evaluation orders agree",
                  rep.ip_alt && *rep.ip == *rep.ip_alt,
                  check_diff(poly_str(rep.ip), poly_str(rep.ip_alt)));
    }

    auto odd_vanishing = [](const QPolynomial& p) {
        for (const auto& [d, c] : p.coeffs()) {
            (void)c;
            if (d % 2 != 0) return false;
        }
        return true;
    };
    if (rep.blowup_poly) {
        add_check(rep.checks, "desingularization Betti numbers palindromic",
                  palindrome_check(*rep.blowup_poly, rep.blowup_poly->degree()),
                  rep.blowup_poly->str());
        add_check(rep.checks, "desingularization odd Betti numbers vanish",
                  odd_vanishing(*rep.blowup_poly), rep.blowup_poly->str());
    }
    if (rep.ip) {
        add_check(rep.checks, "intersection Betti numbers palindromic",
                  palindrome_check(*rep.ip, rep.ip->degree()),
                  rep.ip->str());
        add_check(rep.checks, "odd intersection Betti numbers vanish",
                  odd_vanishing(*rep.ip), rep.ip->str());
        rep.ordinary = ordinary_ranges(*rep.ip);
    }
    return rep;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

struct GoldenRow {
    Weight beta;
    int n, two_d;
    std::string stab;
    QRationalFunction series;
};

std::vector<GoldenRow> golden_table() {
    auto rf1 = [](std::map<int, int> f) {
        return QRationalFunction(QPolynomial::one(), std::move(f));
    };
    return {
        {Weight(3, -3), 15, 26, "T_iota", rf1({{2, 1}, {4, 1}})},
        {Weight(2, -2), 13, 22, "T_iota", rf1({{2, 1}})},
        {Weight(1, -1), 10, 16, "T_iota",
         QRationalFunction(poly({{0, 1}, {2, 1}, {6, -1}}),
                           {{2, 1}, {4, 1}})},
        {Weight(2, -1), 12, 20, "T", rf1({{2, 1}})},
        {Weight(Rat(6, 5), Rat(-3, 5)), 10, 16, "T", rf1({{2, 1}})},
        {Weight(Rat(2, 5), Rat(-1, 5)), 8, 12, "T", rf1({{2, 1}})},
        {Weight(3, -1), 14, 24, "T", rf1({{2, 2}})},
        {Weight(Rat(9, 5), Rat(-3, 5)), 11, 18, "T", rf1({{2, 1}})},
        {Weight(Rat(9, 13), Rat(-6, 13)), 9, 14, "T", rf1({{2, 1}})},
        {Weight(3, 0), 12, 22, "CxSL2", rf1({{2, 1}})},
        {Weight(1, 0), 8, 14, "CxSL2", rf1({{2, 1}})},
    };
}

} // namespace

std::vector<CheckResult> golden_checks(const PipelineReport& rep) {
    std::vector<CheckResult> out;
    auto rf = [](QPolynomial num, std::map<int, int> f) {
        return QRationalFunction(std::move(num), std::move(f));
    };

    const QRationalFunction expected_total =
        rf(QPolynomial::even_range(0, 15), {{4, 1}, {8, 1}});
    add_check(out, "equivariant series of the parameter space",
              rep.total == expected_total,
              check_diff(expected_total.str(), rep.total.str()));

    {
        const QSeries got = rep.total.expand(10);
        const QSeries expected =
            expected_total.expand(10);
        bool pass = got == expected;
        const long long coeffs[] = {1, 0, 1, 0, 2, 0, 2, 0, 4, 0};
        for (int i = 0; i < 10; ++i)
            pass = pass && got.coeff(i) == Rat(coeffs[i]);
        add_check(out, "low-order truncation of the total series", pass,
                  got.str());
    }

    {
        const auto table = golden_table();
        bool pass = rep.strata.size() == table.size();
        std::ostringstream os;
        for (const auto& row : table) {
            auto it = std::find_if(rep.strata.begin(), rep.strata.end(),
                                   [&](const StratumRecord& r) {
                                       return r.beta == row.beta;
                                   });
            if (it == rep.strata.end()) {
                pass = false;
                os << " missing " << row.beta.str() << ";";
                continue;
            }
            if (it->n != row.n || 2 * it->d != row.two_d ||
                it->stab.name != row.stab || !(it->series == row.series)) {
                pass = false;
                os << " mismatch at " << row.beta.str() << " (n=" << it->n
                   << ", 2d=" << 2 * it->d << ", stab=" << it->stab.name
                   << ", series=" << it->series.str() << ");";
            }
        }
        add_check(out, "unstable strata table (11 orbits)", pass,
                  "diff:" + os.str());
    }

    const QRationalFunction expected_ss =
        rf(poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 2}, {12, 1},
                 {14, -1}, {16, -1}, {18, -1}, {20, -1}, {22, -1}}),
           {{4, 1}});
    add_check(out, "semistable-locus series",
              rep.semistable == expected_ss,
              check_diff(expected_ss.str(), rep.semistable.str()));

    struct CenterGold {
        std::string name;
        WeightMultiset slice;
        int rank;
        QRationalFunction z, main, extra;
        QPolynomial fiber, b;
    };
    const std::vector<CenterGold> gold = {
        {"R_C",
         ms({{6, 1}, {4, 2}, {2, 2}, {0, 2}, {-2, 2}, {-4, 2}, {-6, 1}}),
         12,
         rf(QPolynomial::one(), {{4, 1}}),
         rf(QPolynomial::even_range(1, 11), {{4, 1}}),
         rf(QPolynomial::monomial(12) *
                poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}),
            {{2, 1}}),
         poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 2}, {12, 2},
               {14, 1}, {16, 1}}),
         poly({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 1},
               {16, 1}})},
        {"R_D",
         ms({{6, 1}, {4, 2}, {2, 1}, {-2, 1}, {-4, 2}, {-6, 1}}),
         8,
         rf(poly({{0, 1}, {2, 1}}), {{2, 1}}),
         rf(poly({{0, 1}, {2, 1}}), {{2, 1}}) * QPolynomial::even_range(1, 7),
         rf(poly({{0, 1}, {2, 2}, {4, 1}}), {{2, 1}}) *
             poly({{8, 1}, {10, 1}, {12, 1}, {14, 1}}),
         poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 1}, {12, 1}}),
         poly({{2, 1}, {4, 3}, {6, 5}, {8, 7}, {10, 7}, {12, 5}, {14, 3},
               {16, 1}})},
        {"R_A",
         ms({{12, 1}, {10, 1}, {8, 1}, {6, 1}, {4, 1}, {-4, 1}, {-6, 1},
             {-8, 1}, {-10, 1}, {-12, 1}}),
         10,
         rf(QPolynomial::one(), {{4, 1}}),
         rf(QPolynomial::even_range(1, 9), {{4, 1}}),
         rf(poly({{10, 1}, {12, 1}, {14, 1}, {16, 1}, {18, 1}}), {{2, 1}}),
         poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 3}, {10, 2}, {12, 2},
               {14, 1}, {16, 1}}),
         poly({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 1},
               {16, 1}})},
    };
    for (const auto& g : gold) {
        auto it = std::find_if(rep.centers.begin(), rep.centers.end(),
                               [&](const CenterReport& c) {
                                   return c.name == g.name;
                               });
        if (it == rep.centers.end()) {
            add_check(out, "centre " + g.name, false, "missing");
            continue;
        }
        add_check(out, g.name + ": slice representation weights",
                  it->slice_weights == g.slice && it->rank == g.rank,
                  "rank " + std::to_string(it->rank));
        add_check(out, g.name + ": centre orbit series",
                  it->z_series == g.z,
                  check_diff(g.z.str(), it->z_series.str()));
        add_check(out, g.name + ": main error term", it->main == g.main,
                  check_diff(g.main.str(), it->main.str()));
        add_check(out, g.name + ": extra error term", it->extra == g.extra,
                  check_diff(g.extra.str(), it->extra.str()));
        add_check(out, g.name + ": slice quotient intersection series",
                  it->fiber_poly == g.fiber,
                  check_diff(g.fiber.str(), it->fiber_poly.str()));
        add_check(out, g.name + ": blow-down term", it->b_term == g.b,
                  check_diff(g.b.str(), it->b_term.str()));
    }

    const QPolynomial expected_blowup =
        poly({{0, 1}, {2, 4}, {4, 7}, {6, 11}, {8, 14}, {10, 14}, {12, 11},
              {14, 7}, {16, 4}, {18, 1}});
    add_check(out, "Betti numbers of the desingularization",
              rep.blowup_poly && *rep.blowup_poly == expected_blowup,
              check_diff(expected_blowup.str(), poly_str(rep.blowup_poly)));

    const QPolynomial expected_ip =
        poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 3}, {10, 3}, {12, 2},
              {14, 2}, {16, 1}, {18, 1}});
    add_check(out, "intersection Betti numbers of the quotient",
              rep.ip && *rep.ip == expected_ip,
              check_diff(expected_ip.str(), poly_str(rep.ip)));

    {
        bool pass = rep.ordinary.has_value();
        if (pass) {
            const std::map<int, long long> top = {{12, 2}, {13, 0}, {14, 2},
                                                  {15, 0}, {16, 1}, {17, 0},
                                                  {18, 1}};
            const std::map<int, long long> bottom = {
                {0, 1}, {1, 0}, {2, 1}, {3, 0}, {4, 2}, {5, 0}, {6, 2}};
            pass = rep.ordinary->quotient_top == top &&
                   rep.ordinary->stable_bottom == bottom;
        }
        add_check(out, "ordinary Betti ranges", pass, "");
    }

    add_check(out, "structural consistency checks", all_pass(rep.checks),
              "see report checks");
    return out;
}

} // namespace kirwan
