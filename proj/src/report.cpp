#include "kirwan/report.hpp"

#include <sstream>

namespace kirwan {

namespace {

using nlohmann::json;

json poly_json(const QPolynomial& p) {
    json j = json::object();
    for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = c.str();
    return j;
}

json series_json(const QRationalFunction& r, int truncate) {
    json j;
    j["numerator"] = poly_json(r.numerator());
    json factors = json::object();
    for (const auto& [k, e] : r.denominator_factors())
        factors[std::to_string(k)] = e;
    j["denominator_factors"] = factors;
    if (r.denominator_extra() != QPolynomial::one())
        j["denominator_extra"] = poly_json(r.denominator_extra());
    j["display"] = r.str();
    j["truncated"] = r.expand(truncate).str();
    return j;
}

std::string support_str(const std::vector<WeightEntry>& entries) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries) {
        if (!first) os << ", ";
        os << e.w.str();
        if (e.multiplicity > 1) os << "x" << e.multiplicity;
        first = false;
    }
    return os.str();
}

json strata_records_json(const std::vector<StratumRecord>& records,
                         int truncate) {
    json arr = json::array();
    for (const auto& r : records) {
        json row;
        row["beta"] = r.beta.str();
        row["support"] = support_str(r.support);
        row["n"] = r.n;
        row["two_d"] = 2 * r.d;
        row["stabilizer"] = r.stab.name;
        row["stabilizer_display"] =
            r.stab.display.empty() ? r.stab.name : r.stab.display;
        row["series"] = series_json(r.series, truncate);
        arr.push_back(std::move(row));
    }
    return arr;
}

void strata_markdown_rows(std::ostringstream& os,
                          const std::vector<StratumRecord>& records) {
    os << "| support | n(beta) | Stab | 2d(beta) | series |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : records)
        os << "| " << support_str(r.support) << " | " << r.n << " | "
           << (r.stab.display.empty() ? r.stab.name : r.stab.display) << " | "
           << 2 * r.d << " | " << r.series.str() << " |\n";
}

json multiset_json(const WeightMultiset& m) {
    json j = json::object();
    for (const auto& [w, mult] : m) j[std::to_string(w)] = mult;
    return j;
}

std::string multiset_str(const WeightMultiset& m) {
    std::ostringstream os;
    bool first = true;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!first) os << ", ";
        os << it->first;
        if (it->second > 1) os << " (x" << it->second << ")";
        first = false;
    }
    return os.str();
}

} // namespace

json report_to_json(const PipelineReport& rep) {
    const int n = rep.truncation_order;
    json j;
    j["truncation_order"] = n;
    j["total_series"] = series_json(rep.total, n);
    j["strata"] = strata_records_json(rep.strata, n);
    j["semistable_series"] = series_json(rep.semistable, n);

    j["centers"] = json::array();
    for (const auto& c : rep.centers) {
        json cc;
        cc["name"] = c.name;
        cc["ambient_weights"] = multiset_json(c.ambient_weights);
        cc["tangent_weights"] = multiset_json(c.tangent_weights);
        cc["slice_weights"] = multiset_json(c.slice_weights);
        cc["normal_rank"] = c.rank;
        cc["z_series"] = series_json(c.z_series, n);
        cc["main_term"] = series_json(c.main, n);
        cc["extra_term"] = series_json(c.extra, n);
        cc["error_term"] = series_json(c.a_term, n);
        cc["blowdown_base"] = poly_json(c.base_poly);
        cc["fiber_invariant_ip"] = poly_json(c.fiber_poly);
        cc["fiber_dim"] = c.fiber_dim;
        cc["blowdown_term"] = poly_json(c.b_term);
        if (c.nested) {
            json nn;
            nn["semistable"] = series_json(c.nested->semistable, n);
            nn["error_term"] = series_json(c.nested->a_internal, n);
            nn["blowup_poly"] = poly_json(c.nested->blowup_poly);
            nn["ip"] = poly_json(c.nested->ip);
            cc["nested"] = std::move(nn);
        }
        json prov = json::object();
        for (const auto& [k, v] : c.provenance) prov[k] = v;
        cc["provenance"] = std::move(prov);
        j["centers"].push_back(std::move(cc));
    }

    j["blowup_series"] = series_json(rep.blowup_series, n);
    if (rep.blowup_poly) j["blowup_poly"] = poly_json(*rep.blowup_poly);
    if (rep.ip) j["ip_polynomial"] = poly_json(*rep.ip);
    if (rep.ip_alt) j["ip_polynomial_alt"] = poly_json(*rep.ip_alt);
    if (rep.ordinary) {
        json o;
        json top = json::object(), bottom = json::object();
        for (const auto& [i, v] : rep.ordinary->quotient_top)
            top[std::to_string(i)] = v;
        for (const auto& [i, v] : rep.ordinary->stable_bottom)
            bottom[std::to_string(i)] = v;
        o["quotient_top"] = top;
        o["stable_bottom"] = bottom;
        j["ordinary_ranges"] = o;
    }
    j["checks"] = json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["warnings"] = rep.warnings;
    return j;
}

std::string report_to_markdown(const PipelineReport& rep) {
    const int n = rep.truncation_order;
    std::ostringstream os;
    os << "# GIT quotient cohomology report\n\n";
    os << "## Parameter space\n\n";
    os << "Equivariant series: " << rep.total.str() << "\n\n";
    os << "Truncated (order " << n << "): " << rep.total.expand(n).str()
       << "\n\n";
    os << "## Unstable strata\n\n";
    strata_markdown_rows(os, rep.strata);
    os << "\nSemistable series: " << rep.semistable.str() << "\n\n";
    os << "Truncated: " << rep.semistable.expand(n).str() << "\n\n";

    os << "## Blow-up centres\n\n";
    for (const auto& c : rep.centers) {
        os << "### " << c.name << "\n\n";
        os << "- slice weights: " << multiset_str(c.slice_weights) << "\n";
        os << "- normal rank: " << c.rank << "\n";
        os << "- centre series: " << c.z_series.str() << "\n";
        os << "- main term: " << c.main.str() << "\n";
        os << "- extra term: " << c.extra.str() << "\n";
        os << "- error term truncated: " << c.a_term.expand(n).str() << "\n";
        for (const auto& [k, v] : c.provenance)
            os << "- provenance, " << k << ": " << v << "\n";
        os << "\n";
    }

    os << "## Desingularization\n\n";
    if (rep.blowup_poly)
        os << "Betti polynomial: " << rep.blowup_poly->str() << "\n\n";
    else
        os << "Series (not polynomial): " << rep.blowup_series.str() << "\n\n";

    os << "## Blow-down\n\n";
    for (const auto& c : rep.centers) {
        os << "### " << c.name << "\n\n";
        os << "- base: " << c.base_poly.str() << "\n";
        os << "- fiber invariant series: " << c.fiber_poly.str() << "\n";
        os << "- fiber dimension: " << c.fiber_dim << "\n";
        os << "- blow-down term: " << c.b_term.str() << "\n\n";
    }

    os << "## Intersection series\n\n";
    if (rep.ip) os << "IP: " << rep.ip->str() << "\n\n";
    if (rep.ordinary) {
        os << "Ordinary Betti numbers pinned by the intersection series:\n\n";
        os << "- quotient, top range:";
        for (const auto& [i, v] : rep.ordinary->quotient_top)
            if (i % 2 == 0) os << " H^" << i << "=" << v;
        os << "\n- stable orbit space, bottom range:";
        for (const auto& [i, v] : rep.ordinary->stable_bottom)
            if (i % 2 == 0) os << " H^" << i << "=" << v;
        os << "\n\n";
    }
    os << "## Checks\n\n";
    for (const auto& c : rep.checks)
        os << "- " << (c.pass ? "PASS" : "FAIL") << " " << c.name
           << (c.pass || c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!rep.warnings.empty()) {
        os << "\n## Warnings\n\n";
        for (const auto& w : rep.warnings) os << "- " << w << "\n";
    }
    return os.str();
}

json strata_to_json(const StrataResult& strata, int truncate) {
    json j;
    j["total_series"] = series_json(strata.total, truncate);
    j["strata"] = strata_records_json(strata.records, truncate);
    j["semistable_series"] = series_json(strata.semistable, truncate);
    j["warnings"] = strata.warnings;
    return j;
}

std::string strata_to_markdown(const StrataResult& strata, int truncate) {
    std::ostringstream os;
    os << "# Stratification report\n\n";
    os << "Total series: " << strata.total.str() << "\n\n";
    strata_markdown_rows(os, strata.records);
    os << "\nSemistable series: " << strata.semistable.str() << "\n\n";
    os << "Truncated: " << strata.semistable.expand(truncate).str() << "\n";
    if (!strata.warnings.empty()) {
        os << "\n## Warnings\n\n";
        for (const auto& w : strata.warnings) os << "- " << w << "\n";
    }
    return os.str();
}

std::string golden_summary(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name
           << (c.pass || c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return os.str();
}

} // namespace kirwan
