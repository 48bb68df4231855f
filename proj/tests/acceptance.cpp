// Acceptance suite: the contract of the full computation, one criterion per
// line. Exact arithmetic throughout; every expectation is pinned here.

#include "kirwan/config.hpp"
#include "kirwan/genus4.hpp"
#include "kirwan/report.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace kirwan;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
              << name << note << "\n";
    if (!pass) ++failures;
}

QPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    QPolynomial p;
    for (const auto& [d, c] : terms) p.set(d, Rat(c));
    return p;
}

QRationalFunction rf(QPolynomial num, std::map<int, int> factors) {
    return QRationalFunction(std::move(num), std::move(factors));
}

QRationalFunction rf1(std::map<int, int> factors) {
    return rf(QPolynomial::one(), std::move(factors));
}

WeightMultiset ms(std::initializer_list<std::pair<int, int>> entries) {
    WeightMultiset m;
    for (const auto& [w, mult] : entries) m[w] = mult;
    return m;
}

bool expect(bool ok, const std::string& what) {
    if (!ok) std::cout << "  mismatch: " << what << "\n";
    return ok;
}

} // namespace

int main() {
    const GroupCatalog catalog = GroupCatalog::builtin();
    const PipelineConfig config = flagship_config();
    const PipelineReport rep = run_pipeline(config, catalog);

    criterion(1, "total equivariant series and its truncation", [&] {
        const QRationalFunction expected =
            rf(QPolynomial::even_range(0, 15), {{4, 1}, {8, 1}});
        bool ok = expect(rep.total == expected, "closed form");
        const QSeries s = rep.total.expand(10);
        const long long coeffs[] = {1, 0, 1, 0, 2, 0, 2, 0, 4, 0};
        for (int i = 0; i < 10; ++i)
            ok = ok && expect(s.coeff(i) == Rat(coeffs[i]),
                              "coefficient of t^" + std::to_string(i));
        return ok;
    });

    criterion(2, "index set: 11 exact nonzero points, all-subsets oracle", [&] {
        const std::set<Weight> got = index_set(config.ws, config.chamber);
        const std::set<Weight> expected = {
            Weight(0, 0),
            Weight(3, -3),
            Weight(2, -2),
            Weight(1, -1),
            Weight(2, -1),
            Weight(Rat(6, 5), Rat(-3, 5)),
            Weight(Rat(2, 5), Rat(-1, 5)),
            Weight(3, -1),
            Weight(Rat(9, 5), Rat(-3, 5)),
            Weight(Rat(9, 13), Rat(-6, 13)),
            Weight(1, 0),
            Weight(3, 0),
        };
        bool ok = expect(got == expected, "chamber index set");
        ok = ok && expect(kirwan::testing::index_set_oracle(
                              config.ws, config.chamber) == got,
                          "2^16-subset brute force");
        return ok;
    });

    criterion(3, "unstable-strata table: all 11 rows exact", [&] {
        struct Row {
            Weight beta;
            int n, two_d;
            std::string stab;
            QRationalFunction series;
        };
        const std::vector<Row> table = {
            {Weight(3, -3), 15, 26, "T_iota", rf1({{2, 1}, {4, 1}})},
            {Weight(2, -2), 13, 22, "T_iota", rf1({{2, 1}})},
            {Weight(1, -1), 10, 16, "T_iota",
             rf(poly({{0, 1}, {2, 1}, {6, -1}}), {{2, 1}, {4, 1}})},
            {Weight(2, -1), 12, 20, "T", rf1({{2, 1}})},
            {Weight(Rat(6, 5), Rat(-3, 5)), 10, 16, "T", rf1({{2, 1}})},
            {Weight(Rat(2, 5), Rat(-1, 5)), 8, 12, "T", rf1({{2, 1}})},
            {Weight(3, -1), 14, 24, "T", rf1({{2, 2}})},
            {Weight(Rat(9, 5), Rat(-3, 5)), 11, 18, "T", rf1({{2, 1}})},
            {Weight(Rat(9, 13), Rat(-6, 13)), 9, 14, "T", rf1({{2, 1}})},
            {Weight(3, 0), 12, 22, "CxSL2", rf1({{2, 1}})},
            {Weight(1, 0), 8, 14, "CxSL2", rf1({{2, 1}})},
        };
        bool ok = expect(rep.strata.size() == 11, "row count");
        for (const auto& row : table) {
            const auto it = std::find_if(
                rep.strata.begin(), rep.strata.end(),
                [&](const StratumRecord& r) { return r.beta == row.beta; });
            if (!expect(it != rep.strata.end(), "row " + row.beta.str()))
                return false;
            ok = ok && expect(it->n == row.n, "n at " + row.beta.str());
            ok = ok &&
                 expect(2 * it->d == row.two_d, "2d at " + row.beta.str());
            ok = ok && expect(it->stab.name == row.stab,
                              "stabilizer at " + row.beta.str());
            ok = ok && expect(it->series == row.series,
                              "series at " + row.beta.str());
        }
        return ok;
    });

    criterion(4, "semistable-locus series closed form", [&] {
        const QRationalFunction expected =
            rf(poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 2}, {12, 1},
                     {14, -1}, {16, -1}, {18, -1}, {20, -1}, {22, -1}}),
               {{4, 1}});
        return expect(rep.semistable == expected, "12-term numerator over "
                                                  "(1-t^4)");
    });

    criterion(5, "slice weights by symbolic differentiation; ranks", [&] {
        bool ok = expect(
            rep.centers[0].slice_weights ==
                ms({{6, 1}, {4, 2}, {2, 2}, {0, 2}, {-2, 2}, {-4, 2}, {-6, 1}}),
            "triple-conic slice");
        ok = ok && expect(rep.centers[1].slice_weights ==
                              ms({{6, 1},
                                  {4, 2},
                                  {2, 1},
                                  {-2, 1},
                                  {-4, 2},
                                  {-6, 1}}),
                          "D-curve slice");
        ok = ok && expect(rep.centers[2].slice_weights ==
                              ms({{12, 1},
                                  {10, 1},
                                  {8, 1},
                                  {6, 1},
                                  {4, 1},
                                  {-4, 1},
                                  {-6, 1},
                                  {-8, 1},
                                  {-10, 1},
                                  {-12, 1}}),
                          "A-curve slice");
        ok = ok && expect(rep.centers[0].rank == 12 &&
                              rep.centers[1].rank == 8 &&
                              rep.centers[2].rank == 10,
                          "normal ranks 12, 8, 10");
        return ok;
    });

    criterion(6, "main error terms, including the blown-up centre series", [&] {
        bool ok = expect(rep.centers[0].main ==
                             rf(QPolynomial::even_range(1, 11), {{4, 1}}),
                         "triple conic main");
        ok = ok && expect(rep.centers[1].z_series ==
                              rf(poly({{0, 1}, {2, 1}}), {{2, 1}}),
                          "(1+t^2)/(1-t^2) identity for the D-curve centre");
        ok = ok &&
             expect(rep.centers[1].main ==
                        rf(poly({{0, 1}, {2, 1}}), {{2, 1}}) *
                            QPolynomial::even_range(1, 7),
                    "D-curve main");
        ok = ok && expect(rep.centers[2].main ==
                              rf(QPolynomial::even_range(1, 9), {{4, 1}}),
                          "A-curve main");
        return ok;
    });

    criterion(7, "extra error terms", [&] {
        bool ok = expect(
            rep.centers[0].extra ==
                rf(QPolynomial::monomial(12) *
                       poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}),
                   {{2, 1}}),
            "triple conic extra");
        ok = ok &&
             expect(rep.centers[1].extra ==
                        rf(poly({{0, 1}, {2, 2}, {4, 1}}), {{2, 1}}) *
                            poly({{8, 1}, {10, 1}, {12, 1}, {14, 1}}),
                    "D-curve extra");
        ok = ok &&
             expect(rep.centers[2].extra ==
                        rf(poly({{10, 1}, {12, 1}, {14, 1}, {16, 1}, {18, 1}}),
                           {{2, 1}}),
                    "A-curve extra");
        return ok;
    });

    criterion(8, "desingularization Betti numbers", [&] {
        const QPolynomial expected =
            poly({{0, 1}, {2, 4}, {4, 7}, {6, 11}, {8, 14}, {10, 14},
                  {12, 11}, {14, 7}, {16, 4}, {18, 1}});
        bool ok = expect(rep.blowup_poly && *rep.blowup_poly == expected,
                         "coefficients (1,4,7,11,14,14,11,7,4,1)");
        ok = ok && expect(rep.blowup_poly &&
                              palindrome_check(*rep.blowup_poly, 18),
                          "palindromic");
        if (rep.blowup_poly)
            for (const auto& [d, c] : rep.blowup_poly->coeffs()) {
                (void)c;
                ok = ok && expect(d % 2 == 0, "odd vanishing");
            }
        return ok;
    });

    criterion(9, "nested slice quotient polynomial", [&] {
        const QPolynomial expected =
            poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 2}, {12, 2},
                  {14, 1}, {16, 1}});
        return expect(rep.centers[0].nested &&
                          rep.centers[0].nested->ip == expected,
                      "triple-conic slice intersection series");
    });

    criterion(10, "blow-down terms with the convolution oracle", [&] {
        bool ok = expect(rep.centers[2].b_term ==
                             poly({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 2},
                                   {12, 2}, {14, 1}, {16, 1}}),
                         "A-curve blow-down");
        ok = ok && expect(rep.centers[1].b_term ==
                              poly({{2, 1}, {4, 3}, {6, 5}, {8, 7}, {10, 7},
                                    {12, 5}, {14, 3}, {16, 1}}),
                          "D-curve blow-down");
        ok = ok && expect(rep.centers[0].b_term ==
                              poly({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 2},
                                    {12, 2}, {14, 1}, {16, 1}}),
                          "triple-conic blow-down");
        // Hand convolution oracle for the D-curve case.
        const QPolynomial base = rep.centers[1].base_poly;
        const QPolynomial fiber = rep.centers[1].fiber_poly;
        QPolynomial oracle;
        for (int i = 0; i <= 24; ++i) {
            Rat c(0);
            for (int p = 0; p <= i; ++p) {
                const int q = i - p;
                const int qh = q <= 6 ? q - 2 : q;
                if (qh >= 0) c += base.coeff(p) * fiber.coeff(qh);
            }
            oracle.set(i, c);
        }
        ok = ok && expect(base == poly({{0, 1}, {2, 2}, {4, 1}}),
                          "D-curve base polynomial");
        ok = ok &&
             expect(rep.centers[1].b_term == oracle, "convolution oracle");
        return ok;
    });

    criterion(11, "intersection Betti numbers and the ordinary ranges", [&] {
        const QPolynomial expected =
            poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 3}, {10, 3}, {12, 2},
                  {14, 2}, {16, 1}, {18, 1}});
        bool ok = expect(rep.ip && *rep.ip == expected,
                         "coefficients (1,1,2,2,3,3,2,2,1,1)");
        ok = ok && expect(rep.ip_alt && rep.ip &&
                              *rep.ip == *rep.ip_alt,
                          "two evaluation orders agree");
        ok = ok &&
             expect(rep.ordinary &&
                        rep.ordinary->quotient_top ==
                            std::map<int, long long>{{12, 2}, {13, 0}, {14, 2},
                                                     {15, 0}, {16, 1}, {17, 0},
                                                     {18, 1}} &&
                        rep.ordinary->stable_bottom ==
                            std::map<int, long long>{{0, 1}, {1, 0}, {2, 1},
                                                     {3, 0}, {4, 2}, {5, 0},
                                                     {6, 2}},
                    "ordinary Betti ranges");
        return ok;
    });

    criterion(12, "property suites", [&] {
        bool ok = true;
        // Rational-function / series homomorphism on randomized inputs.
        {
            std::mt19937 rng(501);
            std::uniform_int_distribution<int> coeff(-3, 3);
            std::uniform_int_distribution<int> deg(0, 6);
            std::uniform_int_distribution<int> k(1, 5);
            for (int trial = 0; trial < 40 && ok; ++trial) {
                QPolynomial na, nb;
                for (int i = 0; i < 4; ++i) {
                    na.set(deg(rng), Rat(coeff(rng)));
                    nb.set(deg(rng), Rat(coeff(rng)));
                }
                if (na.is_zero()) na = QPolynomial::one();
                if (nb.is_zero()) nb = QPolynomial::one();
                const QRationalFunction a(na, {{k(rng), 1}});
                const QRationalFunction b(nb, {{k(rng), 1}});
                ok = expect((a * b).expand(16) ==
                                a.expand(16) * b.expand(16),
                            "series homomorphism");
            }
        }
        // Molien nonnegativity for the catalog classifying rings.
        for (const char* name :
             {"G", "T", "T_iota", "T_swap", "CxSL2", "SL2", "C*", "Cstar_inv",
              "N_RC", "N_RD", "N_RA", "HS_Z2", "That1_Z2"}) {
            const QSeries s = classifying_series(catalog.get(name)).expand(25);
            ok = ok && expect(s.nonnegative() && s.integral(),
                              std::string("Molien nonnegativity for ") + name);
        }
        // Gram-scaling invariance of the index set.
        {
            WeightSystem scaled = config.ws;
            scaled.gram.a = Rat(7, 2);
            scaled.gram.d = Rat(7, 2);
            ok = ok && expect(index_set(scaled, config.chamber) ==
                                  index_set(config.ws, config.chamber),
                              "gram-scaling invariance");
        }
        // Binary-cubics sanity.
        {
            StratificationProblem p;
            p.ws = kirwan::testing::line_system({3, 1, -1, -3});
            p.group = catalog.get("SL2");
            ok = ok && expect(semistable_series(p, catalog) ==
                                  QRationalFunction::one(),
                              "binary-cubics semistable series");
        }
        // Negative control: a perturbed weight flips the golden verdict.
        {
            PipelineConfig bad = config;
            bad.ws.weights[0].w = Weight(3, 2);
            const PipelineReport bad_rep = run_pipeline(bad, catalog);
            ok = ok && expect(!all_pass(golden_checks(bad_rep)),
                              "perturbation flips the golden verdict");
        }
        return ok;
    });

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
