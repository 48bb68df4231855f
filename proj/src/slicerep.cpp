#include "kirwan/slicerep.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace kirwan {

std::string BiForm::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : coeffs_) {
        const auto [i, j] = ij;
        if (!first) os << (c.sign() >= 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        const Rat a = c.sign() < 0 ? -c : c;
        if (a != Rat(1)) os << a.str() << "*";
        auto pow = [&](const char* v, int e) {
            if (e == 0) return;
            os << v;
            if (e > 1) os << "^" << e;
        };
        pow("x0", i);
        pow("x1", d_ - i);
        pow("y0", j);
        pow("y1", d_ - j);
        first = false;
    }
    return os.str();
}

BiForm infinitesimal_action(const DerivationBasisElement& e, const BiForm& f) {
    if ((e.factor != 1 && e.factor != 2) || e.derive < 0 || e.derive > 1 ||
        e.mult < 0 || e.mult > 1)
        throw std::invalid_argument("infinitesimal_action: bad basis element");
    const int d = f.bidegree();
    BiForm out(d);
    for (const auto& [ij, c] : f.coeffs()) {
        const auto [i, j] = ij;
        // Exponent of coord0 in the chosen factor; coord1 carries the rest.
        const int e0 = e.factor == 1 ? i : j;
        const long long scale = e.derive == 0 ? e0 : d - e0;
        if (scale == 0) continue;
        const int n0 = e0 - (e.derive == 0 ? 1 : 0) + (e.mult == 0 ? 1 : 0);
        const int ni = e.factor == 1 ? n0 : i;
        const int nj = e.factor == 2 ? n0 : j;
        out.add(ni, nj, c * Rat(scale));
    }
    return out;
}

int psg_weight(const BiForm& f, int i, int j, const OnePsg& psg) {
    const auto [wx, wy] = f.monomial_weight(i, j);
    return psg.a * wx + psg.b * wy;
}

WeightMultiset ambient_weights(int d, const OnePsg& psg) {
    WeightMultiset out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            ++out[psg.a * (d - 2 * i) + psg.b * (d - 2 * j)];
    return out;
}

namespace {

// All psg weights occurring in f; throws if mixed when `require_pure`.
std::optional<int> pure_weight(const BiForm& f, const OnePsg& psg) {
    std::optional<int> w;
    for (const auto& [ij, c] : f.coeffs()) {
        (void)c;
        const int cur = psg_weight(f, ij.first, ij.second, psg);
        if (!w)
            w = cur;
        else if (*w != cur)
            return std::nullopt;
    }
    return w ? w : std::optional<int>(0);
}

} // namespace

int forms_rank(const std::vector<BiForm>& forms) {
    if (forms.empty()) return 0;
    // Gaussian elimination over Q on the coefficient vectors.
    std::vector<std::map<std::pair<int, int>, Rat>> rows;
    for (const auto& f : forms)
        if (!f.is_zero()) rows.push_back(f.coeffs());
    int rank = 0;
    while (!rows.empty()) {
        auto pivot_row = rows.back();
        rows.pop_back();
        if (pivot_row.empty()) continue;
        ++rank;
        const auto pivot_key = pivot_row.begin()->first;
        const Rat pivot_val = pivot_row.begin()->second;
        for (auto& row : rows) {
            auto it = row.find(pivot_key);
            if (it == row.end()) continue;
            const Rat factor = it->second / pivot_val;
            for (const auto& [k, v] : pivot_row) {
                const Rat nv = (row.count(k) ? row[k] : Rat(0)) - factor * v;
                if (nv.is_zero())
                    row.erase(k);
                else
                    row[k] = nv;
            }
        }
    }
    return rank;
}

WeightMultiset tangent_weights(const BiForm& f, const OnePsg& psg,
                               const std::vector<BiForm>& extras) {
    std::map<int, std::vector<BiForm>> by_weight;
    auto file = [&](const BiForm& v, const std::string& what) {
        if (v.is_zero()) return;
        const auto w = pure_weight(v, psg);
        if (!w)
            throw std::invalid_argument(
                "tangent_weights: " + what +
                " mixes distinct one-parameter-subgroup weights: " + v.str());
        by_weight[*w].push_back(v);
    };
    for (const auto& e : DerivationBasisElement::all8()) {
        std::ostringstream what;
        what << "derivation (factor " << e.factor << ", coord" << e.mult
             << " d/d coord" << e.derive << ")";
        file(infinitesimal_action(e, f), what.str());
    }
    for (std::size_t i = 0; i < extras.size(); ++i)
        file(extras[i], "extra direction " + std::to_string(i));

    WeightMultiset out;
    for (const auto& [w, forms] : by_weight) {
        const int r = forms_rank(forms);
        if (r > 0) out[w] = r;
    }
    return out;
}

WeightMultiset slice_weights(const WeightMultiset& ambient,
                             const WeightMultiset& tangent) {
    WeightMultiset out = ambient;
    for (const auto& [w, m] : tangent) {
        auto it = out.find(w);
        if (it == out.end() || it->second < m)
            throw std::invalid_argument(
                "slice_weights: tangent weight " + std::to_string(w) +
                " exceeds the ambient multiplicity");
        it->second -= m;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

int multiset_size(const WeightMultiset& m) {
    int n = 0;
    for (const auto& [w, mult] : m) {
        (void)w;
        n += mult;
    }
    return n;
}

} // namespace kirwan
