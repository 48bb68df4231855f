#pragma once

#include "kirwan/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kirwan {

// Bihomogeneous form of bidegree (d,d) on P^1 x P^1. The coefficient at
// (i,j) multiplies x0^i x1^{d-i} y0^j y1^{d-j}; zero coefficients unstored.
class BiForm {
public:
    explicit BiForm(int d) : d_(d) {}
    BiForm(int d, const std::map<std::pair<int, int>, Rat>& coeffs)
        : d_(d) {
        for (const auto& [ij, c] : coeffs) set(ij.first, ij.second, c);
    }

    int bidegree() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(int i, int j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    void set(int i, int j, const Rat& c) {
        if (i < 0 || i > d_ || j < 0 || j > d_)
            throw std::invalid_argument("BiForm: exponent out of range");
        if (c.is_zero())
            coeffs_.erase({i, j});
        else
            coeffs_[{i, j}] = c;
    }
    void add(int i, int j, const Rat& c) { set(i, j, coeff(i, j) + c); }
    const std::map<std::pair<int, int>, Rat>& coeffs() const { return coeffs_; }

    BiForm operator*(const Rat& s) const {
        BiForm r(d_);
        for (const auto& [ij, c] : coeffs_) r.set(ij.first, ij.second, c * s);
        return r;
    }

    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
    }

    // Torus weight of the monomial at (i,j): (d-2i, d-2j).
    std::pair<int, int> monomial_weight(int i, int j) const {
        return {d_ - 2 * i, d_ - 2 * j};
    }

    std::string str() const;

private:
    int d_;
    std::map<std::pair<int, int>, Rat> coeffs_;
};

// Basis derivation coordinate_{mult} * d/d coordinate_{derive} acting on one
// of the two P^1 factors; the eight of them span gl2 + gl2.
struct DerivationBasisElement {
    int factor;      // 1 = x variables, 2 = y variables
    int derive;      // coordinate index being differentiated, 0 or 1
    int mult;        // coordinate index multiplied back in, 0 or 1

    static std::vector<DerivationBasisElement> all8() {
        std::vector<DerivationBasisElement> v;
        for (int f = 1; f <= 2; ++f)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) v.push_back({f, a, b});
        return v;
    }
};

// One-parameter-subgroup weight functional (a,b): monomial (i,j) has weight
// a(d-2i) + b(d-2j).
struct OnePsg {
    int a = 1, b = 1;
};

BiForm infinitesimal_action(const DerivationBasisElement& e, const BiForm& f);

int psg_weight(const BiForm& f, int i, int j, const OnePsg& psg);

// Multisets of integers as value -> multiplicity maps.
using WeightMultiset = std::map<int, int>;

// Ambient weights {a(d-2i)+b(d-2j) : 0 <= i,j <= d}.
WeightMultiset ambient_weights(int d, const OnePsg& psg);

// Weights on the tangent space to the orbit through f: the eight derivation
// images plus the supplied extra directions, grouped by psg weight, with the
// exact rank of each group's coefficient matrix as the multiplicity (linear
// relations among the entries are detected by rank, never transcribed).
// Throws when some entry mixes distinct psg weights (f not fixed by the psg).
WeightMultiset tangent_weights(const BiForm& f, const OnePsg& psg,
                               const std::vector<BiForm>& extras = {});

// Exact multiset difference; throws naming a deficient weight when the
// tangent multiset is not contained in the ambient one.
WeightMultiset slice_weights(const WeightMultiset& ambient,
                             const WeightMultiset& tangent);

int multiset_size(const WeightMultiset& m);

// Rank over Q of the span of the listed forms inside the monomial space.
int forms_rank(const std::vector<BiForm>& forms);

} // namespace kirwan
