#include "kirwan/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace kirwan {

std::optional<QPolynomial> QPolynomial::divide_exact(
    const QPolynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("QPolynomial: division by zero polynomial");
    QPolynomial rem = *this;
    QPolynomial quot;
    const int dd = divisor.degree();
    const Rat lead = divisor.coeff(dd);
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rat q = rem.coeff(rem.degree()) / lead;
        quot.set(shift, q);
        rem = rem - divisor * QPolynomial::monomial(shift, q);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

std::string QPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        if (!first)
            os << (c.sign() >= 0 ? "+" : "-");
        else if (c.sign() < 0)
            os << "-";
        Rat a = c.sign() < 0 ? -c : c;
        const bool show_coeff = (a != Rat(1)) || d == 0;
        if (show_coeff) os << a.str();
        if (d > 0) {
            if (show_coeff) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

QPolynomial one_minus_tk(int k) {
    QPolynomial p = QPolynomial::one();
    p.set(k, Rat(-1));
    return p;
}

bool palindrome_check(const QPolynomial& p, int top) {
    if (p.degree() > top) return false;
    for (int i = 0; i <= top; ++i)
        if (p.coeff(i) != p.coeff(top - i)) return false;
    return true;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("QSeries: mismatched orders");
    QSeries r(a.order_);
    for (int i = 0; i < a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("QSeries: mismatched orders");
    QSeries r(a.order_);
    for (int i = 0; i < a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("QSeries: mismatched orders");
    QSeries r(a.order_);
    for (int i = 0; i < a.order_; ++i)
        for (int j = 0; i + j < a.order_; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
}

std::string QSeries::str() const {
    QPolynomial p;
    for (int i = 0; i < order_; ++i) p.set(i, coeffs_[i]);
    std::ostringstream os;
    os << p.str() << " + O(t^" << order_ << ")";
    return os.str();
}

QRationalFunction QRationalFunction::from_fraction(QPolynomial num,
                                                   QPolynomial den) {
    if (den.is_zero())
        throw std::domain_error("QRationalFunction: zero denominator");
    const Rat c0 = den.coeff(0);
    if (c0.is_zero())
        throw std::domain_error(
            "QRationalFunction: denominator has zero constant term");
    num = num * (Rat(1) / c0);
    den = den * (Rat(1) / c0);
    QRationalFunction r(std::move(num));
    r.den_extra_ = std::move(den);
    return r.simplified();
}

QPolynomial QRationalFunction::denominator_expanded() const {
    QPolynomial d = den_extra_;
    for (const auto& [k, e] : den_factors_)
        for (int i = 0; i < e; ++i) d = d * one_minus_tk(k);
    return d;
}

namespace {

// Scale a term's numerator so both sides sit over the common denominator
// (max exponents per factor, product of the extra parts).
QPolynomial lift_numerator(const QRationalFunction& x,
                           const std::map<int, int>& common,
                           const QPolynomial& extra_other) {
    QPolynomial n = x.numerator();
    for (const auto& [k, e] : common) {
        auto it = x.denominator_factors().find(k);
        const int have = it == x.denominator_factors().end() ? 0 : it->second;
        for (int i = 0; i < e - have; ++i) n = n * one_minus_tk(k);
    }
    return n * extra_other;
}

} // namespace

QRationalFunction operator+(const QRationalFunction& a,
                            const QRationalFunction& b) {
    std::map<int, int> common = a.den_factors_;
    for (const auto& [k, e] : b.den_factors_)
        common[k] = std::max(common[k], e);
    QPolynomial num = lift_numerator(a, common, b.den_extra_) +
                      lift_numerator(b, common, a.den_extra_);
    QRationalFunction r(std::move(num), common);
    r.den_extra_ = a.den_extra_ * b.den_extra_;
    return r.simplified();
}

QRationalFunction operator-(const QRationalFunction& a,
                            const QRationalFunction& b) {
    return a + (-b);
}

QRationalFunction operator*(const QRationalFunction& a,
                            const QRationalFunction& b) {
    std::map<int, int> factors = a.den_factors_;
    for (const auto& [k, e] : b.den_factors_) factors[k] += e;
    QRationalFunction r(a.num_ * b.num_, factors);
    r.den_extra_ = a.den_extra_ * b.den_extra_;
    return r.simplified();
}

QRationalFunction operator/(const QRationalFunction& a,
                            const QRationalFunction& b) {
    if (b.is_zero())
        throw std::domain_error("QRationalFunction: division by zero");
    return QRationalFunction::from_fraction(
        a.num_ * b.denominator_expanded(),
        a.denominator_expanded() * b.num_);
}

QRationalFunction QRationalFunction::operator*(const QPolynomial& p) const {
    QRationalFunction r(num_ * p, den_factors_);
    r.den_extra_ = den_extra_;
    return r.simplified();
}

QRationalFunction QRationalFunction::operator*(const Rat& s) const {
    QRationalFunction r(num_ * s, den_factors_);
    r.den_extra_ = den_extra_;
    return r;
}

QSeries QRationalFunction::expand(int order) const {
    std::vector<Rat> c(order, Rat(0));
    for (const auto& [d, v] : num_.coeffs())
        if (d < order) c[d] = v;
    // Dividing by (1-t^k) is the prefix recurrence c[i] += c[i-k].
    for (const auto& [k, e] : den_factors_)
        for (int rep = 0; rep < e; ++rep)
            for (int i = k; i < order; ++i) c[i] += c[i - k];
    if (den_extra_ != QPolynomial::one()) {
        // Series division, den_extra_ has constant term 1.
        for (int i = 0; i < order; ++i)
            for (const auto& [d, v] : den_extra_.coeffs())
                if (d > 0 && d <= i) c[i] -= v * c[i - d];
    }
    return QSeries(order, std::move(c));
}

std::optional<QPolynomial> QRationalFunction::as_polynomial() const {
    return num_.divide_exact(denominator_expanded());
}

QPolynomial QRationalFunction::to_polynomial(const std::string& what) const {
    auto p = as_polynomial();
    if (!p)
        throw std::domain_error("expected a polynomial" +
                                (what.empty() ? "" : " for " + what) + ": " +
                                str());
    return *p;
}

namespace {

// Try to write `den` (constant term 1) as a product of (1-t^k) factors.
// Descending-k greedy with backtracking; degrees here are small.
bool split_geometric_factors(const QPolynomial& den, int max_k,
                             std::map<int, int>& factors) {
    if (den == QPolynomial::one()) return true;
    if (den.degree() < 1) return false;
    for (int k = std::min(max_k, den.degree()); k >= 1; --k) {
        auto q = den.divide_exact(one_minus_tk(k));
        if (!q) continue;
        if (split_geometric_factors(*q, k, factors)) {
            ++factors[k];
            return true;
        }
    }
    return false;
}

} // namespace

QRationalFunction QRationalFunction::simplified() const {
    QRationalFunction r = *this;
    if (r.num_.is_zero()) {
        r.den_factors_.clear();
        r.den_extra_ = QPolynomial::one();
        return r;
    }
    if (r.den_extra_ != QPolynomial::one()) {
        std::map<int, int> extra_factors;
        if (split_geometric_factors(r.den_extra_, r.den_extra_.degree(),
                                    extra_factors)) {
            for (const auto& [k, e] : extra_factors) r.den_factors_[k] += e;
            r.den_extra_ = QPolynomial::one();
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // Cancel whole (1-t^k) factors dividing the numerator.
        for (auto& [k, e] : r.den_factors_) {
            while (e > 0) {
                auto q = r.num_.divide_exact(one_minus_tk(k));
                if (!q) break;
                r.num_ = *q;
                --e;
                changed = true;
            }
        }
        // Partial cancel: (1-t^k) = (1-t^j) * (1 + t^j + ... + t^{k-j}) for
        // j | k; dividing the numerator by the cofactor demotes k to j.
        for (auto& [k, e] : r.den_factors_) {
            if (e == 0) continue;
            for (int j = k / 2; j >= 1 && e > 0; --j) {
                if (k % j != 0) continue;
                const QPolynomial chunk =
                    *one_minus_tk(k).divide_exact(one_minus_tk(j));
                auto q = r.num_.divide_exact(chunk);
                if (!q) continue;
                r.num_ = *q;
                --e;
                ++r.den_factors_[j];
                changed = true;
                break;
            }
            if (changed) break; // the map may have gained a key; restart
        }
    }
    r.prune();
    return r;
}

std::string QRationalFunction::str() const {
    std::ostringstream os;
    const bool wrap_num = num_.coeffs().size() > 1;
    const bool have_den =
        !den_factors_.empty() || den_extra_ != QPolynomial::one();
    if (!have_den) return num_.str();
    if (wrap_num)
        os << "(" << num_.str() << ")";
    else
        os << num_.str();
    os << "/";
    std::ostringstream den;
    int pieces = 0;
    for (const auto& [k, e] : den_factors_) {
        den << "(1-t^" << k << ")";
        if (e > 1) den << "^" << e;
        ++pieces;
    }
    if (den_extra_ != QPolynomial::one()) {
        den << "(" << den_extra_.str() << ")";
        ++pieces;
    }
    if (pieces > 1)
        os << "(" << den.str() << ")";
    else
        os << den.str();
    return os.str();
}

GradedAction GradedAction::trivial(std::vector<int> degrees) {
    GradedAction a;
    const std::size_t n = degrees.size();
    a.generator_degrees = std::move(degrees);
    std::vector<std::vector<Rat>> id(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Rat(1);
    a.elements.push_back(std::move(id));
    return a;
}

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Laplace expansion along the top remaining row; matrices here are tiny.
QPolynomial det_rec(const std::vector<std::vector<QPolynomial>>& m,
                    std::size_t row, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return QPolynomial::one();
    QPolynomial acc;
    for (std::size_t p = 0; p < cols.size(); ++p) {
        const QPolynomial& e = m[row][cols[p]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < cols.size(); ++q)
            if (q != p) rest.push_back(cols[q]);
        QPolynomial term = e * det_rec(m, row + 1, rest);
        acc = p % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// det(I - t^{d_i} g) over QPolynomial entries. Block-diagonality by degree
// makes this the product of the per-degree block determinants.
QPolynomial char_det(const Mat& g, const std::vector<int>& degrees) {
    const std::size_t n = g.size();
    std::vector<std::vector<QPolynomial>> m(n, std::vector<QPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QPolynomial e;
            if (i == j) e.set(0, Rat(1));
            if (!g[i][j].is_zero())
                e = e - QPolynomial::monomial(degrees[i], g[i][j]);
            m[i][j] = e;
        }
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_rec(m, 0, cols);
}

} // namespace

void GradedAction::validate() const {
    const std::size_t n = generator_degrees.size();
    if (elements.empty())
        throw std::invalid_argument("GradedAction: empty element list");
    for (const auto& g : elements) {
        if (g.size() != n)
            throw std::invalid_argument("GradedAction: matrix size mismatch");
        for (const auto& row : g)
            if (row.size() != n)
                throw std::invalid_argument("GradedAction: matrix not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!g[i][j].is_zero() &&
                    generator_degrees[i] != generator_degrees[j])
                    throw std::invalid_argument(
                        "GradedAction: matrix does not preserve the grading");
    }
    // Closure of the listed set under products; for a finite group list this
    // is full closure. A singular matrix would break closure as well.
    for (const auto& a : elements)
        for (const auto& b : elements) {
            const Mat p = mat_mul(a, b);
            if (std::find(elements.begin(), elements.end(), p) == elements.end())
                throw std::invalid_argument(
                    "GradedAction: element set not closed under multiplication");
        }
}

QRationalFunction molien(const GradedAction& action) {
    return molien(action,
                  std::vector<QPolynomial>(action.size(), QPolynomial::one()));
}

QRationalFunction molien(const GradedAction& action,
                         const std::vector<QPolynomial>& element_factors) {
    action.validate();
    if (element_factors.size() != action.size())
        throw std::invalid_argument("molien: factor count mismatch");
    // Accumulate sum of factor_g / det_g as a plain fraction, normalize once.
    QPolynomial num;
    QPolynomial den = QPolynomial::one();
    for (std::size_t g = 0; g < action.size(); ++g) {
        const QPolynomial d =
            char_det(action.elements[g], action.generator_degrees);
        num = num * d + element_factors[g] * den;
        den = den * d;
    }
    const Rat avg = Rat(1, static_cast<long long>(action.size()));
    return QRationalFunction::from_fraction(num * avg, den);
}

} // namespace kirwan
