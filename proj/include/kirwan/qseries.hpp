#pragma once

#include "kirwan/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kirwan {

// Polynomial in one grading variable t with exact rational coefficients.
// Canonical form: only nonzero coefficients are stored.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(const Rat& constant) {
        if (!constant.is_zero()) coeffs_[0] = constant;
    }
    explicit QPolynomial(const std::map<int, Rat>& coeffs) {
        for (const auto& [d, c] : coeffs) set(d, c);
    }

    static QPolynomial one() { return QPolynomial(Rat(1)); }
    static QPolynomial monomial(int degree, const Rat& c = Rat(1)) {
        QPolynomial p;
        p.set(degree, c);
        return p;
    }
    // t^{2a} + t^{2(a+1)} + ... + t^{2b}  (empty sum when b < a)
    static QPolynomial even_range(int a, int b) {
        QPolynomial p;
        for (int j = a; j <= b; ++j) p.set(2 * j, Rat(1));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Rat coeff(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    void set(int d, const Rat& c) {
        if (d < 0) throw std::invalid_argument("QPolynomial: negative degree");
        if (c.is_zero())
            coeffs_.erase(d);
        else
            coeffs_[d] = c;
    }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r = a;
        for (const auto& [d, c] : b.coeffs_) r.set(d, r.coeff(d) + c);
        return r;
    }
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r = a;
        for (const auto& [d, c] : b.coeffs_) r.set(d, r.coeff(d) - c);
        return r;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_)
                r.set(da + db, r.coeff(da + db) + ca * cb);
        return r;
    }
    QPolynomial operator*(const Rat& s) const {
        QPolynomial r;
        for (const auto& [d, c] : coeffs_) r.set(d, c * s);
        return r;
    }
    QPolynomial operator-() const { return *this * Rat(-1); }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) {
        return !(a == b);
    }

    // Exact division; nullopt when the division leaves a remainder.
    std::optional<QPolynomial> divide_exact(const QPolynomial& divisor) const;

    bool divisible_by(const QPolynomial& divisor) const {
        return divide_exact(divisor).has_value();
    }

    std::string str() const;

private:
    std::map<int, Rat> coeffs_;
};

// 1 - t^k
QPolynomial one_minus_tk(int k);

// coeff(i) == coeff(top - i) for 0 <= i <= top
bool palindrome_check(const QPolynomial& p, int top);

// Truncated power series: exact coefficients for degrees 0..order-1.
class QSeries {
public:
    QSeries(int order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        coeffs_.resize(order_, Rat(0));
    }
    explicit QSeries(int order) : order_(order), coeffs_(order, Rat(0)) {}

    int order() const { return order_; }
    Rat coeff(int d) const {
        return d >= 0 && d < order_ ? coeffs_[d] : Rat(0);
    }
    void set(int d, const Rat& c) {
        if (d >= 0 && d < order_) coeffs_[d] = c;
    }

    QSeries truncate(int new_order) const {
        std::vector<Rat> c(coeffs_.begin(),
                           coeffs_.begin() + std::min<int>(new_order, order_));
        return QSeries(new_order, std::move(c));
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    bool nonnegative() const {
        for (const auto& c : coeffs_)
            if (c.sign() < 0) return false;
        return true;
    }
    bool integral() const {
        for (const auto& c : coeffs_)
            if (!c.is_integer()) return false;
        return true;
    }

    std::string str() const;

private:
    int order_;
    std::vector<Rat> coeffs_;
};

// Ratio num / (prod_k (1-t^k)^{e_k} * extra). The extra polynomial factor is
// the fallback for denominators that do not split into (1-t^k) factors; it is
// kept with constant term 1.
class QRationalFunction {
public:
    QRationalFunction() : num_(QPolynomial::one()) {}
    explicit QRationalFunction(QPolynomial num) : num_(std::move(num)) {}
    QRationalFunction(QPolynomial num, std::map<int, int> den_factors)
        : num_(std::move(num)), den_factors_(std::move(den_factors)) {
        prune();
    }

    static QRationalFunction zero() { return QRationalFunction(QPolynomial()); }
    static QRationalFunction one() { return QRationalFunction(QPolynomial::one()); }
    // num / den with an arbitrary polynomial denominator, den(0) != 0.
    static QRationalFunction from_fraction(QPolynomial num, QPolynomial den);

    const QPolynomial& numerator() const { return num_; }
    const std::map<int, int>& denominator_factors() const { return den_factors_; }
    const QPolynomial& denominator_extra() const { return den_extra_; }
    QPolynomial denominator_expanded() const;

    bool is_zero() const { return num_.is_zero(); }

    friend QRationalFunction operator+(const QRationalFunction& a,
                                       const QRationalFunction& b);
    friend QRationalFunction operator-(const QRationalFunction& a,
                                       const QRationalFunction& b);
    friend QRationalFunction operator*(const QRationalFunction& a,
                                       const QRationalFunction& b);
    // Division; the divisor must be nonzero with nonzero constant term.
    friend QRationalFunction operator/(const QRationalFunction& a,
                                       const QRationalFunction& b);
    QRationalFunction operator*(const QPolynomial& p) const;
    QRationalFunction operator*(const Rat& s) const;
    QRationalFunction operator-() const { return *this * Rat(-1); }

    // Equality of rational functions by exact cross-multiplication.
    friend bool operator==(const QRationalFunction& a,
                           const QRationalFunction& b) {
        return (a.num_ * b.denominator_expanded()) ==
               (b.num_ * a.denominator_expanded());
    }
    friend bool operator!=(const QRationalFunction& a,
                           const QRationalFunction& b) {
        return !(a == b);
    }

    // Formal expansion to the requested order; exact coefficients.
    QSeries expand(int order) const;

    bool is_polynomial() const { return as_polynomial().has_value(); }
    std::optional<QPolynomial> as_polynomial() const;
    // Throws std::domain_error when the reduced form is not a polynomial.
    QPolynomial to_polynomial(const std::string& what = "") const;

    // Cancels (1-t^k) denominator factors dividing the numerator and tries to
    // absorb the extra denominator into (1-t^k) form.
    QRationalFunction simplified() const;

    std::string str() const;

private:
    QPolynomial num_;
    std::map<int, int> den_factors_;     // k -> exponent of (1-t^k)
    QPolynomial den_extra_ = QPolynomial::one();

    void prune() {
        for (auto it = den_factors_.begin(); it != den_factors_.end();)
            it = it->second == 0 ? den_factors_.erase(it) : std::next(it);
    }
};

// Finite matrix group acting on graded generators of an (even-)graded ring.
// Element matrices are indexed consistently with `generator_degrees`.
struct GradedAction {
    std::vector<int> generator_degrees;
    std::vector<std::vector<std::vector<Rat>>> elements; // list of square matrices

    static GradedAction trivial(std::vector<int> degrees);

    std::size_t size() const { return elements.size(); }
    // Throws std::invalid_argument when elements are not a group closed under
    // multiplication, some matrix is singular, or the grading is not preserved.
    void validate() const;
};

// Molien average (1/|F|) sum_g prod_blocks det(I - t^{d} g_d)^{-1},
// normalized into (1-t^k)-factor form when possible. `element_factors`, when
// given, multiplies the g-th summand by a polynomial (used for the truncated
// ambient factor of projective-space computations).
QRationalFunction molien(const GradedAction& action);
QRationalFunction molien(const GradedAction& action,
                         const std::vector<QPolynomial>& element_factors);

} // namespace kirwan
