#ifndef MTC_POLYNOMIAL_HPP
#define MTC_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/rational.hpp"

namespace mtc {

// Polynomial over the rationals, coefficients lowest degree first.
// The zero polynomial is the empty coefficient vector.
class Poly {
 public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Poly(const Rational& constant) : c_{constant} { normalize(); }

    // x^n with optional scale
    static Poly monomial(std::size_t n, const Rational& scale = Rational(1)) {
        std::vector<Rational> c(n + 1);
        c[n] = scale;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool has_integer_coeffs() const {
        for (const auto& c : c_)
            if (!is_integer(c)) return false;
        return true;
    }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    // Euclidean division; exact over Q.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = a.c_;
        const long db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<Rational> quot(a.degree() - db + 1);
        for (long i = a.degree(); i >= db; --i) {
            Rational q = rem[i] / b.leading();
            if (q == 0) continue;
            quot[i - db] = q;
            for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

 private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace mtc

#endif
