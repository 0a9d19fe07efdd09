#include "mtc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

long euler_phi(long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi of non-positive integer");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long m) {
    std::vector<long> out;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Poly& cyclotomic_polynomial(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m <= 0) throw std::invalid_argument("cyclotomic polynomial of non-positive order");

    // Φ_m = (x^m - 1) / prod_{d | m, d < m} Φ_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (long d : divisors(m)) {
        if (cache.count(d)) continue;
        std::vector<Rational> xm(d + 1);
        xm[0] = -1;
        xm[d] = 1;
        Poly num(std::move(xm));
        for (long e : divisors(d)) {
            if (e == d) continue;
            auto [q, r] = divmod(num, cache.at(e));
            if (!r.is_zero()) throw std::logic_error("cyclotomic polynomial division not exact");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

namespace {

// Reduces a coefficient vector of arbitrary length modulo Φ_M and pads
// to length φ(M).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> c, long m) {
    const Poly& phi = cyclotomic_polynomial(m);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i] == 0) continue;
        const Rational top = c[i];
        for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= top * phi.coeff(j);
    }
    c.resize(deg);
    return c;
}

// In-place multiply by ζ_M followed by reduction; `c` has length φ(M).
void shift_reduce(std::vector<Rational>& c, long m) {
    const Poly& phi = cyclotomic_polynomial(m);
    const std::size_t deg = c.size();
    Rational top = c[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    if (top != 0)
        for (std::size_t j = 0; j < deg; ++j) c[j] -= top * phi.coeff(j);
}

}  // namespace

Cyclo Cyclo::zeta(long conductor, long exponent) {
    if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
    const long k = mod_long(exponent, conductor);
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[k] = 1;
    return Cyclo(conductor, reduce_mod_phi(std::move(c), conductor));
}

Cyclo Cyclo::from_coeffs(long conductor, std::vector<Rational> coeffs) {
    if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(conductor))
        throw std::invalid_argument("coefficient vector length must equal phi(conductor)");
    return Cyclo(conductor, std::move(coeffs));
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
}

Cyclo Cyclo::lifted_to(long target) const {
    if (target == conductor_) return *this;
    if (target <= 0 || target % conductor_ != 0)
        throw std::invalid_argument("lift target must be a multiple of the conductor");
    const long stretch = target / conductor_;
    std::vector<Rational> c(static_cast<std::size_t>((coeffs_.size() - 1) * stretch) + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * stretch] = coeffs_[j];
    return Cyclo(target, reduce_mod_phi(std::move(c), target));
}

std::optional<Cyclo> Cyclo::descended_to(long target) const {
    if (target == conductor_) return *this;
    if (target <= 0 || conductor_ % target != 0)
        throw std::invalid_argument("descent target must divide the conductor");
    const long phi_target = euler_phi(target);
    const long phi_self = euler_phi(conductor_);
    Mat<Rational> basis(phi_self, phi_target);
    for (long j = 0; j < phi_target; ++j) {
        const Cyclo lifted = Cyclo::zeta(target, j).lifted_to(conductor_);
        for (long i = 0; i < phi_self; ++i) basis(i, j) = lifted.coeffs_[i];
    }
    auto solution = solve_linear(basis, coeffs_);
    if (!solution) return std::nullopt;
    return Cyclo(target, std::move(*solution));
}

Cyclo Cyclo::galois(long a) const {
    const long m = conductor_;
    if (std::gcd(mod_long(a, m), m) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    std::vector<Rational> c(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        c[mod_long(static_cast<long>(j) * a, m)] += coeffs_[j];
    return Cyclo(m, reduce_mod_phi(std::move(c), m));
}

Cyclo Cyclo::conj() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    const long m = lcm_long(a.conductor_, b.conductor_);
    Cyclo x = a.lifted_to(m), y = b.lifted_to(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    const long m = lcm_long(a.conductor_, b.conductor_);
    Cyclo x = a.lifted_to(m), y = b.lifted_to(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const long m = lcm_long(a.conductor_, b.conductor_);
    const Cyclo x = a.lifted_to(m), y = b.lifted_to(m);
    std::vector<Rational> c(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            c[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return Cyclo(m, reduce_mod_phi(std::move(c), m));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    const long m = lcm_long(a.conductor_, b.conductor_);
    return a.lifted_to(m).coeffs_ == b.lifted_to(m).coeffs_;
}

Mat<Rational> mult_matrix(const Cyclo& a) {
    const long phi = static_cast<long>(a.coeffs().size());
    Mat<Rational> m(phi, phi);
    std::vector<Rational> col = a.coeffs();
    for (long j = 0; j < phi; ++j) {
        for (long i = 0; i < phi; ++i) m(i, j) = col[i];
        if (j + 1 < phi) shift_reduce(col, a.conductor());
    }
    return m;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic number");
    std::vector<Rational> one(coeffs_.size());
    one[0] = 1;
    auto x = solve_linear(mult_matrix(*this), std::move(one));
    if (!x) throw std::logic_error("multiplication matrix of a nonzero element is singular");
    return Cyclo(conductor_, std::move(*x));
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc(1);
    Cyclo base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::complex<double> Cyclo::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        acc += to_double(coeffs_[j]) * std::polar(1.0, step * static_cast<double>(j));
    }
    return acc;
}

Poly char_poly(const Cyclo& a) {
    // Faddeev-LeVerrier on the multiplication matrix; all divisions are
    // by integers, so the computation stays in Q.
    const Mat<Rational> A = mult_matrix(a);
    const std::size_t n = A.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Mat<Rational> M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        M = A * M;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += M(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    // note: loop order computes M_k = A(M_{k-1} + c_{n-k+1} I), trace of
    // which is tr(A M_k) in the usual statement of the recurrence
    return Poly(std::move(c));
}

bool is_algebraic_integer(const Cyclo& a) {
    return char_poly(a).has_integer_coeffs();
}

std::optional<RootOfUnity> as_root_of_unity(const Cyclo& a) {
    const long m = a.conductor();
    const long modulus = lcm_long(2, m);
    std::vector<Rational> power(a.coeffs().size());
    power[0] = 1;
    for (long k = 0; k < m; ++k) {
        long exponent = -1;
        if (power == a.coeffs()) {
            exponent = mod_long(k * (modulus / m), modulus);
        } else {
            bool negated = true;
            for (std::size_t i = 0; i < power.size(); ++i)
                if (a.coeffs()[i] != -power[i]) {
                    negated = false;
                    break;
                }
            if (negated) exponent = mod_long(k * (modulus / m) + modulus / 2, modulus);
        }
        if (exponent >= 0) {
            const long order = modulus / std::gcd(modulus, exponent);
            return RootOfUnity{order, modulus, exponent};
        }
        shift_reduce(power, m);
    }
    return std::nullopt;
}

bool is_totally_positive(const Cyclo& a, double tol) {
    const long m = a.conductor();
    if (std::abs(a.embed().imag()) > tol) return false;
    for (long g = 1; g < std::max(m, 2L); ++g) {
        if (std::gcd(g, m) != 1) continue;
        const std::complex<double> value = a.galois(g).embed();
        if (std::abs(value.imag()) <= tol && value.real() <= tol) return false;
    }
    return true;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        Rational c = coeffs_[j];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit_coeff = (c == 1);
        if (j == 0 || !unit_coeff) out << rational_to_string(c);
        if (j > 0) {
            if (!unit_coeff) out << "*";
            out << "z" << conductor_;
            if (j > 1) out << "^" << j;
        }
    }
    return out.str();
}

std::string to_string(const Cyclo& a) { return a.str(); }

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j] == 0) continue;
        Rational c = c_[j];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit_coeff = (c == 1);
        if (j == 0 || !unit_coeff) out << rational_to_string(c);
        if (j > 0) {
            out << var;
            if (j > 1) out << "^" << j;
        }
    }
    return out.str();
}

}  // namespace mtc
