#ifndef MTC_CYCLOTOMIC_HPP
#define MTC_CYCLOTOMIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mtc/matrix.hpp"
#include "mtc/polynomial.hpp"
#include "mtc/rational.hpp"

namespace mtc {

long euler_phi(long m);
std::vector<long> divisors(long m);

// Φ_m, the m-th cyclotomic polynomial (monic, integer coefficients).
// Computed by dividing x^m - 1 by the Φ_d of the proper divisors; cached.
const Poly& cyclotomic_polynomial(long m);

// An element of Q(ζ_M) in the power basis 1, ζ, ..., ζ^{φ(M)-1}, kept
// fully reduced modulo Φ_M. Values are immutable; mixed-conductor
// arithmetic lifts both operands to the lcm conductor.
class Cyclo {
 public:
    Cyclo() : conductor_(1), coeffs_(1) {}
    Cyclo(long value) : conductor_(1), coeffs_{Rational(value)} {}
    Cyclo(const Rational& value) : conductor_(1), coeffs_{value} {}

    // ζ_conductor^exponent
    static Cyclo zeta(long conductor, long exponent = 1);
    // coefficient vector must have length φ(conductor)
    static Cyclo from_coeffs(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // throws std::domain_error unless is_rational()
    Rational rational_value() const;

    // conductor() must divide target
    Cyclo lifted_to(long target) const;
    // target must divide conductor(); nullopt when the element does not
    // lie in the subfield
    std::optional<Cyclo> descended_to(long target) const;
    // ζ ↦ ζ^a for gcd(a, conductor) = 1
    Cyclo galois(long a) const;
    // complex conjugation ζ ↦ ζ^{-1}
    Cyclo conj() const;

    Cyclo inverse() const;  // throws std::domain_error on zero
    Cyclo pow(long e) const;

    std::complex<double> embed() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);

    std::string str() const;

 private:
    Cyclo(long conductor, std::vector<Rational> reduced)
        : conductor_(conductor), coeffs_(std::move(reduced)) {}

    long conductor_;
    std::vector<Rational> coeffs_;
};

// Matrix of multiplication by a on Q(ζ_M) in the power basis.
Mat<Rational> mult_matrix(const Cyclo& a);

// Characteristic polynomial of mult_matrix(a); monic of degree φ(M).
Poly char_poly(const Cyclo& a);

// True iff a is an algebraic integer. The characteristic polynomial of
// the multiplication operator is a power of the minimal polynomial, and
// by Gauss's lemma a power of a monic rational polynomial has integer
// coefficients iff the polynomial itself does, so testing char_poly
// suffices.
bool is_algebraic_integer(const Cyclo& a);

struct RootOfUnity {
    long order;     // multiplicative order
    long modulus;   // L = lcm(2, conductor)
    long exponent;  // value = ζ_modulus^exponent, 0 <= exponent < modulus
};

// Detects a = ±ζ_M^k exactly; the roots of unity of Q(ζ_M) are exactly
// these 2M candidates.
std::optional<RootOfUnity> as_root_of_unity(const Cyclo& a);

// All real embeddings strictly positive (checked numerically on the
// Galois conjugates); requires the element itself to embed as a real.
bool is_totally_positive(const Cyclo& a, double tol = 1e-9);

std::string to_string(const Cyclo& a);

}  // namespace mtc

#endif
