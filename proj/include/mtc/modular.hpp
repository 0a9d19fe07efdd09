#ifndef MTC_MODULAR_HPP
#define MTC_MODULAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/matrix.hpp"
#include "mtc/report.hpp"
#include "mtc/tordet.hpp"

namespace mtc {

// Modular data in the unnormalized convention: S̃ = √D · S keeps every
// entry inside Q(ζ_M), with S̃[0][0] = 1 and S̃[0][i] the categorical
// dimensions. Twists are stored as integer exponents of ζ_M.
struct ModularData {
    std::string name;
    long conductor = 1;
    FusionRing ring;
    std::vector<long> twists;  // θ_i = ζ_M^{t_i}, values kept in [0, M)
    Mat<Cyclo> smat;

    ModularData(std::string name_, long conductor_, FusionRing ring_, std::vector<long> twists_,
                Mat<Cyclo> smat_);

    std::size_t rank() const { return ring.rank(); }
    Cyclo twist_value(std::size_t i) const { return Cyclo::zeta(conductor, twists[i]); }
};

// All data-level invariants, exactly: ring axioms, transitivity, unit
// twist, S̃ symmetry, S̃² = D·C with C a permutation involution (matched
// against the declared duality when present), (S̃T)³ = p⁺·S̃²,
// p⁺p⁻ = D, positivity of D, and the Verlinde reconstruction of the
// fusion rules from S̃.
Report verify_modular(const ModularData& md);

// D = Σ S̃[0][i]²
Cyclo global_dimension(const ModularData& md);

// p± = Σ d(X_i)² θ_i^{±1}
std::pair<Cyclo, Cyclo> gauss_sums(const ModularData& md);

struct CentralCharge {
    Rational value;  // representative of c mod 8 in [0, 8)
    enum class Method { exact_sqrt, mod4_plus_numeric } method = Method::exact_sqrt;
};

// c with e^{πic/4} = p⁺/√D, the positive real square root. p⁺/p⁻ pins c
// mod 4 exactly; the mod-8 lift uses the exact square root
// p⁺·ζ_{2L}^{-e} of D (available whenever p⁺/p⁻ = ζ_L^e), falling back
// to a numeric resolution between c and c+4 otherwise. Throws
// std::domain_error on degenerate (non-modular) data.
CentralCharge central_charge(const ModularData& md);

// orders n_i of the twists; n_i = M / gcd(M, t_i)
std::vector<long> twist_orders(const ModularData& md);
long twist_order_lcm(const ModularData& md);

struct BraidingEigenvalue {
    long exponent;              // β²_{XY} acts by ζ_M^{exponent} on the Z block
    std::int64_t multiplicity;  // N[X][Y][Z]
    std::size_t source;         // Z
};

// Spectrum of β²_{XY}: the twist relation θ_{X⊗Y} = (θ_X⊗θ_Y)β⁻² gives
// eigenvalue θ_Z/(θ_X θ_Y) = ζ_M^{t_Z - t_X - t_Y} on the Z-isotypic
// block, with multiplicity N[X][Y][Z].
std::vector<BraidingEigenvalue> braiding_spectrum(const ModularData& md, std::size_t x,
                                                  std::size_t y);

// Smallest N with (β²)^N = 1: the lcm of the orders of all braiding
// eigenvalues over admissible triples.
long exponent(const ModularData& md);

// row 0 of S̃, as an exact dimension function
DimensionFunction categorical_dims(const ModularData& md);

// The Frobenius-Perron dimension function, identified exactly as the
// unique column character i ↦ S̃[i][j]/S̃[0][j] of S̃ with all values
// positive; cross-checked against fp_dims numerically and against the
// ring homomorphism property exactly. Throws std::runtime_error when no
// positive column exists.
DimensionFunction fp_exact(const ModularData& md, double tolerance = 1e-8);

// D^{5/2} divisibility verdicts (Vafa bound): for n the lcm of twist
// orders and for each n_i separately, tests D⁵/n² ∈ A. Squaring is valid
// because the algebraic integers are integrally closed.
Report vafa_divisibility(const ModularData& md);

// d(X_i) divides D^{1/2}, tested as D/d(X_i)² ∈ A.
Report dim_divisibility(const ModularData& md);

// θ_X^{d(X)·D²} = 1 and (z|_X)^{d(X)·D²} = 1 in the torsion model, per
// simple X, with D = Σ d(Z)² for the supplied dimension function.
Report theta_power_identity(const ModularData& md, const DimensionFunction& d);

// det(β²_{XY})^D = 1 in the torsion model for every pair (X, Y), the
// determinant taken via the block-scalar automorphism of X⊗Y.
Report det_beta_identity(const ModularData& md, const DimensionFunction& d);

// det(T)¹² = e^{πicN} as exact roots of unity.
CheckResult detT_identity(const ModularData& md, const CentralCharge& charge);

// cND^{5/2}/2 ∈ A, tested after squaring.
CheckResult charge_integrality(const ModularData& md, const CentralCharge& charge);

// orders of the Casimir values z_i = θ_i²
std::vector<long> casimir_orders(const ModularData& md);

// ζ_M ↦ ζ_M^a applied to S̃ and the twists (gcd(a, M) = 1).
ModularData galois_transform(const ModularData& md, long a);

struct VafaReportOptions {
    bool categorical = true;
    bool frobenius_perron = true;
    double tolerance = 1e-10;
};

// Aggregated verification battery over one dataset.
struct VafaReport {
    std::string name;
    std::size_t num_simples = 0;
    std::string global_dimension_exact;
    double global_dimension_numeric = 0.0;
    std::vector<long> twist_orders;
    long twist_order_lcm = 1;
    std::optional<Rational> central_charge;  // absent when not determinable
    std::string central_charge_method;
    long exponent = 1;
    std::vector<long> casimir_orders;
    Report checks;
};

VafaReport build_vafa_report(const ModularData& md, const VafaReportOptions& options = {});

}  // namespace mtc

#endif
