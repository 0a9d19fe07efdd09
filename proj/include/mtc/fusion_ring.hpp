#ifndef MTC_FUSION_RING_HPP
#define MTC_FUSION_RING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtc/cyclotomic.hpp"

namespace mtc {

struct AxiomViolation {
    std::string constraint;  // which invariant failed
    std::string detail;      // indices involved, human readable
};

// Frobenius-Perron data of a transitive ring: per-basis dimensions, the
// regular element in the basis (normalized so its unit component is 1),
// the Perron eigenvalue of multiplication by the basis sum, the category
// dimension sum(dims^2) and the worst homomorphism defect.
struct FPData {
    std::vector<double> dims;
    std::vector<double> regular;
    double perron_eigenvalue = 0.0;
    double fp_dim_category = 0.0;
    double residual = 0.0;
};

// A ring homomorphism K0 -> C given by its exact values on the basis.
struct DimensionFunction {
    std::string name;  // "categorical" | "frobenius-perron" | custom
    std::vector<Cyclo> values;
};

// Finite Z+-ring with a distinguished basis: nonnegative integer
// structure constants N[a][b][c], a unit, and an optional duality
// involution.
class FusionRing {
 public:
    FusionRing(std::vector<std::string> basis_names, std::size_t unit,
               std::vector<std::int64_t> tensor,
               std::optional<std::vector<std::size_t>> dual = std::nullopt);

    static FusionRing from_sparse(std::vector<std::string> basis_names, std::size_t unit,
                                  const std::vector<std::array<std::int64_t, 4>>& fusion,
                                  std::optional<std::vector<std::size_t>> dual = std::nullopt);

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t unit() const { return unit_; }
    const std::optional<std::vector<std::size_t>>& dual() const { return dual_; }

    std::int64_t coeff(std::size_t a, std::size_t b, std::size_t c) const {
        return tensor_[(a * names_.size() + b) * names_.size() + c];
    }

    // nonzero structure constants as sorted (a, b, c, N) quadruples
    std::vector<std::array<std::int64_t, 4>> sparse_tensor() const;

    // Empty iff the Z+-ring axioms hold; violations are data, not errors.
    std::vector<AxiomViolation> verify_axioms() const;

    // For every pair (X, Z) some XY1 and some Y2X involve Z.
    bool is_transitive() const;

    // Perron data by power iteration. Throws std::invalid_argument on a
    // non-transitive ring and std::runtime_error when the iteration does
    // not reach the tolerance within the budget.
    FPData fp_dims(double tolerance = 1e-10, long budget = 1000000) const;

    // XR = d(X)R and RY = d(Y)R entrywise within tolerance.
    bool regular_check(const FPData& fp, double tolerance) const;

    // d(unit) = 1, exact multiplicativity, and d not identically zero.
    bool dimension_function_check(const DimensionFunction& d) const;

 private:
    std::vector<std::string> names_;
    std::size_t unit_;
    std::vector<std::int64_t> tensor_;
    std::optional<std::vector<std::size_t>> dual_;
};

struct PerronResult {
    double value = 0.0;
    std::vector<double> eigenvector;
    long iterations = 0;
    bool converged = false;
};

// Power iteration for the maximal nonnegative eigenvalue of a matrix
// with nonnegative entries. Runs on the matrix itself first and retries
// on A + I when the unshifted iteration stalls (periodic spectra).
PerronResult perron_eigenpair(const std::vector<std::vector<double>>& matrix,
                              std::vector<double> start, double tolerance, long budget);

}  // namespace mtc

#endif
