#include "mtc/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mtc {

FusionRing::FusionRing(std::vector<std::string> basis_names, std::size_t unit,
                       std::vector<std::int64_t> tensor,
                       std::optional<std::vector<std::size_t>> dual)
    : names_(std::move(basis_names)), unit_(unit), tensor_(std::move(tensor)), dual_(std::move(dual)) {
    const std::size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("fusion ring needs at least one basis element");
    if (unit_ >= n) throw std::invalid_argument("unit index out of range");
    if (tensor_.size() != n * n * n) throw std::invalid_argument("tensor must have rank^3 entries");
    if (dual_) {
        if (dual_->size() != n) throw std::invalid_argument("dual involution must cover the basis");
        for (std::size_t idx : *dual_)
            if (idx >= n) throw std::invalid_argument("dual index out of range");
    }
}

FusionRing FusionRing::from_sparse(std::vector<std::string> basis_names, std::size_t unit,
                                   const std::vector<std::array<std::int64_t, 4>>& fusion,
                                   std::optional<std::vector<std::size_t>> dual) {
    const std::size_t n = basis_names.size();
    std::vector<std::int64_t> tensor(n * n * n, 0);
    for (const auto& quad : fusion) {
        const auto [a, b, c, value] = quad;
        if (a < 0 || b < 0 || c < 0 || a >= static_cast<std::int64_t>(n) ||
            b >= static_cast<std::int64_t>(n) || c >= static_cast<std::int64_t>(n))
            throw std::invalid_argument("fusion quadruple index out of range");
        if (value <= 0) throw std::invalid_argument("fusion quadruple multiplicity must be positive");
        auto& slot = tensor[(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
                            static_cast<std::size_t>(c)];
        if (slot != 0) throw std::invalid_argument("duplicate fusion quadruple");
        slot = value;
    }
    return FusionRing(std::move(basis_names), unit, std::move(tensor), std::move(dual));
}

std::vector<std::array<std::int64_t, 4>> FusionRing::sparse_tensor() const {
    std::vector<std::array<std::int64_t, 4>> out;
    const std::int64_t n = static_cast<std::int64_t>(rank());
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c) {
                const std::int64_t value = coeff(a, b, c);
                if (value != 0) out.push_back({a, b, c, value});
            }
    return out;
}

std::vector<AxiomViolation> FusionRing::verify_axioms() const {
    std::vector<AxiomViolation> violations;
    const std::size_t n = rank();
    auto index_str = [&](std::initializer_list<std::size_t> idx) {
        std::ostringstream out;
        out << "(";
        bool first = true;
        for (std::size_t i : idx) {
            if (!first) out << ",";
            out << names_[i];
            first = false;
        }
        out << ")";
        return out.str();
    };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (coeff(a, b, c) < 0)
                    violations.push_back({"nonnegative", "N" + index_str({a, b, c}) + " < 0"});

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::int64_t expected = (a == b) ? 1 : 0;
            if (coeff(unit_, a, b) != expected)
                violations.push_back({"unit_left", "N" + index_str({unit_, a, b})});
            if (coeff(a, unit_, b) != expected)
                violations.push_back({"unit_right", "N" + index_str({a, unit_, b})});
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < n; ++e) lhs += coeff(a, b, e) * coeff(e, c, d);
                    for (std::size_t f = 0; f < n; ++f) rhs += coeff(b, c, f) * coeff(a, f, d);
                    if (lhs != rhs) {
                        std::ostringstream detail;
                        detail << "((ab)c vs a(bc)) at " << index_str({a, b, c, d}) << ": " << lhs
                               << " != " << rhs;
                        violations.push_back({"associativity", detail.str()});
                    }
                }

    if (dual_) {
        const auto& dual = *dual_;
        for (std::size_t a = 0; a < n; ++a)
            if (dual[dual[a]] != a)
                violations.push_back({"dual_involution", "dual(dual " + names_[a] + ") != " + names_[a]});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const std::int64_t expected = (b == dual[a]) ? 1 : 0;
                if (coeff(a, b, unit_) != expected)
                    violations.push_back({"dual_unit", "N" + index_str({a, b, unit_}) + " != " +
                                                           std::to_string(expected)});
            }
    }
    return violations;
}

bool FusionRing::is_transitive() const {
    const std::size_t n = rank();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
            bool left = false, right = false;
            for (std::size_t y = 0; y < n && !(left && right); ++y) {
                left = left || coeff(x, y, z) > 0;
                right = right || coeff(y, x, z) > 0;
            }
            if (!left || !right) return false;
        }
    return true;
}

PerronResult perron_eigenpair(const std::vector<std::vector<double>>& matrix,
                              std::vector<double> start, double tolerance, long budget) {
    const std::size_t n = matrix.size();
    PerronResult result;
    result.eigenvector = std::move(start);
    if (result.eigenvector.size() != n) throw std::invalid_argument("start vector size mismatch");

    auto run = [&](double shift, long iterations) {
        std::vector<double>& v = result.eigenvector;
        double norm = *std::max_element(v.begin(), v.end());
        if (norm <= 0) throw std::invalid_argument("start vector must be positive");
        for (double& x : v) x /= norm;
        std::vector<double> next(n);
        for (long it = 0; it < iterations; ++it) {
            double rayleigh_num = 0.0, rayleigh_den = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double acc = shift * v[i];
                const auto& row = matrix[i];
                for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
                next[i] = acc;
                rayleigh_num += acc * v[i];
                rayleigh_den += v[i] * v[i];
            }
            const double lambda = rayleigh_num / rayleigh_den;
            double defect = 0.0;
            for (std::size_t i = 0; i < n; ++i) defect = std::max(defect, std::abs(next[i] - lambda * v[i]));
            ++result.iterations;
            if (defect <= tolerance * std::max(1.0, std::abs(lambda))) {
                result.value = lambda - shift;
                result.converged = true;
                return;
            }
            norm = *std::max_element(next.begin(), next.end());
            if (norm <= 0.0) {  // nilpotent directions collapsed to zero
                result.value = 0.0 - shift;
                result.converged = true;
                return;
            }
            for (std::size_t i = 0; i < n; ++i) v[i] = next[i] / norm;
        }
    };

    // Unshifted first; a periodic matrix (e.g. a permutation) makes the
    // iteration oscillate, in which case A + I has the same Perron vector
    // with eigenvalue shifted by one and a primitive diagonal.
    const long first_leg = std::min<long>(budget / 2, 20000);
    run(0.0, first_leg);
    if (!result.converged) run(1.0, budget - first_leg);
    return result;
}

FPData FusionRing::fp_dims(double tolerance, long budget) const {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!is_transitive()) throw std::invalid_argument("fp_dims requires a transitive ring");
    const std::size_t n = rank();
    FPData fp;
    fp.dims.resize(n);

    // Tighter target for the eigen-solves so the residual and the
    // regular/dims coincidence stay within the caller's tolerance.
    const double inner_tol = tolerance / 100.0;

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::vector<double>> mult(n, std::vector<double>(n));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) mult[y][z] = static_cast<double>(coeff(x, y, z));
        PerronResult pr = perron_eigenpair(mult, std::vector<double>(n, 1.0), inner_tol, budget);
        if (!pr.converged)
            throw std::runtime_error("power iteration for d+(" + names_[x] +
                                     ") did not converge within budget");
        fp.dims[x] = pr.value;
    }

    std::vector<std::vector<double>> right_sum(n, std::vector<double>(n, 0.0));
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y) {
            double acc = 0.0;
            for (std::size_t x = 0; x < n; ++x) acc += static_cast<double>(coeff(y, x, z));
            right_sum[z][y] = acc;
        }
    PerronResult reg = perron_eigenpair(right_sum, std::vector<double>(n, 1.0), inner_tol, budget);
    if (!reg.converged)
        throw std::runtime_error("power iteration for the regular element did not converge");
    fp.perron_eigenvalue = reg.value;
    fp.regular = reg.eigenvector;
    if (fp.regular[unit_] <= 0.0)
        throw std::runtime_error("regular element has non-positive unit component");
    const double unit_scale = fp.regular[unit_];
    for (double& r : fp.regular) r /= unit_scale;

    double scale = 1.0;
    for (double d : fp.dims) scale = std::max(scale, d);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(fp.regular[i] - fp.dims[i]) > tolerance * scale)
            throw std::runtime_error("regular element does not match the dimension vector at " +
                                     names_[i]);

    fp.fp_dim_category = 0.0;
    for (double d : fp.dims) fp.fp_dim_category += d * d;

    fp.residual = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            double sum = 0.0;
            for (std::size_t z = 0; z < n; ++z) sum += static_cast<double>(coeff(x, y, z)) * fp.dims[z];
            fp.residual = std::max(fp.residual, std::abs(fp.dims[x] * fp.dims[y] - sum));
        }
    if (fp.residual >= tolerance)
        throw std::runtime_error("Frobenius-Perron homomorphism residual " +
                                 std::to_string(fp.residual) + " exceeds tolerance");
    return fp;
}

bool FusionRing::regular_check(const FPData& fp, double tolerance) const {
    const std::size_t n = rank();
    if (fp.dims.size() != n || fp.regular.size() != n) return false;
    double scale = 1.0;
    for (double d : fp.dims) scale = std::max(scale, std::abs(d));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
            double left = 0.0, right = 0.0;
            for (std::size_t y = 0; y < n; ++y) {
                left += static_cast<double>(coeff(x, y, z)) * fp.regular[y];
                right += fp.regular[y] * static_cast<double>(coeff(y, x, z));
            }
            if (std::abs(left - fp.dims[x] * fp.regular[z]) > tolerance * scale * scale) return false;
            if (std::abs(right - fp.dims[x] * fp.regular[z]) > tolerance * scale * scale) return false;
        }
    return true;
}

bool FusionRing::dimension_function_check(const DimensionFunction& d) const {
    const std::size_t n = rank();
    if (d.values.size() != n) return false;
    if (!(d.values[unit_] == Cyclo(1))) return false;
    bool nonzero = false;
    for (const auto& v : d.values) nonzero = nonzero || !v.is_zero();
    if (!nonzero) return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Cyclo rhs;
            for (std::size_t z = 0; z < n; ++z) {
                const std::int64_t mult = coeff(x, y, z);
                if (mult != 0) rhs += Cyclo(mult) * d.values[z];
            }
            if (!(d.values[x] * d.values[y] == rhs)) return false;
        }
    return true;
}

}  // namespace mtc
