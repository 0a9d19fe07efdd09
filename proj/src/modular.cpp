#include "mtc/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

// representative of x mod m in [0, m)
Rational reduce_mod(const Rational& x, long m) {
    Rational q = x / Rational(m);
    mpz_class floor_q;
    mpz_fdiv_q(floor_q.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return x - Rational(m) * Rational(floor_q);
}

std::string cell_name(const ModularData& md, std::size_t i, std::size_t j) {
    return "(" + md.ring.names()[i] + "," + md.ring.names()[j] + ")";
}

// C with S̃² = D·C, provided it is a permutation involution.
std::optional<std::vector<std::size_t>> conjugation_permutation(const ModularData& md,
                                                                const Mat<Cyclo>& s_squared,
                                                                const Cyclo& dim, std::string* why) {
    const std::size_t n = md.rank();
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (s_squared(i, j).is_zero()) continue;
            if (perm[i] != n) {
                if (why) *why = "row " + md.ring.names()[i] + " of S̃² has multiple nonzero entries";
                return std::nullopt;
            }
            if (!(s_squared(i, j) == dim)) {
                if (why)
                    *why = "S̃²" + cell_name(md, i, j) + " = " + s_squared(i, j).str() +
                           ", expected D = " + dim.str();
                return std::nullopt;
            }
            perm[i] = j;
        }
        if (perm[i] == n) {
            if (why) *why = "row " + md.ring.names()[i] + " of S̃² vanishes";
            return std::nullopt;
        }
        if (hit[perm[i]]) {
            if (why) *why = "S̃²/D is not a permutation matrix";
            return std::nullopt;
        }
        hit[perm[i]] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (perm[perm[i]] != i) {
            if (why) *why = "charge conjugation is not an involution";
            return std::nullopt;
        }
    return perm;
}

}  // namespace

ModularData::ModularData(std::string name_, long conductor_, FusionRing ring_,
                         std::vector<long> twists_, Mat<Cyclo> smat_)
    : name(std::move(name_)),
      conductor(conductor_),
      ring(std::move(ring_)),
      twists(std::move(twists_)),
      smat(std::move(smat_)) {
    if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
    const std::size_t n = ring.rank();
    if (twists.size() != n) throw std::invalid_argument("twists must cover the basis");
    for (long t : twists)
        if (t < 0 || t >= conductor)
            throw std::invalid_argument("twist exponents must lie in [0, conductor)");
    if (smat.rows() != n || smat.cols() != n)
        throw std::invalid_argument("s-matrix must be rank x rank");
}

Cyclo global_dimension(const ModularData& md) {
    const std::size_t u = md.ring.unit();
    Cyclo total;
    for (std::size_t i = 0; i < md.rank(); ++i) total += md.smat(u, i) * md.smat(u, i);
    return total;
}

std::pair<Cyclo, Cyclo> gauss_sums(const ModularData& md) {
    const std::size_t u = md.ring.unit();
    Cyclo plus, minus;
    for (std::size_t i = 0; i < md.rank(); ++i) {
        const Cyclo d2 = md.smat(u, i) * md.smat(u, i);
        plus += d2 * Cyclo::zeta(md.conductor, md.twists[i]);
        minus += d2 * Cyclo::zeta(md.conductor, -md.twists[i]);
    }
    return {plus, minus};
}

std::vector<long> twist_orders(const ModularData& md) {
    std::vector<long> orders;
    orders.reserve(md.rank());
    for (long t : md.twists) orders.push_back(md.conductor / std::gcd(md.conductor, t));
    return orders;
}

long twist_order_lcm(const ModularData& md) {
    long n = 1;
    for (long o : twist_orders(md)) n = lcm_long(n, o);
    return n;
}

std::vector<BraidingEigenvalue> braiding_spectrum(const ModularData& md, std::size_t x,
                                                  std::size_t y) {
    std::vector<BraidingEigenvalue> out;
    for (std::size_t z = 0; z < md.rank(); ++z) {
        const std::int64_t mult = md.ring.coeff(x, y, z);
        if (mult == 0) continue;
        out.push_back({mod_long(md.twists[z] - md.twists[x] - md.twists[y], md.conductor), mult, z});
    }
    return out;
}

long exponent(const ModularData& md) {
    long n = 1;
    for (std::size_t x = 0; x < md.rank(); ++x)
        for (std::size_t y = 0; y < md.rank(); ++y)
            for (const auto& ev : braiding_spectrum(md, x, y))
                n = lcm_long(n, md.conductor / std::gcd(md.conductor, ev.exponent));
    return n;
}

std::vector<long> casimir_orders(const ModularData& md) {
    std::vector<long> orders;
    orders.reserve(md.rank());
    for (long t : md.twists) {
        const long e = mod_long(2 * t, md.conductor);
        orders.push_back(md.conductor / std::gcd(md.conductor, e));
    }
    return orders;
}

DimensionFunction categorical_dims(const ModularData& md) {
    DimensionFunction d;
    d.name = "categorical";
    const std::size_t u = md.ring.unit();
    for (std::size_t i = 0; i < md.rank(); ++i) d.values.push_back(md.smat(u, i));
    return d;
}

DimensionFunction fp_exact(const ModularData& md, double tolerance) {
    const std::size_t n = md.rank();
    const std::size_t u = md.ring.unit();
    const FPData fp = md.ring.fp_dims();
    for (std::size_t j = 0; j < n; ++j) {
        if (md.smat(u, j).is_zero()) continue;
        const Cyclo inv = md.smat(u, j).inverse();
        DimensionFunction d;
        d.name = "frobenius-perron";
        bool positive = true;
        for (std::size_t i = 0; i < n && positive; ++i) {
            d.values.push_back(md.smat(i, j) * inv);
            const auto value = d.values.back().embed();
            positive = std::abs(value.imag()) <= 1e-9 && value.real() > 0.0;
        }
        if (!positive) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(d.values[i].embed().real() - fp.dims[i]) > tolerance)
                throw std::runtime_error(
                    "positive s-matrix column disagrees with the Perron dimensions at " +
                    md.ring.names()[i]);
        if (!md.ring.dimension_function_check(d))
            throw std::runtime_error("positive s-matrix column is not a ring homomorphism");
        return d;
    }
    throw std::runtime_error("no positive s-matrix column: data is not modular or is corrupted");
}

Report verify_modular(const ModularData& md) {
    Report report;
    const std::size_t n = md.rank();
    const std::size_t u = md.ring.unit();

    const auto violations = md.ring.verify_axioms();
    if (violations.empty()) {
        report.add("ring.axioms", CheckStatus::pass);
    } else {
        std::ostringstream witness;
        witness << violations.size() << " violation(s); first: " << violations.front().constraint
                << " " << violations.front().detail;
        report.add("ring.axioms", CheckStatus::fail, witness.str());
    }
    report.add_outcome("ring.transitive", md.ring.is_transitive(),
                       "some basis element never reaches another");

    report.add_outcome("modular.unit_twist", md.twists[u] == 0,
                       "t_unit = " + std::to_string(md.twists[u]));
    report.add_outcome("modular.s_unit", md.smat(u, u) == Cyclo(1),
                       "S̃[unit][unit] = " + md.smat(u, u).str());

    {
        bool symmetric = true;
        std::string witness;
        for (std::size_t i = 0; i < n && symmetric; ++i)
            for (std::size_t j = i + 1; j < n && symmetric; ++j)
                if (!(md.smat(i, j) == md.smat(j, i))) {
                    symmetric = false;
                    witness = "S̃" + cell_name(md, i, j) + " = " + md.smat(i, j).str() +
                              " but S̃" + cell_name(md, j, i) + " = " + md.smat(j, i).str();
                }
        report.add_outcome("modular.s_symmetric", symmetric, witness);
    }

    const Cyclo dim = global_dimension(md);
    const Mat<Cyclo> s_squared = md.smat * md.smat;
    std::string why;
    const auto perm = conjugation_permutation(md, s_squared, dim, &why);
    report.add_outcome("modular.s_squared", perm.has_value(), why);
    if (perm && md.ring.dual()) {
        const bool match = std::equal(perm->begin(), perm->end(), md.ring.dual()->begin());
        report.add_outcome("modular.dual_match", match,
                           "charge conjugation from S̃² differs from the declared duality");
    }

    const auto [p_plus, p_minus] = gauss_sums(md);
    report.add_outcome("modular.gauss_nonzero", !p_plus.is_zero(), "p+ vanishes");
    report.add_outcome("modular.gauss_product", p_plus * p_minus == dim,
                       "p+·p- = " + (p_plus * p_minus).str() + ", D = " + dim.str());

    {
        Mat<Cyclo> st(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                st(i, j) = md.smat(i, j) * Cyclo::zeta(md.conductor, md.twists[j]);
        }
        const Mat<Cyclo> st3 = st * st * st;
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Cyclo want = p_plus * s_squared(i, j);
                if (!(st3(i, j) == want)) {
                    ok = false;
                    witness = "cell " + cell_name(md, i, j) + ": (S̃T)³ = " + st3(i, j).str() +
                              ", p⁺·S̃² = " + want.str();
                }
            }
        report.add_outcome("modular.st_cubed", ok, witness);
    }

    if (!perm) {
        report.add("modular.verlinde", CheckStatus::unsupported,
                   "requires S̃² = D·C with C a permutation");
    } else if (dim.is_zero()) {
        report.add("modular.verlinde", CheckStatus::fail, "global dimension vanishes");
    } else {
        bool degenerate = false;
        std::vector<Cyclo> inv_unit_row(n);
        for (std::size_t x = 0; x < n; ++x) {
            if (md.smat(u, x).is_zero()) {
                degenerate = true;
                break;
            }
            inv_unit_row[x] = md.smat(u, x).inverse();
        }
        if (degenerate) {
            report.add("modular.verlinde", CheckStatus::fail, "a unit-row entry of S̃ vanishes");
        } else {
            const Cyclo inv_dim = dim.inverse();
            bool ok = true;
            std::string witness;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n && ok; ++b)
                    for (std::size_t c = 0; c < n && ok; ++c) {
                        Cyclo acc;
                        for (std::size_t x = 0; x < n; ++x)
                            acc += md.smat(a, x) * md.smat(b, x) * md.smat((*perm)[c], x) *
                                   inv_unit_row[x];
                        acc *= inv_dim;
                        if (!(acc == Cyclo(md.ring.coeff(a, b, c)))) {
                            ok = false;
                            witness = "N" + cell_name(md, a, b) + "->" + md.ring.names()[c] +
                                      ": Verlinde gives " + acc.str() + ", tensor has " +
                                      std::to_string(md.ring.coeff(a, b, c));
                        }
                    }
            report.add_outcome("modular.verlinde", ok, witness);
        }
    }
    return report;
}

CentralCharge central_charge(const ModularData& md) {
    const auto [p_plus, p_minus] = gauss_sums(md);
    if (p_plus.is_zero() || p_minus.is_zero())
        throw std::domain_error("vanishing Gauss sum: data is not modular");
    const Cyclo dim = global_dimension(md);
    const Cyclo ratio = p_plus * p_minus.inverse();  // e^{πic/2}
    const auto ratio_root = as_root_of_unity(ratio);
    if (!ratio_root)
        throw std::domain_error("p+/p- is not a root of unity: data is not modular");

    // Exact square root of D: with p⁺/p⁻ = ζ_L^e one has
    // (p⁺·ζ_{2L}^{-e})² = p⁺p⁻ = D, so the root lives in Q(ζ_{lcm(M,2L)}).
    Cyclo sqrt_dim =
        p_plus * Cyclo::zeta(2 * ratio_root->modulus, -ratio_root->exponent);
    if (sqrt_dim * sqrt_dim == dim) {
        const auto numeric = sqrt_dim.embed();
        if (std::abs(numeric.imag()) < 1e-9) {
            if (numeric.real() < 0) sqrt_dim = -sqrt_dim;
            const auto phase_root = as_root_of_unity(p_plus * sqrt_dim.inverse());
            if (phase_root) {
                // e^{πic/4} = ζ_L'^{e'}  =>  c = 8e'/L' mod 8
                Rational c(8 * phase_root->exponent, phase_root->modulus);
                c.canonicalize();
                return {reduce_mod(c, 8), CentralCharge::Method::exact_sqrt};
            }
        }
    }

    // Fallback: the ratio pins c mod 4; decide between c and c+4 against
    // the numeric argument of p⁺/√D with √D > 0.
    Rational c4(4 * ratio_root->exponent, ratio_root->modulus);
    c4.canonicalize();
    c4 = reduce_mod(c4, 4);
    const auto p_num = p_plus.embed();
    const double d_num = dim.embed().real();
    if (d_num <= 0) throw std::domain_error("global dimension embeds non-positively");
    const std::complex<double> phase = p_num / std::sqrt(d_num);
    for (int lift = 0; lift < 2; ++lift) {
        const Rational candidate = reduce_mod(c4 + Rational(4 * lift), 8);
        const double angle = std::numbers::pi * to_double(candidate) / 4.0;
        if (std::abs(phase - std::polar(1.0, angle)) < 1e-6)
            return {candidate, CentralCharge::Method::mod4_plus_numeric};
    }
    throw std::domain_error("central charge could not be resolved mod 8");
}

Report vafa_divisibility(const ModularData& md) {
    Report report;
    const Cyclo dim = global_dimension(md);
    report.add_outcome("vafa.global_dimension_positive",
                       is_algebraic_integer(dim) && is_totally_positive(dim),
                       "D = " + dim.str() + " is not a totally positive algebraic integer");
    const Cyclo dim5 = dim.pow(5);
    auto divides = [&](long order) {
        return is_algebraic_integer(dim5 * Cyclo(Rational(1, order * order)));
    };
    const long n = twist_order_lcm(md);
    report.add_outcome("vafa.order_lcm", divides(n),
                       "D⁵/n² ∉ A for n = " + std::to_string(n) + ", D⁵ = " + dim5.str());
    const auto orders = twist_orders(md);
    for (std::size_t i = 0; i < orders.size(); ++i)
        report.add_outcome("vafa.order[" + md.ring.names()[i] + "]", divides(orders[i]),
                           "D⁵/n_i² ∉ A for n_i = " + std::to_string(orders[i]));
    return report;
}

Report dim_divisibility(const ModularData& md) {
    Report report;
    const Cyclo dim = global_dimension(md);
    const std::size_t u = md.ring.unit();
    for (std::size_t i = 0; i < md.rank(); ++i) {
        const std::string check = "vafa.dim[" + md.ring.names()[i] + "]";
        const Cyclo d = md.smat(u, i);
        if (d.is_zero()) {
            report.add(check, CheckStatus::fail, "categorical dimension vanishes: invalid data");
            continue;
        }
        const Cyclo quotient = dim * (d * d).inverse();
        report.add_outcome(check, is_algebraic_integer(quotient),
                           "D/d(X)² = " + quotient.str() + " ∉ A");
    }
    return report;
}

Report theta_power_identity(const ModularData& md, const DimensionFunction& d) {
    Report report;
    const std::size_t n = md.rank();
    auto check_name = [&](const char* stem, std::size_t i) {
        return std::string(stem) + "." + d.name + "[" + md.ring.names()[i] + "]";
    };
    for (std::size_t i = 0; i < n; ++i)
        if (!is_algebraic_integer(d.values[i])) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::string why =
                    "dimension function value at " + md.ring.names()[i] + " is not integral";
                report.add(check_name("theta_power", j), CheckStatus::unsupported, why);
                report.add(check_name("casimir_power", j), CheckStatus::unsupported, why);
            }
            return report;
        }
    Cyclo dim;
    for (const auto& v : d.values) dim += v * v;
    const Cyclo dim_squared = dim * dim;
    for (std::size_t i = 0; i < n; ++i) {
        const Cyclo exponent_value = d.values[i] * dim_squared;
        const TorsionDetValue theta =
            torsion_value(md.conductor, md.twists[i], exponent_value);
        report.add_outcome(check_name("theta_power", i), theta.is_identity(),
                           "θ^{d(X)·D²} nontrivial: " + theta.str());
        const TorsionDetValue casimir =
            torsion_value(md.conductor, mod_long(2 * md.twists[i], md.conductor), exponent_value);
        report.add_outcome(check_name("casimir_power", i), casimir.is_identity(),
                           "z^{d(X)·D²} nontrivial: " + casimir.str());
    }
    return report;
}

Report det_beta_identity(const ModularData& md, const DimensionFunction& d) {
    Report report;
    const std::size_t n = md.rank();
    for (std::size_t i = 0; i < n; ++i)
        if (!is_algebraic_integer(d.values[i])) {
            report.add("det_beta." + d.name, CheckStatus::unsupported,
                       "dimension function value at " + md.ring.names()[i] + " is not integral");
            return report;
        }
    Cyclo dim;
    for (const auto& v : d.values) dim += v * v;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            BlockAutomorphism beta_squared;
            for (const auto& ev : braiding_spectrum(md, x, y)) {
                Mat<Cyclo> action(ev.multiplicity, ev.multiplicity);
                const Cyclo eigenvalue = Cyclo::zeta(md.conductor, ev.exponent);
                for (std::int64_t k = 0; k < ev.multiplicity; ++k) action(k, k) = eigenvalue;
                beta_squared.blocks.push_back({ev.source, std::move(action)});
            }
            const TorsionDetValue det = det_automorphism(beta_squared, d);
            const TorsionDetValue powered = power(det, dim);
            report.add_outcome(
                "det_beta." + d.name + "[" + md.ring.names()[x] + "," + md.ring.names()[y] + "]",
                powered.is_identity(), "det(β²)^D nontrivial: " + powered.str());
        }
    return report;
}

CheckResult detT_identity(const ModularData& md, const CentralCharge& charge) {
    long twist_sum = 0;
    for (long t : md.twists) twist_sum = mod_long(twist_sum + t, md.conductor);
    // (det T)^12 = ζ_M^{12·Σt} = e^{2πi·lhs}; e^{πicN} = e^{2πi·rhs}
    Rational lhs(12 * twist_sum, md.conductor);
    lhs.canonicalize();
    lhs = reduce_mod(lhs, 1);
    Rational rhs = charge.value * Rational(static_cast<long>(md.rank())) / Rational(2);
    rhs = reduce_mod(rhs, 1);
    CheckResult result;
    result.check = "charge.det_t_twelfth";
    if (lhs == rhs) {
        result.status = CheckStatus::pass;
    } else {
        result.status = CheckStatus::fail;
        result.witness = "det(T)¹² = e^{2πi·" + rational_to_string(lhs) + "} but e^{πicN} = e^{2πi·" +
                         rational_to_string(rhs) + "}";
    }
    return result;
}

CheckResult charge_integrality(const ModularData& md, const CentralCharge& charge) {
    const Rational half_cn =
        charge.value * Rational(static_cast<long>(md.rank())) / Rational(2);
    const Cyclo value = Cyclo(half_cn * half_cn) * global_dimension(md).pow(5);
    CheckResult result;
    result.check = "charge.integrality";
    if (is_algebraic_integer(value)) {
        result.status = CheckStatus::pass;
    } else {
        result.status = CheckStatus::fail;
        result.witness = "(cN/2)²·D⁵ = " + value.str() + " ∉ A";
    }
    return result;
}

ModularData galois_transform(const ModularData& md, long a) {
    if (std::gcd(mod_long(a, md.conductor), md.conductor) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    std::vector<long> twists;
    twists.reserve(md.rank());
    for (long t : md.twists) twists.push_back(mod_long(a * t, md.conductor));
    Mat<Cyclo> smat(md.rank(), md.rank());
    for (std::size_t i = 0; i < md.rank(); ++i)
        for (std::size_t j = 0; j < md.rank(); ++j)
            smat(i, j) = md.smat(i, j).lifted_to(md.conductor).galois(a);
    return ModularData(md.name + "~galois" + std::to_string(a), md.conductor, md.ring,
                       std::move(twists), std::move(smat));
}

VafaReport build_vafa_report(const ModularData& md, const VafaReportOptions& options) {
    VafaReport vr;
    vr.name = md.name;
    vr.num_simples = md.rank();
    const Cyclo dim = global_dimension(md);
    vr.global_dimension_exact = dim.str();
    vr.global_dimension_numeric = dim.embed().real();
    vr.twist_orders = twist_orders(md);
    vr.twist_order_lcm = twist_order_lcm(md);
    vr.exponent = exponent(md);
    vr.casimir_orders = casimir_orders(md);

    vr.checks.merge(verify_modular(md));
    vr.checks.merge(vafa_divisibility(md));
    vr.checks.merge(dim_divisibility(md));

    std::optional<CentralCharge> charge;
    try {
        charge = central_charge(md);
        vr.central_charge = charge->value;
        vr.central_charge_method = charge->method == CentralCharge::Method::exact_sqrt
                                       ? "exact_sqrt"
                                       : "mod4_plus_numeric";
        vr.checks.entries.push_back(detT_identity(md, *charge));
        vr.checks.entries.push_back(charge_integrality(md, *charge));
    } catch (const std::domain_error& e) {
        vr.checks.add("charge.det_t_twelfth", CheckStatus::unsupported, e.what());
        vr.checks.add("charge.integrality", CheckStatus::unsupported, e.what());
    }

    std::vector<DimensionFunction> functions;
    if (options.categorical) functions.push_back(categorical_dims(md));
    if (options.frobenius_perron) {
        try {
            functions.push_back(fp_exact(md));
        } catch (const std::exception& e) {
            vr.checks.add("theta_power.frobenius-perron", CheckStatus::unsupported, e.what());
            vr.checks.add("det_beta.frobenius-perron", CheckStatus::unsupported, e.what());
        }
    }
    for (const auto& d : functions) {
        try {
            vr.checks.merge(theta_power_identity(md, d));
        } catch (const std::exception& e) {
            vr.checks.add("theta_power." + d.name, CheckStatus::unsupported, e.what());
        }
        try {
            vr.checks.merge(det_beta_identity(md, d));
        } catch (const std::exception& e) {
            vr.checks.add("det_beta." + d.name, CheckStatus::unsupported, e.what());
        }
    }
    return vr;
}

}  // namespace mtc
