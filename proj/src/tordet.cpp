#include "mtc/tordet.hpp"

#include <set>
#include <sstream>

namespace mtc {

std::string TorsionDetValue::str() const {
    return "class of " + rep_.str() + " mod algebraic integers";
}

TorsionDetValue torsion_value(long root_order, long root_exponent, const Cyclo& power) {
    if (root_order <= 0) throw std::invalid_argument("root order must be positive");
    if (!is_algebraic_integer(power))
        throw std::domain_error("torsion value requires an algebraic-integer power, got " + power.str());
    Rational scale(root_exponent, root_order);
    scale.canonicalize();
    return TorsionDetValue(Cyclo(scale) * power);
}

TorsionDetValue combine(const TorsionDetValue& u, const TorsionDetValue& v) {
    return TorsionDetValue(u.representative() + v.representative());
}

TorsionDetValue power(const TorsionDetValue& u, const Cyclo& a) {
    if (!is_algebraic_integer(a))
        throw std::domain_error("torsion power requires an algebraic-integer exponent, got " + a.str());
    return TorsionDetValue(a * u.representative());
}

BlockAutomorphism scalar_automorphism(const std::vector<std::pair<std::size_t, std::size_t>>& object,
                                      const Cyclo& scalar) {
    BlockAutomorphism out;
    for (const auto& [simple, multiplicity] : object) {
        if (multiplicity == 0) continue;
        Mat<Cyclo> action(multiplicity, multiplicity);
        for (std::size_t i = 0; i < multiplicity; ++i) action(i, i) = scalar;
        out.blocks.push_back({simple, std::move(action)});
    }
    return out;
}

Cyclo object_dimension(const BlockAutomorphism& a, const DimensionFunction& d) {
    Cyclo total;
    for (const auto& block : a.blocks)
        total += Cyclo(static_cast<long>(block.action.rows())) * d.values.at(block.simple);
    return total;
}

TorsionDetValue det_automorphism(const BlockAutomorphism& a, const DimensionFunction& d) {
    TorsionDetValue out;
    std::set<std::size_t> seen;
    for (const auto& block : a.blocks) {
        if (!seen.insert(block.simple).second)
            throw std::invalid_argument("duplicate simple in block automorphism");
        if (block.action.rows() != block.action.cols() || block.action.rows() == 0)
            throw std::invalid_argument("block action must be square and nonempty");
        const Cyclo det = bareiss_det(block.action);
        if (det.is_zero()) throw std::invalid_argument("singular block in automorphism");
        const auto root = as_root_of_unity(det);
        if (!root) {
            std::ostringstream msg;
            msg << "block determinant " << det.str()
                << " is not a root of unity; only the torsion part of the determinant codomain is supported";
            throw unsupported_value_error(msg.str());
        }
        out = combine(out, torsion_value(root->modulus, root->exponent, d.values.at(block.simple)));
    }
    return out;
}

}  // namespace mtc
