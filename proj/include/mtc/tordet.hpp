#ifndef MTC_TORDET_HPP
#define MTC_TORDET_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/matrix.hpp"

namespace mtc {

// Raised when a determinant leaves the torsion part of the codomain
// (a block determinant that is not a root of unity).
struct unsupported_value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element of the torsion part of A ⊗ C*, identified with (A⊗Q)/A via
// e^{2πik/m} ⊗ a ↦ ka/m. The stored representative is any cyclotomic
// number in the class; two values are equal iff their representatives
// differ by an algebraic integer.
class TorsionDetValue {
 public:
    TorsionDetValue() = default;  // the identity class
    explicit TorsionDetValue(Cyclo representative) : rep_(std::move(representative)) {}

    const Cyclo& representative() const { return rep_; }
    bool is_identity() const { return is_algebraic_integer(rep_); }

    friend bool operator==(const TorsionDetValue& u, const TorsionDetValue& v) {
        return is_algebraic_integer(u.rep_ - v.rep_);
    }

    std::string str() const;

 private:
    Cyclo rep_;
};

// (ζ_m^k)^a as a torsion value; a must be an algebraic integer.
TorsionDetValue torsion_value(long root_order, long root_exponent, const Cyclo& power);

// group law in the codomain
TorsionDetValue combine(const TorsionDetValue& u, const TorsionDetValue& v);

// module action of A; a must be an algebraic integer
TorsionDetValue power(const TorsionDetValue& u, const Cyclo& a);

inline bool is_identity(const TorsionDetValue& u) { return u.is_identity(); }

// An automorphism of a semisimple object ⊕ Z^{m_Z}, stored blockwise as
// an invertible action on each multiplicity space Hom(Z, X).
struct BlockAutomorphism {
    struct Block {
        std::size_t simple;
        Mat<Cyclo> action;  // m_Z × m_Z
    };
    std::vector<Block> blocks;
};

// The object itself as (simple index, multiplicity) pairs.
BlockAutomorphism scalar_automorphism(const std::vector<std::pair<std::size_t, std::size_t>>& object,
                                      const Cyclo& scalar);

// d(X) = sum of m_Z d(Z) over the blocks.
Cyclo object_dimension(const BlockAutomorphism& a, const DimensionFunction& d);

// det(a) = prod_Z det(a|_{Hom(Z,X)})^{d(Z)} in the torsion model. Blocks
// are eliminated fraction-free over the cyclotomic field; a singular
// block raises std::invalid_argument, a block determinant that is not a
// root of unity raises unsupported_value_error.
TorsionDetValue det_automorphism(const BlockAutomorphism& a, const DimensionFunction& d);

}  // namespace mtc

#endif
