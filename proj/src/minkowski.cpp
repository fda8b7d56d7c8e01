#include "slant4/minkowski.hpp"

#include "slant4/error.hpp"

#include <ostream>

namespace slant4 {

std::ostream& operator<<(std::ostream& os, const Vec4& v) {
    return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

const char* to_string(CausalCharacter c) noexcept {
    switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
    }
    return "unknown";
}

CausalCharacter causal_character(const Vec4& v, double tau) {
    if (v.max_abs() <= tau) return CausalCharacter::Spacelike;
    return causal_character_of(inner(v, v), tau);
}

CausalCharacter causal_character_of(double norm_squared, double tau) {
    if (norm_squared > tau) return CausalCharacter::Spacelike;
    if (norm_squared < -tau) return CausalCharacter::Timelike;
    return CausalCharacter::Lightlike;
}

Vec4 normalize(const Vec4& v, double tau) {
    const double q = inner(v, v);
    if (std::abs(q) <= tau) throw Error(ErrorKind::NullVector, "cannot normalize a null or zero vector");
    return v / std::sqrt(std::abs(q));
}

OrthonormalBasis gram_schmidt_indefinite(const std::array<Vec4, 4>& basis, double tau) {
    OrthonormalBasis out{};
    for (std::size_t k = 0; k < 4; ++k) {
        Vec4 w = basis[k];
        for (int pass = 0; pass < 2; ++pass) {
            Vec4 correction;
            for (std::size_t i = 0; i < k; ++i)
                correction += (out.signs[i] * inner(w, out.vectors[i])) * out.vectors[i];
            w -= correction;
        }
        if (w.max_abs() <= tau * (1.0 + basis[k].max_abs()))
            throw Error(ErrorKind::DependentBasis, "vector " + std::to_string(k) + " lies in the span of its predecessors");
        const double q = inner(w, w);
        if (std::abs(q) <= tau)
            throw Error(ErrorKind::NullIntermediate, "orthogonalized vector " + std::to_string(k) + " is lightlike");
        out.vectors[k] = w / std::sqrt(std::abs(q));
        out.signs[k] = q > 0.0 ? 1 : -1;
    }
    return out;
}

} // namespace slant4
