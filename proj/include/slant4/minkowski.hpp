#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace slant4 {

/// Default absolute tolerance on inner products separating null vectors from rounding noise.
inline constexpr double kNullTolerance = 1e-10;

/// A point or vector of Minkowski 4-space in rectangular coordinates (x1 is the time axis).
class Vec4 {
public:
    constexpr Vec4() = default;
    constexpr Vec4(double x1, double x2, double x3, double x4) : c_{x1, x2, x3, x4} {}

    static constexpr Vec4 basis(std::size_t i) {
        Vec4 v;
        v.c_[i] = 1.0;
        return v;
    }

    constexpr double& operator[](std::size_t i) { return c_[i]; }
    constexpr double operator[](std::size_t i) const { return c_[i]; }

    constexpr Vec4& operator+=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    constexpr Vec4& operator-=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    constexpr Vec4& operator*=(double a) {
        for (auto& x : c_) x *= a;
        return *this;
    }
    constexpr Vec4& operator/=(double a) {
        for (auto& x : c_) x /= a;
        return *this;
    }

    friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
    friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
    friend constexpr Vec4 operator-(Vec4 a) { return a *= -1.0; }
    friend constexpr Vec4 operator*(Vec4 a, double s) { return a *= s; }
    friend constexpr Vec4 operator*(double s, Vec4 a) { return a *= s; }
    friend constexpr Vec4 operator/(Vec4 a, double s) { return a /= s; }
    friend constexpr bool operator==(const Vec4&, const Vec4&) = default;

    [[nodiscard]] bool is_finite() const {
        for (double x : c_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    /// Largest absolute component.
    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (double x : c_) m = std::max(m, std::abs(x));
        return m;
    }

    [[nodiscard]] const std::array<double, 4>& components() const { return c_; }

private:
    std::array<double, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Vec4& v);

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

const char* to_string(CausalCharacter c) noexcept;

/// Lorentzian inner product -u1 v1 + u2 v2 + u3 v3 + u4 v4.
constexpr double inner(const Vec4& u, const Vec4& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double pseudo_norm(const Vec4& v) { return std::sqrt(std::abs(inner(v, v))); }

/// Zero counts as spacelike.
CausalCharacter causal_character(const Vec4& v, double tau = kNullTolerance);

/// Causal class implied by a squared pseudo-norm alone.
CausalCharacter causal_character_of(double norm_squared, double tau = kNullTolerance);

/// Scales v to <v,v> = +-1. Throws Error{NullVector} when |<v,v>| <= tau.
Vec4 normalize(const Vec4& v, double tau = kNullTolerance);

struct OrthonormalBasis {
    std::array<Vec4, 4> vectors;
    std::array<int, 4> signs; ///< signs[i] = <e_i, e_i>
};

/// Gram-Schmidt with respect to the Lorentzian metric, two classical passes per vector.
/// The projection onto e_i is weighted by sign(<e_i,e_i>). Throws DependentBasis when an
/// orthogonalized vector vanishes and NullIntermediate when it is lightlike.
OrthonormalBasis gram_schmidt_indefinite(const std::array<Vec4, 4>& basis, double tau = kNullTolerance);

} // namespace slant4
