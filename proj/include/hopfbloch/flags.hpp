#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfbloch {

/// Marks coordinates whose value is a convention rather than data.
enum class CoordFlag : std::uint32_t {
    PhiAUndefined = 1u << 0,      // sin(theta_A) ~ 0, phi_A set to 0
    TUndefined = 1u << 1,         // b ~ 0, t set to k (chi = xi = 0)
    XiUndefined = 1u << 2,        // c ~ 0 with b != 0, xi set to 0
    SouthPoleA = 1u << 3,         // |1>_A (x) |psi_B>, fallback representation
    ThetaBPiAmbiguous = 1u << 4,  // theta_B ~ pi, zeta_B pinned to 0
    PhiBUndefined = 1u << 5,      // theta_B ~ 0, phi_B set to 0
};

class Flags {
public:
    constexpr Flags() = default;
    constexpr Flags(CoordFlag f) : bits_(static_cast<std::uint32_t>(f)) {}

    constexpr bool has(CoordFlag f) const { return (bits_ & static_cast<std::uint32_t>(f)) != 0; }
    constexpr void set(CoordFlag f) { bits_ |= static_cast<std::uint32_t>(f); }
    constexpr void clear(CoordFlag f) { bits_ &= ~static_cast<std::uint32_t>(f); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }

    constexpr Flags operator|(Flags o) const { return from_bits(bits_ | o.bits_); }
    constexpr bool operator==(const Flags&) const = default;

    /// Flag names in declaration order.
    std::vector<std::string> names() const;

private:
    static constexpr Flags from_bits(std::uint32_t b) {
        Flags f;
        f.bits_ = b;
        return f;
    }
    std::uint32_t bits_ = 0;
};

}  // namespace hopfbloch
