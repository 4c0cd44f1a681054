#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crosscap {

/// Unsigned arbitrary-precision integer, just large enough for exact group
/// orders (products of orbit sizes, powers of two). Little-endian 32-bit limbs.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);  // NOLINT: implicit by design
    static BigUint pow2(unsigned k);
    static BigUint from_decimal(std::string_view s);

    BigUint& operator*=(uint64_t v);
    BigUint& operator*=(const BigUint& o);
    BigUint operator*(const BigUint& o) const;
    BigUint& operator+=(const BigUint& o);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t as_u64() const;  // throws if too large

    friend bool operator==(const BigUint&, const BigUint&) = default;
    bool operator<(const BigUint& o) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // empty == zero
};

}  // namespace crosscap
