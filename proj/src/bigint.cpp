#include "crosscap/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosscap {

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(unsigned k) {
    BigUint r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = uint32_t{1} << (k % 32);
    return r;
}

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigUint::from_decimal: empty string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint::from_decimal: bad digit");
        r *= 10;
        r += BigUint(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

BigUint& BigUint::operator*=(uint64_t v) {
    if (v == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    uint32_t lo = static_cast<uint32_t>(v);
    uint32_t hi = static_cast<uint32_t>(v >> 32);
    if (hi == 0) {
        uint64_t carry = 0;
        for (auto& limb : limbs_) {
            uint64_t t = uint64_t{limb} * lo + carry;
            limb = static_cast<uint32_t>(t);
            carry = t >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    } else {
        *this *= BigUint(v);
    }
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t t = uint64_t{limbs_[i]} * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(t);
            carry = t >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t t = uint64_t{r.limbs_[k]} + carry;
            r.limbs_[k] = static_cast<uint32_t>(t);
            carry = t >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint& BigUint::operator*=(const BigUint& o) { return *this = *this * o; }

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t t = uint64_t{limbs_[i]} + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
        limbs_[i] = static_cast<uint32_t>(t);
        carry = t >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

uint64_t BigUint::as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::as_u64: value too large");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = uint64_t{limbs_[1]} << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

bool BigUint::operator<(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    return std::lexicographical_compare(limbs_.rbegin(), limbs_.rend(), o.limbs_.rbegin(),
                                        o.limbs_.rend());
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    // Repeated division by 10^9.
    std::vector<uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(rem);
        if (work.empty()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

}  // namespace crosscap
