#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>

#include "avoidkit/bitstring.hpp"
#include "avoidkit/errors.hpp"
#include "avoidkit/intmath.hpp"

namespace avoidkit {

// Point-query access to a long bit string that may never be materialized.
// Reads are counted so locality claims can be asserted by tests.
class BitOracle {
public:
    virtual ~BitOracle() = default;

    uint8_t bit(uint64_t i) const {
        ++reads_;
        return get(i);
    }
    virtual uint64_t size() const = 0;

    uint64_t reads() const { return reads_; }
    void reset_reads() const { reads_ = 0; }

protected:
    virtual uint8_t get(uint64_t i) const = 0;

private:
    mutable uint64_t reads_ = 0;
};

// Concrete bits, optionally zero-extended past their length (the convention
// for padded truth tables).
class BitsView final : public BitOracle {
public:
    explicit BitsView(BitString bits, bool zero_extend = false)
        : bits_(std::move(bits)), zero_extend_(zero_extend) {}

    uint64_t size() const override { return bits_.size(); }

protected:
    uint8_t get(uint64_t i) const override {
        if (i < bits_.size())
            return bits_[i];
        if (zero_extend_)
            return 0;
        throw InputShapeError("bit oracle read out of range");
    }

private:
    BitString bits_;
    bool zero_extend_;
};

// Callback-backed oracle for tests and adversaries.
class FnBits final : public BitOracle {
public:
    FnBits(uint64_t size, std::function<uint8_t(uint64_t)> fn)
        : size_(size), fn_(std::move(fn)) {}

    uint64_t size() const override { return size_; }

protected:
    uint8_t get(uint64_t i) const override { return fn_(i); }

private:
    uint64_t size_;
    std::function<uint8_t(uint64_t)> fn_;
};

// The concatenation of all length-w strings in lexicographic order;
// bit j is bit (j mod w) of the big-endian value (j div w).
class AllStringsBits final : public BitOracle {
public:
    explicit AllStringsBits(unsigned w) : w_(w) {
        if (w == 0 || w >= 58)
            throw CapacityError("AllStringsBits width out of range");
    }

    uint64_t size() const override { return (1ull << w_) * w_; }

protected:
    uint8_t get(uint64_t j) const override {
        uint64_t value = j / w_;
        unsigned pos = static_cast<unsigned>(j % w_);
        return static_cast<uint8_t>((value >> (w_ - 1 - pos)) & 1);
    }

private:
    unsigned w_;
};

} // namespace avoidkit
