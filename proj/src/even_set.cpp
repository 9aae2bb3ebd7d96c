// even_set.cpp

#include "sierpinski/even_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sierpinski/errors.hpp"

namespace sierpinski {

namespace {

constexpr std::size_t kWordBits = 64;

}  // namespace

EvenSet::EvenSet(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if ((lo & 1) || (hi & 1) || hi < lo)
        throw PreconditionError("even set bounds must be even with lo <= hi, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    slots_ = static_cast<std::size_t>((hi - lo) / 2 + 1);
    words_.assign((slots_ + kWordBits - 1) / kWordBits, 0);
}

bool EvenSet::contains(std::int64_t v) const {
    if (!in_range(v)) return false;
    const auto k = static_cast<std::size_t>((v - lo_) / 2);
    return (words_[k / kWordBits] >> (k % kWordBits)) & 1u;
}

bool EvenSet::insert(std::int64_t v) {
    if (!in_range(v)) return false;
    const auto k = static_cast<std::size_t>((v - lo_) / 2);
    words_[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
    return true;
}

void EvenSet::erase(std::int64_t v) {
    if (!in_range(v)) return;
    const auto k = static_cast<std::size_t>((v - lo_) / 2);
    words_[k / kWordBits] &= ~(std::uint64_t{1} << (k % kWordBits));
}

std::size_t EvenSet::size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::int64_t> EvenSet::max() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] == 0) continue;
        const auto bit = kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return lo_ + 2 * static_cast<std::int64_t>(w * kWordBits + bit);
    }
    return std::nullopt;
}

std::optional<std::int64_t> EvenSet::min() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] == 0) continue;
        const auto bit = static_cast<std::size_t>(std::countr_zero(words_[w]));
        return lo_ + 2 * static_cast<std::int64_t>(w * kWordBits + bit);
    }
    return std::nullopt;
}

std::vector<std::int64_t> EvenSet::members() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (auto bits = words_[w]; bits; bits &= bits - 1) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            out.push_back(lo_ + 2 * static_cast<std::int64_t>(w * kWordBits + bit));
        }
    }
    return out;
}

void EvenSet::check_compatible(const EvenSet& other) const {
    if (lo_ != other.lo_ || hi_ != other.hi_)
        throw PreconditionError("even sets live in different universes");
}

void EvenSet::trim() {
    const auto tail = slots_ % kWordBits;
    if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

EvenSet& EvenSet::operator|=(const EvenSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

EvenSet& EvenSet::operator&=(const EvenSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

EvenSet& EvenSet::operator-=(const EvenSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool EvenSet::is_subset_of(const EvenSet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

EvenSet EvenSet::interval(std::int64_t from, std::int64_t to, std::int64_t lo, std::int64_t hi) {
    EvenSet out(lo, hi);
    if (from & 1) ++from;
    for (auto v = std::max(from, lo); v <= std::min(to, hi); v += 2) out.insert(v);
    return out;
}

EvenSet EvenSet::shifted(std::int64_t offset) const {
    if (offset & 1) throw PreconditionError("even sets shift by even offsets only");
    EvenSet out(lo_, hi_);
    const std::int64_t slots = offset / 2;
    const auto n = static_cast<std::int64_t>(words_.size());
    if (slots >= 0) {
        const auto word_shift = slots / 64;
        const auto bit_shift = static_cast<unsigned>(slots % 64);
        for (std::int64_t i = n - 1; i >= word_shift; --i) {
            std::uint64_t w = words_[static_cast<std::size_t>(i - word_shift)] << bit_shift;
            if (bit_shift && i - word_shift - 1 >= 0)
                w |= words_[static_cast<std::size_t>(i - word_shift - 1)] >> (64 - bit_shift);
            out.words_[static_cast<std::size_t>(i)] = w;
        }
    } else {
        const auto down = -slots;
        const auto word_shift = down / 64;
        const auto bit_shift = static_cast<unsigned>(down % 64);
        for (std::int64_t i = 0; i + word_shift < n; ++i) {
            std::uint64_t w = words_[static_cast<std::size_t>(i + word_shift)] >> bit_shift;
            if (bit_shift && i + word_shift + 1 < n)
                w |= words_[static_cast<std::size_t>(i + word_shift + 1)] << (64 - bit_shift);
            out.words_[static_cast<std::size_t>(i)] = w;
        }
    }
    out.trim();
    return out;
}

EvenSet sumset(const EvenSet& x, const EvenSet& y, std::int64_t cap) {
    if (x.lo() != y.lo() || x.hi() != y.hi())
        throw PreconditionError("sumset operands live in different universes");
    EvenSet out(x.lo(), x.hi());
    // Shifting X by y moves every member u to u + y.
    for (auto v : y.members()) out |= x.shifted(v);
    if (cap < x.hi()) out -= EvenSet::interval(cap + 1, x.hi(), x.lo(), x.hi());
    return out;
}

}  // namespace sierpinski
