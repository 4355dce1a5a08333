#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gid {

using Individual = int;

// Profiles are limited to 64 individuals so that a set fits a machine word.
inline constexpr int kMaxIndividuals = 64;

class IndividualSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Individual;
        using difference_type = std::ptrdiff_t;
        using pointer = const Individual*;
        using reference = Individual;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

        constexpr Individual operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr IndividualSet() noexcept = default;
    IndividualSet(std::initializer_list<Individual> members)
    {
        for (Individual a : members)
            insert(a);
    }

    static constexpr IndividualSet from_bits(std::uint64_t bits) noexcept
    {
        IndividualSet s;
        s.bits_ = bits;
        return s;
    }

    // {0, ..., n-1}
    static constexpr IndividualSet first(int n) noexcept
    {
        if (n <= 0)
            return {};
        if (n >= kMaxIndividuals)
            return from_bits(~std::uint64_t{0});
        return from_bits((std::uint64_t{1} << n) - 1);
    }

    static constexpr IndividualSet single(Individual a) noexcept
    {
        IndividualSet s;
        s.insert(a);
        return s;
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }

    constexpr bool contains(Individual a) const noexcept
    {
        return a >= 0 && a < kMaxIndividuals && ((bits_ >> a) & 1U) != 0;
    }
    constexpr void insert(Individual a) noexcept
    {
        if (a >= 0 && a < kMaxIndividuals)
            bits_ |= std::uint64_t{1} << a;
    }
    constexpr void erase(Individual a) noexcept
    {
        if (a >= 0 && a < kMaxIndividuals)
            bits_ &= ~(std::uint64_t{1} << a);
    }

    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    constexpr bool is_subset_of(IndividualSet other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool intersects(IndividualSet other) const noexcept
    {
        return (bits_ & other.bits_) != 0;
    }

    // Smallest member; -1 when empty.
    constexpr Individual min() const noexcept
    {
        return bits_ == 0 ? -1 : std::countr_zero(bits_);
    }

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::vector<Individual> to_vector() const
    {
        std::vector<Individual> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Individual a : *this)
            out.push_back(a);
        return out;
    }

    constexpr IndividualSet& operator|=(IndividualSet o) noexcept
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr IndividualSet& operator&=(IndividualSet o) noexcept
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr IndividualSet& operator-=(IndividualSet o) noexcept
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr IndividualSet operator|(IndividualSet a, IndividualSet b) noexcept { return a |= b; }
    friend constexpr IndividualSet operator&(IndividualSet a, IndividualSet b) noexcept { return a &= b; }
    friend constexpr IndividualSet operator-(IndividualSet a, IndividualSet b) noexcept { return a -= b; }
    friend constexpr bool operator==(IndividualSet a, IndividualSet b) noexcept = default;

private:
    std::uint64_t bits_ = 0;
};

// Size first, then lexicographic on the sorted member list.
bool size_then_lex_less(IndividualSet a, IndividualSet b);

} // namespace gid
