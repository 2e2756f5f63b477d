#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lindq {

/// Dynamically sized bitset used for adjacency rows and candidate domains.
class Bitset {
public:
    static constexpr int npos = -1;

    Bitset() = default;
    explicit Bitset(int size, bool value = false)
        : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0)
    {
        if (value)
            trim();
    }

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set(int i, bool value)
    {
        if (value)
            set(i);
        else
            reset(i);
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    int find_first() const { return find_from(0); }
    int find_next(int i) const { return find_from(i + 1); }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }
    Bitset& flip()
    {
        for (auto& w : words_)
            w = ~w;
        trim();
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Indices of set bits, ascending.
    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int i = find_first(); i != npos; i = find_next(i))
            out.push_back(i);
        return out;
    }

private:
    int find_from(int i) const
    {
        if (i >= size_)
            return npos;
        std::size_t w = i >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (bits)
                return static_cast<int>(w * 64 + std::countr_zero(bits));
            if (++w >= words_.size())
                return npos;
            bits = words_[w];
        }
    }

    void trim()
    {
        if (size_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace lindq
