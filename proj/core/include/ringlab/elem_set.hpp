#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ringlab {

/// Index of an element inside a finite ring or module carrier 0..size-1.
using elem_t = std::uint32_t;

/// Fixed-universe bit set over element indices. Ideals, submodules and the
/// cached structural sets (units, nilpotents, ...) are all stored this way;
/// the bit pattern is the canonical encoding of the set.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::size_t universe)
        : nbits_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool is_subset_of(const ElemSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const ElemSet& a, const ElemSet& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::vector<elem_t> to_list() const {
        std::vector<elem_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                out.push_back(static_cast<elem_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    /// First set bit, or universe() when empty.
    std::size_t first() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return wi * 64 + static_cast<unsigned>(__builtin_ctzll(words_[wi]));
        return nbits_;
    }

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        h ^= nbits_;
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Canonical total order on subsets of one carrier: fewer elements first,
/// ties broken by the smallest element where the two sets differ (the set
/// owning that element sorts first). Equal sets are not "less".
inline bool canonical_less(const ElemSet& a, const ElemSet& b) {
    const std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        const std::uint64_t wa = a.word(i), wb = b.word(i);
        if (wa != wb) {
            const std::uint64_t diff = wa ^ wb;
            return (wa >> __builtin_ctzll(diff)) & 1;
        }
    }
    return false;
}

struct ElemSetHash {
    std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace ringlab
