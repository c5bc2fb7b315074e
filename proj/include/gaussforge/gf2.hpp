#pragma once

// Dense bit-packed matrices over the two-element field.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gaussforge::gf2 {

class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits), data_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.set(k, k);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        Word& w = data_[r * words_ + c / kWordBits];
        const Word bit = Word{1} << (c % kWordBits);
        w = value ? (w | bit) : (w & ~bit);
    }
    /// Adds 1 (mod 2) to an entry.
    void toggle(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
    std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * words_, words_}; }

    bool is_zero() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
    }

    std::size_t popcount() const noexcept {
        std::size_t n = 0;
        for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) t.set(c, r);
            }
        }
        return t;
    }

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            auto dst = out.row(r);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (!a.get(r, k)) continue;
                auto src = b.row(k);
                for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
            }
        }
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
};

/// Row rank by forward elimination on a private copy.
inline std::size_t rank(const BitMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t words = m.words_per_row();
    std::vector<BitMatrix::Word> a(m.rows() * words);
    for (std::size_t r = 0; r < m.rows(); ++r) std::copy(m.row(r).begin(), m.row(r).end(), a.begin() + r * words);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        const std::size_t w = col / BitMatrix::kWordBits;
        const BitMatrix::Word bit = BitMatrix::Word{1} << (col % BitMatrix::kWordBits);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(a[pivot * words + w] & bit)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + pivot * words, a.begin() + (pivot + 1) * words, a.begin() + rank * words);
        }
        const BitMatrix::Word* prow = a.data() + rank * words;
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            BitMatrix::Word* row = a.data() + r * words;
            if (!(row[w] & bit)) continue;
            // Columns left of `col` are already zero in both rows.
            for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t kernel_dim(const BitMatrix& m) { return m.cols() - rank(m); }

}  // namespace gaussforge::gf2
