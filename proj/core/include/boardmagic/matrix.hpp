#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace boardmagic {

/// Dense row-major integer matrix. All label arithmetic in this library is
/// 64-bit so that sums up to T(T+1) with T ~ 10^6 squares stay exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        v_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("ragged initializer for IntMatrix");
            v_.insert(v_.end(), r.begin(), r.end());
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    std::int64_t& at(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t at(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::int64_t row_sum(int i) const {
        std::int64_t s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j);
        return s;
    }
    std::int64_t col_sum(int j) const {
        std::int64_t s = 0;
        for (int i = 0; i < rows_; ++i) s += at(i, j);
        return s;
    }
    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : v_) s += v;
        return s;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    void add_scalar(std::int64_t c) {
        for (auto& v : v_) v += c;
    }

    const std::vector<std::int64_t>& data() const { return v_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> v_;
};

}  // namespace boardmagic
