#pragma once

#include <map>
#include <optional>
#include <vector>

#include "divlie/rational.hpp"

namespace divlie {

// Exact row reduction over sparse rational vectors with keys ordered by Less.
// Rows are kept in reduced echelon form: each row's pivot (its smallest key)
// has coefficient 1 and is eliminated from every other row; pivots strictly
// increase down the row list.
template <class Key, class Less>
class EchelonBasis {
public:
    using Vec = std::map<Key, Rational, Less>;

    size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

    /// Residual of v after eliminating every pivot; empty iff v is in the span.
    Vec reduce(Vec v) const {
        for (const Vec& row : rows_) {
            auto it = v.find(row.begin()->first);
            if (it == v.end()) continue;
            axpy(v, -it->second, row);
        }
        return v;
    }

    /// Inserts v if it enlarges the span; returns whether it did.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        normalize(v);
        const Key& pivot = v.begin()->first;
        for (Vec& row : rows_) {
            auto it = row.find(pivot);
            if (it != row.end()) axpy(row, -it->second, v);
        }
        auto pos = rows_.begin();
        Less less;
        while (pos != rows_.end() && less(pos->begin()->first, pivot)) ++pos;
        rows_.insert(pos, std::move(v));
        return true;
    }

    /// Coordinates of v with respect to the stored rows (in row order), or
    /// nullopt if v is outside the span.
    std::optional<std::vector<Rational>> coordinates(Vec v) const {
        std::vector<Rational> coords(rows_.size(), Rational(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            auto it = v.find(rows_[r].begin()->first);
            if (it == v.end()) continue;
            coords[r] = it->second;
            axpy(v, -it->second, rows_[r]);
        }
        if (!v.empty()) return std::nullopt;
        return coords;
    }

    static void axpy(Vec& target, const Rational& c, const Vec& src) {
        if (c == 0) return;
        for (const auto& [k, val] : src) {
            auto [it, inserted] = target.emplace(k, c * val);
            if (!inserted) {
                it->second += c * val;
                if (it->second == 0) target.erase(it);
            }
        }
    }

private:
    static void normalize(Vec& v) {
        Rational lead = v.begin()->second;
        if (lead == 1) return;
        for (auto& [k, val] : v) val /= lead;
    }

    std::vector<Vec> rows_;
};

// Null-space extraction: feed the images f(v_0), f(v_1), ... of a linear map
// in order; every time an image is linearly dependent on the earlier ones the
// witnessing combination of the v_j is recorded as a kernel vector.
template <class Key, class Less>
class KernelAccumulator {
public:
    using Vec = std::map<Key, Rational, Less>;

    void add(Vec image) {
        std::vector<Rational> combo(count_ + 1, Rational(0));
        combo[count_] = 1;
        ++count_;
        for (auto& row : rows_) {
            row.combo.resize(count_, Rational(0));
            auto it = image.find(row.img.begin()->first);
            if (it == image.end()) continue;
            Rational c = it->second;
            EchelonBasis<Key, Less>::axpy(image, -c, row.img);
            for (size_t k = 0; k < count_; ++k) combo[k] -= c * row.combo[k];
        }
        if (image.empty()) {
            kernel_.push_back(std::move(combo));
            return;
        }
        Rational lead = image.begin()->second;
        if (lead != 1) {
            for (auto& [k, val] : image) val /= lead;
            for (auto& c : combo) c /= lead;
        }
        Row row{std::move(image), std::move(combo)};
        auto pos = rows_.begin();
        Less less;
        while (pos != rows_.end() && less(pos->img.begin()->first, row.img.begin()->first)) ++pos;
        rows_.insert(pos, std::move(row));
    }

    /// Kernel combinations found so far; entry k of a combination multiplies
    /// the k-th vector fed to add() (padded with zeros for later vectors).
    const std::vector<std::vector<Rational>>& kernel() const { return kernel_; }

    size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Vec img;
        std::vector<Rational> combo;
    };

    std::vector<Row> rows_;
    std::vector<std::vector<Rational>> kernel_;
    size_t count_ = 0;
};

}  // namespace divlie
