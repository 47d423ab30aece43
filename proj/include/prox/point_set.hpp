#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace prox {

/**
 * Finite set of point indices into a space, kept sorted and duplicate free.
 *
 * All set algebra is linear merges over the sorted storage, so iteration order
 * is always ascending index order.
 */
class PointSet {
public:
    using value_type = std::size_t;
    using const_iterator = std::vector<std::size_t>::const_iterator;

    PointSet() = default;
    PointSet(std::initializer_list<std::size_t> indices) : items_(indices) { normalize(); }
    explicit PointSet(std::vector<std::size_t> indices) : items_(std::move(indices)) { normalize(); }

    /// {0, 1, ..., n-1}
    static PointSet range(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i;
        PointSet s;
        s.items_ = std::move(v);
        return s;
    }

    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const_iterator begin() const noexcept { return items_.begin(); }
    const_iterator end() const noexcept { return items_.end(); }
    std::size_t front() const { return items_.front(); }
    std::size_t back() const { return items_.back(); }
    const std::vector<std::size_t>& indices() const noexcept { return items_; }

    bool contains(std::size_t i) const { return std::binary_search(items_.begin(), items_.end(), i); }

    void insert(std::size_t i) {
        auto it = std::lower_bound(items_.begin(), items_.end(), i);
        if (it == items_.end() || *it != i) items_.insert(it, i);
    }

    bool is_subset_of(const PointSet& other) const {
        return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }

    bool intersects(const PointSet& other) const {
        auto a = items_.begin();
        auto b = other.items_.begin();
        while (a != items_.end() && b != other.items_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    friend PointSet operator|(const PointSet& a, const PointSet& b) {
        PointSet r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend PointSet operator&(const PointSet& a, const PointSet& b) {
        PointSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend PointSet operator-(const PointSet& a, const PointSet& b) {
        PointSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet&, const PointSet&) = default;

private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<std::size_t> items_;
};

}  // namespace prox
