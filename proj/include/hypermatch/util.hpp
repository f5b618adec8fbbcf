#pragma once

#include <algorithm>
#include <vector>

namespace hypermatch {

// Set operations on sorted, duplicate-free vectors.

template <typename T>
bool sorted_contains(const std::vector<T>& v, const T& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> sorted_intersection(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> sorted_difference(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> sorted_symmetric_difference(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
bool sets_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

template <typename T>
void insert_sorted(std::vector<T>& v, const T& x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

template <typename T>
void erase_sorted(std::vector<T>& v, const T& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

} // namespace hypermatch
