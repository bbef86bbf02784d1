#include "ietlab/permutation.hpp"

#include <numeric>
#include <sstream>

#include "ietlab/error.hpp"

namespace ietlab {

Permutation Permutation::identity(int n) {
    if (n < 1) throw InputError("permutation size must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    if (n < 1) throw InputError("permutation size must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InputError("image list is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    std::vector<int> img;
    img.reserve(images.size());
    for (int v : images) img.push_back(v - 1);
    return from_images(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cycle : cycles) {
        if (cycle.size() < 2) continue;
        Permutation c = identity(n);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (from < 0 || from >= n || to < 0 || to >= n) throw InputError("cycle entry out of range");
            c.images_[static_cast<std::size_t>(from)] = to;
        }
        p = c * p;
    }
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InputError("permutation sizes differ");
    Permutation out;
    out.images_.resize(a.images_.size());
    for (int i = 0; i < a.size(); ++i) out.images_[static_cast<std::size_t>(i)] = a(b(i));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < size(); ++i) out.images_[static_cast<std::size_t>((*this)(i))] = i;
    return out;
}

Permutation Permutation::power(long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Permutation out = identity(size());
    while (k > 0) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

bool Permutation::is_even() const {
    long transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<long>(c.size()) - 1;
    return transpositions % 2 == 0;
}

long Permutation::order() const {
    long ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long>(c.size()));
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cycle;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cycle.push_back(j);
            j = (*this)(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (int v : images_) out.push_back(v + 1);
    return out;
}

std::string Permutation::str() const {
    std::ostringstream s;
    s << "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s << ",";
        s << (*this)(i) + 1;
    }
    s << "]";
    return s.str();
}

}  // namespace ietlab
