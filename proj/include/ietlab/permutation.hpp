#pragma once

#include <string>
#include <vector>

namespace ietlab {

/// A permutation of {0, ..., n-1}. Text I/O uses the 1-based image list,
/// e.g. "[2,3,1]" for the 3-cycle 1 -> 2 -> 3 -> 1.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    /// images[i] = image of i (0-based); validated to be a bijection.
    static Permutation from_images(std::vector<int> images);
    /// 1-based image list as used in text formats.
    static Permutation from_one_based(const std::vector<int>& images);
    /// Product of the given cycles (0-based entries) inside {0,...,n-1}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

    /// Composition (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    Permutation power(long e) const;

    bool is_identity() const;
    bool is_even() const;
    long order() const;
    std::vector<std::vector<int>> cycles() const;  // includes fixed points

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::vector<int> one_based() const;
    std::string str() const;

private:
    std::vector<int> images_;
};

}  // namespace ietlab
