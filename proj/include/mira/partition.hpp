#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mira {

// Integer partition: weakly decreasing positive parts, trailing zeros dropped.
// Indexed reads past the end return 0 (the interleaving inequalities and the
// Upsilon/Xi formulas rely on that convention).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // 1-based part access; i beyond the last part reads 0.
    int part(int i) const;
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int size() const;  // sum of parts
    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    // n(nu) = sum_i (i-1) nu_i
    long long n_stat() const;

    // Dominance order; both partitions must have the same size.
    // Returns true iff all prefix sums of *this are >= those of other.
    bool dominates(const Partition& other) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Componentwise sum (lambda + mu).
Partition operator+(const Partition& a, const Partition& b);

// theta interleaves nu:  nu_i >= theta_i >= nu_{i+1} for all i.
bool interleaves(const Partition& nu, const Partition& theta);

// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

// a_nu = N(N-1)/2 - n(nu), with |nu| = N.
long long a_function(const Partition& nu, int N);

}  // namespace mira
