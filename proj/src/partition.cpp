#include "mira/partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mira {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition index is 1-based");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(parts_[0]);
        for (int j = 1; j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c[j - 1] = cnt;
        }
    }
    return Partition(std::move(c));
}

long long Partition::n_stat() const {
    long long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long long>(i) * parts_[i];
    return s;
}

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size()) throw std::invalid_argument("dominance needs equal sizes");
    int a = 0, b = 0;
    int m = std::max(num_parts(), other.num_parts());
    for (int i = 1; i <= m; ++i) {
        a += part(i);
        b += other.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> c;
    int m = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= m; ++i) c.push_back(a.part(i) + b.part(i));
    return Partition(std::move(c));
}

bool interleaves(const Partition& nu, const Partition& theta) {
    int m = std::max(nu.num_parts(), theta.num_parts()) + 1;
    for (int i = 1; i <= m; ++i)
        if (!(nu.part(i) >= theta.part(i) && theta.part(i) >= nu.part(i + 1))) return false;
    return true;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

long long a_function(const Partition& nu, int N) {
    if (nu.size() != N) throw std::invalid_argument("a_function needs |nu| = N");
    return static_cast<long long>(N) * (N - 1) / 2 - nu.n_stat();
}

}  // namespace mira
