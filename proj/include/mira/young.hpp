#pragma once

#include <utility>
#include <vector>

#include "mira/partition.hpp"

namespace mira {

struct CellTriple {
    Partition nu, theta, nu_prime;

    bool consistent() const {
        return nu.size() == nu_prime.size() && interleaves(nu, theta) &&
               interleaves(nu_prime, theta);
    }
    std::string to_string() const {
        return nu.to_string() + "/" + theta.to_string() + "/" + nu_prime.to_string();
    }
    auto operator<=>(const CellTriple&) const = default;
};

struct PartitionPair {
    Partition lambda, mu;
    auto operator<=>(const PartitionPair&) const = default;
};

// nu = lambda + mu, theta_i = lambda_{i+1} + mu_i.
std::pair<Partition, Partition> upsilon(const Partition& lambda, const Partition& mu);

// Inverse of upsilon on interleaving pairs:
//   lambda_i = sum_{k>=i} (nu_k - theta_k),  mu_i = sum_{k>=i} (theta_k - nu_{k+1}).
std::pair<Partition, Partition> xi(const Partition& nu, const Partition& theta);

// All (nu, theta, nu') with |nu| = |nu'| = N and theta interleaving both.
std::vector<CellTriple> enumerate_cell_triples(int N);

}  // namespace mira
