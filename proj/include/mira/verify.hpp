#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mira/bimodule.hpp"
#include "mira/hecke.hpp"

namespace mira {

enum class CheckStatus { Pass, Fail, Reported };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    // true iff no non-conjecture check failed
    bool ok() const;
};

struct VerifyOptions {
    int n = -1;  // -1 = per-check default bound
    long long p = 10007;
    std::uint64_t seed = 42;
};

// In-process shared tables (built once per N).
const KLTable& shared_kl(int N);
const RKLTable& shared_rkl(int N);

// Acceptance criteria, one callable each; `name` is the printed label.
CheckResult acc_worked_example();
CheckResult acc_bijectivity_rank(int n_max = 6);
CheckResult acc_oracle_equivalence(int n_max = 5);
CheckResult acc_fq_ground_truth();
CheckResult acc_kl_invariants(int n_max = 4);
CheckResult acc_cells_n3();
CheckResult acc_theorem_l(int n_max = 4);
CheckResult acc_monte_carlo(int n_max = 5, long long p = 10007, std::uint64_t seed = 42);
CheckResult acc_fourier(int n_max = 5, int n_max_kl = 4);
CheckResult acc_classify_roundtrip(long long p = 10007, std::uint64_t seed = 42);
CheckResult acc_length_dimension(int n_max = 4, long long p = 10007);
CheckResult acc_asymptotic(int n_max = 4);

// All twelve, in order.
std::vector<CheckResult> acceptance_checks(long long p = 10007, std::uint64_t seed = 42);

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt);

// Consolidated conjecture report (micro-vs-KL cells, asymptotic degree bound,
// matrix-unit identification) at a given N.
std::vector<CheckResult> conjecture_report(int N);

// Disk cache for KL tables, revalidated by bar-invariance spot checks.
class TableCache {
public:
    explicit TableCache(std::string dir);
    const std::string& dir() const { return dir_; }
    // Load the bimodule KL table for N, or build and store it.
    RKLTable load_or_build(int N, std::uint64_t seed = 42);
    std::string path_for(int N) const;

private:
    std::string dir_;
};

}  // namespace mira
