#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmg/spin_algebra.hpp"

namespace lmg {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

// The oracle suites behind the CLI `validate` mode: tensor-product construction
// vs Dicke basis, pure-state asymmetry closed form vs the eigenvalue route, and
// the golden-section s(x) vs a dense scan. The seed feeds the randomized checks.
std::vector<SuiteResult> run_validation_suites(std::uint64_t seed);

// Random Hermitian test matrices and states shared by the validation suites and
// the test binaries.
class RandomHermitianSource {
public:
    explicit RandomHermitianSource(std::uint64_t seed);
    ~RandomHermitianSource();

    StateVector state(int dim);
    HermitianOperator hermitian(int dim);
    HermitianOperator density_matrix(int dim, int rank);

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace lmg
