#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "jtrace/rational.hpp"

namespace jtrace::symfunc {

// Weakly decreasing sequence of positive integers. The empty partition
// (n = 0) is legal; degenerate cases elsewhere depend on it.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;  // e.g. "[3,2,1]"

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Cycle lengths of a permutation, fixed points included as 1s.
using CycleType = Partition;

// All partitions of n, in a fixed deterministic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

// Size of the conjugacy class of S_n with the given cycle type: n!/z_mu.
long long class_size(const CycleType& mu);

// chi_lambda(mu) by the Murnaghan-Nakayama rule. The evaluator memoizes on
// (remaining shape, remaining cycle suffix) for a fixed cycle type; cycles
// are consumed in decreasing length order.
class MNEvaluator {
public:
    explicit MNEvaluator(CycleType mu);
    long long character(const Partition& lambda);

private:
    std::vector<int> cycles_;  // decreasing
    int n_ = 0;
    std::map<std::pair<std::vector<int>, int>, long long> memo_;
    long long eval(const std::vector<int>& shape, int idx);
};

long long mn_character(const Partition& lambda, const CycleType& mu);

// Independent oracle: coefficient of x^(lambda+delta) in a_delta * prod p_mu,
// expanding the staircase alternant over its symmetric group. Exponential;
// gated to n <= 8.
long long frobenius_character(const Partition& lambda, const CycleType& mu);

// Hook length formula.
long long dim_irr(const Partition& lambda);

// Dimension of the GL(n) Schur functor (hook content formula); 0 when
// lambda has more than n rows.
long long dim_gl(const Partition& lambda, int n);

struct ClassFunction {
    int n = 0;
    std::map<CycleType, Rational> values;  // defined on every mu |- n

    Rational at(const CycleType& mu) const;
};

// Inner products <f, chi_lambda> for all lambda |- n. Exact; the
// reconstruction sum_lambda mult * chi_lambda = f holds on the nose.
std::map<Partition, Rational> decompose_class_function(const ClassFunction& f);

}  // namespace jtrace::symfunc
