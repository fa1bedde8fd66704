#include "jtrace/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jtrace::symfunc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = INT32_MAX;
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
        if (p > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
        prev = p;
        n_ += p;
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long long class_size(const CycleType& mu) {
    // n!/z_mu with z_mu = prod l^{m_l} m_l!
    Integer z(1);
    int run = 0;
    int prev = -1;
    for (int l : mu.parts()) {
        if (l == prev)
            ++run;
        else {
            run = 1;
            prev = l;
        }
        z *= Integer(l) * run;
    }
    Integer size = factorial_z(mu.n()) / z;
    return to_longlong(size);
}

MNEvaluator::MNEvaluator(CycleType mu) : cycles_(mu.parts()), n_(mu.n()) {
    // decreasing order is guaranteed by the Partition invariant
}

long long MNEvaluator::character(const Partition& lambda) {
    if (lambda.n() != n_)
        throw std::invalid_argument("character: |lambda| != |mu| (" + lambda.to_string() + ")");
    return eval(lambda.parts(), 0);
}

long long MNEvaluator::eval(const std::vector<int>& shape, int idx) {
    if (idx == static_cast<int>(cycles_.size())) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, idx);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // Beta-number encoding: strips of length l are moves beta -> beta - l
    // landing outside the set; the height is the number of betas jumped over.
    const int l = cycles_[idx];
    const int m = static_cast<int>(shape.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = shape[i] + (m - 1 - i);
    long long total = 0;
    for (int i = 0; i < m; ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nshape;
        nshape.reserve(m);
        for (int j = 0; j < m; ++j) {
            int part = nb[j] - (m - 1 - j);
            if (part > 0) nshape.push_back(part);
        }
        long long sub = eval(nshape, idx + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_[key] = total;
    return total;
}

long long mn_character(const Partition& lambda, const CycleType& mu) {
    MNEvaluator ev(mu);
    return ev.character(lambda);
}

namespace {

// Signed permutations of {0..m-1} via Heap's algorithm.
void signed_permutations(int m, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    int sign = 1;
    std::function<void(int)> heap = [&](int k) {
        if (k == 1) {
            fn(perm, sign);
            return;
        }
        for (int i = 0; i < k; ++i) {
            heap(k - 1);
            if (i < k - 1) {
                std::swap(perm[k % 2 == 0 ? i : 0], perm[k - 1]);
                sign = -sign;
            }
        }
    };
    if (m == 0)
        fn(perm, 1);
    else
        heap(m);
}

}  // namespace

long long frobenius_character(const Partition& lambda, const CycleType& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("frobenius_character: |lambda| != |mu|");
    if (lambda.n() > 8)
        throw std::invalid_argument("frobenius_character is an oracle, gated to n <= 8");
    if (lambda.empty()) return 1;

    const int m = lambda.rows();
    std::vector<int> target(m);  // lambda + delta
    for (int i = 0; i < m; ++i) target[i] = lambda.parts()[i] + (m - 1 - i);

    // a_delta as a signed sum over the staircase's symmetric group, then
    // multiply by every power sum, truncating to exponents <= target.
    std::map<std::vector<int>, long long> poly;
    signed_permutations(m, [&](const std::vector<int>& perm, int sign) {
        std::vector<int> expo(m);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            expo[i] = m - 1 - perm[i];
            if (expo[i] > target[i]) ok = false;
        }
        if (ok) poly[expo] += sign;
    });
    for (int l : mu.parts()) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [expo, coeff] : poly) {
            for (int j = 0; j < m; ++j) {
                if (expo[j] + l > target[j]) continue;
                std::vector<int> e = expo;
                e[j] += l;
                next[e] += coeff;
            }
        }
        poly = std::move(next);
    }
    auto it = poly.find(target);
    return it == poly.end() ? 0 : it->second;
}

namespace {

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int rows = lambda.rows();
    std::vector<int> col_height;  // number of cells below-or-at in each column
    if (rows) col_height.assign(parts[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < parts[i]; ++j) ++col_height[j];
    std::vector<std::vector<int>> h(rows);
    for (int i = 0; i < rows; ++i) {
        h[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j)
            h[i][j] = (parts[i] - j - 1) + (col_height[j] - i - 1) + 1;
    }
    return h;
}

}  // namespace

long long dim_irr(const Partition& lambda) {
    Integer num = factorial_z(lambda.n());
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) num /= h;
    return to_longlong(num);
}

long long dim_gl(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("dim_gl: n must be >= 1");
    if (lambda.rows() > n) return 0;
    Integer num(1), den(1);
    auto hooks = hook_lengths(lambda);
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            num *= n + j - i;
            den *= hooks[i][j];
        }
    return to_longlong(Integer(num / den));
}

Rational ClassFunction::at(const CycleType& mu) const {
    auto it = values.find(mu);
    if (it == values.end())
        throw std::invalid_argument("class function undefined on " + mu.to_string());
    return it->second;
}

std::map<Partition, Rational> decompose_class_function(const ClassFunction& f) {
    const auto lambdas = partitions_of(f.n);
    const Integer nfact = factorial_z(f.n);
    std::map<Partition, Rational> out;
    for (const auto& lambda : lambdas) out[lambda] = Rational(0);
    // one evaluator per class so the memo table is shared across all lambdas
    for (const auto& mu : partitions_of(f.n)) {
        MNEvaluator ev(mu);
        Rational w = Rational(static_cast<long>(class_size(mu))) * f.at(mu);
        if (w == 0) continue;
        for (const auto& lambda : lambdas) out[lambda] += w * Rational(static_cast<long>(ev.character(lambda)));
    }
    for (auto& [lambda, mult] : out) {
        (void)lambda;
        mult /= Rational(nfact);
        mult.canonicalize();
    }
    return out;
}

}  // namespace jtrace::symfunc
