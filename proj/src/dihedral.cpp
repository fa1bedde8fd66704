#include "jtrace/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jtrace::dihedral {

using symfunc::MNEvaluator;
using symfunc::partitions_of;

namespace {

CycleType uniform_cycles(int count, int length, int fixed = 0) {
    std::vector<int> parts(count, length);
    parts.insert(parts.end(), fixed, 1);
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace

DihedralClassTable dihedral_classes(int s) {
    if (s < 3)
        throw std::invalid_argument("dihedral_classes: s >= 3 required (degenerate below)");
    DihedralClassTable t;
    t.s = s;
    for (int r = 0; r <= s / 2; ++r) {
        DihedralClass c;
        c.kind = DihedralClass::Kind::rotation;
        c.rotation_step = r;
        c.label = r == 0 ? "1" : "a^" + std::to_string(r);
        c.size = (r == 0 || 2 * r == s) ? 1 : 2;
        int g = std::gcd(r, s);
        c.cycle_type = r == 0 ? uniform_cycles(0, 1, s) : uniform_cycles(g, s / g);
        c.twist_sign = 1;
        t.classes.push_back(std::move(c));
    }
    if (s % 2 == 1) {
        DihedralClass c;
        c.kind = DihedralClass::Kind::reflection;
        c.label = "b";
        c.size = s;
        c.cycle_type = uniform_cycles((s - 1) / 2, 2, 1);
        c.twist_sign = -1;
        t.classes.push_back(std::move(c));
    } else {
        DihedralClass edge;
        edge.kind = DihedralClass::Kind::reflection;
        edge.label = "b";
        edge.size = s / 2;
        edge.cycle_type = uniform_cycles(s / 2, 2);
        edge.twist_sign = -1;
        t.classes.push_back(std::move(edge));
        DihedralClass vertex;
        vertex.kind = DihedralClass::Kind::reflection;
        vertex.label = "ab";
        vertex.size = s / 2;
        vertex.cycle_type = uniform_cycles(s / 2 - 1, 2, 2);
        vertex.twist_sign = -1;
        t.classes.push_back(std::move(vertex));
    }
    long long total = 0;
    for (const auto& c : t.classes) total += c.size;
    if (total != 2LL * s) throw std::logic_error("dihedral class sizes do not sum to 2s");
    return t;
}

long long coinvariant_multiplicity(int s, const Partition& lambda, bool twist) {
    if (lambda.n() != s)
        throw std::invalid_argument("coinvariant_multiplicity: |lambda| != s");
    auto table = dihedral_classes(s);
    long long acc = 0;
    for (const auto& c : table.classes) {
        MNEvaluator ev(c.cycle_type);
        long long chi = ev.character(lambda);
        long long sign = twist ? c.twist_sign : 1;
        acc += c.size * sign * chi;
    }
    if (acc % (2 * s) != 0 || acc < 0)
        throw std::logic_error("coinvariant multiplicity is not a nonnegative integer for " +
                               lambda.to_string());
    return acc / (2 * s);
}

long long MultiplicityTable::at(const Partition& lambda) const {
    auto it = entries.find(lambda);
    return it == entries.end() ? 0 : it->second;
}

std::map<Partition, long long> MultiplicityTable::nonzero() const {
    std::map<Partition, long long> out;
    for (const auto& [l, m] : entries)
        if (m) out[l] = m;
    return out;
}

MultiplicityTable hs_decomposition(int s) {
    MultiplicityTable t;
    t.s = s;
    t.twist = (s % 2 == 0);
    t.label = WeightLabel::gl;
    auto table = dihedral_classes(s);
    // evaluate class by class so the character memo is reused across lambdas
    std::map<Partition, long long> acc;
    auto lambdas = partitions_of(s);
    for (const auto& lambda : lambdas) acc[lambda] = 0;
    for (const auto& c : table.classes) {
        MNEvaluator ev(c.cycle_type);
        long long w = c.size * (t.twist ? c.twist_sign : 1);
        for (const auto& lambda : lambdas) acc[lambda] += w * ev.character(lambda);
    }
    for (const auto& lambda : lambdas) {
        long long v = acc[lambda];
        if (v % (2 * s) != 0 || v < 0)
            throw std::logic_error("non-integer coinvariant multiplicity at " + lambda.to_string());
        t.entries[lambda] = v / (2 * s);
    }
    return t;
}

long long series_probe(int s, SeriesFamily family) {
    if (s < 3) throw std::invalid_argument("series_probe: s >= 3");
    bool twist = (s % 2 == 0);
    std::vector<int> parts;
    switch (family) {
        case SeriesFamily::sign: parts.assign(s, 1); break;
        case SeriesFamily::trivial: parts.assign(1, s); break;
        case SeriesFamily::hook2:
            parts.assign(s - 1, 1);
            parts[0] = 2;
            break;
        case SeriesFamily::tworow: parts = {s - 1, 1}; break;
    }
    return coinvariant_multiplicity(s, Partition(std::move(parts)), twist);
}

ClosedFormProbe two_row_closed_form(int p, int k, TwoRowOrder order) {
    if (p < 3) throw std::invalid_argument("two_row_closed_form: p >= 3");
    ClosedFormProbe probe;
    if (order == TwoRowOrder::p) {
        if (k <= 1 || k > (p - 1) / 2)
            throw std::invalid_argument("two_row_closed_form: need 1 < k <= (p-1)/2");
        Rational alpha(binomial(p, k) - binomial(p, k - 1));
        if (k % 2 == 1) {
            probe.printed_value = alpha / rat(2L * p);
        } else {
            int m = k / 2;
            Rational beta(binomial((p - 1) / 2, m) - binomial((p - 1) / 2, m - 1));
            probe.printed_value = (alpha + beta) / rat(2);
        }
        probe.printed_value.canonicalize();
        probe.character_sum = coinvariant_multiplicity(p, Partition({p - k, k}), false);
    } else {
        if (k <= 1 || k > p)
            throw std::invalid_argument("two_row_closed_form: need 1 < k <= p");
        int m = k / 2;
        Integer bracket = binomial(2 * p, k) - binomial(2 * p, k - 1);
        Integer sgn = (k % 2 == 0) ? Integer(1) : Integer(-1);
        bracket += sgn * (p + 1) * binomial(p, m);
        bracket -= Integer(p) * binomial(p - 2, m);
        bracket += Integer(p) * binomial(p - 2, m - 1);
        if (k == p) bracket += 2 * (p - 1);
        probe.printed_value = Rational(bracket) / rat(4L * p);
        probe.printed_value.canonicalize();
        probe.character_sum = coinvariant_multiplicity(2 * p, Partition({2 * p - k, k}), true);
    }
    probe.matches = (probe.printed_value == rat_ll(probe.character_sum));
    return probe;
}

MultiplicityTable gl_sp_dictionary(const MultiplicityTable& t) {
    MultiplicityTable out = t;
    out.label = (t.label == WeightLabel::gl) ? WeightLabel::sp : WeightLabel::gl;
    return out;
}

long long brute_force_coinvariants(int s, int n, bool twist) {
    if (s < 1 || n < 1) throw std::invalid_argument("brute_force_coinvariants: s,n >= 1");
    double words = std::pow(static_cast<double>(n), s);
    if (words > 1e7) throw std::invalid_argument("brute_force_coinvariants: n^s > 10^7");
    long long total = 1;
    for (int i = 0; i < s; ++i) total *= n;

    // the 2s group elements as index permutations, with their twist signs
    std::vector<std::pair<std::vector<int>, int>> group;
    for (int r = 0; r < s; ++r) {
        std::vector<int> perm(s);
        for (int i = 0; i < s; ++i) perm[i] = (i + r) % s;
        group.emplace_back(std::move(perm), 1);
    }
    for (int c = 0; c < s; ++c) {
        std::vector<int> perm(s);
        for (int i = 0; i < s; ++i) perm[i] = ((c - i) % s + s) % s;
        group.emplace_back(std::move(perm), twist ? -1 : 1);
    }

    auto apply = [&](const std::vector<int>& perm, long long w) {
        // digits of w base n, permuted
        std::vector<int> d(s);
        long long x = w;
        for (int i = 0; i < s; ++i) {
            d[i] = static_cast<int>(x % n);
            x /= n;
        }
        long long out = 0;
        for (int i = s - 1; i >= 0; --i) out = out * n + d[perm[i]];
        return out;
    };

    std::vector<int> state(total, 0);  // 0 unvisited; +/-1 sign relative to orbit root
    long long count = 0;
    std::vector<long long> stack;
    for (long long w = 0; w < total; ++w) {
        if (state[w]) continue;
        state[w] = 1;
        stack.assign(1, w);
        bool killed = false;
        while (!stack.empty()) {
            long long v = stack.back();
            stack.pop_back();
            for (const auto& [perm, sign] : group) {
                long long u = apply(perm, v);
                int su = state[v] * sign;
                if (!state[u]) {
                    state[u] = su;
                    stack.push_back(u);
                } else if (state[u] != su) {
                    killed = true;
                }
            }
        }
        if (!killed) ++count;
    }
    return count;
}

}  // namespace jtrace::dihedral
