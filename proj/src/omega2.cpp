#include "jtrace/omega2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jtrace::omega2 {

using symfunc::ClassFunction;
using symfunc::Partition;

std::string PairWord::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(left[i]);
    }
    s += "|";
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(right[i]);
    }
    return s + "]";
}

namespace {

// signed reversal: rho(w) = (-1)^|w| reverse(w)
std::pair<int, Word> rho(const Word& w) {
    Word r(w.rbegin(), w.rend());
    return {w.size() % 2 == 0 ? 1 : -1, std::move(r)};
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

using RowMap = std::map<PairWord, Rational>;

void row_add(RowMap& row, PairWord g, const Rational& c) {
    auto [it, fresh] = row.try_emplace(std::move(g), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) row.erase(it);
    }
}

RowMap s3_row(const PairWord& g) {
    RowMap row;
    row_add(row, g, Rational(1));
    auto [sl, rl] = rho(g.left);
    auto [sr, rr] = rho(g.right);
    row_add(row, PairWord{std::move(rl), std::move(rr)}, rat(-sl * sr));
    return row;
}

RowMap s4_row(const PairWord& g) {
    RowMap row;
    row_add(row, g, Rational(1));
    auto [sl, rl] = rho(g.left);
    auto [sr, rr] = rho(g.right);
    row_add(row, PairWord{std::move(rr), std::move(rl)}, rat(-sl * sr));
    return row;
}

RowMap ihx1_row(const PairWord& g, int letter) {
    RowMap row;
    row_add(row, PairWord{concat(g.left, {letter}), g.right}, Rational(1));
    row_add(row, PairWord{g.left, concat({letter}, g.right)}, Rational(-1));
    row_add(row, PairWord{concat({letter}, g.left), g.right}, Rational(-1));
    row_add(row, PairWord{g.left, concat(g.right, {letter})}, Rational(1));
    return row;
}

// ordered subword/complement splits of w over all position subsets
void for_each_split(const Word& w, const std::function<void(const Word&, const Word&)>& fn) {
    const std::size_t n = w.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        Word in, out;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? in : out).push_back(w[i]);
        fn(in, out);
    }
}

RowMap tri_row(const PairWord& g) {
    RowMap row;
    // splits of the left word: [rho(I) | J ++ right], empty-left dropped
    for_each_split(g.left, [&](const Word& in, const Word& out) {
        if (in.empty()) return;  // empty left word is zero
        auto [s, r] = rho(in);
        row_add(row, PairWord{std::move(r), concat(out, g.right)}, rat(s));
    });
    row_add(row, g, Rational(1));
    // splits of the right word: [left ++ rho(I) | J], empty-right dropped
    for_each_split(g.right, [&](const Word& in, const Word& out) {
        if (out.empty()) return;  // empty right word is zero
        auto [s, r] = rho(in);
        row_add(row, PairWord{concat(g.left, r), out}, rat(s));
    });
    return row;
}

exactlin::SparseRow to_sparse(const RowMap& row, const std::map<PairWord, int>& index,
                              int ambient) {
    std::map<int, Rational> cols;
    for (const auto& [g, c] : row) {
        auto it = index.find(g);
        if (it == index.end())
            throw std::logic_error("relation row leaves the generator basis at " + g.to_string());
        cols[it->second] = c;
    }
    (void)ambient;
    return exactlin::SparseRow(cols.begin(), cols.end());
}

}  // namespace

std::vector<PairWord> enumerate_generators(int h) {
    if (h < 0) throw std::invalid_argument("enumerate_generators: h >= 0");
    std::vector<PairWord> out;
    if (h < 2) return out;
    std::vector<int> labels(h);
    std::iota(labels.begin(), labels.end(), 1);
    for (int m = 1; m <= h - 1; ++m) {
        // ordered selections for the left word; the right word is an ordered
        // arrangement of the complement
        std::vector<bool> pick(h, false);
        std::fill(pick.begin(), pick.begin() + m, true);
        std::vector<PairWord> level;
        do {
            Word chosen, rest;
            for (int i = 0; i < h; ++i) (pick[i] ? chosen : rest).push_back(labels[i]);
            Word l = chosen;
            std::sort(l.begin(), l.end());
            do {
                Word r = rest;
                std::sort(r.begin(), r.end());
                do {
                    level.push_back(PairWord{l, r});
                } while (std::next_permutation(r.begin(), r.end()));
            } while (std::next_permutation(l.begin(), l.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

RelationSet relation_rows_for_basis(std::vector<PairWord> basis, const std::vector<int>& letters) {
    RelationSet rs;
    rs.basis = std::move(basis);
    for (int i = 0; i < static_cast<int>(rs.basis.size()); ++i) rs.index[rs.basis[i]] = i;
    rs.rows = exactlin::ExactSparseMatrix(0, static_cast<int>(rs.basis.size()));

    auto push = [&](const RowMap& row, RowTag tag) {
        rs.rows.add_row(to_sparse(row, rs.index, rs.rows.ncols));
        rs.tags.push_back(tag);
    };

    for (const auto& g : rs.basis) push(s3_row(g), RowTag::s3);
    for (const auto& g : rs.basis) push(s4_row(g), RowTag::s4);
    // IHX1: one row per extra letter and sub-generator on the rest
    for (int letter : letters) {
        std::map<PairWord, bool> seen;
        for (const auto& g : rs.basis) {
            // sub-generators arise by deleting one occurrence of `letter`
            for (int side = 0; side < 2; ++side) {
                const Word& w = side == 0 ? g.left : g.right;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (w[i] != letter) continue;
                    Word reduced = w;
                    reduced.erase(reduced.begin() + static_cast<long>(i));
                    if (reduced.empty()) continue;
                    PairWord sub = side == 0 ? PairWord{reduced, g.right}
                                             : PairWord{g.left, reduced};
                    if (sub.left.empty() || sub.right.empty()) continue;
                    seen.try_emplace(sub, true);
                }
            }
        }
        for (const auto& [sub, flag] : seen) {
            (void)flag;
            push(ihx1_row(sub, letter), RowTag::ihx1);
        }
    }
    for (const auto& g : rs.basis) push(tri_row(g), RowTag::tri);
    return rs;
}

RelationSet relation_rows(int h) {
    if (h < 2) throw std::invalid_argument("relation_rows: h >= 2");
    std::vector<int> letters(h);
    std::iota(letters.begin(), letters.end(), 1);
    return relation_rows_for_basis(enumerate_generators(h), letters);
}

int quotient_dim(int h, std::uint64_t prime_seed) {
    if (h < 0 || h > 7) throw std::invalid_argument("quotient_dim: guarded to 0 <= h <= 7");
    if (h < 2) return 0;
    auto rs = relation_rows(h);
    int ambient = static_cast<int>(rs.basis.size());
    int rk = exactlin::rank(rs.rows);
    for (int i = 0; i < 2; ++i) {
        std::uint64_t prime = exactlin::verification_prime(prime_seed, i);
        int mrk;
        try {
            mrk = exactlin::modular_rank(rs.rows, prime);
        } catch (const std::domain_error&) {
            prime = exactlin::verification_prime(prime_seed + 1000 + i, 0);
            mrk = exactlin::modular_rank(rs.rows, prime);
        }
        if (mrk != rk)
            throw std::logic_error("modular rank disagrees with exact rank at h = " +
                                   std::to_string(h));
    }
    return ambient - rk;
}

std::map<Partition, long long> EquivariantQuotient::nonzero() const {
    std::map<Partition, long long> out;
    for (const auto& [l, m] : decomposition)
        if (m) out[l] = m;
    return out;
}

namespace {

// permutation of {1..h} with the given cycle type, cycles laid out in order
std::vector<int> representative_permutation(const Partition& mu) {
    std::vector<int> perm(mu.n() + 1);
    int start = 1;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

PairWord apply_permutation(const std::vector<int>& perm, const PairWord& g) {
    PairWord out = g;
    for (int& x : out.left) x = perm[x];
    for (int& x : out.right) x = perm[x];
    return out;
}

}  // namespace

EquivariantQuotient equivariant_decomposition(int h) {
    if (h < 0 || h > 6)
        throw std::invalid_argument("equivariant_decomposition: guarded to h <= 6");
    EquivariantQuotient eq;
    eq.h = h;
    eq.character.n = h;
    if (h < 2) {
        for (const auto& mu : symfunc::partitions_of(h)) eq.character.values[mu] = Rational(0);
        for (const auto& lambda : symfunc::partitions_of(h)) eq.decomposition[lambda] = 0;
        return eq;
    }
    auto rs = relation_rows(h);
    eq.basis = rs.basis;
    eq.quotient = exactlin::build_quotient(static_cast<int>(rs.basis.size()), rs.rows);

    // trace of each class representative on the quotient basis
    const auto& q = eq.quotient;
    std::map<int, int> pivot_row;  // pivot column -> row index
    for (int i = 0; i < static_cast<int>(q.pivot_columns.size()); ++i)
        pivot_row[q.pivot_columns[i]] = i;
    for (const auto& mu : symfunc::partitions_of(h)) {
        auto perm = representative_permutation(mu);
        Rational trace(0);
        for (int fi = 0; fi < q.dim(); ++fi) {
            int c = q.free_columns[fi];
            PairWord image = apply_permutation(perm, rs.basis[c]);
            int j = rs.index.at(image);
            auto pit = pivot_row.find(j);
            if (pit == pivot_row.end()) {
                if (j == c) trace += 1;
            } else {
                // [e_j] = -(free part of the pivot row)
                trace -= exactlin::row_get(q.reduced_relation_rows.rows[pit->second], c);
            }
        }
        if (!is_integral(trace))
            throw std::logic_error("equivariant character is not an integer at " + mu.to_string());
        eq.character.values[mu] = trace;
    }

    auto mult = symfunc::decompose_class_function(eq.character);
    long long total = 0;
    for (const auto& [lambda, m] : mult) {
        if (!is_integral(m) || m < 0)
            throw std::logic_error("equivariant multiplicity is not a nonnegative integer at " +
                                   lambda.to_string());
        eq.decomposition[lambda] = to_longlong(m);
        total += to_longlong(m) * symfunc::dim_irr(lambda);
    }
    if (total != q.dim())
        throw std::logic_error("multiplicities do not add up to the quotient dimension");
    return eq;
}

namespace {

std::vector<PairWord> alphabet_generators(int alphabet_size, int h) {
    std::vector<PairWord> out;
    if (h < 2) return out;
    // all words of each length over the alphabet, lexicographic
    auto words_of = [&](int len) {
        std::vector<Word> ws;
        Word cur(len, 0);
        while (true) {
            ws.push_back(cur);
            int i = len - 1;
            while (i >= 0 && cur[i] == alphabet_size - 1) cur[i--] = 0;
            if (i < 0) break;
            ++cur[i];
        }
        return ws;
    };
    for (int m = 1; m <= h - 1; ++m) {
        auto ls = words_of(m);
        auto rsw = words_of(h - m);
        for (const auto& l : ls)
            for (const auto& r : rsw) out.push_back(PairWord{l, r});
    }
    return out;
}

}  // namespace

exactlin::QuotientModule alphabet_quotient(int alphabet_size, int h) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet_quotient: empty alphabet");
    double ambient = (h - 1) * std::pow(static_cast<double>(alphabet_size), h);
    if (ambient > 30240)
        throw std::invalid_argument("alphabet_quotient: generator count exceeds the desk guard");
    auto basis = alphabet_generators(alphabet_size, h);
    if (basis.empty()) return exactlin::build_quotient(0, exactlin::ExactSparseMatrix(0, 0));
    std::vector<int> letters(alphabet_size);
    std::iota(letters.begin(), letters.end(), 0);
    auto rs = relation_rows_for_basis(std::move(basis), letters);
    return exactlin::build_quotient(static_cast<int>(rs.basis.size()), rs.rows);
}

void Omega2Element::accumulate(const Omega2Element& other, const Rational& c) {
    for (const auto& [g, v] : other.coords) {
        auto [it, fresh] = coords.try_emplace(g, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second == 0) coords.erase(it);
        }
    }
}

const BlockProjector::Block& BlockProjector::block_for_pattern(const Word& pattern) {
    auto it = blocks_.find(pattern);
    if (it != blocks_.end()) return it->second;

    Block block;
    // arrangements of the multiset into two nonempty words
    const int h = static_cast<int>(pattern.size());
    Word sorted = pattern;
    std::sort(sorted.begin(), sorted.end());
    for (int m = 1; m <= h - 1; ++m) {
        // choose positions for the left word among all distinct permutations
        Word perm = sorted;
        std::vector<PairWord> level;
        do {
            Word l(perm.begin(), perm.begin() + m);
            Word r(perm.begin() + m, perm.end());
            level.push_back(PairWord{std::move(l), std::move(r)});
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (auto& g : level) block.basis.push_back(std::move(g));
    }
    std::sort(block.basis.begin(), block.basis.end());
    block.basis.erase(std::unique(block.basis.begin(), block.basis.end()), block.basis.end());
    for (int i = 0; i < static_cast<int>(block.basis.size()); ++i) block.index[block.basis[i]] = i;

    Word distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto rs = relation_rows_for_basis(block.basis, distinct);
    block.quotient = exactlin::build_quotient(static_cast<int>(block.basis.size()), rs.rows);
    auto [pos, fresh] = blocks_.emplace(pattern, std::move(block));
    (void)fresh;
    return pos->second;
}

Omega2Element BlockProjector::project(const std::map<PairWord, Rational>& raw) {
    // group by the actual letter multiset; each group is renamed onto a
    // canonical pattern so isomorphic blocks share one cached quotient
    struct Group {
        Word pattern;
        std::map<int, int> to_pattern;
        std::vector<int> from_pattern;
        std::map<int, Rational> ambient;  // generator index -> coefficient
    };
    std::map<Word, Group> groups;  // keyed by sorted letters
    for (const auto& [g, c] : raw) {
        if (c == 0) continue;
        if (g.left.empty() || g.right.empty()) continue;  // zero by the loop relation
        Word letters = g.left;
        letters.insert(letters.end(), g.right.begin(), g.right.end());
        std::sort(letters.begin(), letters.end());

        auto& group = groups[letters];
        if (group.from_pattern.empty()) {
            Word distinct = letters;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int i = 0; i < static_cast<int>(distinct.size()); ++i)
                group.to_pattern[distinct[i]] = i;
            group.from_pattern = distinct;
            group.pattern = letters;
            for (int& x : group.pattern) x = group.to_pattern[x];
        }
        PairWord renamed = g;
        for (int& x : renamed.left) x = group.to_pattern.at(x);
        for (int& x : renamed.right) x = group.to_pattern.at(x);
        const Block& block = block_for_pattern(group.pattern);
        auto [it, fresh] = group.ambient.try_emplace(block.index.at(renamed), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) group.ambient.erase(it);
        }
    }

    Omega2Element out;
    for (const auto& [letters, group] : groups) {
        (void)letters;
        const Block& block = block_for_pattern(group.pattern);
        exactlin::SparseRow v(group.ambient.begin(), group.ambient.end());
        auto coords = block.quotient.project(v);
        for (const auto& [fi, c] : coords) {
            PairWord g = block.basis[block.quotient.free_columns[fi]];
            for (int& x : g.left) x = group.from_pattern[x];
            for (int& x : g.right) x = group.from_pattern[x];
            out.coords[g] = c;
        }
    }
    return out;
}

}  // namespace jtrace::omega2
