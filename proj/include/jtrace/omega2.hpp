#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jtrace/exactlin.hpp"
#include "jtrace/symfunc.hpp"

namespace jtrace::omega2 {

using Word = std::vector<int>;

// Ordered pair of nonempty words: the [left|right] theta-type generator.
// In distinct-label mode the letters are 1..h, each used exactly once across
// both words; in alphabet mode letters repeat.
struct PairWord {
    Word left;
    Word right;

    friend auto operator<=>(const PairWord&, const PairWord&) = default;
    std::string to_string() const;
};

// Generator order: by left-word length, then lexicographic on (left, right).
std::vector<PairWord> enumerate_generators(int h);

enum class RowTag { s3, s4, ihx1, tri };

struct RelationSet {
    std::vector<PairWord> basis;
    std::map<PairWord, int> index;
    exactlin::ExactSparseMatrix rows;
    std::vector<RowTag> tags;
};

// All relation rows over the distinct-label generators: one S3 and one S4
// row per generator, one IHX1 row per (extra label, generator on the rest),
// one TRI row per generator.
RelationSet relation_rows(int h);

// Quotient dimension of the distinct-label presentation, cross-checked by
// modular rank at two verification primes. Guarded to h <= 7.
int quotient_dim(int h, std::uint64_t prime_seed = 0xD1CE5EEDull);

struct EquivariantQuotient {
    int h = 0;
    std::vector<PairWord> basis;
    exactlin::QuotientModule quotient;
    symfunc::ClassFunction character;                    // of the S_h action
    std::map<symfunc::Partition, long long> decomposition;

    std::map<symfunc::Partition, long long> nonzero() const;
};

// Character of the S_h action on the quotient and its decomposition into
// irreducibles; multiplicities double as the Sp-multiplicities of the
// rank-2 target space with h hairs. Guarded to h <= 6.
EquivariantQuotient equivariant_decomposition(int h);

// Relation rows over an explicit generator basis (alphabet mode: letters
// with repetition). Exposed for tests.
RelationSet relation_rows_for_basis(std::vector<PairWord> basis, const std::vector<int>& letters);

// Presentation over words in an alphabet of the given size (letters
// 0..alphabet_size-1, repetition allowed), total letters h per generator.
exactlin::QuotientModule alphabet_quotient(int alphabet_size, int h);

// Projected element of the rank-2 space over arbitrary letters, stored as
// canonical coordinates on the free generators of each letter-multiset
// block.
struct Omega2Element {
    std::map<PairWord, Rational> coords;
    bool zero() const { return coords.empty(); }
    void accumulate(const Omega2Element& other, const Rational& c = Rational(1));
    friend bool operator==(const Omega2Element&, const Omega2Element&) = default;
};

// Projects raw [left|right] words through the presentation quotient. The
// relations preserve the letter multiset, so the computation runs blockwise
// per multiset; blocks are cached up to letter relabeling.
class BlockProjector {
public:
    Omega2Element project(const std::map<PairWord, Rational>& raw);

private:
    struct Block {
        std::vector<PairWord> basis;
        std::map<PairWord, int> index;
        exactlin::QuotientModule quotient;
    };
    std::map<Word, Block> blocks_;  // keyed by the normalized letter multiset

    const Block& block_for_pattern(const Word& pattern);
};

}  // namespace jtrace::omega2
