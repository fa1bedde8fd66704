#pragma once

#include <map>
#include <string>
#include <vector>

#include "jtrace/symfunc.hpp"

namespace jtrace::dihedral {

using symfunc::CycleType;
using symfunc::Partition;

struct DihedralClass {
    enum class Kind { rotation, reflection };
    Kind kind;
    int rotation_step = 0;      // rotations: class {a^r, a^-r}
    std::string label;          // "1", "a^r", "b", "ab"
    long long size = 0;
    CycleType cycle_type;       // as a permutation of the s polygon vertices
    int twist_sign = 1;         // +1 on rotations, -1 on reflections
};

struct DihedralClassTable {
    int s = 0;
    std::vector<DihedralClass> classes;  // sizes sum to 2s
};

// Conjugacy classes of the dihedral group of order 2s acting on s points.
// Rotation a^r has gcd(r,s) cycles of length s/gcd(r,s). For odd s the
// reflections form one class of type (2^((s-1)/2),1); for even s they split
// into edge type (2^(s/2)) and vertex type (2^(s/2-1),1,1).
DihedralClassTable dihedral_classes(int s);

// (1/2s) sum over the group of chi_lambda, with the reflection sign thrown
// in when twist is set. Must land in the nonnegative integers.
long long coinvariant_multiplicity(int s, const Partition& lambda, bool twist);

enum class WeightLabel { gl, sp };

struct MultiplicityTable {
    int s = 0;
    bool twist = false;
    WeightLabel label = WeightLabel::gl;
    std::map<Partition, long long> entries;  // every lambda |- s

    long long at(const Partition& lambda) const;
    std::map<Partition, long long> nonzero() const;
};

// Multiplicity of every [lambda] in the dihedral coinvariants of the s-th
// tensor power; the twist is applied automatically when s is even.
MultiplicityTable hs_decomposition(int s);

enum class SeriesFamily { sign, trivial, hook2, tworow };

// Multiplicity of [1^s], [s], [2,1^(s-2)] or [s-1,1] with the automatic twist.
long long series_probe(int s, SeriesFamily family);

struct ClosedFormProbe {
    Rational printed_value;     // the closed form exactly as published
    long long character_sum;    // ground truth from the character average
    bool matches;
};

enum class TwoRowOrder { p, two_p };

// Closed-form multiplicity for two-row shapes at order p (partition
// [p-k,k]) or order 2p (partition [2p-k,k]), with a verification record
// against the character sum. Known misprints make some probes mismatch;
// callers get both values.
ClosedFormProbe two_row_closed_form(int p, int k, TwoRowOrder order);

// Relabels a GL-side table as Sp data (identity on the numbers; valid in
// the stable range dim H >> s).
MultiplicityTable gl_sp_dictionary(const MultiplicityTable& t);

// Independent oracle: the dihedral action on all n^s basis words, counting
// orbits not killed by a sign. Guarded by n^s <= 10^7.
long long brute_force_coinvariants(int s, int n, bool twist);

}  // namespace jtrace::dihedral
