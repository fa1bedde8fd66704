#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "jtrace/rational.hpp"

namespace jtrace::lietrees {

// Basis letters of the symplectic space H: letter 2i is p_{i+1}, letter
// 2i+1 is q_{i+1}, ordered p1 < q1 < p2 < q2 < ...  <p_i,q_i> = 1.
struct SymplecticSpace {
    int genus = 0;
    int dim() const { return 2 * genus; }
};

int p_letter(int i);  // 1-based
int q_letter(int i);
std::string letter_name(int letter);
int contraction_sign(int a, int b);

// Finitely supported vector in H.
using HVector = std::map<int, Rational>;

HVector basis_vector(int letter);
Rational contract(const HVector& u, const HVector& v);

// Unitrivalent tree: leaves carry an HVector label (or an abstract hair
// index), internal vertices are trivalent with the neighbor list giving the
// cyclic order.
struct Tree {
    struct Vertex {
        std::vector<int> nb;  // 1 neighbor for leaves, 3 (cyclic) for internal
        HVector label;        // leaves only
        int hair = -1;        // abstract hair index, or -1
        bool leaf() const { return nb.size() == 1; }
    };
    std::vector<Vertex> verts;

    int order() const;                  // number of trivalent vertices
    std::vector<int> leaf_ids() const;
    int slot_of(int v, int neighbor) const;
    void check() const;                 // structural invariants
};

Tree make_tripod(const HVector& a, const HVector& b, const HVector& c);

// Text form: leaf = p3 | q1 | #k; top vertex = (T1,T2,T3) read cyclically;
// inner vertices = (T1,T2), the third half-edge being the parent. Throws
// with a byte offset on malformed input.
Tree parse_tree(const std::string& text, const SymplecticSpace& space);

Tree random_labeled_tree(int order, int genus, std::mt19937_64& rng);

// Tensor words over basis letters (negative values are reserved markers).
using Word = std::vector<int>;
using WordSum = std::map<Word, Rational>;

WordSum word_concat(const WordSum& a, const WordSum& b);
WordSum word_scale(const WordSum& a, const Rational& c);
void word_accumulate(WordSum& into, const WordSum& from, const Rational& c = Rational(1));

// Optional leaf overrides replace a leaf's label by a fixed marker letter.
using LeafOverrides = std::map<int, int>;

// Bracket-word expansion of the subtree entered at `vertex` coming from
// `from`; [A,B] opens as AB - BA.
WordSum expand_subtree(const Tree& t, int vertex, int from, const LeafOverrides& ov = {});

// Terms of the expansion rooted at `root_leaf` in which the `target_leaf`
// letter stands first, with that letter stripped: the word read along the
// cycle closed by an external edge root->target.
WordSum collect_cycle_word(const Tree& t, int root_leaf, int target_leaf,
                           const LeafOverrides& ov = {});

// Element of H (x) H^(s+1), keyed by (first-slot letter, word).
struct DerivationElement {
    int order = 0;
    std::map<std::pair<int, Word>, Rational> terms;

    bool zero() const { return terms.empty(); }
    void accumulate(const DerivationElement& other, const Rational& c = Rational(1));

    // zero elements compare equal regardless of the nominal order
    friend bool operator==(const DerivationElement& a, const DerivationElement& b) {
        return a.terms == b.terms && (a.terms.empty() || a.order == b.order);
    }
};

// Sum over leaves x of label(x) (x) (expansion rooted at x).
DerivationElement eta(const Tree& t);

// Formal linear combination of trees.
struct TreeSum {
    std::vector<std::pair<Rational, Tree>> terms;
    bool zero() const { return terms.empty(); }
};

// [t1,t2]: join every leaf of t1 to every leaf of t2, weighted by the
// contraction of the labels.
TreeSum bracket_trees(const Tree& t1, const Tree& t2);
TreeSum bracket_trees(const TreeSum& a, const TreeSum& b);
DerivationElement eta(const TreeSum& s);

// Left-normed iterated bracket [...[[t1,t2],t3]...,tk].
TreeSum iterated_bracket(const std::vector<Tree>& trees);

// Commutator of the two derivations, written back in H (x) H^(s+1)
// coordinates. Inputs must pass is_in_D.
DerivationElement derivation_bracket(const DerivationElement& x, const DerivationElement& y);

// Both membership tests (bracketing-map kernel; the derivation kills
// omega = sum [p_i,q_i]) plus the Dynkin-Specht-Wever check that each
// first-slot slice lies in the free Lie algebra.
bool is_in_D(const DerivationElement& x);

// Left-normed bracketing w1 w2 ... wk -> [[w1,w2],...,wk] on tensor words.
WordSum dynkin(const WordSum& w);

struct LieMonomial {
    Word word;            // the Lyndon word
    std::string bracket;  // e.g. "[0,[0,1]]"
    WordSum expansion;    // image in the tensor algebra
};

// Lyndon-word basis of the degree part of the free Lie algebra on an
// alphabet of the given size; sized by the Witt formula.
std::vector<LieMonomial> lyndon_basis(int degree, int alphabet_size);

long long witt_number(int degree, int alphabet_size);

}  // namespace jtrace::lietrees
