#include "jtrace/lietrees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jtrace::lietrees {

int p_letter(int i) { return 2 * (i - 1); }
int q_letter(int i) { return 2 * (i - 1) + 1; }

std::string letter_name(int letter) {
    if (letter < 0) return "#" + std::to_string(-letter);
    return (letter % 2 == 0 ? "p" : "q") + std::to_string(letter / 2 + 1);
}

int contraction_sign(int a, int b) {
    if (a / 2 != b / 2 || a == b) return 0;
    return a % 2 == 0 ? 1 : -1;
}

HVector basis_vector(int letter) { return HVector{{letter, Rational(1)}}; }

Rational contract(const HVector& u, const HVector& v) {
    Rational acc(0);
    for (const auto& [a, ca] : u) {
        // only the partner letter of a can pair with it
        int partner = (a % 2 == 0) ? a + 1 : a - 1;
        auto it = v.find(partner);
        if (it != v.end()) acc += ca * it->second * rat(contraction_sign(a, partner));
    }
    return acc;
}

int Tree::order() const {
    int k = 0;
    for (const auto& v : verts)
        if (!v.leaf()) ++k;
    return k;
}

std::vector<int> Tree::leaf_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (verts[i].leaf()) out.push_back(i);
    return out;
}

int Tree::slot_of(int v, int neighbor) const {
    const auto& nb = verts[v].nb;
    for (int i = 0; i < static_cast<int>(nb.size()); ++i)
        if (nb[i] == neighbor) return i;
    throw std::logic_error("slot_of: vertices are not adjacent");
}

void Tree::check() const {
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        const auto& v = verts[i];
        if (v.nb.size() != 1 && v.nb.size() != 3)
            throw std::logic_error("tree vertex is neither a leaf nor trivalent");
        for (int u : v.nb) {
            if (u < 0 || u >= static_cast<int>(verts.size()))
                throw std::logic_error("tree neighbor out of range");
            (void)slot_of(u, i);  // adjacency must be symmetric
        }
    }
    if (order() + 2 != static_cast<int>(leaf_ids().size()))
        throw std::logic_error("tree violates leaves = order + 2");
}

Tree make_tripod(const HVector& a, const HVector& b, const HVector& c) {
    Tree t;
    t.verts.resize(4);
    t.verts[0].nb = {1, 2, 3};
    t.verts[1] = {{0}, a, -1};
    t.verts[2] = {{0}, b, -1};
    t.verts[3] = {{0}, c, -1};
    return t;
}

namespace {

struct Parser {
    const std::string& text;
    const SymplecticSpace& space;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("tree parse error at offset " + std::to_string(pos) + ": " +
                                    msg);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(text.substr(start, pos - start));
    }

    // Returns the id of the subtree root attached below `parent`.
    int parse_node(Tree& t, int parent, bool top) {
        char c = peek();
        if (c == '(') {
            ++pos;
            int me = static_cast<int>(t.verts.size());
            t.verts.emplace_back();
            int first = parse_node(t, me, false);
            expect(',');
            int second = parse_node(t, me, false);
            int third = -1;
            if (peek() == ',') {
                ++pos;
                third = parse_node(t, me, false);
            }
            expect(')');
            if (top) {
                if (third < 0) fail("top-level vertex needs three subtrees");
                t.verts[me].nb = {first, second, third};
            } else {
                if (third >= 0) fail("inner vertex takes two subtrees (third edge is the parent)");
                t.verts[me].nb = {parent, first, second};
            }
            return me;
        }
        int me = static_cast<int>(t.verts.size());
        t.verts.emplace_back();
        t.verts[me].nb = {parent};
        if (c == '#') {
            ++pos;
            t.verts[me].hair = parse_int();
            return me;
        }
        if (c == 'p' || c == 'q') {
            ++pos;
            int idx = parse_int();
            if (idx < 1 || idx > space.genus)
                fail("basis letter index out of range for genus " + std::to_string(space.genus));
            t.verts[me].label = basis_vector(c == 'p' ? p_letter(idx) : q_letter(idx));
            return me;
        }
        fail("expected a leaf or '('");
    }
};

}  // namespace

Tree parse_tree(const std::string& text, const SymplecticSpace& space) {
    Parser parser{text, space};
    Tree t;
    if (parser.peek() != '(') parser.fail("a tree of order >= 1 starts with '('");
    parser.parse_node(t, -1, true);
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    t.check();
    return t;
}

Tree random_labeled_tree(int order, int genus, std::mt19937_64& rng) {
    if (order < 1 || genus < 1) throw std::invalid_argument("random_labeled_tree: bad arguments");
    std::uniform_int_distribution<int> letter(0, 2 * genus - 1);
    auto rnd = [&] { return basis_vector(letter(rng)); };
    Tree t = make_tripod(rnd(), rnd(), rnd());
    for (int k = 1; k < order; ++k) {
        auto leaves = t.leaf_ids();
        std::uniform_int_distribution<int> pick(0, static_cast<int>(leaves.size()) - 1);
        int x = leaves[pick(rng)];
        // split leaf x into a trivalent vertex with two fresh leaves
        int l1 = static_cast<int>(t.verts.size());
        t.verts.push_back({{x}, rnd(), -1});
        int l2 = static_cast<int>(t.verts.size());
        t.verts.push_back({{x}, rnd(), -1});
        t.verts[x].nb.push_back(l1);
        t.verts[x].nb.push_back(l2);
        t.verts[x].label.clear();
    }
    t.check();
    return t;
}

WordSum word_concat(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Rational c = ca * cb;
            if (c != 0) {
                auto [it, fresh] = out.try_emplace(std::move(w), c);
                if (!fresh) {
                    it->second += c;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    return out;
}

WordSum word_scale(const WordSum& a, const Rational& c) {
    WordSum out;
    if (c == 0) return out;
    for (const auto& [w, v] : a) out.emplace(w, v * c);
    return out;
}

void word_accumulate(WordSum& into, const WordSum& from, const Rational& c) {
    if (c == 0) return;
    for (const auto& [w, v] : from) {
        auto [it, fresh] = into.try_emplace(w, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second == 0) into.erase(it);
        }
    }
}

WordSum expand_subtree(const Tree& t, int vertex, int from, const LeafOverrides& ov) {
    const auto& v = t.verts[vertex];
    if (v.leaf()) {
        auto it = ov.find(vertex);
        if (it != ov.end()) return WordSum{{Word{it->second}, Rational(1)}};
        if (v.hair >= 0)
            throw std::invalid_argument("expansion reached an unlabeled (abstract) leaf");
        WordSum out;
        for (const auto& [letter, c] : v.label)
            if (c != 0) out.emplace(Word{letter}, c);
        return out;
    }
    int slot = t.slot_of(vertex, from);
    int c1 = v.nb[(slot + 1) % 3];
    int c2 = v.nb[(slot + 2) % 3];
    WordSum a = expand_subtree(t, c1, vertex, ov);
    WordSum b = expand_subtree(t, c2, vertex, ov);
    WordSum out = word_concat(a, b);
    word_accumulate(out, word_concat(b, a), Rational(-1));
    return out;
}

namespace {

// Path of vertices from a leaf to a leaf (inclusive).
std::vector<int> tree_path(const Tree& t, int from_leaf, int to_leaf) {
    std::vector<int> parent(t.verts.size(), -2);
    std::vector<int> stack{from_leaf};
    parent[from_leaf] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to_leaf) break;
        for (int u : t.verts[v].nb)
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<int> path;
    for (int v = to_leaf; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

WordSum collect_cycle_word(const Tree& t, int root_leaf, int target_leaf, const LeafOverrides& ov) {
    if (root_leaf == target_leaf)
        throw std::invalid_argument("collect_cycle_word: leaves must differ");
    auto path = tree_path(t, root_leaf, target_leaf);
    // path[0] = root leaf, path.back() = target leaf; interior entries are
    // trivalent. Branch words are appended in order walking back from the
    // target, which reads them along the closed cycle following the edge.
    WordSum acc{{Word{}, Rational(1)}};
    int sign = 1;
    for (std::size_t i = path.size() - 2; i >= 1; --i) {
        int v = path[i];
        int from = path[i - 1];
        int next = path[i + 1];
        int slot = t.slot_of(v, from);
        int c1 = t.verts[v].nb[(slot + 1) % 3];
        int c2 = t.verts[v].nb[(slot + 2) % 3];
        int branch = (next == c1) ? c2 : c1;
        if (next != c1) sign = -sign;
        acc = word_concat(acc, expand_subtree(t, branch, v, ov));
    }
    return word_scale(acc, rat(sign));
}

void DerivationElement::accumulate(const DerivationElement& other, const Rational& c) {
    if (!other.terms.empty()) order = other.order;
    for (const auto& [k, v] : other.terms) {
        auto [it, fresh] = terms.try_emplace(k, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second == 0) terms.erase(it);
        }
    }
}

DerivationElement eta(const Tree& t) {
    t.check();
    if (t.order() < 1) throw std::invalid_argument("eta: tree must have order >= 1");
    DerivationElement out;
    out.order = t.order();
    for (int x : t.leaf_ids()) {
        const auto& leaf = t.verts[x];
        if (leaf.hair >= 0) throw std::invalid_argument("eta: unlabeled (abstract) leaf");
        if (leaf.label.empty()) continue;
        WordSum w = expand_subtree(t, leaf.nb[0], x);
        for (const auto& [letter, cl] : leaf.label)
            for (const auto& [word, cw] : w) {
                auto key = std::make_pair(letter, word);
                auto [it, fresh] = out.terms.try_emplace(key, cl * cw);
                if (!fresh) {
                    it->second += cl * cw;
                    if (it->second == 0) out.terms.erase(it);
                }
            }
    }
    return out;
}

TreeSum bracket_trees(const Tree& t1, const Tree& t2) {
    if (t1.order() < 1 || t2.order() < 1)
        throw std::invalid_argument("bracket_trees: operands must have order >= 1");
    TreeSum out;
    for (int x : t1.leaf_ids()) {
        for (int y : t2.leaf_ids()) {
            const auto& lx = t1.verts[x];
            const auto& ly = t2.verts[y];
            if (lx.hair >= 0 || ly.hair >= 0)
                throw std::invalid_argument("bracket_trees: unlabeled leaf");
            Rational c = contract(lx.label, ly.label);
            if (c == 0) continue;
            // join: drop leaves x and y, splice their neighbors together
            Tree joined;
            const int n1 = static_cast<int>(t1.verts.size());
            joined.verts = t1.verts;
            for (const auto& v : t2.verts) {
                auto copy = v;
                for (int& u : copy.nb) u += n1;
                joined.verts.push_back(std::move(copy));
            }
            int u1 = t1.verts[x].nb[0];
            int u2 = t2.verts[y].nb[0] + n1;
            joined.verts[u1].nb[joined.slot_of(u1, x)] = u2;
            joined.verts[u2].nb[joined.slot_of(u2, y + n1)] = u1;
            // compact away the two dead leaf slots
            std::vector<int> remap(joined.verts.size(), -1);
            Tree compacted;
            for (int i = 0; i < static_cast<int>(joined.verts.size()); ++i) {
                if (i == x || i == y + n1) continue;
                remap[i] = static_cast<int>(compacted.verts.size());
                compacted.verts.push_back(joined.verts[i]);
            }
            for (auto& v : compacted.verts)
                for (int& u : v.nb) u = remap[u];
            compacted.check();
            out.terms.emplace_back(c, std::move(compacted));
        }
    }
    return out;
}

TreeSum bracket_trees(const TreeSum& a, const TreeSum& b) {
    TreeSum out;
    for (const auto& [ca, ta] : a.terms)
        for (const auto& [cb, tb] : b.terms) {
            TreeSum part = bracket_trees(ta, tb);
            for (auto& [c, t] : part.terms) out.terms.emplace_back(ca * cb * c, std::move(t));
        }
    return out;
}

DerivationElement eta(const TreeSum& s) {
    DerivationElement out;
    for (const auto& [c, t] : s.terms) out.accumulate(eta(t), c);
    return out;
}

TreeSum iterated_bracket(const std::vector<Tree>& trees) {
    if (trees.size() < 2)
        throw std::invalid_argument("iterated_bracket: need at least two trees");
    TreeSum acc;
    acc.terms.emplace_back(Rational(1), trees[0]);
    for (std::size_t i = 1; i < trees.size(); ++i) {
        TreeSum next;
        next.terms.emplace_back(Rational(1), trees[i]);
        acc = bracket_trees(acc, next);
    }
    return acc;
}

namespace {

// D_x applied to a single letter.
WordSum derivation_on_letter(const DerivationElement& x, int letter) {
    WordSum out;
    for (const auto& [key, c] : x.terms) {
        int sign = contraction_sign(key.first, letter);
        if (sign) word_accumulate(out, WordSum{{key.second, c}}, rat(sign));
    }
    return out;
}

// D_x extended as a derivation of the tensor algebra.
WordSum derivation_on_word(const DerivationElement& x, const Word& w) {
    WordSum out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        WordSum mid = derivation_on_letter(x, w[i]);
        if (mid.empty()) continue;
        Word pre(w.begin(), w.begin() + static_cast<long>(i));
        Word post(w.begin() + static_cast<long>(i) + 1, w.end());
        WordSum piece = word_concat(WordSum{{pre, Rational(1)}}, mid);
        piece = word_concat(piece, WordSum{{post, Rational(1)}});
        word_accumulate(out, piece);
    }
    return out;
}

WordSum derivation_on_sum(const DerivationElement& x, const WordSum& ws) {
    WordSum out;
    for (const auto& [w, c] : ws) word_accumulate(out, derivation_on_word(x, w), c);
    return out;
}

// sum c (a w - w a): the extension of the bracketing map to H (x) H^(s+1).
WordSum bracketing_image(const DerivationElement& x) {
    WordSum out;
    for (const auto& [key, c] : x.terms) {
        const auto& [a, w] = key;
        Word aw;
        aw.reserve(w.size() + 1);
        aw.push_back(a);
        aw.insert(aw.end(), w.begin(), w.end());
        Word wa = w;
        wa.push_back(a);
        word_accumulate(out, WordSum{{std::move(aw), Rational(1)}}, c);
        word_accumulate(out, WordSum{{std::move(wa), Rational(1)}}, -c);
    }
    return out;
}

// the derivation applied to omega = sum (p_i q_i - q_i p_i); only letter
// pairs meeting x's first slots can contribute.
WordSum omega_image(const DerivationElement& x) {
    std::vector<int> pairs;
    for (const auto& [key, c] : x.terms) {
        (void)c;
        int i = key.first / 2;
        if (std::find(pairs.begin(), pairs.end(), i) == pairs.end()) pairs.push_back(i);
    }
    WordSum out;
    for (int i : pairs) {
        Word pq{2 * i, 2 * i + 1};
        Word qp{2 * i + 1, 2 * i};
        word_accumulate(out, derivation_on_word(x, pq));
        word_accumulate(out, derivation_on_word(x, qp), Rational(-1));
    }
    return out;
}

}  // namespace

WordSum dynkin(const WordSum& ws) {
    WordSum out;
    for (const auto& [w, c] : ws) {
        if (w.empty()) continue;
        WordSum acc{{Word{w[0]}, Rational(1)}};
        for (std::size_t i = 1; i < w.size(); ++i) {
            WordSum letter{{Word{w[i]}, Rational(1)}};
            WordSum next = word_concat(acc, letter);
            word_accumulate(next, word_concat(letter, acc), Rational(-1));
            acc = std::move(next);
        }
        word_accumulate(out, acc, c);
    }
    return out;
}

bool is_in_D(const DerivationElement& x) {
    // slice by first-slot letter; each slice must satisfy the
    // Dynkin-Specht-Wever criterion for membership in the free Lie algebra
    std::map<int, WordSum> slices;
    int len = -1;
    for (const auto& [key, c] : x.terms) {
        slices[key.first][key.second] = c;
        if (len == -1)
            len = static_cast<int>(key.second.size());
        else if (len != static_cast<int>(key.second.size()))
            throw std::invalid_argument("is_in_D: mixed word lengths");
    }
    bool in_lie = true;
    for (const auto& [letter, slice] : slices) {
        (void)letter;
        WordSum lhs = dynkin(slice);
        WordSum rhs = word_scale(slice, rat(len));
        if (lhs != rhs) {
            in_lie = false;
            break;
        }
    }
    bool bracket_zero = bracketing_image(x).empty();
    bool omega_zero = omega_image(x).empty();
    if (bracket_zero != omega_zero)
        throw std::logic_error("is_in_D: bracketing-map and omega tests disagree");
    return in_lie && bracket_zero;
}

DerivationElement derivation_bracket(const DerivationElement& x, const DerivationElement& y) {
    if (!is_in_D(x) || !is_in_D(y))
        throw std::invalid_argument("derivation_bracket: inputs must lie in D");
    // letters i with either p_i or q_i met by a first slot of x or y
    std::vector<int> pairs;
    for (const auto* el : {&x, &y})
        for (const auto& [key, c] : el->terms) {
            (void)c;
            int i = key.first / 2;
            if (std::find(pairs.begin(), pairs.end(), i) == pairs.end()) pairs.push_back(i);
        }
    std::sort(pairs.begin(), pairs.end());

    DerivationElement z;
    z.order = x.order + y.order;
    auto commutator_on = [&](int letter) {
        WordSum a = derivation_on_sum(x, derivation_on_letter(y, letter));
        word_accumulate(a, derivation_on_sum(y, derivation_on_letter(x, letter)), Rational(-1));
        return a;
    };
    for (int i : pairs) {
        // z = sum_i p_i (x) C(q_i) - q_i (x) C(p_i)
        for (const auto& [w, c] : commutator_on(2 * i + 1)) {
            auto key = std::make_pair(2 * i, w);
            auto [it, fresh] = z.terms.try_emplace(key, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) z.terms.erase(it);
            }
        }
        for (const auto& [w, c] : commutator_on(2 * i)) {
            auto key = std::make_pair(2 * i + 1, w);
            auto [it, fresh] = z.terms.try_emplace(key, -c);
            if (!fresh) {
                it->second += -c;
                if (it->second == 0) z.terms.erase(it);
            }
        }
    }
    return z;
}

long long witt_number(int degree, int alphabet_size) {
    if (degree < 1) throw std::invalid_argument("witt_number: degree >= 1");
    // (1/d) sum_{e|d} mu(e) a^(d/e)
    long long acc = 0;
    for (int e = 1; e <= degree; ++e) {
        if (degree % e) continue;
        int x = e, mu = 1;
        for (int f = 2; f * f <= x; ++f) {
            if (x % f == 0) {
                x /= f;
                if (x % f == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        }
        if (x > 1 && mu != 0) mu = -mu;
        if (mu == 0) continue;
        long long power = 1;
        for (int k = 0; k < degree / e; ++k) power *= alphabet_size;
        acc += mu * power;
    }
    return acc / degree;
}

namespace {

bool is_lyndon(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word rot(w.begin() + static_cast<long>(i), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < rot)) return false;
    }
    return true;
}

void lyndon_expand(const Word& w, std::string& bracket, WordSum& expansion) {
    if (w.size() == 1) {
        bracket = std::to_string(w[0]);
        expansion = WordSum{{w, Rational(1)}};
        return;
    }
    // standard factorization: v is the longest proper Lyndon suffix
    std::size_t split = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(suffix)) {
            split = i;
            break;
        }
    }
    Word u(w.begin(), w.begin() + static_cast<long>(split));
    Word v(w.begin() + static_cast<long>(split), w.end());
    std::string bu, bv;
    WordSum eu, ev;
    lyndon_expand(u, bu, eu);
    lyndon_expand(v, bv, ev);
    bracket = "[" + bu + "," + bv + "]";
    expansion = word_concat(eu, ev);
    word_accumulate(expansion, word_concat(ev, eu), Rational(-1));
}

}  // namespace

std::vector<LieMonomial> lyndon_basis(int degree, int alphabet_size) {
    if (degree < 1 || alphabet_size < 1)
        throw std::invalid_argument("lyndon_basis: degree and alphabet must be positive");
    // Duval's algorithm yields all Lyndon words of length <= degree in lex
    // order; keep the ones of exactly the requested length.
    std::vector<LieMonomial> out;
    Word w{0};
    while (true) {
        if (static_cast<int>(w.size()) == degree) {
            LieMonomial m;
            m.word = w;
            lyndon_expand(w, m.bracket, m.expansion);
            out.push_back(std::move(m));
        }
        Word ext(degree);
        for (int i = 0; i < degree; ++i) ext[i] = w[i % w.size()];
        w = std::move(ext);
        while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

}  // namespace jtrace::lietrees
