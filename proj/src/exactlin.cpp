#include "jtrace/exactlin.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace jtrace::exactlin {

namespace {

// Integer rows for fraction-free elimination.
using IntEntry = std::pair<int, Integer>;
using IntRow = std::vector<IntEntry>;

// Clears denominators and divides out the content, preserving the span.
IntRow to_primitive_int_row(const SparseRow& r) {
    IntRow out;
    if (r.empty()) return out;
    Integer lcm(1);
    for (const auto& [c, v] : r) {
        (void)c;
        Integer den = v.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Integer content(0);
    out.reserve(r.size());
    for (const auto& [c, v] : r) {
        Integer num = Integer(v.get_num()) * (lcm / Integer(v.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        out.emplace_back(c, std::move(num));
    }
    if (content > 1)
        for (auto& [c, v] : out) {
            (void)c;
            v /= content;
        }
    return out;
}

void remove_content(IntRow& r) {
    if (r.empty()) return;
    Integer g(0);
    for (const auto& [c, v] : r) {
        (void)c;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : r) {
        (void)c;
        v /= g;
    }
}

// a*x + b*y on sorted integer rows.
IntRow int_combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct WorkRow {
    IntRow row;
    int orig;
};

struct Echelon {
    std::vector<int> pivot_cols;          // ascending
    std::vector<IntRow> pivot_rows;       // same order
};

// Forward elimination. Columns are visited in ambient order; within a
// column the pivot is the entry of smallest magnitude, ties broken by the
// lowest original row index.
Echelon forward_eliminate(const ExactSparseMatrix& m) {
    std::vector<std::vector<WorkRow>> bucket(m.ncols);
    for (int i = 0; i < m.nrows; ++i) {
        IntRow r = to_primitive_int_row(m.rows[i]);
        if (!r.empty()) bucket[r.front().first].push_back(WorkRow{std::move(r), i});
    }
    Echelon ech;
    for (int col = 0; col < m.ncols; ++col) {
        auto& rows = bucket[col];
        if (rows.empty()) continue;
        std::size_t piv = 0;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            int cmp = mpz_cmpabs(rows[k].row.front().second.get_mpz_t(),
                                 rows[piv].row.front().second.get_mpz_t());
            if (cmp < 0 || (cmp == 0 && rows[k].orig < rows[piv].orig)) piv = k;
        }
        WorkRow pivot = std::move(rows[piv]);
        rows.erase(rows.begin() + static_cast<long>(piv));
        const Integer& pv = pivot.row.front().second;
        for (auto& wr : rows) {
            IntRow reduced = int_combine(pv, wr.row, -wr.row.front().second, pivot.row);
            remove_content(reduced);
            if (!reduced.empty())
                bucket[reduced.front().first].push_back(WorkRow{std::move(reduced), wr.orig});
        }
        rows.clear();
        ech.pivot_cols.push_back(col);
        ech.pivot_rows.push_back(std::move(pivot.row));
    }
    return ech;
}

}  // namespace

SparseRow row_scale(const SparseRow& r, const Rational& c) {
    SparseRow out;
    if (c == 0) return out;
    out.reserve(r.size());
    for (const auto& [col, v] : r) out.emplace_back(col, v * c);
    return out;
}

SparseRow row_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (c != 0) out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow row_add(const SparseRow& a, const SparseRow& b) { return row_axpy(a, Rational(1), b); }

Rational row_get(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const Entry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return Rational(0);
}

bool row_is_zero(const SparseRow& r) { return r.empty(); }

ExactSparseMatrix ExactSparseMatrix::identity(int n) {
    ExactSparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i] = {{i, Rational(1)}};
    return m;
}

void ExactSparseMatrix::add_row(SparseRow r) {
    int prev = -1;
    for (const auto& [c, v] : r) {
        if (c <= prev || c >= ncols)
            throw std::invalid_argument("sparse row has out-of-order or out-of-range column");
        if (v == 0) throw std::invalid_argument("sparse row stores an explicit zero");
        prev = c;
    }
    rows.push_back(std::move(r));
    ++nrows;
}

ExactSparseMatrix ExactSparseMatrix::transposed() const {
    ExactSparseMatrix t(ncols, nrows);
    for (int i = 0; i < nrows; ++i)
        for (const auto& [c, v] : rows[i]) t.rows[c].emplace_back(i, v);
    return t;
}

int rank(const ExactSparseMatrix& m) {
    return static_cast<int>(forward_eliminate(m).pivot_cols.size());
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

std::uint64_t verification_prime(std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::uint64_t> dist(1u << 20, 1u << 30);
    int found = 0;
    while (true) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) {
            if (found == index) return c;
            ++found;
        }
    }
}

int modular_rank(const ExactSparseMatrix& m, std::uint64_t prime) {
    if (prime <= (1u << 20) || !is_prime_u64(prime))
        throw std::invalid_argument("modular_rank needs a prime > 2^20");
    // rows mod p, bucketed by leading column
    std::vector<std::vector<std::vector<std::pair<int, std::uint64_t>>>> bucket(m.ncols);
    auto reduce_entry = [&](const Rational& v) -> std::uint64_t {
        Integer num = v.get_num(), den = v.get_den();
        std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), prime);
        if (d == 0)
            throw std::domain_error("entry denominator divisible by verification prime");
        std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), prime);
        return mulmod(n, powmod(d, prime - 2, prime), prime);
    };
    for (const auto& row : m.rows) {
        std::vector<std::pair<int, std::uint64_t>> r;
        for (const auto& [c, v] : row) {
            std::uint64_t x = reduce_entry(v);
            if (x) r.emplace_back(c, x);
        }
        if (!r.empty()) bucket[r.front().first].push_back(std::move(r));
    }
    int rk = 0;
    for (int col = 0; col < m.ncols; ++col) {
        auto& rows = bucket[col];
        if (rows.empty()) continue;
        auto pivot = std::move(rows.back());
        rows.pop_back();
        ++rk;
        std::uint64_t inv = powmod(pivot.front().second, prime - 2, prime);
        for (auto& r : rows) {
            std::uint64_t f = prime - mulmod(r.front().second, inv, prime);
            std::map<int, std::uint64_t> acc;
            for (const auto& [c, v] : r) acc[c] = v;
            for (const auto& [c, v] : pivot) {
                std::uint64_t& slot = acc[c];
                slot = (slot + mulmod(f, v, prime)) % prime;
            }
            std::vector<std::pair<int, std::uint64_t>> out;
            for (const auto& [c, v] : acc)
                if (v) out.emplace_back(c, v);
            if (!out.empty()) bucket[out.front().first].push_back(std::move(out));
        }
        rows.clear();
    }
    return rk;
}

QuotientModule build_quotient(int ambient_dim, const ExactSparseMatrix& relations) {
    if (relations.ncols != ambient_dim)
        throw std::invalid_argument("relation matrix width does not match ambient dimension");
    Echelon ech = forward_eliminate(relations);

    // Back-substitute to a reduced echelon form, still fraction-free.
    const int np = static_cast<int>(ech.pivot_rows.size());
    for (int i = np - 1; i >= 0; --i) {
        for (int j = i + 1; j < np; ++j) {
            int cj = ech.pivot_cols[j];
            const auto& rj = ech.pivot_rows[j];
            auto it = std::lower_bound(
                ech.pivot_rows[i].begin(), ech.pivot_rows[i].end(), cj,
                [](const IntEntry& e, int c) { return e.first < c; });
            if (it == ech.pivot_rows[i].end() || it->first != cj) continue;
            IntRow combined =
                int_combine(rj.front().second, ech.pivot_rows[i], -it->second, rj);
            remove_content(combined);
            ech.pivot_rows[i] = std::move(combined);
        }
    }

    QuotientModule q;
    q.ambient_dim = ambient_dim;
    q.pivot_columns = ech.pivot_cols;
    q.reduced_relation_rows = ExactSparseMatrix(0, ambient_dim);
    for (int i = 0; i < np; ++i) {
        const Integer& lead = ech.pivot_rows[i].front().second;
        SparseRow r;
        r.reserve(ech.pivot_rows[i].size());
        for (const auto& [c, v] : ech.pivot_rows[i]) {
            Rational x(v, lead);
            x.canonicalize();
            r.emplace_back(c, std::move(x));
        }
        q.reduced_relation_rows.add_row(std::move(r));
    }
    std::size_t pi = 0;
    for (int c = 0; c < ambient_dim; ++c) {
        if (pi < q.pivot_columns.size() && q.pivot_columns[pi] == c)
            ++pi;
        else
            q.free_columns.push_back(c);
    }
    return q;
}

SparseRow QuotientModule::project(const SparseRow& v) const {
    for (const auto& [c, x] : v) {
        (void)x;
        if (c < 0 || c >= ambient_dim)
            throw std::invalid_argument("vector length does not match ambient dimension");
    }
    SparseRow cur = v;
    for (std::size_t i = 0; i < pivot_columns.size(); ++i) {
        Rational coeff = row_get(cur, pivot_columns[i]);
        if (coeff != 0) cur = row_axpy(cur, -coeff, reduced_relation_rows.rows[i]);
    }
    // cur is now supported on free columns; rewrite in free coordinates
    SparseRow out;
    out.reserve(cur.size());
    std::size_t fi = 0;
    for (const auto& [c, x] : cur) {
        while (fi < free_columns.size() && free_columns[fi] < c) ++fi;
        if (fi >= free_columns.size() || free_columns[fi] != c)
            throw std::logic_error("projection left a pivot-column residue");
        out.emplace_back(static_cast<int>(fi), x);
    }
    return out;
}

SparseRow QuotientModule::embed(const SparseRow& coords) const {
    SparseRow out;
    out.reserve(coords.size());
    for (const auto& [i, x] : coords) {
        if (i < 0 || i >= dim()) throw std::invalid_argument("free coordinate out of range");
        out.emplace_back(free_columns[i], x);
    }
    return out;
}

}  // namespace jtrace::exactlin
