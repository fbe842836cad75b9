#include "oa/codes.hpp"

#include "oa/krawtchouk.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oa {

namespace {

int hamming(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

std::vector<Int> distance_distribution(int n, const std::vector<std::vector<uint8_t>>& words) {
    std::vector<Int> dist(n + 1, Int(0));
    dist[0] = static_cast<unsigned long>(words.size());
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) dist[hamming(words[i], words[j])] += 2;
    return dist;
}

// Multiplication in GF(2^e) for q in {2,4,8,16}, via the fixed reduction
// polynomials x, x^2+x+1, x^3+x+1, x^4+x+1.
unsigned gf_mul(unsigned a, unsigned b, unsigned q) {
    if (q == 2) return a & b & 1u;
    unsigned poly = 0;
    if (q == 4) poly = 0b111u;
    else if (q == 8) poly = 0b1011u;
    else if (q == 16) poly = 0b10011u;
    else throw std::invalid_argument("gf_mul: field order must be 2, 4, 8 or 16");
    unsigned r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & q) a ^= poly;
    }
    return r;
}

using ModRow = std::vector<int>;

// Reduced row echelon form over GF(p); returns pivot column per row.
std::vector<int> rref_modp(std::vector<ModRow>& m, int p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        int inv = 1;
        for (int k = 1; k < p; ++k)
            if (k * m[r][c] % p == 1) inv = k;
        for (size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            int f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<ModRow> nullspace_modp(std::vector<ModRow> m, int p) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = rref_modp(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<ModRow> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        ModRow v(cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < m.size(); ++r) v[pivots[r]] = (p - m[r][fc]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// All p^k combinations of the generator rows over GF(p).
std::vector<std::vector<uint8_t>> span_modp(const std::vector<ModRow>& gens, int p) {
    size_t k = gens.size();
    size_t n = gens.empty() ? 0 : gens[0].size();
    size_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= p;
    std::vector<std::vector<uint8_t>> words;
    words.reserve(total);
    std::vector<int> coef(k, 0);
    std::vector<int> acc(n, 0);
    for (size_t idx = 0; idx < total; ++idx) {
        std::vector<uint8_t> w(n);
        for (size_t j = 0; j < n; ++j) w[j] = static_cast<uint8_t>(acc[j]);
        words.push_back(std::move(w));
        size_t pos = 0;
        while (pos < k) {
            for (size_t j = 0; j < n; ++j) acc[j] = (acc[j] + gens[pos][j]) % p;
            if (++coef[pos] < p) break;
            coef[pos] = 0;
            ++pos;
        }
    }
    return words;
}

std::vector<ModRow> cyclic_generator(const std::vector<int>& g, int n) {
    int deg = static_cast<int>(g.size()) - 1;
    int k = n - deg;
    std::vector<ModRow> rows(k, ModRow(n, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= deg; ++j) rows[i][i + j] = g[j];
    return rows;
}

std::vector<std::vector<uint8_t>> extend_zero_sum(const std::vector<std::vector<uint8_t>>& words,
                                                  int p) {
    std::vector<std::vector<uint8_t>> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        int s = 0;
        for (uint8_t x : w) s += x;
        std::vector<uint8_t> e = w;
        e.push_back(static_cast<uint8_t>(((-s) % p + p) % p));
        out.push_back(std::move(e));
    }
    return out;
}

Code golay_ternary_base() {
    std::vector<int> g = {2, 0, 1, 2, 1, 1};  // x^5 + x^4 + 2x^3 + x^2 + 2
    auto rows = cyclic_generator(g, 11);
    return make_code(11, 3, span_modp(rows, 3));
}

Code golay_binary_base() {
    // x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
    std::vector<int> g = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};
    auto rows = cyclic_generator(g, 23);
    return make_code(23, 2, span_modp(rows, 2));
}

std::vector<ModRow> words_as_rows(const Code& c) {
    std::vector<ModRow> rows;
    rows.reserve(c.words.size());
    for (const auto& w : c.words) rows.emplace_back(w.begin(), w.end());
    return rows;
}

Code dual_of(const Code& c, int p) {
    auto basis = nullspace_modp(words_as_rows(c), p);
    return make_code(c.n, c.q, span_modp(basis, p));
}

Code repetition_dual(int m) {
    if (m < 2 || m > 14)
        throw std::invalid_argument("repetition-dual: length must lie in 2..14");
    std::vector<std::vector<uint8_t>> words;
    for (unsigned long u = 0; u < (1ul << m); ++u) {
        if (__builtin_popcountl(u) % 2 != 0) continue;
        std::vector<uint8_t> w(m);
        for (int j = 0; j < m; ++j) w[j] = (u >> j) & 1u;
        words.push_back(std::move(w));
    }
    return make_code(m, 2, std::move(words));
}

Code hyperoval_oa(int q) {
    if (q != 2 && q != 4 && q != 8 && q != 16)
        throw std::invalid_argument("hyperoval-oa: q must be 2, 4, 8 or 16");
    std::vector<std::array<unsigned, 3>> points;
    for (unsigned t = 0; t < static_cast<unsigned>(q); ++t)
        points.push_back({1u, t, gf_mul(t, t, q)});
    points.push_back({0u, 1u, 0u});
    points.push_back({0u, 0u, 1u});
    std::vector<std::vector<uint8_t>> words;
    for (unsigned u0 = 0; u0 < static_cast<unsigned>(q); ++u0)
        for (unsigned u1 = 0; u1 < static_cast<unsigned>(q); ++u1)
            for (unsigned u2 = 0; u2 < static_cast<unsigned>(q); ++u2) {
                std::vector<uint8_t> w(points.size());
                for (size_t i = 0; i < points.size(); ++i) {
                    unsigned v = gf_mul(u0, points[i][0], q) ^ gf_mul(u1, points[i][1], q) ^
                                 gf_mul(u2, points[i][2], q);
                    w[i] = static_cast<uint8_t>(v);
                }
                words.push_back(std::move(w));
            }
    return make_code(q + 2, q, std::move(words));
}

Mat sylvester(int k) {
    if (k < 1 || (k & (k - 1)) != 0 || k > 256)
        throw std::invalid_argument("hadamard: order must be a power of two at most 256");
    Mat h(1, 1);
    h.at(0, 0) = 1;
    for (int m = 1; m < k; m *= 2) {
        Mat next(2 * m, 2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                next.at(i, j) = h.at(i, j);
                next.at(i, j + m) = h.at(i, j);
                next.at(i + m, j) = h.at(i, j);
                next.at(i + m, j + m) = -h.at(i, j);
            }
        h = std::move(next);
    }
    return h;
}

// Parses "prefix(arg)" and returns arg, or nullopt if name is not of
// that shape.
std::optional<int> paren_arg(const std::string& name, const std::string& prefix) {
    if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    try {
        size_t pos = 0;
        int v = std::stoi(inner, &pos);
        if (pos != inner.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

Code make_code(int n, int q, std::vector<std::vector<uint8_t>> words) {
    if (n < 1) throw std::invalid_argument("make_code: length must be positive");
    if (q < 2 || q > 255) throw std::invalid_argument("make_code: alphabet must lie in 2..255");
    if (words.empty()) throw std::invalid_argument("make_code: no codewords");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("make_code: word length mismatch");
        for (uint8_t s : w)
            if (s >= q) throw std::invalid_argument("make_code: symbol out of range");
    }
    std::set<std::vector<uint8_t>> seen(words.begin(), words.end());
    if (seen.size() != words.size())
        throw std::invalid_argument("make_code: duplicate codewords");
    Code c;
    c.n = n;
    c.q = q;
    c.words = std::move(words);
    c.dist = distance_distribution(n, c.words);
    return c;
}

Code builtin_code(const std::string& name) {
    if (name == "golay-ternary") return golay_ternary_base();
    if (name == "golay-ternary-dual") return dual_of(golay_ternary_base(), 3);
    if (name == "golay-ternary-ext") {
        Code base = golay_ternary_base();
        return make_code(12, 3, extend_zero_sum(base.words, 3));
    }
    if (name == "golay-binary") return golay_binary_base();
    if (name == "golay-binary-dual") return dual_of(golay_binary_base(), 2);
    if (name == "golay-binary-ext") {
        Code base = golay_binary_base();
        return make_code(24, 2, extend_zero_sum(base.words, 2));
    }
    if (auto m = paren_arg(name, "repetition-dual")) return repetition_dual(*m);
    if (auto k = paren_arg(name, "hadamard")) return hadamard_code(sylvester(*k));
    if (auto q = paren_arg(name, "hyperoval-oa")) return hyperoval_oa(*q);
    throw std::invalid_argument("builtin_code: unknown name '" + name + "'");
}

std::vector<std::string> builtin_code_names() {
    return {"repetition-dual(m)", "golay-ternary",   "golay-ternary-dual",
            "golay-ternary-ext",  "golay-binary",    "golay-binary-dual",
            "golay-binary-ext",   "hadamard(k)",     "hyperoval-oa(q)"};
}

Code hadamard_code(const Mat& H) {
    size_t m = H.rows();
    if (m == 0 || H.cols() != m)
        throw std::invalid_argument("hadamard_code: matrix must be square");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (H.at(i, j) != 1 && H.at(i, j) != -1)
                throw std::invalid_argument("hadamard_code: entries must be +-1");
    Mat prod = H * H.transposed();
    if (prod != Mat::identity(m).scaled(Rat(static_cast<unsigned long>(m))))
        throw std::invalid_argument("hadamard_code: rows are not orthogonal");
    std::vector<std::vector<uint8_t>> words;
    words.reserve(2 * m);
    for (int sign = 0; sign < 2; ++sign)
        for (size_t i = 0; i < m; ++i) {
            std::vector<uint8_t> w(m);
            for (size_t j = 0; j < m; ++j) {
                bool plus = H.at(i, j) == 1;
                w[j] = (plus == (sign == 0)) ? 0 : 1;
            }
            words.push_back(std::move(w));
        }
    return make_code(static_cast<int>(m), 2, std::move(words));
}

Mat read_pm1_matrix(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) {
            if (v != 1 && v != -1)
                throw std::invalid_argument("read_pm1_matrix: entries must be +-1");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("read_pm1_matrix: empty input");
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("read_pm1_matrix: ragged rows");
    Mat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Code read_code(std::istream& in) {
    long n = 0, q = 0, N = 0;
    if (!(in >> n >> q >> N)) throw std::invalid_argument("read_code: bad header");
    if (n < 1 || q < 2 || q > 255 || N < 1)
        throw std::invalid_argument("read_code: bad header values");
    std::vector<std::vector<uint8_t>> words(N, std::vector<uint8_t>(n));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < n; ++j) {
            long s;
            if (!(in >> s)) throw std::invalid_argument("read_code: truncated word list");
            if (s < 1 || s > q) throw std::invalid_argument("read_code: symbol out of range");
            words[i][j] = static_cast<uint8_t>(s - 1);
        }
    return make_code(static_cast<int>(n), static_cast<int>(q), std::move(words));
}

void write_code(const Code& c, std::ostream& out) {
    out << c.n << " " << c.q << " " << c.words.size() << "\n";
    for (const auto& w : c.words) {
        for (size_t j = 0; j < w.size(); ++j) {
            if (j) out << " ";
            out << static_cast<int>(w[j]) + 1;
        }
        out << "\n";
    }
}

DistanceProfile distance_profile(const Code& c) {
    DistanceProfile p;
    p.n = c.n;
    p.q = c.q;
    p.N = c.size();
    for (int d = 1; d <= c.n; ++d)
        if (c.dist[d] > 0) p.degree_set.push_back(d);
    for (int d : p.degree_set) p.dual_degrees.push_back(c.n - d);
    std::sort(p.dual_degrees.begin(), p.dual_degrees.end());

    int t = 0;
    while (t < c.n) {
        Int b = 0;
        for (int d = 0; d <= c.n; ++d) {
            if (c.dist[d] == 0) continue;
            b += c.dist[d] * kraw_eval(c.n, c.q, t + 1, d);
        }
        if (b != 0) break;
        ++t;
    }
    p.strength = t;
    p.tightness = classify_tightness(p.N, c.n, c.q, t);
    for (int i = 0; i <= t; ++i) p.lambdas.push_back(make_rat(p.N, int_pow(c.q, i)));
    return p;
}

bool oa_strength_direct(const Code& c, int t) {
    if (t < 0 || t > c.n) throw std::invalid_argument("oa_strength_direct: bad strength");
    if (t == 0) return true;
    Int qt = int_pow(c.q, t);
    if (!divides(qt, c.size())) return false;
    Int expected = c.size() / qt;
    if (qt > 1000000) throw std::invalid_argument("oa_strength_direct: q^t too large to tabulate");
    size_t cells = qt.get_ui();

    auto balanced = [&](const std::vector<int>& cols) {
        std::vector<long> counts(cells, 0);
        for (const auto& w : c.words) {
            size_t idx = 0;
            for (int col : cols) idx = idx * c.q + w[col];
            ++counts[idx];
        }
        long want = expected.get_si();
        for (long cnt : counts)
            if (cnt != want) return false;
        return true;
    };

    Int total = binom_int(c.n, t);
    if (c.n <= 12 || total <= 5000) {
        std::vector<int> cols(t);
        for (int i = 0; i < t; ++i) cols[i] = i;
        while (true) {
            if (!balanced(cols)) return false;
            int pos = t - 1;
            while (pos >= 0 && cols[pos] == c.n - t + pos) --pos;
            if (pos < 0) break;
            ++cols[pos];
            for (int i = pos + 1; i < t; ++i) cols[i] = cols[i - 1] + 1;
        }
        return true;
    }

    std::mt19937 rng(0xa5c3u);
    std::vector<int> all(c.n);
    for (int i = 0; i < c.n; ++i) all[i] = i;
    for (int trial = 0; trial < 5000; ++trial) {
        for (int i = 0; i < t; ++i) {
            std::uniform_int_distribution<int> pick(i, c.n - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        std::vector<int> cols(all.begin(), all.begin() + t);
        if (!balanced(cols)) return false;
    }
    return true;
}

Code contraction(const Code& c, int column, int symbol) {
    if (column < 0 || column >= c.n)
        throw std::invalid_argument("contraction: column out of range");
    if (symbol < 0 || symbol >= c.q)
        throw std::invalid_argument("contraction: symbol out of range");
    std::vector<std::vector<uint8_t>> sub;
    for (const auto& w : c.words) {
        if (w[column] != symbol) continue;
        std::vector<uint8_t> v;
        v.reserve(c.n - 1);
        for (int j = 0; j < c.n; ++j)
            if (j != column) v.push_back(w[j]);
        sub.push_back(std::move(v));
    }
    if (sub.empty()) throw std::invalid_argument("contraction: empty fibre");
    return make_code(c.n - 1, c.q, std::move(sub));
}

}  // namespace oa
