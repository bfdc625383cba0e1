#include "stg/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "stg/errors.hpp"
#include "stg/supertoken.hpp"

namespace stg {
namespace {

BigInt power(long long base, int exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

void check_dc(int d, int c) {
    if (d < 2 || c < 1)
        throw std::invalid_argument("word graph needs d >= 2, c >= 1");
}

std::vector<Word> enumerate_words(int d, int c) {
    std::vector<Word> out;
    Word w(c, 1);
    while (true) {
        out.push_back(w);
        int i = c - 1;
        while (i >= 0 && w[i] == d)
            --i;
        if (i < 0)
            break;
        ++w[i];
        for (int j = i + 1; j < c; ++j)
            w[j] = 1;
    }
    return out;
}

// Edges between words: iterate, per word, the product of per-coordinate
// ranges [x_i-1, x_i+1] clamped to [1, d]. Index arithmetic is positional
// base-d, so no lookups are needed.
std::vector<std::pair<int, int>> word_edges(int d, int c, const std::vector<Word>& words) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> lo(c), hi(c);
    Word y(c);
    for (int a = 1; a <= static_cast<int>(words.size()); ++a) {
        const Word& x = words[a - 1];
        for (int i = 0; i < c; ++i) {
            lo[i] = std::max(1, x[i] - 1);
            hi[i] = std::min(d, x[i] + 1);
            y[i] = lo[i];
        }
        while (true) {
            long long b = 0;
            for (int i = 0; i < c; ++i)
                b = b * d + (y[i] - 1);
            ++b;
            if (a < b)
                edges.emplace_back(a, static_cast<int>(b));
            int i = c - 1;
            while (i >= 0 && y[i] == hi[i])
                --i;
            if (i < 0)
                break;
            ++y[i];
            for (int j = i + 1; j < c; ++j)
                y[j] = lo[j];
        }
    }
    return edges;
}

} // namespace

long long word_index(int d, int c, const Word& w) {
    check_dc(d, c);
    if (static_cast<int>(w.size()) != c)
        throw std::invalid_argument("word has wrong length");
    BigInt index = 0;
    for (int letter : w) {
        if (letter < 1 || letter > d)
            throw std::invalid_argument("letter out of range");
        index = index * d + (letter - 1);
    }
    index += 1;
    if (!index.fits_slong_p())
        throw std::overflow_error("word index exceeds machine range");
    return index.get_si();
}

Word parse_word(const std::string& text) {
    // Same surface syntax as token configs: digit string or comma list.
    return TokenConfig::parse(text).counts();
}

std::string word_label(const Word& w) {
    std::string out;
    const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
    for (size_t i = 0; i < w.size(); ++i) {
        if (digits)
            out += static_cast<char>('0' + w[i]);
        else {
            if (i)
                out += ',';
            out += std::to_string(w[i]);
        }
    }
    return out;
}

AlphabetGraph build_gdc(int d, int c, long long max_vertices) {
    check_dc(d, c);
    const BigInt order = power(d, c);
    if (order > to_bigint(max_vertices))
        throw SizeCapError("word graph would have " + order.get_str() +
                           " vertices, above the cap of " + std::to_string(max_vertices));
    auto words = enumerate_words(d, c);
    auto edges = word_edges(d, c, words);
    Graph g(static_cast<int>(words.size()), std::move(edges));
    std::vector<std::string> labels;
    labels.reserve(words.size());
    for (const auto& w : words)
        labels.push_back(word_label(w));
    return AlphabetGraph{d, c, false, std::move(g), std::move(words), std::move(labels)};
}

AlphabetGraph build_gdc_plus(int d, int c, long long max_vertices) {
    check_dc(d, c);
    const BigInt order = power(d, c) + c;
    if (order > to_bigint(max_vertices))
        throw SizeCapError("extended word graph would have " + order.get_str() +
                           " vertices, above the cap of " + std::to_string(max_vertices));
    auto words = enumerate_words(d, c);
    const int base = static_cast<int>(words.size());
    auto edges = word_edges(d, c, words);
    // w_i is adjacent to exactly the words whose i-th letter is 1.
    for (int a = 1; a <= base; ++a)
        for (int i = 0; i < c; ++i)
            if (words[a - 1][i] == 1)
                edges.emplace_back(a, base + i + 1);
    Graph g(base + c, std::move(edges));
    std::vector<std::string> labels;
    labels.reserve(g.order());
    for (const auto& w : words)
        labels.push_back(word_label(w));
    for (int i = 1; i <= c; ++i)
        labels.push_back("w" + std::to_string(i));
    return AlphabetGraph{d, c, true, std::move(g), std::move(words), std::move(labels)};
}

int gdc_distance(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("words have different lengths");
    int best = 0;
    for (size_t i = 0; i < x.size(); ++i)
        best = std::max(best, std::abs(x[i] - y[i]));
    return best;
}

int gdc_eccentricity(const Word& x, int d) {
    if (x.empty())
        throw std::invalid_argument("empty word");
    int best = 0;
    for (int letter : x) {
        if (letter < 1 || letter > d)
            throw std::invalid_argument("letter out of range");
        best = std::max(best, std::max(letter - 1, d - letter));
    }
    return best;
}

int gdc_diameter(int d, int c) {
    check_dc(d, c);
    return d - 1;
}

int lower_bound_dim(long long n, int d) {
    if (n < 2 || d < 1)
        throw std::invalid_argument("lower_bound_dim needs n >= 2, d >= 1");
    BigInt pow_d = d;
    for (int c = 1;; ++c) {
        if (pow_d + c >= to_bigint(n))
            return c;
        pow_d *= d;
    }
}

BigInt count_bounded_sequences(int mu, const DistanceDegreeSequence& caps,
                               bool include_zero) {
    if (mu < 0)
        throw std::invalid_argument("tuple length must be non-negative");
    // f[m] = number of ways to fill m chosen slots with the values handled so
    // far; a value with cap t can occupy any subset of up to t slots.
    std::vector<BigInt> f(mu + 1, 0);
    f[0] = 1;
    const int first = include_zero ? 0 : 1;
    for (int value = first; value <= caps.max_distance(); ++value) {
        const int cap = caps.counts[value];
        std::vector<BigInt> g(mu + 1, 0);
        for (int m = 0; m <= mu; ++m)
            for (int t = 0; t <= std::min(cap, m); ++t)
                g[m] += binomial(m, t) * f[m - t];
        f = std::move(g);
    }
    return f[mu];
}

bool degree_regular_dim_bound(const Graph& g, int mu) {
    const auto dds = distance_degree_sequence(g);
    if (!dds)
        throw std::invalid_argument("graph is not degree-regular");
    // A vertex can coincide with a landmark, so distance 0 is available too.
    return BigInt(g.order()) <= count_bounded_sequences(mu, *dds, true);
}

} // namespace stg
