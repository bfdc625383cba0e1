#pragma once

#include <string>
#include <vector>

#include "stg/caps.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"

namespace stg {

// A word over alphabet {1..d}: fixed length c, one letter per position.
using Word = std::vector<int>;

// Word graph on alphabet size d and length c, plus optionally c attachment
// vertices. Vertices 1..d^c are words in ascending lexicographic order;
// with attachments, vertex d^c + i is w_i, adjacent to exactly the words
// whose i-th letter is 1.
struct AlphabetGraph {
    int alphabet = 0; // d
    int length = 0;   // c
    bool attachments = false;
    Graph graph;
    std::vector<Word> words;         // vertex i <-> words[i-1], i <= d^c
    std::vector<std::string> labels; // words, then "w1".."wc"
};

// Two words are adjacent iff they differ by at most 1 in every position (and
// are not equal); distances are Chebyshev.
AlphabetGraph build_gdc(int d, int c, long long max_vertices = kDefaultVertexCap);
AlphabetGraph build_gdc_plus(int d, int c, long long max_vertices = kDefaultVertexCap);

// 1-based vertex id of word w in the graphs above.
long long word_index(int d, int c, const Word& w);

Word parse_word(const std::string& text);
std::string word_label(const Word& w);

// Chebyshev distance max_i |x_i - y_i|.
int gdc_distance(const Word& x, const Word& y);

// Eccentricity of a word in the plain word graph: max_i max(x_i - 1, d - x_i).
int gdc_eccentricity(const Word& x, int d);

// Diameter of the plain word graph: d - 1.
int gdc_diameter(int d, int c);

// Smallest c with n <= d^c + c: no graph of order n and diameter d can have
// metric dimension below this.
int lower_bound_dim(long long n, int d);

// Number of mu-tuples (a_1, ..., a_mu) in which value i appears at most
// caps.counts[i] times; values run over 1..max_distance, or over
// 0..max_distance when include_zero is set.
BigInt count_bounded_sequences(int mu, const DistanceDegreeSequence& caps,
                               bool include_zero = false);

// For a degree-regular graph: can mu landmarks possibly resolve it, judging
// only by counting the available distance multisets (letter 0 included, since
// a vertex may itself be a landmark)? False means mu landmarks can never
// suffice; true is only a necessary condition.
bool degree_regular_dim_bound(const Graph& g, int mu);

} // namespace stg
