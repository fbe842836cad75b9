#pragma once
// Codes over the alphabet {1..q}, stored with 0-based symbols internally.
// The cached distance distribution counts ordered pairs of codewords at
// each Hamming distance; design strength is read off from it exactly.

#include "oa/design.hpp"
#include "oa/matrix.hpp"
#include "oa/rat.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oa {

struct Code {
    int n = 0, q = 0;
    std::vector<std::vector<uint8_t>> words;  // symbols 0..q-1
    std::vector<Int> dist;                    // dist[d] = ordered pairs at distance d

    Int size() const { return Int(static_cast<unsigned long>(words.size())); }
};

// Validates the word list (alphabet range, common length, distinctness)
// and caches the distance distribution.
Code make_code(int n, int q, std::vector<std::vector<uint8_t>> words);

// Named constructions: "repetition-dual(m)", "golay-ternary",
// "golay-ternary-dual", "golay-ternary-ext", "golay-binary",
// "golay-binary-ext", "golay-binary-dual", "hadamard(k)", "hyperoval-oa(q)".
Code builtin_code(const std::string& name);
std::vector<std::string> builtin_code_names();

// Rows of H and -H as a binary code; H must have +-1 entries and satisfy
// H * H^T = mI.
Code hadamard_code(const Mat& H);

// Whitespace-separated +-1 entries, one matrix row per line.
Mat read_pm1_matrix(std::istream& in);

// Format: a header line "n q N" followed by N words, each n integers in 1..q.
Code read_code(std::istream& in);
void write_code(const Code& c, std::ostream& out);

struct DistanceProfile {
    int n = 0, q = 0;
    Int N;
    std::vector<int> degree_set;    // S(C), ascending
    std::vector<int> dual_degrees;  // {n - d : d in S(C)}, ascending
    int strength = 0;
    TightnessClass tightness = TightnessClass::NontightEven;
    std::vector<Rat> lambdas;  // N / q^i for i = 0..strength
};

DistanceProfile distance_profile(const Code& c);

// Counts tuples in column projections directly: every t-column projection
// must hit each tuple exactly N/q^t times. Exhaustive for n <= 12 or when
// there are at most 5000 projections, otherwise a seeded random sample.
bool oa_strength_direct(const Code& c, int t);

// Subcode with the given symbol (0-based) in the given column (0-based),
// that column deleted. Throws if the fibre is empty.
Code contraction(const Code& c, int column, int symbol);

}  // namespace oa
