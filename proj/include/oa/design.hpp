#pragma once
// Putative design parameters in H(n,q) and the classical size bounds: the
// lower bound for strength t (even t = 2e and odd t = 2e-1 forms) and the
// absolute upper bound for degree s. Tightness = meeting the lower bound.

#include "oa/rat.hpp"

#include <string>
#include <vector>

namespace oa {

enum class TightnessClass { TightOdd, NontightOdd, TightEven, NontightEven };

std::string to_string(TightnessClass t);
inline bool is_tight(TightnessClass t) {
    return t == TightnessClass::TightOdd || t == TightnessClass::TightEven;
}

// Minimum size of a strength-t design in H(n,q):
//   t = 2e:   sum_{k=0}^{e} C(n,k)(q-1)^k
//   t = 2e-1: sum_{k=0}^{e-1} C(n,k)(q-1)^k + C(n-1,e-1)(q-1)^e
Int rao_bound(int n, int q, int t);

// Maximum size of a degree-s subset of H(n,q): sum_{k=0}^{s} C(n,k)(q-1)^k.
Int absolute_bound(int n, int q, int s);

TightnessClass classify_tightness(const Int& N, int n, int q, int t);

struct DesignParams {
    Int N;                   // design size |C|
    int n = 0;               // word length
    int q = 0;               // alphabet size
    std::vector<int> alphas; // degree set, strictly increasing in {1..n}
    int t = 0;               // strength

    int s() const { return static_cast<int>(alphas.size()); }
    // Throws std::invalid_argument when a structural invariant fails
    // (ordering/range of alphas, t <= 2s, N within the absolute bound).
    void validate() const;
};

}  // namespace oa
