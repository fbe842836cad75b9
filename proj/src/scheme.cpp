#include "oa/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oa {

namespace {

size_t tensor_index(int D, int i, int j, int k) {
    size_t m = static_cast<size_t>(D) + 1;
    return (static_cast<size_t>(i) * m + static_cast<size_t>(j)) * m + static_cast<size_t>(k);
}

// colwise[m] = column i of M hadamard column j of M, solved against M:
// returns T with T[k] = coefficient vector such that M * T = (M_i o M_j).
std::vector<Rat> structure_constants(const Mat& solve_mat, const Mat& basis_mat, const Rat& inv_v, int D) {
    // For each (i,j), coefficients c with basis_mat * c = basis_mat_i o basis_mat_j
    // computed as c = (1/v) * solve_mat * (basis_mat_i o basis_mat_j).
    std::vector<Rat> tensor(static_cast<size_t>((D + 1)) * (D + 1) * (D + 1));
    for (int i = 0; i <= D; ++i) {
        for (int j = 0; j <= D; ++j) {
            std::vector<Rat> had(static_cast<size_t>(D) + 1);
            for (int m = 0; m <= D; ++m) had[static_cast<size_t>(m)] = basis_mat.at(m, i) * basis_mat.at(m, j);
            for (int k = 0; k <= D; ++k) {
                Rat sum = 0;
                for (int m = 0; m <= D; ++m) sum += solve_mat.at(k, m) * had[static_cast<size_t>(m)];
                tensor[tensor_index(D, i, j, k)] = sum * inv_v;
            }
        }
    }
    return tensor;
}

}  // namespace

const Rat& SchemeParams::p(int i, int j, int k) const { return p_tensor[tensor_index(D, i, j, k)]; }
const Rat& SchemeParams::q(int i, int j, int k) const { return q_tensor[tensor_index(D, i, j, k)]; }

SchemeParams scheme_from_Q(const Mat& Q, const Int& v) {
    if (Q.rows() == 0 || Q.rows() != Q.cols())
        throw std::invalid_argument("scheme_from_Q: Q must be square and nonempty");
    for (size_t i = 0; i < Q.rows(); ++i)
        if (Q.at(i, 0) != 1) throw std::invalid_argument("scheme_from_Q: first column of Q must be all ones");
    if (v < 1) throw std::invalid_argument("scheme_from_Q: need v >= 1");

    SchemeParams sp;
    sp.D = static_cast<int>(Q.rows()) - 1;
    sp.v = v;
    sp.Q = Q;
    Mat qinv;
    try {
        qinv = Q.inverse();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("scheme_from_Q: Q is singular");
    }
    sp.P = qinv.scaled(Rat(v));

    Rat inv_v = make_rat(1, v);
    sp.p_tensor = structure_constants(sp.Q, sp.P, inv_v, sp.D);
    sp.q_tensor = structure_constants(sp.P, sp.Q, inv_v, sp.D);
    return sp;
}

FeasibilityReport feasibility_report(const SchemeParams& sp) {
    FeasibilityReport rep;
    auto flag = [&rep](std::string msg) {
        rep.feasible = false;
        rep.violations.push_back(std::move(msg));
    };
    for (int i = 0; i <= sp.D; ++i) {
        for (int j = 0; j <= sp.D; ++j) {
            for (int k = 0; k <= sp.D; ++k) {
                const Rat& pv = sp.p(i, j, k);
                if (!is_integer(pv)) {
                    std::ostringstream os;
                    os << "p[" << i << "][" << j << "]^" << k << " = " << rat_to_string(pv) << " is not an integer";
                    flag(os.str());
                } else if (pv < 0) {
                    std::ostringstream os;
                    os << "p[" << i << "][" << j << "]^" << k << " = " << rat_to_string(pv) << " is negative";
                    flag(os.str());
                }
                const Rat& qv = sp.q(i, j, k);
                if (qv < 0) {
                    std::ostringstream os;
                    os << "q[" << i << "][" << j << "]^" << k << " = " << rat_to_string(qv) << " is negative";
                    flag(os.str());
                }
            }
        }
    }
    return rep;
}

std::vector<QPolyOrdering> qpoly_orderings(const SchemeParams& sp) {
    std::vector<QPolyOrdering> found;
    int D = sp.D;
    if (D < 1) return found;
    std::vector<int> perm(static_cast<size_t>(D));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        auto sigma = [&perm](int idx) { return idx == 0 ? 0 : perm[static_cast<size_t>(idx) - 1]; };
        Mat l1(static_cast<size_t>(D) + 1, static_cast<size_t>(D) + 1);
        for (int k = 0; k <= D; ++k)
            for (int j = 0; j <= D; ++j) l1.at(k, j) = sp.q(sigma(1), sigma(j), sigma(k));
        bool ok = true;
        for (int k = 0; k <= D && ok; ++k) {
            for (int j = 0; j <= D && ok; ++j) {
                int diff = k > j ? k - j : j - k;
                if (diff > 1 && l1.at(k, j) != 0) ok = false;
                if (diff == 1 && l1.at(k, j) <= 0) ok = false;
            }
        }
        if (!ok) continue;

        QPolyOrdering ord;
        ord.order.resize(static_cast<size_t>(D) + 1);
        for (int idx = 0; idx <= D; ++idx) ord.order[static_cast<size_t>(idx)] = sigma(idx);
        ord.l1star = l1;
        for (int i = 0; i <= D; ++i) ord.krein_a.push_back(l1.at(i, i));
        for (int i = 0; i < D; ++i) ord.krein_b.push_back(l1.at(i, i + 1));
        for (int i = 1; i <= D; ++i) ord.krein_c.push_back(l1.at(i, i - 1));
        ord.q_antipodal = true;
        for (int i = 0; i < D; ++i) {
            if (i == D / 2) continue;
            if (ord.krein_b[static_cast<size_t>(i)] != ord.krein_c[static_cast<size_t>(D - i) - 1]) {
                ord.q_antipodal = false;
                break;
            }
        }
        found.push_back(std::move(ord));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::string krein_array_string(const QPolyOrdering& ord) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < ord.krein_b.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(ord.krein_b[i]);
    }
    os << "; ";
    for (size_t i = 0; i < ord.krein_c.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(ord.krein_c[i]);
    }
    os << "}";
    return os.str();
}

std::optional<SrgParams> srg_params(const SchemeParams& sp) {
    if (sp.D != 2) return std::nullopt;
    int g = sp.valency(1) <= sp.valency(2) ? 1 : 2;  // graph relation: smaller valency
    int o = 3 - g;
    const Rat& kv = sp.P.at(0, g);
    const Rat& lam = sp.p(g, g, g);
    const Rat& mu = sp.p(g, g, o);
    if (!is_integer(kv) || !is_integer(lam) || !is_integer(mu)) return std::nullopt;
    return SrgParams{sp.v, to_int(kv), to_int(lam), to_int(mu)};
}

Mat fuse_scheme(const Mat& P, const std::vector<std::vector<int>>& partition) {
    size_t nrows = P.rows();
    size_t nparts = partition.size();
    std::vector<bool> seen(P.cols(), false);
    for (const auto& part : partition) {
        for (int c : part) {
            if (c < 0 || static_cast<size_t>(c) >= P.cols() || seen[static_cast<size_t>(c)])
                throw std::invalid_argument("fuse_scheme: partition must cover each column exactly once");
            seen[static_cast<size_t>(c)] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("fuse_scheme: partition must cover every column");

    Mat summed(nrows, nparts);
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t p = 0; p < nparts; ++p) {
            Rat total = 0;
            for (int c : partition[p]) total += P.at(r, static_cast<size_t>(c));
            summed.at(r, p) = total;
        }
    }

    std::vector<std::vector<Rat>> rows;
    for (size_t r = 0; r < nrows; ++r) {
        std::vector<Rat> row(nparts);
        for (size_t p = 0; p < nparts; ++p) row[p] = summed.at(r, p);
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(std::move(row));
    }
    Mat out(rows.size(), nparts);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t p = 0; p < nparts; ++p) out.at(r, p) = rows[r][p];
    return out;
}

}  // namespace oa
