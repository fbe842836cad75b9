#include "oa/cli.hpp"

#include "oa/codes.hpp"
#include "oa/delsarte.hpp"
#include "oa/design.hpp"
#include "oa/extremal.hpp"
#include "oa/krawtchouk.hpp"
#include "oa/scheme.hpp"
#include "oa/search.hpp"
#include "oa/triples.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oa {
namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Mat read_rat_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::vector<Rat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(rat_from_string(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("no matrix entries in " + path);
    return Mat::from_rows(rows);
}

std::string set_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
    return os.str();
}

void print_matrix(std::ostream& out, const std::string& label, const Mat& m) {
    out << label << " =\n" << m.to_string();
}

int print_feasibility(std::ostream& out, const SchemeParams& sp) {
    FeasibilityReport rep = feasibility_report(sp);
    if (rep.feasible) {
        out << "parameter tensors: feasible\n";
        return kOk;
    }
    out << "parameter tensors: infeasible\n";
    for (const auto& v : rep.violations) out << "  " << v << "\n";
    return kInfeasible;
}

void print_orderings(std::ostream& out, const SchemeParams& sp) {
    auto ords = qpoly_orderings(sp);
    if (ords.empty()) {
        out << "Q-polynomial: no ordering\n";
        return;
    }
    for (const auto& ord : ords) {
        out << "Q-polynomial ordering";
        for (int c : ord.order) out << " " << c;
        out << ": Krein array " << krein_array_string(ord)
            << (ord.q_antipodal ? ", Q-antipodal" : "") << "\n";
    }
}

void print_scheme_summary(std::ostream& out, const SchemeParams& sp) {
    out << "classes D = " << sp.D << "\n";
    out << "points v = " << rat_to_string(Rat(sp.v)) << "\n";
    out << "valencies:";
    for (int i = 0; i <= sp.D; ++i) out << " " << rat_to_string(sp.valency(i));
    out << "\nmultiplicities:";
    for (int i = 0; i <= sp.D; ++i) out << " " << rat_to_string(sp.multiplicity(i));
    out << "\n";
}

void print_profile(std::ostream& out, const DistanceProfile& p) {
    out << "length n = " << p.n << "\n";
    out << "alphabet q = " << p.q << "\n";
    out << "words N = " << p.N << "\n";
    out << "strength t = " << p.strength << "\n";
    out << "tightness: " << to_string(p.tightness) << "\n";
    out << "degree set S = " << set_string(p.degree_set) << "\n";
    out << "dual degree set S' = " << set_string(p.dual_degrees) << "\n";
}

Code load_code(const std::string& name, const std::string& file) {
    if (name.empty() == file.empty())
        throw std::invalid_argument("exactly one of --name and --file is required");
    if (!name.empty()) return builtin_code(name);
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file);
    return read_code(in);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Delsarte-design calculations in Hamming association schemes"};
    app.require_subcommand(1);
    int status = kOk;

    // kraw n q j x
    struct {
        int n = 0, q = 0, j = 0, x = 0;
    } kw;
    auto* c_kraw = app.add_subcommand("kraw", "evaluate a Krawtchouk polynomial K_j(x)");
    c_kraw->add_option("n", kw.n, "word length")->required();
    c_kraw->add_option("q", kw.q, "alphabet size")->required();
    c_kraw->add_option("j", kw.j, "degree")->required();
    c_kraw->add_option("x", kw.x, "evaluation point")->required();
    c_kraw->callback([&] {
        out << kraw_eval(kw.n, kw.q, kw.j, kw.x) << "\n";
        status = kOk;
    });

    // scheme --q-matrix file --size v
    struct {
        std::string qfile;
        std::string size;
    } sc;
    auto* c_scheme = app.add_subcommand("scheme", "analyze a scheme given its dual eigenmatrix");
    c_scheme->add_option("--q-matrix", sc.qfile, "CSV file with the Q matrix")->required();
    c_scheme->add_option("--size", sc.size, "number of points v")->required();
    c_scheme->callback([&] {
        SchemeParams sp = scheme_from_Q(read_rat_matrix_file(sc.qfile), Int(sc.size));
        print_scheme_summary(out, sp);
        print_matrix(out, "P", sp.P);
        print_orderings(out, sp);
        status = print_feasibility(out, sp);
    });

    // delsarte / fission --N --n --q --alphas [--t]
    struct {
        std::string N;
        int n = 0, q = 0, t = -1;
        std::string alphas;
    } dd, ff;
    auto* c_delsarte =
        app.add_subcommand("delsarte", "s-class scheme of a design with strength >= 2s-2");
    c_delsarte->add_option("--N", dd.N, "design size")->required();
    c_delsarte->add_option("--n", dd.n, "word length")->required();
    c_delsarte->add_option("--q", dd.q, "alphabet size")->required();
    c_delsarte->add_option("--alphas", dd.alphas, "degree set a1,a2,...")->required();
    c_delsarte->add_option("--t", dd.t, "strength (default 2s-2)");
    c_delsarte->callback([&] {
        DesignParams dp;
        dp.N = Int(dd.N);
        dp.n = dd.n;
        dp.q = dd.q;
        dp.alphas = parse_int_list(dd.alphas);
        dp.t = dd.t >= 0 ? dd.t : 2 * dp.s() - 2;
        SchemeParams sp = delsarte_scheme(dp);
        print_scheme_summary(out, sp);
        print_matrix(out, "Q", sp.Q);
        print_matrix(out, "P", sp.P);
        print_orderings(out, sp);
        status = print_feasibility(out, sp);
    });

    auto* c_fission =
        app.add_subcommand("fission", "contraction-refined scheme of a (2s-1)-design");
    c_fission->add_option("--N", ff.N, "design size")->required();
    c_fission->add_option("--n", ff.n, "word length")->required();
    c_fission->add_option("--q", ff.q, "alphabet size")->required();
    c_fission->add_option("--alphas", ff.alphas, "degree set a1,a2,...")->required();
    c_fission->callback([&] {
        DesignParams dp;
        dp.N = Int(ff.N);
        dp.n = ff.n;
        dp.q = ff.q;
        dp.alphas = parse_int_list(ff.alphas);
        dp.t = 2 * dp.s() - 1;
        out << (dp.N == rao_bound(dp.n, dp.q, dp.t) ? "tight\n" : "nontight\n");
        SchemeParams sp = fission_scheme(dp);
        print_scheme_summary(out, sp);
        print_matrix(out, "Q", sp.Q);
        print_matrix(out, "P", sp.P);
        print_orderings(out, sp);
        status = print_feasibility(out, sp);
    });

    // triples --q-matrix file --size v [--base A B C]
    struct {
        std::string qfile;
        std::string size;
        std::vector<int> base;
    } tr;
    auto* c_triples =
        app.add_subcommand("triples", "triple intersection feasibility of a scheme");
    c_triples->add_option("--q-matrix", tr.qfile, "CSV file with the Q matrix")->required();
    c_triples->add_option("--size", tr.size, "number of points v")->required();
    c_triples->add_option("--base", tr.base, "base triple of relations A B C")->expected(3);
    c_triples->callback([&] {
        SchemeParams sp = scheme_from_Q(read_rat_matrix_file(tr.qfile), Int(tr.size));
        if (!tr.base.empty()) {
            TripleSystem ts = triple_system(sp, tr.base[0], tr.base[1], tr.base[2]);
            TripleSolution sol = solve_triples(ts);
            if (!sol.consistent) {
                out << "inconsistent marginal system\n";
                status = kInfeasible;
                return;
            }
            out << "solution space dimension " << sol.aff.kernel.size() << "\n";
            status = kOk;
            return;
        }
        TripleReport rep = triple_feasible(sp);
        out << to_string(rep.verdict) << "\n";
        if (rep.witness) {
            const auto& w = *rep.witness;
            out << "witness [" << w.r << " " << w.s << " " << w.t << "] = "
                << rat_to_string(w.value) << " at base (" << w.A << "," << w.B << "," << w.C
                << ")\n";
        }
        for (const auto& note : rep.notes) out << note << "\n";
        status = rep.verdict == Verdict::Infeasible ? kInfeasible : kOk;
    });

    // tight3 --q
    struct {
        int q = 0;
    } t3;
    auto* c_tight3 = app.add_subcommand(
        "tight3", "feasibility pipeline for the tight 3-design family (q^3, q+2, q)");
    c_tight3->add_option("--q", t3.q, "alphabet size")->required();
    c_tight3->callback([&] {
        Tight3Result res = tight3_pipeline(t3.q);
        out << "q = " << res.q << ": " << to_string(res.verdict) << "\n";
        if (!res.detail.empty()) out << res.detail << "\n";
        status = res.verdict == Verdict::Infeasible ? kInfeasible : kOk;
    });

    // verify-code --name | --file
    struct {
        std::string name, file;
    } vc;
    auto* c_verify = app.add_subcommand("verify-code", "distance profile and strength of a code");
    c_verify->add_option("--name", vc.name, "builtin construction name");
    c_verify->add_option("--file", vc.file, "code file (header 'n q N', then words)");
    c_verify->callback([&] {
        Code code = load_code(vc.name, vc.file);
        print_profile(out, distance_profile(code));
        status = kOk;
    });

    // hadamard-code --file
    struct {
        std::string file;
    } hc;
    auto* c_hadamard =
        app.add_subcommand("hadamard-code", "binary code of a +-1 Hadamard matrix");
    c_hadamard->add_option("--file", hc.file, "matrix file, +-1 entries")->required();
    c_hadamard->callback([&] {
        std::ifstream in(hc.file);
        if (!in) throw IoError("cannot open " + hc.file);
        Code code = hadamard_code(read_pm1_matrix(in));
        print_profile(out, distance_profile(code));
        status = kOk;
    });

    // contraction --name|--file --column --symbol [--out]
    struct {
        std::string name, file, outfile;
        int column = 0, symbol = 0;
    } ct;
    auto* c_contr = app.add_subcommand(
        "contraction", "fix a symbol in one column and delete that column");
    c_contr->add_option("--name", ct.name, "builtin construction name");
    c_contr->add_option("--file", ct.file, "code file");
    c_contr->add_option("--column", ct.column, "0-based column index")->required();
    c_contr->add_option("--symbol", ct.symbol, "0-based symbol")->required();
    c_contr->add_option("--out", ct.outfile, "write the contracted code here");
    c_contr->callback([&] {
        Code code = contraction(load_code(ct.name, ct.file), ct.column, ct.symbol);
        print_profile(out, distance_profile(code));
        if (!ct.outfile.empty()) {
            std::ofstream os(ct.outfile);
            if (!os) throw IoError("cannot open " + ct.outfile);
            write_code(code, os);
        }
        status = kOk;
    });

    // inequality --n --q --s [--distances] [--N]
    struct {
        int n = 0, q = 0, s = 0;
        std::string distances, N;
    } iq;
    auto* c_ineq =
        app.add_subcommand("inequality", "distance-sum bounds and design identities");
    c_ineq->add_option("--n", iq.n, "word length")->required();
    c_ineq->add_option("--q", iq.q, "alphabet size")->required();
    c_ineq->add_option("--s", iq.s, "number of distinct distances")->required();
    c_ineq->add_option("--distances", iq.distances, "distances x1,x2,... ascending");
    c_ineq->add_option("--N", iq.N, "design size for the identity residuals");
    c_ineq->callback([&] {
        auto [lo, hi] = e2_bounds(iq.n, iq.q, iq.s);
        out << "distance sum bounds: [" << rat_to_string(lo) << ", " << rat_to_string(hi)
            << "]\n";
        MelzakReport mr = rref_a_and_melzak(iq.n, iq.q, iq.s);
        out << "reduced system and summation identities: " << (mr.all_ok() ? "ok" : "FAILED")
            << "\n";
        status = mr.all_ok() ? kOk : kInfeasible;
        if (!iq.distances.empty()) {
            std::vector<int> xs = parse_int_list(iq.distances);
            SumClassification cls = e2_classify(iq.n, iq.q, xs);
            out << "distance sum = " << rat_to_string(cls.sum)
                << (cls.within ? " within bounds" : " OUT OF BOUNDS");
            if (cls.at_lower) out << " (meets lower bound)";
            if (cls.at_upper) out << " (meets upper bound)";
            out << "\n";
            if (!cls.within) status = kInfeasible;
            for (const auto& pv : e3_check(xs)) {
                out << "prefix " << pv.m << ": sum " << rat_to_string(pv.sum) << " >= "
                    << rat_to_string(pv.bound) << (pv.ok ? " ok" : " VIOLATED")
                    << (pv.equality ? " (equality)" : "") << "\n";
                if (!pv.ok) status = kInfeasible;
            }
            if (!iq.N.empty()) {
                auto res = design_identity_residuals(iq.n, iq.q, Int(iq.N), xs);
                out << "identity residuals:";
                bool all_zero = true;
                for (const auto& r : res) {
                    out << " " << rat_to_string(r);
                    all_zero = all_zero && r == 0;
                }
                out << (all_zero ? "\n" : " NONZERO\n");
                if (!all_zero) status = kInfeasible;
            }
        }
    });

    // search --s --q-min --q-max --n-min --n-max [--out] [--jobs] [--exact]
    struct {
        int s = 0, q_min = 2, q_max = 0, n_min = 0, n_max = 0;
        std::string outfile;
        SearchOptions opts;
    } se;
    auto* c_search =
        app.add_subcommand("search", "enumerate feasible design parameter tuples");
    c_search->add_option("--s", se.s, "number of degrees")->required();
    c_search->add_option("--q-min", se.q_min, "smallest alphabet (default 2)");
    c_search->add_option("--q-max", se.q_max, "largest alphabet")->required();
    c_search->add_option("--n-min", se.n_min, "smallest length (default s+1)");
    c_search->add_option("--n-max", se.n_max, "largest length")->required();
    c_search->add_option("--out", se.outfile, "write the main table as CSV here");
    c_search->add_option("--jobs", se.opts.jobs, "worker threads (default: OA_SCHEME_JOBS, then hardware)");
    c_search->add_flag("--exact", se.opts.exact_only, "bypass the modular prefilter");
    c_search->callback([&] {
        SearchResult res =
            feasible_tuples(se.s, se.q_min, se.q_max, se.n_min, se.n_max, se.opts);
        out << render_text(res, se.s);
        if (!se.outfile.empty()) {
            std::ofstream os(se.outfile);
            if (!os) throw IoError("cannot open " + se.outfile);
            os << render_csv(res, se.s);
        }
        status = kOk;
    });

    // symmetric-search --s --n-max [--n-min]
    struct {
        int s = 0, n_min = 1, n_max = 0;
    } sy;
    auto* c_sym = app.add_subcommand("symmetric-search",
                                     "symmetric binary designs with closed-form degree sets");
    c_sym->add_option("--s", sy.s, "number of degrees (2..4)")->required();
    c_sym->add_option("--n-max", sy.n_max, "largest length")->required();
    c_sym->add_option("--n-min", sy.n_min, "smallest length (default 1)");
    c_sym->callback([&] {
        out << "n,N,a,conditional\n";
        for (const auto& row : symmetric_search(sy.s, sy.n_min, sy.n_max))
            out << row.n << "," << row.N << "," << row.a << ","
                << (row.conditional ? "true" : "false") << "\n";
        status = kOk;
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    return status;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace oa
