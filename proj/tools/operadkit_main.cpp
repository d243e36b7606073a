#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "operadkit/freealg.hpp"
#include "operadkit/io.hpp"
#include "operadkit/present.hpp"
#include "operadkit/rewrite.hpp"
#include "operadkit/series.hpp"
#include "operadkit/tree.hpp"
#include "operadkit/word.hpp"

namespace {

using namespace operadkit;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

// Splits an operation token such as "lt2" into its family prefix and label.
std::pair<std::string, int> split_op(const std::string& op) {
    std::size_t i = 0;
    while (i < op.size() && !std::isdigit(static_cast<unsigned char>(op[i]))) ++i;
    if (i == 0 || i == op.size()) throw std::invalid_argument("bad operation token: " + op);
    return {op.substr(0, i), std::stoi(op.substr(i))};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s == "-" || s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

MarkedWordsAlgebra::Elem parse_marked_word(const std::string& s) {
    MarkedWordsAlgebra::Elem out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        bool marked = false;
        if (!tok.empty() && tok.back() == '\'') {
            marked = true;
            tok.pop_back();
        }
        out.push_back({std::stoi(tok), marked});
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

struct GlobalOpts {
    int gamma = 1;
    std::string format = "text";
    std::uint64_t seed = 0xD1A5;
    int budget = 1000;
};

int run_freealg(const GlobalOpts& g, const std::string& algebra, const std::string& op,
                const std::string& xs, const std::string& ys) {
    const auto [kind, a] = split_op(op);
    const int gamma = g.gamma;
    if (algebra == "dendr") {
        const Evbt x = parse_evbt(xs), y = parse_evbt(ys);
        EvbtLinComb r;
        if (kind == "lt")
            r = dendr_left(a, x, y);
        else if (kind == "gt")
            r = dendr_right(a, x, y);
        else
            throw std::invalid_argument("dendr products are lt<a> and gt<a>");
        std::cout << (g.format == "json" ? evbt_lincomb_json(r) : to_string(r)) << "\n";
        return kExitOk;
    }
    if (algebra == "dup") {
        const Evbt x = parse_evbt(xs), y = parse_evbt(ys);
        Evbt r;
        if (kind == "u")
            r = dup_under(a, x, y);
        else if (kind == "o")
            r = dup_over(a, x, y);
        else
            throw std::invalid_argument("dup products are u<a> and o<a>");
        std::cout << to_string(r) << "\n";
        return kExitOk;
    }
    if (algebra == "pluri" || algebra == "free") {
        const GammaWord x = parse_word(gamma, xs), y = parse_word(gamma, ys);
        GammaWord r = kind == "l"   ? pluri_left(a, x, y)
                      : kind == "r" ? pluri_right(a, x, y)
                                    : throw std::invalid_argument("word products are l<a> and r<a>");
        std::cout << to_string(r) << "\n";
        return kExitOk;
    }
    const bool left = kind == "l";
    if (!left && kind != "r") throw std::invalid_argument("instance products are l<a> and r<a>");
    if (algebra == "pos") {
        PosAlgebra alg{gamma};
        const int x = std::stoi(xs), y = std::stoi(ys);
        std::cout << (left ? m_left(alg, a, x, y) : m_right(alg, a, x, y)) << "\n";
        return kExitOk;
    }
    if (algebra == "sets") {
        SetsAlgebra alg{gamma};
        const auto x = parse_int_list(xs), y = parse_int_list(ys);
        std::cout << join_ints(left ? m_left(alg, a, x, y) : m_right(alg, a, x, y)) << "\n";
        return kExitOk;
    }
    if (algebra == "words") {
        WordsAlgebra alg{gamma};
        const auto x = parse_int_list(xs), y = parse_int_list(ys);
        std::cout << join_ints(left ? m_left(alg, a, x, y) : m_right(alg, a, x, y)) << "\n";
        return kExitOk;
    }
    if (algebra == "mwords") {
        MarkedWordsAlgebra alg{gamma};
        const auto x = parse_marked_word(xs), y = parse_marked_word(ys);
        std::cout << to_string(left ? m_left(alg, a, x, y) : m_right(alg, a, x, y)) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown algebra: " + algebra);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operadkit: words, trees, rewriting and Koszul duality for the gamma operad families"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--gamma", g.gamma, "alphabet parameter")->capture_default_str();
    app.add_option("--format", g.format, "output format: text|json|tsv|dot")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized suites")
        ->envname("OPERADKIT_SEED")
        ->capture_default_str();
    app.add_option("--budget", g.budget, "rewriting step budget")->capture_default_str();

    // compose
    std::string arg_u, arg_v;
    int arg_i = 1;
    auto* compose = app.add_subcommand("compose", "partial composition of words");
    compose->add_option("u", arg_u)->required();
    compose->add_option("i", arg_i)->required();
    compose->add_option("v", arg_v)->required();

    // kbasis
    std::string kb_mode, kb_x, kb_y;
    int kb_i = 1;
    auto* kbasis = app.add_subcommand("kbasis", "K-basis expand | contract | compose");
    kbasis->add_option("mode", kb_mode)->required()->check(CLI::IsMember({"expand", "contract", "compose"}));
    kbasis->add_option("x", kb_x)->required();
    kbasis->add_option("i", kb_i);
    kbasis->add_option("y", kb_y);

    // nf
    std::string nf_rules, nf_tree;
    auto* nf = app.add_subcommand("nf", "normal form under a named rule set");
    nf->add_option("--rules", nf_rules, "dias:G | as:G | dup:G")->required();
    nf->add_option("tree", nf_tree)->required();

    // cp
    std::string cp_rules;
    auto* cp = app.add_subcommand("cp", "critical pairs and local confluence");
    cp->add_option("--rules", cp_rules)->required();

    // dual
    std::string dual_pres;
    auto* dual = app.add_subcommand("dual", "Koszul dual of a named presentation");
    dual->add_option("--pres", dual_pres)->required();

    // qdim
    std::string qdim_pres;
    int qdim_n = 3;
    auto* qdim = app.add_subcommand("qdim", "quotient dimension of a named presentation");
    qdim->add_option("--pres", qdim_pres)->required();
    qdim->add_option("-n,--arity", qdim_n)->required();

    // dims
    std::string dims_operad;
    int dims_maxn = 8;
    auto* dims = app.add_subcommand("dims", "closed-form dimension table");
    dims->add_option("--operad", dims_operad)->required();
    dims->add_option("--max-n", dims_maxn)->capture_default_str();

    // series
    std::string series_operad, series_against;
    int series_maxn = 10;
    auto* series = app.add_subcommand("series", "functional-equation coefficients and inverse check");
    series->add_option("--operad", series_operad)->required();
    series->add_option("--max-n", series_maxn)->capture_default_str();
    series->add_option("--inverse-with", series_against,
                       "verify H(-K(-t)) = t against this operad's series");

    // freealg
    std::string fa_algebra, fa_op, fa_x, fa_y;
    auto* freealg = app.add_subcommand("freealg", "evaluate a free-algebra or instance product");
    freealg->add_option("--algebra", fa_algebra,
                        "dendr|dup|pluri|free|pos|sets|words|mwords")->required();
    freealg->add_option("--op", fa_op, "e.g. lt2, u1, l3")->required();
    freealg->add_option("x", fa_x)->required();
    freealg->add_option("y", fa_y)->required();

    // check
    std::string check_suite = "all";
    auto* check = app.add_subcommand("check", "run a named invariant suite");
    check->add_option("suite", check_suite)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compose) {
            const GammaWord u = parse_word(g.gamma, arg_u), v = parse_word(g.gamma, arg_v);
            std::cout << to_string(tm_compose(u, arg_i, v)) << "\n";
            return kExitOk;
        }
        if (*kbasis) {
            const GammaWord x = parse_word(g.gamma, kb_x);
            WordLinComb r;
            if (kb_mode == "expand")
                r = kbasis_expand(x);
            else if (kb_mode == "contract")
                r = kbasis_contract(x);
            else {
                if (kb_y.empty()) throw std::invalid_argument("compose needs x i y");
                r = kbasis_compose(x, kb_i, parse_word(g.gamma, kb_y));
            }
            std::cout << (g.format == "json" ? word_lincomb_json(r) : lincomb_text(r)) << "\n";
            return kExitOk;
        }
        if (*nf) {
            const RuleSet rs = rules_by_name(nf_rules);
            const SyntaxTree t = parse_tree(rs.gens, nf_tree);
            const SyntaxTree r = normal_form(t, rs, g.budget);
            if (g.format == "dot")
                std::cout << tree_dot(rs.gens, r);
            else
                std::cout << to_string(rs.gens, r) << "\n";
            return kExitOk;
        }
        if (*cp) {
            const RuleSet rs = rules_by_name(cp_rules);
            const auto report = check_local_confluence(rs, g.budget);
            const auto pairs = critical_pairs(rs);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const auto& p = pairs[k];
                const bool joins = normal_form(p.left_result, rs, g.budget) ==
                                   normal_form(p.right_result, rs, g.budget);
                std::cout << "peak " << (k + 1) << ": " << to_string(rs.gens, p.peak)
                          << (joins ? "  joinable" : "  NOT JOINABLE") << "\n";
            }
            std::cout << "peaks: " << report.peak_count << "\n";
            std::cout << "confluent: " << (report.confluent ? "yes" : "no") << "\n";
            return report.confluent ? kExitOk : kExitVerificationFailure;
        }
        if (*dual) {
            const Presentation d = koszul_dual(presentation_by_name(dual_pres));
            if (g.format == "json") {
                std::cout << presentation_json(d) << "\n";
            } else {
                for (const auto& r : d.relations)
                    std::cout << to_string(d.gens, relation_to_lincomb(d.gens, r)) << "\n";
            }
            return kExitOk;
        }
        if (*qdim) {
            std::cout << to_string(quotient_dimension(presentation_by_name(qdim_pres), qdim_n))
                      << "\n";
            return kExitOk;
        }
        if (*dims) {
            const OperadFamily fam = family_by_name(dims_operad);
            std::string out;
            for (int n = 1; n <= dims_maxn; ++n) {
                if (n > 1) out += " ";
                out += to_string(dim_formula(fam, g.gamma, n));
            }
            std::cout << out << "\n";
            return kExitOk;
        }
        if (*series) {
            const OperadFamily fam = family_by_name(series_operad);
            IntSeries s;
            if (fam == OperadFamily::Dendr || fam == OperadFamily::Dup)
                s = solve_quadratic_series(dendr_series_spec(g.gamma), series_maxn);
            else if (fam == OperadFamily::DAs)
                s = solve_quadratic_series(das_series_spec(g.gamma), series_maxn);
            else if (fam == OperadFamily::TDendr)
                s = solve_quadratic_series(tdendr_series_spec(g.gamma), series_maxn);
            else
                s = dim_series(fam, g.gamma, series_maxn);
            if (g.format == "json")
                std::cout << series_json(s) << "\n";
            else if (g.format == "tsv")
                std::cout << series_tsv(s);
            else {
                std::string out;
                for (int n = 1; n <= s.order(); ++n) {
                    if (n > 1) out += " ";
                    out += to_string(s.at(n));
                }
                std::cout << out << "\n";
            }
            if (!series_against.empty()) {
                const IntSeries k = dim_series(family_by_name(series_against), g.gamma, series_maxn);
                const bool ok = koszul_inverse_check(s, k, series_maxn);
                std::cout << "inverse_check: " << (ok ? "true" : "false") << "\n";
                if (!ok) return kExitVerificationFailure;
            }
            return kExitOk;
        }
        if (*freealg) return run_freealg(g, fa_algebra, fa_op, fa_x, fa_y);
        if (*check) {
            operadkit::cli::CheckOptions opts{g.gamma, g.seed, g.budget};
            const bool ok = operadkit::cli::run_check_suite(check_suite, opts, std::cout);
            return ok ? kExitOk : kExitVerificationFailure;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitDomainError;
}
