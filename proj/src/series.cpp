#include "operadkit/series.hpp"

#include <stdexcept>

#include "operadkit/tree.hpp"
#include "operadkit/word.hpp"

namespace operadkit {

Int catalan(int n) {
    if (n < 1) throw std::invalid_argument("catalan needs n >= 1");
    return binomial(2ul * static_cast<unsigned long>(n), static_cast<unsigned long>(n)) / (n + 1);
}

Int narayana(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("narayana domain violation");
    return binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k)) *
           binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) / (k + 1);
}

Int schroeder(int n) {
    if (n < 1) throw std::invalid_argument("schroeder needs n >= 1");
    if (n == 1) return 1;
    Int s = 0;
    for (int k = 0; k <= n - 2; ++k) s += int_pow(2, static_cast<unsigned long>(k)) * narayana(n - 1, k);
    return s;
}

OperadFamily family_by_name(const std::string& name) {
    if (name == "dias") return OperadFamily::Dias;
    if (name == "dendr") return OperadFamily::Dendr;
    if (name == "as") return OperadFamily::As;
    if (name == "das") return OperadFamily::DAs;
    if (name == "dup") return OperadFamily::Dup;
    if (name == "trias") return OperadFamily::Trias;
    if (name == "tdendr") return OperadFamily::TDendr;
    throw std::invalid_argument("unknown operad name: " + name);
}

std::string family_name(OperadFamily f) {
    switch (f) {
        case OperadFamily::Dias: return "dias";
        case OperadFamily::Dendr: return "dendr";
        case OperadFamily::As: return "as";
        case OperadFamily::DAs: return "das";
        case OperadFamily::Dup: return "dup";
        case OperadFamily::Trias: return "trias";
        case OperadFamily::TDendr: return "tdendr";
    }
    return "?";
}

Int dim_formula(OperadFamily family, int gamma, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    const auto g = Int(gamma);
    switch (family) {
        case OperadFamily::Dias:
            return n * int_pow(g, static_cast<unsigned long>(n - 1));
        case OperadFamily::Dendr:
        case OperadFamily::Dup:
            return int_pow(g, static_cast<unsigned long>(n - 1)) * catalan(n);
        case OperadFamily::As:
            return n == 1 ? Int(1) : g;
        case OperadFamily::DAs: {
            if (n == 1) return 1;
            Int s = 0;
            for (int k = 0; k <= n - 2; ++k)
                s += int_pow(g, static_cast<unsigned long>(k + 1)) *
                     int_pow(Int(gamma - 1), static_cast<unsigned long>(n - k - 2)) *
                     narayana(n - 1, k);
            return s;
        }
        case OperadFamily::Trias:
            return int_pow(Int(gamma + 1), static_cast<unsigned long>(n)) -
                   int_pow(g, static_cast<unsigned long>(n));
        case OperadFamily::TDendr: {
            Int s = 0;
            for (int k = 0; k <= n - 1; ++k)
                s += int_pow(Int(gamma + 1), static_cast<unsigned long>(k)) *
                     int_pow(g, static_cast<unsigned long>(n - k - 1)) * narayana(n, k);
            return s;
        }
    }
    throw std::invalid_argument("unknown operad");
}

IntSeries dim_series(OperadFamily family, int gamma, int N) {
    IntSeries s;
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(dim_formula(family, gamma, n));
    return s;
}

QuadraticSeriesSpec dendr_series_spec(int gamma) {
    return {Int(2 * gamma), Int(gamma) * gamma, true};
}
QuadraticSeriesSpec das_series_spec(int gamma) { return {Int(1), Int(gamma - 1), false}; }
QuadraticSeriesSpec tdendr_series_spec(int gamma) {
    return {Int(2 * gamma + 1), Int(gamma) * Int(gamma + 1), true};
}

IntSeries solve_quadratic_series(const QuadraticSeriesSpec& spec, int N) {
    if (N < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(N) + 1, Int(0));
    c[1] = 1;
    for (int n = 2; n <= N; ++n) {
        Int v = spec.q * c[static_cast<std::size_t>(n - 1)];
        Int sq = 0;
        // Coefficient of t^{n-1} (with t factor) or t^n (without) in H^2.
        const int target = spec.h2_carries_t ? n - 1 : n;
        for (int i = 1; i < target; ++i)
            sq += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(target - i)];
        v += spec.r * sq;
        c[static_cast<std::size_t>(n)] = v;
    }
    IntSeries out;
    out.coeffs.assign(c.begin() + 1, c.end());
    return out;
}

bool koszul_inverse_check(const IntSeries& h, const IntSeries& k, int N) {
    if (h.order() < N || k.order() < N) throw std::invalid_argument("series too short");
    // a(t) = -k(-t); compute h(a(t)) mod t^{N+1} by accumulating powers of a.
    std::vector<Int> a(static_cast<std::size_t>(N) + 1, Int(0));
    for (int n = 1; n <= N; ++n) a[static_cast<std::size_t>(n)] = (n % 2 == 1 ? k.at(n) : -k.at(n));
    std::vector<Int> power = a;  // a^m, truncated
    std::vector<Int> acc(static_cast<std::size_t>(N) + 1, Int(0));
    for (int m = 1; m <= N; ++m) {
        for (int n = 1; n <= N; ++n) acc[static_cast<std::size_t>(n)] += h.at(m) * power[static_cast<std::size_t>(n)];
        if (m < N) {
            std::vector<Int> next(static_cast<std::size_t>(N) + 1, Int(0));
            for (int i = 1; i <= N; ++i)
                for (int j = 1; i + j <= N; ++j)
                    next[static_cast<std::size_t>(i + j)] +=
                        power[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
            power = std::move(next);
        }
    }
    if (acc[1] != 1) return false;
    for (int n = 2; n <= N; ++n)
        if (acc[static_cast<std::size_t>(n)] != 0) return false;
    return true;
}

StructureKind structure_by_name(const std::string& name) {
    if (name == "evbt") return StructureKind::Evbt;
    if (name == "alt_schroder") return StructureKind::AltSchroder;
    if (name == "ev_schroder") return StructureKind::EvSchroder;
    if (name == "hook") return StructureKind::Hook;
    if (name == "ext_hook") return StructureKind::ExtHook;
    throw std::invalid_argument("unknown structure kind: " + name);
}

namespace {

// Edge valued binary trees with n internal nodes: a subtree contributes a
// factor gamma for the edge above it unless it is a leaf.
Int count_evbt(int gamma, int n) {
    std::vector<Int> e(static_cast<std::size_t>(n) + 1, Int(0));
    e[0] = 1;  // weight of a leaf slot
    std::vector<Int> w = e;  // w[i] = weight of a subtree with i nodes, edge included
    for (int m = 1; m <= n; ++m) {
        Int total = 0;
        for (int i = 0; i <= m - 1; ++i) total += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(m - 1 - i)];
        e[static_cast<std::size_t>(m)] = total;
        w[static_cast<std::size_t>(m)] = gamma * total;
    }
    return e[static_cast<std::size_t>(n)];
}

// Alternating Schroeder trees with n leaves: A[l][m] = trees with m leaves
// rooted at label l; B[l][m] = leaf-or-tree with a root label != l.
Int count_alt_schroder(int gamma, int n) {
    if (n == 1) return 1;
    std::vector<std::vector<Int>> A(static_cast<std::size_t>(gamma) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(n) + 1, Int(0)));
    for (int m = 2; m <= n; ++m) {
        for (int l = 1; l <= gamma; ++l) {
            auto b = [&](int sz) {
                if (sz == 1) return Int(1);
                Int s = 0;
                for (int l2 = 1; l2 <= gamma; ++l2)
                    if (l2 != l) s += A[static_cast<std::size_t>(l2)][static_cast<std::size_t>(sz)];
                return s;
            };
            // seq[k][m2]: ways to fill k >= 1 children slots with m2 leaves total.
            std::vector<Int> seq(static_cast<std::size_t>(m) + 1, Int(0));
            for (int sz = 1; sz < m; ++sz) seq[static_cast<std::size_t>(sz)] = b(sz);
            Int total = 0;
            std::vector<Int> cur = seq;  // k slots so far
            for (int k = 2; k <= m; ++k) {
                std::vector<Int> next(static_cast<std::size_t>(m) + 1, Int(0));
                for (int s1 = 1; s1 < m; ++s1)
                    for (int s2 = 1; s1 + s2 <= m; ++s2)
                        next[static_cast<std::size_t>(s1 + s2)] +=
                            cur[static_cast<std::size_t>(s1)] * seq[static_cast<std::size_t>(s2)];
                total += next[static_cast<std::size_t>(m)];
                cur = std::move(next);
            }
            A[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] = total;
        }
    }
    Int out = 0;
    for (int l = 1; l <= gamma; ++l) out += A[static_cast<std::size_t>(l)][static_cast<std::size_t>(n)];
    return out;
}

// Edge valued Schroeder trees with m leaves; internal edges weighted gamma.
Int count_ev_schroder(int gamma, int m_leaves) {
    std::vector<Int> S(static_cast<std::size_t>(m_leaves) + 1, Int(0));
    std::vector<Int> child(static_cast<std::size_t>(m_leaves) + 1, Int(0));
    child[1] = 1;  // a leaf
    for (int m = 2; m <= m_leaves; ++m) {
        std::vector<Int> cur = child;  // one slot
        Int total = 0;
        for (int k = 2; k <= m; ++k) {
            std::vector<Int> next(static_cast<std::size_t>(m) + 1, Int(0));
            for (int s1 = 1; s1 < m; ++s1)
                for (int s2 = 1; s1 + s2 <= m; ++s2)
                    next[static_cast<std::size_t>(s1 + s2)] +=
                        cur[static_cast<std::size_t>(s1)] * child[static_cast<std::size_t>(s2)];
            total += next[static_cast<std::size_t>(m)];
            cur = std::move(next);
        }
        S[static_cast<std::size_t>(m)] = total;
        child[static_cast<std::size_t>(m)] = gamma * total;
    }
    return m_leaves == 1 ? Int(1) : S[static_cast<std::size_t>(m_leaves)];
}

}  // namespace

Int count_structures(StructureKind kind, int gamma, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    if (n > 8) throw std::invalid_argument("enumeration guard exceeded (n <= 8)");
    switch (kind) {
        case StructureKind::Evbt:
            return count_evbt(gamma, n);
        case StructureKind::AltSchroder:
            return count_alt_schroder(gamma, n);
        case StructureKind::EvSchroder:
            return count_ev_schroder(gamma, n + 1);
        case StructureKind::Hook: {
            Int c = 0;
            for (const auto& w : enumerate_words(WordFamily::Dias, gamma, n)) {
                const SyntaxTree t = hook_tree(w);
                if (!is_hook_tree(t, gamma)) throw std::logic_error("hook builder broke shape");
                ++c;
            }
            return c;
        }
        case StructureKind::ExtHook: {
            Int c = 0;
            for (const auto& w : enumerate_words(WordFamily::Trias, gamma, n)) {
                const SyntaxTree t = extended_hook_tree(w);
                if (!is_extended_hook_tree(t, gamma)) throw std::logic_error("extended hook builder broke shape");
                ++c;
            }
            return c;
        }
    }
    throw std::invalid_argument("unknown structure kind");
}

}  // namespace operadkit
