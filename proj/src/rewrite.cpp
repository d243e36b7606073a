#include "operadkit/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadkit {

namespace {

void check_tree_over(const GeneratorSet& gens, const SyntaxTree& t) {
    if (t.is_leaf()) return;
    if (t.gen < 0 || t.gen >= gens.size()) throw std::invalid_argument("generator-set mismatch");
    if (static_cast<int>(t.kids.size()) != gens.at(t.gen).arity)
        throw std::invalid_argument("arity mismatch in tree");
    for (const auto& k : t.kids) check_tree_over(gens, k);
}

// Matches a pattern whose leaves are wildcards; captures the matched
// subtrees in left-to-right leaf order.
bool match(const SyntaxTree& t, const SyntaxTree& pattern, std::vector<SyntaxTree>& captures) {
    if (pattern.is_leaf()) {
        captures.push_back(t);
        return true;
    }
    if (t.is_leaf() || t.gen != pattern.gen) return false;
    for (std::size_t i = 0; i < pattern.kids.size(); ++i)
        if (!match(t.kids[i], pattern.kids[i], captures)) return false;
    return true;
}

SyntaxTree instantiate(const SyntaxTree& pattern, const std::vector<SyntaxTree>& captures,
                       std::size_t& next) {
    if (pattern.is_leaf()) return captures[next++];
    SyntaxTree t;
    t.gen = pattern.gen;
    t.kids.reserve(pattern.kids.size());
    for (const auto& k : pattern.kids) t.kids.push_back(instantiate(k, captures, next));
    return t;
}

SyntaxTree instantiate(const SyntaxTree& pattern, const std::vector<SyntaxTree>& captures) {
    std::size_t next = 0;
    return instantiate(pattern, captures, next);
}

// Applies the first matching rule at this node, if any; preorder recursion
// implements the leftmost-outermost strategy.
bool rewrite_leftmost_outermost(const SyntaxTree& t, const RuleSet& rs, SyntaxTree& out) {
    if (t.is_leaf()) return false;
    for (const auto& rule : rs.rules) {
        std::vector<SyntaxTree> captures;
        if (match(t, rule.lhs, captures)) {
            out = instantiate(rule.rhs, captures);
            return true;
        }
    }
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
        SyntaxTree sub;
        if (rewrite_leftmost_outermost(t.kids[i], rs, sub)) {
            out = t;
            out.kids[i] = sub;
            return true;
        }
    }
    return false;
}

void collect_rewrites(const SyntaxTree& whole, SyntaxTree& node, const RuleSet& rs,
                      std::set<SyntaxTree>& out) {
    if (node.is_leaf()) return;
    const SyntaxTree save = node;
    for (const auto& rule : rs.rules) {
        std::vector<SyntaxTree> captures;
        if (match(node, rule.lhs, captures)) {
            node = instantiate(rule.rhs, captures);
            out.insert(whole);
            node = save;
        }
    }
    for (auto& k : node.kids) collect_rewrites(whole, k, rs, out);
}

}  // namespace

RuleSet::RuleSet(GeneratorSet g, std::vector<RewriteRule> rs)
    : gens(std::move(g)), rules(std::move(rs)) {
    for (const auto& r : rules) {
        check_tree_over(gens, r.lhs);
        check_tree_over(gens, r.rhs);
        if (r.lhs == r.rhs) throw std::invalid_argument("rule with equal sides");
        if (r.lhs.arity() != r.rhs.arity()) throw std::invalid_argument("rule changes arity");
        if (r.lhs.degree() != 2 || r.rhs.degree() != 2)
            throw std::invalid_argument("rules must be quadratic");
    }
}

std::vector<SyntaxTree> rewrite_once(const SyntaxTree& t, const RuleSet& rs) {
    check_tree_over(rs.gens, t);
    std::set<SyntaxTree> out;
    SyntaxTree work = t;
    collect_rewrites(work, work, rs, out);
    return {out.begin(), out.end()};
}

SyntaxTree normal_form(const SyntaxTree& t, const RuleSet& rs, int step_budget) {
    check_tree_over(rs.gens, t);
    std::set<SyntaxTree> visited;
    SyntaxTree cur = t;
    visited.insert(cur);
    for (int step = 0; step < step_budget; ++step) {
        SyntaxTree next;
        if (!rewrite_leftmost_outermost(cur, rs, next)) return cur;
        if (!visited.insert(next).second)
            throw std::runtime_error("cycle detected: rule set is not terminating");
        cur = std::move(next);
    }
    SyntaxTree probe;
    if (!rewrite_leftmost_outermost(cur, rs, probe)) return cur;
    throw std::runtime_error("step budget exhausted: possible nontermination");
}

SyntaxTree normal_form(const SyntaxTree& t, const RuleSet& rs) {
    return normal_form(t, rs, default_step_budget(t));
}

namespace {

// The internal child of a quadratic lhs/rhs: position (1-based) and node.
std::pair<int, const SyntaxTree*> internal_child(const SyntaxTree& deg2) {
    for (std::size_t i = 0; i < deg2.kids.size(); ++i)
        if (!deg2.kids[i].is_leaf()) return {static_cast<int>(i) + 1, &deg2.kids[i]};
    throw std::logic_error("degree-2 tree without internal child");
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const RuleSet& rs) {
    for (const auto& r : rs.rules)
        if (r.lhs.degree() != 2) throw std::invalid_argument("non-quadratic rule present");
    std::vector<CriticalPair> out;
    const int nrules = static_cast<int>(rs.rules.size());
    // Root redex over child redex sharing the middle node.
    for (int i = 0; i < nrules; ++i) {
        const auto& top = rs.rules[static_cast<std::size_t>(i)];
        auto [tpos, tchild] = internal_child(top.lhs);
        for (int j = 0; j < nrules; ++j) {
            const auto& bottom = rs.rules[static_cast<std::size_t>(j)];
            if (bottom.lhs.gen != tchild->gen) continue;
            SyntaxTree peak = top.lhs;
            peak.kids[static_cast<std::size_t>(tpos - 1)] = bottom.lhs;
            std::vector<SyntaxTree> captures;
            match(peak, top.lhs, captures);
            SyntaxTree left = instantiate(top.rhs, captures);
            SyntaxTree right = peak;
            captures.clear();
            match(right.kids[static_cast<std::size_t>(tpos - 1)], bottom.lhs, captures);
            right.kids[static_cast<std::size_t>(tpos - 1)] = instantiate(bottom.rhs, captures);
            out.push_back({std::move(peak), std::move(left), std::move(right)});
        }
    }
    // Two root redexes sharing the root node (internal children at 1 and 2).
    for (int i = 0; i < nrules; ++i) {
        const auto& r1 = rs.rules[static_cast<std::size_t>(i)];
        auto [p1, c1] = internal_child(r1.lhs);
        if (p1 != 1) continue;
        for (int j = 0; j < nrules; ++j) {
            const auto& r2 = rs.rules[static_cast<std::size_t>(j)];
            if (r2.lhs.gen != r1.lhs.gen) continue;
            auto [p2, c2] = internal_child(r2.lhs);
            if (p2 != 2) continue;
            SyntaxTree peak = r1.lhs;
            peak.kids[1] = *c2;
            std::vector<SyntaxTree> captures;
            match(peak, r1.lhs, captures);
            SyntaxTree left = instantiate(r1.rhs, captures);
            captures.clear();
            match(peak, r2.lhs, captures);
            SyntaxTree right = instantiate(r2.rhs, captures);
            out.push_back({std::move(peak), std::move(left), std::move(right)});
        }
    }
    return out;
}

ConfluenceReport check_local_confluence(const RuleSet& rs, int step_budget) {
    ConfluenceReport report;
    auto pairs = critical_pairs(rs);
    report.peak_count = static_cast<int>(pairs.size());
    for (auto& cp : pairs) {
        SyntaxTree a = normal_form(cp.left_result, rs, step_budget);
        SyntaxTree b = normal_form(cp.right_result, rs, step_budget);
        if (!(a == b)) report.failures.push_back(cp);
    }
    report.confluent = report.failures.empty();
    return report;
}

std::vector<SyntaxTree> enumerate_normal_forms(const RuleSet& rs, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    // With quadratic rules a tree is a normal form iff no parent/child
    // generator pair matches a lhs. Forbidden triple: (parent, pos, child).
    std::set<std::tuple<int, int, int>> forbidden;
    for (const auto& r : rs.rules) {
        auto [pos, child] = internal_child(r.lhs);
        forbidden.insert({r.lhs.gen, pos, child->gen});
    }
    const int g = rs.gens.size();
    std::vector<std::vector<std::vector<SyntaxTree>>> by_arity_root(
        static_cast<std::size_t>(n) + 1, std::vector<std::vector<SyntaxTree>>(static_cast<std::size_t>(g)));
    for (int m = 2; m <= n; ++m) {
        for (int gi = 0; gi < g; ++gi) {
            if (rs.gens.at(gi).arity != 2) throw std::invalid_argument("non-binary generator");
            auto& bucket = by_arity_root[static_cast<std::size_t>(m)][static_cast<std::size_t>(gi)];
            for (int la = 1; la <= m - 1; ++la) {
                const int ra = m - la;
                auto sides = [&](int arity, int pos) {
                    std::vector<SyntaxTree> res;
                    if (arity == 1) {
                        res.push_back(leaf());
                        return res;
                    }
                    for (int ci = 0; ci < g; ++ci) {
                        if (forbidden.count({gi, pos, ci})) continue;
                        const auto& sub =
                            by_arity_root[static_cast<std::size_t>(arity)][static_cast<std::size_t>(ci)];
                        res.insert(res.end(), sub.begin(), sub.end());
                    }
                    return res;
                };
                for (const auto& l : sides(la, 1))
                    for (const auto& r : sides(ra, 2)) {
                        SyntaxTree t;
                        t.gen = gi;
                        t.kids = {l, r};
                        bucket.push_back(std::move(t));
                    }
            }
        }
    }
    std::vector<SyntaxTree> out;
    if (n == 1) {
        out.push_back(leaf());
        return out;
    }
    for (int gi = 0; gi < g; ++gi) {
        const auto& b = by_arity_root[static_cast<std::size_t>(n)][static_cast<std::size_t>(gi)];
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int count_normal_forms(const RuleSet& rs, int n) {
    return Int(static_cast<long>(enumerate_normal_forms(rs, n).size()));
}

namespace {

RewriteRule make_rule(const GeneratorSet& gens, int x1, int p1, int y1, int x2, int p2, int y2) {
    return {deg2_tree(gens, x1, p1, y1), deg2_tree(gens, x2, p2, y2)};
}

}  // namespace

RuleSet dias_rules(int gamma) {
    GeneratorSet gens = dias_generators(gamma);
    auto l = [&](int a) { return dias_left_index(gamma, a); };
    auto r = [&](int a) { return dias_right_index(gamma, a); };
    std::vector<RewriteRule> rules;
    for (int a = 1; a <= gamma; ++a)
        for (int a2 = 1; a2 <= gamma; ++a2)
            rules.push_back(make_rule(gens, r(a2), 2, l(a), l(a), 1, r(a2)));
    for (int a = 1; a <= gamma; ++a)
        for (int b = a + 1; b <= gamma; ++b) {
            rules.push_back(make_rule(gens, l(a), 2, r(b), l(a), 1, l(b)));
            rules.push_back(make_rule(gens, r(a), 1, l(b), r(a), 2, r(b)));
            rules.push_back(make_rule(gens, l(a), 2, l(b), l(b), 1, l(a)));
            rules.push_back(make_rule(gens, r(a), 1, r(b), r(b), 2, r(a)));
        }
    for (int d = 1; d <= gamma; ++d)
        for (int c = 1; c <= d; ++c) {
            rules.push_back(make_rule(gens, l(d), 2, l(c), l(d), 1, l(d)));
            rules.push_back(make_rule(gens, l(d), 2, r(c), l(d), 1, l(d)));
            rules.push_back(make_rule(gens, r(d), 1, l(c), r(d), 2, r(d)));
            rules.push_back(make_rule(gens, r(d), 1, r(c), r(d), 2, r(d)));
        }
    return RuleSet(std::move(gens), std::move(rules));
}

RuleSet as_rules(int gamma) {
    GeneratorSet gens = as_generators(gamma);
    auto st = [&](int a) { return a - 1; };
    std::vector<RewriteRule> rules;
    for (int b = 1; b <= gamma; ++b)
        for (int a = 1; a <= b; ++a)
            rules.push_back(make_rule(gens, st(a), 1, st(b), st(b), 2, st(b)));
    for (int b = 1; b <= gamma; ++b)
        for (int a = 1; a < b; ++a) {
            rules.push_back(make_rule(gens, st(b), 1, st(a), st(b), 2, st(b)));
            rules.push_back(make_rule(gens, st(a), 2, st(b), st(b), 2, st(b)));
            rules.push_back(make_rule(gens, st(b), 2, st(a), st(b), 2, st(b)));
        }
    return RuleSet(std::move(gens), std::move(rules));
}

RuleSet dup_rules(int gamma) {
    GeneratorSet gens = dup_generators(gamma);
    auto u = [&](int a) { return a - 1; };
    auto o = [&](int a) { return gamma + a - 1; };
    std::vector<RewriteRule> rules;
    for (int a = 1; a <= gamma; ++a)
        for (int a2 = 1; a2 <= gamma; ++a2) {
            rules.push_back(make_rule(gens, u(a), 1, o(a2), o(a2), 2, u(a)));
            rules.push_back(make_rule(gens, u(a), 1, u(a2), u(std::min(a, a2)), 2, u(a)));
            rules.push_back(make_rule(gens, o(a), 2, o(a2), o(std::min(a, a2)), 1, o(a)));
        }
    return RuleSet(std::move(gens), std::move(rules));
}

RuleSet rules_by_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("rule set name needs ':gamma'");
    const std::string fam = name.substr(0, colon);
    const int gamma = std::stoi(name.substr(colon + 1));
    if (fam == "dias") return dias_rules(gamma);
    if (fam == "as") return as_rules(gamma);
    if (fam == "dup") return dup_rules(gamma);
    throw std::invalid_argument("unknown rule set: " + fam);
}

std::pair<long, long> dup_termination_measure(const SyntaxTree& t, int gamma) {
    long alpha = 0, alpha_prime = 0, beta = 0;
    auto walk = [&](const SyntaxTree& s, auto&& self) -> void {
        if (s.is_leaf()) return;
        const bool is_under = s.gen < gamma;
        if (is_under) {
            alpha += s.kids[1].degree();
        } else {
            alpha_prime += s.kids[0].degree();
            beta += s.kids[1].degree();
        }
        self(s.kids[0], self);
        self(s.kids[1], self);
    };
    walk(t, walk);
    return {alpha + alpha_prime, beta};
}

}  // namespace operadkit
