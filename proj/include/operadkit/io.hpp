#pragma once

#include <string>

#include "operadkit/freealg.hpp"
#include "operadkit/present.hpp"
#include "operadkit/rewrite.hpp"
#include "operadkit/series.hpp"
#include "operadkit/tree.hpp"
#include "operadkit/word.hpp"

namespace operadkit {

/// "+1*102 -1*202", keys in lexicographic order.
std::string lincomb_text(const WordLinComb& c);

std::string word_lincomb_json(const WordLinComb& c);
WordLinComb parse_word_lincomb_json(int gamma, const std::string& text);

std::string tree_lincomb_json(const GeneratorSet& gens, const TreeLinComb& c);
std::string evbt_lincomb_json(const EvbtLinComb& c);

/// Generator names plus relation rows; rows list basis-tree tokens
/// "x:pos:y" with rational coefficients.
std::string presentation_json(const Presentation& p);

std::string ruleset_text(const RuleSet& rs);

std::string series_tsv(const IntSeries& s);
std::string series_json(const IntSeries& s);

std::string tree_dot(const GeneratorSet& gens, const SyntaxTree& t);

}  // namespace operadkit
