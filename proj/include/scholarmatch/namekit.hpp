#ifndef SCHOLARMATCH_NAMEKIT_HPP
#define SCHOLARMATCH_NAMEKIT_HPP

#include <string>
#include <vector>

#include "scholarmatch/types.hpp"

namespace scholarmatch::namekit {

// One normalized token together with its accepted spelling variants
// (diacritic expansions like muller/mueller). The variant list always
// contains the folded base form.
struct Token {
  std::string base;
  std::vector<std::string> variants;
};

bool tokens_match(const Token& a, const Token& b);
// Prefix variant used for truncated display names: does some variant of
// `partial` prefix some variant of `full`? Requires >= 2 chars of overlap.
bool tokens_match_prefix(const Token& full, const Token& partial);

struct NormalizedText {
  std::vector<Token> tokens;
};

// Lowercases, folds diacritics (attaching spelling variants such as
// ue<->u), drops punctuation, and splits on whitespace/hyphens/digits.
NormalizedText normalize(const std::string& raw);

// Joins base tokens with single spaces.
std::string render(const NormalizedText& text);

// Removes leading/trailing academic/courtesy titles (whole-token match).
std::vector<Token> strip_titles(std::vector<Token> tokens);
bool is_title_token(const std::string& base);

enum class Template {
  InitialsSurname,   // "X.X. Xxx" / "XX Xxx"
  FirstSurname,      // "Xx Xxx" / "Xxx Xxx" (optionally with middle initials)
  SurnameInitials,   // "Xxx X.X."
  SurnameFirst,      // swapped-order fallback for two cased words
  SingleToken,       // one word: surname only
  Fallback,          // last token = surname, rest = given/initials
  HandleSplit,       // underscore/camelCase segmentation of a handle
  HandleInitialRest, // bare handle, first letter as initial
  HandleBare,        // bare handle as surname material
};

struct ParsedName {
  std::vector<Token> given_tokens;
  std::string initials;  // lowercase letters, possibly empty
  std::vector<Token> surname_tokens;
  Template template_id = Template::Fallback;
  bool truncated = false;
};

// Segments a display name ("full name" field, <= 20 chars) into parses,
// one per matching format template, most specific first.
std::vector<ParsedName> parse_display_name(const std::string& display);

// Segments a handle via underscores, digits and camelCase boundaries;
// unsegmentable lowercase handles also yield initial+rest and bare
// surname hypotheses (with title prefixes like "dr" stripped).
std::vector<ParsedName> parse_handle(const std::string& handle);

// Author name material normalized once, reused by blocking and scoring.
struct NameProfile {
  std::vector<Token> surname;
  std::vector<Token> first;  // empty when the author publishes initials-only
  std::string initials;      // lowercase
  char first_initial = 0;
};

NameProfile make_name_profile(const AuthorRecord& author);

struct MatchEvidence {
  bool surname_match = false;
  bool initial_match = false;
  bool full_name_match = false;
  bool first_name_match = false;
  bool first_single_match = false;
  bool author_first_absent = false;
};

MatchEvidence name_compatible(const NameProfile& author, const ParsedName& parsed);

// Element-wise strongest evidence across hypotheses: positive flags OR,
// the first-name-absent penalty flag ANDs (present in any parse clears it).
MatchEvidence combine_evidence(const MatchEvidence& a, const MatchEvidence& b);

// All joined spellings of a token sequence: space-joined and concatenated,
// bounded cross-product over per-token variants. Used as index keys.
std::vector<std::string> joined_variants(const std::vector<Token>& tokens, bool with_space);

}  // namespace scholarmatch::namekit

#endif  // SCHOLARMATCH_NAMEKIT_HPP
